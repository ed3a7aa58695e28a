#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "mptutte/subset.hpp"

namespace mptutte {

/// Multigraph with labelled edges; parallel edges and loops are allowed.
/// Edge declaration order defines the ground-set order of its cycle matroid.
class graph {
 public:
  struct edge {
    std::string label;
    int tail = 0;
    int head = 0;
  };

  void add_vertex(const std::string& name) {
    for (const auto& v : vertices_)
      if (v == name) throw std::invalid_argument("duplicate vertex '" + name + "'");
    vertices_.push_back(name);
  }

  void add_edge(const std::string& label, const std::string& a, const std::string& b) {
    for (const auto& e : edges_)
      if (e.label == label)
        throw std::invalid_argument("duplicate edge label '" + label + "'");
    edges_.push_back(edge{label, vertex_index(a), vertex_index(b)});
  }

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<edge>& edges() const { return edges_; }

 private:
  int vertex_index(const std::string& name) const {
    for (size_t i = 0; i < vertices_.size(); ++i)
      if (vertices_[i] == name) return static_cast<int>(i);
    throw std::invalid_argument("edge endpoint '" + name + "' is not a declared vertex");
  }

  std::vector<std::string> vertices_;
  std::vector<edge> edges_;
};

struct rank_stats {
  int rank = 0;
  int corank = 0;
  int nullity = 0;
};

/// Matroid on an ordered ground set, represented by its basis family.
/// Rank queries, circuits and cocircuits are precomputed at construction;
/// instances are immutable afterwards.
class matroid {
 public:
  // Exchange axiom is checked exhaustively up to this many elements; larger
  // matroids are accepted with exchange_verified() == false.
  static constexpr int exchange_check_cap = 12;

  static matroid from_bases(ground_set g, std::vector<subset> bases) {
    return matroid(std::move(g), std::move(bases), true);
  }

  /// Skips the exchange-axiom check. Escape hatch for callers that already
  /// hold a valid matroid, and for deliberately corrupted test instances.
  static matroid from_bases_unchecked(ground_set g, std::vector<subset> bases) {
    return matroid(std::move(g), std::move(bases), false);
  }

  static matroid from_circuits(const ground_set& g, std::vector<subset> circuits) {
    const int n = g.size();
    for (auto& c : circuits) g.require_member(c);
    std::sort(circuits.begin(), circuits.end());
    for (size_t i = 0; i < circuits.size(); ++i)
      for (size_t j = 0; j < circuits.size(); ++j) {
        if (i == j) continue;
        if (circuits[i].is_subset_of(circuits[j]))
          throw std::invalid_argument(
              "circuit family is not an antichain: " + g.render(circuits[i]) +
              " is contained in " + g.render(circuits[j]));
      }
    for (size_t i = 0; i < circuits.size(); ++i)
      for (size_t j = i + 1; j < circuits.size(); ++j) {
        for (int e : (circuits[i] & circuits[j]).elements()) {
          subset target = (circuits[i] | circuits[j]).without(e);
          bool found = false;
          for (const auto& c : circuits)
            if (c.is_subset_of(target)) {
              found = true;
              break;
            }
          if (!found)
            throw std::invalid_argument(
                "circuit elimination fails for " + g.render(circuits[i]) + ", " +
                g.render(circuits[j]) + " at element " + g.label(e));
        }
      }
    // independent = contains no circuit; bases = maximum independent sets
    std::vector<subset> bases;
    int best = -1;
    for_each_subset(n, [&](subset a) {
      for (const auto& c : circuits)
        if (c.is_subset_of(a)) return;
      if (a.size() > best) {
        best = a.size();
        bases.clear();
      }
      if (a.size() == best) bases.push_back(a);
    });
    if (best < 0 || bases.empty())
      throw std::invalid_argument("circuit family admits no independent set");
    return matroid(g, std::move(bases), true);
  }

  static matroid uniform(int r, ground_set g) {
    const int n = g.size();
    if (r < 0 || r > n)
      throw std::invalid_argument("uniform matroid rank " + std::to_string(r) +
                                  " out of range for " + std::to_string(n) + " elements");
    std::vector<subset> bases;
    for_each_subset(n, [&](subset a) {
      if (a.size() == r) bases.push_back(a);
    });
    return matroid(std::move(g), std::move(bases), false);
  }

  /// Cycle matroid: bases are the maximal acyclic edge sets, with the
  /// ground-set order given by edge declaration order.
  static matroid graphic(const graph& g) {
    if (g.vertex_count() == 0 && g.edges().empty())
      throw std::invalid_argument("graphic matroid of an empty graph");
    std::vector<std::string> labels;
    for (const auto& e : g.edges()) labels.push_back(e.label);
    ground_set ground(std::move(labels));
    const int n = ground.size();
    const auto& edges = g.edges();
    std::vector<int> parent(g.vertex_count());
    auto root = [&](int v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    auto acyclic = [&](subset a) {
      std::iota(parent.begin(), parent.end(), 0);
      for (int e : a.elements()) {
        int ra = root(edges[e].tail), rb = root(edges[e].head);
        if (ra == rb) return false;
        parent[ra] = rb;
      }
      return true;
    };
    std::vector<subset> bases;
    int best = -1;
    for_each_subset(n, [&](subset a) {
      if (!acyclic(a)) return;
      if (a.size() > best) {
        best = a.size();
        bases.clear();
      }
      if (a.size() == best) bases.push_back(a);
    });
    return matroid(std::move(ground), std::move(bases), false);
  }

  const ground_set& ground() const { return ground_; }
  int size() const { return ground_.size(); }
  int rank() const { return rank_; }
  bool exchange_verified() const { return exchange_verified_; }

  const std::vector<subset>& bases() const { return bases_; }
  const std::vector<subset>& circuits() const { return circuits_; }
  const std::vector<subset>& cocircuits() const { return cocircuits_; }

  int rank_of(subset a) const {
    ground_.require_member(a);
    return rank_table_[a.bits()];
  }

  rank_stats stats(subset a) const {
    int r = rank_of(a);
    return rank_stats{r, rank_ - r, a.size() - r};
  }

  bool independent(subset a) const { return rank_of(a) == a.size(); }
  bool spanning(subset a) const { return rank_of(a) == rank_; }

  bool is_basis(subset a) const {
    return std::binary_search(bases_.begin(), bases_.end(), a);
  }

  matroid dual() const {
    std::vector<subset> co;
    co.reserve(bases_.size());
    const subset all = ground_.all();
    for (subset b : bases_) co.push_back(all.minus(b));
    matroid d(ground_, std::move(co), false);
    d.exchange_verified_ = exchange_verified_;
    return d;
  }

  /// Deletion of `del` followed by contraction of `con`; the surviving
  /// elements keep their relative order.
  matroid minor(subset del, subset con) const {
    ground_.require_member(del);
    ground_.require_member(con);
    if (!(del & con).empty())
      throw std::invalid_argument("minor: delete and contract sets overlap at " +
                                  ground_.render(del & con));
    const subset keep = ground_.all().minus(del | con);
    std::vector<std::string> labels;
    std::vector<int> old_pos;
    for (int e : keep.elements()) {
      labels.push_back(ground_.label(e));
      old_pos.push_back(e);
    }
    ground_set sub_ground(std::move(labels));
    const int base_rank = rank_of(con);
    auto embed = [&](subset a) {
      subset out;
      for (int e : a.elements()) out = out.with(old_pos[e]);
      return out;
    };
    std::vector<subset> bases;
    int best = -1;
    for_each_subset(sub_ground.size(), [&](subset a) {
      int r = rank_table_[(embed(a) | con).bits()] - base_rank;
      if (r != a.size()) return;  // only independent sets of the minor
      if (r > best) {
        best = r;
        bases.clear();
      }
      if (r == best) bases.push_back(a);
    });
    matroid m(std::move(sub_ground), std::move(bases), false);
    m.exchange_verified_ = exchange_verified_;
    return m;
  }

  /// Unique circuit contained in b ∪ {e} for a basis b and e outside b.
  subset fundamental_circuit(subset b, int e) const {
    if (!is_basis(b))
      throw std::invalid_argument("fundamental circuit: " + ground_.render(b) +
                                  " is not a basis");
    if (b.contains(e))
      throw std::invalid_argument("fundamental circuit: element " + ground_.label(e) +
                                  " lies in the basis");
    const subset target = b.with(e);
    for (const auto& c : circuits_)
      if (c.is_subset_of(target)) return c;
    throw std::logic_error("fundamental circuit not found");
  }

  /// Unique cocircuit contained in (E∖b) ∪ {e} for a basis b and e inside b.
  subset fundamental_cocircuit(subset b, int e) const {
    if (!is_basis(b))
      throw std::invalid_argument("fundamental cocircuit: " + ground_.render(b) +
                                  " is not a basis");
    if (!b.contains(e))
      throw std::invalid_argument("fundamental cocircuit: element " + ground_.label(e) +
                                  " lies outside the basis");
    const subset target = ground_.all().minus(b).with(e);
    for (const auto& d : cocircuits_)
      if (d.is_subset_of(target)) return d;
    throw std::logic_error("fundamental cocircuit not found");
  }

  friend bool operator==(const matroid& a, const matroid& b) {
    return a.ground_ == b.ground_ && a.bases_ == b.bases_;
  }
  friend bool operator!=(const matroid& a, const matroid& b) { return !(a == b); }

 private:
  matroid(ground_set g, std::vector<subset> bases, bool validate)
      : ground_(std::move(g)) {
    const int n = ground_.size();
    if (bases.empty()) throw std::invalid_argument("empty basis list");
    for (auto& b : bases) ground_.require_member(b);
    std::sort(bases.begin(), bases.end());
    bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
    rank_ = bases.front().size();
    for (const auto& b : bases)
      if (b.size() != rank_)
        throw std::invalid_argument("unequal basis sizes: " + ground_.render(bases.front()) +
                                    " vs " + ground_.render(b));
    bases_ = std::move(bases);
    exchange_verified_ = false;
    if (validate && n <= exchange_check_cap) {
      check_exchange();
      exchange_verified_ = true;
    }
    build_tables();
  }

  void check_exchange() const {
    for (const auto& b1 : bases_)
      for (const auto& b2 : bases_) {
        if (b1 == b2) continue;
        for (int e : b1.minus(b2).elements()) {
          bool ok = false;
          for (int f : b2.minus(b1).elements()) {
            if (std::binary_search(bases_.begin(), bases_.end(), b1.without(e).with(f))) {
              ok = true;
              break;
            }
          }
          if (!ok)
            throw std::invalid_argument(
                "basis exchange fails for " + ground_.render(b1) + ", " +
                ground_.render(b2) + " at element " + ground_.label(e));
        }
      }
  }

  void build_tables() {
    const int n = ground_.size();
    const std::uint32_t count = 1u << n;
    // independent = subset of some basis (downward closure)
    std::vector<std::uint8_t> indep(count, 0);
    for (subset b : bases_) indep[b.bits()] = 1;
    for (int i = 0; i < n; ++i)
      for (std::uint32_t m = 0; m < count; ++m)
        if ((m >> i) & 1u)
          indep[m & ~(1u << i)] |= indep[m];
    // rank = size of the largest independent subset (max over sub-masks)
    rank_table_.assign(count, 0);
    for (std::uint32_t m = 0; m < count; ++m)
      rank_table_[m] = indep[m] ? static_cast<std::uint8_t>(std::popcount(m)) : 0;
    for (int i = 0; i < n; ++i)
      for (std::uint32_t m = 0; m < count; ++m)
        if ((m >> i) & 1u)
          rank_table_[m] = std::max(rank_table_[m], rank_table_[m & ~(1u << i)]);
    circuits_ = minimal_dependent([&](std::uint32_t m) {
      return rank_table_[m] < std::popcount(m);
    });
    cocircuits_ = minimal_dependent([&](std::uint32_t m) {
      // dual rank r*(A) = |A| + r(E∖A) − r(M)
      const std::uint32_t comp = (count - 1) & ~m;
      return rank_table_[comp] < rank_;
    });
  }

  template <class Dep>
  std::vector<subset> minimal_dependent(Dep dep) const {
    const int n = ground_.size();
    std::vector<subset> out;
    for_each_subset(n, [&](subset a) {
      if (!dep(a.bits())) return;
      for (int e : a.elements())
        if (dep(a.without(e).bits())) return;
      out.push_back(a);
    });
    std::sort(out.begin(), out.end());
    return out;
  }

  ground_set ground_;
  std::vector<subset> bases_;
  int rank_ = 0;
  bool exchange_verified_ = false;
  std::vector<std::uint8_t> rank_table_;
  std::vector<subset> circuits_;
  std::vector<subset> cocircuits_;
};

}  // namespace mptutte
