#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mptutte/activity.hpp"
#include "mptutte/matroid.hpp"
#include "mptutte/subset.hpp"

namespace mptutte {

// The perspective axioms, each computed from first principles. For matroid
// pairs on one ground set these are equivalent; any one of them holding
// certifies the pair as a perspective M -> M'.

/// MP1: every circuit of m is a union of circuits of m_prime.
inline bool mp1(const matroid& m, const matroid& m_prime) {
  for (const auto& c : m.circuits()) {
    subset covered;
    for (const auto& cp : m_prime.circuits())
      if (cp.is_subset_of(c)) covered = covered | cp;
    if (covered != c) return false;
  }
  return true;
}

/// MP2: every cocircuit of m_prime is a union of cocircuits of m.
inline bool mp2(const matroid& m, const matroid& m_prime) {
  for (const auto& d : m_prime.cocircuits()) {
    subset covered;
    for (const auto& dm : m.cocircuits())
      if (dm.is_subset_of(d)) covered = covered | dm;
    if (covered != d) return false;
  }
  return true;
}

/// MP3: no circuit of m meets a cocircuit of m_prime in exactly one element.
inline bool mp3(const matroid& m, const matroid& m_prime) {
  for (const auto& c : m.circuits())
    for (const auto& d : m_prime.cocircuits())
      if ((c & d).size() == 1) return false;
  return true;
}

/// MP4: r'(X) − r'(Y) ≤ r(X) − r(Y) for all Y ⊆ X.
inline bool mp4(const matroid& m, const matroid& m_prime) {
  bool ok = true;
  for_each_subset(m.size(), [&](subset x) {
    if (!ok) return;
    for_each_in_interval(subset(), x, [&](subset y) {
      if (m_prime.rank_of(x) - m_prime.rank_of(y) > m.rank_of(x) - m.rank_of(y))
        ok = false;
    });
  });
  return ok;
}

/// Boolean interval of the Dawson partition, together with its unique
/// independent/spanning witness.
struct dawson_interval {
  subset witness;
  subset bottom;  // witness ∖ Int_M'(witness)
  subset top;     // witness ∪ Ext_M(witness)
  int size() const { return 1 << (top.minus(bottom)).size(); }
};

enum class involution_kind { phi, phi_star };

/// Matroid perspective M -> M' on a shared ordered ground set. Validation
/// is the exhaustive MP3 scan; the independent/spanning family is cached.
class perspective {
 public:
  static perspective make(matroid m, matroid m_prime) {
    require_shared_ground(m, m_prime);
    for (const auto& c : m.circuits())
      for (const auto& d : m_prime.cocircuits())
        if ((c & d).size() == 1)
          throw std::invalid_argument(
              "not a matroid perspective: circuit " + m.ground().render(c) +
              " of M and cocircuit " + m.ground().render(d) +
              " of M' intersect exactly in " + m.ground().render(c & d));
    return perspective(std::move(m), std::move(m_prime));
  }

  /// Skips MP3 validation; for test instances that are deliberately broken.
  static perspective make_unchecked(matroid m, matroid m_prime) {
    require_shared_ground(m, m_prime);
    return perspective(std::move(m), std::move(m_prime));
  }

  static perspective identity(matroid m) {
    matroid copy = m;
    return make(std::move(m), std::move(copy));
  }

  /// Perspective obtained from a major: M = n ∖ ports, M' = n / ports.
  static perspective from_major(const matroid& n, subset ports) {
    return make(n.minor(ports, subset()), n.minor(subset(), ports));
  }

  const matroid& m() const { return m_; }
  const matroid& m_prime() const { return m_prime_; }
  const ground_set& ground() const { return m_.ground(); }
  int size() const { return m_.size(); }

  int rank_drop() const { return m_.rank() - m_prime_.rank(); }
  int rcd(subset a) const {
    return rank_drop() - (m_.rank_of(a) - m_prime_.rank_of(a));
  }

  bool ind_span(subset a) const {
    return m_.independent(a) && m_prime_.spanning(a);
  }
  const std::vector<subset>& ind_span_sets() const { return ind_span_; }

  activity_profile profile(subset a) const { return active_sets(m_, m_prime_, a); }

  /// f(A) = (A ∪ P_M'(A)) ∖ Q_M(A); lands on the witness of A's interval.
  subset dawson_map(subset a) const {
    const activity_profile pr = profile(a);
    return (a | pr.p_set).minus(pr.q_set);
  }

  dawson_interval interval_of_witness(subset b) const {
    if (!ind_span(b))
      throw std::invalid_argument("interval witness " + ground().render(b) +
                                  " is not independent in M and spanning in M'");
    const activity_profile pr = profile(b);
    return dawson_interval{b, b.minus(pr.int_active), b | pr.ext_active};
  }

  /// One interval per independent/spanning set; checks that the intervals
  /// are pairwise disjoint and cover the Boolean lattice.
  std::vector<dawson_interval> dawson_partition() const {
    std::vector<dawson_interval> out;
    out.reserve(ind_span_.size());
    std::vector<char> seen(std::size_t(1) << size(), 0);
    std::uint32_t covered = 0;
    for (subset b : ind_span_) {
      dawson_interval iv = interval_of_witness(b);
      for_each_in_interval(iv.bottom, iv.top, [&](subset a) {
        if (seen[a.bits()]++)
          throw std::logic_error("Dawson intervals overlap at " + ground().render(a));
        ++covered;
      });
      out.push_back(iv);
    }
    if (covered != (std::uint32_t(1) << size()))
      throw std::logic_error("Dawson intervals do not cover the Boolean lattice");
    return out;
  }

  /// phi(A) = (A ∖ Q_M(A)) ∪ Ext_M(A); exchanges nullity and external
  /// activity and fixes the M' statistics.
  subset involution_phi(subset a) const {
    const activity_profile pr = profile(a);
    return a.minus(pr.q_set) | pr.ext_active;
  }

  /// phi*(A) = (A ∪ P_M'(A)) ∖ Int_M'(A); exchanges corank and internal
  /// activity in M' and fixes the M statistics.
  subset involution_phi_star(subset a) const {
    const activity_profile pr = profile(a);
    return (a | pr.p_set).minus(pr.int_active);
  }

  subset duality_involution(subset a, involution_kind kind) const {
    return kind == involution_kind::phi ? involution_phi(a) : involution_phi_star(a);
  }

  /// The perspective dual(M') -> dual(M); an involution on perspectives.
  perspective dual() const { return make(m_prime_.dual(), m_.dual()); }

  friend bool operator==(const perspective& a, const perspective& b) {
    return a.m_ == b.m_ && a.m_prime_ == b.m_prime_;
  }

 private:
  perspective(matroid m, matroid m_prime)
      : m_(std::move(m)), m_prime_(std::move(m_prime)) {
    for_each_subset(size(), [&](subset a) {
      if (ind_span(a)) ind_span_.push_back(a);
    });
  }

  static void require_shared_ground(const matroid& m, const matroid& m_prime) {
    if (m.ground() != m_prime.ground())
      throw std::invalid_argument("perspective: M and M' have different ground sets");
  }

  matroid m_;
  matroid m_prime_;
  std::vector<subset> ind_span_;
};

/// The member of the family whose symmetric difference with a is smallest
/// in colexicographic order; unique because masks are distinct.
inline subset colex_nearest(const std::vector<subset>& family, subset a) {
  if (family.empty()) throw std::invalid_argument("colex_nearest: empty family");
  subset best = family.front();
  for (subset x : family)
    if (colex_less(x ^ a, best ^ a)) best = x;
  return best;
}

/// Brunat–Guedes de Oliveira–Noy test: a partition of the Boolean lattice
/// into intervals is a Dawson partition iff sorting the bottoms in colex
/// order also sorts the tops. Throws if the input is not a partition.
inline bool is_dawson_partition(std::vector<std::pair<subset, subset>> intervals, int n) {
  std::vector<char> seen(std::size_t(1) << n, 0);
  std::uint32_t covered = 0;
  for (const auto& [g, h] : intervals) {
    if (!g.is_subset_of(h))
      throw std::invalid_argument("interval bottom is not contained in its top");
    for_each_in_interval(g, h, [&](subset a) {
      if (a.bits() >= seen.size())
        throw std::invalid_argument("interval leaves the Boolean lattice");
      if (seen[a.bits()]++)
        throw std::invalid_argument("intervals are not pairwise disjoint");
      ++covered;
    });
  }
  if (covered != (std::uint32_t(1) << n))
    throw std::invalid_argument("intervals do not cover the Boolean lattice");
  std::sort(intervals.begin(), intervals.end(),
            [](const auto& a, const auto& b) { return colex_less(a.first, b.first); });
  for (size_t i = 1; i < intervals.size(); ++i)
    if (!colex_less(intervals[i - 1].second, intervals[i].second)) return false;
  return true;
}

}  // namespace mptutte
