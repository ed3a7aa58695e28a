#pragma once

#include <bit>
#include <cctype>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mptutte {

// Elements are positions 0..n-1 in the declared order of the ground set;
// position order is the linear order everywhere ("smallest" = lowest position).

/// Subset of a ground set as a characteristic bit vector keyed by position.
class subset {
 public:
  constexpr subset() = default;
  explicit constexpr subset(std::uint32_t bits) : bits_(bits) {}

  static subset of(std::initializer_list<int> positions) {
    subset s;
    for (int p : positions) s = s.with(p);
    return s;
  }
  static constexpr subset full(int n) {
    return subset(n == 0 ? 0u : (n >= 32 ? ~0u : ((1u << n) - 1u)));
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  int size() const { return std::popcount(bits_); }

  bool contains(int pos) const { return (bits_ >> pos) & 1u; }
  subset with(int pos) const { return subset(bits_ | (1u << pos)); }
  subset without(int pos) const { return subset(bits_ & ~(1u << pos)); }

  /// Smallest element in the declared order; subset must be nonempty.
  int smallest() const {
    if (empty()) throw std::logic_error("subset: smallest of empty set");
    return std::countr_zero(bits_);
  }
  int largest() const {
    if (empty()) throw std::logic_error("subset: largest of empty set");
    return 31 - std::countl_zero(bits_);
  }

  bool is_subset_of(subset o) const { return (bits_ & ~o.bits_) == 0; }

  subset minus(subset o) const { return subset(bits_ & ~o.bits_); }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(size());
    for (std::uint32_t b = bits_; b != 0; b &= b - 1)
      out.push_back(std::countr_zero(b));
    return out;
  }

  friend constexpr subset operator|(subset a, subset b) { return subset(a.bits_ | b.bits_); }
  friend constexpr subset operator&(subset a, subset b) { return subset(a.bits_ & b.bits_); }
  friend constexpr subset operator^(subset a, subset b) { return subset(a.bits_ ^ b.bits_); }
  friend constexpr bool operator==(subset a, subset b) { return a.bits_ == b.bits_; }
  friend constexpr bool operator!=(subset a, subset b) { return a.bits_ != b.bits_; }
  // numeric mask order; doubles as the colexicographic order on subsets
  friend constexpr bool operator<(subset a, subset b) { return a.bits_ < b.bits_; }

 private:
  std::uint32_t bits_ = 0;
};

/// A < B in colexicographic order iff the largest element of the symmetric
/// difference lies in B; on bit masks that is the numeric order.
inline bool colex_less(subset a, subset b) { return a.bits() < b.bits(); }

template <class F>
void for_each_subset(int n, F&& f) {
  const std::uint32_t end = 1u << n;  // n is capped well below 31 by ground_set
  for (std::uint32_t m = 0; m != end; ++m) f(subset(m));
}

/// Visits every member of the Boolean interval [bottom, top].
template <class F>
void for_each_in_interval(subset bottom, subset top, F&& f) {
  if (!bottom.is_subset_of(top))
    throw std::logic_error("interval: bottom not contained in top");
  const std::uint32_t free = top.bits() & ~bottom.bits();
  for (std::uint32_t s = free;; s = (s - 1) & free) {
    f(subset(bottom.bits() | s));
    if (s == 0) break;
  }
}

/// Ordered ground set; the declaration order of the labels is the linear
/// order, first label smallest.
class ground_set {
 public:
  explicit ground_set(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.size() > max_size)
      throw std::invalid_argument("ground set too large (max " +
                                  std::to_string(max_size) + " elements)");
    for (size_t i = 0; i < labels_.size(); ++i)
      for (size_t j = i + 1; j < labels_.size(); ++j)
        if (labels_[i] == labels_[j])
          throw std::invalid_argument("duplicate label '" + labels_[i] + "'");
  }

  static ground_set numbered(int n) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
    return ground_set(std::move(labels));
  }

  static constexpr size_t max_size = 20;

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int pos) const { return labels_.at(pos); }
  const std::vector<std::string>& labels() const { return labels_; }
  subset all() const { return subset::full(size()); }

  std::optional<int> position(std::string_view label) const {
    for (size_t i = 0; i < labels_.size(); ++i)
      if (labels_[i] == label) return static_cast<int>(i);
    return std::nullopt;
  }

  int require_position(std::string_view label) const {
    if (auto p = position(label)) return *p;
    throw std::invalid_argument("unknown label '" + std::string(label) + "'");
  }

  void require_member(subset s) const {
    if (!s.is_subset_of(all()))
      throw std::invalid_argument("subset contains elements outside the ground set");
  }

  /// Renders a subset as a brace literal in element order, e.g. "{1,3}".
  std::string render(subset s) const {
    require_member(s);
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (int e : s.elements()) {
      if (!first) os << ",";
      os << labels_[e];
      first = false;
    }
    os << "}";
    return os.str();
  }

  /// Parses a brace literal, tolerating whitespace around tokens.
  subset parse_subset(std::string_view text) const {
    size_t i = 0;
    auto skip = [&] {
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip();
    if (i >= text.size() || text[i] != '{')
      throw std::invalid_argument("set literal must start with '{': " + std::string(text));
    ++i;
    subset out;
    skip();
    if (i < text.size() && text[i] == '}') return out;
    while (true) {
      skip();
      size_t start = i;
      while (i < text.size() && text[i] != ',' && text[i] != '}' &&
             !std::isspace(static_cast<unsigned char>(text[i])))
        ++i;
      std::string_view token = text.substr(start, i - start);
      if (token.empty())
        throw std::invalid_argument("empty element in set literal: " + std::string(text));
      int pos = require_position(token);
      if (out.contains(pos))
        throw std::invalid_argument("repeated element '" + std::string(token) +
                                    "' in set literal");
      out = out.with(pos);
      skip();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == '}') break;
      throw std::invalid_argument("malformed set literal: " + std::string(text));
    }
    ++i;
    while (i < text.size()) {
      if (!std::isspace(static_cast<unsigned char>(text[i])))
        throw std::invalid_argument("trailing characters after set literal: " +
                                    std::string(text));
      ++i;
    }
    return out;
  }

  friend bool operator==(const ground_set& a, const ground_set& b) {
    return a.labels_ == b.labels_;
  }
  friend bool operator!=(const ground_set& a, const ground_set& b) { return !(a == b); }

 private:
  std::vector<std::string> labels_;
};

}  // namespace mptutte
