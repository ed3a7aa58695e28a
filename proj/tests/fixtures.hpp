#pragma once

// Shared example instances used across the suites: the four-element
// doubled-triangle matroid and the five-element perspective with one
// triangle circuit mapping onto a rank-2 matroid with parallel classes
// {1}, {2,4}, {3,5}.

#include <string>
#include <vector>

#include "mptutte/mptutte.hpp"

namespace fixtures {

using namespace mptutte;

inline ground_set g4() { return ground_set::numbered(4); }
inline ground_set g5() { return ground_set::numbered(5); }

// positions are labels minus one throughout (labels "1".."n")
inline subset s(std::initializer_list<int> labels) {
  subset out;
  for (int l : labels) out = out.with(l - 1);
  return out;
}

inline matroid m1() {
  return matroid::from_bases(
      g4(), {s({1, 3}), s({1, 4}), s({2, 3}), s({2, 4}), s({3, 4})});
}

inline graph m1_graph() {
  graph g;
  g.add_vertex("a");
  g.add_vertex("b");
  g.add_vertex("c");
  g.add_edge("1", "a", "b");
  g.add_edge("2", "a", "b");
  g.add_edge("3", "b", "c");
  g.add_edge("4", "a", "c");
  return g;
}

inline matroid p2_m() { return matroid::from_circuits(g5(), {s({1, 2, 3})}); }

inline matroid p2_m_prime() {
  return matroid::from_circuits(
      g5(), {s({2, 4}), s({3, 5}), s({1, 2, 3}), s({1, 2, 5}), s({1, 3, 4}),
             s({1, 4, 5})});
}

inline perspective p2() { return perspective::make(p2_m(), p2_m_prime()); }

inline perspective identity_m1() { return perspective::identity(m1()); }

inline std::string repo_path(const std::string& rel) {
  return std::string(MPTUTTE_REPO_DIR) + "/" + rel;
}

}  // namespace fixtures
