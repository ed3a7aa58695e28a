#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <vector>

#include "fixtures.hpp"
#include "mptutte/mptutte.hpp"

using namespace mptutte;
using fixtures::s;

namespace {

struct table2_row {
  subset a, int_active, p_set, ext_active, q_set;
};

// The sixteen activity rows of the doubled-triangle matroid.
const std::vector<table2_row> table2 = {
    {subset(), subset(), s({1, 3}), subset(), subset()},
    {s({1}), s({1}), s({3}), subset(), subset()},
    {s({2}), subset(), s({3}), s({1}), subset()},
    {s({3}), s({3}), s({1}), subset(), subset()},
    {s({4}), subset(), s({1}), subset(), subset()},
    {s({1, 2}), subset(), s({3}), subset(), s({1})},
    {s({1, 3}), s({1, 3}), subset(), subset(), subset()},
    {s({1, 4}), s({1}), subset(), subset(), subset()},
    {s({2, 3}), s({3}), subset(), s({1}), subset()},
    {s({2, 4}), subset(), subset(), s({1}), subset()},
    {s({3, 4}), subset(), subset(), s({1, 2}), subset()},
    {s({1, 2, 3}), s({3}), subset(), subset(), s({1})},
    {s({1, 2, 4}), subset(), subset(), subset(), s({1})},
    {s({1, 3, 4}), subset(), subset(), s({2}), s({1})},
    {s({2, 3, 4}), subset(), subset(), s({1}), s({2})},
    {s({1, 2, 3, 4}), subset(), subset(), subset(), s({1, 2})},
};

}  // namespace

TEST_CASE("activity sets of every subset of the doubled triangle") {
  const matroid m = fixtures::m1();
  for (const auto& row : table2) {
    const activity_profile pr = active_sets(m, m, row.a);
    INFO("subset " << m.ground().render(row.a));
    CHECK(pr.int_active == row.int_active);
    CHECK(pr.p_set == row.p_set);
    CHECK(pr.ext_active == row.ext_active);
    CHECK(pr.q_set == row.q_set);
    CHECK(pr.iota_prime == row.int_active.size());
    CHECK(pr.cr_prime == row.p_set.size());
    CHECK(pr.eps == row.ext_active.size());
    CHECK(pr.nl == row.q_set.size());
    CHECK(pr.rcd == 0);
  }
}

TEST_CASE("activity profile of a perspective subset") {
  const perspective p = fixtures::p2();
  const activity_profile pr = p.profile(s({2, 3}));
  CHECK(pr.iota_prime == 0);
  CHECK(pr.cr_prime == 0);
  CHECK(pr.eps == 1);
  CHECK(pr.nl == 0);
  CHECK(pr.rcd == 2);
  CHECK(pr.ext_active == s({1}));

  CHECK_THROWS_WITH(active_sets(fixtures::m1(), fixtures::p2_m(), subset()),
                    Catch::Matchers::ContainsSubstring("different ground sets"));
}

TEST_CASE("profile counts equal corank and nullity") {
  std::vector<perspective> ps = {fixtures::identity_m1(), fixtures::p2()};
  std::mt19937_64 rng(11);
  for (int i = 0; i < 4; ++i)
    ps.push_back(random_instance(rng(), 6,
                                 i % 2 ? random_kind::perspective : random_kind::matroid));
  for (const perspective& p : ps) {
    for_each_subset(p.size(), [&](subset a) {
      const activity_profile pr = p.profile(a);
      CHECK(pr.cr_prime == p.m_prime().stats(a).corank);
      CHECK(pr.nl == p.m().stats(a).nullity);
    });
  }
}

TEST_CASE("splitting Act by membership gives the four sets") {
  std::vector<matroid> ms = {fixtures::m1(), fixtures::p2_m_prime()};
  std::mt19937_64 rng(12);
  for (int i = 0; i < 3; ++i)
    ms.push_back(random_instance(rng(), 6, random_kind::matroid).m());
  for (const matroid& m : ms) {
    const matroid dual = m.dual();
    const subset all = m.ground().all();
    for_each_subset(m.size(), [&](subset a) {
      const activity_profile pr = active_sets(m, m, a);
      const subset act = act_elements(m, a);
      const subset act_star = act_elements(dual, all.minus(a));
      CHECK(pr.q_set == (act & a));
      CHECK(pr.ext_active == act.minus(a));
      CHECK(pr.int_active == (act_star & a));
      CHECK(pr.p_set == act_star.minus(a));
      // duality: Int_M(A) = Ext_M*(E∖A) and P_M(A) = Q_M*(E∖A)
      CHECK(pr.int_active == active_sets(dual, dual, all.minus(a)).ext_active);
      CHECK(pr.p_set == active_sets(dual, dual, all.minus(a)).q_set);
    });
  }
}

TEST_CASE("perspective activities are monotone between M and M'") {
  std::vector<perspective> ps = {fixtures::p2()};
  std::mt19937_64 rng(13);
  for (int i = 0; i < 4; ++i)
    ps.push_back(random_instance(rng(), 6, random_kind::perspective));
  for (const perspective& p : ps) {
    for_each_subset(p.size(), [&](subset a) {
      const activity_profile both = p.profile(a);
      const activity_profile in_m = active_sets(p.m(), p.m(), a);
      const activity_profile in_mp = active_sets(p.m_prime(), p.m_prime(), a);
      CHECK(both.int_active.is_subset_of(in_m.int_active));
      CHECK(both.p_set.is_subset_of(in_m.p_set));
      CHECK(both.ext_active.is_subset_of(in_mp.ext_active));
      CHECK(both.q_set.is_subset_of(in_mp.q_set));
    });
  }
}

TEST_CASE("basis activities match the general definition on bases") {
  const matroid m = fixtures::m1();
  CHECK(basis_activities(m, s({1, 3})) == std::pair{2, 0});
  CHECK(basis_activities(m, s({2, 3})) == std::pair{1, 1});
  CHECK(basis_activities(m, s({3, 4})) == std::pair{0, 2});
  CHECK(basis_activities(m, s({1, 4})) == std::pair{1, 0});
  CHECK(basis_activities(m, s({2, 4})) == std::pair{0, 1});
  CHECK_THROWS_WITH(basis_activities(m, s({1, 2})),
                    Catch::Matchers::ContainsSubstring("not a basis"));

  std::vector<matroid> ms = {m, fixtures::p2_m(), fixtures::p2_m_prime()};
  std::mt19937_64 rng(14);
  for (int i = 0; i < 3; ++i)
    ms.push_back(random_instance(rng(), 6, random_kind::matroid).m());
  for (const matroid& mm : ms)
    for (subset b : mm.bases()) {
      const activity_profile pr = active_sets(mm, mm, b);
      CHECK(basis_activities(mm, b) == std::pair{pr.iota_prime, pr.eps});
    }
}

TEST_CASE("unique witness circuits") {
  const matroid m = fixtures::m1();
  const subset all = s({1, 2, 3, 4});
  CHECK(unique_witness_circuit(m, all, 0) == s({1, 3, 4}));
  CHECK(unique_witness_circuit(m, all, 1) == s({2, 3, 4}));
  CHECK_THROWS_WITH(unique_witness_circuit(m, s({1, 3, 4}), 3),
                    Catch::Matchers::ContainsSubstring("not active"));

  // exhaustively: the witness is a circuit with smallest element e inside
  // (A ∖ Q) ∪ {e}, and the circuit scan confirms it is unique
  std::vector<matroid> ms = {m, fixtures::p2_m_prime()};
  for (const matroid& mm : ms)
    for_each_subset(mm.size(), [&](subset a) {
      const activity_profile pr = active_sets(mm, mm, a);
      for (int e : (pr.ext_active | pr.q_set).elements()) {
        const subset c = unique_witness_circuit(mm, a, e);
        CHECK(c.smallest() == e);
        CHECK(c.is_subset_of(a.minus(pr.q_set).with(e)));
        CHECK(std::count(mm.circuits().begin(), mm.circuits().end(), c) == 1);
      }
    });
}
