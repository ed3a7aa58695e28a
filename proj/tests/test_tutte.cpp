#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "mptutte/mptutte.hpp"

using namespace mptutte;
using fixtures::s;

namespace {

polynomial P(const std::string& text) { return polynomial::parse(text); }

polynomial t_m1() { return P("x^2 + x*y + y^2 + x + y"); }

polynomial t_p2() {
  const polynomial X = polynomial::variable(var::x);
  const polynomial Y = polynomial::variable(var::y);
  const polynomial Z = polynomial::variable(var::z);
  return (X * X + 3 * X + Y + 3) * Z * Z + (2 * X + 2 * Y + polynomial(5)) * Z + Y + 2;
}

const specialization_symbol& find_symbol(const std::string& display) {
  for (const auto& entry : specialization_symbols())
    if (entry.symbol.display == display) return entry.symbol;
  throw std::logic_error("no symbol " + display);
}

}  // namespace

TEST_CASE("corank-nullity expansion on the fixtures") {
  CHECK(tutte_corank_nullity(fixtures::identity_m1()) == t_m1());
  CHECK(tutte_corank_nullity(fixtures::p2()) == t_p2());
  // the same matroid through its graph presentation
  CHECK(tutte_corank_nullity(
            perspective::identity(matroid::graphic(fixtures::m1_graph()))) == t_m1());

  const perspective coloop =
      perspective::identity(matroid::from_bases(ground_set::numbered(1), {s({1})}));
  CHECK(tutte_corank_nullity(coloop) == P("x"));
  const perspective loop =
      perspective::identity(matroid::uniform(0, ground_set::numbered(1)));
  CHECK(tutte_corank_nullity(loop) == P("y"));
}

TEST_CASE("independent/spanning expansion agrees and has the table monomials") {
  for (const perspective& p : {fixtures::identity_m1(), fixtures::p2()})
    CHECK(tutte_indspan(p) == tutte_corank_nullity(p));

  // per-witness monomials of the five-element perspective
  const perspective p = fixtures::p2();
  std::map<std::uint32_t, std::string> expected = {
      {s({1, 2}).bits(), "x^2*z^2"},    {s({1, 3}).bits(), "x*z^2"},
      {s({1, 4}).bits(), "x*z^2"},      {s({1, 5}).bits(), "x*z^2"},
      {s({2, 3}).bits(), "y*z^2"},      {s({2, 5}).bits(), "z^2"},
      {s({3, 4}).bits(), "z^2"},        {s({4, 5}).bits(), "z^2"},
      {s({1, 2, 4}).bits(), "x*z"},     {s({1, 3, 5}).bits(), "x*z"},
      {s({2, 3, 4}).bits(), "y*z"},     {s({2, 3, 5}).bits(), "y*z"},
      {s({1, 2, 5}).bits(), "z"},       {s({1, 3, 4}).bits(), "z"},
      {s({1, 4, 5}).bits(), "z"},       {s({2, 4, 5}).bits(), "z"},
      {s({3, 4, 5}).bits(), "z"},       {s({2, 3, 4, 5}).bits(), "y"},
      {s({1, 2, 4, 5}).bits(), "1"},    {s({1, 3, 4, 5}).bits(), "1"},
  };
  REQUIRE(p.ind_span_sets().size() == expected.size());
  for (subset b : p.ind_span_sets()) {
    const activity_profile pr = p.profile(b);
    INFO("witness " << p.ground().render(b));
    exponents e{};
    e[static_cast<int>(var::x)] = pr.iota_prime;
    e[static_cast<int>(var::y)] = pr.eps;
    e[static_cast<int>(var::z)] = pr.rcd;
    CHECK(polynomial::monomial(1, e).str() == expected.at(b.bits()));
  }
}

TEST_CASE("derivative generating functions on the doubled triangle") {
  const perspective p = fixtures::identity_m1();
  CHECK(derivative_gf(p, 1, 0) == P("2*x + y + 1"));
  CHECK(derivative_gf(p, 0, 1) == P("x + 2*y + 1"));
  for (derivative_variant v : {derivative_variant::cr_nl, derivative_variant::i_nl,
                               derivative_variant::cr_e, derivative_variant::i_e})
    CHECK(derivative_gf(p, 3, 0, v).is_zero());

  auto cells = [&](derivative_variant v, int dp, int dq) {
    std::map<std::uint32_t, std::string> out;
    for (const auto& sm : derivative_summands(p, dp, dq, v))
      out[sm.set.bits()] = sm.value.str();
    return out;
  };
  CHECK(cells(derivative_variant::cr_nl, 1, 0) ==
        std::map<std::uint32_t, std::string>{{s({1}).bits(), "x"},
                                             {s({3}).bits(), "x"},
                                             {s({2}).bits(), "y"},
                                             {s({4}).bits(), "1"}});
  CHECK(cells(derivative_variant::i_nl, 1, 0) ==
        std::map<std::uint32_t, std::string>{{s({1}).bits(), "x"},
                                             {s({3}).bits(), "x"},
                                             {s({1, 4}).bits(), "1"},
                                             {s({2, 3}).bits(), "y"}});
  CHECK(derivative_gf(p, 1, 0, derivative_variant::i_nl) == P("2*x + y + 1"));

  // second derivatives: one subset each
  CHECK(cells(derivative_variant::cr_nl, 2, 0) ==
        std::map<std::uint32_t, std::string>{{subset().bits(), "1"}});
  CHECK(cells(derivative_variant::cr_nl, 1, 1) ==
        std::map<std::uint32_t, std::string>{{s({1, 2}).bits(), "1"}});
  CHECK(cells(derivative_variant::cr_nl, 0, 2) ==
        std::map<std::uint32_t, std::string>{{s({1, 2, 3, 4}).bits(), "1"}});
}

TEST_CASE("derivative generating functions on the perspective") {
  const perspective p = fixtures::p2();
  CHECK(derivative_gf(p, 0, 1) == P("z^2 + 2*z + 1"));
  std::map<std::uint32_t, std::string> cell;
  for (const auto& sm : derivative_summands(p, 0, 1, derivative_variant::cr_nl))
    cell[sm.set.bits()] = sm.value.str();
  CHECK(cell == std::map<std::uint32_t, std::string>{{s({1, 2, 3}).bits(), "z^2"},
                                                     {s({1, 2, 3, 4}).bits(), "z"},
                                                     {s({1, 2, 3, 5}).bits(), "z"},
                                                     {s({1, 2, 3, 4, 5}).bits(), "1"}});
  // (1/2) d²t/dx² = z², contributed by the empty set alone
  CHECK(derivative_gf(p, 2, 0) == P("2*z^2"));
  const auto top = derivative_summands(p, 2, 0, derivative_variant::cr_nl);
  REQUIRE(top.size() == 1);
  CHECK(top[0].set == subset());
}

TEST_CASE("derivative theorem against formal differentiation on the fixtures") {
  for (const perspective& p : {fixtures::identity_m1(), fixtures::p2()}) {
    const polynomial t = tutte_corank_nullity(p);
    for (int dp = 0; dp <= p.m_prime().rank() + 1; ++dp)
      for (int dq = 0; dq <= p.size() - p.m().rank() + 1; ++dq) {
        const polynomial formal = t.derivative(var::x, dp).derivative(var::y, dq);
        for (derivative_variant v :
             {derivative_variant::cr_nl, derivative_variant::i_nl,
              derivative_variant::cr_e, derivative_variant::i_e})
          CHECK(derivative_gf(p, dp, dq, v) == formal);
      }
  }
}

TEST_CASE("derivative cells tile the Boolean lattice") {
  for (const perspective& p : {fixtures::identity_m1(), fixtures::p2()}) {
    std::vector<int> hits(std::size_t(1) << p.size(), 0);
    for (int dp = 0; dp <= p.m_prime().rank(); ++dp)
      for (int dq = 0; dq <= p.size() - p.m().rank(); ++dq)
        for (const auto& sm : derivative_summands(p, dp, dq, derivative_variant::cr_nl))
          hits[sm.set.bits()] += 1;
    CHECK(std::count(hits.begin(), hits.end(), 1) == (1 << p.size()));
  }
}

TEST_CASE("diagonal derivative") {
  const perspective p = fixtures::identity_m1();
  CHECK(diagonal_derivative_gf(p, 0) == P("3*x^2 + 2*x"));
  CHECK(diagonal_derivative_gf(p, 1) == P("6*x + 2"));
  CHECK(diagonal_derivative_gf(p, 2) == P("6"));
  CHECK(diagonal_derivative_gf(p, 5).is_zero());

  for (const perspective& q : {p, fixtures::p2()}) {
    const polynomial diag =
        tutte_corank_nullity(q).substitute({{var::y, polynomial::variable(var::x)}});
    const int cap = q.m_prime().rank() + q.size() - q.m().rank() + 1;
    for (int dp = 0; dp <= cap; ++dp)
      CHECK(diagonal_derivative_gf(q, dp) == diag.derivative(var::x, dp));
  }
}

TEST_CASE("five-variable expansion") {
  const perspective idm = fixtures::identity_m1();
  // the sixteen monomials, in subset enumeration order
  const std::vector<std::string> expected = {
      "u^2", "x*u", "u*y", "u*v", "x*u", "x^2", "x*y", "x*v",
      "u",   "x",   "y",   "v",   "y^2", "y*v", "y*v", "v^2"};
  std::vector<std::string> got;
  for_each_subset(4, [&](subset a) { got.push_back(five_var_monomial(idm.profile(a)).str()); });
  CHECK(got == expected);

  const polynomial X = polynomial::variable(var::x);
  const polynomial U = polynomial::variable(var::u);
  const polynomial Y = polynomial::variable(var::y);
  const polynomial V = polynomial::variable(var::v);
  const polynomial xu = X + U, yv = Y + V;
  CHECK(five_var(idm) == xu * xu + xu * yv + yv * yv + xu + yv);

  // Taylor consistency: shift t by x -> x+u, y -> y+v
  for (const perspective& p : {idm, fixtures::p2()})
    CHECK(five_var(p) ==
          tutte_corank_nullity(p).substitute({{var::x, X + U}, {var::y, Y + V}}));

  const perspective coloop =
      perspective::identity(matroid::from_bases(ground_set::numbered(1), {s({1})}));
  CHECK(five_var(coloop) == X + U);
}

TEST_CASE("expansion families on the doubled triangle") {
  const perspective p = fixtures::identity_m1();
  const polynomial t = t_m1();

  auto value_at = [](const expansion& e, subset a) {
    for (const auto& sm : e.summands)
      if (sm.set == a) return sm.value;
    return polynomial(0);
  };

  const expansion f1 = expansion_family(p, expansion_family_id::f1);
  CHECK(value_at(f1, subset()) == P("x^2 - 2*x + 1"));
  CHECK(f1.total == t);

  const expansion f3 = expansion_family(p, expansion_family_id::f3);
  CHECK(value_at(f3, s({2, 4})) == P("1/2*y"));
  CHECK(f3.total == t);

  const expansion f3b = expansion_family(p, expansion_family_id::f3b);
  CHECK(value_at(f3b, s({1, 2, 3, 4})) == P("y^2 - 2*y + 1"));
  CHECK(f3b.total == t);

  const expansion f4 = expansion_family(p, expansion_family_id::f4);
  CHECK(f4.summands.size() == 10);  // exactly the spanning subsets
  for (const auto& sm : f4.summands) CHECK(p.m_prime().spanning(sm.set));
  CHECK(f4.total == t);

  const expansion f2 = expansion_family(p, expansion_family_id::f2);
  CHECK(f2.summands.size() == 5);
  for (const auto& sm : f2.summands) CHECK(p.m().is_basis(sm.set));

  for (const auto& [id, name] : expansion_family_names())
    CHECK(expansion_family(p, id).total == t);
}

TEST_CASE("expansion families on the perspective") {
  const perspective p = fixtures::p2();
  const polynomial t = t_p2();
  for (const auto& [id, name] : expansion_family_names()) {
    INFO("family " << name);
    CHECK(expansion_family(p, id).total == t);
  }
  const expansion f2 = expansion_family(p, expansion_family_id::f2);
  CHECK(f2.summands.size() == 20);
  polynomial sum;
  for (const auto& sm : f2.summands) sum += sm.value;
  CHECK(sum == tutte_indspan(p));
}

TEST_CASE("specialization symbols reproduce the Tutte polynomial") {
  REQUIRE(specialization_symbols().size() == 25);
  const perspective idm = fixtures::identity_m1();
  CHECK(specialize_symbol(idm, find_symbol("[[x-1,1,y-1,1]]")) == t_m1());
  CHECK(specialize_symbol(idm, find_symbol("[[0,x,0,y]]")) == t_m1());
  CHECK(specialize_symbol(fixtures::p2(), find_symbol("[[x/2,x/2,y/2,y/2]]")) == t_p2());

  for (const perspective& p : {idm, fixtures::p2()}) {
    const polynomial t = tutte_corank_nullity(p);
    for (const auto& entry : specialization_symbols()) {
      INFO("symbol " << entry.symbol.display);
      CHECK(specialize_symbol(p, entry.symbol) == t);
    }
  }
}

TEST_CASE("symbols in one family share their summand multiset") {
  for (const perspective& p : {fixtures::identity_m1(), fixtures::p2()}) {
    std::map<std::string, std::vector<std::string>> by_family;
    for (const auto& entry : specialization_symbols()) {
      std::vector<std::string> multiset;
      for (const auto& sm : symbol_summands(p, entry.symbol))
        multiset.push_back(sm.value.str());
      std::sort(multiset.begin(), multiset.end());
      const std::string fam = to_string(entry.family);
      if (by_family.count(fam))
        CHECK(by_family[fam] == multiset);
      else
        by_family[fam] = std::move(multiset);
    }
    // across families the multisets genuinely differ
    CHECK(by_family["1"] != by_family["2"]);
    CHECK(by_family["3"] != by_family["1"]);
  }
}

namespace {

// Independent oracle: Tutte polynomial by deletion-contraction recursion,
// sharing no code with the subset sums.
polynomial tutte_by_deletion_contraction(const matroid& m) {
  if (m.size() == 0) return polynomial(1);
  const int e = m.size() - 1;
  const subset picked = subset().with(e);
  const bool loop = m.rank_of(picked) == 0;
  const bool coloop = m.rank_of(m.ground().all().minus(picked)) < m.rank();
  if (loop)
    return polynomial::variable(var::y) *
           tutte_by_deletion_contraction(m.minor(picked, subset()));
  if (coloop)
    return polynomial::variable(var::x) *
           tutte_by_deletion_contraction(m.minor(subset(), picked));
  return tutte_by_deletion_contraction(m.minor(picked, subset())) +
         tutte_by_deletion_contraction(m.minor(subset(), picked));
}

}  // namespace

TEST_CASE("subset sums agree with deletion-contraction") {
  std::vector<matroid> ms = {fixtures::m1(), fixtures::p2_m(), fixtures::p2_m_prime(),
                             matroid::uniform(2, ground_set::numbered(4)),
                             matroid::uniform(0, ground_set::numbered(2))};
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 8; ++i)
    ms.push_back(random_instance(rng(), 6, random_kind::matroid).m());
  for (const matroid& m : ms)
    CHECK(tutte_corank_nullity(perspective::identity(m)) ==
          tutte_by_deletion_contraction(m));
}

TEST_CASE("classical evaluations count subsets") {
  std::vector<perspective> ps = {fixtures::identity_m1(), fixtures::p2()};
  std::mt19937_64 rng(2025);
  for (int i = 0; i < 6; ++i)
    ps.push_back(random_instance(rng(), 6,
                                 i % 2 ? random_kind::perspective : random_kind::matroid));
  for (const perspective& p : ps) {
    const polynomial t = tutte_corank_nullity(p);
    const std::map<var, rational> ones = {{var::x, 1}, {var::y, 1}, {var::z, 1}};
    CHECK(t.evaluate(ones) == rational(static_cast<long>(p.ind_span_sets().size())));
    CHECK(t.evaluate({{var::x, 2}, {var::y, 2}, {var::z, 1}}) ==
          rational(static_cast<long>(1L << p.size())));
    // counts of independent and of spanning-in-M' subsets
    long independent = 0, spanning = 0;
    for_each_subset(p.size(), [&](subset a) {
      if (p.m().independent(a)) ++independent;
      if (p.m_prime().spanning(a)) ++spanning;
    });
    CHECK(t.evaluate({{var::x, 2}, {var::y, 1}, {var::z, 1}}) == rational(independent));
    CHECK(t.evaluate({{var::x, 1}, {var::y, 2}, {var::z, 1}}) == rational(spanning));
  }
}

TEST_CASE("family parsing helpers") {
  CHECK(expansion_family_from("3b") == expansion_family_id::f3b);
  CHECK_THROWS_AS(expansion_family_from("6"), std::invalid_argument);
  CHECK(derivative_variant_from("cr-e") == derivative_variant::cr_e);
  CHECK_THROWS_AS(derivative_variant_from("nl-cr"), std::invalid_argument);
}
