#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "mptutte/perspective.hpp"
#include "mptutte/tutte.hpp"

namespace mptutte {

struct check_result {
  std::string check;
  std::string instance;
  bool pass = false;
  std::string detail;  // concrete counterexample when failing
};

struct verification_report {
  std::vector<check_result> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

/// Sparse census of subsets by (iota', eps, rcd, cr', nl) and of
/// independent/spanning witnesses by (iota', eps, rcd).
struct census_tables {
  std::map<std::array<int, 5>, long long> a_table;
  std::map<std::array<int, 3>, long long> b_table;
};

inline census_tables census(const perspective& p) {
  census_tables out;
  for_each_subset(p.size(), [&](subset a) {
    const activity_profile pr = p.profile(a);
    out.a_table[{pr.iota_prime, pr.eps, pr.rcd, pr.cr_prime, pr.nl}] += 1;
    if (pr.cr_prime == 0 && pr.nl == 0)
      out.b_table[{pr.iota_prime, pr.eps, pr.rcd}] += 1;
  });
  return out;
}

namespace checks {

inline check_result pass(const std::string& name) { return {name, "", true, ""}; }
inline check_result fail(const std::string& name, const std::string& detail) {
  return {name, "", false, detail};
}

// Formal differentiation of the corank-nullity polynomial against the
// activity generating function, for every cell and all four variants,
// including one row/column beyond the nonzero range.
inline check_result derivative_theorem(const perspective& p) {
  const std::string name = "derivative-theorem";
  const polynomial t = tutte_corank_nullity(p);
  const int dp_max = p.m_prime().rank() + 1;
  const int dq_max = p.size() - p.m().rank() + 1;
  for (int dp = 0; dp <= dp_max; ++dp)
    for (int dq = 0; dq <= dq_max; ++dq) {
      const polynomial formal = t.derivative(var::x, dp).derivative(var::y, dq);
      for (derivative_variant v : {derivative_variant::cr_nl, derivative_variant::i_nl,
                                   derivative_variant::cr_e, derivative_variant::i_e}) {
        const polynomial gf = derivative_gf(p, dp, dq, v);
        if (gf != formal)
          return fail(name, "variant " + std::string(to_string(v)) + ", (p,q)=(" +
                                std::to_string(dp) + "," + std::to_string(dq) +
                                "): formal " + formal.str() + " vs generating " + gf.str());
      }
    }
  return pass(name);
}

inline check_result diagonal_derivative(const perspective& p) {
  const std::string name = "diagonal-derivative";
  const polynomial t_diag = tutte_corank_nullity(p).substitute({{var::y, polynomial::variable(var::x)}});
  const int dp_max = p.m_prime().rank() + (p.size() - p.m().rank()) + 1;
  for (int dp = 0; dp <= dp_max; ++dp) {
    const polynomial formal = t_diag.derivative(var::x, dp);
    const polynomial gf = diagonal_derivative_gf(p, dp);
    if (gf != formal)
      return fail(name, "order " + std::to_string(dp) + ": formal " + formal.str() +
                            " vs generating " + gf.str());
  }
  return pass(name);
}

// Disjointness and coverage of the intervals and uniqueness of the
// independent/spanning witness, using rank queries only.
inline check_result partition(const perspective& p) {
  const std::string name = "partition";
  const auto& g = p.ground();
  std::vector<char> seen(std::size_t(1) << p.size(), 0);
  std::uint32_t covered = 0;
  for (subset b : p.ind_span_sets()) {
    const dawson_interval iv = p.interval_of_witness(b);
    int witnesses = 0;
    std::string overlap;
    for_each_in_interval(iv.bottom, iv.top, [&](subset a) {
      if (seen[a.bits()]++ && overlap.empty()) overlap = g.render(a);
      ++covered;
      if (p.ind_span(a)) ++witnesses;
    });
    if (!overlap.empty())
      return fail(name, "intervals overlap at subset " + overlap);
    if (witnesses != 1)
      return fail(name, "interval of witness " + g.render(b) + " contains " +
                            std::to_string(witnesses) + " independent/spanning sets");
  }
  if (covered != (std::uint32_t(1) << p.size())) {
    std::string uncovered;
    for_each_subset(p.size(), [&](subset a) {
      if (uncovered.empty() && !seen[a.bits()]) uncovered = g.render(a);
    });
    return fail(name, "subset " + uncovered + " lies in no interval");
  }
  return pass(name);
}

// Four set identities relating each interval member to its witness.
inline check_result interval_lemma(const perspective& p) {
  const std::string name = "interval-lemma";
  const auto& g = p.ground();
  for (subset b : p.ind_span_sets()) {
    const dawson_interval iv = p.interval_of_witness(b);
    const activity_profile prb = p.profile(b);
    check_result bad = pass(name);
    bool ok = true;
    for_each_in_interval(iv.bottom, iv.top, [&](subset a) {
      if (!ok) return;
      const activity_profile pra = p.profile(a);
      auto mismatch = [&](const char* what, subset got, subset want) {
        bad = fail(name, "witness " + g.render(b) + ", member " + g.render(a) + ": " +
                             what + " is " + g.render(got) + ", expected " + g.render(want));
        ok = false;
      };
      if (pra.int_active != (prb.int_active & a))
        mismatch("Int_M'(A)", pra.int_active, prb.int_active & a);
      else if (pra.p_set != prb.int_active.minus(a))
        mismatch("P_M'(A)", pra.p_set, prb.int_active.minus(a));
      else if (pra.ext_active != prb.ext_active.minus(a))
        mismatch("Ext_M(A)", pra.ext_active, prb.ext_active.minus(a));
      else if (pra.q_set != (prb.ext_active & a))
        mismatch("Q_M(A)", pra.q_set, prb.ext_active & a);
    });
    if (!ok) return bad;
  }
  return pass(name);
}

// phi and phi* are involutions, exchange the advertised statistics, and
// compose to complementation inside the Dawson interval.
inline check_result dualities(const perspective& p) {
  const std::string name = "dualities";
  const auto& g = p.ground();
  check_result bad = pass(name);
  bool ok = true;
  for_each_subset(p.size(), [&](subset a) {
    if (!ok) return;
    const subset fa = p.involution_phi(a);
    const subset fsa = p.involution_phi_star(a);
    auto report = [&](const std::string& what) {
      bad = fail(name, "subset " + g.render(a) + ": " + what);
      ok = false;
    };
    if (p.involution_phi(fa) != a) {
      report("phi is not an involution (image " + g.render(fa) + ")");
      return;
    }
    if (p.involution_phi_star(fsa) != a) {
      report("phi* is not an involution (image " + g.render(fsa) + ")");
      return;
    }
    const activity_profile pr = p.profile(a);
    const activity_profile prf = p.profile(fa);
    const activity_profile prfs = p.profile(fsa);
    if (prf.nl != pr.eps || prf.eps != pr.nl || prf.iota_prime != pr.iota_prime ||
        prf.cr_prime != pr.cr_prime) {
      report("phi does not exchange (nl, eps) fixing (iota', cr')");
      return;
    }
    if (prfs.cr_prime != pr.iota_prime || prfs.iota_prime != pr.cr_prime ||
        prfs.nl != pr.nl || prfs.eps != pr.eps) {
      report("phi* does not exchange (cr', iota') fixing (nl, eps)");
      return;
    }
    const subset b = p.dawson_map(a);
    if (!p.ind_span(b)) {
      report("Dawson map image " + g.render(b) + " is not independent/spanning");
      return;
    }
    const dawson_interval iv = p.interval_of_witness(b);
    const subset complement = iv.bottom | (iv.top.minus(iv.bottom).minus(a));
    if (p.involution_phi(fsa) != complement)
      report("phi∘phi* is not interval complementation: got " +
             g.render(p.involution_phi(fsa)) + ", expected " + g.render(complement));
  });
  return ok ? pass(name) : bad;
}

inline check_result census_identity(const perspective& p) {
  const std::string name = "census-identity";
  const census_tables t = census(p);
  long long a_sum = 0, b_sum = 0, expected_sum = 0;
  for (const auto& [k, v] : t.a_table) a_sum += v;
  for (const auto& [k, v] : t.b_table) b_sum += v;
  if (a_sum != (1LL << p.size()))
    return fail(name, "a-table counts " + std::to_string(a_sum) + " subsets, expected " +
                          std::to_string(1LL << p.size()));
  if (b_sum != static_cast<long long>(p.ind_span_sets().size()))
    return fail(name, "b-table counts " + std::to_string(b_sum) +
                          " witnesses, expected " +
                          std::to_string(p.ind_span_sets().size()));
  for (const auto& [ijk, b] : t.b_table) {
    const int i = ijk[0], j = ijk[1], k = ijk[2];
    for (int dp = 0; dp <= i; ++dp)
      for (int dq = 0; dq <= j; ++dq) {
        const long long want = binomial(i, dp).get_si() * binomial(j, dq).get_si() * b;
        const auto it = t.a_table.find({i - dp, j - dq, k, dp, dq});
        const long long got = (it == t.a_table.end()) ? 0 : it->second;
        expected_sum += want;
        if (got != want)
          return fail(name, "a[" + std::to_string(i - dp) + "," + std::to_string(j - dq) +
                                "," + std::to_string(k) + "," + std::to_string(dp) + "," +
                                std::to_string(dq) + "] = " + std::to_string(got) +
                                ", expected C(" + std::to_string(i) + "," +
                                std::to_string(dp) + ")C(" + std::to_string(j) + "," +
                                std::to_string(dq) + ")b = " + std::to_string(want));
      }
  }
  if (expected_sum != a_sum)
    return fail(name, "a-table has entries outside the census identity");
  return pass(name);
}

inline check_result colex_agreement(const perspective& p) {
  const std::string name = "colex-agreement";
  const auto& g = p.ground();
  check_result bad = pass(name);
  bool ok = true;
  for_each_subset(p.size(), [&](subset a) {
    if (!ok) return;
    const subset direct = p.dawson_map(a);
    if (!p.ind_span(direct)) {
      bad = fail(name, "Dawson map sends " + g.render(a) + " to " + g.render(direct) +
                           ", which is not independent/spanning");
      ok = false;
      return;
    }
    const subset nearest = colex_nearest(p.ind_span_sets(), a);
    if (direct != nearest) {
      bad = fail(name, "subset " + g.render(a) + ": Dawson map gives " + g.render(direct) +
                           ", colex-nearest witness is " + g.render(nearest));
      ok = false;
    }
  });
  return ok ? pass(name) : bad;
}

inline check_result bgn_characterization(const perspective& p) {
  const std::string name = "bgn-characterization";
  std::vector<std::pair<subset, subset>> intervals;
  for (subset b : p.ind_span_sets()) {
    const dawson_interval iv = p.interval_of_witness(b);
    intervals.emplace_back(iv.bottom, iv.top);
  }
  if (!is_dawson_partition(std::move(intervals), p.size()))
    return fail(name, "interval tops are not colex-sorted along colex-sorted bottoms");
  return pass(name);
}

inline check_result mp_axiom_agreement(const perspective& p) {
  const std::string name = "mp-axiom-agreement";
  const bool b1 = mp1(p.m(), p.m_prime());
  const bool b2 = mp2(p.m(), p.m_prime());
  const bool b3 = mp3(p.m(), p.m_prime());
  const bool b4 = mp4(p.m(), p.m_prime());
  if (b1 != b2 || b1 != b3 || b1 != b4) {
    std::ostringstream os;
    os << "axioms disagree: MP1=" << b1 << " MP2=" << b2 << " MP3=" << b3
       << " MP4=" << b4;
    return fail(name, os.str());
  }
  if (!b1) return fail(name, "all axioms fail; pair is not a perspective");
  return pass(name);
}

// Every interval of the perspective partition sits inside one interval of
// each of the identity partitions on M and on M'.
inline check_result refinement(const perspective& p) {
  const std::string name = "refinement";
  const auto& g = p.ground();
  const perspective id_m = perspective::identity(p.m());
  const perspective id_mp = perspective::identity(p.m_prime());
  for (subset b : p.ind_span_sets()) {
    const dawson_interval iv = p.interval_of_witness(b);
    for (const auto* id_side : {&id_m, &id_mp}) {
      const dawson_interval outer = id_side->interval_of_witness(id_side->dawson_map(iv.bottom));
      if (!outer.bottom.is_subset_of(iv.bottom) || !iv.top.is_subset_of(outer.top))
        return fail(name, "interval [" + g.render(iv.bottom) + "," + g.render(iv.top) +
                              "] is not contained in the identity interval [" +
                              g.render(outer.bottom) + "," + g.render(outer.top) + "]");
    }
  }
  return pass(name);
}

inline check_result uniqueness_witness(const perspective& p) {
  const std::string name = "uniqueness-witness";
  const auto& g = p.ground();
  const matroid& m = p.m();
  check_result bad = pass(name);
  bool ok = true;
  for_each_subset(p.size(), [&](subset a) {
    if (!ok) return;
    const activity_profile pr = active_sets(m, m, a);
    for (int e : (pr.ext_active | pr.q_set).elements()) {
      const subset target = a.minus(pr.q_set).with(e);
      int count = 0;
      for (const auto& c : m.circuits())
        if (c.smallest() == e && c.is_subset_of(target)) ++count;
      if (count != 1) {
        bad = fail(name, "subset " + g.render(a) + ", element " + g.label(e) + ": " +
                             std::to_string(count) + " witness circuits inside " +
                             g.render(target));
        ok = false;
        return;
      }
    }
  });
  return ok ? pass(name) : bad;
}

// The two closed expansions, the nine families and the 25 symbols all
// produce the same polynomial, and symbols within one family produce the
// same summand multiset.
inline check_result expansion_agreement(const perspective& p) {
  const std::string name = "expansion-agreement";
  const polynomial t = tutte_corank_nullity(p);
  const polynomial t2 = tutte_indspan(p);
  if (t2 != t)
    return fail(name, "independent/spanning expansion " + t2.str() +
                          " differs from corank-nullity expansion " + t.str());
  for (const auto& [id, fname] : expansion_family_names()) {
    const expansion e = expansion_family(p, id);
    if (e.total != t)
      return fail(name, "family (" + fname + ") sums to " + e.total.str() +
                            ", expected " + t.str());
  }
  std::map<std::string, std::vector<std::string>> family_multisets;
  for (const auto& entry : specialization_symbols()) {
    const polynomial s = specialize_symbol(p, entry.symbol);
    if (s != t)
      return fail(name, "symbol " + entry.symbol.display + " gives " + s.str() +
                            ", expected " + t.str());
    std::vector<std::string> multiset;
    for (const auto& sm : symbol_summands(p, entry.symbol))
      multiset.push_back(sm.value.str());
    std::sort(multiset.begin(), multiset.end());
    auto it = family_multisets.find(to_string(entry.family));
    if (it == family_multisets.end()) {
      family_multisets.emplace(to_string(entry.family), std::move(multiset));
    } else if (it->second != multiset) {
      return fail(name, "symbol " + entry.symbol.display +
                            " has a different summand multiset than its family (" +
                            to_string(entry.family) + ")");
    }
  }
  return pass(name);
}

}  // namespace checks

inline const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = {
      "derivative-theorem", "diagonal-derivative", "partition",
      "interval-lemma",     "dualities",           "census-identity",
      "colex-agreement",    "bgn-characterization", "mp-axiom-agreement",
      "refinement",         "uniqueness-witness",  "expansion-agreement"};
  return names;
}

/// Hard cap for the exhaustive enumerations of run_checks.
inline constexpr int verify_ground_cap = 16;

/// Runs the selected checks (all of them when the selection is empty or
/// contains "all"). A check that throws is reported as failing with the
/// exception text as its counterexample.
inline verification_report run_checks(const perspective& p,
                                      const std::vector<std::string>& selection = {},
                                      const std::string& instance = "") {
  if (p.size() > verify_ground_cap)
    throw std::invalid_argument("ground set of " + std::to_string(p.size()) +
                                " elements exceeds the verification cap of " +
                                std::to_string(verify_ground_cap));
  using check_fn = std::function<check_result(const perspective&)>;
  static const std::map<std::string, check_fn> registry = {
      {"derivative-theorem", checks::derivative_theorem},
      {"diagonal-derivative", checks::diagonal_derivative},
      {"partition", checks::partition},
      {"interval-lemma", checks::interval_lemma},
      {"dualities", checks::dualities},
      {"census-identity", checks::census_identity},
      {"colex-agreement", checks::colex_agreement},
      {"bgn-characterization", checks::bgn_characterization},
      {"mp-axiom-agreement", checks::mp_axiom_agreement},
      {"refinement", checks::refinement},
      {"uniqueness-witness", checks::uniqueness_witness},
      {"expansion-agreement", checks::expansion_agreement}};

  std::vector<std::string> names = selection;
  if (names.empty() || (names.size() == 1 && names[0] == "all")) names = check_names();
  verification_report report;
  for (const auto& name : names) {
    auto it = registry.find(name);
    if (it == registry.end())
      throw std::invalid_argument("unknown check '" + name + "'");
    check_result r;
    try {
      r = it->second(p);
    } catch (const std::exception& e) {
      r = checks::fail(name, e.what());
    }
    r.instance = instance;
    report.checks.push_back(std::move(r));
  }
  return report;
}

enum class random_kind { matroid, perspective };

namespace detail {

inline std::uint64_t rnd_below(std::mt19937_64& rng, std::uint64_t k) {
  return k == 0 ? 0 : rng() % k;
}

inline graph random_multigraph(std::mt19937_64& rng, int edges, const std::string& prefix) {
  graph g;
  const int vertices = 2 + static_cast<int>(rnd_below(rng, edges + 1));
  for (int i = 0; i < vertices; ++i) g.add_vertex(prefix + std::to_string(i));
  for (int i = 1; i <= edges; ++i) {
    const int a = static_cast<int>(rnd_below(rng, vertices));
    // small bias away from loops, which otherwise dominate tiny graphs
    int b = static_cast<int>(rnd_below(rng, vertices));
    if (a == b && rnd_below(rng, 4) != 0) b = static_cast<int>(rnd_below(rng, vertices));
    g.add_edge(std::to_string(i), g.vertices()[a], g.vertices()[b]);
  }
  return g;
}

}  // namespace detail

/// Deterministic random instance: a graphic matroid as an identity
/// perspective, or a port contraction of a random graphic major (MP5, so
/// the result is always a valid perspective).
inline perspective random_instance(std::uint64_t seed, int n, random_kind kind) {
  if (n < 1 || n > 10)
    throw std::invalid_argument("random_instance: n must be between 1 and 10");
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 1);
  if (kind == random_kind::matroid)
    return perspective::identity(matroid::graphic(detail::random_multigraph(rng, n, "v")));
  const int ports = 1 + static_cast<int>(detail::rnd_below(rng, 3));
  const matroid major = matroid::graphic(detail::random_multigraph(rng, n + ports, "v"));
  subset port_set;
  while (port_set.size() < ports)
    port_set = port_set.with(static_cast<int>(detail::rnd_below(rng, n + ports)));
  return perspective::from_major(major, port_set);
}

}  // namespace mptutte
