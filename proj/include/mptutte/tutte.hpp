#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "mptutte/perspective.hpp"
#include "mptutte/poly.hpp"

namespace mptutte {

namespace detail {

inline void require_nonnegative_rcd(const perspective& p, subset a, int rcd) {
  if (rcd < 0)
    throw std::invalid_argument("negative rank codrop at " + p.ground().render(a) +
                                ": the pair is not a matroid perspective");
}

/// Powers of a fixed polynomial, grown on demand.
class power_cache {
 public:
  explicit power_cache(polynomial base) : base_(std::move(base)) {
    powers_.push_back(polynomial(1));
  }
  const polynomial& operator[](int k) {
    while (static_cast<int>(powers_.size()) <= k)
      powers_.push_back(powers_.back() * base_);
    return powers_[k];
  }

 private:
  polynomial base_;
  std::vector<polynomial> powers_;
};

}  // namespace detail

/// Corank–nullity expansion over all subsets:
///   t(M,M';x,y,z) = Σ (x−1)^{r(M')−r_M'(A)} (y−1)^{|A|−r_M(A)} z^{rcd(A)}.
/// For identity perspectives this is the classical Tutte polynomial.
inline polynomial tutte_corank_nullity(const perspective& p) {
  detail::power_cache xm1(polynomial::variable(var::x) - 1);
  detail::power_cache ym1(polynomial::variable(var::y) - 1);
  polynomial total;
  for_each_subset(p.size(), [&](subset a) {
    const int cr = p.m_prime().rank() - p.m_prime().rank_of(a);
    const int nl = a.size() - p.m().rank_of(a);
    const int rcd = p.rcd(a);
    detail::require_nonnegative_rcd(p, a, rcd);
    total += xm1[cr] * ym1[nl] * polynomial::monomial(1, exp_of(var::z, rcd));
  });
  return total;
}

/// Activity expansion over independent/spanning sets:
///   t(M,M';x,y,z) = Σ x^{iota'(A)} y^{eps(A)} z^{rcd(A)}.
inline polynomial tutte_indspan(const perspective& p) {
  polynomial total;
  for (subset b : p.ind_span_sets()) {
    const activity_profile pr = p.profile(b);
    detail::require_nonnegative_rcd(p, b, pr.rcd);
    exponents e{};
    e[static_cast<int>(var::x)] = pr.iota_prime;
    e[static_cast<int>(var::y)] = pr.eps;
    e[static_cast<int>(var::z)] = pr.rcd;
    total += polynomial::monomial(1, e);
  }
  return total;
}

/// Which two statistics are constrained to (dp, dq); the other two appear
/// as the x and y exponents. The z exponent is always the rank codrop.
enum class derivative_variant { cr_nl, i_nl, cr_e, i_e };

inline const char* to_string(derivative_variant v) {
  switch (v) {
    case derivative_variant::cr_nl: return "cr-nl";
    case derivative_variant::i_nl: return "i-nl";
    case derivative_variant::cr_e: return "cr-e";
    case derivative_variant::i_e: return "i-e";
  }
  return "?";
}

inline derivative_variant derivative_variant_from(const std::string& name) {
  if (name == "cr-nl") return derivative_variant::cr_nl;
  if (name == "i-nl") return derivative_variant::i_nl;
  if (name == "cr-e") return derivative_variant::cr_e;
  if (name == "i-e") return derivative_variant::i_e;
  throw std::invalid_argument("unknown derivative variant '" + name +
                              "' (expected cr-nl, i-nl, cr-e or i-e)");
}

struct expansion_summand {
  subset set;
  polynomial value;
};

/// Per-subset summands of the (dp, dq) derivative cell, without the dp!dq!
/// factor: for each subset matching the variant's two constraints, the
/// variant's monomial in x, y times z^{rcd}.
inline std::vector<expansion_summand> derivative_summands(const perspective& p, int dp,
                                                          int dq, derivative_variant v) {
  if (dp < 0 || dq < 0)
    throw std::invalid_argument("derivative orders must be nonnegative");
  std::vector<expansion_summand> out;
  for_each_subset(p.size(), [&](subset a) {
    const activity_profile pr = p.profile(a);
    int c1 = 0, c2 = 0, ex = 0, ey = 0;
    switch (v) {
      case derivative_variant::cr_nl: c1 = pr.cr_prime, c2 = pr.nl, ex = pr.iota_prime, ey = pr.eps; break;
      case derivative_variant::i_nl:  c1 = pr.iota_prime, c2 = pr.nl, ex = pr.cr_prime, ey = pr.eps; break;
      case derivative_variant::cr_e:  c1 = pr.cr_prime, c2 = pr.eps, ex = pr.iota_prime, ey = pr.nl; break;
      case derivative_variant::i_e:   c1 = pr.iota_prime, c2 = pr.eps, ex = pr.cr_prime, ey = pr.nl; break;
    }
    if (c1 != dp || c2 != dq) return;
    detail::require_nonnegative_rcd(p, a, pr.rcd);
    exponents e{};
    e[static_cast<int>(var::x)] = ex;
    e[static_cast<int>(var::y)] = ey;
    e[static_cast<int>(var::z)] = pr.rcd;
    out.push_back({a, polynomial::monomial(1, e)});
  });
  return out;
}

/// dp!dq! times the activity generating function of subsets in the (dp, dq)
/// cell; equals the formal derivative d^{dp+dq} t / dx^{dp} dy^{dq}.
inline polynomial derivative_gf(const perspective& p, int dp, int dq,
                                derivative_variant v = derivative_variant::cr_nl) {
  polynomial total;
  for (const auto& s : derivative_summands(p, dp, dq, v)) total += s.value;
  return polynomial(rational(factorial(dp) * factorial(dq))) * total;
}

/// dp! times Σ x^{iota'+eps} z^{rcd} over subsets with cr' + nl = dp;
/// equals d^{dp} t(x,x,z) / dx^{dp}.
inline polynomial diagonal_derivative_gf(const perspective& p, int dp) {
  if (dp < 0) throw std::invalid_argument("derivative order must be nonnegative");
  polynomial total;
  for_each_subset(p.size(), [&](subset a) {
    const activity_profile pr = p.profile(a);
    if (pr.cr_prime + pr.nl != dp) return;
    detail::require_nonnegative_rcd(p, a, pr.rcd);
    exponents e{};
    e[static_cast<int>(var::x)] = pr.iota_prime + pr.eps;
    e[static_cast<int>(var::z)] = pr.rcd;
    total += polynomial::monomial(1, e);
  });
  return polynomial(rational(factorial(dp))) * total;
}

/// Five-variable monomial of one subset: x^{iota'} u^{cr'} y^{eps} v^{nl} z^{rcd}.
inline polynomial five_var_monomial(const activity_profile& pr) {
  exponents e{};
  e[static_cast<int>(var::x)] = pr.iota_prime;
  e[static_cast<int>(var::u)] = pr.cr_prime;
  e[static_cast<int>(var::y)] = pr.eps;
  e[static_cast<int>(var::v)] = pr.nl;
  e[static_cast<int>(var::z)] = pr.rcd;
  return polynomial::monomial(1, e);
}

/// Full five-variable expansion Σ_A x^{iota'} u^{cr'} y^{eps} v^{nl} z^{rcd};
/// equals t(M,M'; x+u, y+v, z).
inline polynomial five_var(const perspective& p) {
  polynomial total;
  for_each_subset(p.size(), [&](subset a) {
    const activity_profile pr = p.profile(a);
    detail::require_nonnegative_rcd(p, a, pr.rcd);
    total += five_var_monomial(pr);
  });
  return total;
}

enum class expansion_family_id { f1, f2, f3, f3b, f3c, f3d, f3e, f4, f5 };

inline const std::vector<std::pair<expansion_family_id, std::string>>&
expansion_family_names() {
  static const std::vector<std::pair<expansion_family_id, std::string>> names = {
      {expansion_family_id::f1, "1"},   {expansion_family_id::f2, "2"},
      {expansion_family_id::f3, "3"},   {expansion_family_id::f3b, "3b"},
      {expansion_family_id::f3c, "3c"}, {expansion_family_id::f3d, "3d"},
      {expansion_family_id::f3e, "3e"}, {expansion_family_id::f4, "4"},
      {expansion_family_id::f5, "5"}};
  return names;
}

inline std::string to_string(expansion_family_id f) {
  for (const auto& [id, name] : expansion_family_names())
    if (id == f) return name;
  return "?";
}

inline expansion_family_id expansion_family_from(const std::string& name) {
  for (const auto& [id, n] : expansion_family_names())
    if (n == name) return id;
  throw std::invalid_argument("unknown expansion family '" + name +
                              "' (expected 1, 2, 3, 3b, 3c, 3d, 3e, 4 or 5)");
}

struct expansion {
  std::vector<expansion_summand> summands;
  polynomial total;
};

/// Per-subset summands of one of the nine expansion families, using each
/// family's displayed representative formula; the total is always t.
inline expansion expansion_family(const perspective& p, expansion_family_id f) {
  detail::power_cache xm1(polynomial::variable(var::x) - 1);
  detail::power_cache ym1(polynomial::variable(var::y) - 1);
  detail::power_cache xhalf(polynomial::monomial(rational(1, 2), exp_of(var::x, 1)));
  detail::power_cache yhalf(polynomial::monomial(rational(1, 2), exp_of(var::y, 1)));
  detail::power_cache xs(polynomial::variable(var::x));
  detail::power_cache ys(polynomial::variable(var::y));

  expansion out;
  for_each_subset(p.size(), [&](subset a) {
    const activity_profile pr = p.profile(a);
    polynomial value;
    switch (f) {
      case expansion_family_id::f1:
        value = xm1[pr.cr_prime] * ym1[pr.nl];
        break;
      case expansion_family_id::f2:
        if (pr.cr_prime != 0 || pr.nl != 0) return;  // independent/spanning only
        value = xs[pr.iota_prime] * ys[pr.eps];
        break;
      case expansion_family_id::f3:
        value = xhalf[pr.cr_prime + pr.iota_prime] * yhalf[pr.nl + pr.eps];
        break;
      case expansion_family_id::f3b:
        value = xhalf[pr.cr_prime + pr.iota_prime] * ym1[pr.nl];
        break;
      case expansion_family_id::f3c:
        if (pr.eps != 0) return;  // externally inactive in M only
        value = xhalf[pr.cr_prime + pr.iota_prime] * ys[pr.nl];
        break;
      case expansion_family_id::f3d:
        value = xm1[pr.cr_prime] * yhalf[pr.nl + pr.eps];
        break;
      case expansion_family_id::f3e:
        if (pr.iota_prime != 0) return;  // internally inactive in M' only
        value = xs[pr.cr_prime] * yhalf[pr.nl + pr.eps];
        break;
      case expansion_family_id::f4:
        if (pr.cr_prime != 0) return;  // spanning in M' only
        value = xs[pr.iota_prime] * ym1[pr.nl];
        break;
      case expansion_family_id::f5:
        if (pr.nl != 0) return;  // independent in M only
        value = xm1[pr.cr_prime] * ys[pr.eps];
        break;
    }
    detail::require_nonnegative_rcd(p, a, pr.rcd);
    value *= polynomial::monomial(1, exp_of(var::z, pr.rcd));
    out.total += value;
    out.summands.push_back({a, std::move(value)});
  });
  if (!out.total.is_integral())
    throw std::logic_error("expansion family " + to_string(f) +
                           " summed to a non-integral polynomial");
  return out;
}

/// Values substituted for x, u, y, v in the five-variable expansion; each
/// binding uses only the variables x, y and constants.
struct specialization_symbol {
  polynomial bind_x, bind_u, bind_y, bind_v;
  std::string display;  // e.g. "[[x-1,1,y-1,1]]"
};

/// Substitutes the symbol's four bindings into the five-variable expansion.
inline polynomial specialize_symbol(const perspective& p, const specialization_symbol& s) {
  return five_var(p).substitute({{var::x, s.bind_x},
                                 {var::u, s.bind_u},
                                 {var::y, s.bind_y},
                                 {var::v, s.bind_v}});
}

/// Per-subset summands of the five-variable expansion under a symbol's
/// bindings; zero summands are dropped.
inline std::vector<expansion_summand> symbol_summands(const perspective& p,
                                                      const specialization_symbol& s) {
  detail::power_cache px(s.bind_x), pu(s.bind_u), py(s.bind_y), pv(s.bind_v);
  std::vector<expansion_summand> out;
  for_each_subset(p.size(), [&](subset a) {
    const activity_profile pr = p.profile(a);
    detail::require_nonnegative_rcd(p, a, pr.rcd);
    polynomial value = px[pr.iota_prime] * pu[pr.cr_prime] * py[pr.eps] * pv[pr.nl] *
                       polynomial::monomial(1, exp_of(var::z, pr.rcd));
    if (value.is_zero()) return;
    out.push_back({a, std::move(value)});
  });
  return out;
}

struct symbol_entry {
  expansion_family_id family;
  specialization_symbol symbol;
};

/// The 25 specialization symbols, grouped into the nine families whose
/// expansions share summands.
inline const std::vector<symbol_entry>& specialization_symbols() {
  static const std::vector<symbol_entry> table = [] {
    const polynomial X = polynomial::variable(var::x);
    const polynomial Y = polynomial::variable(var::y);
    const polynomial Xm1 = X - 1, Ym1 = Y - 1;
    const polynomial Xh = polynomial::monomial(rational(1, 2), exp_of(var::x, 1));
    const polynomial Yh = polynomial::monomial(rational(1, 2), exp_of(var::y, 1));
    const polynomial one(1), zero(0);
    auto sym = [](polynomial bx, polynomial bu, polynomial by, polynomial bv,
                  std::string text) {
      return specialization_symbol{std::move(bx), std::move(bu), std::move(by),
                                   std::move(bv), std::move(text)};
    };
    std::vector<symbol_entry> t;
    using id = expansion_family_id;
    t.push_back({id::f1, sym(Xm1, one, Ym1, one, "[[x-1,1,y-1,1]]")});
    t.push_back({id::f1, sym(Xm1, one, one, Ym1, "[[x-1,1,1,y-1]]")});
    t.push_back({id::f1, sym(one, Xm1, Ym1, one, "[[1,x-1,y-1,1]]")});
    t.push_back({id::f1, sym(one, Xm1, one, Ym1, "[[1,x-1,1,y-1]]")});
    t.push_back({id::f2, sym(zero, X, zero, Y, "[[0,x,0,y]]")});
    t.push_back({id::f2, sym(zero, X, Y, zero, "[[0,x,y,0]]")});
    t.push_back({id::f2, sym(X, zero, zero, Y, "[[x,0,0,y]]")});
    t.push_back({id::f2, sym(X, zero, Y, zero, "[[x,0,y,0]]")});
    t.push_back({id::f3, sym(Xh, Xh, Yh, Yh, "[[x/2,x/2,y/2,y/2]]")});
    t.push_back({id::f3b, sym(Xh, Xh, Ym1, one, "[[x/2,x/2,y-1,1]]")});
    t.push_back({id::f3b, sym(Xh, Xh, one, Ym1, "[[x/2,x/2,1,y-1]]")});
    t.push_back({id::f3c, sym(Xh, Xh, Y, zero, "[[x/2,x/2,y,0]]")});
    t.push_back({id::f3c, sym(Xh, Xh, zero, Y, "[[x/2,x/2,0,y]]")});
    t.push_back({id::f3d, sym(Xm1, one, Yh, Yh, "[[x-1,1,y/2,y/2]]")});
    t.push_back({id::f3d, sym(one, Xm1, Yh, Yh, "[[1,x-1,y/2,y/2]]")});
    t.push_back({id::f3e, sym(X, zero, Yh, Yh, "[[x,0,y/2,y/2]]")});
    t.push_back({id::f3e, sym(zero, X, Yh, Yh, "[[0,x,y/2,y/2]]")});
    t.push_back({id::f4, sym(zero, X, Ym1, one, "[[0,x,y-1,1]]")});
    t.push_back({id::f4, sym(zero, X, one, Ym1, "[[0,x,1,y-1]]")});
    t.push_back({id::f4, sym(X, zero, Ym1, one, "[[x,0,y-1,1]]")});
    t.push_back({id::f4, sym(X, zero, one, Ym1, "[[x,0,1,y-1]]")});
    t.push_back({id::f5, sym(Xm1, one, zero, Y, "[[x-1,1,0,y]]")});
    t.push_back({id::f5, sym(one, Xm1, zero, Y, "[[1,x-1,0,y]]")});
    t.push_back({id::f5, sym(Xm1, one, Y, zero, "[[x-1,1,y,0]]")});
    t.push_back({id::f5, sym(one, Xm1, Y, zero, "[[1,x-1,y,0]]")});
    return t;
  }();
  return table;
}

}  // namespace mptutte
