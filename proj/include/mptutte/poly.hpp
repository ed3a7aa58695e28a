#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mptutte {

using rational = mpq_class;

/// The five polynomial variables, in canonical order.
enum class var : int { x = 0, u = 1, y = 2, v = 3, z = 4 };

inline constexpr int var_count = 5;
inline constexpr std::array<char, var_count> var_names{'x', 'u', 'y', 'v', 'z'};

inline char name_of(var w) { return var_names[static_cast<int>(w)]; }

inline std::optional<var> var_from_char(char c) {
  for (int i = 0; i < var_count; ++i)
    if (var_names[i] == c) return static_cast<var>(i);
  return std::nullopt;
}

/// Exponent vector over (x, u, y, v, z).
using exponents = std::array<int, var_count>;

inline exponents exp_of(var w, int k) {
  exponents e{};
  e[static_cast<int>(w)] = k;
  return e;
}

inline int total_degree(const exponents& e) {
  int d = 0;
  for (int k : e) d += k;
  return d;
}

// Canonical term order: total degree descending, then exponent vectors
// descending lexicographically in variable order x,u,y,v,z.
inline bool term_order_before(const exponents& a, const exponents& b) {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  return a > b;
}

/// Exact sparse polynomial in x,u,y,v,z with rational coefficients.
/// Invariant: no stored coefficient is zero, so equal term maps mean
/// equal polynomials.
class polynomial {
 public:
  polynomial() = default;
  polynomial(int c) : polynomial(rational(c)) {}
  polynomial(long c) : polynomial(rational(static_cast<signed long>(c))) {}
  polynomial(const rational& c) {
    if (c != 0) terms_[exponents{}] = c;
  }

  static polynomial variable(var w) { return monomial(1, exp_of(w, 1)); }

  static polynomial monomial(const rational& coeff, const exponents& e) {
    for (int k : e)
      if (k < 0) throw std::invalid_argument("polynomial: negative exponent");
    polynomial p;
    if (coeff != 0) p.terms_.emplace(e, coeff);
    return p;
  }

  const std::map<exponents, rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  bool is_integral() const {
    for (const auto& [e, c] : terms_)
      if (c.get_den() != 1) return false;
    return true;
  }

  int degree_in(var w) const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<int>(w)]);
    return d;
  }

  friend bool operator==(const polynomial& a, const polynomial& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const polynomial& a, const polynomial& b) {
    return !(a == b);
  }

  polynomial& operator+=(const polynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  polynomial& operator-=(const polynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  friend polynomial operator+(polynomial a, const polynomial& b) { return a += b; }
  friend polynomial operator-(polynomial a, const polynomial& b) { return a -= b; }
  friend polynomial operator-(const polynomial& a) { return polynomial(0) - a; }

  friend polynomial operator*(const polynomial& a, const polynomial& b) {
    polynomial out;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        exponents e;
        for (int i = 0; i < var_count; ++i) e[i] = ea[i] + eb[i];
        out.add_term(e, ca * cb);
      }
    return out;
  }
  polynomial& operator*=(const polynomial& o) { return *this = *this * o; }

  polynomial pow(int k) const {
    if (k < 0) throw std::invalid_argument("polynomial: negative power");
    polynomial out(1);
    for (int i = 0; i < k; ++i) out *= *this;
    return out;
  }

  /// Formal partial derivative, applied `order` times.
  polynomial derivative(var w, int order = 1) const {
    if (order < 0) throw std::invalid_argument("polynomial: negative derivative order");
    const int wi = static_cast<int>(w);
    polynomial cur = *this;
    for (int step = 0; step < order; ++step) {
      polynomial next;
      for (const auto& [e, c] : cur.terms_) {
        if (e[wi] == 0) continue;
        exponents d = e;
        d[wi] -= 1;
        next.add_term(d, c * e[wi]);
      }
      cur = std::move(next);
    }
    return cur;
  }

  /// Simultaneous substitution; unbound variables pass through.
  polynomial substitute(const std::map<var, polynomial>& bindings) const {
    // power cache per bound variable
    std::array<std::vector<polynomial>, var_count> powers;
    auto power = [&](int vi, int k) -> const polynomial& {
      auto& cache = powers[vi];
      if (cache.empty()) cache.push_back(polynomial(1));
      while (static_cast<int>(cache.size()) <= k)
        cache.push_back(cache.back() * bindings.at(static_cast<var>(vi)));
      return cache[k];
    };
    polynomial out;
    for (const auto& [e, c] : terms_) {
      exponents passthrough{};
      polynomial term = polynomial(c);
      bool any_bound = false;
      for (int i = 0; i < var_count; ++i) {
        if (bindings.count(static_cast<var>(i))) {
          if (e[i] > 0) {
            term *= power(i, e[i]);
            any_bound = true;
          }
        } else {
          passthrough[i] = e[i];
        }
      }
      (void)any_bound;
      out += term * monomial(1, passthrough);
    }
    return out;
  }

  /// Exact evaluation; every variable that occurs must be bound.
  rational evaluate(const std::map<var, rational>& point) const {
    rational total = 0;
    for (const auto& [e, c] : terms_) {
      rational term = c;
      for (int i = 0; i < var_count; ++i) {
        if (e[i] == 0) continue;
        auto it = point.find(static_cast<var>(i));
        if (it == point.end())
          throw std::invalid_argument(std::string("evaluate: unbound variable '") +
                                      var_names[i] + "'");
        rational p = 1;
        for (int k = 0; k < e[i]; ++k) p *= it->second;
        term *= p;
      }
      total += term;
    }
    return total;
  }

  /// Polynomial coefficient of w^k (the degree-k slice with w removed).
  polynomial coefficient_of(var w, int k) const {
    const int wi = static_cast<int>(w);
    polynomial out;
    for (const auto& [e, c] : terms_) {
      if (e[wi] != k) continue;
      exponents d = e;
      d[wi] = 0;
      out.add_term(d, c);
    }
    return out;
  }

  /// Deterministic canonical rendering, e.g. "x^2 + x*y + y^2 + x + y".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::vector<const std::pair<const exponents, rational>*> order;
    order.reserve(terms_.size());
    for (const auto& t : terms_) order.push_back(&t);
    std::sort(order.begin(), order.end(), [](auto* a, auto* b) {
      return term_order_before(a->first, b->first);
    });
    std::ostringstream os;
    bool first = true;
    for (auto* t : order) {
      const rational& c = t->second;
      const bool neg = sgn(c) < 0;
      if (first) {
        if (neg) os << "-";
        first = false;
      } else {
        os << (neg ? " - " : " + ");
      }
      os << render_magnitude(abs(c), t->first);
    }
    return os.str();
  }

  /// Parses the canonical grammar (plus redundant whitespace).
  static polynomial parse(std::string_view text);

 private:
  void add_term(const exponents& e, const rational& c) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      if (c != 0) terms_.emplace(e, c);
      return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }

  static std::string render_magnitude(const rational& c, const exponents& e) {
    std::ostringstream os;
    std::vector<std::string> factors;
    for (int i = 0; i < var_count; ++i) {
      if (e[i] == 0) continue;
      std::string f(1, var_names[i]);
      if (e[i] > 1) f += "^" + std::to_string(e[i]);
      factors.push_back(std::move(f));
    }
    if (factors.empty()) {
      os << c.get_str();
      return os.str();
    }
    bool wrote = false;
    if (c != 1) {
      os << c.get_str();
      wrote = true;
    }
    for (const auto& f : factors) {
      if (wrote) os << "*";
      os << f;
      wrote = true;
    }
    return os.str();
  }

  std::map<exponents, rational> terms_;
};

namespace detail {

class poly_parser {
 public:
  explicit poly_parser(std::string_view text) : text_(text) {}

  polynomial run() {
    polynomial out;
    skip_ws();
    if (done()) fail("empty input");
    bool neg = take_sign();
    out += signed_term(neg);
    skip_ws();
    while (!done()) {
      char c = text_[pos_];
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      ++pos_;
      skip_ws();
      out += signed_term(c == '-');
      skip_ws();
    }
    return out;
  }

 private:
  bool done() const { return pos_ >= text_.size(); }
  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("polynomial parse error at offset " +
                                std::to_string(pos_) + ": " + what);
  }
  bool take_sign() {
    if (!done() && text_[pos_] == '-') {
      ++pos_;
      skip_ws();
      return true;
    }
    if (!done() && text_[pos_] == '+') {
      ++pos_;
      skip_ws();
    }
    return false;
  }
  std::string integer() {
    std::string digits;
    while (!done() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      digits += text_[pos_++];
    }
    if (digits.empty()) fail("expected integer");
    return digits;
  }

  polynomial signed_term(bool neg) {
    rational coeff = 1;
    exponents e{};
    bool saw_factor = false;
    skip_ws();
    if (!done() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      mpz_class num(integer());
      mpz_class den(1);
      skip_ws();
      if (!done() && text_[pos_] == '/') {
        ++pos_;
        skip_ws();
        den = mpz_class(integer());
        if (den == 0) fail("zero denominator");
        skip_ws();
      }
      coeff = rational(num, den);
      coeff.canonicalize();
      if (!done() && text_[pos_] == '*') {
        ++pos_;
        skip_ws();
        factor(e);
        saw_factor = true;
      }
    } else {
      factor(e);
      saw_factor = true;
    }
    skip_ws();
    while (saw_factor && !done() && text_[pos_] == '*') {
      ++pos_;
      skip_ws();
      factor(e);
      skip_ws();
    }
    if (neg) coeff = -coeff;
    return polynomial::monomial(coeff, e);
  }

  void factor(exponents& e) {
    if (done()) fail("expected variable");
    auto w = var_from_char(text_[pos_]);
    if (!w) fail(std::string("unknown variable '") + text_[pos_] + "'");
    ++pos_;
    skip_ws();
    int k = 1;
    if (!done() && text_[pos_] == '^') {
      ++pos_;
      skip_ws();
      k = std::stoi(integer());
    }
    e[static_cast<int>(*w)] += k;
  }

  std::string_view text_;
  size_t pos_ = 0;
};

}  // namespace detail

inline polynomial polynomial::parse(std::string_view text) {
  return detail::poly_parser(text).run();
}

inline mpz_class factorial(int k) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(k));
  return out;
}

inline mpz_class binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return out;
}

}  // namespace mptutte
