#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qstirling/errors.hpp"

namespace qstirling {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

using Exponent = std::vector<int>;

// Exact sparse polynomial over a fixed, named variable list. Terms are kept
// in a map keyed by exponent vector, so iteration is lexicographic; zero
// coefficients are never stored.
template <class Coef>
class SparsePolynomial {
 public:
  using Terms = std::map<Exponent, Coef>;

  SparsePolynomial() = default;
  explicit SparsePolynomial(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  static SparsePolynomial constant(std::vector<std::string> vars, const Coef& c) {
    SparsePolynomial p(std::move(vars));
    p.add_term(Exponent(p.vars_.size(), 0), c);
    return p;
  }

  static SparsePolynomial monomial(std::vector<std::string> vars, Exponent e, const Coef& c = Coef(1)) {
    SparsePolynomial p(std::move(vars));
    p.add_term(std::move(e), c);
    return p;
  }

  static SparsePolynomial variable(std::vector<std::string> vars, std::size_t index) {
    Exponent e(vars.size(), 0);
    e.at(index) = 1;
    return monomial(std::move(vars), std::move(e));
  }

  const std::vector<std::string>& vars() const { return vars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Coef coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Coef(0) : it->second;
  }

  void add_term(Exponent e, const Coef& c) {
    if (e.size() != vars_.size()) throw InvalidInput("exponent arity does not match variables");
    for (int x : e) {
      if (x < 0) throw InvalidInput("negative exponent");
    }
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(std::move(e), c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  // Degree of every term if they all agree; nullopt for mixed degrees or zero.
  std::optional<int> homogeneous_degree() const {
    std::optional<int> d;
    for (const auto& [e, c] : terms_) {
      int s = 0;
      for (int x : e) s += x;
      if (d && *d != s) return std::nullopt;
      d = s;
    }
    return d;
  }

  int degree_in(std::size_t var) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.at(var));
    return d;
  }

  // Coefficient of var^power, as a polynomial in the remaining variables.
  SparsePolynomial slice(std::size_t var, int power) const {
    SparsePolynomial out(without(var));
    for (const auto& [e, c] : terms_) {
      if (e.at(var) != power) continue;
      Exponent rest = e;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(var));
      out.add_term(std::move(rest), c);
    }
    return out;
  }

  // Substitutes a constant for one variable and drops it.
  SparsePolynomial specialize(std::size_t var, const Coef& value) const {
    SparsePolynomial out(without(var));
    for (const auto& [e, c] : terms_) {
      Exponent rest = e;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(var));
      Coef v = c;
      for (int i = 0; i < e.at(var); ++i) v *= value;
      out.add_term(std::move(rest), v);
    }
    return out;
  }

  Coef evaluate(const std::vector<Coef>& point) const {
    if (point.size() != vars_.size()) throw InvalidInput("evaluation point arity mismatch");
    Coef total(0);
    for (const auto& [e, c] : terms_) {
      Coef v = c;
      for (std::size_t i = 0; i < e.size(); ++i) {
        for (int k = 0; k < e[i]; ++k) v *= point[i];
      }
      total += v;
    }
    return total;
  }

  // Dense coefficient list of a univariate polynomial (index = power).
  std::vector<Coef> univariate() const {
    if (vars_.size() != 1) throw InvalidInput("univariate() needs exactly one variable");
    std::vector<Coef> out(static_cast<std::size_t>(std::max(degree_in(0) + 1, 0)), Coef(0));
    for (const auto& [e, c] : terms_) out[static_cast<std::size_t>(e[0])] = c;
    return out;
  }

  template <class Other>
  SparsePolynomial<Other> cast() const {
    SparsePolynomial<Other> out(vars_);
    for (const auto& [e, c] : terms_) out.add_term(e, Other(c));
    return out;
  }

  SparsePolynomial& operator+=(const SparsePolynomial& o) {
    require_same_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  SparsePolynomial& operator-=(const SparsePolynomial& o) {
    require_same_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  SparsePolynomial& operator*=(const Coef& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  friend SparsePolynomial operator+(SparsePolynomial a, const SparsePolynomial& b) { return a += b; }
  friend SparsePolynomial operator-(SparsePolynomial a, const SparsePolynomial& b) { return a -= b; }
  friend SparsePolynomial operator-(SparsePolynomial a) { return a *= Coef(-1); }
  friend SparsePolynomial operator*(SparsePolynomial a, const Coef& s) { return a *= s; }
  friend SparsePolynomial operator*(const Coef& s, SparsePolynomial a) { return a *= s; }

  friend SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b) {
    a.require_same_vars(b);
    SparsePolynomial out(a.vars_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Exponent e(ea.size());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        out.add_term(std::move(e), ca * cb);
      }
    }
    return out;
  }
  SparsePolynomial& operator*=(const SparsePolynomial& o) { return *this = *this * o; }

  SparsePolynomial pow(unsigned k) const {
    SparsePolynomial result = constant(vars_, Coef(1));
    SparsePolynomial base = *this;
    while (k > 0) {
      if (k & 1U) result *= base;
      k >>= 1U;
      if (k > 0) base *= base;
    }
    return result;
  }

  friend bool operator==(const SparsePolynomial& a, const SparsePolynomial& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  // e.g. "2*x^2*y^2*z + x*y^2*z^2"; terms in decreasing exponent order.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      Coef mag = c < 0 ? Coef(-c) : c;
      os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
      first = false;
      bool constant_term = true;
      std::ostringstream mono;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!constant_term) mono << '*';
        constant_term = false;
        mono << vars_[i];
        if (e[i] > 1) mono << '^' << e[i];
      }
      if (constant_term) {
        os << mag;
      } else {
        if (mag != 1) os << mag << '*';
        os << mono.str();
      }
    }
    return os.str();
  }

 private:
  std::vector<std::string> without(std::size_t var) const {
    std::vector<std::string> rest = vars_;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(var));
    return rest;
  }

  void require_same_vars(const SparsePolynomial& o) const {
    if (vars_ != o.vars_) throw InvalidInput("polynomial variable lists differ");
  }

  std::vector<std::string> vars_;
  Terms terms_;
};

using Polynomial = SparsePolynomial<BigInt>;
using RationalPolynomial = SparsePolynomial<BigRational>;

// Hooks that let TruncatedSeries work over scalars and polynomial rings.
inline BigInt one_like(const BigInt&) { return 1; }
inline BigRational one_like(const BigRational&) { return 1; }
template <class C>
SparsePolynomial<C> one_like(const SparsePolynomial<C>& p) {
  return SparsePolynomial<C>::constant(p.vars(), C(1));
}

inline std::optional<BigInt> unit_inverse(const BigInt& a) {
  if (a == 1 || a == -1) return a;
  return std::nullopt;
}
inline std::optional<BigRational> unit_inverse(const BigRational& a) {
  if (a == 0) return std::nullopt;
  return BigRational(1) / a;
}
template <class C>
std::optional<SparsePolynomial<C>> unit_inverse(const SparsePolynomial<C>& p) {
  if (p.size() != 1) return std::nullopt;
  const auto& [e, c] = *p.terms().begin();
  for (int x : e) {
    if (x != 0) return std::nullopt;
  }
  auto inv = unit_inverse(c);
  if (!inv) return std::nullopt;
  return SparsePolynomial<C>::constant(p.vars(), *inv);
}

inline BigRational divide_by(const BigRational& a, int d) { return a / d; }
template <class C>
SparsePolynomial<C> divide_by(const SparsePolynomial<C>& p, int d) {
  SparsePolynomial<C> out(p.vars());
  for (const auto& [e, c] : p.terms()) out.add_term(e, divide_by(c, d));
  return out;
}

inline BigInt times_int(const BigInt& a, int k) { return a * k; }
inline BigRational times_int(const BigRational& a, int k) { return a * k; }
template <class C>
SparsePolynomial<C> times_int(const SparsePolynomial<C>& p, int k) {
  return p * C(k);
}

inline bool is_zero_coef(const BigInt& a) { return a == 0; }
inline bool is_zero_coef(const BigRational& a) { return a == 0; }
template <class C>
bool is_zero_coef(const SparsePolynomial<C>& p) {
  return p.is_zero();
}

// Power series a_0 + a_1 u + ... + a_N u^N modulo u^{N+1}. Binary operations
// demand equal truncation orders; mixing orders throws instead of silently
// truncating.
template <class Coef>
class TruncatedSeries {
 public:
  // `zero` fixes the coefficient ring (e.g. the variable list of polynomial
  // coefficients).
  TruncatedSeries(int order, Coef zero) : coefs_(static_cast<std::size_t>(order + 1), zero), zero_(zero) {
    if (order < 0) throw InvalidInput("series order must be nonnegative");
  }

  static TruncatedSeries from_coefficients(int order, Coef zero, const std::vector<Coef>& coefs) {
    TruncatedSeries s(order, zero);
    for (std::size_t i = 0; i < coefs.size() && i < s.coefs_.size(); ++i) s.coefs_[i] = coefs[i];
    return s;
  }

  int order() const { return static_cast<int>(coefs_.size()) - 1; }
  const Coef& operator[](std::size_t i) const { return coefs_.at(i); }
  Coef& operator[](std::size_t i) { return coefs_.at(i); }
  const std::vector<Coef>& coefficients() const { return coefs_; }
  const Coef& zero() const { return zero_; }

  TruncatedSeries& operator+=(const TruncatedSeries& o) {
    require_same_order(o);
    for (std::size_t i = 0; i < coefs_.size(); ++i) coefs_[i] += o.coefs_[i];
    return *this;
  }
  TruncatedSeries& operator-=(const TruncatedSeries& o) {
    require_same_order(o);
    for (std::size_t i = 0; i < coefs_.size(); ++i) coefs_[i] -= o.coefs_[i];
    return *this;
  }
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.require_same_order(b);
    TruncatedSeries out(a.order(), a.zero_);
    for (std::size_t i = 0; i < a.coefs_.size(); ++i) {
      if (is_zero_coef(a.coefs_[i])) continue;
      for (std::size_t j = 0; i + j < a.coefs_.size(); ++j) {
        if (is_zero_coef(b.coefs_[j])) continue;
        out.coefs_[i + j] += a.coefs_[i] * b.coefs_[j];
      }
    }
    return out;
  }
  TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }

  TruncatedSeries scaled(const Coef& s) const {
    TruncatedSeries out = *this;
    for (auto& c : out.coefs_) c = c * s;
    return out;
  }

  TruncatedSeries pow(unsigned k) const {
    TruncatedSeries result(order(), zero_);
    result.coefs_[0] = one_like(zero_);
    TruncatedSeries base = *this;
    while (k > 0) {
      if (k & 1U) result *= base;
      k >>= 1U;
      if (k > 0) base *= base;
    }
    return result;
  }

  // Multiplicative inverse; the constant term must be a unit.
  TruncatedSeries inverse() const {
    auto inv0 = unit_inverse(coefs_[0]);
    if (!inv0) throw InvalidInput("series constant term is not invertible");
    TruncatedSeries out(order(), zero_);
    out.coefs_[0] = *inv0;
    for (std::size_t n = 1; n < coefs_.size(); ++n) {
      Coef acc = zero_;
      for (std::size_t i = 1; i <= n; ++i) acc += coefs_[i] * out.coefs_[n - i];
      out.coefs_[n] = -(acc * *inv0);
    }
    return out;
  }

  // exp of a series with zero constant term: n b_n = sum_k k a_k b_{n-k}.
  TruncatedSeries exp() const {
    if (!is_zero_coef(coefs_[0])) throw InvalidInput("exp needs a zero constant term");
    TruncatedSeries out(order(), zero_);
    out.coefs_[0] = one_like(zero_);
    for (std::size_t n = 1; n < coefs_.size(); ++n) {
      Coef acc = zero_;
      for (std::size_t k = 1; k <= n; ++k) {
        acc += times_int(coefs_[k] * out.coefs_[n - k], static_cast<int>(k));
      }
      out.coefs_[n] = divide_by(acc, static_cast<int>(n));
    }
    return out;
  }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.coefs_ == b.coefs_;
  }

 private:
  void require_same_order(const TruncatedSeries& o) const {
    if (o.order() != order()) {
      throw InvalidInput("series truncation orders differ (" + std::to_string(order()) + " vs " +
                         std::to_string(o.order()) + ")");
    }
  }

  std::vector<Coef> coefs_;
  Coef zero_;
};

}  // namespace qstirling
