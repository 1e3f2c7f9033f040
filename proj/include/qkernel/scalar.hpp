#pragma once

// The coefficient field of the kernel: fractions of multivariate Laurent
// polynomials over Q(i), kept in a canonical form so that equality is
// structural comparison.
//
// Canonical form: numerator a Laurent polynomial, denominator a true
// polynomial with per-symbol minimum exponent zero, gcd(num, den) a unit, and
// the lexicographically greatest denominator term scaled to coefficient one.

#include <map>
#include <string>
#include <utility>

#include "qkernel/laurent.hpp"

namespace qk {

class Scalar {
 public:
  Scalar() : num_(), den_(LaurentPoly::one()) {}
  Scalar(int n) : Scalar(GaussianRational(n)) {}   // NOLINT(google-explicit-constructor)
  Scalar(long n) : Scalar(GaussianRational(n)) {}  // NOLINT(google-explicit-constructor)
  Scalar(GaussianRational c)                       // NOLINT(google-explicit-constructor)
      : num_(LaurentPoly::constant(std::move(c))), den_(LaurentPoly::one()) {}
  explicit Scalar(LaurentPoly p) : num_(std::move(p)), den_(LaurentPoly::one()) {}

  Scalar(LaurentPoly numerator, LaurentPoly denominator)
      : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_.is_zero()) throw DivisionByZero("zero denominator");
    canonicalize();
  }

  static Scalar i() { return Scalar(GaussianRational::i()); }
  static Scalar fraction(long num, long den) { return Scalar(GaussianRational::fraction(num, den)); }
  static Scalar symbol(int sym, int32_t exp = 1) { return Scalar(LaurentPoly::symbol(sym, exp)); }
  /// q = s^2: every half-integer power of q is a Laurent monomial in s.
  static Scalar q(int32_t exp = 1) { return symbol(kSymS, 2 * exp); }

  const LaurentPoly& numerator() const { return num_; }
  const LaurentPoly& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_rational() const { return num_.is_constant() && den_.is_one(); }

  GaussianRational rational_value() const {
    if (!is_rational()) throw Error("scalar is not a rational constant");
    return num_.constant_value();
  }

  friend Scalar operator+(const Scalar& x, const Scalar& y) {
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    if (x.den_.is_one() && y.den_.is_one()) {
      Scalar r;
      r.num_ = x.num_ + y.num_;
      return r;
    }
    if (x.den_ == y.den_) return Scalar(x.num_ + y.num_, x.den_);
    // Combine over the lcm of the denominators to keep degrees low.
    LaurentPoly g = poly_gcd(x.den_, y.den_);
    if (g.is_one()) return Scalar(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
    LaurentPoly cx = exact_divide(y.den_, g);
    LaurentPoly cy = exact_divide(x.den_, g);
    return Scalar(x.num_ * cx + y.num_ * cy, x.den_ * cx);
  }
  friend Scalar operator-(const Scalar& x, const Scalar& y) {
    if (y.is_zero()) return x;
    if (x.is_zero()) return -y;
    if (x.den_.is_one() && y.den_.is_one()) {
      Scalar r;
      r.num_ = x.num_ - y.num_;
      return r;
    }
    if (x.den_ == y.den_) return Scalar(x.num_ - y.num_, x.den_);
    LaurentPoly g = poly_gcd(x.den_, y.den_);
    if (g.is_one()) return Scalar(x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_);
    LaurentPoly cx = exact_divide(y.den_, g);
    LaurentPoly cy = exact_divide(x.den_, g);
    return Scalar(x.num_ * cx - y.num_ * cy, x.den_ * cx);
  }
  friend Scalar operator-(const Scalar& x) {
    Scalar r = x;
    r.num_ = -r.num_;
    return r;
  }
  friend Scalar operator*(const Scalar& x, const Scalar& y) {
    // Monomials are units: multiplying by one preserves canonical form.
    if (y.den_.is_one() && y.num_.is_monomial()) return x.scaled_by_monomial(y.num_);
    if (x.den_.is_one() && x.num_.is_monomial()) return y.scaled_by_monomial(x.num_);
    if (x.den_.is_one() && y.den_.is_one()) {
      Scalar r;
      r.num_ = x.num_ * y.num_;
      return r;
    }
    return Scalar(x.num_ * y.num_, x.den_ * y.den_);
  }
  friend Scalar operator/(const Scalar& x, const Scalar& y) { return x * y.inverse(); }

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  Scalar inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of the zero scalar");
    return Scalar(den_, num_);
  }

  Scalar pow(long e) const {
    if (e == 0) return Scalar(1);
    Scalar base = e < 0 ? inverse() : *this;
    unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Scalar acc(1);
    while (n > 0) {
      if (n & 1) acc *= base;
      base *= base;
      n >>= 1;
    }
    return acc;
  }

  friend bool operator==(const Scalar& x, const Scalar& y) {
    return x.num_ == y.num_ && x.den_ == y.den_;
  }
  friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

  /// Simultaneous substitution of symbols by scalar values.
  Scalar substitute(const std::map<int, Scalar>& bindings) const {
    return substitute_poly(num_, bindings) / substitute_poly(den_, bindings);
  }

  /// Exact q -> 1 limit: cancellation is already complete in canonical form,
  /// so the limit exists iff the denominator does not vanish at s = 1.
  Scalar limit_q_to_one() const {
    LaurentPoly den1 = den_.substitute_symbol(kSymS, GaussianRational(1));
    if (den1.is_zero()) throw PoleAtOne();
    LaurentPoly num1 = num_.substitute_symbol(kSymS, GaussianRational(1));
    return Scalar(std::move(num1), std::move(den1));
  }

  bool has_pole_at_one() const {
    return den_.substitute_symbol(kSymS, GaussianRational(1)).is_zero();
  }

  /// Full evaluation at a rational point; the denominator must not vanish.
  GaussianRational evaluate(const std::array<GaussianRational, kNumSymbols>& point) const {
    GaussianRational d = den_.evaluate(point);
    if (d.is_zero()) throw DivisionByZero("denominator vanishes at evaluation point");
    return num_.evaluate(point) / d;
  }

 private:
  /// Multiplication by a Laurent monomial: shift and scale the numerator;
  /// the canonical invariants are unaffected.
  Scalar scaled_by_monomial(const LaurentPoly& mono) const {
    Scalar r = *this;
    if (r.is_zero()) return r;
    const auto& [e, c] = *mono.terms().begin();
    r.num_.shift(e);
    r.num_.scale(c);
    return r;
  }

  static Scalar substitute_poly(const LaurentPoly& p, const std::map<int, Scalar>& bindings) {
    Scalar acc(0);
    for (const auto& [e, c] : p.terms()) {
      Scalar t = Scalar(GaussianRational(c));
      ExpVec residual = zero_exponents();
      for (int k = 0; k < kNumSymbols; ++k) {
        if (e[k] == 0) continue;
        auto it = bindings.find(k);
        if (it == bindings.end()) {
          residual[k] = e[k];
        } else {
          t *= it->second.pow(e[k]);
        }
      }
      if (residual != zero_exponents())
        t *= Scalar(LaurentPoly::monomial(residual, GaussianRational(1)));
      acc += t;
    }
    return acc;
  }

  void canonicalize() {
    if (num_.is_zero()) {
      den_ = LaurentPoly::one();
      return;
    }
    auto [shift_n, n] = split_monomial(num_);
    auto [shift_d, d] = split_monomial(den_);
    if (!d.is_one()) {
      LaurentPoly g = poly_gcd(n, d);
      if (!g.is_one()) {
        n = exact_divide(n, g);
        d = exact_divide(d, g);
      }
      GaussianRational lead = d.leading_term().second;
      if (!lead.is_one()) {
        GaussianRational inv = lead.inverse();
        n.scale(inv);
        d.scale(inv);
      }
    }
    n.shift(shift_n - shift_d);
    num_ = std::move(n);
    den_ = std::move(d);
  }

  LaurentPoly num_;
  LaurentPoly den_;
};

/// The q-number [n]_q = (q^n - q^-n) / (q - q^-1), a Laurent polynomial in s.
inline Scalar q_integer(long n) {
  Scalar s2n = Scalar::symbol(kSymS, static_cast<int32_t>(2 * n));
  Scalar s2nm = Scalar::symbol(kSymS, static_cast<int32_t>(-2 * n));
  Scalar den = Scalar::symbol(kSymS, 2) - Scalar::symbol(kSymS, -2);
  return (s2n - s2nm) / den;
}

/// The q-number with nu folded in: [n + nu]_q = (q^n w - q^-n w^-1)/(q - q^-1)
/// under w = q^nu.
inline Scalar q_integer_shifted(long n) {
  Scalar num = Scalar::symbol(kSymS, static_cast<int32_t>(2 * n)) * Scalar::symbol(kSymW) -
               Scalar::symbol(kSymS, static_cast<int32_t>(-2 * n)) * Scalar::symbol(kSymW, -1);
  Scalar den = Scalar::symbol(kSymS, 2) - Scalar::symbol(kSymS, -2);
  return num / den;
}

}  // namespace qk
