#pragma once

// Multivariate Laurent polynomials over the Gaussian rationals, in the fixed
// symbol alphabet used throughout the kernel, together with the exact gcd
// machinery that backs fraction-field canonicalization.

#include <algorithm>
#include <array>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qkernel/rational.hpp"

namespace qk {

inline constexpr int kNumSymbols = 11;

// Fixed symbol order: s < w < a < b < c < iota1..3 < alpha1..3.
enum Symbol : int {
  kSymS = 0,
  kSymW,
  kSymA,
  kSymB,
  kSymC,
  kSymIota1,
  kSymIota2,
  kSymIota3,
  kSymAlpha1,
  kSymAlpha2,
  kSymAlpha3,
};

inline const char* symbol_name(int sym) {
  static constexpr const char* kNames[kNumSymbols] = {
      "s", "w", "a", "b", "c", "iota1", "iota2", "iota3", "alpha1", "alpha2", "alpha3"};
  return kNames[sym];
}

/// Index of a symbol name, or -1 if the name is not a coefficient symbol.
inline int symbol_index(std::string_view name) {
  for (int k = 0; k < kNumSymbols; ++k) {
    if (name == symbol_name(k)) return k;
  }
  return -1;
}

/// Exponent vector; one signed entry per symbol, fixed arity.
using ExpVec = std::array<int32_t, kNumSymbols>;

inline ExpVec zero_exponents() {
  ExpVec e{};
  return e;
}

inline ExpVec unit_exponent(int sym, int32_t e = 1) {
  ExpVec v{};
  v[sym] = e;
  return v;
}

inline ExpVec operator+(const ExpVec& a, const ExpVec& b) {
  ExpVec r;
  for (int k = 0; k < kNumSymbols; ++k) r[k] = a[k] + b[k];
  return r;
}

inline ExpVec operator-(const ExpVec& a, const ExpVec& b) {
  ExpVec r;
  for (int k = 0; k < kNumSymbols; ++k) r[k] = a[k] - b[k];
  return r;
}

class LaurentPoly {
 public:
  using TermMap = std::map<ExpVec, GaussianRational>;

  LaurentPoly() = default;

  static LaurentPoly constant(GaussianRational c) {
    LaurentPoly p;
    if (!c.is_zero()) p.terms_.emplace(zero_exponents(), std::move(c));
    return p;
  }

  static LaurentPoly one() { return constant(GaussianRational(1)); }

  static LaurentPoly symbol(int sym, int32_t exp = 1) {
    return monomial(unit_exponent(sym, exp), GaussianRational(1));
  }

  static LaurentPoly monomial(const ExpVec& e, GaussianRational c) {
    LaurentPoly p;
    if (!c.is_zero()) p.terms_.emplace(e, std::move(c));
    return p;
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == zero_exponents());
  }

  bool is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == zero_exponents() &&
           terms_.begin()->second.is_one();
  }

  /// Single-term test; a monomial is a unit of the Laurent ring.
  bool is_monomial() const { return terms_.size() == 1; }

  GaussianRational constant_value() const {
    if (terms_.empty()) return GaussianRational(0);
    auto it = terms_.find(zero_exponents());
    return it == terms_.end() ? GaussianRational(0) : it->second;
  }

  void add_term(const ExpVec& e, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
  }

  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
    return r;
  }

  friend LaurentPoly operator-(const LaurentPoly& a) {
    LaurentPoly r;
    for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
    return r;
  }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    }
    return r;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  void scale(const GaussianRational& c) {
    if (c.is_zero()) {
      terms_.clear();
      return;
    }
    for (auto& [e, v] : terms_) v *= c;
  }

  void shift(const ExpVec& by) {
    if (by == zero_exponents()) return;
    TermMap shifted;
    for (const auto& [e, c] : terms_) shifted.emplace(e + by, c);
    terms_ = std::move(shifted);
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  /// Symbols that occur with a nonzero exponent somewhere.
  std::array<bool, kNumSymbols> support() const {
    std::array<bool, kNumSymbols> sup{};
    for (const auto& [e, c] : terms_) {
      for (int k = 0; k < kNumSymbols; ++k) {
        if (e[k] != 0) sup[k] = true;
      }
    }
    return sup;
  }

  /// Componentwise minimum of the exponent vectors (0 for a symbol absent
  /// from the support). Undefined on the zero polynomial.
  ExpVec min_exponents() const {
    ExpVec mins{};
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (first) {
        mins = e;
        first = false;
      } else {
        for (int k = 0; k < kNumSymbols; ++k) mins[k] = std::min(mins[k], e[k]);
      }
    }
    return mins;
  }

  int32_t degree_in(int sym) const {
    int32_t d = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (first || e[sym] > d) d = e[sym];
      first = false;
    }
    return d;
  }

  /// Greatest term under the lexicographic order on exponent vectors.
  const std::pair<const ExpVec, GaussianRational>& leading_term() const {
    return *terms_.rbegin();
  }

  /// Coefficient of sym^deg, as a polynomial with the sym-exponent zeroed.
  LaurentPoly coefficient_in(int sym, int32_t deg) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) {
      if (e[sym] == deg) {
        ExpVec rest = e;
        rest[sym] = 0;
        r.terms_.emplace(rest, c);
      }
    }
    return r;
  }

  /// Replaces one symbol by a rational constant.
  LaurentPoly substitute_symbol(int sym, const GaussianRational& value) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) {
      ExpVec rest = e;
      rest[sym] = 0;
      if (e[sym] != 0 && value.is_zero() && e[sym] < 0)
        throw DivisionByZero("negative power of a symbol bound to zero");
      r.add_term(rest, c * pow(value, e[sym]));
    }
    return r;
  }

  /// Full evaluation at a rational point.
  GaussianRational evaluate(const std::array<GaussianRational, kNumSymbols>& point) const {
    GaussianRational acc(0);
    for (const auto& [e, c] : terms_) {
      GaussianRational t = c;
      for (int k = 0; k < kNumSymbols; ++k) {
        if (e[k] != 0) t *= pow(point[k], e[k]);
      }
      acc += t;
    }
    return acc;
  }

 private:
  TermMap terms_;
};

// ---------------------------------------------------------------------------
// gcd machinery (true polynomials: all exponents nonnegative)
// ---------------------------------------------------------------------------

/// Splits a Laurent polynomial into (monomial shift, true polynomial) with the
/// minimum exponent of every symbol shifted to zero.
inline std::pair<ExpVec, LaurentPoly> split_monomial(const LaurentPoly& p) {
  if (p.is_zero()) return {zero_exponents(), p};
  ExpVec mins = p.min_exponents();
  LaurentPoly q = p;
  q.shift(zero_exponents() - mins);
  return {mins, q};
}

/// Scales so the lexicographically greatest term has coefficient one.
inline LaurentPoly monic_normalize(LaurentPoly p) {
  if (p.is_zero()) return p;
  p.scale(p.leading_term().second.inverse());
  return p;
}

/// Exact multivariate division; the caller guarantees b | a.
inline LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (a.is_zero()) return a;
  if (b.is_one()) return a;
  LaurentPoly rem = a;
  LaurentPoly quot;
  const auto& [eb, cb] = b.leading_term();
  while (!rem.is_zero()) {
    const auto& [ea, ca] = rem.leading_term();
    ExpVec q = ea - eb;
    for (int k = 0; k < kNumSymbols; ++k) {
      if (q[k] < 0) throw Error("internal: division expected to be exact");
    }
    GaussianRational qc = ca / cb;
    quot.add_term(q, qc);
    rem -= LaurentPoly::monomial(q, qc) * b;
  }
  return quot;
}

namespace detail {

inline std::vector<GaussianRational> to_dense(const LaurentPoly& p, int sym) {
  std::vector<GaussianRational> d(static_cast<size_t>(p.degree_in(sym)) + 1);
  for (const auto& [e, c] : p.terms()) d[static_cast<size_t>(e[sym])] = c;
  return d;
}

inline LaurentPoly from_dense(const std::vector<GaussianRational>& d, int sym) {
  LaurentPoly p;
  for (size_t k = 0; k < d.size(); ++k) {
    if (!d[k].is_zero()) p.add_term(unit_exponent(sym, static_cast<int32_t>(k)), d[k]);
  }
  return p;
}

inline void dense_trim(std::vector<GaussianRational>& f) {
  while (!f.empty() && f.back().is_zero()) f.pop_back();
}

/// Remainder of dense univariate division over Q(i).
inline std::vector<GaussianRational> dense_rem(std::vector<GaussianRational> f,
                                               const std::vector<GaussianRational>& g) {
  dense_trim(f);
  while (f.size() >= g.size()) {
    GaussianRational q = f.back() / g.back();
    size_t off = f.size() - g.size();
    for (size_t k = 0; k < g.size(); ++k) f[off + k] -= q * g[k];
    dense_trim(f);
  }
  return f;
}

inline LaurentPoly gcd_univariate(const LaurentPoly& a, const LaurentPoly& b, int sym) {
  std::vector<GaussianRational> f = to_dense(a, sym);
  std::vector<GaussianRational> g = to_dense(b, sym);
  dense_trim(f);
  dense_trim(g);
  while (!g.empty()) {
    std::vector<GaussianRational> r = dense_rem(std::move(f), g);
    f = std::move(g);
    g = std::move(r);
  }
  return monic_normalize(from_dense(f, sym));
}

}  // namespace detail

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

namespace detail {

/// gcd of the coefficients of p viewed as a polynomial in sym.
inline LaurentPoly content_in(const LaurentPoly& p, int sym) {
  LaurentPoly g;
  for (int32_t d = 0; d <= p.degree_in(sym); ++d) {
    LaurentPoly c = p.coefficient_in(sym, d);
    if (c.is_zero()) continue;
    g = poly_gcd(g, c);
    if (g.is_one()) return g;
  }
  return g;
}

/// Pseudo-remainder: lc(q)^(deg p - deg q + 1) * p  mod  q, in the variable sym.
inline LaurentPoly pseudo_rem(const LaurentPoly& p, const LaurentPoly& q, int sym) {
  int32_t dp = p.degree_in(sym);
  int32_t dq = q.degree_in(sym);
  if (dp < dq) return p;
  LaurentPoly lq = q.coefficient_in(sym, dq);
  LaurentPoly r = p;
  int32_t e = dp - dq + 1;
  while (!r.is_zero()) {
    int32_t dr = r.degree_in(sym);
    if (dr < dq) break;
    LaurentPoly lr = r.coefficient_in(sym, dr);
    LaurentPoly shifted = q;
    shifted.shift(unit_exponent(sym, dr - dq));
    r = lq * r - lr * shifted;
    --e;
  }
  for (; e > 0; --e) r = r * lq;
  return r;
}

inline LaurentPoly poly_pow(const LaurentPoly& p, int32_t e) {
  LaurentPoly acc = LaurentPoly::one();
  for (int32_t k = 0; k < e; ++k) acc = acc * p;
  return acc;
}

/// Subresultant polynomial remainder sequence; p, q primitive in sym with
/// deg_sym >= 1. Returns their gcd up to content in sym.
inline LaurentPoly subresultant_prs(LaurentPoly p, LaurentPoly q, int sym) {
  if (p.degree_in(sym) < q.degree_in(sym)) std::swap(p, q);
  LaurentPoly g = LaurentPoly::one();
  LaurentPoly h = LaurentPoly::one();
  while (true) {
    int32_t delta = p.degree_in(sym) - q.degree_in(sym);
    LaurentPoly r = pseudo_rem(p, q, sym);
    if (r.is_zero()) break;
    if (r.degree_in(sym) == 0) return LaurentPoly::one();
    p = q;
    q = exact_divide(r, g * poly_pow(h, delta));
    g = p.coefficient_in(sym, p.degree_in(sym));
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      h = exact_divide(poly_pow(g, delta), poly_pow(h, delta - 1));
    }
  }
  return exact_divide(q, content_in(q, sym));
}

/// gcd(p, u) where u involves only the symbol sym: reduces to univariate gcds
/// of u against the sym-wise slices of p.
inline LaurentPoly gcd_against_univariate(const LaurentPoly& p, const LaurentPoly& u, int sym) {
  // Group the terms of p by their non-sym exponents.
  std::map<ExpVec, LaurentPoly> slices;
  for (const auto& [e, c] : p.terms()) {
    ExpVec rest = e;
    rest[sym] = 0;
    slices[rest].add_term(unit_exponent(sym, e[sym]), c);
  }
  LaurentPoly g = u;
  for (const auto& [rest, slice] : slices) {
    if (g.is_one() || g.is_constant()) return LaurentPoly::one();
    g = gcd_univariate(g, slice, sym);
  }
  return g.is_constant() ? LaurentPoly::one() : g;
}

}  // namespace detail

/// gcd of two true polynomials (all exponents nonnegative), normalized so the
/// lexicographically greatest term has coefficient one. gcd(0, p) = monic(p).
inline LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return monic_normalize(b);
  if (b.is_zero()) return monic_normalize(a);
  if (a.is_constant() || b.is_constant()) return LaurentPoly::one();

  auto sup_a = a.support();
  auto sup_b = b.support();
  int main_var = -1;
  int32_t best = 0;
  int vars_a = 0;
  int vars_b = 0;
  for (int k = 0; k < kNumSymbols; ++k) {
    vars_a += sup_a[k] ? 1 : 0;
    vars_b += sup_b[k] ? 1 : 0;
    if (sup_a[k] && sup_b[k]) {
      int32_t d = std::min(a.degree_in(k), b.degree_in(k));
      if (main_var < 0 || d < best) {
        main_var = k;
        best = d;
      }
    }
  }
  if (main_var < 0) return LaurentPoly::one();  // disjoint supports

  if (vars_a == 1 && vars_b == 1) return detail::gcd_univariate(a, b, main_var);
  if (vars_b == 1) return detail::gcd_against_univariate(a, b, main_var);
  if (vars_a == 1) return detail::gcd_against_univariate(b, a, main_var);

  LaurentPoly cont_a = detail::content_in(a, main_var);
  LaurentPoly cont_b = detail::content_in(b, main_var);
  LaurentPoly pp_a = exact_divide(a, cont_a);
  LaurentPoly pp_b = exact_divide(b, cont_b);
  LaurentPoly cont_gcd = poly_gcd(cont_a, cont_b);
  LaurentPoly pp_gcd = detail::subresultant_prs(pp_a, pp_b, main_var);
  return monic_normalize(cont_gcd * pp_gcd);
}

}  // namespace qk
