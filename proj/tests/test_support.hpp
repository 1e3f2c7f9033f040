#pragma once

// Shared helpers for the test suites: deterministic random generators for
// scalars, expressions and evaluation points, plus a numeric evaluation
// oracle that is independent of the canonicalization path under test.

#include <random>

#include "qkernel/qkernel.hpp"

namespace qktest {

using namespace qk;

/// Term-by-term numeric evaluation with naive power loops; deliberately
/// avoids LaurentPoly::evaluate and the gcd machinery.
inline GaussianRational oracle_eval_poly(const LaurentPoly& p,
                                         const std::array<GaussianRational, kNumSymbols>& pt) {
  GaussianRational total(0);
  for (const auto& [e, c] : p.terms()) {
    GaussianRational term = c;
    for (int k = 0; k < kNumSymbols; ++k) {
      int n = e[k];
      GaussianRational base = n < 0 ? pt[k].inverse() : pt[k];
      for (int j = 0; j < std::abs(n); ++j) term *= base;
    }
    total += term;
  }
  return total;
}

inline GaussianRational oracle_eval(const Scalar& x,
                                    const std::array<GaussianRational, kNumSymbols>& pt) {
  return oracle_eval_poly(x.numerator(), pt) / oracle_eval_poly(x.denominator(), pt);
}

class Rng {
 public:
  explicit Rng(unsigned seed) : gen_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }

  GaussianRational rational(int bound = 6) {
    int num = uniform(-bound, bound);
    int den = uniform(1, bound);
    mpq_class q(num, den);
    q.canonicalize();
    if (uniform(0, 4) == 0) {
      mpq_class im(uniform(-bound, bound), uniform(1, bound));
      im.canonicalize();
      return {q, im};
    }
    return {q, 0};
  }

  GaussianRational nonzero_rational(int bound = 6) {
    for (;;) {
      GaussianRational c = rational(bound);
      if (!c.is_zero()) return c;
    }
  }

  LaurentPoly poly(int max_terms, const std::vector<int>& symbols, int max_exp = 3) {
    LaurentPoly p;
    int terms = uniform(1, max_terms);
    for (int t = 0; t < terms; ++t) {
      ExpVec e = zero_exponents();
      for (int sym : symbols) {
        if (uniform(0, 2) == 0) e[static_cast<size_t>(sym)] = uniform(-max_exp, max_exp);
      }
      p.add_term(e, rational());
    }
    return p;
  }

  LaurentPoly nonzero_poly(int max_terms, const std::vector<int>& symbols, int max_exp = 3) {
    for (;;) {
      LaurentPoly p = poly(max_terms, symbols, max_exp);
      if (!p.is_zero()) return p;
    }
  }

  Scalar scalar(const std::vector<int>& symbols = {kSymS, kSymW, kSymA}, int max_terms = 3) {
    LaurentPoly num = poly(max_terms, symbols);
    LaurentPoly den = nonzero_poly(2, symbols, 2);
    return Scalar(num, den);
  }

  Scalar nonzero_scalar(const std::vector<int>& symbols = {kSymS, kSymW, kSymA}) {
    for (;;) {
      Scalar x = scalar(symbols);
      if (!x.is_zero()) return x;
    }
  }

  /// Coefficients in s only, suitable for numeric matrix evaluation.
  Scalar s_coefficient() {
    LaurentPoly mono = LaurentPoly::monomial(unit_exponent(kSymS, uniform(-3, 3)),
                                             nonzero_rational(4));
    return Scalar(mono);
  }

  Word word(int alphabet_size, int max_len, int min_len = 0) {
    Word w;
    int len = uniform(min_len, max_len);
    for (int k = 0; k < len; ++k) w.push_back(static_cast<uint8_t>(uniform(0, alphabet_size - 1)));
    return w;
  }

  NCExpr expr(const AlphabetPtr& a, int max_terms, int max_len,
              const std::vector<int>& symbols = {kSymS}) {
    NCExpr x(a);
    int terms = uniform(1, max_terms);
    for (int t = 0; t < terms; ++t) {
      LaurentPoly num = nonzero_poly(2, symbols, 2);
      x.add_term(word(a->size(), max_len), Scalar(num));
    }
    return x;
  }

  /// Expression whose coefficients are powers of s times rationals.
  NCExpr numeric_expr(const AlphabetPtr& a, int max_terms, int max_len) {
    NCExpr x(a);
    int terms = uniform(1, max_terms);
    for (int t = 0; t < terms; ++t) x.add_term(word(a->size(), max_len), s_coefficient());
    return x;
  }

  /// Evaluation point with all coordinates nonzero and |coordinate| spread
  /// out, suitable for negative exponents.
  std::array<GaussianRational, kNumSymbols> point() {
    std::array<GaussianRational, kNumSymbols> pt;
    for (int k = 0; k < kNumSymbols; ++k) {
      mpq_class q(uniform(1, 40) * (uniform(0, 1) ? 1 : -1), uniform(1, 7));
      q.canonicalize();
      pt[static_cast<size_t>(k)] = GaussianRational(q);
    }
    return pt;
  }

  std::mt19937& engine() { return gen_; }

 private:
  std::mt19937 gen_;
};

/// ospq presentation with one wrong q-power: K A+ -> q^2 A+ K instead of
/// q A+ K. The Kinv*K*A+ overlap is then not joinable.
inline Presentation corrupted_ospq() {
  using namespace presentations;
  const Presentation& good = presentations::ospq();
  std::vector<RewriteRule> rules;
  for (const RewriteRule& r : good.rules()) {
    if (r.lhs_first == kK && r.lhs_second == kAplus) {
      NCExpr rhs(good.alphabet());
      rhs.add_term(Word{kAplus, kK}, Scalar::symbol(kSymS, 4));
      rules.emplace_back(kK, kAplus, std::move(rhs));
    } else {
      rules.push_back(r);
    }
  }
  return Presentation("ospq-corrupted", good.alphabet(), std::move(rules));
}

}  // namespace qktest
