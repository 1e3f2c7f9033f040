#pragma once

// The bundled algebra presentations: the quantum superalgebra osp_q(1|2)
// extended by its grade involution, the quantum algebra sl_q(2) (optionally
// extended by an involution), the q-deformed Bannai-Ito algebra, and the
// Bannai-Ito algebra. Each is an ordered alphabet plus an oriented rule set
// whose normal words are the sorted monomials in the generator order.

#include <string>
#include <vector>

#include "qkernel/rewrite.hpp"

namespace qk::presentations {

// Generator indices of the osp_q(1|2) alphabet.
enum OspGen : int { kAplus = 0, kAminus, kK, kKinv, kP };

// Generator indices of the sl_q(2) alphabet (the extended alphabet appends wy).
enum SlqGen : int { kJplus = 0, kJminus, kKappa, kKappainv, kWy };

namespace detail {

inline Scalar s_pow(int e) { return Scalar::symbol(kSymS, e); }

/// (K - K^-1)/(s - s^-1) over a 5-letter alphabet with K, K^-1 at indices 2, 3.
inline NCExpr k_difference_quotient(const AlphabetPtr& a) {
  Scalar c = (s_pow(1) - s_pow(-1)).inverse();
  NCExpr e(a);
  e.add_term(Word{2}, c);
  e.add_term(Word{3}, -c);
  return e;
}

inline std::vector<RewriteRule> ospq_rules(const AlphabetPtr& a) {
  auto gen = [&](int g) { return NCExpr::generator(a, g); };
  std::vector<RewriteRule> rules;
  // {A+, A-} = (K - K^-1)/(s - s^-1)
  rules.emplace_back(kAminus, kAplus, -(gen(kAplus) * gen(kAminus)) + k_difference_quotient(a));
  // K A+- K^-1 = q^(+-1) A+-
  rules.emplace_back(kK, kAplus, s_pow(2) * (gen(kAplus) * gen(kK)));
  rules.emplace_back(kK, kAminus, s_pow(-2) * (gen(kAminus) * gen(kK)));
  rules.emplace_back(kKinv, kAplus, s_pow(-2) * (gen(kAplus) * gen(kKinv)));
  rules.emplace_back(kKinv, kAminus, s_pow(2) * (gen(kAminus) * gen(kKinv)));
  // {P, A+-} = 0, [P, K] = [P, K^-1] = 0
  rules.emplace_back(kP, kAplus, -(gen(kAplus) * gen(kP)));
  rules.emplace_back(kP, kAminus, -(gen(kAminus) * gen(kP)));
  rules.emplace_back(kP, kK, gen(kK) * gen(kP));
  rules.emplace_back(kP, kKinv, gen(kKinv) * gen(kP));
  // K K^-1 = K^-1 K = 1, P^2 = 1
  rules.emplace_back(kK, kKinv, NCExpr::unit(a));
  rules.emplace_back(kKinv, kK, NCExpr::unit(a));
  rules.emplace_back(kP, kP, NCExpr::unit(a));
  return rules;
}

inline std::vector<RewriteRule> slq_rules(const AlphabetPtr& a, bool with_involution) {
  auto gen = [&](int g) { return NCExpr::generator(a, g); };
  Scalar c = (s_pow(1) - s_pow(-1)).inverse();
  NCExpr kappa_diff(a);
  kappa_diff.add_term(Word{kKappa}, c);
  kappa_diff.add_term(Word{kKappainv}, -c);
  std::vector<RewriteRule> rules;
  // [J+, J-] = (kappa - kappa^-1)/(s - s^-1)
  rules.emplace_back(kJminus, kJplus, gen(kJplus) * gen(kJminus) - kappa_diff);
  // kappa J+- kappa^-1 = q^(+-1) J+-
  rules.emplace_back(kKappa, kJplus, s_pow(2) * (gen(kJplus) * gen(kKappa)));
  rules.emplace_back(kKappa, kJminus, s_pow(-2) * (gen(kJminus) * gen(kKappa)));
  rules.emplace_back(kKappainv, kJplus, s_pow(-2) * (gen(kJplus) * gen(kKappainv)));
  rules.emplace_back(kKappainv, kJminus, s_pow(2) * (gen(kJminus) * gen(kKappainv)));
  rules.emplace_back(kKappa, kKappainv, NCExpr::unit(a));
  rules.emplace_back(kKappainv, kKappa, NCExpr::unit(a));
  if (with_involution) {
    // {J+-, wy} = 0, [kappa, wy] = 0, wy^2 = 1
    rules.emplace_back(kWy, kJplus, -(gen(kJplus) * gen(kWy)));
    rules.emplace_back(kWy, kJminus, -(gen(kJminus) * gen(kWy)));
    rules.emplace_back(kWy, kKappa, gen(kKappa) * gen(kWy));
    rules.emplace_back(kWy, kKappainv, gen(kKappainv) * gen(kWy));
    rules.emplace_back(kWy, kWy, NCExpr::unit(a));
  }
  return rules;
}

/// q-anticommutator reordering x_hi x_lo -> -s^(+-2) x_lo x_hi + s^(+-1)(x_k + const),
/// the orientation of {x_lo, x_hi}_q = x_k + const (or its reverse).
inline RewriteRule q_pair_rule(const AlphabetPtr& a, int hi, int lo, int third, int const_sym,
                               int sign_exp) {
  NCExpr rhs(a);
  rhs.add_term(Word{static_cast<uint8_t>(lo), static_cast<uint8_t>(hi)}, -s_pow(2 * sign_exp));
  rhs.add_term(Word{static_cast<uint8_t>(third)}, s_pow(sign_exp));
  rhs.add_term(Word{}, s_pow(sign_exp) * Scalar::symbol(const_sym));
  return RewriteRule(hi, lo, std::move(rhs));
}

}  // namespace detail

/// osp_q(1|2) with grade involution: generators A+ < A- < K < Kinv < P.
inline const Presentation& ospq() {
  static const Presentation p = [] {
    AlphabetPtr a = make_alphabet("ospq", {"A+", "A-", "K", "Kinv", "P"}, {{kK, kKinv}});
    return Presentation("ospq", a, detail::ospq_rules(a));
  }();
  return p;
}

/// sl_q(2): generators J+ < J- < kappa < kappainv.
inline const Presentation& slq() {
  static const Presentation p = [] {
    AlphabetPtr a = make_alphabet("slq", {"J+", "J-", "kappa", "kappainv"}, {{kKappa, kKappainv}});
    return Presentation("slq", a, detail::slq_rules(a, /*with_involution=*/false));
  }();
  return p;
}

/// sl_q(2) extended by an involution wy that anticommutes with J+- and
/// commutes with kappa.
inline const Presentation& slq_involution() {
  static const Presentation p = [] {
    AlphabetPtr a = make_alphabet("slqw", {"J+", "J-", "kappa", "kappainv", "wy"},
                                  {{kKappa, kKappainv}});
    return Presentation("slqw", a, detail::slq_rules(a, /*with_involution=*/true));
  }();
  return p;
}

/// q-deformed Bannai-Ito algebra: {I1,I2}_q = I3 + iota3 and cyclic.
inline const Presentation& qbi() {
  static const Presentation p = [] {
    AlphabetPtr a = make_alphabet("qbi", {"I1", "I2", "I3"});
    std::vector<RewriteRule> rules;
    rules.push_back(detail::q_pair_rule(a, 1, 0, 2, kSymIota3, +1));  // I2 I1
    rules.push_back(detail::q_pair_rule(a, 2, 1, 0, kSymIota1, +1));  // I3 I2
    rules.push_back(detail::q_pair_rule(a, 2, 0, 1, kSymIota2, -1));  // I3 I1
    return Presentation("qbi", a, std::move(rules));
  }();
  return p;
}

/// Bannai-Ito algebra: {K1,K2} = K3 + alpha3 and cyclic.
inline const Presentation& bi() {
  static const Presentation p = [] {
    AlphabetPtr a = make_alphabet("bi", {"K1", "K2", "K3"});
    auto gen = [&](int g) { return NCExpr::generator(a, g); };
    auto pair_rule = [&](int hi, int lo, int third, int const_sym) {
      NCExpr rhs = -(gen(lo) * gen(hi)) + gen(third) + NCExpr::unit(a, Scalar::symbol(const_sym));
      return RewriteRule(hi, lo, std::move(rhs));
    };
    std::vector<RewriteRule> rules;
    rules.push_back(pair_rule(1, 0, 2, kSymAlpha3));
    rules.push_back(pair_rule(2, 1, 0, kSymAlpha1));
    rules.push_back(pair_rule(2, 0, 1, kSymAlpha2));
    return Presentation("bi", a, std::move(rules));
  }();
  return p;
}

/// Bundled presentation lookup by name; nullptr when absent.
inline const Presentation* find(const std::string& name) {
  if (name == "ospq") return &ospq();
  if (name == "slq") return &slq();
  if (name == "slqw") return &slq_involution();
  if (name == "qbi") return &qbi();
  if (name == "bi") return &bi();
  return nullptr;
}

}  // namespace qk::presentations
