#pragma once

// Named elements and the identity suite: equitable generators, Casimir
// operators, the covariance operators realizing the q-deformed Bannai-Ito
// algebra, structure constants, the q -> -q correspondence with sl_q(2), and
// the q -> 1 limit checks.

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qkernel/presentations.hpp"

namespace qk {

struct NamedElement {
  std::string name;
  const Presentation* presentation;
  NCExpr expr;    // as defined, unreduced
  NCExpr normal;  // cached normal form
};

struct IdentityRecord {
  std::string id;
  std::string claim;
  const Presentation* presentation;
  NCExpr lhs;
  NCExpr rhs;
};

/// Applies the formal transformation q -> -q: the coefficient substitution
/// s -> i*s together with a renaming of generators into the target alphabet.
inline NCExpr q_to_minus_q(const NCExpr& x, const std::map<int, int>& rename,
                           const AlphabetPtr& target) {
  return rename_generators(x, rename, target, {{kSymS, Scalar::i() * Scalar::symbol(kSymS)}});
}

/// Coefficient-only version for scalars.
inline Scalar q_to_minus_q(const Scalar& x) {
  return x.substitute({{kSymS, Scalar::i() * Scalar::symbol(kSymS)}});
}

class Catalog {
 public:
  Catalog()
      : ospq_(&presentations::ospq()),
        slq_(&presentations::slq()),
        slqw_(&presentations::slq_involution()),
        qbi_(&presentations::qbi()),
        bi_(&presentations::bi()),
        eq_osp_(make_alphabet("equitable-ospq", {"X", "Y", "Yinv", "Z", "wy"})),
        eq_slq_(make_alphabet("equitable-slq", {"x", "y", "yinv", "z"})) {
    build_elements();
    build_suite();
  }

  const Presentation& ospq() const { return *ospq_; }
  const Presentation& slq() const { return *slq_; }
  const Presentation& slq_involution() const { return *slqw_; }
  const Presentation& qbi() const { return *qbi_; }
  const Presentation& bi() const { return *bi_; }

  /// Free alphabets carrying the equitable relations as abstract expressions,
  /// used for the term-for-term q -> -q correspondence.
  const AlphabetPtr& equitable_osp_alphabet() const { return eq_osp_; }
  const AlphabetPtr& equitable_slq_alphabet() const { return eq_slq_; }

  const NamedElement& element(std::string_view name) const {
    const NamedElement* found = nullptr;
    for (const NamedElement& e : elements_) {
      if (e.name == name) {
        if (found) throw UnknownElement(std::string(name) + "' is ambiguous; qualify it");
        found = &e;
      }
    }
    if (!found) throw UnknownElement(std::string(name));
    return *found;
  }

  const NamedElement* find_element(std::string_view name, const Presentation* pres) const {
    for (const NamedElement& e : elements_) {
      if (e.name == name && e.presentation == pres) return &e;
    }
    return nullptr;
  }

  const NCExpr& expr(std::string_view name) const { return element(name).expr; }

  /// The identity suite: one record per displayed identity.
  const std::vector<IdentityRecord>& suite() const { return suite_; }

  /// The three equitable relations of each algebra over the free alphabets,
  /// as expressions that vanish when the relation holds.
  const std::vector<NCExpr>& equitable_relations_osp() const { return eq_osp_relations_; }
  const std::vector<NCExpr>& equitable_relations_slq() const { return eq_slq_relations_; }

  /// Generator renaming x -> X, y -> Y, yinv -> Yinv, z -> Z.
  std::map<int, int> equitable_rename() const {
    return {{eq_slq_->index_of("x"), eq_osp_->index_of("X")},
            {eq_slq_->index_of("y"), eq_osp_->index_of("Y")},
            {eq_slq_->index_of("yinv"), eq_osp_->index_of("Yinv")},
            {eq_slq_->index_of("z"), eq_osp_->index_of("Z")}};
  }

  /// The abstract q-deformed Bannai-Ito Casimir over the qbi alphabet.
  NCExpr qbi_casimir() const { return qbi_casimir_over(qbi_->alphabet(), kSymIota1); }

  /// The Bannai-Ito Casimir K1^2 + K2^2 + K3^2 over the bi alphabet.
  NCExpr bi_casimir() const {
    auto g = [&](int k) { return NCExpr::generator(bi_->alphabet(), k); };
    return g(0) * g(0) + g(1) * g(1) + g(2) * g(2);
  }

  /// Defining relations of each algebra as vanishing expressions, indexed
  /// cyclically: k = 0 is the (1,2) pair, k = 1 the (2,3) pair, k = 2 the
  /// (3,1) pair.
  NCExpr qbi_relation(int k) const {
    auto g = [&](int j) { return NCExpr::generator(qbi_->alphabet(), j); };
    static constexpr int kConst[3] = {kSymIota3, kSymIota1, kSymIota2};
    int a = k, b = (k + 1) % 3, c = (k + 2) % 3;
    return q_anticommutator(g(a), g(b)) - g(c) -
           NCExpr::unit(qbi_->alphabet(), Scalar::symbol(kConst[k]));
  }

  NCExpr bi_relation(int k) const {
    auto g = [&](int j) { return NCExpr::generator(bi_->alphabet(), j); };
    static constexpr int kConst[3] = {kSymAlpha3, kSymAlpha1, kSymAlpha2};
    int a = k, b = (k + 1) % 3, c = (k + 2) % 3;
    return anticommutator(g(a), g(b)) - g(c) -
           NCExpr::unit(bi_->alphabet(), Scalar::symbol(kConst[k]));
  }

 private:
  static Scalar s_pow(int e) { return Scalar::symbol(kSymS, e); }

  NCExpr gen(const Presentation* p, int idx) const {
    return NCExpr::generator(p->alphabet(), idx);
  }

  void add_element(std::string name, const Presentation* pres, NCExpr expr) {
    NCExpr nf = normal_form(expr, *pres);
    elements_.push_back({std::move(name), pres, std::move(expr), std::move(nf)});
  }

  /// The q-deformed Bannai-Ito Casimir polynomial with generators at indices
  /// 0,1,2 of `alpha` and structure constants iota1..3 starting at first_iota.
  NCExpr qbi_casimir_over(const AlphabetPtr& alpha, int first_iota) const {
    auto g = [&](int k) { return NCExpr::generator(alpha, k); };
    Scalar q = Scalar::q(), qinv = Scalar::q(-1);
    return (s_pow(-1) - s_pow(3)) * (g(0) * g(1) * g(2)) + q * (g(0) * g(0)) +
           qinv * (g(1) * g(1)) + q * (g(2) * g(2)) -
           ((Scalar(1) - q) * Scalar::symbol(first_iota)) * g(0) -
           ((Scalar(1) - qinv) * Scalar::symbol(first_iota + 1)) * g(1) -
           ((Scalar(1) - q) * Scalar::symbol(first_iota + 2)) * g(2);
  }

  void build_elements();
  void build_suite();

  void add_record(std::string id, std::string claim, const Presentation* pres, NCExpr lhs,
                  NCExpr rhs) {
    suite_.push_back({std::move(id), std::move(claim), pres, std::move(lhs), std::move(rhs)});
  }

  const Presentation* ospq_;
  const Presentation* slq_;
  const Presentation* slqw_;
  const Presentation* qbi_;
  const Presentation* bi_;
  AlphabetPtr eq_osp_;
  AlphabetPtr eq_slq_;
  std::vector<NamedElement> elements_;
  std::vector<IdentityRecord> suite_;
  std::vector<NCExpr> eq_osp_relations_;
  std::vector<NCExpr> eq_slq_relations_;
};

inline void Catalog::build_elements() {
  using namespace presentations;
  auto g = [&](int idx) { return gen(ospq_, idx); };
  const AlphabetPtr& a = ospq_->alphabet();

  // [A0 - 1/2]_q expanded through q^A0 = K.
  Scalar half_shift_den = (s_pow(2) - s_pow(-2)).inverse();
  NCExpr half_shift = (s_pow(-1) * half_shift_den) * g(kK) - (s_pow(1) * half_shift_den) * g(kKinv);

  NCExpr S = g(kAplus) * g(kAminus) - half_shift;
  add_element("S", ospq_, S);
  NCExpr Q = S * g(kP);
  add_element("Q", ospq_, Q);

  // Equitable generators.
  Scalar one_minus_qinv = Scalar(1) - Scalar::q(-1);
  NCExpr X = g(kKinv) * g(kP) - one_minus_qinv * (g(kAplus) * g(kKinv) * g(kP));
  NCExpr Y = g(kK) * g(kP);
  NCExpr Yinv = g(kKinv) * g(kP);
  NCExpr Z = g(kKinv) * g(kP) + (s_pow(1) + s_pow(-1)) * (g(kAminus) * g(kP));
  add_element("X", ospq_, X);
  add_element("Y", ospq_, Y);
  add_element("Yinv", ospq_, Yinv);
  add_element("Z", ospq_, Z);
  add_element("wy", ospq_, g(kP));

  NCExpr Ups = (Scalar::q() - Scalar::q(-1)) * Q;
  add_element("Ups", ospq_, Ups);

  // Tilde generators exhibiting sl_q(2) with q -> -q inside osp_q(1|2).
  add_element("kt", ospq_, Y);
  add_element("ktinv", ospq_, Yinv);
  Scalar jt_plus_coeff = -Scalar::i() * (Scalar(1) - Scalar::q(-1)) / (s_pow(1) + s_pow(-1));
  Scalar jt_minus_coeff = (s_pow(1) + s_pow(-1)) / (Scalar(1) + Scalar::q(-1));
  add_element("Jt+", ospq_, jt_plus_coeff * g(kAplus));
  add_element("Jt-", ospq_, jt_minus_coeff * (g(kAminus) * g(kP)));

  // Covariance operators.
  auto sym = [](int k) { return Scalar::symbol(k); };
  Scalar plus_inv = (s_pow(1) + s_pow(-1)).inverse();
  NCExpr Acov = sym(kSymA) * X - sym(kSymA).inverse() * Y +
                (sym(kSymB) * sym(kSymC).inverse() * plus_inv) * (X * Y - Y * X);
  NCExpr Bcov = sym(kSymB) * Y - sym(kSymB).inverse() * Z +
                (sym(kSymC) * sym(kSymA).inverse() * plus_inv) * (Y * Z - Z * Y);
  NCExpr Ccov = sym(kSymC) * Z - sym(kSymC).inverse() * X +
                (sym(kSymA) * sym(kSymB).inverse() * plus_inv) * (Z * X - X * Z);
  add_element("Acov", ospq_, Acov);
  add_element("Bcov", ospq_, Bcov);
  add_element("Ccov", ospq_, Ccov);

  Scalar qdiff_inv = (Scalar::q() - Scalar::q(-1)).inverse();
  add_element("M1", ospq_, qdiff_inv * Acov);
  add_element("M2", ospq_, qdiff_inv * Bcov);
  add_element("M3", ospq_, qdiff_inv * Ccov);

  // Structure constants; they contain the Casimir, so they are central
  // elements rather than scalars.
  Scalar qdiff_sq_inv = qdiff_inv * qdiff_inv;
  auto span = [&](int u, int v) { return (sym(u) - sym(u).inverse()) * (sym(v) - sym(v).inverse()); };
  auto m_const = [&](int u, int v, int w) {
    return ((s_pow(1) + s_pow(-1)) * qdiff_sq_inv) *
           (span(u, v) * NCExpr::unit(a) - (sym(w) - sym(w).inverse()) * Ups);
  };
  add_element("m1", ospq_, m_const(kSymB, kSymC, kSymA));
  add_element("m2", ospq_, m_const(kSymC, kSymA, kSymB));
  add_element("m3", ospq_, m_const(kSymA, kSymB, kSymC));

  // Value of the q-deformed Bannai-Ito Casimir in the covariance realization.
  NCExpr cas_value =
      ((sym(kSymA) - sym(kSymA).inverse()) * (sym(kSymB) - sym(kSymB).inverse()) *
       (sym(kSymC) - sym(kSymC).inverse()) * qdiff_sq_inv) *
          Ups +
      ((sym(kSymA) - sym(kSymA).inverse()) * qdiff_inv).pow(2) * NCExpr::unit(a) +
      ((sym(kSymB) - sym(kSymB).inverse()) * qdiff_inv).pow(2) * NCExpr::unit(a) +
      ((sym(kSymC) - sym(kSymC).inverse()) * qdiff_inv).pow(2) * NCExpr::unit(a) +
      qdiff_sq_inv * (Ups * Ups) -
      (Scalar::q() / ((Scalar(1) + Scalar::q()) * (Scalar(1) + Scalar::q()))) * NCExpr::unit(a);
  add_element("CasValue", ospq_, cas_value);

  // Equitable generators of sl_q(2), over both the plain and the extended
  // alphabet.
  for (const Presentation* pres : {slq_, slqw_}) {
    auto h = [&](int idx) { return gen(pres, idx); };
    NCExpr x = h(kKappainv) - (s_pow(1) - s_pow(-1)) * (h(kJplus) * h(kKappainv));
    NCExpr y = h(kKappa);
    NCExpr yinv = h(kKappainv);
    NCExpr z = h(kKappainv) + one_minus_qinv * h(kJminus);
    add_element("x", pres, x);
    add_element("y", pres, y);
    add_element("yinv", pres, yinv);
    add_element("z", pres, z);
  }

  // Abstract equitable relations over the free alphabets, in the normalized
  // form (q^1/2 uv +- q^-1/2 vu)/(q^1/2 +- q^-1/2) - 1, which is the form the
  // q -> -q substitution maps term for term.
  auto rel = [&](const AlphabetPtr& alpha, int u, int v, int sign) {
    NCExpr uu = NCExpr::generator(alpha, u);
    NCExpr vv = NCExpr::generator(alpha, v);
    Scalar den = sign > 0 ? s_pow(1) + s_pow(-1) : s_pow(1) - s_pow(-1);
    return (s_pow(1) / den) * (uu * vv) + (Scalar(sign) * s_pow(-1) / den) * (vv * uu) -
           NCExpr::unit(alpha);
  };
  int eX = eq_osp_->index_of("X"), eY = eq_osp_->index_of("Y"), eZ = eq_osp_->index_of("Z");
  eq_osp_relations_ = {rel(eq_osp_, eX, eY, +1), rel(eq_osp_, eY, eZ, +1),
                       rel(eq_osp_, eZ, eX, +1)};
  int ex = eq_slq_->index_of("x"), ey = eq_slq_->index_of("y"), ez = eq_slq_->index_of("z");
  eq_slq_relations_ = {rel(eq_slq_, ex, ey, -1), rel(eq_slq_, ey, ez, -1),
                       rel(eq_slq_, ez, ex, -1)};
}

inline void Catalog::build_suite() {
  using namespace presentations;
  auto g = [&](int idx) { return gen(ospq_, idx); };
  const AlphabetPtr& a = ospq_->alphabet();
  const NCExpr zero(a);

  const NCExpr& S = expr("S");
  const NCExpr& Q = expr("Q");
  const NCExpr& X = expr("X");
  const NCExpr& Y = expr("Y");
  const NCExpr& Yinv = expr("Yinv");
  const NCExpr& Z = expr("Z");
  const NCExpr& Ups = expr("Ups");

  // (a) sCasimir relations.
  add_record("ospq.scasimir.anti-aplus", "{S, A+} = 0", ospq_,
             anticommutator(S, g(kAplus)), zero);
  add_record("ospq.scasimir.anti-aminus", "{S, A-} = 0", ospq_,
             anticommutator(S, g(kAminus)), zero);
  add_record("ospq.scasimir.commute-k", "[S, K] = 0", ospq_, commutator(S, g(kK)), zero);
  add_record("ospq.scasimir.commute-kinv", "[S, Kinv] = 0", ospq_, commutator(S, g(kKinv)),
             zero);

  // (b) Centrality of the Casimir operator.
  for (int k = 0; k < ospq_->alphabet()->size(); ++k) {
    add_record("ospq.casimir.central-" + std::to_string(k + 1),
               "[Q, " + a->gen_name(k) + "] = 0", ospq_, commutator(Q, g(k)), zero);
  }

  // (c) The three equitable relations.
  auto eq_rel = [&](const NCExpr& u, const NCExpr& v) {
    return s_pow(1) * (u * v) + s_pow(-1) * (v * u) -
           NCExpr::unit(a, s_pow(1) + s_pow(-1));
  };
  add_record("equitable.rel-xy", "(q^1/2 XY + q^-1/2 YX)/(q^1/2 + q^-1/2) = 1", ospq_,
             eq_rel(X, Y), zero);
  add_record("equitable.rel-yz", "(q^1/2 YZ + q^-1/2 ZY)/(q^1/2 + q^-1/2) = 1", ospq_,
             eq_rel(Y, Z), zero);
  add_record("equitable.rel-zx", "(q^1/2 ZX + q^-1/2 XZ)/(q^1/2 + q^-1/2) = 1", ospq_,
             eq_rel(Z, X), zero);

  // (d) Relations with the involution.
  const NCExpr& wy = expr("wy");
  add_record("equitable.inv-x", "X wy + wy X = 2 Yinv wy", ospq_, anticommutator(X, wy),
             Scalar(2) * (Yinv * wy));
  add_record("equitable.inv-y", "Y wy + wy Y = 2 Y wy", ospq_, anticommutator(Y, wy),
             Scalar(2) * (Y * wy));
  add_record("equitable.inv-z", "Z wy + wy Z = 2 Yinv wy", ospq_, anticommutator(Z, wy),
             Scalar(2) * (Yinv * wy));
  add_record("equitable.inv-y-yinv", "Y Yinv = 1", ospq_, Y * Yinv, NCExpr::unit(a));
  add_record("equitable.inv-yinv-y", "Yinv Y = 1", ospq_, Yinv * Y, NCExpr::unit(a));
  add_record("equitable.inv-wy-sq", "wy^2 = 1", ospq_, wy * wy, NCExpr::unit(a));

  // (e) The standard generators recovered from the equitable ones.
  Scalar one_minus_qinv_inv = (Scalar(1) - Scalar::q(-1)).inverse();
  Scalar plus_inv = (s_pow(1) + s_pow(-1)).inverse();
  add_record("equitable.std-aplus", "A+ = (1 - XY)/(1 - q^-1)", ospq_,
             one_minus_qinv_inv * (NCExpr::unit(a) - X * Y), g(kAplus));
  add_record("equitable.std-aminus", "A- = (Z - Yinv) wy / (q^1/2 + q^-1/2)", ospq_,
             plus_inv * ((Z - Yinv) * wy), g(kAminus));
  add_record("equitable.std-k", "K = Y wy", ospq_, Y * wy, g(kK));
  add_record("equitable.std-kinv", "Kinv = Yinv wy", ospq_, Yinv * wy, g(kKinv));
  add_record("equitable.std-p", "P = wy", ospq_, wy, g(kP));

  // (f) The six expressions for the normalized Casimir.
  const NCExpr* E[3] = {&X, &Y, &Z};
  auto form_a = [&](int i, int j, int k) {
    // q^1/2 E_i - q^-1/2 E_j + q^1/2 E_k - q^1/2 E_i E_j E_k
    return s_pow(1) * *E[i] - s_pow(-1) * *E[j] + s_pow(1) * *E[k] -
           s_pow(1) * (*E[i] * *E[j] * *E[k]);
  };
  add_record("equitable.upsilon-1", "Ups = q^1/2 X - q^-1/2 Y + q^1/2 Z - q^1/2 XYZ", ospq_,
             form_a(0, 1, 2), Ups);
  add_record("equitable.upsilon-2", "Ups = q^1/2 Y - q^-1/2 Z + q^1/2 X - q^1/2 YZX", ospq_,
             form_a(1, 2, 0), Ups);
  add_record("equitable.upsilon-3", "Ups = q^1/2 Z - q^-1/2 X + q^1/2 Y - q^1/2 ZXY", ospq_,
             form_a(2, 0, 1), Ups);
  auto form_c = [&](int i, int j, int k) {
    // q^1/2 E_i - q^-1/2 E_j - q^-1/2 E_k + q^-1/2 E_j E_i E_k with the cubic
    // word as displayed
    return s_pow(1) * *E[i] - s_pow(-1) * *E[j] - s_pow(-1) * *E[k] +
           s_pow(-1) * (*E[j] * *E[i] * *E[k]);
  };
  // Ups = q^1/2 Y - q^-1/2 Z - q^-1/2 X + q^-1/2 ZYX
  add_record("equitable.upsilon-4", "Ups = q^1/2 Y - q^-1/2 Z - q^-1/2 X + q^-1/2 ZYX", ospq_,
             form_c(1, 2, 0), Ups);
  // Ups = q^1/2 Z - q^-1/2 X - q^-1/2 Y + q^-1/2 XZY
  add_record("equitable.upsilon-5", "Ups = q^1/2 Z - q^-1/2 X - q^-1/2 Y + q^-1/2 XZY", ospq_,
             form_c(2, 0, 1), Ups);
  // Ups = q^1/2 X - q^-1/2 Y - q^-1/2 Z + q^-1/2 YXZ
  add_record("equitable.upsilon-6", "Ups = q^1/2 X - q^-1/2 Y - q^-1/2 Z + q^-1/2 YXZ", ospq_,
             form_c(0, 1, 2), Ups);

  // (g) The equitable relations of sl_q(2).
  {
    const NCExpr& x = find_element("x", slq_)->expr;
    const NCExpr& y = find_element("y", slq_)->expr;
    const NCExpr& z = find_element("z", slq_)->expr;
    const AlphabetPtr& sa = slq_->alphabet();
    auto su_rel = [&](const NCExpr& u, const NCExpr& v) {
      return s_pow(1) * (u * v) - s_pow(-1) * (v * u) -
             NCExpr::unit(sa, s_pow(1) - s_pow(-1));
    };
    add_record("slq.equitable-xy", "(q^1/2 xy - q^-1/2 yx)/(q^1/2 - q^-1/2) = 1", slq_,
               su_rel(x, y), NCExpr(sa));
    add_record("slq.equitable-yz", "(q^1/2 yz - q^-1/2 zy)/(q^1/2 - q^-1/2) = 1", slq_,
               su_rel(y, z), NCExpr(sa));
    add_record("slq.equitable-zx", "(q^1/2 zx - q^-1/2 xz)/(q^1/2 - q^-1/2) = 1", slq_,
               su_rel(z, x), NCExpr(sa));
  }

  // (h) The tilde generators satisfy sl_q(2) with q -> -q.
  {
    const NCExpr& kt = expr("kt");
    const NCExpr& ktinv = expr("ktinv");
    const NCExpr& jtp = expr("Jt+");
    const NCExpr& jtm = expr("Jt-");
    add_record("tilde.kappa-unit", "kt ktinv = 1", ospq_, kt * ktinv, NCExpr::unit(a));
    add_record("tilde.kappa-unit-rev", "ktinv kt = 1", ospq_, ktinv * kt, NCExpr::unit(a));
    add_record("tilde.jplus", "kt Jt+ ktinv = -q Jt+", ospq_, kt * jtp * ktinv,
               (-Scalar::q()) * jtp);
    add_record("tilde.jminus", "kt Jt- ktinv = -q^-1 Jt-", ospq_, kt * jtm * ktinv,
               (-Scalar::q(-1)) * jtm);
    add_record("tilde.bracket", "[Jt+, Jt-] = (kt - ktinv)/(i (q^1/2 + q^-1/2))", ospq_,
               commutator(jtp, jtm), (-Scalar::i() * plus_inv) * (kt - ktinv));
  }

  // (i) The covariance relations.
  const NCExpr& Acov = expr("Acov");
  const NCExpr& Bcov = expr("Bcov");
  const NCExpr& Ccov = expr("Ccov");
  auto sym = [](int k) { return Scalar::symbol(k); };
  Scalar qdiff = Scalar::q() - Scalar::q(-1);
  Scalar sdiff_inv = (s_pow(1) - s_pow(-1)).inverse();
  auto cov_rhs = [&](const NCExpr& third, int u, int v, int w) {
    NCExpr inner = third + sdiff_inv * ((sym(u) - sym(u).inverse()) *
                                            (sym(v) - sym(v).inverse()) * NCExpr::unit(a) -
                                        (sym(w) - sym(w).inverse()) * Ups);
    return qdiff * inner;
  };
  add_record("covariance.qbi1-ab",
             "(q^1/2 AB + q^-1/2 BA)/(q - q^-1) = C + ((a-a^-1)(b-b^-1) - (c-c^-1)Ups)/(q^1/2 - q^-1/2)",
             ospq_, q_anticommutator(Acov, Bcov), cov_rhs(Ccov, kSymA, kSymB, kSymC));
  add_record("covariance.qbi1-bc",
             "(q^1/2 BC + q^-1/2 CB)/(q - q^-1) = A + ((b-b^-1)(c-c^-1) - (a-a^-1)Ups)/(q^1/2 - q^-1/2)",
             ospq_, q_anticommutator(Bcov, Ccov), cov_rhs(Acov, kSymB, kSymC, kSymA));
  add_record("covariance.qbi1-ca",
             "(q^1/2 CA + q^-1/2 AC)/(q - q^-1) = B + ((c-c^-1)(a-a^-1) - (b-b^-1)Ups)/(q^1/2 - q^-1/2)",
             ospq_, q_anticommutator(Ccov, Acov), cov_rhs(Bcov, kSymC, kSymA, kSymB));

  // (j) The normalized generators satisfy the q-deformed Bannai-Ito relations.
  const NCExpr& M1 = expr("M1");
  const NCExpr& M2 = expr("M2");
  const NCExpr& M3 = expr("M3");
  const NCExpr& m1 = expr("m1");
  const NCExpr& m2 = expr("m2");
  const NCExpr& m3 = expr("m3");
  add_record("covariance.qbi2-m1m2", "{M1, M2}_q = M3 + m3", ospq_, q_anticommutator(M1, M2),
             M3 + m3);
  add_record("covariance.qbi2-m2m3", "{M2, M3}_q = M1 + m1", ospq_, q_anticommutator(M2, M3),
             M1 + m1);
  add_record("covariance.qbi2-m3m1", "{M3, M1}_q = M2 + m2", ospq_, q_anticommutator(M3, M1),
             M2 + m2);

  // (k) The Casimir of the realized algebra takes its definite value.
  {
    Scalar q = Scalar::q(), qinv = Scalar::q(-1);
    NCExpr lam = (s_pow(-1) - s_pow(3)) * (M1 * M2 * M3) + q * (M1 * M1) + qinv * (M2 * M2) +
                 q * (M3 * M3) - (Scalar(1) - q) * (m1 * M1) - (Scalar(1) - qinv) * (m2 * M2) -
                 (Scalar(1) - q) * (m3 * M3);
    add_record("covariance.casimir-value",
               "Lambda(M1,M2,M3; m1,m2,m3) equals its definite central value", ospq_, lam,
               expr("CasValue"));
  }

  // (l) Centrality of the abstract Casimir operators.
  {
    NCExpr lam = qbi_casimir();
    const AlphabetPtr& qa = qbi_->alphabet();
    for (int k = 0; k < 3; ++k) {
      add_record("qbi.casimir-central-i" + std::to_string(k + 1),
                 "[Lambda, I" + std::to_string(k + 1) + "] = 0", qbi_,
                 commutator(lam, NCExpr::generator(qa, k)), NCExpr(qa));
    }
    NCExpr L = bi_casimir();
    const AlphabetPtr& ba = bi_->alphabet();
    for (int k = 0; k < 3; ++k) {
      add_record("bi.casimir-central-k" + std::to_string(k + 1),
                 "[L, K" + std::to_string(k + 1) + "] = 0", bi_,
                 commutator(L, NCExpr::generator(ba, k)), NCExpr(ba));
    }
  }

  // (m) Adjoining an involution to sl_q(2) reproduces the involution
  // relations of the equitable presentation.
  {
    const NCExpr& x = find_element("x", slqw_)->expr;
    const NCExpr& y = find_element("y", slqw_)->expr;
    const NCExpr& yinv = find_element("yinv", slqw_)->expr;
    const NCExpr& z = find_element("z", slqw_)->expr;
    NCExpr wyx = NCExpr::generator(slqw_->alphabet(), kWy);
    add_record("slqw.inv-x", "x wy + wy x = 2 yinv wy", slqw_, anticommutator(x, wyx),
               Scalar(2) * (yinv * wyx));
    add_record("slqw.inv-y", "y wy + wy y = 2 y wy", slqw_, anticommutator(y, wyx),
               Scalar(2) * (y * wyx));
    add_record("slqw.inv-z", "z wy + wy z = 2 yinv wy", slqw_, anticommutator(z, wyx),
               Scalar(2) * (yinv * wyx));
  }
}

/// Shared, lazily constructed catalog instance.
inline const Catalog& catalog() {
  static const Catalog c;
  return c;
}

}  // namespace qk
