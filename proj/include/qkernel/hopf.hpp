#pragma once

// The Hopf structure of osp_q(1|2) with grade involution: coproduct, counit
// and coinverse, plus exhaustive verification of the Hopf-algebra axioms.
// Tensor products use the plain componentwise rule with no Koszul signs, as
// the grade involution is an explicit generator.

#include <string>
#include <vector>

#include "qkernel/catalog.hpp"

namespace qk {

struct HopfData {
  GenImages<TensorExpr> coproduct_images;
  GenImages<Scalar> counit_images;
  GenImages<NCExpr> antipode_images;

  /// The bundled structure on the ospq alphabet:
  ///   D(A+) = A+ (x) KP + 1 (x) A+        D(A-) = A- (x) P + K^-1 (x) A-
  ///   D(K)  = K (x) K                     D(P)  = P (x) P
  ///   eps(K) = eps(P) = 1, eps(A+-) = 0
  ///   sigma(A+) = -A+ K^-1 P, sigma(A-) = -K A- P, sigma(K) = K^-1, sigma(P) = P
  /// The images of K^-1 are forced: group-like inverse and sigma(K^-1) = K.
  static const HopfData& ospq_standard() {
    static const HopfData h = [] {
      using namespace presentations;
      const AlphabetPtr& a = qk::presentations::ospq().alphabet();
      auto g = [&](int idx) { return NCExpr::generator(a, idx); };
      auto w1 = [](int idx) { return Word{static_cast<uint8_t>(idx)}; };

      HopfData h;
      h.coproduct_images.resize(5);
      h.counit_images.resize(5);
      h.antipode_images.resize(5);

      TensorExpr dap(a);
      dap.add_term(w1(kAplus), Word{kK, kP}, Scalar(1));
      dap.add_term(Word{}, w1(kAplus), Scalar(1));
      TensorExpr dam(a);
      dam.add_term(w1(kAminus), w1(kP), Scalar(1));
      dam.add_term(w1(kKinv), w1(kAminus), Scalar(1));
      h.coproduct_images[kAplus] = dap;
      h.coproduct_images[kAminus] = dam;
      h.coproduct_images[kK] = TensorExpr::outer(g(kK), g(kK));
      h.coproduct_images[kKinv] = TensorExpr::outer(g(kKinv), g(kKinv));
      h.coproduct_images[kP] = TensorExpr::outer(g(kP), g(kP));

      h.counit_images[kAplus] = Scalar(0);
      h.counit_images[kAminus] = Scalar(0);
      h.counit_images[kK] = Scalar(1);
      h.counit_images[kKinv] = Scalar(1);
      h.counit_images[kP] = Scalar(1);

      h.antipode_images[kAplus] = -(g(kAplus) * g(kKinv) * g(kP));
      h.antipode_images[kAminus] = -(g(kK) * g(kAminus) * g(kP));
      h.antipode_images[kK] = g(kKinv);
      h.antipode_images[kKinv] = g(kK);
      h.antipode_images[kP] = g(kP);
      return h;
    }();
    return h;
  }
};

inline TensorExpr coproduct(const NCExpr& x, const HopfData& h = HopfData::ospq_standard()) {
  return extend_hom(h.coproduct_images, x, TensorExpr::unit(x.alphabet()));
}

inline Scalar counit(const NCExpr& x, const HopfData& h = HopfData::ospq_standard()) {
  return extend_hom(h.counit_images, x, Scalar(1));
}

inline NCExpr antipode(const NCExpr& x, const HopfData& h = HopfData::ospq_standard()) {
  return extend_antihom(h.antipode_images, x, NCExpr::unit(x.alphabet()));
}

/// Slot-wise normal form: equality in the tensor square of the presented
/// algebra is equality of these reduced term maps.
inline TensorExpr tensor_normal_form(const TensorExpr& t, const Presentation& p,
                                     NormalFormOptions opts = NormalFormOptions{}) {
  TensorExpr out(t.alphabet());
  for (const auto& [key, c] : t.terms()) {
    NCExpr left = normal_form(NCExpr::word(t.alphabet(), key.first), p, opts);
    NCExpr right = normal_form(NCExpr::word(t.alphabet(), key.second), p, opts);
    for (const auto& [wl, cl] : left.terms()) {
      for (const auto& [wr, cr] : right.terms()) out.add_term(wl, wr, c * cl * cr);
    }
  }
  return out;
}

inline Tensor3Expr tensor3_normal_form(const Tensor3Expr& t, const Presentation& p,
                                       NormalFormOptions opts = NormalFormOptions{}) {
  Tensor3Expr out(t.alphabet());
  for (const auto& [key, c] : t.terms()) {
    NCExpr r0 = normal_form(NCExpr::word(t.alphabet(), std::get<0>(key)), p, opts);
    NCExpr r1 = normal_form(NCExpr::word(t.alphabet(), std::get<1>(key)), p, opts);
    NCExpr r2 = normal_form(NCExpr::word(t.alphabet(), std::get<2>(key)), p, opts);
    for (const auto& [w0, c0] : r0.terms()) {
      for (const auto& [w1, c1] : r1.terms()) {
        for (const auto& [w2, c2] : r2.terms()) out.add_term(w0, w1, w2, c * c0 * c1 * c2);
      }
    }
  }
  return out;
}

/// (Delta (x) id): expands the first slot of a tensor.
inline Tensor3Expr coproduct_first_slot(const TensorExpr& t, const HopfData& h) {
  Tensor3Expr out(t.alphabet());
  for (const auto& [key, c] : t.terms()) {
    TensorExpr d = coproduct(NCExpr::word(t.alphabet(), key.first), h);
    for (const auto& [dk, dc] : d.terms()) out.add_term(dk.first, dk.second, key.second, c * dc);
  }
  return out;
}

/// (id (x) Delta): expands the second slot of a tensor.
inline Tensor3Expr coproduct_second_slot(const TensorExpr& t, const HopfData& h) {
  Tensor3Expr out(t.alphabet());
  for (const auto& [key, c] : t.terms()) {
    TensorExpr d = coproduct(NCExpr::word(t.alphabet(), key.second), h);
    for (const auto& [dk, dc] : d.terms()) out.add_term(key.first, dk.first, dk.second, c * dc);
  }
  return out;
}

/// (eps (x) id) collapsed to the algebra.
inline NCExpr counit_first_slot(const TensorExpr& t, const HopfData& h) {
  NCExpr out(t.alphabet());
  for (const auto& [key, c] : t.terms()) {
    Scalar e = counit(NCExpr::word(t.alphabet(), key.first), h);
    out.add_term(key.second, c * e);
  }
  return out;
}

/// (id (x) eps) collapsed to the algebra.
inline NCExpr counit_second_slot(const TensorExpr& t, const HopfData& h) {
  NCExpr out(t.alphabet());
  for (const auto& [key, c] : t.terms()) {
    Scalar e = counit(NCExpr::word(t.alphabet(), key.second), h);
    out.add_term(key.first, c * e);
  }
  return out;
}

/// m o (sigma (x) id) or m o (id (x) sigma), multiplying the slots back.
inline NCExpr antipode_multiply(const TensorExpr& t, const HopfData& h, bool antipode_on_first) {
  NCExpr out(t.alphabet());
  for (const auto& [key, c] : t.terms()) {
    NCExpr left = NCExpr::word(t.alphabet(), key.first);
    NCExpr right = NCExpr::word(t.alphabet(), key.second);
    NCExpr prod = antipode_on_first ? antipode(left, h) * right : left * antipode(right, h);
    out += prod * c;
  }
  return out;
}

struct HopfCheck {
  std::string id;
  std::string claim;
  bool ok;
  std::string residual;  // empty on success
};

namespace detail {

inline std::string tensor_residual_note(const TensorExpr& t) {
  return t.is_zero() ? std::string() : std::to_string(t.terms().size()) + " residual tensor terms";
}

}  // namespace detail

/// Runs the five Hopf axiom families exhaustively over the generators and the
/// full defining relation set:
///   (1) the coproduct respects every defining relation,
///   (2) coassociativity on every generator,
///   (3) the counit axioms on every generator,
///   (4) the antipode axioms on every generator,
///   (5) the counit respects every defining relation.
inline std::vector<HopfCheck> check_hopf_axioms(const Presentation& p,
                                                const HopfData& h = HopfData::ospq_standard(),
                                                NormalFormOptions opts = NormalFormOptions{}) {
  std::vector<HopfCheck> checks;
  const AlphabetPtr& a = p.alphabet();

  auto rule_label = [&](const RewriteRule& r) {
    return a->gen_name(r.lhs_first) + "*" + a->gen_name(r.lhs_second);
  };

  // (1) Delta is a homomorphism on the relation ideal.
  for (const RewriteRule& r : p.rules()) {
    NCExpr rel = NCExpr::word(a, r.lhs_word()) - r.rhs;
    TensorExpr residual = tensor_normal_form(coproduct(rel, h), p, opts);
    checks.push_back({"hopf.delta-relation." + rule_label(r),
                      "Delta respects " + rule_label(r) + " relation", residual.is_zero(),
                      detail::tensor_residual_note(residual)});
  }

  // (2) Coassociativity.
  for (int g = 0; g < a->size(); ++g) {
    TensorExpr d = coproduct(NCExpr::generator(a, g), h);
    Tensor3Expr lhs = tensor3_normal_form(coproduct_first_slot(d, h), p, opts);
    Tensor3Expr rhs = tensor3_normal_form(coproduct_second_slot(d, h), p, opts);
    Tensor3Expr diff = lhs - rhs;
    checks.push_back({"hopf.coassoc." + a->gen_name(g),
                      "(Delta x id)Delta = (id x Delta)Delta on " + a->gen_name(g),
                      diff.is_zero(),
                      diff.is_zero() ? std::string()
                                     : std::to_string(diff.terms().size()) + " residual terms"});
  }

  // (3) Counit axioms.
  for (int g = 0; g < a->size(); ++g) {
    NCExpr gen = NCExpr::generator(a, g);
    TensorExpr d = coproduct(gen, h);
    IdentityCheck left = check_identity(counit_first_slot(d, h), gen, p, opts);
    IdentityCheck right = check_identity(counit_second_slot(d, h), gen, p, opts);
    checks.push_back({"hopf.counit-left." + a->gen_name(g),
                      "(eps x id)Delta = id on " + a->gen_name(g), left.holds, std::string()});
    checks.push_back({"hopf.counit-right." + a->gen_name(g),
                      "(id x eps)Delta = id on " + a->gen_name(g), right.holds, std::string()});
  }

  // (4) Antipode axioms.
  for (int g = 0; g < a->size(); ++g) {
    NCExpr gen = NCExpr::generator(a, g);
    TensorExpr d = coproduct(gen, h);
    NCExpr target = NCExpr::unit(a, counit(gen, h));
    IdentityCheck left = check_identity(antipode_multiply(d, h, true), target, p, opts);
    IdentityCheck right = check_identity(antipode_multiply(d, h, false), target, p, opts);
    checks.push_back({"hopf.antipode-left." + a->gen_name(g),
                      "m(sigma x id)Delta = eps on " + a->gen_name(g), left.holds,
                      std::string()});
    checks.push_back({"hopf.antipode-right." + a->gen_name(g),
                      "m(id x sigma)Delta = eps on " + a->gen_name(g), right.holds,
                      std::string()});
  }

  // (5) eps is a homomorphism on the relation ideal.
  for (const RewriteRule& r : p.rules()) {
    NCExpr rel = NCExpr::word(a, r.lhs_word()) - r.rhs;
    Scalar e = counit(rel, h);
    checks.push_back({"hopf.epsilon-relation." + rule_label(r),
                      "eps respects " + rule_label(r) + " relation", e.is_zero(), std::string()});
  }

  return checks;
}

/// The coproducts of the equitable generators:
///   D(X) = X (x) 1 + Y^-1 (x) (X - 1)      D(Z) = Z (x) 1 + Y^-1 (x) (Z - 1)
///   D(Y) = Y (x) Y                          D(wy) = wy (x) wy
inline std::vector<HopfCheck> check_equitable_coproducts(
    const Catalog& cat, const HopfData& h = HopfData::ospq_standard(),
    NormalFormOptions opts = NormalFormOptions{}) {
  const Presentation& p = cat.ospq();
  const NCExpr& X = cat.expr("X");
  const NCExpr& Y = cat.expr("Y");
  const NCExpr& Yinv = cat.expr("Yinv");
  const NCExpr& Z = cat.expr("Z");
  const NCExpr& wy = cat.expr("wy");
  NCExpr one = NCExpr::unit(p.alphabet());

  struct Case {
    const char* name;
    const NCExpr* elem;
    TensorExpr expected;
  };
  std::vector<Case> cases;
  cases.push_back({"X", &X, TensorExpr::outer(X, one) + TensorExpr::outer(Yinv, X - one)});
  cases.push_back({"Y", &Y, TensorExpr::outer(Y, Y)});
  cases.push_back({"Z", &Z, TensorExpr::outer(Z, one) + TensorExpr::outer(Yinv, Z - one)});
  cases.push_back({"wy", &wy, TensorExpr::outer(wy, wy)});

  std::vector<HopfCheck> checks;
  for (const Case& c : cases) {
    TensorExpr lhs = tensor_normal_form(coproduct(*c.elem, h), p, opts);
    TensorExpr rhs = tensor_normal_form(c.expected, p, opts);
    TensorExpr diff = lhs - rhs;
    checks.push_back({std::string("hopf.delta-equitable.") + c.name,
                      std::string("Delta(") + c.name + ") matches its equitable form",
                      diff.is_zero(), detail::tensor_residual_note(diff)});
  }
  return checks;
}

}  // namespace qk
