#include "catch2/catch_amalgamated.hpp"
#include "test_support.hpp"

using namespace qktest;
using namespace qk::presentations;

namespace {

NCExpr gen(int idx) { return NCExpr::generator(presentations::ospq().alphabet(), idx); }

Scalar s_pow(int e) { return Scalar::symbol(kSymS, e); }

}  // namespace

TEST_CASE("lowering coefficients") {
  CHECK(rho(0).is_zero());

  // Hand expansion of [1 + nu]_q + [nu]_q = (w(q+1) - w^-1(q^-1+1))/(q - q^-1).
  Scalar w = Scalar::symbol(kSymW), winv = Scalar::symbol(kSymW, -1);
  Scalar expected = (w * (Scalar::q() + Scalar(1)) - winv * (Scalar::q(-1) + Scalar(1))) /
                    (Scalar::q() - Scalar::q(-1));
  CHECK(rho(1) == expected);

  // Generic irreducibility: rho_n never vanishes identically for n >= 1.
  for (int n = 1; n <= 20; ++n) CHECK_FALSE(rho(n).is_zero());

  // Truncation condition.
  for (int N : {2, 4, 6, 8}) CHECK(truncation_vanishes(N));
  CHECK_FALSE(truncation_vanishes(1));
}

TEST_CASE("module action on basis vectors") {
  RepVector f0 = RepVector::basis(0, +1);
  RepVector kf0 = act_W(gen(kK), f0);
  REQUIRE(kf0.entries.size() == 1);
  CHECK(kf0.entries.at(0) == s_pow(1) * Scalar::symbol(kSymW));

  CHECK(act_W(gen(kAminus), f0).is_zero());
  CHECK(act_W(gen(kAplus), f0) == RepVector::basis(1, +1));

  // Parity action.
  RepVector f3m = RepVector::basis(3, -1);
  RepVector pf3m = act_W(gen(kP), f3m);
  CHECK(pf3m.entries.at(3) == Scalar(1));  // e (-1)^n = (-1)(-1) = 1
}

TEST_CASE("Casimir spectrum on the module") {
  const Catalog& cat = catalog();
  Scalar nu_bracket = q_integer_shifted(0);
  for (int e : {+1, -1}) {
    for (int n = 0; n <= 20; ++n) {
      RepVector v = act_W(cat.expr("Q"), RepVector::basis(n, e));
      REQUIRE(v.entries.size() == 1);
      CHECK(v.entries.at(n) == Scalar(-e) * nu_bracket);
    }
  }
}

TEST_CASE("finite matrices") {
  const AlphabetPtr& a = presentations::ospq().alphabet();
  RepMatrix mk = finite_matrix(gen(kK), 2, +1);
  CHECK(mk.at(0, 0) == s_pow(-2));
  CHECK(mk.at(1, 1) == Scalar(1));
  CHECK(mk.at(2, 2) == s_pow(2));
  CHECK(mk.at(0, 1).is_zero());

  RepMatrix mp = finite_matrix(gen(kP), 2, +1);
  CHECK(mp.at(0, 0) == Scalar(1));
  CHECK(mp.at(1, 1) == Scalar(-1));
  CHECK(mp.at(2, 2) == Scalar(1));

  CHECK(finite_matrix(gen(kK) * gen(kKinv) - NCExpr::unit(a), 4, -1).is_zero());

  CHECK_THROWS_AS(finite_matrix(gen(kK), 3, +1), OddN);
}

TEST_CASE("raising operator is nilpotent of index exactly N + 1") {
  for (int N : {2, 4}) {
    CHECK(finite_matrix(gen(kAplus).pow(N + 1), N, +1).is_zero());
    CHECK_FALSE(finite_matrix(gen(kAplus).pow(N), N, +1).is_zero());
  }
}

TEST_CASE("finite Casimir matrices are scalar") {
  const Catalog& cat = catalog();
  for (int N : {2, 4}) {
    for (int e : {+1, -1}) {
      RepMatrix q_mat = finite_matrix(cat.expr("Q"), N, e);
      // -e [-(N+1)/2]_q with w = s^-(N+1).
      Scalar eigen = Scalar(-e) * (s_pow(-(N + 1)) - s_pow(N + 1)) /
                     (s_pow(2) - s_pow(-2));
      for (int r = 0; r <= N; ++r) {
        for (int c = 0; c <= N; ++c) {
          CHECK(q_mat.at(r, c) == (r == c ? eigen : Scalar(0)));
        }
      }
    }
  }
}

TEST_CASE("polynomial realization") {
  CHECK(bargmann_apply(gen(kAplus), BargmannPoly::monomial(3)) == BargmannPoly::monomial(4));
  CHECK(bargmann_apply(gen(kAminus), BargmannPoly::monomial(0)).is_zero());
  CHECK(bargmann_apply(gen(kAminus), BargmannPoly::monomial(1)) ==
        BargmannPoly::monomial(0, rho(1)));
}

TEST_CASE("polynomial realization agrees with the module on all short words") {
  const AlphabetPtr& a = presentations::ospq().alphabet();
  // Exhaustive over words of length <= 4 applied to z^n, n <= 10.
  std::vector<Word> words{Word{}};
  for (size_t start = 0, len = 1; len <= 4; ++len) {
    size_t end = words.size();
    for (size_t k = start; k < end; ++k) {
      for (int g = 0; g < a->size(); ++g) {
        Word w = words[k];
        w.push_back(static_cast<uint8_t>(g));
        words.push_back(std::move(w));
      }
    }
    start = end;
  }
  for (int e : {+1, -1}) {
    for (const Word& w : words) {
      NCExpr x = NCExpr::word(a, w);
      for (int n = 0; n <= 10; ++n) {
        BargmannPoly via_poly = bargmann_apply(x, BargmannPoly::monomial(n), e);
        RepVector via_module = act_W(x, RepVector::basis(n, e));
        BargmannPoly expected;
        for (const auto& [m, c] : via_module.entries) expected.add(m, c);
        REQUIRE(via_poly == expected);
      }
    }
  }
}

TEST_CASE("polynomial realization is linear") {
  Rng rng(7601);
  const AlphabetPtr& a = presentations::ospq().alphabet();
  for (int t = 0; t < 15; ++t) {
    NCExpr x = rng.expr(a, 2, 3);
    BargmannPoly p;
    int terms = rng.uniform(1, 4);
    for (int k = 0; k < terms; ++k) p.add(rng.uniform(0, 8), Scalar(rng.nonzero_rational()));
    BargmannPoly whole = bargmann_apply(x, p);
    BargmannPoly by_parts;
    for (const auto& [n, c] : p.coefficients) {
      BargmannPoly piece = bargmann_apply(x, BargmannPoly::monomial(n));
      for (const auto& [m, v] : piece.coefficients) by_parts.add(m, v * c);
    }
    CHECK(whole == by_parts);
  }
}

TEST_CASE("module checks pass") {
  const Catalog& cat = catalog();
  for (auto kind : {RepCheckKind::WRelations, RepCheckKind::WEquitable, RepCheckKind::WCasimir,
                    RepCheckKind::BargmannConsistency}) {
    for (const RepCheck& c : check_rep(cat, kind, 12)) {
      CAPTURE(c.id);
      CHECK(c.ok);
    }
  }
}

TEST_CASE("commutant of the truncated module is scalar") {
  for (int N : {2, 4}) {
    CHECK(finite_commutant_dimension(N, +1, GaussianRational(2)) == 1);
  }
}

TEST_CASE("reduced soundness bridge") {
  // The full-depth bridge over every identity runs in the acceptance suite;
  // this covers the same path at a smaller cutoff.
  const Catalog& cat = catalog();
  int covered = 0;
  for (const IdentityRecord& r : cat.suite()) {
    if (r.presentation != &cat.ospq()) continue;
    if (r.id.rfind("covariance.", 0) == 0) continue;  // the heavy ones
    NCExpr diff = r.lhs - r.rhs;
    for (int e : {+1, -1}) {
      for (int n = 0; n <= 8; ++n) CHECK(act_W(diff, RepVector::basis(n, e)).is_zero());
      CHECK(finite_matrix(diff, 2, e).is_zero());
    }
    ++covered;
  }
  CHECK(covered >= 30);
}
