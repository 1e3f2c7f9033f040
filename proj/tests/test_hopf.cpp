#include "catch2/catch_amalgamated.hpp"
#include "test_support.hpp"

using namespace qktest;
using namespace qk::presentations;

namespace {

NCExpr gen(int idx) { return NCExpr::generator(presentations::ospq().alphabet(), idx); }

}  // namespace

TEST_CASE("coproduct on generators and products") {
  const AlphabetPtr& a = presentations::ospq().alphabet();
  CHECK(coproduct(gen(kK)) == TensorExpr::outer(gen(kK), gen(kK)));
  CHECK(coproduct(NCExpr::unit(a)) == TensorExpr::unit(a));

  // Group-likes multiply componentwise.
  CHECK(coproduct(gen(kK) * gen(kP)) ==
        TensorExpr::outer(gen(kK) * gen(kP), gen(kK) * gen(kP)));
}

TEST_CASE("counit") {
  const Catalog& cat = catalog();
  CHECK(counit(gen(kAplus) * gen(kK)).is_zero());
  CHECK(counit(gen(kK) * gen(kKinv)).is_one());
  CHECK(counit(cat.expr("X")).is_one());
  CHECK(counit(cat.expr("Z")).is_one());
}

TEST_CASE("antipode") {
  const AlphabetPtr& a = presentations::ospq().alphabet();
  CHECK(antipode(gen(kP)) == gen(kP));
  CHECK(antipode(NCExpr::unit(a)) == NCExpr::unit(a));
  // Anti-multiplicative extension: sigma(A+ K) = sigma(K) sigma(A+).
  CHECK(antipode(gen(kAplus) * gen(kK)) ==
        gen(kKinv) * (-(gen(kAplus) * gen(kKinv) * gen(kP))));
}

TEST_CASE("all Hopf axiom families pass") {
  const Catalog& cat = catalog();
  auto checks = check_hopf_axioms(cat.ospq());
  // Five families over 12 relations / 5 generators.
  int relation_checks = 0, coassoc = 0, counit_checks = 0, antipode_checks = 0;
  for (const HopfCheck& c : checks) {
    CAPTURE(c.id);
    CHECK(c.ok);
    if (c.id.rfind("hopf.delta-relation.", 0) == 0) ++relation_checks;
    if (c.id.rfind("hopf.coassoc.", 0) == 0) ++coassoc;
    if (c.id.rfind("hopf.counit-", 0) == 0) ++counit_checks;
    if (c.id.rfind("hopf.antipode-", 0) == 0) ++antipode_checks;
  }
  CHECK(relation_checks == 12);
  CHECK(coassoc == 5);
  CHECK(counit_checks == 10);
  CHECK(antipode_checks == 10);
}

TEST_CASE("selected axioms in closed form") {
  const Catalog& cat = catalog();
  const Presentation& p = cat.ospq();
  const HopfData& h = HopfData::ospq_standard();

  // (eps x id) Delta(X) = X.
  TensorExpr dX = coproduct(cat.expr("X"), h);
  CHECK(check_identity(counit_first_slot(dX, h), cat.expr("X"), p).holds);

  // m(sigma x id) Delta(A+) = 0 = eps(A+).
  TensorExpr dap = coproduct(gen(kAplus), h);
  CHECK(normal_form(antipode_multiply(dap, h, true), p).is_zero());

  // Delta respects {A+, A-}: Delta(A+)Delta(A-) + Delta(A-)Delta(A+)
  // reduces to (K (x) K - Kinv (x) Kinv)/(s - s^-1).
  TensorExpr lhs = coproduct(gen(kAplus), h) * coproduct(gen(kAminus), h) +
                   coproduct(gen(kAminus), h) * coproduct(gen(kAplus), h);
  Scalar c = (Scalar::symbol(kSymS) - Scalar::symbol(kSymS, -1)).inverse();
  TensorExpr rhs = TensorExpr::outer(gen(kK), gen(kK)) * c -
                   TensorExpr::outer(gen(kKinv), gen(kKinv)) * c;
  TensorExpr diff = tensor_normal_form(lhs, p) - tensor_normal_form(rhs, p);
  CHECK(diff.is_zero());
}

TEST_CASE("equitable coproduct formulas") {
  const Catalog& cat = catalog();
  for (const HopfCheck& c : check_equitable_coproducts(cat)) {
    CAPTURE(c.id);
    CHECK(c.ok);
  }
}

TEST_CASE("coassociativity on composite elements") {
  const Catalog& cat = catalog();
  const Presentation& p = cat.ospq();
  const HopfData& h = HopfData::ospq_standard();
  for (const char* name : {"X", "S", "Z"}) {
    TensorExpr d = coproduct(cat.expr(name), h);
    Tensor3Expr lhs = tensor3_normal_form(coproduct_first_slot(d, h), p);
    Tensor3Expr rhs = tensor3_normal_form(coproduct_second_slot(d, h), p);
    CAPTURE(name);
    CHECK((lhs - rhs).is_zero());
  }
}

TEST_CASE("counit agrees with the normal-form specialization") {
  // eps equals: reduce, then send A+- -> 0 and K, Kinv, P -> 1.
  Rng rng(7401);
  const Catalog& cat = catalog();
  const Presentation& p = cat.ospq();
  const AlphabetPtr& a = p.alphabet();
  GenImages<NCExpr> kill(5);
  kill[kAplus] = NCExpr(a);
  kill[kAminus] = NCExpr(a);
  kill[kK] = NCExpr::unit(a);
  kill[kKinv] = NCExpr::unit(a);
  kill[kP] = NCExpr::unit(a);
  for (int t = 0; t < 50; ++t) {
    NCExpr x = rng.expr(a, 3, 4);
    NCExpr specialized = extend_hom(kill, normal_form(x, p), NCExpr::unit(a));
    REQUIRE(specialized.is_scalar());
    CHECK(specialized.scalar_part() == counit(x));
  }
}
