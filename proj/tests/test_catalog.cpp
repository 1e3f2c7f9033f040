#include <set>

#include "catch2/catch_amalgamated.hpp"
#include "test_support.hpp"

using namespace qktest;
using namespace qk::presentations;

namespace {

Scalar s_pow(int e) { return Scalar::symbol(kSymS, e); }

}  // namespace

TEST_CASE("defining expressions of named elements") {
  const Catalog& cat = catalog();
  const AlphabetPtr& a = cat.ospq().alphabet();

  CHECK(cat.expr("Y") == NCExpr::word(a, Word{kK, kP}));
  CHECK(cat.expr("wy") == NCExpr::generator(a, kP));

  // S = A+A- - (s^-1 K - s Kinv)/(s^2 - s^-2).
  Scalar d = (s_pow(2) - s_pow(-2)).inverse();
  NCExpr S(a);
  S.add_term(Word{kAplus, kAminus}, Scalar(1));
  S.add_term(Word{kK}, -s_pow(-1) * d);
  S.add_term(Word{kKinv}, s_pow(1) * d);
  CHECK(cat.expr("S") == S);

  // Ups = (q - q^-1) Q, stored unreduced.
  CHECK(cat.expr("Ups") == (Scalar::q() - Scalar::q(-1)) * cat.expr("Q"));

  // The cached normal form is the normal form of the stored expression.
  CHECK(cat.element("Acov").normal == normal_form(cat.expr("Acov"), cat.ospq()));

  CHECK_THROWS_AS(cat.element("nosuch"), UnknownElement);
  // Ambiguous short name: x exists for both sl_q(2) presentations.
  CHECK_THROWS_AS(cat.element("x"), UnknownElement);
  CHECK(cat.find_element("x", &cat.slq()) != nullptr);
  CHECK(cat.find_element("x", &cat.ospq()) == nullptr);
}

TEST_CASE("the identity suite passes") {
  const Catalog& cat = catalog();
  REQUIRE(cat.suite().size() >= 50);
  std::set<std::string> ids;
  for (const IdentityRecord& r : cat.suite()) {
    CAPTURE(r.id);
    CHECK(ids.insert(r.id).second);  // unique ids
    IdentityCheck c = check_identity(r.lhs, r.rhs, *r.presentation);
    CHECK(c.holds);
    CHECK(c.residual.is_zero());
  }
}

TEST_CASE("all six Casimir expressions agree pairwise") {
  const Catalog& cat = catalog();
  std::vector<NCExpr> forms;
  for (const IdentityRecord& r : cat.suite()) {
    if (r.id.rfind("equitable.upsilon-", 0) == 0)
      forms.push_back(normal_form(r.lhs, *r.presentation));
  }
  REQUIRE(forms.size() == 6);
  for (size_t i = 0; i < forms.size(); ++i) {
    for (size_t j = i + 1; j < forms.size(); ++j) CHECK(forms[i] == forms[j]);
  }
}

TEST_CASE("the normalized covariance presentation is cyclically symmetric") {
  // Over abstract letters X, Y, Z and a central letter U standing for the
  // Casimir, the relation set is a fixed point of the simultaneous cycle
  // (X,Y,Z) -> (Y,Z,X), (a,b,c) -> (b,c,a).
  AlphabetPtr free_alg = make_alphabet("equitable-free", {"X", "Y", "Z", "U"});
  auto g = [&](int k) { return NCExpr::generator(free_alg, k); };
  auto sym = [](int k) { return Scalar::symbol(k); };
  Scalar qdiff_inv = (Scalar::q() - Scalar::q(-1)).inverse();
  Scalar plus_inv = (s_pow(1) + s_pow(-1)).inverse();

  auto cov = [&](int u, int v, int pa, int pb, int pc) {
    // M built on the (u, v) pair with parameters (pa, pb, pc).
    return qdiff_inv * (sym(pa) * g(u) - sym(pa).inverse() * g(v) +
                        (sym(pb) * sym(pc).inverse() * plus_inv) * (g(u) * g(v) - g(v) * g(u)));
  };
  auto m_const = [&](int pu, int pv, int pw) {
    return ((s_pow(1) + s_pow(-1)) * qdiff_inv * qdiff_inv) *
           ((sym(pu) - sym(pu).inverse()) * (sym(pv) - sym(pv).inverse()) *
                NCExpr::unit(free_alg) -
            (sym(pw) - sym(pw).inverse()) * g(3));
  };
  NCExpr M1 = cov(0, 1, kSymA, kSymB, kSymC);
  NCExpr M2 = cov(1, 2, kSymB, kSymC, kSymA);
  NCExpr M3 = cov(2, 0, kSymC, kSymA, kSymB);
  std::vector<NCExpr> relations = {
      q_anticommutator(M1, M2) - M3 - m_const(kSymA, kSymB, kSymC),
      q_anticommutator(M2, M3) - M1 - m_const(kSymB, kSymC, kSymA),
      q_anticommutator(M3, M1) - M2 - m_const(kSymC, kSymA, kSymB),
  };

  std::map<int, int> cycle{{0, 1}, {1, 2}, {2, 0}, {3, 3}};
  std::map<int, Scalar> params{{kSymA, Scalar::symbol(kSymB)},
                               {kSymB, Scalar::symbol(kSymC)},
                               {kSymC, Scalar::symbol(kSymA)}};
  for (size_t k = 0; k < 3; ++k) {
    NCExpr mapped = rename_generators(relations[k], cycle, free_alg, params);
    CHECK(mapped == relations[(k + 1) % 3]);
  }
}

TEST_CASE("the definite Casimir value is central") {
  const Catalog& cat = catalog();
  CHECK(is_central(cat.expr("CasValue"), cat.ospq()));
}

TEST_CASE("q -> -q maps the sl_q(2) relations onto the osp_q(1|2) ones") {
  const Catalog& cat = catalog();
  for (size_t k = 0; k < 3; ++k) {
    NCExpr mapped = q_to_minus_q(cat.equitable_relations_slq()[k], cat.equitable_rename(),
                                 cat.equitable_osp_alphabet());
    CHECK(mapped == cat.equitable_relations_osp()[k]);
  }
}

TEST_CASE("q -> -q on coefficients") {
  // Applied twice, the coefficient map is s -> -s.
  Rng rng(7301);
  for (int t = 0; t < 20; ++t) {
    Scalar x = rng.scalar({kSymS, kSymA});
    Scalar twice = q_to_minus_q(q_to_minus_q(x));
    CHECK(twice == x.substitute({{kSymS, -s_pow(1)}}));
  }
  // [2]_{-q} = -[2]_q.
  CHECK(q_to_minus_q(q_integer(2)) == -(s_pow(2) + s_pow(-2)));
}

TEST_CASE("deformed relations and Casimir tend to the undeformed ones") {
  const Catalog& cat = catalog();
  LimitReport relations = q_limit_check(cat, LimitFamily::QbiRelations);
  CHECK(relations.passed);
  for (const LimitEntry& e : relations.entries) {
    CAPTURE(e.label);
    CHECK(e.ok);
  }
  LimitReport casimir = q_limit_check(cat, LimitFamily::QbiCasimir);
  CHECK(casimir.passed);
  // The cubic coefficient q^-1/2 - q^3/2 is among the vanishing ones.
  bool cubic_seen = false;
  for (const LimitEntry& e : casimir.entries) {
    if (e.label.find("K1*K2*K3") != std::string::npos) {
      cubic_seen = true;
      CHECK_FALSE(e.pole);
      CHECK(e.value.is_zero());
    }
  }
  CHECK(cubic_seen);
}

TEST_CASE("the covariance realization has no q -> 1 limit") {
  const Catalog& cat = catalog();
  LimitReport rep = q_limit_check(cat, LimitFamily::StructureConstants);
  CHECK(rep.passed);
  bool aplus_unit_pole = false;
  int m_poles = 0;
  for (const LimitEntry& e : rep.entries) {
    if (e.label == "A+ in equitable generators: coefficient of 1") aplus_unit_pole = e.pole;
    if (e.label.rfind("M1", 0) == 0 && e.pole) ++m_poles;
  }
  CHECK(aplus_unit_pole);  // the coefficient 1/(1 - q^-1)
  CHECK(m_poles > 0);      // the normalization 1/(q - q^-1)
}
