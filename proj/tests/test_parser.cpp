#include "catch2/catch_amalgamated.hpp"
#include "test_support.hpp"

using namespace qktest;
using namespace qk::presentations;

namespace {

ParseContext ospq_ctx() {
  ParseContext ctx;
  ctx.presentation = &presentations::ospq();
  ctx.catalog = &catalog();
  return ctx;
}

NCExpr gen(int idx) { return NCExpr::generator(presentations::ospq().alphabet(), idx); }

}  // namespace

TEST_CASE("parsing the defining relation") {
  NCExpr got = parse_expr("{A+, A-} - (K - K^-1)/(s - s^-1)", ospq_ctx());
  Scalar c = (Scalar::symbol(kSymS) - Scalar::symbol(kSymS, -1)).inverse();
  NCExpr expected = anticommutator(gen(kAplus), gen(kAminus)) - c * gen(kK) + c * gen(kKinv);
  CHECK(got == expected);
  CHECK(normal_form(got, presentations::ospq()).is_zero());
}

TEST_CASE("parsing basics") {
  CHECK(parse_expr("1", ospq_ctx()) == NCExpr::unit(presentations::ospq().alphabet()));
  CHECK(parse_expr("q", ospq_ctx()) ==
        NCExpr::unit(presentations::ospq().alphabet(), Scalar::q()));
  CHECK(parse_expr("q^-1", ospq_ctx()) ==
        NCExpr::unit(presentations::ospq().alphabet(), Scalar::q(-1)));
  CHECK(parse_expr("A+^3", ospq_ctx()) == gen(kAplus).pow(3));
  CHECK(parse_expr("K^-2", ospq_ctx()) == gen(kKinv).pow(2));
  CHECK(parse_expr("3/4*i*P", ospq_ctx()) ==
        (Scalar::fraction(3, 4) * Scalar::i()) * gen(kP));

  // Named elements resolve through the catalog.
  const Catalog& cat = catalog();
  CHECK(parse_expr("[X, Y]", ospq_ctx()) == commutator(cat.expr("X"), cat.expr("Y")));
  CHECK(parse_expr("{M1, M2}_q", ospq_ctx()) == q_anticommutator(cat.expr("M1"), cat.expr("M2")));
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_expr("A+ +", ospq_ctx()), SyntaxError);
  CHECK_THROWS_AS(parse_expr("2 K", ospq_ctx()), SyntaxError);       // juxtaposition
  CHECK_THROWS_AS(parse_expr("1/(A+)", ospq_ctx()), SyntaxError);    // nc division
  CHECK_THROWS_AS(parse_expr("(K*P)^-1", ospq_ctx()), SyntaxError);  // nc inverse
  CHECK_THROWS_AS(parse_expr("B7", ospq_ctx()), UnknownGenerator);
  CHECK_THROWS_AS(parse_expr("kappa", ospq_ctx()), UnknownGenerator);  // wrong alphabet
  CHECK_THROWS_AS(parse_expr("s^99999999999999999999999", ospq_ctx()), SyntaxError);

  try {
    parse_expr("K *\n* P", ospq_ctx());
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.line == 2);
    CHECK(e.column == 1);
  }
}

TEST_CASE("scalar context") {
  CHECK(parse_scalar("3/2") == Scalar::fraction(3, 2));
  CHECK(parse_scalar("(s - s^-1)^2") == (Scalar::symbol(kSymS) - Scalar::symbol(kSymS, -1)).pow(2));
  CHECK_THROWS_AS(parse_scalar("K"), Error);
}

TEST_CASE("formatting examples") {
  const Catalog& cat = catalog();
  const Presentation& p = presentations::ospq();
  CHECK(format(normal_form(gen(kP) * gen(kP), p)) == "1");
  CHECK(format(NCExpr(p.alphabet())) == "0");
  CHECK(format(cat.expr("Y")) == "K*P");

  NCExpr q2 = NCExpr::unit(p.alphabet(), q_integer(2));
  CHECK(format(q2) == "s^2 + s^-2");

  // Words compress repeated letters in printing.
  CHECK(format(gen(kAplus) * gen(kAplus) * gen(kAplus)) == "A+^3");
}

TEST_CASE("round trip on random expressions") {
  Rng rng(7501);
  std::vector<const Presentation*> presentations_pool{
      &presentations::ospq(), &presentations::slq(), &presentations::qbi(),
      &presentations::bi()};
  for (int t = 0; t < 500; ++t) {
    const Presentation* p = presentations_pool[static_cast<size_t>(t) % presentations_pool.size()];
    ParseContext ctx;
    ctx.presentation = p;
    NCExpr x = rng.expr(p->alphabet(), 5, 5, {kSymS, kSymW, kSymA});
    std::string text = format(x);
    CAPTURE(text);
    NCExpr back = parse_expr(text, ctx);
    REQUIRE(back == x);
  }
}

TEST_CASE("round trip on random scalars") {
  Rng rng(7502);
  for (int t = 0; t < 200; ++t) {
    Scalar x = rng.scalar({kSymS, kSymW, kSymB, kSymIota2});
    std::string text = format(x);
    CAPTURE(text);
    CHECK(parse_scalar(text) == x);
  }
}

TEST_CASE("latex style") {
  const Catalog& cat = catalog();
  std::string tex = format(cat.expr("Y"), Style::Latex);
  CHECK(tex == "K P");
  std::string ups = format(normal_form(cat.expr("Ups"), cat.ospq()), Style::Latex);
  CHECK(ups.find("\\frac") == std::string::npos);  // polynomial coefficients only
  CHECK(format(NCExpr::unit(cat.ospq().alphabet(), Scalar::q()), Style::Latex) == "q");
}

TEST_CASE("presentation files round trip") {
  const Presentation& p = presentations::ospq();
  std::string text = format_presentation(p);
  Presentation back = parse_presentation(text);
  CHECK(back.name() == p.name());
  CHECK(back.alphabet()->generators == p.alphabet()->generators);
  REQUIRE(back.rules().size() == p.rules().size());

  // Identical rewriting behavior.
  Rng rng(7503);
  for (int t = 0; t < 20; ++t) {
    Word w = rng.word(p.alphabet()->size(), 6, 1);
    NCExpr x = NCExpr::word(p.alphabet(), w);
    NCExpr x_back = NCExpr::word(back.alphabet(), w);
    std::string there = format(normal_form(x, p));
    std::string again = format(normal_form(x_back, back));
    CHECK(there == again);
  }
  CHECK(format_presentation(back) == text);
}

TEST_CASE("presentation file errors") {
  CHECK_THROWS_AS(parse_presentation("rule K * P -> 1\n"), SyntaxError);
  CHECK_THROWS_AS(parse_presentation("presentation t\ngenerators u v\nrule u v -> 1\n"),
                  SyntaxError);
  CHECK_THROWS_AS(parse_presentation(""), SyntaxError);
}

TEST_CASE("suite reports") {
  const Catalog& cat = catalog();
  std::vector<SuiteRecord> records;
  // A small deterministic slice plus an injected failure.
  for (const IdentityRecord& r : cat.suite()) {
    if (r.id.rfind("equitable.rel", 0) != 0) continue;
    const IdentityRecord* rec = &r;
    records.push_back({r.id, r.claim, [rec]() {
                         IdentityCheck c = check_identity(rec->lhs, rec->rhs, *rec->presentation);
                         CheckOutcome o;
                         o.status = c.holds ? CheckStatus::Pass : CheckStatus::Fail;
                         o.residual = c.holds ? "" : format(c.residual);
                         return o;
                       }});
  }
  REQUIRE(records.size() == 3);

  SuiteReport ok = run_suite(records, "equitable.*");
  CHECK(ok.rows.size() == 3);
  CHECK(ok.all_passed());

  // Filters restrict the run.
  CHECK(run_suite(records, "equitable.rel-xy").rows.size() == 1);
  CHECK(run_suite(records, "hopf.*").rows.empty());

  // Determinism: two runs agree byte for byte once timing is stripped.
  auto strip = [](SuiteReport r) {
    nlohmann::ordered_json doc = r.to_json();
    for (auto& rec : doc["records"]) rec.erase("wall_ms");
    return doc.dump();
  };
  CHECK(strip(run_suite(records, "*")) == strip(run_suite(records, "*")));

  // An injected corrupted record turns the report red.
  Presentation bad = corrupted_ospq();
  records.push_back({"negative.corrupted-rule", "deliberately wrong rewrite", [&bad, &cat]() {
                       const IdentityRecord& r = cat.suite().front();
                       IdentityCheck c = check_identity(r.lhs, r.rhs, bad);
                       CheckOutcome o;
                       o.status = c.holds ? CheckStatus::Pass : CheckStatus::Fail;
                       o.residual = format(c.residual);
                       return o;
                     }});
  SuiteReport mixed = run_suite(records, "*");
  CHECK_FALSE(mixed.all_passed());
  CHECK(mixed.failed_count() == 1);
  bool saw_residual = false;
  for (const SuiteReportRow& row : mixed.rows) {
    if (row.status == CheckStatus::Fail) saw_residual = !row.residual.empty();
  }
  CHECK(saw_residual);
}

TEST_CASE("the full suite report is deterministic") {
  const Catalog& cat = catalog();
  auto strip = [](SuiteReport r) {
    nlohmann::ordered_json doc = r.to_json();
    for (auto& rec : doc["records"]) rec.erase("wall_ms");
    return doc.dump();
  };
  std::string first = strip(run_suite(build_suite(cat)));
  std::string second = strip(run_suite(build_suite(cat)));
  CHECK(first == second);

  nlohmann::ordered_json doc = nlohmann::ordered_json::parse(first);
  CHECK(doc["schema"] == 1);
  CHECK(doc["passed"] == true);
  CHECK(doc["total"].get<int>() >= 140);
}

TEST_CASE("glob matching") {
  CHECK(glob_match("*", "anything"));
  CHECK(glob_match("equitable.*", "equitable.rel-xy"));
  CHECK_FALSE(glob_match("equitable.*", "slq.equitable-xy"));
  CHECK(glob_match("*casimir*", "covariance.casimir-value"));
  CHECK(glob_match("rep.?quitable.X", "rep.equitable.X"));
  CHECK_FALSE(glob_match("hopf.*", "hop"));
}
