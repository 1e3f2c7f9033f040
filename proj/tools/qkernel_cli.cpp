// Command-line front end for the exact osp_q(1|2) verification kernel.
//
//   qkernel normalize <expr> --alg <name>        reduce to normal form
//   qkernel check <lhs> == <rhs> --alg <name>    decide an identity
//   qkernel suite [--filter GLOB] [--json PATH]  run the identity suite
//   qkernel rep --N <even> --e <+1|-1> --matrix <expr> [--eval-s <rational>]
//   qkernel limits                               q -> 1 limit report
//   qkernel confluence --alg <name>              critical-pair diagnostics
//
// QKERNEL_STEP_LIMIT overrides the rewrite step cap.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qkernel/qkernel.hpp"

namespace {

using namespace qk;

/// Bundled presentation by name, or a presentation file by path.
const Presentation& resolve_presentation(const std::string& name,
                                         std::vector<std::unique_ptr<Presentation>>& owned) {
  if (const Presentation* p = presentations::find(name)) return *p;
  std::ifstream in(name);
  if (in) {
    std::stringstream buf;
    buf << in.rdbuf();
    owned.push_back(std::make_unique<Presentation>(parse_presentation(buf.str())));
    return *owned.back();
  }
  throw UnknownPresentation(name);
}

ParseContext context_for(const Presentation& p) {
  ParseContext ctx;
  ctx.presentation = &p;
  ctx.catalog = &catalog();
  return ctx;
}

int cmd_normalize(const std::string& expr_text, const std::string& alg, bool latex,
                  NormalFormOptions opts) {
  std::vector<std::unique_ptr<Presentation>> owned;
  const Presentation& p = resolve_presentation(alg, owned);
  NCExpr x = parse_expr(expr_text, context_for(p));
  NCExpr nf = normal_form(x, p, opts);
  std::cout << format(nf, latex ? Style::Latex : Style::Canonical) << "\n";
  return 0;
}

int cmd_check(const std::vector<std::string>& parts, const std::string& alg,
              NormalFormOptions opts) {
  std::string joined;
  for (const std::string& part : parts) {
    if (!joined.empty()) joined += " ";
    joined += part;
  }
  size_t split = joined.find("==");
  if (split == std::string::npos) {
    std::cerr << "check expects '<lhs> == <rhs>'\n";
    return 2;
  }
  std::vector<std::unique_ptr<Presentation>> owned;
  const Presentation& p = resolve_presentation(alg, owned);
  ParseContext ctx = context_for(p);
  NCExpr lhs = parse_expr(joined.substr(0, split), ctx);
  NCExpr rhs = parse_expr(joined.substr(split + 2), ctx);
  IdentityCheck c = check_identity(lhs, rhs, p, opts);
  if (c.holds) {
    std::cout << "identity holds\n";
    return 0;
  }
  std::cout << "identity fails; residual:\n  " << format(c.residual) << "\n";
  return 1;
}

int cmd_suite(const std::string& filter, const std::string& json_path,
              NormalFormOptions opts) {
  const Catalog& cat = catalog();
  SuiteReport report = run_suite(build_suite(cat, opts), filter.empty() ? "*" : filter);
  for (const SuiteReportRow& row : report.rows) {
    const char* status = row.status == CheckStatus::Pass   ? "pass"
                         : row.status == CheckStatus::Fail ? "FAIL"
                                                           : "ERROR";
    std::cout << status << "  " << row.id;
    if (row.status != CheckStatus::Pass && !row.residual.empty())
      std::cout << "  [" << row.residual << "]";
    std::cout << "\n";
  }
  std::cout << report.rows.size() - static_cast<size_t>(report.failed_count()) << "/"
            << report.rows.size() << " records passed\n";
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) throw IoError("cannot write '" + json_path + "'");
    out << report.to_json().dump(2) << "\n";
  }
  return report.all_passed() ? 0 : 1;
}

int cmd_rep(int N, int e, const std::string& expr_text, const std::string& eval_s) {
  if (e != 1 && e != -1) throw Error("--e must be +1 or -1");
  const Presentation& p = presentations::ospq();
  NCExpr x = parse_expr(expr_text, context_for(p));
  RepMatrix m = finite_matrix(x, N, e);
  nlohmann::ordered_json doc;
  doc["N"] = N;
  doc["e"] = e;
  doc["expr"] = expr_text;
  nlohmann::ordered_json grid = nlohmann::ordered_json::array();
  if (eval_s.empty()) {
    for (int r = 0; r <= N; ++r) {
      nlohmann::ordered_json row = nlohmann::ordered_json::array();
      for (int c = 0; c <= N; ++c) row.push_back(format(m.at(r, c)));
      grid.push_back(std::move(row));
    }
  } else {
    Scalar value = parse_scalar(eval_s);
    if (!value.is_rational()) throw SyntaxError("--eval-s expects a rational number", 1, 1);
    doc["s"] = format(value);
    for (int r = 0; r <= N; ++r) {
      nlohmann::ordered_json row = nlohmann::ordered_json::array();
      for (int c = 0; c <= N; ++c) {
        Scalar v = m.at(r, c).substitute({{kSymS, value}});
        row.push_back(v.is_rational() ? v.rational_value().str() : format(v));
      }
      grid.push_back(std::move(row));
    }
  }
  doc["entries"] = std::move(grid);
  std::cout << doc.dump(2) << "\n";
  return 0;
}

int cmd_limits() {
  const Catalog& cat = catalog();
  struct Family {
    LimitFamily family;
    const char* title;
  };
  bool all_ok = true;
  for (const Family& f : {Family{LimitFamily::QbiRelations, "deformed relations -> undeformed"},
                          Family{LimitFamily::QbiCasimir, "deformed Casimir -> undeformed"},
                          Family{LimitFamily::StructureConstants,
                                 "covariance realization at q = 1"}}) {
    LimitReport rep = q_limit_check(cat, f.family);
    std::cout << (rep.passed ? "pass" : "FAIL") << "  " << f.title << "\n";
    for (const LimitEntry& e : rep.entries) {
      std::cout << "      " << e.label << ": "
                << (e.pole ? std::string("pole at q = 1") : format(e.value)) << "\n";
    }
    all_ok = all_ok && rep.passed;
  }
  return all_ok ? 0 : 1;
}

int cmd_confluence(const std::string& alg, NormalFormOptions opts) {
  std::vector<std::unique_ptr<Presentation>> owned;
  const Presentation& p = resolve_presentation(alg, owned);
  auto report = local_confluence_report(p, opts);
  int bad = 0;
  for (const CriticalPair& cp : report) {
    std::string word;
    for (uint8_t g : cp.overlap) {
      if (!word.empty()) word += "*";
      word += p.alphabet()->gen_name(g);
    }
    if (cp.joinable) {
      std::cout << "joinable      " << word << "\n";
    } else {
      ++bad;
      std::cout << "NOT JOINABLE  " << word << "\n";
      std::cout << "    branch 1: " << format(cp.branch1) << "\n";
      std::cout << "    branch 2: " << format(cp.branch2) << "\n";
    }
  }
  std::cout << report.size() - static_cast<size_t>(bad) << "/" << report.size()
            << " critical pairs joinable\n";
  return bad == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification kernel for osp_q(1|2), its equitable presentation, and the "
               "q-deformed Bannai-Ito covariance algebra"};
  app.require_subcommand(1);
  NormalFormOptions opts = NormalFormOptions::from_env();

  auto* normalize = app.add_subcommand("normalize", "reduce an expression to normal form");
  std::string norm_expr, norm_alg = "ospq";
  bool norm_latex = false;
  normalize->add_option("expr", norm_expr, "expression in the kernel grammar")->required();
  normalize->add_option("--alg", norm_alg, "presentation name or file");
  normalize->add_flag("--latex", norm_latex, "print in LaTeX style");

  auto* check = app.add_subcommand("check", "check an identity '<lhs> == <rhs>'");
  std::vector<std::string> check_parts;
  std::string check_alg = "ospq";
  check->add_option("expr", check_parts, "identity of the form <lhs> == <rhs>")->required();
  check->add_option("--alg", check_alg, "presentation name or file");

  auto* suite = app.add_subcommand("suite", "run the identity suite");
  std::string suite_filter = "*", suite_json;
  suite->add_option("--filter", suite_filter, "glob over record ids");
  suite->add_option("--json", suite_json, "write the report as JSON");

  auto* rep = app.add_subcommand("rep", "finite-dimensional matrix of an expression");
  int rep_N = 2, rep_e = 1;
  std::string rep_expr = "K", rep_eval_s;
  rep->add_option("--N", rep_N, "even truncation parameter")->required();
  rep->add_option("--e", rep_e, "parity sign +1 or -1")->required();
  rep->add_option("--matrix", rep_expr, "expression to represent")->required();
  rep->add_option("--eval-s", rep_eval_s, "evaluate entries at a rational s");

  auto* limits = app.add_subcommand("limits", "q -> 1 limit report");

  auto* confluence = app.add_subcommand("confluence", "critical-pair diagnostics");
  std::string conf_alg = "ospq";
  confluence->add_option("--alg", conf_alg, "presentation name or file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (normalize->parsed()) return cmd_normalize(norm_expr, norm_alg, norm_latex, opts);
    if (check->parsed()) return cmd_check(check_parts, check_alg, opts);
    if (suite->parsed()) return cmd_suite(suite_filter, suite_json, opts);
    if (rep->parsed()) return cmd_rep(rep_N, rep_e, rep_expr, rep_eval_s);
    if (limits->parsed()) return cmd_limits();
    if (confluence->parsed()) return cmd_confluence(conf_alg, opts);
  } catch (const qk::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
