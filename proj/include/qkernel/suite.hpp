#pragma once

// Suite runner: assembles every check the kernel knows about (identity
// records, the q -> -q correspondence, Hopf axioms, representation checks,
// q -> 1 limits, confluence diagnostics) into a flat, deterministically
// ordered record list, runs a glob-filtered subset, and emits a report.

#include <chrono>
#include <functional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qkernel/hopf.hpp"
#include "qkernel/limits.hpp"
#include "qkernel/parser.hpp"
#include "qkernel/reps.hpp"

namespace qk {

/// Glob match supporting '*' and '?'.
inline bool glob_match(std::string_view pattern, std::string_view text) {
  size_t p = 0, t = 0;
  size_t star = std::string_view::npos, mark = 0;
  while (t < text.size()) {
    if (p < pattern.size() && (pattern[p] == '?' || pattern[p] == text[t])) {
      ++p;
      ++t;
    } else if (p < pattern.size() && pattern[p] == '*') {
      star = p++;
      mark = t;
    } else if (star != std::string_view::npos) {
      p = star + 1;
      t = ++mark;
    } else {
      return false;
    }
  }
  while (p < pattern.size() && pattern[p] == '*') ++p;
  return p == pattern.size();
}

enum class CheckStatus { Pass, Fail, Error };

struct CheckOutcome {
  CheckStatus status = CheckStatus::Pass;
  std::string residual;  // canonical text, empty on pass
};

struct SuiteRecord {
  std::string id;
  std::string claim;
  std::function<CheckOutcome()> run;
};

struct SuiteReportRow {
  std::string id;
  std::string claim;
  CheckStatus status;
  std::string residual;
  double wall_ms;
};

struct SuiteReport {
  std::vector<SuiteReportRow> rows;

  bool all_passed() const {
    for (const SuiteReportRow& r : rows) {
      if (r.status != CheckStatus::Pass) return false;
    }
    return true;
  }

  int failed_count() const {
    int n = 0;
    for (const SuiteReportRow& r : rows) {
      if (r.status != CheckStatus::Pass) ++n;
    }
    return n;
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json doc;
    doc["schema"] = 1;
    doc["total"] = rows.size();
    doc["failed"] = failed_count();
    doc["passed"] = all_passed();
    nlohmann::ordered_json records = nlohmann::ordered_json::array();
    for (const SuiteReportRow& r : rows) {
      nlohmann::ordered_json rec;
      rec["id"] = r.id;
      rec["claim"] = r.claim;
      rec["status"] = r.status == CheckStatus::Pass   ? "pass"
                      : r.status == CheckStatus::Fail ? "fail"
                                                      : "error";
      rec["residual"] = r.residual;
      rec["wall_ms"] = r.wall_ms;
      records.push_back(std::move(rec));
    }
    doc["records"] = std::move(records);
    return doc;
  }
};

namespace suitedetail {

inline CheckOutcome from_bool(bool ok, const std::string& residual = std::string()) {
  CheckOutcome o;
  o.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
  if (!ok) o.residual = residual;
  return o;
}

}  // namespace suitedetail

/// Builds the full record list. Identity, correspondence, limit and
/// confluence records are lazy closures; the Hopf and representation checks
/// are computed here because their check functions report in batches.
inline std::vector<SuiteRecord> build_suite(const Catalog& cat,
                                            NormalFormOptions opts = NormalFormOptions{}) {
  std::vector<SuiteRecord> records;

  // Identity records.
  for (const IdentityRecord& r : cat.suite()) {
    const IdentityRecord* rec = &r;
    records.push_back({r.id, r.claim, [rec, opts]() {
                         IdentityCheck c = check_identity(rec->lhs, rec->rhs, *rec->presentation,
                                                          opts);
                         return suitedetail::from_bool(c.holds, format(c.residual));
                       }});
  }

  // The q -> -q correspondence, term for term over the free equitable
  // alphabets.
  for (int k = 0; k < 3; ++k) {
    static const char* kPairs[3] = {"xy", "yz", "zx"};
    records.push_back(
        {std::string("qminusq.rel-") + kPairs[k],
         std::string("equitable sl_q(2) relation ") + kPairs[k] +
             " maps onto the osp_q(1|2) relation under q -> -q",
         [&cat, k]() {
           NCExpr mapped = q_to_minus_q(cat.equitable_relations_slq()[static_cast<size_t>(k)],
                                        cat.equitable_rename(), cat.equitable_osp_alphabet());
           NCExpr diff = mapped - cat.equitable_relations_osp()[static_cast<size_t>(k)];
           return suitedetail::from_bool(diff.is_zero(), format(diff));
         }});
  }

  // Hopf axioms and the equitable coproduct formulas.
  for (const HopfCheck& c : check_hopf_axioms(cat.ospq(), HopfData::ospq_standard(), opts)) {
    records.push_back({c.id, c.claim, [c]() { return suitedetail::from_bool(c.ok, c.residual); }});
  }
  for (const HopfCheck& c :
       check_equitable_coproducts(cat, HopfData::ospq_standard(), opts)) {
    records.push_back({c.id, c.claim, [c]() { return suitedetail::from_bool(c.ok, c.residual); }});
  }

  // Representation checks.
  auto add_rep_checks = [&records, &cat](RepCheckKind kind, int cutoff, int N = 2) {
    for (const RepCheck& c : check_rep(cat, kind, cutoff, N)) {
      records.push_back(
          {c.id, c.claim, [c]() { return suitedetail::from_bool(c.ok, c.detail); }});
    }
  };
  add_rep_checks(RepCheckKind::WRelations, 20);
  add_rep_checks(RepCheckKind::WEquitable, 20);
  add_rep_checks(RepCheckKind::WCasimir, 20);
  add_rep_checks(RepCheckKind::BargmannConsistency, 10);
  for (int N : {2, 4}) add_rep_checks(RepCheckKind::FiniteIrreducibility, 0, N);
  for (int N : {2, 4, 6, 8}) {
    records.push_back({"rep.truncation.N" + std::to_string(N),
                       "rho(N+1) vanishes at w = s^-(N+1) for N = " + std::to_string(N),
                       [N]() { return suitedetail::from_bool(truncation_vanishes(N)); }});
  }

  // q -> 1 limits.
  auto limit_record = [&records, &cat](const std::string& id, const std::string& claim,
                                       LimitFamily family) {
    records.push_back({id, claim, [&cat, family]() {
                         LimitReport rep = q_limit_check(cat, family);
                         std::string bad;
                         for (const LimitEntry& e : rep.entries) {
                           if (!e.ok) bad += (bad.empty() ? "" : "; ") + e.label;
                         }
                         return suitedetail::from_bool(rep.passed, bad);
                       }});
  };
  limit_record("limit.qbi-relations",
               "the deformed relations tend to the undeformed ones as q -> 1",
               LimitFamily::QbiRelations);
  limit_record("limit.qbi-casimir", "the deformed Casimir tends to the undeformed one as q -> 1",
               LimitFamily::QbiCasimir);
  limit_record("limit.structure-poles",
               "the covariance realization has poles at q = 1 (no classical limit)",
               LimitFamily::StructureConstants);

  // Confluence diagnostics.
  for (const Presentation* p :
       {&cat.ospq(), &cat.slq(), &cat.slq_involution(), &cat.qbi(), &cat.bi()}) {
    records.push_back({"confluence." + p->name(),
                       "all critical pairs of the " + p->name() + " rule set are joinable",
                       [p, opts]() {
                         auto report = local_confluence_report(*p, opts);
                         int bad = 0;
                         for (const CriticalPair& cp : report) {
                           if (!cp.joinable) ++bad;
                         }
                         return suitedetail::from_bool(bad == 0,
                                                       std::to_string(bad) + " non-joinable");
                       }});
  }

  return records;
}

/// Runs the records whose ids match the glob; rows keep the build order.
inline SuiteReport run_suite(const std::vector<SuiteRecord>& records,
                             const std::string& filter = "*") {
  SuiteReport report;
  for (const SuiteRecord& rec : records) {
    if (!glob_match(filter, rec.id)) continue;
    auto start = std::chrono::steady_clock::now();
    CheckOutcome outcome;
    try {
      outcome = rec.run();
    } catch (const Error& e) {
      outcome.status = CheckStatus::Error;
      outcome.residual = e.what();
    }
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                          start)
                    .count();
    report.rows.push_back({rec.id, rec.claim, outcome.status, outcome.residual, ms});
  }
  return report;
}

}  // namespace qk
