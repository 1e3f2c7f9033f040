#pragma once

// Oriented rewrite systems for normal-ordering free-algebra expressions
// modulo a two-letter relation set: every rule replaces an adjacent generator
// pair by a linear combination of strictly smaller words (length-lex), which
// makes the reduction terminating with the leftmost-redex, largest-word-first
// strategy used here.

#include <cstdint>
#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

#include "qkernel/ncalg.hpp"

namespace qk {

struct RewriteRule {
  uint8_t lhs_first;
  uint8_t lhs_second;
  NCExpr rhs;

  RewriteRule(int a, int b, NCExpr r)
      : lhs_first(static_cast<uint8_t>(a)), lhs_second(static_cast<uint8_t>(b)), rhs(std::move(r)) {
    WordLess less;
    Word lhs{lhs_first, lhs_second};
    for (const auto& [w, c] : rhs.terms()) {
      if (!less(w, lhs))
        throw Error("rewrite rule is not decreasing: a right-hand word is not smaller than '" +
                    rhs.alphabet()->gen_name(a) + " " + rhs.alphabet()->gen_name(b) + "'");
    }
  }

  Word lhs_word() const { return Word{lhs_first, lhs_second}; }
};

class Presentation {
 public:
  Presentation(std::string name, AlphabetPtr alphabet, std::vector<RewriteRule> rules)
      : name_(std::move(name)), alphabet_(std::move(alphabet)), rules_(std::move(rules)) {
    const int n = alphabet_->size();
    table_.assign(static_cast<size_t>(n) * static_cast<size_t>(n), -1);
    for (size_t k = 0; k < rules_.size(); ++k) {
      require_same_alphabet(alphabet_, rules_[k].rhs.alphabet());
      int& slot = table_[static_cast<size_t>(rules_[k].lhs_first) * static_cast<size_t>(n) +
                         rules_[k].lhs_second];
      if (slot != -1)
        throw Error("presentation '" + name_ + "': duplicate rule for pair " +
                    alphabet_->gen_name(rules_[k].lhs_first) + " " +
                    alphabet_->gen_name(rules_[k].lhs_second));
      slot = static_cast<int>(k);
    }
    // Completeness: every misordered adjacent pair must be covered.
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < i; ++j) {
        if (table_[static_cast<size_t>(i) * static_cast<size_t>(n) + j] == -1)
          throw Error("presentation '" + name_ + "': no rule reorders the pair " +
                      alphabet_->gen_name(i) + " " + alphabet_->gen_name(j));
      }
    }
  }

  const std::string& name() const { return name_; }
  const AlphabetPtr& alphabet() const { return alphabet_; }
  const std::vector<RewriteRule>& rules() const { return rules_; }

  const RewriteRule* rule_for(uint8_t a, uint8_t b) const {
    int idx = table_[static_cast<size_t>(a) * static_cast<size_t>(alphabet_->size()) + b];
    return idx < 0 ? nullptr : &rules_[static_cast<size_t>(idx)];
  }

 private:
  std::string name_;
  AlphabetPtr alphabet_;
  std::vector<RewriteRule> rules_;
  std::vector<int> table_;
};

struct NormalFormOptions {
  uint64_t step_limit = 1'000'000;

  /// Step limit from the QKERNEL_STEP_LIMIT environment variable, when set.
  static NormalFormOptions from_env() {
    NormalFormOptions opts;
    if (const char* env = std::getenv("QKERNEL_STEP_LIMIT")) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(env, &end, 10);
      if (end && *end == '\0' && v > 0) opts.step_limit = v;
    }
    return opts;
  }
};

/// Fully reduces an expression: the result contains no rule's left-hand side
/// as a factor of any word. Linear in the input and idempotent.
inline NCExpr normal_form(const NCExpr& x, const Presentation& p,
                          NormalFormOptions opts = NormalFormOptions{}) {
  require_same_alphabet(x.alphabet(), p.alphabet());
  NCExpr::TermMap pending(x.terms());
  NCExpr out(x.alphabet());
  uint64_t steps = 0;
  while (!pending.empty()) {
    auto it = std::prev(pending.end());  // largest word first
    Word w = it->first;
    Scalar c = std::move(it->second);
    pending.erase(it);
    if (c.is_zero()) continue;

    const RewriteRule* rule = nullptr;
    size_t pos = 0;
    for (size_t k = 0; k + 1 < w.size(); ++k) {
      if (const RewriteRule* r = p.rule_for(w[k], w[k + 1])) {
        rule = r;
        pos = k;
        break;
      }
    }
    if (!rule) {
      out.add_term(std::move(w), std::move(c));
      continue;
    }
    if (++steps > opts.step_limit) throw StepLimitExceeded(opts.step_limit);
    for (const auto& [rw, rc] : rule->rhs.terms()) {
      Word nw;
      nw.reserve(w.size() - 2 + rw.size());
      nw.insert(nw.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
      nw.insert(nw.end(), rw.begin(), rw.end());
      nw.insert(nw.end(), w.begin() + static_cast<std::ptrdiff_t>(pos) + 2, w.end());
      Scalar nc = c * rc;
      if (nc.is_zero()) continue;
      auto pit = pending.find(nw);
      if (pit == pending.end()) {
        pending.emplace(std::move(nw), std::move(nc));
      } else {
        pit->second += nc;
        if (pit->second.is_zero()) pending.erase(pit);
      }
    }
  }
  return out;
}

struct IdentityCheck {
  bool holds;
  NCExpr residual;
};

/// Decides lhs = rhs in the presented algebra by reducing the difference.
inline IdentityCheck check_identity(const NCExpr& lhs, const NCExpr& rhs, const Presentation& p,
                                    NormalFormOptions opts = NormalFormOptions{}) {
  NCExpr residual = normal_form(lhs - rhs, p, opts);
  bool holds = residual.is_zero();
  return {holds, std::move(residual)};
}

/// True iff x commutes with every generator.
inline bool is_central(const NCExpr& x, const Presentation& p,
                       NormalFormOptions opts = NormalFormOptions{}) {
  for (int g = 0; g < p.alphabet()->size(); ++g) {
    NCExpr gen = NCExpr::generator(p.alphabet(), g);
    if (!check_identity(x * gen, gen * x, p, opts).holds) return false;
  }
  return true;
}

struct CriticalPair {
  Word overlap;
  NCExpr branch1;
  NCExpr branch2;
  bool joinable;
};

/// Enumerates all three-letter overlaps between rule left-hand sides, reduces
/// both branches to normal form, and reports whether they agree.
inline std::vector<CriticalPair> local_confluence_report(
    const Presentation& p, NormalFormOptions opts = NormalFormOptions{}) {
  std::vector<CriticalPair> report;
  for (const RewriteRule& r1 : p.rules()) {
    for (const RewriteRule& r2 : p.rules()) {
      if (r1.lhs_second != r2.lhs_first) continue;
      Word overlap{r1.lhs_first, r1.lhs_second, r2.lhs_second};
      NCExpr tail = NCExpr::generator(p.alphabet(), r2.lhs_second);
      NCExpr head = NCExpr::generator(p.alphabet(), r1.lhs_first);
      NCExpr branch1 = normal_form(r1.rhs * tail, p, opts);
      NCExpr branch2 = normal_form(head * r2.rhs, p, opts);
      bool joinable = branch1 == branch2;
      report.push_back({std::move(overlap), std::move(branch1), std::move(branch2), joinable});
    }
  }
  return report;
}

inline bool all_joinable(const std::vector<CriticalPair>& report) {
  for (const CriticalPair& cp : report) {
    if (!cp.joinable) return false;
  }
  return true;
}

}  // namespace qk
