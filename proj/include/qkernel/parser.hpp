#pragma once

// The expression grammar and pretty-printer shared by the CLI and the
// presentation files. Infix +, -, *, / with the usual precedence, ^ binding
// tightest, explicit * between factors (juxtaposition is not multiplication),
// [x,y] commutators, {x,y} anticommutators, {x,y}_q q-anticommutators.
// Division is scalar-only. `q` is sugar for s^2.

#include <cctype>
#include <functional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "qkernel/catalog.hpp"

namespace qk {

// ---------------------------------------------------------------------------
// Lexer
// ---------------------------------------------------------------------------

namespace parsedetail {

enum class TokKind { Number, Ident, Punct, QSub, End };

struct Token {
  TokKind kind;
  std::string text;
  int line;
  int column;
};

inline std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  size_t k = 0;
  auto push = [&](TokKind kind, std::string t, int c) {
    out.push_back({kind, std::move(t), line, c});
  };
  while (k < text.size()) {
    char ch = text[k];
    if (ch == '\n') {
      ++line;
      col = 1;
      ++k;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++col;
      ++k;
      continue;
    }
    int start_col = col;
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      size_t j = k;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      push(TokKind::Number, text.substr(k, j - k), start_col);
      col += static_cast<int>(j - k);
      k = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      size_t j = k;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
        ++j;
      std::string ident = text.substr(k, j - k);
      // A+ / A- / J+ / J- / Jt+ / Jt- are single tokens when the sign is
      // immediately adjacent.
      if (j < text.size() && (text[j] == '+' || text[j] == '-') &&
          (ident == "A" || ident == "J" || ident == "Jt")) {
        ident += text[j];
        ++j;
      }
      push(TokKind::Ident, std::move(ident), start_col);
      col += static_cast<int>(j - k);
      k = j;
      continue;
    }
    if (ch == '_' && k + 1 < text.size() && text[k + 1] == 'q') {
      push(TokKind::QSub, "_q", start_col);
      col += 2;
      k += 2;
      continue;
    }
    if (std::string_view("+-*/^()[]{},=").find(ch) != std::string_view::npos) {
      push(TokKind::Punct, std::string(1, ch), start_col);
      ++col;
      ++k;
      continue;
    }
    throw SyntaxError(std::string("unexpected character '") + ch + "'", line, start_col);
  }
  push(TokKind::End, "", col);
  return out;
}

}  // namespace parsedetail

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

struct ParseContext {
  /// Presentation whose alphabet resolves generator names; null for a pure
  /// scalar context.
  const Presentation* presentation = nullptr;
  /// Catalog used to resolve named elements; optional.
  const Catalog* catalog = nullptr;
  /// When set, generators resolve against this alphabet instead of the
  /// presentation's (used while reading presentation files).
  AlphabetPtr alphabet;
};

namespace parsedetail {

/// A parsed value is either still a scalar or has been promoted to an
/// algebra element; scalars stay scalars so that division works.
struct Value {
  bool scalar;
  Scalar s;
  NCExpr e;

  explicit Value(Scalar v) : scalar(true), s(std::move(v)), e(AlphabetPtr()) {}
  explicit Value(NCExpr v) : scalar(false), s(0), e(std::move(v)) {}
};

class Parser {
 public:
  Parser(const std::string& text, const ParseContext& ctx)
      : tokens_(lex(text)), ctx_(ctx) {}

  NCExpr parse_expression() {
    Value v = parse_sum();
    expect_end();
    return promote(v);
  }

  Scalar parse_scalar_expression() {
    Value v = parse_sum();
    expect_end();
    if (!v.scalar) {
      if (!v.e.is_scalar()) throw SyntaxError("expected a scalar expression", cur().line, cur().column);
      return v.e.scalar_part();
    }
    return v.s;
  }

 private:
  const Token& cur() const { return tokens_[pos_]; }

  const Token& advance() { return tokens_[pos_++]; }

  bool at_punct(char c) const { return cur().kind == TokKind::Punct && cur().text[0] == c; }

  void expect_punct(char c) {
    if (!at_punct(c))
      throw SyntaxError(std::string("expected '") + c + "'", cur().line, cur().column);
    ++pos_;
  }

  void expect_end() {
    if (cur().kind != TokKind::End)
      throw SyntaxError("unexpected trailing input '" + cur().text + "'", cur().line,
                        cur().column);
  }

  AlphabetPtr alphabet() const {
    if (ctx_.alphabet) return ctx_.alphabet;
    if (!ctx_.presentation)
      throw SyntaxError("generators are not allowed in a scalar context", cur().line,
                        cur().column);
    return ctx_.presentation->alphabet();
  }

  NCExpr promote(const Value& v) {
    if (!v.scalar) return v.e;
    return NCExpr::unit(alphabet(), v.s);
  }

  Value parse_sum() {
    Value acc = parse_product();
    while (cur().kind == TokKind::Punct && (cur().text[0] == '+' || cur().text[0] == '-')) {
      char op = advance().text[0];
      Value rhs = parse_product();
      if (acc.scalar && rhs.scalar) {
        acc.s = op == '+' ? acc.s + rhs.s : acc.s - rhs.s;
      } else {
        NCExpr l = promote(acc);
        NCExpr r = promote(rhs);
        acc = Value(op == '+' ? l + r : l - r);
      }
    }
    return acc;
  }

  Value parse_product() {
    Value acc = parse_factor();
    while (cur().kind == TokKind::Punct && (cur().text[0] == '*' || cur().text[0] == '/')) {
      int line = cur().line, column = cur().column;
      char op = advance().text[0];
      Value rhs = parse_factor();
      if (op == '*') {
        if (acc.scalar && rhs.scalar) {
          acc.s *= rhs.s;
        } else if (acc.scalar) {
          acc = Value(acc.s * rhs.e);
        } else if (rhs.scalar) {
          acc = Value(acc.e * rhs.s);
        } else {
          acc = Value(acc.e * rhs.e);
        }
      } else {
        Scalar divisor;
        if (rhs.scalar) {
          divisor = rhs.s;
        } else if (rhs.e.is_scalar()) {
          divisor = rhs.e.scalar_part();
        } else {
          throw SyntaxError("division by a noncommutative expression", line, column);
        }
        if (divisor.is_zero()) throw DivisionByZero();
        if (acc.scalar) {
          acc.s /= divisor;
        } else {
          acc = Value(acc.e * divisor.inverse());
        }
      }
    }
    return acc;
  }

  Value parse_factor() {
    if (at_punct('-')) {
      ++pos_;
      Value v = parse_factor();
      if (v.scalar) return Value(-v.s);
      return Value(-v.e);
    }
    return parse_power();
  }

  Value parse_power() {
    Value base = parse_primary();
    while (at_punct('^')) {
      int line = cur().line, column = cur().column;
      ++pos_;
      long exp = parse_signed_integer();
      base = apply_power(std::move(base), exp, line, column);
    }
    return base;
  }

  long parse_signed_integer() {
    bool neg = false;
    if (at_punct('-')) {
      neg = true;
      ++pos_;
    }
    if (cur().kind != TokKind::Number)
      throw SyntaxError("expected an integer exponent", cur().line, cur().column);
    const Token& t = advance();
    long v = 0;
    try {
      v = std::stol(t.text);
    } catch (const std::exception&) {
      throw SyntaxError("exponent out of range", t.line, t.column);
    }
    return neg ? -v : v;
  }

  Value apply_power(Value base, long exp, int line, int column) {
    if (base.scalar) return Value(base.s.pow(exp));
    if (base.e.is_scalar()) return Value(base.e.scalar_part().pow(exp));
    if (exp >= 0) return Value(base.e.pow(static_cast<int>(exp)));
    // Negative powers resolve through registered inverse generators only.
    if (base.e.terms().size() == 1) {
      const auto& [w, c] = *base.e.terms().begin();
      if (w.size() == 1 && c.is_one()) {
        int inv = base.e.alphabet()->inverse_of(w[0]);
        if (inv >= 0)
          return Value(NCExpr::generator(base.e.alphabet(), inv).pow(static_cast<int>(-exp)));
      }
    }
    throw SyntaxError("negative power of a noncommutative expression", line, column);
  }

  Value parse_primary() {
    const Token& t = cur();
    switch (t.kind) {
      case TokKind::Number: {
        ++pos_;
        return Value(Scalar(GaussianRational(mpq_class(t.text))));
      }
      case TokKind::Ident:
        ++pos_;
        return resolve(t);
      case TokKind::Punct:
        if (t.text[0] == '(') {
          ++pos_;
          Value v = parse_sum();
          expect_punct(')');
          return v;
        }
        if (t.text[0] == '[') {
          ++pos_;
          Value lhs = parse_sum();
          expect_punct(',');
          Value rhs = parse_sum();
          expect_punct(']');
          return Value(bracket(BracketKind::Commutator, promote(lhs), promote(rhs)));
        }
        if (t.text[0] == '{') {
          ++pos_;
          Value lhs = parse_sum();
          expect_punct(',');
          Value rhs = parse_sum();
          expect_punct('}');
          BracketKind kind = BracketKind::Anticommutator;
          if (cur().kind == TokKind::QSub) {
            ++pos_;
            kind = BracketKind::QAnticommutator;
          }
          return Value(bracket(kind, promote(lhs), promote(rhs)));
        }
        throw SyntaxError("unexpected '" + t.text + "'", t.line, t.column);
      default:
        throw SyntaxError("unexpected end of input", t.line, t.column);
    }
  }

  Value resolve(const Token& t) {
    const std::string& name = t.text;
    if (name == "i") return Value(Scalar::i());
    if (name == "q") return Value(Scalar::q());
    if (int sym = symbol_index(name); sym >= 0) return Value(Scalar::symbol(sym));
    if (ctx_.alphabet || ctx_.presentation) {
      AlphabetPtr a = alphabet();
      int g = a->index_of(name);
      if (g >= 0) return Value(NCExpr::generator(a, g));
      if (ctx_.catalog && ctx_.presentation) {
        if (const NamedElement* e = ctx_.catalog->find_element(name, ctx_.presentation))
          return Value(e->expr);
      }
    }
    throw UnknownGenerator(name);
  }

  std::vector<Token> tokens_;
  size_t pos_ = 0;
  ParseContext ctx_;
};

}  // namespace parsedetail

/// Parses an expression over a presentation's alphabet, resolving named
/// elements through the catalog when one is supplied.
inline NCExpr parse_expr(const std::string& text, const ParseContext& ctx) {
  parsedetail::Parser p(text, ctx);
  return p.parse_expression();
}

/// Parses a pure coefficient expression (no generators).
inline Scalar parse_scalar(const std::string& text) {
  parsedetail::Parser p(text, ParseContext{});
  return p.parse_scalar_expression();
}

// ---------------------------------------------------------------------------
// Formatting
// ---------------------------------------------------------------------------

enum class Style { Canonical, Latex };

namespace parsedetail {

inline bool coeff_is_negative(const GaussianRational& c) {
  if (c.real() != 0) return c.real() < 0;
  return c.imag() < 0;
}

/// Single coefficient in product position; mixed complex values get wrapped.
inline std::string coeff_string(const GaussianRational& c) {
  if (c.is_real() || c.is_imaginary()) return c.str();
  return "(" + c.str() + ")";
}

inline std::string monomial_string(const ExpVec& e) {
  std::string out;
  for (int k = 0; k < kNumSymbols; ++k) {
    if (e[k] == 0) continue;
    if (!out.empty()) out += "*";
    out += symbol_name(k);
    if (e[k] != 1) out += "^" + std::to_string(e[k]);
  }
  return out;
}

/// Polynomial in descending term order with sign-aware joins.
inline std::string poly_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    GaussianRational c = it->second;
    bool neg = coeff_is_negative(c);
    if (neg) c = -c;
    std::string mono = monomial_string(it->first);
    std::string term;
    if (mono.empty()) {
      term = coeff_string(c);
    } else if (c.is_one()) {
      term = mono;
    } else {
      term = coeff_string(c) + "*" + mono;
    }
    if (out.empty()) {
      out = neg ? "-" + term : term;
    } else {
      out += (neg ? " - " : " + ") + term;
    }
  }
  return out;
}

inline bool scalar_is_negative(const Scalar& x) {
  return !x.is_zero() && coeff_is_negative(x.numerator().leading_term().second);
}

}  // namespace parsedetail

/// Canonical text for a scalar: numerator polynomial, "/(denominator)" when
/// the denominator is nontrivial.
inline std::string format(const Scalar& x) {
  using namespace parsedetail;
  if (x.denominator().is_one()) return poly_string(x.numerator());
  std::string num = x.numerator().terms().size() > 1 ? "(" + poly_string(x.numerator()) + ")"
                                                     : poly_string(x.numerator());
  return num + "/(" + poly_string(x.denominator()) + ")";
}

namespace parsedetail {

/// True when the scalar needs parentheses as a coefficient in a product.
inline bool needs_parens(const Scalar& x) {
  if (!x.denominator().is_one()) return true;
  return x.numerator().terms().size() > 1;
}

inline std::string word_string(const AlphabetPtr& a, const Word& w) {
  std::string out;
  size_t k = 0;
  while (k < w.size()) {
    size_t run = k + 1;
    while (run < w.size() && w[run] == w[k]) ++run;
    if (!out.empty()) out += "*";
    out += a->gen_name(w[k]);
    if (run - k > 1) out += "^" + std::to_string(run - k);
    k = run;
  }
  return out;
}

inline std::string latex_scalar(const Scalar& x);
inline std::string latex_gen_name(const std::string& name);

}  // namespace parsedetail

/// Canonical text for an algebra element: terms in descending length-lex
/// order, coefficients in canonical fraction form. The output parses back to
/// the same element.
inline std::string format(const NCExpr& x, Style style = Style::Canonical) {
  using namespace parsedetail;
  if (x.is_zero()) return "0";
  if (style == Style::Latex) {
    std::string out;
    for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it) {
      Scalar c = it->second;
      bool neg = scalar_is_negative(c);
      if (neg) c = -c;
      std::string word;
      for (size_t k = 0; k < it->first.size(); ++k) {
        if (k) word += " ";
        word += latex_gen_name(x.alphabet()->gen_name(it->first[k]));
      }
      std::string coeff = latex_scalar(c);
      std::string term;
      if (word.empty()) {
        term = coeff;
      } else if (c.is_one()) {
        term = word;
      } else {
        term = coeff + "\\," + word;
      }
      if (out.empty()) {
        out = neg ? "-" + term : term;
      } else {
        out += (neg ? " - " : " + ") + term;
      }
    }
    return out;
  }
  std::string out;
  for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it) {
    Scalar c = it->second;
    bool neg = scalar_is_negative(c);
    if (neg) c = -c;
    std::string word = word_string(x.alphabet(), it->first);
    std::string cs = format(c);
    std::string term;
    if (word.empty()) {
      // When a sign was extracted, a multi-term polynomial needs parentheses
      // to keep it attached; otherwise sums flatten and no parens are needed.
      bool wrap = neg && c.denominator().is_one() && c.numerator().terms().size() > 1;
      term = wrap ? "(" + cs + ")" : cs;
    } else if (c.is_one()) {
      term = word;
    } else {
      term = (needs_parens(c) ? "(" + cs + ")" : cs) + "*" + word;
    }
    if (out.empty()) {
      out = neg ? "-" + term : term;
    } else {
      out += (neg ? " - " : " + ") + term;
    }
  }
  return out;
}

namespace parsedetail {

inline std::string latex_gen_name(const std::string& name) {
  if (name == "A+") return "A_{+}";
  if (name == "A-") return "A_{-}";
  if (name == "Kinv") return "K^{-1}";
  if (name == "J+") return "J_{+}";
  if (name == "J-") return "J_{-}";
  if (name == "kappa") return "\\kappa";
  if (name == "kappainv") return "\\kappa^{-1}";
  if (name == "wy") return "\\omega_{y}";
  if (name == "Yinv") return "Y^{-1}";
  if (name == "yinv") return "y^{-1}";
  if (name.size() == 2 && (name[0] == 'I' || name[0] == 'K') && std::isdigit(name[1]))
    return std::string(1, name[0]) + "_{" + name.substr(1) + "}";
  return name;
}

/// Paper-style monomial: powers of s rendered as half-integer powers of q.
inline std::string latex_monomial(const ExpVec& e) {
  std::string out;
  auto append = [&out](const std::string& piece) {
    if (!out.empty()) out += "\\,";
    out += piece;
  };
  for (int k = 0; k < kNumSymbols; ++k) {
    if (e[k] == 0) continue;
    if (k == kSymS) {
      int n = e[k];
      if (n % 2 == 0) {
        int h = n / 2;
        append(h == 1 ? std::string("q") : "q^{" + std::to_string(h) + "}");
      } else {
        append("q^{" + std::to_string(n) + "/2}");
      }
      continue;
    }
    std::string base = symbol_name(k);
    if (base.rfind("iota", 0) == 0) base = "\\iota_{" + base.substr(4) + "}";
    if (base.rfind("alpha", 0) == 0) base = "\\alpha_{" + base.substr(5) + "}";
    if (base == "w") base = "q^{\\nu}";
    if (e[k] == 1) {
      append(base);
    } else {
      append(base + "^{" + std::to_string(e[k]) + "}");
    }
  }
  return out;
}

inline std::string latex_poly(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    GaussianRational c = it->second;
    bool neg = coeff_is_negative(c);
    if (neg) c = -c;
    std::string mono = latex_monomial(it->first);
    std::string term;
    if (mono.empty()) {
      term = c.str();
    } else if (c.is_one()) {
      term = mono;
    } else {
      term = (c.is_real() || c.is_imaginary() ? c.str() : "(" + c.str() + ")") + "\\," + mono;
    }
    if (out.empty()) {
      out = neg ? "-" + term : term;
    } else {
      out += (neg ? " - " : " + ") + term;
    }
  }
  return out;
}

inline std::string latex_scalar(const Scalar& x) {
  if (x.denominator().is_one()) {
    std::string body = latex_poly(x.numerator());
    if (x.numerator().terms().size() > 1) return "\\left(" + body + "\\right)";
    return body;
  }
  return "\\frac{" + latex_poly(x.numerator()) + "}{" + latex_poly(x.denominator()) + "}";
}

}  // namespace parsedetail

// ---------------------------------------------------------------------------
// Presentation files
// ---------------------------------------------------------------------------

/// Declarative presentation format, one definition per line:
///   presentation <name>
///   generators <g1> <g2> ...
///   inverses <g> <ginv>       (zero or more lines)
///   rule <g> * <h> -> <expression>
/// '#' starts a comment.
inline Presentation parse_presentation(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::string name;
  AlphabetPtr alphabet;
  std::vector<std::string> generators;
  std::vector<std::pair<int, int>> inverses;
  std::vector<RewriteRule> rules;
  int line_no = 0;

  auto fail = [&](const std::string& what) { throw SyntaxError(what, line_no, 1); };

  while (std::getline(in, line)) {
    ++line_no;
    if (size_t hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string keyword;
    if (!(ls >> keyword)) continue;
    if (keyword == "presentation") {
      if (!(ls >> name)) fail("presentation needs a name");
    } else if (keyword == "generators") {
      std::string g;
      while (ls >> g) generators.push_back(g);
      if (generators.empty()) fail("empty generator list");
    } else if (keyword == "inverses") {
      if (generators.empty()) fail("inverses before generators");
      if (alphabet) fail("inverses must precede rules");
      std::string g, ginv;
      if (!(ls >> g >> ginv)) fail("inverses needs two generator names");
      auto index = [&](const std::string& n) {
        for (size_t k = 0; k < generators.size(); ++k)
          if (generators[k] == n) return static_cast<int>(k);
        fail("unknown generator '" + n + "' in inverses");
        return -1;
      };
      inverses.emplace_back(index(g), index(ginv));
    } else if (keyword == "rule") {
      if (!alphabet) {
        if (name.empty() || generators.empty())
          fail("rule before presentation header");
        alphabet = make_alphabet(name, generators, inverses);
      }
      std::string rest;
      std::getline(ls, rest);
      size_t arrow = rest.find("->");
      if (arrow == std::string::npos) fail("rule needs '->'");
      std::string lhs_text = rest.substr(0, arrow);
      std::string rhs_text = rest.substr(arrow + 2);
      // Left side: g * h.
      std::istringstream lhs_in(lhs_text);
      std::string g, star, h;
      if (!(lhs_in >> g >> star >> h) || star != "*")
        fail("rule left side must be '<gen> * <gen>'");
      int gi = alphabet->index_of(g);
      int hi = alphabet->index_of(h);
      if (gi < 0 || hi < 0) fail("unknown generator on rule left side");
      ParseContext ctx;
      ctx.alphabet = alphabet;  // rules may not reference named elements
      NCExpr rhs = parse_expr(rhs_text, ctx);
      rules.emplace_back(gi, hi, std::move(rhs));
    } else {
      fail("unknown keyword '" + keyword + "'");
    }
  }
  if (name.empty() || generators.empty()) throw SyntaxError("incomplete presentation", line_no, 1);
  if (!alphabet) alphabet = make_alphabet(name, generators, inverses);
  return Presentation(name, alphabet, std::move(rules));
}

inline std::string format_presentation(const Presentation& p) {
  std::string out = "presentation " + p.name() + "\n";
  out += "generators";
  for (int k = 0; k < p.alphabet()->size(); ++k) out += " " + p.alphabet()->gen_name(k);
  out += "\n";
  for (auto [g, ginv] : p.alphabet()->inverse_pairs)
    out += "inverses " + p.alphabet()->gen_name(g) + " " + p.alphabet()->gen_name(ginv) + "\n";
  for (const RewriteRule& r : p.rules()) {
    out += "rule " + p.alphabet()->gen_name(r.lhs_first) + " * " +
           p.alphabet()->gen_name(r.lhs_second) + " -> " + format(r.rhs) + "\n";
  }
  return out;
}

}  // namespace qk
