#pragma once

// Free associative algebra over the scalar field on a finite generator
// alphabet, plus its two- and three-fold tensor powers. Elements are finite
// linear combinations of words; the empty word is the unit.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "qkernel/scalar.hpp"

namespace qk {

/// Ordered generator alphabet. The listing order is the normal-ordering used
/// by rewrite systems and by the term order on words.
struct Alphabet {
  std::string name;
  std::vector<std::string> generators;
  /// Pairs (g, g^-1) of mutually inverse generators, used by the expression
  /// grammar to resolve negative powers.
  std::vector<std::pair<int, int>> inverse_pairs;

  int size() const { return static_cast<int>(generators.size()); }

  int index_of(std::string_view gen_name) const {
    for (int k = 0; k < size(); ++k) {
      if (generators[static_cast<size_t>(k)] == gen_name) return k;
    }
    return -1;
  }

  const std::string& gen_name(int idx) const { return generators[static_cast<size_t>(idx)]; }

  int inverse_of(int idx) const {
    for (auto [g, ginv] : inverse_pairs) {
      if (g == idx) return ginv;
      if (ginv == idx) return g;
    }
    return -1;
  }
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

inline AlphabetPtr make_alphabet(std::string name, std::vector<std::string> generators,
                                 std::vector<std::pair<int, int>> inverse_pairs = {}) {
  if (generators.size() > 255) throw Error("alphabet '" + name + "' has more than 255 generators");
  for (size_t k = 0; k < generators.size(); ++k) {
    for (size_t j = k + 1; j < generators.size(); ++j) {
      if (generators[k] == generators[j])
        throw Error("alphabet '" + name + "' repeats generator '" + generators[k] + "'");
    }
  }
  auto a = std::make_shared<Alphabet>();
  a->name = std::move(name);
  a->generators = std::move(generators);
  a->inverse_pairs = std::move(inverse_pairs);
  return a;
}

struct Generator {
  AlphabetPtr alphabet;
  int index = -1;

  const std::string& name() const { return alphabet->gen_name(index); }
};

/// A word in the free monoid on an alphabet, stored as generator indices.
using Word = std::vector<uint8_t>;

/// Length-lexicographic word order over the alphabet order.
struct WordLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

inline void require_same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) {
  if (a != b)
    throw AlphabetMismatch("alphabet '" + a->name + "' combined with alphabet '" + b->name + "'");
}

class NCExpr {
 public:
  using TermMap = std::map<Word, Scalar, WordLess>;

  explicit NCExpr(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {}

  static NCExpr unit(AlphabetPtr alphabet, Scalar coeff = Scalar(1)) {
    NCExpr e(std::move(alphabet));
    e.add_term(Word{}, std::move(coeff));
    return e;
  }

  static NCExpr generator(AlphabetPtr alphabet, int idx) {
    NCExpr e(std::move(alphabet));
    e.add_term(Word{static_cast<uint8_t>(idx)}, Scalar(1));
    return e;
  }

  static NCExpr word(AlphabetPtr alphabet, Word w, Scalar coeff = Scalar(1)) {
    NCExpr e(std::move(alphabet));
    e.add_term(std::move(w), std::move(coeff));
    return e;
  }

  const AlphabetPtr& alphabet() const { return alphabet_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// True when the expression is a scalar multiple of the unit word.
  bool is_scalar() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
  }

  Scalar scalar_part() const {
    auto it = terms_.find(Word{});
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  void add_term(Word w, Scalar c) {
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
      terms_.emplace(std::move(w), std::move(c));
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  friend NCExpr operator+(const NCExpr& x, const NCExpr& y) {
    require_same_alphabet(x.alphabet_, y.alphabet_);
    NCExpr r = x;
    for (const auto& [w, c] : y.terms_) r.add_term(w, c);
    return r;
  }

  friend NCExpr operator-(const NCExpr& x, const NCExpr& y) {
    require_same_alphabet(x.alphabet_, y.alphabet_);
    NCExpr r = x;
    for (const auto& [w, c] : y.terms_) r.add_term(w, -c);
    return r;
  }

  friend NCExpr operator-(const NCExpr& x) {
    NCExpr r(x.alphabet_);
    for (const auto& [w, c] : x.terms_) r.terms_.emplace(w, -c);
    return r;
  }

  friend NCExpr operator*(const NCExpr& x, const NCExpr& y) {
    require_same_alphabet(x.alphabet_, y.alphabet_);
    NCExpr r(x.alphabet_);
    for (const auto& [wx, cx] : x.terms_) {
      for (const auto& [wy, cy] : y.terms_) {
        Word w = wx;
        w.insert(w.end(), wy.begin(), wy.end());
        r.add_term(std::move(w), cx * cy);
      }
    }
    return r;
  }

  friend NCExpr operator*(const NCExpr& x, const Scalar& c) {
    NCExpr r(x.alphabet_);
    if (c.is_zero()) return r;
    for (const auto& [w, v] : x.terms_) r.terms_.emplace(w, v * c);
    return r;
  }
  friend NCExpr operator*(const Scalar& c, const NCExpr& x) { return x * c; }

  NCExpr& operator+=(const NCExpr& o) { return *this = *this + o; }
  NCExpr& operator-=(const NCExpr& o) { return *this = *this - o; }
  NCExpr& operator*=(const NCExpr& o) { return *this = *this * o; }

  NCExpr pow(int e) const {
    NCExpr acc = unit(alphabet_);
    for (int k = 0; k < e; ++k) acc = acc * *this;
    return acc;
  }

  friend bool operator==(const NCExpr& x, const NCExpr& y) {
    return x.alphabet_ == y.alphabet_ && x.terms_ == y.terms_;
  }
  friend bool operator!=(const NCExpr& x, const NCExpr& y) { return !(x == y); }

 private:
  AlphabetPtr alphabet_;
  TermMap terms_;
};

enum class BracketKind { Commutator, Anticommutator, QAnticommutator };

/// [x,y], {x,y}, or the q-anticommutator {x,y}_q = q^(1/2) xy + q^(-1/2) yx.
inline NCExpr bracket(BracketKind kind, const NCExpr& x, const NCExpr& y) {
  switch (kind) {
    case BracketKind::Commutator:
      return x * y - y * x;
    case BracketKind::Anticommutator:
      return x * y + y * x;
    case BracketKind::QAnticommutator:
      return Scalar::symbol(kSymS) * (x * y) + Scalar::symbol(kSymS, -1) * (y * x);
  }
  throw Error("unreachable bracket kind");
}

inline NCExpr commutator(const NCExpr& x, const NCExpr& y) {
  return bracket(BracketKind::Commutator, x, y);
}
inline NCExpr anticommutator(const NCExpr& x, const NCExpr& y) {
  return bracket(BracketKind::Anticommutator, x, y);
}
inline NCExpr q_anticommutator(const NCExpr& x, const NCExpr& y) {
  return bracket(BracketKind::QAnticommutator, x, y);
}

// ---------------------------------------------------------------------------
// Tensor squares
// ---------------------------------------------------------------------------

/// Element of the two-fold tensor square: linear combination of word pairs.
/// The product rule is componentwise with no sign, (a(x)b)(c(x)d) = ac(x)bd.
class TensorExpr {
 public:
  using Key = std::pair<Word, Word>;
  struct KeyLess {
    bool operator()(const Key& a, const Key& b) const {
      WordLess lt;
      if (lt(a.first, b.first)) return true;
      if (lt(b.first, a.first)) return false;
      return lt(a.second, b.second);
    }
  };
  using TermMap = std::map<Key, Scalar, KeyLess>;

  explicit TensorExpr(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {}

  static TensorExpr unit(AlphabetPtr alphabet, Scalar coeff = Scalar(1)) {
    TensorExpr t(std::move(alphabet));
    t.add_term(Word{}, Word{}, std::move(coeff));
    return t;
  }

  /// Outer product x (x) y.
  static TensorExpr outer(const NCExpr& x, const NCExpr& y) {
    require_same_alphabet(x.alphabet(), y.alphabet());
    TensorExpr t(x.alphabet());
    for (const auto& [wx, cx] : x.terms()) {
      for (const auto& [wy, cy] : y.terms()) t.add_term(wx, wy, cx * cy);
    }
    return t;
  }

  const AlphabetPtr& alphabet() const { return alphabet_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(Word left, Word right, Scalar c) {
    if (c.is_zero()) return;
    Key k{std::move(left), std::move(right)};
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(std::move(k), std::move(c));
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  friend TensorExpr operator+(const TensorExpr& x, const TensorExpr& y) {
    require_same_alphabet(x.alphabet_, y.alphabet_);
    TensorExpr r = x;
    for (const auto& [k, c] : y.terms_) r.add_term(k.first, k.second, c);
    return r;
  }

  friend TensorExpr operator-(const TensorExpr& x, const TensorExpr& y) {
    require_same_alphabet(x.alphabet_, y.alphabet_);
    TensorExpr r = x;
    for (const auto& [k, c] : y.terms_) r.add_term(k.first, k.second, -c);
    return r;
  }

  friend TensorExpr operator*(const TensorExpr& x, const TensorExpr& y) {
    require_same_alphabet(x.alphabet_, y.alphabet_);
    TensorExpr r(x.alphabet_);
    for (const auto& [kx, cx] : x.terms_) {
      for (const auto& [ky, cy] : y.terms_) {
        Word left = kx.first;
        left.insert(left.end(), ky.first.begin(), ky.first.end());
        Word right = kx.second;
        right.insert(right.end(), ky.second.begin(), ky.second.end());
        r.add_term(std::move(left), std::move(right), cx * cy);
      }
    }
    return r;
  }

  friend TensorExpr operator*(const TensorExpr& x, const Scalar& c) {
    TensorExpr r(x.alphabet_);
    if (c.is_zero()) return r;
    for (const auto& [k, v] : x.terms_) r.terms_.emplace(k, v * c);
    return r;
  }
  friend TensorExpr operator*(const Scalar& c, const TensorExpr& x) { return x * c; }

  TensorExpr& operator+=(const TensorExpr& o) { return *this = *this + o; }

  friend bool operator==(const TensorExpr& x, const TensorExpr& y) {
    return x.alphabet_ == y.alphabet_ && x.terms_ == y.terms_;
  }
  friend bool operator!=(const TensorExpr& x, const TensorExpr& y) { return !(x == y); }

 private:
  AlphabetPtr alphabet_;
  TermMap terms_;
};

inline TensorExpr tensor_mul(const TensorExpr& x, const TensorExpr& y) { return x * y; }

/// Three-fold tensors, needed only for coassociativity checks.
class Tensor3Expr {
 public:
  using Key = std::tuple<Word, Word, Word>;
  struct KeyLess {
    bool operator()(const Key& a, const Key& b) const {
      WordLess lt;
      if (lt(std::get<0>(a), std::get<0>(b))) return true;
      if (lt(std::get<0>(b), std::get<0>(a))) return false;
      if (lt(std::get<1>(a), std::get<1>(b))) return true;
      if (lt(std::get<1>(b), std::get<1>(a))) return false;
      return lt(std::get<2>(a), std::get<2>(b));
    }
  };
  using TermMap = std::map<Key, Scalar, KeyLess>;

  explicit Tensor3Expr(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {}

  const AlphabetPtr& alphabet() const { return alphabet_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(Word a, Word b, Word c, Scalar coeff) {
    if (coeff.is_zero()) return;
    Key k{std::move(a), std::move(b), std::move(c)};
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(std::move(k), std::move(coeff));
    } else {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  friend Tensor3Expr operator-(const Tensor3Expr& x, const Tensor3Expr& y) {
    require_same_alphabet(x.alphabet_, y.alphabet_);
    Tensor3Expr r = x;
    for (const auto& [k, c] : y.terms_)
      r.add_term(std::get<0>(k), std::get<1>(k), std::get<2>(k), -c);
    return r;
  }

  friend bool operator==(const Tensor3Expr& x, const Tensor3Expr& y) {
    return x.alphabet_ == y.alphabet_ && x.terms_ == y.terms_;
  }

 private:
  AlphabetPtr alphabet_;
  TermMap terms_;
};

// ---------------------------------------------------------------------------
// Homomorphism and anti-homomorphism extension
// ---------------------------------------------------------------------------

/// Generator images for a (anti)homomorphism, indexed by generator index of
/// the source alphabet; a disengaged optional means "no image".
template <class Target>
using GenImages = std::vector<std::optional<Target>>;

template <class Target>
Target fold_word(const GenImages<Target>& images, const Word& w, const Target& unit_value,
                 const Alphabet& source, bool reverse) {
  Target acc = unit_value;
  if (!reverse) {
    for (uint8_t g : w) {
      if (g >= images.size() || !images[g]) throw MissingImage(source.gen_name(g));
      acc = acc * *images[g];
    }
  } else {
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      if (*it >= images.size() || !images[*it]) throw MissingImage(source.gen_name(*it));
      acc = acc * *images[*it];
    }
  }
  return acc;
}

/// Linear multiplicative extension: the image of a word is the ordered
/// product of the generator images.
template <class Target>
Target extend_hom(const GenImages<Target>& images, const NCExpr& x, const Target& unit_value) {
  Target out = unit_value * Scalar(0);
  for (const auto& [w, c] : x.terms()) {
    out += fold_word(images, w, unit_value, *x.alphabet(), /*reverse=*/false) * c;
  }
  return out;
}

/// Linear anti-multiplicative extension: the image of g1 g2 ... gk is
/// image(gk) ... image(g1).
inline NCExpr extend_antihom(const GenImages<NCExpr>& images, const NCExpr& x,
                             const NCExpr& unit_value) {
  NCExpr out = unit_value * Scalar(0);
  for (const auto& [w, c] : x.terms()) {
    out += fold_word(images, w, unit_value, *x.alphabet(), /*reverse=*/true) * c;
  }
  return out;
}

/// Renames generators along a bijection of alphabets and, optionally, applies
/// a simultaneous scalar substitution to every coefficient.
inline NCExpr rename_generators(const NCExpr& x, const std::map<int, int>& rename,
                                const AlphabetPtr& target,
                                const std::map<int, Scalar>& coeff_subst = {}) {
  NCExpr out(target);
  for (const auto& [w, c] : x.terms()) {
    Word nw;
    nw.reserve(w.size());
    for (uint8_t g : w) {
      auto it = rename.find(g);
      if (it == rename.end()) throw MissingImage(x.alphabet()->gen_name(g));
      nw.push_back(static_cast<uint8_t>(it->second));
    }
    out.add_term(std::move(nw), coeff_subst.empty() ? c : c.substitute(coeff_subst));
  }
  return out;
}

}  // namespace qk
