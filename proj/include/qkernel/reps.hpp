#pragma once

// Exact representation engines for osp_q(1|2): the infinite-dimensional
// modules with formal q^nu (symbol w), their finite-dimensional truncations
// at w = s^-(N+1), and the realization on polynomials in one variable acted
// on by multiplication, q-shift and reflection operators.

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "qkernel/catalog.hpp"

namespace qk {

/// rho_n = [n + nu]_q - (-1)^n [nu]_q, the lowering coefficient. Memoized;
/// the action code queries it for every lowering step.
inline const Scalar& rho(int n) {
  static std::mutex mu;
  static std::map<int, Scalar> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) {
    Scalar sgn((n % 2 == 0) ? 1 : -1);
    it = cache.emplace(n, q_integer_shifted(n) - sgn * q_integer_shifted(0)).first;
  }
  return it->second;
}

/// rho_n with w specialized to s^-(N+1), memoized per (N, n).
inline const Scalar& rho_truncated(int N, int n) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, Scalar> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(N, n);
  auto it = cache.find(key);
  if (it == cache.end()) {
    it = cache
             .emplace(key,
                      rho(n).substitute({{kSymW, Scalar::symbol(kSymS, -(N + 1))}}))
             .first;
  }
  return it->second;
}

/// Finitely supported vector in the basis f_0, f_1, ... with parity sign e.
struct RepVector {
  int e = +1;
  std::map<int, Scalar> entries;

  static RepVector basis(int n, int e = +1) {
    RepVector v;
    v.e = e;
    v.entries.emplace(n, Scalar(1));
    return v;
  }

  bool is_zero() const { return entries.empty(); }

  void add(int n, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = entries.find(n);
    if (it == entries.end()) {
      entries.emplace(n, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) entries.erase(it);
    }
  }

  friend bool operator==(const RepVector& u, const RepVector& v) {
    return u.e == v.e && u.entries == v.entries;
  }
};

namespace repdetail {

/// A word sends f_n to a scalar multiple of a single f_m; the scalar is a
/// sign, a monomial in s and w, and one rho factor per lowering step. The
/// walk accumulates those parts and multiplies once at the end.
/// Returns false when the vector is annihilated (lowering f_0, or leaving
/// [0, N] in the truncated module with trunc_N >= 0).
inline bool walk_word(const Word& word, int e, int trunc_N, int& n, Scalar& factor) {
  using namespace presentations;
  ExpVec mono = zero_exponents();
  int sign = 1;
  Scalar rho_product(1);
  bool has_rho = false;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    switch (*it) {
      case kAplus:
        if (trunc_N >= 0 && n == trunc_N) return false;
        ++n;
        break;
      case kAminus:
        if (n == 0) return false;
        rho_product *= (trunc_N >= 0) ? rho_truncated(trunc_N, n) : rho(n);
        has_rho = true;
        --n;
        break;
      case kK:
        if (trunc_N >= 0) {
          mono[kSymS] += 2 * n - trunc_N;
        } else {
          mono[kSymS] += 2 * n + 1;
          mono[kSymW] += 1;
        }
        break;
      case kKinv:
        if (trunc_N >= 0) {
          mono[kSymS] -= 2 * n - trunc_N;
        } else {
          mono[kSymS] -= 2 * n + 1;
          mono[kSymW] -= 1;
        }
        break;
      case kP:
        if ((n % 2 != 0) != (e < 0)) sign = -sign;  // e * (-1)^n
        break;
      default:
        throw Error("generator index out of range for the module action");
    }
  }
  factor = Scalar(LaurentPoly::monomial(mono, GaussianRational(sign)));
  if (has_rho) factor *= rho_product;
  return true;
}

}  // namespace repdetail

/// Action of an expression over the ospq alphabet, letters applied right to
/// left.
inline RepVector act_W(const NCExpr& x, const RepVector& v) {
  require_same_alphabet(x.alphabet(), presentations::ospq().alphabet());
  RepVector out;
  out.e = v.e;
  for (const auto& [word, coeff] : x.terms()) {
    for (const auto& [n0, c0] : v.entries) {
      int n = n0;
      Scalar factor(1);
      if (!repdetail::walk_word(word, v.e, /*trunc_N=*/-1, n, factor)) continue;
      out.add(n, factor * c0 * coeff);
    }
  }
  return out;
}

/// Dense exact matrix of an operator on the (N+1)-dimensional truncation.
struct RepMatrix {
  int N = 0;
  int e = +1;
  std::vector<Scalar> entries;  // row-major, (N+1) x (N+1)

  RepMatrix(int N_, int e_) : N(N_), e(e_), entries(static_cast<size_t>((N_ + 1) * (N_ + 1))) {}

  Scalar& at(int row, int col) { return entries[static_cast<size_t>(row * (N + 1) + col)]; }
  const Scalar& at(int row, int col) const {
    return entries[static_cast<size_t>(row * (N + 1) + col)];
  }

  bool is_zero() const {
    for (const Scalar& x : entries) {
      if (!x.is_zero()) return false;
    }
    return true;
  }

  friend bool operator==(const RepMatrix& x, const RepMatrix& y) {
    return x.N == y.N && x.e == y.e && x.entries == y.entries;
  }
};

/// True when the truncation is consistent: rho(N+1) vanishes at w = s^-(N+1).
inline bool truncation_vanishes(int N) { return rho_truncated(N, N + 1).is_zero(); }

/// Matrix of x on span{f_0..f_N} with w = s^-(N+1). N must be even; the
/// truncation condition rho(N+1) = 0 is asserted before construction.
inline RepMatrix finite_matrix(const NCExpr& x, int N, int e) {
  if (N < 0 || N % 2 != 0) throw OddN();
  require_same_alphabet(x.alphabet(), presentations::ospq().alphabet());
  if (!truncation_vanishes(N))
    throw Error("internal: truncation coefficient rho(N+1) does not vanish");
  RepMatrix m(N, e);
  for (int col = 0; col <= N; ++col) {
    for (const auto& [word, coeff] : x.terms()) {
      int n = col;
      Scalar factor(1);
      if (!repdetail::walk_word(word, e, N, n, factor)) continue;
      m.at(n, col) += factor * coeff;
    }
  }
  return m;
}

// ---------------------------------------------------------------------------
// Polynomial realization
// ---------------------------------------------------------------------------

/// Polynomial in z with scalar coefficients, the carrier of the realization
/// f_n(z) = z^n.
struct BargmannPoly {
  std::map<int, Scalar> coefficients;  // degree -> coefficient

  static BargmannPoly monomial(int degree, Scalar c = Scalar(1)) {
    BargmannPoly p;
    if (!c.is_zero()) p.coefficients.emplace(degree, std::move(c));
    return p;
  }

  bool is_zero() const { return coefficients.empty(); }

  void add(int degree, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = coefficients.find(degree);
    if (it == coefficients.end()) {
      coefficients.emplace(degree, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) coefficients.erase(it);
    }
  }

  friend bool operator==(const BargmannPoly& p, const BargmannPoly& q) {
    return p.coefficients == q.coefficients;
  }
};

namespace repdetail {

/// T_q^(+-1): z^n -> q^(+-n) z^n.
inline BargmannPoly q_shift(const BargmannPoly& p, int direction) {
  BargmannPoly out;
  for (const auto& [n, c] : p.coefficients)
    out.add(n, c * Scalar::symbol(kSymS, 2 * direction * n));
  return out;
}

/// R_z: z^n -> (-1)^n z^n.
inline BargmannPoly reflect(const BargmannPoly& p) {
  BargmannPoly out;
  for (const auto& [n, c] : p.coefficients) out.add(n, (n % 2 == 0) ? c : -c);
  return out;
}

/// Exact division by z; the constant term must be absent.
inline BargmannPoly divide_by_z(const BargmannPoly& p) {
  BargmannPoly out;
  for (const auto& [n, c] : p.coefficients) {
    if (n == 0) throw DivisionByZero("polynomial has a constant term; division by z is not exact");
    out.add(n - 1, c);
  }
  return out;
}

inline BargmannPoly scale(const BargmannPoly& p, const Scalar& c) {
  BargmannPoly out;
  for (const auto& [n, v] : p.coefficients) out.add(n, v * c);
  return out;
}

inline BargmannPoly subtract(const BargmannPoly& p, const BargmannPoly& q) {
  BargmannPoly out = p;
  for (const auto& [n, c] : q.coefficients) out.add(n, -c);
  return out;
}

/// One generator applied through the operator realization:
///   A+ = z, K = s w T_q, P = e R_z,
///   A- = (w/(q - q^-1)) (T_q - R_z)/z - (w^-1/(q - q^-1)) (T_q^-1 - R_z)/z.
inline BargmannPoly apply_generator(int gen, int e, const BargmannPoly& p) {
  using namespace presentations;
  switch (gen) {
    case kAplus: {
      BargmannPoly out;
      for (const auto& [n, c] : p.coefficients) out.add(n + 1, c);
      return out;
    }
    case kK:
      return scale(q_shift(p, +1), Scalar::symbol(kSymS) * Scalar::symbol(kSymW));
    case kKinv:
      return scale(q_shift(p, -1), Scalar::symbol(kSymS, -1) * Scalar::symbol(kSymW, -1));
    case kP:
      return scale(reflect(p), Scalar(e));
    case kAminus: {
      Scalar qdiff_inv = (Scalar::q() - Scalar::q(-1)).inverse();
      BargmannPoly refl = reflect(p);
      BargmannPoly up = divide_by_z(subtract(q_shift(p, +1), refl));
      BargmannPoly down = divide_by_z(subtract(q_shift(p, -1), refl));
      return subtract(scale(up, Scalar::symbol(kSymW) * qdiff_inv),
                      scale(down, Scalar::symbol(kSymW, -1) * qdiff_inv));
    }
    default:
      throw Error("generator index out of range for the polynomial realization");
  }
}

}  // namespace repdetail

/// Applies an expression over the ospq alphabet through the polynomial
/// realization; the divisions by z are exact because both difference
/// operators annihilate constants.
inline BargmannPoly bargmann_apply(const NCExpr& x, const BargmannPoly& p, int e = +1) {
  require_same_alphabet(x.alphabet(), presentations::ospq().alphabet());
  BargmannPoly out;
  for (const auto& [word, coeff] : x.terms()) {
    BargmannPoly cur = p;
    for (auto it = word.rbegin(); it != word.rend(); ++it)
      cur = repdetail::apply_generator(*it, e, cur);
    for (const auto& [n, c] : cur.coefficients) out.add(n, c * coeff);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Exact linear algebra for the commutant
// ---------------------------------------------------------------------------

/// Rank of a dense matrix over Q(i) by Gaussian elimination.
inline int matrix_rank(std::vector<std::vector<GaussianRational>> rows) {
  if (rows.empty()) return 0;
  size_t cols = rows[0].size();
  int rank = 0;
  size_t row = 0;
  for (size_t col = 0; col < cols && row < rows.size(); ++col) {
    size_t pivot = row;
    while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[row], rows[pivot]);
    GaussianRational inv = rows[row][col].inverse();
    for (size_t j = col; j < cols; ++j) rows[row][j] *= inv;
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == row || rows[r][col].is_zero()) continue;
      GaussianRational f = rows[r][col];
      for (size_t j = col; j < cols; ++j) rows[r][j] -= f * rows[row][j];
    }
    ++row;
    ++rank;
  }
  return rank;
}

/// Dimension of the joint commutant of a family of exact numeric matrices:
/// the nullity of M -> [M, G_k] stacked over k.
inline int commutant_dimension(const std::vector<std::vector<GaussianRational>>& mats, int dim) {
  size_t unknowns = static_cast<size_t>(dim) * static_cast<size_t>(dim);
  std::vector<std::vector<GaussianRational>> system;
  for (const auto& g : mats) {
    for (int r = 0; r < dim; ++r) {
      for (int c = 0; c < dim; ++c) {
        // Row for the (r, c) entry of G M - M G.
        std::vector<GaussianRational> row(unknowns);
        for (int j = 0; j < dim; ++j) {
          row[static_cast<size_t>(j * dim + c)] += g[static_cast<size_t>(r * dim + j)];
          row[static_cast<size_t>(r * dim + j)] -= g[static_cast<size_t>(j * dim + c)];
        }
        system.push_back(std::move(row));
      }
    }
  }
  return static_cast<int>(unknowns) - matrix_rank(std::move(system));
}

/// Evaluates a truncated-module matrix at a rational value of s; the result
/// must be free of remaining symbols.
inline std::vector<GaussianRational> evaluate_matrix(const RepMatrix& m,
                                                     const GaussianRational& s_value) {
  std::vector<GaussianRational> out;
  out.reserve(m.entries.size());
  const std::map<int, Scalar> subst{{kSymS, Scalar(s_value)}};
  for (const Scalar& x : m.entries) {
    Scalar v = x.substitute(subst);
    out.push_back(v.rational_value());
  }
  return out;
}

/// Commutant dimension of the truncated module at a generic rational s,
/// computed from the raising and lowering matrices alone: dimension one means
/// A+ and A- generate the full matrix algebra.
inline int finite_commutant_dimension(int N, int e, const GaussianRational& s_value) {
  using namespace presentations;
  const AlphabetPtr& a = ospq().alphabet();
  std::vector<std::vector<GaussianRational>> mats;
  for (int g : {kAplus, kAminus})
    mats.push_back(evaluate_matrix(finite_matrix(NCExpr::generator(a, g), N, e), s_value));
  return commutant_dimension(mats, N + 1);
}

// ---------------------------------------------------------------------------
// Module-level checks
// ---------------------------------------------------------------------------

enum class RepCheckKind {
  WRelations,
  WEquitable,
  WCasimir,
  BargmannConsistency,
  FiniteIrreducibility,
};

struct RepCheck {
  std::string id;
  std::string claim;
  bool ok;
  std::string detail;
};

/// The expected equitable actions:
///   X f_n = e(-1)^n s^-(2n+1) w^-1 (f_n - (1 - q^-1) f_(n+1))
///   Y f_n = e(-1)^n s^(2n+1) w f_n
///   Z f_n = e(-1)^n (s^-(2n+1) w^-1 f_n + (q^1/2 + q^-1/2) rho_n f_(n-1))
inline RepVector expected_equitable_action(int which, int n, int e) {
  Scalar sgn(((n % 2 == 0) ? 1 : -1) * e);
  Scalar up = Scalar::symbol(kSymS, 2 * n + 1) * Scalar::symbol(kSymW);
  Scalar down = Scalar::symbol(kSymS, -(2 * n + 1)) * Scalar::symbol(kSymW, -1);
  RepVector v;
  v.e = e;
  switch (which) {
    case 0:  // X
      v.add(n, sgn * down);
      v.add(n + 1, -sgn * down * (Scalar(1) - Scalar::q(-1)));
      return v;
    case 1:  // Y
      v.add(n, sgn * up);
      return v;
    case 2:  // Z
      v.add(n, sgn * down);
      if (n > 0)
        v.add(n - 1, sgn * (Scalar::symbol(kSymS) + Scalar::symbol(kSymS, -1)) * rho(n));
      return v;
    default:
      throw Error("unknown equitable action");
  }
}

inline std::vector<RepCheck> check_rep(const Catalog& cat, RepCheckKind kind, int cutoff,
                                       int N = 2) {
  using namespace presentations;
  const Presentation& p = cat.ospq();
  const AlphabetPtr& a = p.alphabet();
  std::vector<RepCheck> checks;

  switch (kind) {
    case RepCheckKind::WRelations: {
      for (const RewriteRule& r : p.rules()) {
        NCExpr rel = NCExpr::word(a, r.lhs_word()) - r.rhs;
        bool ok = true;
        for (int e : {+1, -1}) {
          for (int n = 0; n <= cutoff && ok; ++n)
            ok = act_W(rel, RepVector::basis(n, e)).is_zero();
        }
        checks.push_back({"rep.relations." + a->gen_name(r.lhs_first) + "*" +
                              a->gen_name(r.lhs_second),
                          "defining relation annihilates f_n for n <= " + std::to_string(cutoff),
                          ok, std::string()});
      }
      return checks;
    }
    case RepCheckKind::WEquitable: {
      const char* names[3] = {"X", "Y", "Z"};
      for (int which = 0; which < 3; ++which) {
        bool ok = true;
        for (int e : {+1, -1}) {
          for (int n = 0; n <= cutoff && ok; ++n) {
            RepVector got = act_W(cat.expr(names[which]), RepVector::basis(n, e));
            ok = got == expected_equitable_action(which, n, e);
          }
        }
        checks.push_back({std::string("rep.equitable.") + names[which],
                          std::string(names[which]) + " acts by its displayed formula", ok,
                          std::string()});
      }
      return checks;
    }
    case RepCheckKind::WCasimir: {
      Scalar eigen = -q_integer_shifted(0);  // -[nu]_q, times e below
      bool ok = true;
      for (int e : {+1, -1}) {
        for (int n = 0; n <= cutoff && ok; ++n) {
          RepVector expected;
          expected.e = e;
          expected.add(n, Scalar(e) * eigen);
          ok = act_W(cat.expr("Q"), RepVector::basis(n, e)) == expected;
        }
      }
      checks.push_back({"rep.casimir-spectrum", "Q acts as -e [nu]_q on every f_n", ok,
                        std::string()});
      return checks;
    }
    case RepCheckKind::BargmannConsistency: {
      for (int g = 0; g < a->size(); ++g) {
        bool ok = true;
        for (int e : {+1, -1}) {
          for (int n = 0; n <= cutoff && ok; ++n) {
            BargmannPoly got =
                bargmann_apply(NCExpr::generator(a, g), BargmannPoly::monomial(n), e);
            RepVector ref = act_W(NCExpr::generator(a, g), RepVector::basis(n, e));
            BargmannPoly expected;
            for (const auto& [m, c] : ref.entries) expected.add(m, c);
            ok = got == expected;
          }
        }
        checks.push_back({"rep.bargmann." + a->gen_name(g),
                          "polynomial realization of " + a->gen_name(g) +
                              " matches the module action",
                          ok, std::string()});
      }
      return checks;
    }
    case RepCheckKind::FiniteIrreducibility: {
      int dim = finite_commutant_dimension(N, +1, GaussianRational(2));
      checks.push_back({"rep.irreducible.N" + std::to_string(N),
                        "commutant of the " + std::to_string(N + 1) +
                            "-dimensional module at s = 2 is scalar",
                        dim == 1, "commutant dimension " + std::to_string(dim)});
      return checks;
    }
  }
  return checks;
}

}  // namespace qk
