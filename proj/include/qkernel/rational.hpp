#pragma once

// Exact arithmetic in Q(i): complex numbers with arbitrary-precision rational
// real and imaginary parts, backed by GMP.

#include <gmpxx.h>

#include <string>
#include <utility>

#include "qkernel/errors.hpp"

namespace qk {

class GaussianRational {
 public:
  GaussianRational() : re_(0), im_(0) {}
  GaussianRational(int n) : re_(n), im_(0) {}        // NOLINT(google-explicit-constructor)
  GaussianRational(long n) : re_(n), im_(0) {}       // NOLINT(google-explicit-constructor)
  GaussianRational(mpq_class r) : re_(std::move(r)), im_(0) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(mpq_class r, mpq_class i) : re_(std::move(r)), im_(std::move(i)) {}

  static GaussianRational i() { return {mpq_class(0), mpq_class(1)}; }

  static GaussianRational fraction(long num, long den) {
    if (den == 0) throw DivisionByZero();
    mpq_class q(num, den);
    q.canonicalize();
    return {q, mpq_class(0)};
  }

  const mpq_class& real() const { return re_; }
  const mpq_class& imag() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_one() const { return re_ == 1 && im_ == 0; }
  bool is_real() const { return im_ == 0; }
  bool is_imaginary() const { return re_ == 0 && im_ != 0; }

  GaussianRational conjugate() const { return {re_, -im_}; }

  /// Squared modulus |z|^2 = re^2 + im^2, a nonnegative rational.
  mpq_class norm() const { return re_ * re_ + im_ * im_; }

  GaussianRational inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    mpq_class n = norm();
    return {re_ / n, -im_ / n};
  }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re_ + b.re_, a.im_ + b.im_};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re_ - b.re_, a.im_ - b.im_};
  }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re_, -a.im_}; }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
  }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    return a * b.inverse();
  }

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) {
    return !(a == b);
  }

  /// Canonical text form: "0", "3/4", "-2", "i", "-i", "2*i", "3 + 2*i", "3 - 1/2*i".
  std::string str() const {
    if (is_zero()) return "0";
    if (im_ == 0) return re_.get_str();
    std::string imag_part;
    mpq_class ai = abs(im_);
    if (ai == 1) {
      imag_part = "i";
    } else {
      imag_part = ai.get_str() + "*i";
    }
    if (re_ == 0) return (im_ < 0 ? "-" : "") + imag_part;
    return re_.get_str() + (im_ < 0 ? " - " : " + ") + imag_part;
  }

 private:
  mpq_class re_;
  mpq_class im_;
};

inline GaussianRational pow(const GaussianRational& base, long e) {
  if (e == 0) return GaussianRational(1);
  GaussianRational b = e < 0 ? base.inverse() : base;
  unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  GaussianRational acc(1);
  while (n > 0) {
    if (n & 1) acc *= b;
    b *= b;
    n >>= 1;
  }
  return acc;
}

}  // namespace qk
