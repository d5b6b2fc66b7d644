#pragma once

#include <gmpxx.h>

#include <string>

#include "acx/errors.hpp"

namespace acx {

/// Complex number with exact rational real and imaginary parts.
/// mpq_class keeps every value as a reduced fraction with positive
/// denominator, so representations are canonical and comparisons exact.
struct Scalar {
  mpq_class re;
  mpq_class im;

  Scalar() : re(0), im(0) {}
  Scalar(long r) : re(r), im(0) {}  // NOLINT(google-explicit-constructor)
  Scalar(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {}

  static Scalar zero() { return Scalar(); }
  static Scalar one() { return Scalar(1); }
  static Scalar i() { return Scalar(mpq_class(0), mpq_class(1)); }

  /// Parses "a", "-a/b" style rational text.
  static mpq_class parse_rational(const std::string& s) {
    if (s.empty()) fail(Errc::RationalError, "empty rational");
    mpq_class q;
    if (q.set_str(s, 10) != 0) fail(Errc::RationalError, "malformed rational '" + s + "'");
    if (q.get_den() == 0) fail(Errc::RationalError, "zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
  }
  static Scalar from_strings(const std::string& re_s, const std::string& im_s) {
    return Scalar(parse_rational(re_s), parse_rational(im_s));
  }
  static Scalar rational(long num, long den) {
    if (den == 0) fail(Errc::RationalError, "zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(q, mpq_class(0));
  }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  Scalar conj() const { return Scalar(re, -im); }
  mpq_class norm2() const { return re * re + im * im; }

  Scalar operator-() const { return Scalar(-re, -im); }
  Scalar& operator+=(const Scalar& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Scalar& operator*=(const Scalar& o) {
    mpq_class r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = r;
    return *this;
  }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  Scalar inverse() const {
    if (is_zero()) fail(Errc::RationalError, "division by zero");
    mpq_class n = norm2();
    return Scalar(re / n, -im / n);
  }
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

  std::string str() const {
    std::string r = re.get_str();
    std::string i = im.get_str();
    if (sgn(im) == 0) return r;
    if (sgn(re) == 0) return i + "i";
    return r + (im > 0 ? "+" : "") + i + "i";
  }
};

}  // namespace acx
