#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace unitary {

// Exact field element: a Gaussian rational re + im*i with arbitrary
// precision rational parts. Plain rationals are the im == 0 subset.
// Always kept in canonical reduced form, so equality is decidable.
class Coeff {
 public:
  Coeff() : re_(0), im_(0) {}
  Coeff(long n) : re_(n), im_(0) {}  // NOLINT: implicit by design
  explicit Coeff(mpq_class re) : re_(std::move(re)) { canonicalize(); }
  Coeff(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
    canonicalize();
  }

  static Coeff rational(long num, long den);

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }
  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }

  Coeff operator-() const { return Coeff(-re_, -im_); }
  Coeff& operator+=(const Coeff& o);
  Coeff& operator-=(const Coeff& o);
  Coeff& operator*=(const Coeff& o);
  Coeff& operator/=(const Coeff& o);  // throws std::domain_error on /0

  friend Coeff operator+(Coeff a, const Coeff& b) { return a += b; }
  friend Coeff operator-(Coeff a, const Coeff& b) { return a -= b; }
  friend Coeff operator*(Coeff a, const Coeff& b) { return a *= b; }
  friend Coeff operator/(Coeff a, const Coeff& b) { return a /= b; }
  friend bool operator==(const Coeff& a, const Coeff& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  Coeff inverse() const;

  // Text form: `p/q` when real, `p/q+r/si` otherwise (the imaginary
  // part carries its own sign, e.g. `1/2+-3/4i`).
  std::string str() const;
  static Coeff parse(std::string_view text);

 private:
  void canonicalize() {
    re_.canonicalize();
    im_.canonicalize();
  }

  mpq_class re_;
  mpq_class im_;
};

std::ostream& operator<<(std::ostream& os, const Coeff& c);

}  // namespace unitary
