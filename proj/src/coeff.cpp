#include "unitary/coeff.hpp"

#include <ostream>
#include <stdexcept>

namespace unitary {

Coeff Coeff::rational(long num, long den) {
  if (den == 0) throw std::domain_error("Coeff: zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Coeff(std::move(q));
}

Coeff& Coeff::operator+=(const Coeff& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Coeff& Coeff::operator-=(const Coeff& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Coeff& Coeff::operator*=(const Coeff& o) {
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Coeff& Coeff::operator/=(const Coeff& o) {
  if (o.is_zero()) throw std::domain_error("Coeff: division by zero");
  mpq_class den = o.re_ * o.re_ + o.im_ * o.im_;
  mpq_class re = (re_ * o.re_ + im_ * o.im_) / den;
  mpq_class im = (im_ * o.re_ - re_ * o.im_) / den;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Coeff Coeff::inverse() const { return Coeff(1) / *this; }

namespace {

std::string rat_str(const mpq_class& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

mpq_class parse_rat(std::string_view text) {
  mpq_class q;
  if (q.set_str(std::string(text), 10) != 0 || q.get_den() == 0) {
    throw std::invalid_argument("Coeff: bad rational: " + std::string(text));
  }
  q.canonicalize();
  return q;
}

}  // namespace

std::string Coeff::str() const {
  if (is_real()) return rat_str(re_);
  return rat_str(re_) + "+" + rat_str(im_) + "i";
}

Coeff Coeff::parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("Coeff: empty coefficient");
  if (text.back() == 'i') {
    text.remove_suffix(1);
    // The delimiter is the first '+' past the leading sign position;
    // canonical rationals never contain '+'.
    std::size_t plus = text.find('+', 1);
    if (plus == std::string_view::npos) {
      throw std::invalid_argument("Coeff: bad gaussian coefficient");
    }
    return Coeff(parse_rat(text.substr(0, plus)),
                 parse_rat(text.substr(plus + 1)));
  }
  return Coeff(parse_rat(text));
}

std::ostream& operator<<(std::ostream& os, const Coeff& c) {
  return os << c.str();
}

}  // namespace unitary
