#pragma once

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace qlogic {

using Rational = mpq_class;

/// Exact element of the Gaussian rationals Q(i).
///
/// Both parts are kept in GMP canonical form (reduced, positive denominator),
/// so structural equality coincides with numeric equality.
class ComplexRational {
 public:
  ComplexRational() = default;
  ComplexRational(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  ComplexRational(Rational re, Rational im = 0) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static ComplexRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }

  ComplexRational conj() const { return {re_, -im_}; }
  Rational norm_squared() const { return re_ * re_ + im_ * im_; }

  ComplexRational operator-() const { return {-re_, -im_}; }

  ComplexRational& operator+=(const ComplexRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  ComplexRational& operator-=(const ComplexRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  ComplexRational& operator*=(const ComplexRational& o) {
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
  }
  ComplexRational& operator/=(const ComplexRational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    Rational n = o.norm_squared();
    Rational re = (re_ * o.re_ + im_ * o.im_) / n;
    Rational im = (im_ * o.re_ - re_ * o.im_) / n;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
  }

  friend ComplexRational operator+(ComplexRational a, const ComplexRational& b) { return a += b; }
  friend ComplexRational operator-(ComplexRational a, const ComplexRational& b) { return a -= b; }
  friend ComplexRational operator*(ComplexRational a, const ComplexRational& b) { return a *= b; }
  friend ComplexRational operator/(ComplexRational a, const ComplexRational& b) { return a /= b; }

  friend bool operator==(const ComplexRational& a, const ComplexRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Lexicographic (re, im). Only used to order canonical forms deterministically.
  friend std::strong_ordering operator<=>(const ComplexRational& a, const ComplexRational& b) {
    int c = cmp(a.re_, b.re_);
    if (c == 0) c = cmp(a.im_, b.im_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// Literal form `re_n/re_d[+|-]im_n/im_d i`; the imaginary part is omitted when zero.
  std::string to_string() const {
    std::string out = fraction(re_);
    if (sgn(im_) != 0) {
      out += sgn(im_) < 0 ? "-" : "+";
      out += fraction(abs(im_));
      out += "i";
    }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const ComplexRational& z) {
    return os << z.to_string();
  }

 private:
  static std::string fraction(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
  }

  Rational re_{0};
  Rational im_{0};
};

}  // namespace qlogic
