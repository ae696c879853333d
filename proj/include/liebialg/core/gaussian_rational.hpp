#pragma once

// Exact scalars a + b i with a, b arbitrary-precision rationals.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace liebialg {

using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline int sign(const Rational& q) { return sgn(q); }

/// Element of Q(i). Both parts are kept canonical (lowest terms, positive
/// denominator) after every operation.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(int re) : re_(re) {}   // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_imaginary() const { return sgn(re_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  /// |z|^2, always a nonnegative rational.
  Rational norm() const { return re_ * re_ + im_ * im_; }

  GaussianRational operator-() const { return {-re_, -im_}; }

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
  GaussianRational& operator*=(const GaussianRational& o) {
    if (o.is_real()) {
      re_ *= o.re_;
      im_ *= o.re_;
      return *this;
    }
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational m = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(m);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o) {
    if (o.is_zero()) throw std::domain_error("GaussianRational: division by zero");
    if (o.is_real()) {
      re_ /= o.re_;
      im_ /= o.re_;
      return *this;
    }
    Rational n = o.norm();
    GaussianRational q = *this * o.conj();
    re_ = q.re_ / n;
    im_ = q.im_ / n;
    return *this;
  }

  /// this += a * b without a temporary GaussianRational when b is real.
  void add_product(const GaussianRational& a, const GaussianRational& b) {
    if (a.is_real() && b.is_real()) {
      re_ += a.re_ * b.re_;
      return;
    }
    *this += a * b;
  }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  /// Lexicographic on (re, im); used only for canonical ordering, not as a field order.
  friend std::strong_ordering operator<=>(const GaussianRational& a, const GaussianRational& b) {
    int c = cmp(a.re_, b.re_);
    if (c == 0) c = cmp(a.im_, b.im_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// "3/2", "-1/4i", "1+2i", "0".
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    if (sgn(re_) != 0) out = re_.get_str();
    if (sgn(im_) != 0) {
      if (!out.empty() && sgn(im_) > 0) out += "+";
      if (im_ == 1) out += "";
      else if (im_ == -1) out += "-";
      else out += im_.get_str();
      out += "i";
    }
    return out;
  }

  /// Inverse of to_string; also accepts plain integers and rationals.
  static GaussianRational parse(std::string_view text) {
    std::string s;
    for (char c : text)
      if (c != ' ') s.push_back(c);
    if (s.empty()) throw std::invalid_argument("GaussianRational: empty string");
    auto parse_q = [](const std::string& part) -> Rational {
      if (part.empty() || part == "+") return Rational(1);
      if (part == "-") return Rational(-1);
      std::string p = part[0] == '+' ? part.substr(1) : part;
      Rational q;
      if (q.set_str(p, 10) != 0) throw std::invalid_argument("GaussianRational: bad number '" + part + "'");
      q.canonicalize();
      return q;
    };
    if (s.back() != 'i') return {parse_q(s), Rational(0)};
    s.pop_back();
    // split at the last sign that is not the leading character
    std::size_t split = std::string::npos;
    for (std::size_t k = s.size(); k-- > 1;) {
      if ((s[k] == '+' || s[k] == '-') && s[k - 1] != '/') {
        split = k;
        break;
      }
    }
    if (split == std::string::npos) return {Rational(0), parse_q(s)};
    return {parse_q(s.substr(0, split)), parse_q(s.substr(split))};
  }

  friend std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.to_string(); }

 private:
  Rational re_{0};
  Rational im_{0};
};

using GR = GaussianRational;

inline const GR& gr_zero() {
  static const GR z;
  return z;
}

}  // namespace liebialg
