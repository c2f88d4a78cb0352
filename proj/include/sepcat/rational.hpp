#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace sepcat {

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator.
///
/// A thin value wrapper around mpq_class; unlike mpq_class it has no
/// expression templates, so it can be used as an Eigen scalar.
class Rational {
 public:
  Rational() = default;
  Rational(int n) : q_(n) {}
  Rational(long n) : q_(n) {}
  Rational(long num, long den);
  explicit Rational(mpq_class q);

  /// Accepts "n" or "n/d" with optional sign; the result is canonicalized.
  static Rational parse(std::string_view text);

  const mpq_class& get() const noexcept { return q_; }
  bool is_zero() const noexcept { return sgn(q_) == 0; }
  int sign() const noexcept { return sgn(q_); }

  /// "n" when the denominator is 1, otherwise "n/d".
  std::string to_string() const;

  Rational& operator+=(const Rational& o) {
    q_ += o.q_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    q_ -= o.q_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    q_ *= o.q_;
    return *this;
  }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
  friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) < 0; }

 private:
  mpq_class q_;
};

inline bool is_zero(const Rational& r) noexcept { return r.is_zero(); }

}  // namespace sepcat
