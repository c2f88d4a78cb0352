#pragma once

#include <cstdint>
#include <string>

namespace sepcat {

/// Element of a prime field F_p with the modulus carried at runtime.
///
/// A Zp constructed from a plain integer is an unbound integer literal
/// (modulus 0). Literals adopt the modulus of the other operand on first
/// contact, which is how Eigen's Scalar(0) and Scalar(1) blend into matrices
/// over a concrete F_p. Bound elements always hold the least residue in
/// [0, p). Combining two different moduli throws FieldMismatch.
class Zp {
 public:
  Zp() = default;
  Zp(int n) : value_(n) {}
  Zp(long n) : value_(n) {}
  Zp(long long n) : value_(n) {}
  Zp(std::int64_t n, std::uint32_t p);

  std::uint32_t modulus() const noexcept { return p_; }
  bool is_bound() const noexcept { return p_ != 0; }
  /// The least residue (bound) or the literal integer (unbound).
  std::int64_t value() const noexcept { return value_; }
  /// The least residue modulo p, binding a literal if necessary.
  std::int64_t residue(std::uint32_t p) const noexcept;

  bool is_zero() const noexcept { return value_ == 0; }

  Zp& operator+=(const Zp& o);
  Zp& operator-=(const Zp& o);
  Zp& operator*=(const Zp& o);
  Zp& operator/=(const Zp& o);

  friend Zp operator+(Zp a, const Zp& b) { return a += b; }
  friend Zp operator-(Zp a, const Zp& b) { return a -= b; }
  friend Zp operator*(Zp a, const Zp& b) { return a *= b; }
  friend Zp operator/(Zp a, const Zp& b) { return a /= b; }
  friend Zp operator-(const Zp& a);

  friend bool operator==(const Zp& a, const Zp& b);

  /// Modular inverse of a nonzero residue.
  static std::int64_t inverse(std::int64_t a, std::uint32_t p);

 private:
  std::int64_t value_ = 0;
  std::uint32_t p_ = 0;
};

inline bool is_zero(const Zp& z) noexcept { return z.value() == 0; }

}  // namespace sepcat
