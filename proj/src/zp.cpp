#include "sepcat/zp.hpp"

#include "sepcat/errors.hpp"

namespace sepcat {

namespace {

std::int64_t reduce(std::int64_t v, std::uint32_t p) noexcept {
  const auto m = static_cast<std::int64_t>(p);
  v %= m;
  return v < 0 ? v + m : v;
}

std::uint32_t common_modulus(const Zp& a, const Zp& b) {
  if (a.modulus() == 0) return b.modulus();
  if (b.modulus() == 0 || a.modulus() == b.modulus()) return a.modulus();
  throw FieldMismatch("F_" + std::to_string(a.modulus()) + " and F_" + std::to_string(b.modulus()) +
                      " elements combined");
}

}  // namespace

Zp::Zp(std::int64_t n, std::uint32_t p) : value_(reduce(n, p)), p_(p) {}

std::int64_t Zp::residue(std::uint32_t p) const noexcept {
  return p_ != 0 ? value_ : reduce(value_, p);
}

std::int64_t Zp::inverse(std::int64_t a, std::uint32_t p) {
  a = reduce(a, p);
  if (a == 0) throw DivisionByZero("division by zero in F_" + std::to_string(p));
  // extended Euclid on (a, p)
  std::int64_t r0 = p, r1 = a, s0 = 0, s1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::int64_t t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  return reduce(s0, p);
}

Zp& Zp::operator+=(const Zp& o) {
  const std::uint32_t p = common_modulus(*this, o);
  if (p == 0) {
    value_ += o.value_;
  } else {
    value_ = reduce(residue(p) + o.residue(p), p);
    p_ = p;
  }
  return *this;
}

Zp& Zp::operator-=(const Zp& o) {
  const std::uint32_t p = common_modulus(*this, o);
  if (p == 0) {
    value_ -= o.value_;
  } else {
    value_ = reduce(residue(p) - o.residue(p), p);
    p_ = p;
  }
  return *this;
}

Zp& Zp::operator*=(const Zp& o) {
  const std::uint32_t p = common_modulus(*this, o);
  if (p == 0) {
    value_ *= o.value_;
  } else {
    value_ = reduce(residue(p) * o.residue(p), p);
    p_ = p;
  }
  return *this;
}

Zp& Zp::operator/=(const Zp& o) {
  const std::uint32_t p = common_modulus(*this, o);
  if (p == 0) {
    // Two unbound literals: only exact division by a unit is meaningful.
    if (o.value_ == 1 || o.value_ == -1) {
      value_ *= o.value_;
      return *this;
    }
    throw FieldMismatch("division of unbound F_p literals");
  }
  value_ = reduce(residue(p) * inverse(o.residue(p), p), p);
  p_ = p;
  return *this;
}

Zp operator-(const Zp& a) {
  if (a.p_ == 0) return Zp(-a.value_);
  return Zp(-a.value_, a.p_);
}

bool operator==(const Zp& a, const Zp& b) {
  const std::uint32_t p = common_modulus(a, b);
  if (p == 0) return a.value_ == b.value_;
  return a.residue(p) == b.residue(p);
}

}  // namespace sepcat
