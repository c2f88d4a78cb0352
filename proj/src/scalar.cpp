#include "sepcat/scalar.hpp"

#include "sepcat/errors.hpp"

namespace sepcat {

template <>
Rational parse_scalar<Rational>(std::string_view text, const FieldSpec& field) {
  if (!field.is_rationals()) throw FieldMismatch("rational scalar requested over " + field.to_string());
  return Rational::parse(text);
}

template <>
Zp parse_scalar<Zp>(std::string_view text, const FieldSpec& field) {
  if (field.is_rationals()) throw FieldMismatch("F_p scalar requested over Q");
  const Rational q = Rational::parse(text);
  const std::uint32_t p = field.characteristic();
  const mpz_class pz(static_cast<unsigned long>(p));
  mpz_class num = q.get().get_num() % pz;
  mpz_class den = q.get().get_den() % pz;
  if (den == 0) throw DivisionByZero("scalar '" + std::string(text) + "' has a denominator divisible by " +
                                     std::to_string(p));
  const Zp n(static_cast<std::int64_t>(num.get_si()), p);
  const Zp d(static_cast<std::int64_t>(den.get_si()), p);
  return n / d;
}

std::string format_scalar(const Rational& r, const FieldSpec&) { return r.to_string(); }

std::string format_scalar(const Zp& z, const FieldSpec& field) {
  if (field.is_rationals()) throw FieldMismatch("F_p scalar formatted over Q");
  if (z.is_bound() && z.modulus() != field.characteristic()) {
    throw FieldMismatch("F_" + std::to_string(z.modulus()) + " scalar formatted over " + field.to_string());
  }
  return std::to_string(z.residue(field.characteristic()));
}

}  // namespace sepcat
