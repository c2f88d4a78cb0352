#include "sepcat/field.hpp"

#include <charconv>

#include "sepcat/errors.hpp"

namespace sepcat {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime_field(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31)) {
    throw InvalidInput("prime field modulus " + std::to_string(p) + " is too large (limit 2^31)");
  }
  if (!is_prime(p)) {
    throw InvalidInput(std::to_string(p) + " is not prime");
  }
  return FieldSpec(static_cast<std::uint32_t>(p));
}

std::string FieldSpec::to_string() const {
  if (is_rationals()) return "Q";
  return "Fp:" + std::to_string(p_);
}

FieldSpec parse_field_flag(std::string_view text) {
  if (text == "Q" || text == "QQ") return FieldSpec::rationals();
  std::string_view digits;
  if (text.starts_with("Fp:")) {
    digits = text.substr(3);
  } else if (text.starts_with("F")) {
    digits = text.substr(1);
  } else {
    throw InvalidInput("unknown field '" + std::string(text) + "' (expected Q or Fp:P)");
  }
  std::uint64_t p = 0;
  auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
  if (ec != std::errc{} || end != digits.data() + digits.size() || digits.empty()) {
    throw InvalidInput("unknown field '" + std::string(text) + "' (expected Q or Fp:P)");
  }
  return FieldSpec::prime_field(p);
}

}  // namespace sepcat
