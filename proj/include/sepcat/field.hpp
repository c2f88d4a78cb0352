#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace sepcat {

/// The base field: the rationals or a prime field F_p.
///
/// Prime fields are limited to p < 2^31 so that products of residues fit in
/// 64-bit integers. Primality is checked by trial division.
class FieldSpec {
 public:
  FieldSpec() = default;

  static FieldSpec rationals() noexcept { return FieldSpec{}; }
  static FieldSpec prime_field(std::uint64_t p);

  bool is_rationals() const noexcept { return p_ == 0; }
  /// 0 for the rationals.
  std::uint32_t characteristic() const noexcept { return p_; }

  /// "Q" or "Fp:<p>", the form accepted by parse_field_flag.
  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  explicit FieldSpec(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

/// Parses "Q" or "Fp:P" (also "F<P>", e.g. "F5").
FieldSpec parse_field_flag(std::string_view text);

bool is_prime(std::uint64_t n) noexcept;

}  // namespace sepcat
