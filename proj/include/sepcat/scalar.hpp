#pragma once

#include <Eigen/Core>

#include <concepts>
#include <string>
#include <string_view>
#include <utility>

#include "sepcat/field.hpp"
#include "sepcat/rational.hpp"
#include "sepcat/zp.hpp"

namespace Eigen {

template <>
struct NumTraits<sepcat::Rational> : GenericNumTraits<sepcat::Rational> {
  using Real = sepcat::Rational;
  using NonInteger = sepcat::Rational;
  using Nested = sepcat::Rational;
  using Literal = sepcat::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 5,
    MulCost = 10
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<sepcat::Zp> : GenericNumTraits<sepcat::Zp> {
  using Real = sepcat::Zp;
  using NonInteger = sepcat::Zp;
  using Nested = sepcat::Zp;
  using Literal = sepcat::Zp;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 3
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace sepcat {

/// Scalar types usable as exact field elements.
template <class S>
concept ExactScalar = std::same_as<S, Rational> || std::same_as<S, Zp>;

/// True iff scalars of type S represent elements of `field`.
template <ExactScalar S>
bool scalar_matches(const FieldSpec& field) noexcept {
  if constexpr (std::same_as<S, Rational>) {
    return field.is_rationals();
  } else {
    return !field.is_rationals();
  }
}

/// The integer n as an element of `field`.
template <ExactScalar S>
S make_scalar(long n, const FieldSpec& field) {
  if constexpr (std::same_as<S, Rational>) {
    return Rational(n);
  } else {
    return Zp(n, field.characteristic());
  }
}

/// Parses canonical scalar text: "n" or "n/d". Over F_p, "n/d" means n·d^{-1}.
template <ExactScalar S>
S parse_scalar(std::string_view text, const FieldSpec& field);

/// Canonical text: lowest-terms fraction over Q, least residue over F_p.
std::string format_scalar(const Rational& r, const FieldSpec& field);
std::string format_scalar(const Zp& z, const FieldSpec& field);

/// Calls fn.template operator()<S>() with S the scalar type of `field`.
template <class Fn>
decltype(auto) visit_field(const FieldSpec& field, Fn&& fn) {
  if (field.is_rationals()) return std::forward<Fn>(fn).template operator()<Rational>();
  return std::forward<Fn>(fn).template operator()<Zp>();
}

}  // namespace sepcat
