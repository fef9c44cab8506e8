#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "hilb/rational.hpp"

namespace hilb {

/// Coefficient field: the rationals (characteristic 0) or a prime field F_p.
class Domain {
 public:
  constexpr Domain() = default;

  static constexpr Domain rationals() { return Domain(); }
  /// Throws std::invalid_argument unless p is a prime below 2^31.
  static Domain prime_field(std::uint32_t p);
  /// Accepts "Q", "Fp:<p>" and the shorthand "F<p>".
  static Domain parse(const std::string& text);

  constexpr bool is_rational() const { return p_ == 0; }
  constexpr std::uint32_t characteristic() const { return p_; }
  std::string to_string() const;

  friend constexpr bool operator==(Domain a, Domain b) { return a.p_ == b.p_; }

 private:
  friend class Coeff;
  constexpr explicit Domain(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

/// Element of F_p, value kept in [0, p).
struct ModP {
  std::uint32_t value = 0;
  std::uint32_t p = 2;

  friend bool operator==(const ModP&, const ModP&) = default;
};

/// Exact scalar: a rational or a prime-field element.
///
/// Mixing domains in one operation raises RingMismatch.
class Coeff {
 public:
  Coeff() = default;  // rational zero

  static Coeff from_int(std::int64_t value, Domain domain = Domain::rationals());
  /// Maps n/d into the domain; over F_p the denominator must be a unit.
  static Coeff from_rational(const Rational& value, Domain domain = Domain::rationals());

  Domain domain() const;
  bool is_zero() const;
  bool is_one() const;
  Coeff zero() const { return from_int(0, domain()); }
  Coeff one() const { return from_int(1, domain()); }

  /// The rational value; for F_p the canonical representative in [0, p).
  Rational to_rational() const;
  /// Sign used for display: F_p values above p/2 print as negatives.
  bool prints_negative() const;

  Coeff operator-() const;
  Coeff inverse() const;
  friend Coeff operator+(const Coeff& a, const Coeff& b);
  friend Coeff operator-(const Coeff& a, const Coeff& b);
  friend Coeff operator*(const Coeff& a, const Coeff& b);
  friend Coeff operator/(const Coeff& a, const Coeff& b);
  Coeff& operator+=(const Coeff& b) { return *this = *this + b; }
  Coeff& operator-=(const Coeff& b) { return *this = *this - b; }
  Coeff& operator*=(const Coeff& b) { return *this = *this * b; }

  friend bool operator==(const Coeff& a, const Coeff& b) { return a.value_ == b.value_; }

  /// Plain text: "3", "-1/2"; F_p values use the symmetric representative.
  std::string to_string() const;

 private:
  explicit Coeff(Rational r) : value_(std::move(r)) {}
  explicit Coeff(ModP m) : value_(m) {}

  std::variant<Rational, ModP> value_;
};

}  // namespace hilb
