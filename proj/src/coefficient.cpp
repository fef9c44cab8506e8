#include "hilb/coefficient.hpp"

#include <stdexcept>

#include "hilb/errors.hpp"

namespace hilb {
namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t q = 2; q * q <= p; ++q) {
    if (p % q == 0) return false;
  }
  return true;
}

std::uint32_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint32_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp != 0) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return std::uint32_t(result);
}

std::uint32_t reduce_mpz(const mpz_class& z, std::uint32_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
  return std::uint32_t(r.get_ui());
}

const ModP& as_modp(const std::variant<Rational, ModP>& v) { return std::get<ModP>(v); }

[[noreturn]] void mismatch(const Coeff& a, const Coeff& b) {
  throw RingMismatch("coefficient domains differ: " + a.domain().to_string() + " vs " +
                     b.domain().to_string());
}

}  // namespace

Domain Domain::prime_field(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p)) {
    throw std::invalid_argument("F_p needs a prime p < 2^31, got " + std::to_string(p));
  }
  return Domain(p);
}

Domain Domain::parse(const std::string& text) {
  if (text == "Q" || text == "QQ") return rationals();
  std::string digits;
  if (text.rfind("Fp:", 0) == 0) {
    digits = text.substr(3);
  } else if (text.size() > 1 && text[0] == 'F') {
    digits = text.substr(1);
  } else {
    throw std::invalid_argument("unknown field '" + text + "' (expected Q, Fp:<p> or F<p>)");
  }
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 10) {
    throw std::invalid_argument("unknown field '" + text + "'");
  }
  return prime_field(std::uint32_t(std::stoull(digits)));
}

std::string Domain::to_string() const { return p_ == 0 ? "Q" : "F" + std::to_string(p_); }

Coeff Coeff::from_int(std::int64_t value, Domain domain) {
  if (domain.is_rational()) return Coeff(Rational(value));
  std::int64_t p = domain.characteristic();
  std::int64_t r = value % p;
  if (r < 0) r += p;
  return Coeff(ModP{std::uint32_t(r), domain.characteristic()});
}

Coeff Coeff::from_rational(const Rational& value, Domain domain) {
  if (domain.is_rational()) return Coeff(value);
  std::uint32_t p = domain.characteristic();
  std::uint32_t num = reduce_mpz(value.numerator(), p);
  std::uint32_t den = reduce_mpz(value.denominator(), p);
  if (den == 0) {
    throw std::domain_error(value.to_string() + " has no image in " + domain.to_string());
  }
  std::uint64_t inv = pow_mod(den, p - 2, p);
  return Coeff(ModP{std::uint32_t(num * inv % p), p});
}

Domain Coeff::domain() const {
  if (std::holds_alternative<Rational>(value_)) return Domain::rationals();
  return Domain(as_modp(value_).p);
}

bool Coeff::is_zero() const {
  if (auto r = std::get_if<Rational>(&value_)) return r->is_zero();
  return as_modp(value_).value == 0;
}

bool Coeff::is_one() const {
  if (auto r = std::get_if<Rational>(&value_)) return r->is_one();
  return as_modp(value_).value == 1;
}

Rational Coeff::to_rational() const {
  if (auto r = std::get_if<Rational>(&value_)) return *r;
  return Rational(std::int64_t(as_modp(value_).value));
}

bool Coeff::prints_negative() const {
  if (auto r = std::get_if<Rational>(&value_)) return r->sign() < 0;
  const ModP& m = as_modp(value_);
  return m.value > m.p / 2;
}

Coeff Coeff::operator-() const {
  if (auto r = std::get_if<Rational>(&value_)) return Coeff(-*r);
  const ModP& m = as_modp(value_);
  return Coeff(ModP{m.value == 0 ? 0 : m.p - m.value, m.p});
}

Coeff Coeff::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero coefficient");
  if (auto r = std::get_if<Rational>(&value_)) return Coeff(r->inverse());
  const ModP& m = as_modp(value_);
  return Coeff(ModP{pow_mod(m.value, m.p - 2, m.p), m.p});
}

Coeff operator+(const Coeff& a, const Coeff& b) {
  auto ra = std::get_if<Rational>(&a.value_);
  auto rb = std::get_if<Rational>(&b.value_);
  if (ra && rb) return Coeff(*ra + *rb);
  auto px = std::get_if<ModP>(&a.value_);
  auto py = std::get_if<ModP>(&b.value_);
  if (!px || !py || px->p != py->p) mismatch(a, b);
  const ModP& x = *px;
  const ModP& y = *py;
  std::uint64_t s = std::uint64_t(x.value) + y.value;
  return Coeff(ModP{std::uint32_t(s >= x.p ? s - x.p : s), x.p});
}

Coeff operator-(const Coeff& a, const Coeff& b) { return a + (-b); }

Coeff operator*(const Coeff& a, const Coeff& b) {
  auto ra = std::get_if<Rational>(&a.value_);
  auto rb = std::get_if<Rational>(&b.value_);
  if (ra && rb) return Coeff(*ra * *rb);
  auto px = std::get_if<ModP>(&a.value_);
  auto py = std::get_if<ModP>(&b.value_);
  if (!px || !py || px->p != py->p) mismatch(a, b);
  const ModP& x = *px;
  const ModP& y = *py;
  return Coeff(ModP{std::uint32_t(std::uint64_t(x.value) * y.value % x.p), x.p});
}

Coeff operator/(const Coeff& a, const Coeff& b) {
  if (!(a.domain() == b.domain())) mismatch(a, b);
  return a * b.inverse();
}

std::string Coeff::to_string() const {
  if (auto r = std::get_if<Rational>(&value_)) return r->to_string();
  const ModP& m = as_modp(value_);
  if (prints_negative()) return "-" + std::to_string(m.p - m.value);
  return std::to_string(m.value);
}

}  // namespace hilb
