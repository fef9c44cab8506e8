#include "hilb/rational.hpp"

#include <cctype>
#include <limits>
#include <stdexcept>

#include "hilb/errors.hpp"

namespace hilb {
namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

u128 abs128(i128 v) { return v < 0 ? u128(0) - u128(v) : u128(v); }

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits_small(i128 v) { return v >= -i128(kMax) && v <= i128(kMax); }

mpz_class mpz_from_u128(u128 v) {
  mpz_class out;
  std::uint64_t limbs[2] = {std::uint64_t(v), std::uint64_t(v >> 64)};
  mpz_import(out.get_mpz_t(), 2, -1, sizeof(std::uint64_t), 0, 0, limbs);
  return out;
}

mpz_class mpz_from_i128(i128 v) {
  mpz_class out = mpz_from_u128(abs128(v));
  if (v < 0) out = -out;
  return out;
}

bool mpz_fits_small(const mpz_class& z) {
  return mpz_fits_slong_p(z.get_mpz_t()) != 0 && z != std::numeric_limits<long>::min();
}

}  // namespace

Rational::Rational(std::int64_t value) {
  if (value == std::numeric_limits<std::int64_t>::min()) {
    *this = normalized(mpq_class(mpz_from_i128(value)));
  } else {
    num_ = value;
  }
}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  *this = from_i128(num, den);
}

Rational::Rational(const mpq_class& value) { *this = normalized(value); }

Rational Rational::from_i128(i128 num, i128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  u128 g = gcd128(abs128(num), u128(den));
  if (g > 1) {
    num /= i128(g);
    den /= i128(g);
  }
  Rational out;
  if (fits_small(num) && den <= i128(kMax)) {
    out.num_ = std::int64_t(num);
    out.den_ = std::int64_t(den);
    return out;
  }
  mpq_class q(mpz_from_i128(num), mpz_from_i128(den));
  out.big_ = std::make_shared<const mpq_class>(std::move(q));
  return out;
}

Rational Rational::normalized(mpq_class value) {
  value.canonicalize();
  Rational out;
  if (mpz_fits_small(value.get_num()) && mpz_fits_small(value.get_den())) {
    out.num_ = value.get_num().get_si();
    out.den_ = value.get_den().get_si();
    return out;
  }
  out.big_ = std::make_shared<const mpq_class>(std::move(value));
  return out;
}

Rational Rational::from_string(std::string_view text) {
  auto slash = text.find('/');
  std::string num_text(text.substr(0, slash));
  std::string den_text = slash == std::string_view::npos ? "1" : std::string(text.substr(slash + 1));
  auto valid = [](const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
  };
  if (!valid(num_text) || !valid(den_text)) {
    throw std::invalid_argument("invalid rational literal '" + std::string(text) + "'");
  }
  if (num_text[0] == '+') num_text.erase(0, 1);
  if (den_text[0] == '+') den_text.erase(0, 1);
  mpz_class num(num_text, 10);
  mpz_class den(den_text, 10);
  if (den == 0) throw std::domain_error("rational with zero denominator");
  return normalized(mpq_class(num, den));
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0);
}

mpz_class Rational::numerator() const { return big_ ? mpz_class(big_->get_num()) : mpz_class(long(num_)); }

mpz_class Rational::denominator() const { return big_ ? mpz_class(big_->get_den()) : mpz_class(long(den_)); }

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(long(num_)), mpz_class(long(den_)));
}

Rational Rational::operator-() const {
  if (big_) return normalized(-*big_);
  Rational out;
  out.num_ = -num_;
  out.den_ = den_;
  return out;
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (big_) return normalized(1 / *big_);
  return from_i128(den_, num_);
}

Rational operator+(const Rational& a, const Rational& b) {
  if (a.big_ || b.big_) return Rational::normalized(a.to_mpq() + b.to_mpq());
  if (a.den_ == 1 && b.den_ == 1) {
    std::int64_t sum;
    if (!__builtin_add_overflow(a.num_, b.num_, &sum) && sum != std::numeric_limits<std::int64_t>::min()) {
      Rational out;
      out.num_ = sum;
      return out;
    }
  }
  return Rational::from_i128(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  if (a.big_ || b.big_) return Rational::normalized(a.to_mpq() * b.to_mpq());
  if (a.den_ == 1 && b.den_ == 1) {
    std::int64_t prod;
    if (!__builtin_mul_overflow(a.num_, b.num_, &prod) && prod != std::numeric_limits<std::int64_t>::min()) {
      Rational out;
      out.num_ = prod;
      return out;
    }
  }
  return Rational::from_i128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }

bool operator==(const Rational& a, const Rational& b) {
  // Canonical forms: a promoted value never fits the inline range.
  if (a.big_ || b.big_) {
    if (!a.big_ || !b.big_) return false;
    return *a.big_ == *b.big_;
  }
  return a.num_ == b.num_ && a.den_ == b.den_;
}

bool operator<(const Rational& a, const Rational& b) {
  if (a.big_ || b.big_) return a.to_mpq() < b.to_mpq();
  return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
}

std::string Rational::to_string() const {
  if (big_) return big_->get_str(10);
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace hilb
