#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hilb/errors.hpp"

namespace hilb {

/// Element of a commutative ring that knows its own ring, so zero and one
/// can be produced from any element (Coeff, QuotElem).
template <class E>
concept RingElement = std::copyable<E> && requires(const E& a, const E& b) {
  { a + b } -> std::convertible_to<E>;
  { a - b } -> std::convertible_to<E>;
  { a * b } -> std::convertible_to<E>;
  { -a } -> std::convertible_to<E>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.zero() } -> std::convertible_to<E>;
  { a.one() } -> std::convertible_to<E>;
  { a == b } -> std::convertible_to<bool>;
};

/// Dense univariate polynomial c_0 + c_1 x + ... over a ring element type.
/// Trailing zeros are trimmed; the zero polynomial keeps a prototype element
/// so it still knows its coefficient ring.
template <RingElement E>
class UniPoly {
 public:
  explicit UniPoly(E prototype) : zero_(prototype.zero()) {}
  UniPoly(E prototype, std::vector<E> coeffs) : zero_(prototype.zero()), coeffs_(std::move(coeffs)) { trim(); }

  static UniPoly x_power(const E& prototype, std::size_t n) {
    std::vector<E> c(n + 1, prototype.zero());
    c[n] = prototype.one();
    return UniPoly(prototype, std::move(c));
  }

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const { return long(coeffs_.size()) - 1; }
  const std::vector<E>& coeffs() const { return coeffs_; }
  const E& zero_element() const { return zero_; }
  E coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : zero_; }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<E> c(std::max(a.coeffs_.size(), b.coeffs_.size()), a.zero_);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] = a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] = c[i] + b.coeffs_[i];
    return UniPoly(a.zero_, std::move(c));
  }

  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    std::vector<E> c(std::max(a.coeffs_.size(), b.coeffs_.size()), a.zero_);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] = a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] = c[i] - b.coeffs_[i];
    return UniPoly(a.zero_, std::move(c));
  }

  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly(a.zero_);
    std::vector<E> c(a.coeffs_.size() + b.coeffs_.size() - 1, a.zero_);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        if (b.coeffs_[j].is_zero()) continue;
        c[i + j] = c[i + j] + a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return UniPoly(a.zero_, std::move(c));
  }

  /// Multiplication by x^k.
  UniPoly shifted(std::size_t k) const {
    if (is_zero()) return *this;
    std::vector<E> c(k, zero_);
    c.insert(c.end(), coeffs_.begin(), coeffs_.end());
    return UniPoly(zero_, std::move(c));
  }

  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    if (a.coeffs_.size() != b.coeffs_.size()) return false;
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (!(a.coeffs_[i] == b.coeffs_[i])) return false;
    }
    return true;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  E zero_;
  std::vector<E> coeffs_;
};

/// Monic polynomial x^n - u_1 x^{n-1} + ... + (-1)^n u_n, stored by the
/// signed coefficients u_1..u_n. Plain coefficients are derived on expand().
template <RingElement E>
class MonicPoly {
 public:
  /// u = (u_1, ..., u_n), n >= 1.
  explicit MonicPoly(std::vector<E> u) : u_(std::move(u)) {
    if (u_.empty()) throw PreconditionViolation("monic polynomial needs degree n >= 1");
  }

  std::size_t degree() const { return u_.size(); }
  /// u_i for i = 1..n.
  const E& u(std::size_t i) const { return u_.at(i - 1); }
  const std::vector<E>& us() const { return u_; }

  UniPoly<E> expand() const {
    const std::size_t n = u_.size();
    std::vector<E> c(n + 1, u_[0].zero());
    c[n] = u_[0].one();
    for (std::size_t i = 1; i <= n; ++i) c[n - i] = (i % 2 == 0) ? u_[i - 1] : -u_[i - 1];
    return UniPoly<E>(u_[0], std::move(c));
  }

  /// Inverse of expand(); the input must be monic of degree >= 1.
  static MonicPoly extract(const UniPoly<E>& f) {
    if (f.degree() < 1) throw PreconditionViolation("monic polynomial needs degree n >= 1");
    const std::size_t n = std::size_t(f.degree());
    if (!(f.coeffs()[n] == f.coeffs()[n].one())) throw PreconditionViolation("polynomial is not monic");
    std::vector<E> u;
    u.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) {
      const E& c = f.coeffs()[n - i];
      u.push_back((i % 2 == 0) ? c : -c);
    }
    return MonicPoly(std::move(u));
  }

  friend bool operator==(const MonicPoly& a, const MonicPoly& b) {
    if (a.u_.size() != b.u_.size()) return false;
    for (std::size_t i = 0; i < a.u_.size(); ++i) {
      if (!(a.u_[i] == b.u_[i])) return false;
    }
    return true;
  }

 private:
  std::vector<E> u_;
};

template <RingElement E>
struct DivMod {
  UniPoly<E> quotient;
  UniPoly<E> remainder;
};

/// Long division by a monic polynomial; valid over any commutative ring.
/// Guarantees dividend = quotient * divisor + remainder and
/// deg(remainder) < deg(divisor).
template <RingElement E>
DivMod<E> monic_divmod(const UniPoly<E>& dividend, const MonicPoly<E>& divisor) {
  const std::size_t n = divisor.degree();
  const E zero = dividend.zero_element();
  // lower coefficients of the divisor: x^n = -(c_{n-1} x^{n-1} + ... + c_0) mod divisor
  std::vector<E> low = divisor.expand().coeffs();
  low.pop_back();
  std::vector<E> rem = dividend.coeffs();
  if (rem.size() <= n) return {UniPoly<E>(zero), dividend};
  std::vector<E> quot(rem.size() - n, zero);
  for (std::size_t k = rem.size(); k-- > n;) {
    E lead = rem[k];
    if (lead.is_zero()) continue;
    quot[k - n] = lead;
    rem[k] = zero;
    for (std::size_t i = 0; i < n; ++i) {
      if (!low[i].is_zero()) rem[k - n + i] = rem[k - n + i] - lead * low[i];
    }
  }
  rem.resize(n, zero);
  return {UniPoly<E>(zero, std::move(quot)), UniPoly<E>(zero, std::move(rem))};
}

/// Remainder of x^N modulo a monic polynomial, computed by repeated
/// multiplication by x (O(N n) ring operations, no size-N intermediates).
template <RingElement E>
UniPoly<E> x_power_mod(std::size_t N, const MonicPoly<E>& divisor) {
  const std::size_t n = divisor.degree();
  const E zero = divisor.u(1).zero();
  std::vector<E> low = divisor.expand().coeffs();
  low.pop_back();
  std::vector<E> r(n, zero);
  if (N < n) {
    r[N] = zero.one();
    return UniPoly<E>(zero, std::move(r));
  }
  r[n - 1] = zero.one();  // x^{n-1}
  for (std::size_t k = n - 1; k < N; ++k) {
    E top = r[n - 1];
    for (std::size_t i = n - 1; i > 0; --i) r[i] = r[i - 1];
    r[0] = zero;
    if (!top.is_zero()) {
      for (std::size_t i = 0; i < n; ++i) r[i] = r[i] - top * low[i];
    }
  }
  return UniPoly<E>(zero, std::move(r));
}

}  // namespace hilb
