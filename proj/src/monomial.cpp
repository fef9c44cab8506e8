#include "hilb/monomial.hpp"

#include <limits>
#include <stdexcept>
#include <string>

#include "hilb/errors.hpp"

namespace hilb {
namespace {

Monomial::Exponent checked(unsigned e) {
  if (e > std::numeric_limits<Monomial::Exponent>::max()) {
    throw std::overflow_error("exponent " + std::to_string(e) + " exceeds the supported range");
  }
  return Monomial::Exponent(e);
}

}  // namespace

Monomial::Monomial(std::size_t nvars) {
  if (nvars > kMaxVars) {
    throw Unsupported("at most " + std::to_string(kMaxVars) + " variables are supported");
  }
  nvars_ = std::uint8_t(nvars);
}

Monomial::Monomial(std::initializer_list<unsigned> exps)
    : Monomial(std::span<const unsigned>(exps.begin(), exps.size())) {}

Monomial::Monomial(std::span<const unsigned> exps) : Monomial(exps.size()) {
  for (std::size_t i = 0; i < exps.size(); ++i) exps_[i] = checked(exps[i]);
}

void Monomial::set(std::size_t i, unsigned e) { exps_[i] = checked(e); }

unsigned Monomial::total_degree() const {
  unsigned d = 0;
  for (std::size_t i = 0; i < nvars_; ++i) d += exps_[i];
  return d;
}

unsigned Monomial::weighted_degree(std::span<const unsigned> weights) const {
  if (weights.empty()) return total_degree();
  unsigned d = 0;
  for (std::size_t i = 0; i < nvars_; ++i) d += weights[i] * exps_[i];
  return d;
}

bool Monomial::is_one() const {
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (exps_[i] != 0) return false;
  }
  return true;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out = *this;
  for (std::size_t i = 0; i < nvars_; ++i) out.exps_[i] = checked(unsigned(exps_[i]) + other.exps_[i]);
  return out;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial out = *this;
  for (std::size_t i = 0; i < nvars_; ++i) out.exps_[i] = Exponent(exps_[i] - divisor.exps_[i]);
  return out;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial out = *this;
  for (std::size_t i = 0; i < nvars_; ++i) out.exps_[i] = std::max(exps_[i], other.exps_[i]);
  return out;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  }
  return true;
}

std::size_t Monomial::hash() const {
  std::uint64_t h = 1469598103934665603ull;
  for (std::size_t i = 0; i < nvars_; ++i) {
    h ^= exps_[i];
    h *= 1099511628211ull;
  }
  return std::size_t(h);
}

TermOrder TermOrder::weighted_degrevlex(std::vector<unsigned> weights) {
  TermOrder order(Kind::WeightedDegrevlex);
  order.weights_ = std::move(weights);
  return order;
}

TermOrder TermOrder::block(std::size_t first_block) {
  TermOrder order(Kind::Block);
  order.block_ = first_block;
  return order;
}

int degrevlex_compare(const Monomial& a, const Monomial& b, std::size_t begin, std::size_t end) {
  unsigned da = 0;
  unsigned db = 0;
  for (std::size_t i = begin; i < end; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = end; i-- > begin;) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

int TermOrder::compare(const Monomial& a, const Monomial& b) const {
  const std::size_t n = a.size();
  switch (kind_) {
    case Kind::Degrevlex:
      return degrevlex_compare(a, b, 0, n);
    case Kind::Lex:
      for (std::size_t i = 0; i < n; ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
      }
      return 0;
    case Kind::WeightedDegrevlex: {
      unsigned wa = a.weighted_degree(weights_);
      unsigned wb = b.weighted_degree(weights_);
      if (wa != wb) return wa < wb ? -1 : 1;
      for (std::size_t i = n; i-- > 0;) {
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
      }
      return 0;
    }
    case Kind::Block: {
      std::size_t split = std::min(block_, n);
      if (int c = degrevlex_compare(a, b, 0, split); c != 0) return c;
      return degrevlex_compare(a, b, split, n);
    }
  }
  return 0;
}

}  // namespace hilb
