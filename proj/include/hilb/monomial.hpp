#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace hilb {

/// Hard cap on the number of variables of a polynomial ring.
inline constexpr std::size_t kMaxVars = 16;

/// Exponent vector with inline storage. Unused slots are always zero, so
/// equality and hashing can ignore the arity.
class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;
  explicit Monomial(std::size_t nvars);
  Monomial(std::initializer_list<unsigned> exps);
  explicit Monomial(std::span<const unsigned> exps);

  std::size_t size() const { return nvars_; }
  unsigned operator[](std::size_t i) const { return exps_[i]; }
  void set(std::size_t i, unsigned e);

  unsigned total_degree() const;
  unsigned weighted_degree(std::span<const unsigned> weights) const;
  bool is_one() const;

  /// True when this divides other.
  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Requires divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const;
  Monomial lcm(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.nvars_ == b.nvars_ && a.exps_ == b.exps_;
  }

  std::size_t hash() const;

 private:
  std::array<Exponent, kMaxVars> exps_{};
  std::uint8_t nvars_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Monomial order. Block orders compare the first `block` variables by
/// degrevlex and break ties with degrevlex on the remaining variables, so
/// the leading block is eliminated first.
class TermOrder {
 public:
  enum class Kind { Degrevlex, Lex, WeightedDegrevlex, Block };

  static TermOrder degrevlex() { return TermOrder(Kind::Degrevlex); }
  static TermOrder lex() { return TermOrder(Kind::Lex); }
  static TermOrder weighted_degrevlex(std::vector<unsigned> weights);
  static TermOrder block(std::size_t first_block);

  Kind kind() const { return kind_; }
  std::size_t block_size() const { return block_; }
  const std::vector<unsigned>& weights() const { return weights_; }

  /// Negative, zero or positive as a < b, a == b, a > b.
  int compare(const Monomial& a, const Monomial& b) const;

  friend bool operator==(const TermOrder&, const TermOrder&) = default;

 private:
  explicit TermOrder(Kind kind) : kind_(kind) {}

  Kind kind_;
  std::size_t block_ = 0;
  std::vector<unsigned> weights_;
};

/// Degrevlex comparison restricted to variables [begin, end).
int degrevlex_compare(const Monomial& a, const Monomial& b, std::size_t begin, std::size_t end);

}  // namespace hilb
