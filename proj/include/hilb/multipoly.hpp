#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hilb/coefficient.hpp"
#include "hilb/monomial.hpp"

namespace hilb {

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

/// k[v_1..v_r] with a coefficient field, a term order and a per-variable
/// positive weight (all 1 unless given). Immutable; shared by pointer.
class PolyRing {
 public:
  static RingPtr make(std::vector<std::string> vars, Domain domain = Domain::rationals(),
                      TermOrder order = TermOrder::degrevlex(), std::vector<unsigned> weights = {});

  const std::vector<std::string>& vars() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  Domain domain() const { return domain_; }
  const TermOrder& order() const { return order_; }
  std::span<const unsigned> weights() const { return weights_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  RingPtr with_order(TermOrder order) const;
  RingPtr with_domain(Domain domain) const;

  friend bool operator==(const PolyRing& a, const PolyRing& b) {
    return a.vars_ == b.vars_ && a.domain_ == b.domain_ && a.order_ == b.order_ && a.weights_ == b.weights_;
  }

  std::string describe() const;

 private:
  PolyRing() = default;

  std::vector<std::string> vars_;
  Domain domain_;
  TermOrder order_ = TermOrder::degrevlex();
  std::vector<unsigned> weights_;
};

/// Rings are compatible when they are the same object or structurally equal.
bool same_ring(const RingPtr& a, const RingPtr& b);

struct Term {
  Monomial mono;
  Coeff coeff;
};

/// Sparse multivariate polynomial. Terms are kept sorted ascending in the
/// ring's term order with no zero coefficients, so the leading term is last.
class MultiPoly {
 public:
  explicit MultiPoly(RingPtr ring);

  static MultiPoly constant(RingPtr ring, const Coeff& c);
  static MultiPoly constant(RingPtr ring, std::int64_t c);
  static MultiPoly variable(RingPtr ring, std::size_t index);
  static MultiPoly variable(RingPtr ring, std::string_view name);
  static MultiPoly monomial(RingPtr ring, const Monomial& m, const Coeff& c);
  /// Canonicalizes: sorts, merges equal monomials, drops zeros.
  static MultiPoly from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Requires a nonzero polynomial.
  const Term& lead() const { return terms_.back(); }
  Coeff coefficient(const Monomial& m) const;
  /// Constant term (zero when absent).
  Coeff constant_term() const;

  unsigned total_degree() const;
  unsigned weighted_degree() const;
  bool is_weighted_homogeneous() const;
  unsigned degree_in(std::size_t var) const;

  MultiPoly operator-() const;
  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly& operator+=(const MultiPoly& b) { return *this = *this + b; }
  MultiPoly& operator-=(const MultiPoly& b) { return *this = *this - b; }
  MultiPoly& operator*=(const MultiPoly& b) { return *this = *this * b; }

  MultiPoly scaled(const Coeff& c) const;
  /// this * c * m; order-preserving, so no re-sort is needed.
  MultiPoly mul_term(const Monomial& m, const Coeff& c) const;
  MultiPoly pow(unsigned e) const;
  /// Scales so that the leading coefficient is 1.
  MultiPoly monic() const;
  /// Removes the leading term in place (requires a nonzero polynomial).
  void drop_lead() { terms_.pop_back(); }

  /// Keeps the terms satisfying pred (order is preserved).
  MultiPoly filtered(const std::function<bool(const Term&)>& pred) const;
  /// Coefficients of var^0, var^1, ... as polynomials free of var.
  std::vector<MultiPoly> coefficients_in(std::size_t var) const;

  /// Re-expresses this polynomial in another ring, matching variables by
  /// name and mapping coefficients into the target domain. Throws
  /// RingMismatch if a variable that occurs is absent from the target.
  MultiPoly in_ring(const RingPtr& target) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

 private:
  MultiPoly(RingPtr ring, std::vector<Term> sorted_terms);
  void check_compatible(const MultiPoly& other, const char* op) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Variable name -> image. Images must all live in `target`.
using PolyImages = std::map<std::string, MultiPoly, std::less<>>;

/// Ring homomorphism determined by variable images; coefficients are mapped
/// into the target domain. Throws PreconditionViolation when a variable that
/// occurs in f has no image.
MultiPoly apply_hom(const MultiPoly& f, const PolyImages& images, const RingPtr& target);

}  // namespace hilb
