#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hilb/multipoly.hpp"

namespace hilb {

struct GroebnerOptions {
  /// Maximum number of reduction steps plus processed pairs.
  std::size_t budget = 1'000'000;
};

/// Counts work against a GroebnerOptions budget; throws BudgetExceeded.
class StepBudget {
 public:
  explicit StepBudget(std::size_t limit) : remaining_(limit) {}
  void spend(std::size_t steps = 1);
  std::size_t remaining() const { return remaining_; }

 private:
  std::size_t remaining_;
};

/// Fully reduces f (leading and tail terms) by `basis`, whose elements must
/// be monic. The result has no term divisible by a leading monomial of the
/// basis and f - result lies in the ideal generated by the basis.
MultiPoly reduce(const MultiPoly& f, const std::vector<MultiPoly>& basis, StepBudget& budget);

/// Reduced Groebner basis (monic, sorted by ascending leading monomial) of
/// the ideal generated by gens, in the term order of their common ring.
/// Uses Buchberger's algorithm with the Gebauer-Moeller criteria.
std::vector<MultiPoly> buchberger(const std::vector<MultiPoly>& gens, const GroebnerOptions& options = {});

/// An ideal of a polynomial ring over a field together with its reduced
/// Groebner basis, computed once on construction.
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<MultiPoly> generators, GroebnerOptions options = {});

  const RingPtr& ring() const { return ring_; }
  const std::vector<MultiPoly>& generators() const { return generators_; }
  const std::vector<MultiPoly>& basis() const { return basis_; }
  const GroebnerOptions& options() const { return options_; }

  bool is_unit() const;
  bool contains(const MultiPoly& f) const;
  MultiPoly normal_form(const MultiPoly& f) const;

 private:
  RingPtr ring_;
  std::vector<MultiPoly> generators_;
  std::vector<MultiPoly> basis_;
  GroebnerOptions options_;
};

MultiPoly normal_form(const MultiPoly& f, const Ideal& ideal);

/// True iff J is contained in I, i.e. every generator of J reduces to 0
/// modulo I. Both ideals must share a ring.
bool ideal_contains(const Ideal& I, const Ideal& J);

/// Mutual containment.
bool ideal_equal(const Ideal& I, const Ideal& J);

/// Standard monomials (ascending in the ring order) when the quotient is
/// finite-dimensional; nullopt otherwise. The unit ideal gives an empty list.
std::optional<std::vector<Monomial>> quotient_basis(const Ideal& ideal);

}  // namespace hilb
