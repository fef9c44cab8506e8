#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hilb/groebner.hpp"

namespace hilb {

class QuotientRing;
using QuotientRingPtr = std::shared_ptr<const QuotientRing>;
class QuotElem;

/// k[v_1..v_r]/I with its staircase and local-artinian metadata.
class QuotientRing : public std::enable_shared_from_this<QuotientRing> {
 public:
  static QuotientRingPtr make(Ideal ideal);
  /// The base field k, presented as a quotient of the polynomial ring in
  /// zero variables.
  static QuotientRingPtr field(Domain domain = Domain::rationals());
  /// k[var]/(var^q).
  static QuotientRingPtr truncated(const std::string& var, unsigned q, Domain domain = Domain::rationals());
  /// Convenience: generators given as polynomial text over `vars`.
  static QuotientRingPtr from_text(const std::vector<std::string>& vars, const std::vector<std::string>& generators,
                                   Domain domain = Domain::rationals());

  const RingPtr& ambient() const { return ideal_.ring(); }
  const Ideal& ideal() const { return ideal_; }
  Domain domain() const { return ambient()->domain(); }

  /// Standard monomials, ascending; nullopt when infinite-dimensional.
  const std::optional<std::vector<Monomial>>& staircase() const { return staircase_; }
  /// k-dimension; nullopt when infinite.
  std::optional<std::size_t> dimension() const;
  bool is_finite() const { return staircase_.has_value(); }
  /// Finite, nonzero, the origin is a point and every variable is nilpotent.
  bool is_local() const { return local_; }

  QuotElem element(const MultiPoly& f) const;
  QuotElem element(std::int64_t c) const;
  QuotElem variable(std::size_t index) const;
  QuotElem variable(const std::string& name) const;
  QuotElem zero() const;
  QuotElem one() const;

  std::string describe() const;

 private:
  explicit QuotientRing(Ideal ideal);
  void compute_local_flag();

  Ideal ideal_;
  std::optional<std::vector<Monomial>> staircase_;
  bool local_ = false;
};

/// Element of a QuotientRing, always held in normal form.
class QuotElem {
 public:
  QuotElem(QuotientRingPtr ring, MultiPoly normal_form);

  const QuotientRingPtr& ring() const { return ring_; }
  const MultiPoly& normal_form() const { return nf_; }

  bool is_zero() const { return nf_.is_zero(); }
  QuotElem zero() const;
  QuotElem one() const;
  /// Image under the map to k sending every variable to 0. It is the residue
  /// map when the ring is local.
  Coeff residue() const { return nf_.constant_term(); }

  QuotElem operator-() const;
  friend QuotElem operator+(const QuotElem& a, const QuotElem& b);
  friend QuotElem operator-(const QuotElem& a, const QuotElem& b);
  friend QuotElem operator*(const QuotElem& a, const QuotElem& b);
  QuotElem scaled(const Coeff& c) const;
  QuotElem pow(unsigned e) const;

  friend bool operator==(const QuotElem& a, const QuotElem& b);

  std::string to_string() const;

 private:
  void check(const QuotElem& other) const;

  QuotientRingPtr ring_;
  MultiPoly nf_;
};

/// Nilpotency index j (a^j = 0, a^{j-1} != 0) or nullopt if a is not
/// nilpotent. Requires a finite-dimensional ring (Unsupported otherwise).
std::optional<unsigned> is_nilpotent(const QuotElem& a);

}  // namespace hilb
