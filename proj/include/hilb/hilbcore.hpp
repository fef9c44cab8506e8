#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hilb/monic.hpp"
#include "hilb/quotient.hpp"

namespace hilb {

/// Univariate polynomials in x over a quotient ring A.
using APoly = UniPoly<QuotElem>;
using AMonic = MonicPoly<QuotElem>;

/// F = x^n - u_1 x^{n-1} + ... + (-1)^n u_n with u_i given as text over A.
AMonic monic_from_text(const QuotientRingPtr& A, const std::vector<std::string>& u);

/// Writes f as a MultiPoly in the variables of A followed by `x`.
MultiPoly to_multipoly(const APoly& f, const std::string& x = "x");
/// Inverse of to_multipoly; f may live in any ring whose variables are
/// those of A plus `x`.
APoly from_multipoly(const MultiPoly& f, const QuotientRingPtr& A, const std::string& x = "x");
std::string format_apoly(const APoly& f, const std::string& x = "x");
APoly parse_apoly(const std::string& text, const QuotientRingPtr& A, const std::string& x = "x");

/// x^N mod F for N = start, start+1, ..., one multiplication by x per step.
class XPowerWalker {
 public:
  explicit XPowerWalker(const AMonic& F, std::size_t start = 0);
  std::size_t exponent() const { return N_; }
  const APoly& remainder() const { return r_; }
  void step();

 private:
  std::vector<QuotElem> low_;
  APoly r_;
  std::size_t N_;
};

/// True iff every coefficient of F is nilpotent, i.e. (x) lies in the radical
/// of (F). Unsupported for infinite-dimensional A.
bool radical_contains_x(const AMonic& F);

/// Explicit certificate that x^E lies in (F).
struct Cofactor {
  APoly G;
  std::size_t exponent = 0;
  std::vector<unsigned> indices;  // nilpotency index of each u_i
  unsigned tau = 0;
  unsigned d = 0;
  unsigned p = 0;
  bool degenerate = false;  // F = x^n, G = 1
};

/// G = D_p(t, x) specialized along s_i -> u_i, with tau the largest nilpotency
/// index, d = tau (1 + 2 + ... + n) and p minimal with 2^{p+1} >= d, so that
/// F G = x^E for E = 2^{p+1} n. The identity is checked before returning.
Cofactor cofactor_Dp(const AMonic& F);

/// Smallest N <= cap with x^N in (F); throws BudgetExceeded past the cap.
std::size_t minimal_power(const AMonic& F, std::size_t cap = 4096);

/// A monic polynomial with nilpotent coefficients over a local artinian A:
/// an A-valued point of the punctual Hilbert functor.
class HilbPoint {
 public:
  explicit HilbPoint(AMonic F);

  const QuotientRingPtr& ring() const { return F_.u(1).ring(); }
  const AMonic& polynomial() const { return F_; }
  std::size_t degree() const { return F_.degree(); }
  const Cofactor& certificate() const { return cofactor_; }

  friend bool operator==(const HilbPoint& a, const HilbPoint& b) { return a.F_ == b.F_; }

 private:
  AMonic F_;
  Cofactor cofactor_;
};

/// Local homomorphism k[[s_1..s_n]] -> A given by the images of the s_i.
struct ProRepTuple {
  ProRepTuple(QuotientRingPtr A, std::vector<QuotElem> images);

  QuotientRingPtr ring;
  std::vector<QuotElem> u;

  friend bool operator==(const ProRepTuple& a, const ProRepTuple& b) { return a.ring == b.ring && a.u == b.u; }
};

HilbPoint prorep_forward(const ProRepTuple& t);
ProRepTuple prorep_backward(const HilbPoint& pt);

/// Elements of the maximal ideal of a local A over a finite field, in a fixed
/// order (coordinates on the non-constant standard monomials, counted in
/// base p).
std::vector<QuotElem> maximal_ideal_elements(const QuotientRingPtr& A);

/// Every point of H_n(A) for finite local A over F_p.
std::vector<HilbPoint> enumerate_points(std::size_t n, const QuotientRingPtr& A);

/// Presentation of H_{n,m} = k[s_1..s_n]/J_m with its universal polynomial.
struct HnmPresentation {
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<MultiPoly> y;           // y_1..y_m in the s variables
  std::vector<MultiPoly> generators;  // the n generators of J_m, leading coefficient 1
  QuotientRingPtr ring;               // k[s]/J_m
  AMonic F;                           // x^n - s_1 x^{n-1} + ... over ring
};

/// y_1..y_m from y_i = s_1 y_{i-1} - s_2 y_{i-2} + ... (y_0 = 1).
std::vector<MultiPoly> y_recursion(std::size_t n, std::size_t m, Domain domain = Domain::rationals());

/// C_{m,i}(y) = y_i - s_1 y_{i-1} + ... + (-1)^n s_n y_{i-n} with y_0 = 1 and
/// y_j = 0 outside [0, m]. `s` holds s_1..s_n and `y` holds y_1..y_m, all in
/// one ring.
MultiPoly c_coefficient(std::size_t i, const std::vector<MultiPoly>& s, const std::vector<MultiPoly>& y);

HnmPresentation construct_Hnm(std::size_t n, std::size_t m, const GroebnerOptions& options = {},
                              Domain domain = Domain::rationals());

struct UniversalCertificate {
  APoly Y;          // quotient of x^{n+m} by F_{n,m}
  APoly remainder;  // zero in H_{n,m}
  bool ok = false;
};

/// Divides x^{n+m} by F_{n,m} over H_{n,m}; throws VerificationFailure if the
/// remainder does not vanish or the quotient differs from sum y_i x^{m-i}.
UniversalCertificate verify_universal(const HnmPresentation& h);

/// J_m recomputed by eliminating y from (C_{m,1}, ..., C_{m,m+n}) in
/// k[y, s] with a block order; returned in the s-ring of construct_Hnm.
Ideal elimination_ideal(std::size_t n, std::size_t m, const GroebnerOptions& options = {},
                        Domain domain = Domain::rationals());

struct FiltrationStep {
  std::size_t m = 0;
  bool contained = false;  // J_{m+1} inside J_m
  std::size_t dim_m = 0;
  std::size_t dim_next = 0;
  bool F_maps = false;  // F_{n,m+1} maps to F_{n,m}
  bool ok() const { return contained && dim_m <= dim_next && F_maps; }
};

/// Steps m = 0 .. m_max-1 of the chain H_{n,0} -> H_{n,1} -> ...
std::vector<FiltrationStep> filtration_check(std::size_t n, std::size_t m_max, const GroebnerOptions& options = {});

struct Witness {
  std::size_t n = 0;
  std::size_t N = 0;
  unsigned m = 0;
  QuotientRingPtr ring;  // k[u]/(u^{2^{m+1}})
  AMonic F;              // x^n - u x^{n-1}
  std::size_t member_exponent = 0;  // 2^{m+1} + n - 1
  APoly cofactor;                   // x^{member_exponent} = cofactor * F
  APoly remainder;                  // x^N mod F, nonzero
};

/// The family x^n - u x^{n-1} over k[u]/(u^{2^{m+1}}) with m minimal such that
/// 2^{m+1} + n - 1 > N: x^{2^{m+1}+n-1} lies in (F) but x^N does not.
Witness witness_nonrepresentability(std::size_t n, std::size_t N);

/// Re-checks both certificates by multiplication and division.
bool verify_witness(const Witness& w);

}  // namespace hilb
