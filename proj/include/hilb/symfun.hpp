#pragma once

#include <cstddef>
#include <vector>

#include "hilb/multipoly.hpp"

namespace hilb {

/// Q[t1..tn] or Q[t1..tn, x] (x last), degrevlex.
RingPtr t_ring(std::size_t n, bool with_x = false, Domain domain = Domain::rationals());

/// Weighted Q[s1..sn] with deg s_i = i, optionally followed by x of weight 1.
RingPtr s_ring(std::size_t n, bool with_x = false, Domain domain = Domain::rationals());

/// Indices of t1..tn in `ring`; throws if any is missing.
std::vector<std::size_t> t_indices(const RingPtr& ring, std::size_t n);

/// True when f is invariant under every adjacent transposition of the
/// given variables (these generate the symmetric group).
bool is_symmetric(const MultiPoly& f, const std::vector<std::size_t>& vars);

/// Polynomial symmetric in t1..tn; other variables of its ring (such as x)
/// are parameters. Symmetry is checked on construction.
class SymPoly {
 public:
  SymPoly(MultiPoly f, std::size_t n);

  const MultiPoly& poly() const { return f_; }
  std::size_t n() const { return n_; }

 private:
  MultiPoly f_;
  std::size_t n_;
};

/// s_i(t1..tn) in `ring` (default t_ring(n)); s_0 = 1 and s_i = 0 for i > n.
SymPoly elementary_symmetric(std::size_t n, std::size_t i);
SymPoly elementary_symmetric(std::size_t n, std::size_t i, const RingPtr& ring);

/// Delta(t, x) = prod_i (x - t_i) in t_ring(n, true).
MultiPoly delta_expand(std::size_t n);

/// d_p(t_i, x) = (x + t_i)(x^2 + t_i^2)...(x^{2^p} + t_i^{2^p}) in `ring`.
MultiPoly dp_factor(const RingPtr& ring, std::size_t t_index, std::size_t x_index, unsigned p);

/// D_p(t, x) = prod_i d_p(t_i, x) in t_ring(n, true).
SymPoly dp_product(std::size_t n, unsigned p);

/// D_p(t, x) with every term of t-degree >= d dropped. The t-degree is
/// additive, so truncating after each factor gives the same result.
SymPoly dp_product_truncated(std::size_t n, unsigned p, unsigned d);

/// Expresses a symmetric polynomial in the elementary symmetric functions.
/// The result lives in s_ring(n) extended by the parameter variables of the
/// input (in their original order). Weighted degree equals t-degree.
MultiPoly to_elementary_basis(const SymPoly& f);

/// Substitutes s_i -> s_i(t) back; inverse of to_elementary_basis on its
/// image. `target` must contain t1..tn and every non-s variable of g.
MultiPoly from_elementary_basis(const MultiPoly& g, std::size_t n, const RingPtr& target);

/// Class in Q_d = A[s_1..s_n] / (terms of weighted degree >= d).
class QdClass {
 public:
  QdClass(MultiPoly representative, unsigned d);

  const MultiPoly& representative() const { return rep_; }
  unsigned d() const { return d_; }

  friend QdClass operator*(const QdClass& a, const QdClass& b);
  friend QdClass operator+(const QdClass& a, const QdClass& b);
  friend bool operator==(const QdClass& a, const QdClass& b) { return a.d_ == b.d_ && a.rep_ == b.rep_; }

 private:
  MultiPoly rep_;
  unsigned d_;
};

/// Drops terms of weighted degree >= d. f must live in a ring whose
/// variables are all graded (such as s_ring(n)).
QdClass qd_truncate(const MultiPoly& f, unsigned d);

/// Q_d[x] version: grading is taken over the first `graded_vars` variables
/// only (the s-block of s_ring(n, true)); the remaining ones are untouched.
MultiPoly qd_truncate_coefficients(const MultiPoly& f, unsigned d, std::size_t graded_vars);

}  // namespace hilb
