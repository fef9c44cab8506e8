#include "hilb/quotient.hpp"

#include <algorithm>

#include "hilb/errors.hpp"
#include "hilb/parse.hpp"

namespace hilb {

QuotientRing::QuotientRing(Ideal ideal) : ideal_(std::move(ideal)), staircase_(quotient_basis(ideal_)) {}

QuotientRingPtr QuotientRing::make(Ideal ideal) {
  auto ring = std::shared_ptr<QuotientRing>(new QuotientRing(std::move(ideal)));
  ring->compute_local_flag();
  return ring;
}

QuotientRingPtr QuotientRing::field(Domain domain) {
  RingPtr ring = PolyRing::make({}, domain);
  return make(Ideal(ring, {}));
}

QuotientRingPtr QuotientRing::truncated(const std::string& var, unsigned q, Domain domain) {
  if (q == 0) throw PreconditionViolation("truncation exponent must be positive");
  RingPtr ring = PolyRing::make({var}, domain);
  return make(Ideal(ring, {MultiPoly::variable(ring, 0).pow(q)}));
}

QuotientRingPtr QuotientRing::from_text(const std::vector<std::string>& vars, const std::vector<std::string>& generators,
                                        Domain domain) {
  RingPtr ring = PolyRing::make(vars, domain);
  std::vector<MultiPoly> gens;
  for (const auto& g : generators) gens.push_back(parse_poly(g, ring));
  return make(Ideal(ring, std::move(gens)));
}

void QuotientRing::compute_local_flag() {
  local_ = false;
  if (!staircase_ || staircase_->empty()) return;
  // the origin is a point iff the ideal lies in (v_1..v_r)
  for (const auto& g : ideal_.basis()) {
    if (!g.constant_term().is_zero()) return;
  }
  for (std::size_t i = 0; i < ambient()->nvars(); ++i) {
    if (!is_nilpotent(variable(i))) return;
  }
  local_ = true;
}

std::optional<std::size_t> QuotientRing::dimension() const {
  if (!staircase_) return std::nullopt;
  return staircase_->size();
}

QuotElem QuotientRing::element(const MultiPoly& f) const {
  return QuotElem(shared_from_this(), ideal_.normal_form(f.in_ring(ambient())));
}

QuotElem QuotientRing::element(std::int64_t c) const { return element(MultiPoly::constant(ambient(), c)); }

QuotElem QuotientRing::variable(std::size_t index) const { return element(MultiPoly::variable(ambient(), index)); }

QuotElem QuotientRing::variable(const std::string& name) const { return element(MultiPoly::variable(ambient(), name)); }

QuotElem QuotientRing::zero() const { return QuotElem(shared_from_this(), MultiPoly(ambient())); }

QuotElem QuotientRing::one() const { return element(1); }

std::string QuotientRing::describe() const {
  std::string out = ambient()->describe();
  if (ideal_.basis().empty()) return out;
  out += "/(";
  for (std::size_t i = 0; i < ideal_.basis().size(); ++i) {
    if (i) out += ", ";
    out += format_poly(ideal_.basis()[i]);
  }
  return out + ")";
}

QuotElem::QuotElem(QuotientRingPtr ring, MultiPoly normal_form) : ring_(std::move(ring)), nf_(std::move(normal_form)) {}

void QuotElem::check(const QuotElem& other) const {
  if (ring_ != other.ring_) throw RingMismatch("elements of different quotient rings");
}

QuotElem QuotElem::zero() const { return QuotElem(ring_, MultiPoly(nf_.ring())); }

QuotElem QuotElem::one() const { return ring_->one(); }

QuotElem QuotElem::operator-() const { return QuotElem(ring_, -nf_); }

QuotElem operator+(const QuotElem& a, const QuotElem& b) {
  a.check(b);
  return QuotElem(a.ring_, a.nf_ + b.nf_);
}

QuotElem operator-(const QuotElem& a, const QuotElem& b) {
  a.check(b);
  return QuotElem(a.ring_, a.nf_ - b.nf_);
}

QuotElem operator*(const QuotElem& a, const QuotElem& b) {
  a.check(b);
  if (a.is_zero() || b.is_zero()) return a.zero();
  return QuotElem(a.ring_, a.ring_->ideal().normal_form(a.nf_ * b.nf_));
}

QuotElem QuotElem::scaled(const Coeff& c) const { return QuotElem(ring_, nf_.scaled(c)); }

QuotElem QuotElem::pow(unsigned e) const {
  QuotElem result = one();
  QuotElem base = *this;
  while (e != 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e != 0) base = base * base;
  }
  return result;
}

bool operator==(const QuotElem& a, const QuotElem& b) { return a.ring_ == b.ring_ && a.nf_ == b.nf_; }

std::string QuotElem::to_string() const { return format_poly(nf_); }

std::optional<unsigned> is_nilpotent(const QuotElem& a) {
  auto dim = a.ring()->dimension();
  if (!dim) throw Unsupported("nilpotency test needs a finite-dimensional quotient");
  if (a.is_zero()) return 1u;
  // In a D-dimensional algebra a nilpotent element satisfies a^D = 0;
  // squaring past D decides nilpotency before the index is searched.
  unsigned reach = 1;
  QuotElem sq = a;
  while (reach < *dim && !sq.is_zero()) {
    sq = sq * sq;
    reach *= 2;
  }
  if (!sq.is_zero()) return std::nullopt;
  QuotElem p = a;
  unsigned j = 1;
  while (!p.is_zero()) {
    p = p * a;
    ++j;
  }
  return j;
}

}  // namespace hilb
