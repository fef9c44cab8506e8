#include "hilb/multipoly.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "hilb/errors.hpp"

namespace hilb {

RingPtr PolyRing::make(std::vector<std::string> vars, Domain domain, TermOrder order,
                       std::vector<unsigned> weights) {
  if (vars.size() > kMaxVars) {
    throw Unsupported("at most " + std::to_string(kMaxVars) + " variables are supported");
  }
  std::set<std::string> seen;
  for (const auto& v : vars) {
    if (v.empty() || !seen.insert(v).second) throw std::invalid_argument("duplicate or empty variable name '" + v + "'");
  }
  if (weights.empty()) weights.assign(vars.size(), 1);
  if (weights.size() != vars.size()) throw std::invalid_argument("one weight per variable is required");
  for (unsigned w : weights) {
    if (w == 0) throw std::invalid_argument("variable weights must be positive");
  }
  if (order.kind() == TermOrder::Kind::WeightedDegrevlex && order.weights().size() != vars.size()) {
    throw std::invalid_argument("weighted order needs one weight per variable");
  }
  auto ring = std::shared_ptr<PolyRing>(new PolyRing());
  ring->vars_ = std::move(vars);
  ring->domain_ = domain;
  ring->order_ = std::move(order);
  ring->weights_ = std::move(weights);
  return ring;
}

std::optional<std::size_t> PolyRing::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i] == name) return i;
  }
  return std::nullopt;
}

RingPtr PolyRing::with_order(TermOrder order) const { return make(vars_, domain_, std::move(order), weights_); }

RingPtr PolyRing::with_domain(Domain domain) const { return make(vars_, domain, order_, weights_); }

std::string PolyRing::describe() const {
  std::string out = domain_.to_string() + "[";
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (i) out += ",";
    out += vars_[i];
  }
  return out + "]";
}

bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || (a && b && *a == *b); }

MultiPoly::MultiPoly(RingPtr ring) : ring_(std::move(ring)) {}

MultiPoly::MultiPoly(RingPtr ring, std::vector<Term> sorted_terms)
    : ring_(std::move(ring)), terms_(std::move(sorted_terms)) {}

MultiPoly MultiPoly::constant(RingPtr ring, const Coeff& c) {
  Monomial one(ring->nvars());
  return monomial(std::move(ring), one, c);
}

MultiPoly MultiPoly::constant(RingPtr ring, std::int64_t c) {
  Domain d = ring->domain();
  return constant(std::move(ring), Coeff::from_int(c, d));
}

MultiPoly MultiPoly::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->nvars()) throw std::out_of_range("variable index out of range");
  Monomial m(ring->nvars());
  m.set(index, 1);
  Domain d = ring->domain();
  return monomial(std::move(ring), m, Coeff::from_int(1, d));
}

MultiPoly MultiPoly::variable(RingPtr ring, std::string_view name) {
  auto idx = ring->index_of(name);
  if (!idx) throw std::invalid_argument("unknown variable '" + std::string(name) + "'");
  return variable(std::move(ring), *idx);
}

MultiPoly MultiPoly::monomial(RingPtr ring, const Monomial& m, const Coeff& c) {
  if (!(c.domain() == ring->domain())) throw RingMismatch("coefficient domain does not match ring");
  if (m.size() != ring->nvars()) throw RingMismatch("monomial arity does not match ring");
  MultiPoly out(std::move(ring));
  if (!c.is_zero()) out.terms_.push_back({m, c});
  return out;
}

MultiPoly MultiPoly::from_terms(RingPtr ring, std::vector<Term> terms) {
  const TermOrder& order = ring->order();
  for (const auto& t : terms) {
    if (t.mono.size() != ring->nvars()) throw RingMismatch("monomial arity does not match ring");
    if (!(t.coeff.domain() == ring->domain())) throw RingMismatch("coefficient domain does not match ring");
  }
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return order.compare(a.mono, b.mono) < 0; });
  std::vector<Term> merged;
  merged.reserve(terms.size());
  for (auto& t : terms) {
    if (!merged.empty() && merged.back().mono == t.mono) {
      merged.back().coeff += t.coeff;
    } else {
      if (!merged.empty() && merged.back().coeff.is_zero()) merged.pop_back();
      merged.push_back(std::move(t));
    }
  }
  if (!merged.empty() && merged.back().coeff.is_zero()) merged.pop_back();
  return MultiPoly(std::move(ring), std::move(merged));
}

void MultiPoly::check_compatible(const MultiPoly& other, const char* op) const {
  if (!same_ring(ring_, other.ring_)) {
    throw RingMismatch(std::string("cannot ") + op + " polynomials from " + ring_->describe() + " and " +
                       other.ring_->describe());
  }
}

bool MultiPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

Coeff MultiPoly::coefficient(const Monomial& m) const {
  const TermOrder& order = ring_->order();
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [&](const Term& t, const Monomial& key) { return order.compare(t.mono, key) < 0; });
  if (it != terms_.end() && it->mono == m) return it->coeff;
  return Coeff::from_int(0, ring_->domain());
}

Coeff MultiPoly::constant_term() const { return coefficient(Monomial(ring_->nvars())); }

unsigned MultiPoly::total_degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.total_degree());
  return d;
}

unsigned MultiPoly::weighted_degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.weighted_degree(ring_->weights()));
  return d;
}

bool MultiPoly::is_weighted_homogeneous() const {
  if (terms_.empty()) return true;
  unsigned d = terms_.front().mono.weighted_degree(ring_->weights());
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const Term& t) { return t.mono.weighted_degree(ring_->weights()) == d; });
}

unsigned MultiPoly::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono[var]);
  return d;
}

MultiPoly MultiPoly::operator-() const {
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coeff = -t.coeff;
  return MultiPoly(ring_, std::move(out));
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  a.check_compatible(b, "add");
  const TermOrder& order = a.ring_->order();
  std::vector<Term> out;
  out.reserve(a.terms_.size() + b.terms_.size());
  auto i = a.terms_.begin();
  auto j = b.terms_.begin();
  while (i != a.terms_.end() && j != b.terms_.end()) {
    int c = order.compare(i->mono, j->mono);
    if (c < 0) {
      out.push_back(*i++);
    } else if (c > 0) {
      out.push_back(*j++);
    } else {
      Coeff s = i->coeff + j->coeff;
      if (!s.is_zero()) out.push_back({i->mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), i, a.terms_.end());
  out.insert(out.end(), j, b.terms_.end());
  return MultiPoly(a.ring_, std::move(out));
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_compatible(b, "multiply");
  if (a.is_zero() || b.is_zero()) return MultiPoly(a.ring_);
  if (b.terms_.size() == 1) return a.mul_term(b.terms_[0].mono, b.terms_[0].coeff);
  if (a.terms_.size() == 1) return b.mul_term(a.terms_[0].mono, a.terms_[0].coeff);
  std::unordered_map<Monomial, Coeff, MonomialHash> acc;
  acc.reserve(a.terms_.size() * b.terms_.size() / 2 + 1);
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      Monomial m = s.mono * t.mono;
      auto [it, inserted] = acc.try_emplace(m, s.coeff * t.coeff);
      if (!inserted) it->second += s.coeff * t.coeff;
    }
  }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (!c.is_zero()) out.push_back({m, std::move(c)});
  }
  const TermOrder& order = a.ring_->order();
  std::sort(out.begin(), out.end(), [&](const Term& x, const Term& y) { return order.compare(x.mono, y.mono) < 0; });
  return MultiPoly(a.ring_, std::move(out));
}

MultiPoly MultiPoly::scaled(const Coeff& c) const {
  if (c.is_zero()) return MultiPoly(ring_);
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coeff *= c;
  return MultiPoly(ring_, std::move(out));
}

MultiPoly MultiPoly::mul_term(const Monomial& m, const Coeff& c) const {
  if (c.is_zero()) return MultiPoly(ring_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back({t.mono * m, t.coeff * c});
  return MultiPoly(ring_, std::move(out));
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result = constant(ring_, 1);
  MultiPoly base = *this;
  while (e != 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e != 0) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::monic() const {
  if (terms_.empty()) return *this;
  return scaled(lead().coeff.inverse());
}

MultiPoly MultiPoly::filtered(const std::function<bool(const Term&)>& pred) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (pred(t)) out.push_back(t);
  }
  return MultiPoly(ring_, std::move(out));
}

std::vector<MultiPoly> MultiPoly::coefficients_in(std::size_t var) const {
  std::vector<std::vector<Term>> buckets(is_zero() ? 0 : degree_in(var) + 1);
  for (const auto& t : terms_) {
    Monomial m = t.mono;
    unsigned e = m[var];
    m.set(var, 0);
    buckets[e].push_back({m, t.coeff});
  }
  std::vector<MultiPoly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(from_terms(ring_, std::move(b)));
  return out;
}

MultiPoly MultiPoly::in_ring(const RingPtr& target) const {
  if (same_ring(ring_, target)) return MultiPoly(target, terms_);
  std::vector<std::optional<std::size_t>> map(ring_->nvars());
  for (std::size_t i = 0; i < ring_->nvars(); ++i) map[i] = target->index_of(ring_->vars()[i]);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m(target->nvars());
    for (std::size_t i = 0; i < ring_->nvars(); ++i) {
      if (t.mono[i] == 0) continue;
      if (!map[i]) throw RingMismatch("variable '" + ring_->vars()[i] + "' is not in " + target->describe());
      m.set(*map[i], t.mono[i]);
    }
    out.push_back({m, Coeff::from_rational(t.coeff.to_rational(), target->domain())});
  }
  return from_terms(target, std::move(out));
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (!same_ring(a.ring_, b.ring_)) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].mono == b.terms_[i].mono) || !(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
  }
  return true;
}

MultiPoly apply_hom(const MultiPoly& f, const PolyImages& images, const RingPtr& target) {
  const RingPtr& src = f.ring();
  std::vector<const MultiPoly*> image_of(src->nvars(), nullptr);
  for (std::size_t i = 0; i < src->nvars(); ++i) {
    auto it = images.find(src->vars()[i]);
    if (it != images.end()) {
      if (!same_ring(it->second.ring(), target)) {
        throw RingMismatch("image of '" + src->vars()[i] + "' is not in the target ring");
      }
      image_of[i] = &it->second;
    }
  }
  // powers[i][e] = image_i^e, grown on demand
  std::vector<std::vector<MultiPoly>> powers(src->nvars());
  auto power = [&](std::size_t i, unsigned e) -> const MultiPoly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(MultiPoly::constant(target, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * *image_of[i]);
    return cache[e];
  };
  MultiPoly result(target);
  for (const auto& t : f.terms()) {
    MultiPoly term = MultiPoly::constant(target, Coeff::from_rational(t.coeff.to_rational(), target->domain()));
    for (std::size_t i = 0; i < src->nvars() && !term.is_zero(); ++i) {
      unsigned e = t.mono[i];
      if (e == 0) continue;
      if (!image_of[i]) {
        throw PreconditionViolation("no image given for variable '" + src->vars()[i] + "'");
      }
      term = term * power(i, e);
    }
    result += term;
  }
  return result;
}

}  // namespace hilb
