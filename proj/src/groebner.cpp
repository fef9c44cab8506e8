#include "hilb/groebner.hpp"

#include <algorithm>
#include <string>

#include "hilb/errors.hpp"

namespace hilb {

void StepBudget::spend(std::size_t steps) {
  if (steps > remaining_) {
    throw BudgetExceeded("Groebner step budget exhausted");
  }
  remaining_ -= steps;
}

MultiPoly reduce(const MultiPoly& f, const std::vector<MultiPoly>& basis, StepBudget& budget) {
  MultiPoly p = f;
  std::vector<Term> rest;
  while (!p.is_zero()) {
    const Term& lt = p.lead();
    const MultiPoly* reducer = nullptr;
    for (const auto& g : basis) {
      if (g.lead().mono.divides(lt.mono)) {
        reducer = &g;
        break;
      }
    }
    if (reducer == nullptr) {
      rest.push_back(lt);
      p.drop_lead();
      continue;
    }
    budget.spend();
    Coeff c = lt.coeff / reducer->lead().coeff;
    p += reducer->mul_term(lt.mono / reducer->lead().mono, -c);
  }
  return MultiPoly::from_terms(f.ring(), std::move(rest));
}

namespace {

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

class Buchberger {
 public:
  Buchberger(RingPtr ring, std::size_t budget) : ring_(std::move(ring)), budget_(budget) {}

  void add(MultiPoly h) {
    h = reduce(h, active_basis_, budget_);
    if (h.is_zero()) return;
    insert(h.monic());
  }

  void run() {
    const TermOrder& order = ring_->order();
    while (!pairs_.empty()) {
      auto best = std::min_element(pairs_.begin(), pairs_.end(), [&](const Pair& a, const Pair& b) {
        return order.compare(a.lcm, b.lcm) < 0;
      });
      Pair p = *best;
      pairs_.erase(best);
      budget_.spend();
      MultiPoly s = spoly(polys_[p.i], polys_[p.j], p.lcm);
      MultiPoly h = reduce(s, active_basis_, budget_);
      if (!h.is_zero()) insert(h.monic());
    }
  }

  std::vector<MultiPoly> reduced_basis() {
    std::vector<MultiPoly> g = active_basis_;
    for (std::size_t k = 0; k < g.size(); ++k) {
      std::vector<MultiPoly> others;
      for (std::size_t l = 0; l < g.size(); ++l) {
        if (l != k) others.push_back(g[l]);
      }
      const Term lt = g[k].lead();
      MultiPoly tail = g[k];
      tail.drop_lead();
      g[k] = MultiPoly::monomial(ring_, lt.mono, lt.coeff) + reduce(tail, others, budget_);
    }
    const TermOrder& order = ring_->order();
    std::sort(g.begin(), g.end(), [&](const MultiPoly& a, const MultiPoly& b) {
      return order.compare(a.lead().mono, b.lead().mono) < 0;
    });
    return g;
  }

 private:
  MultiPoly spoly(const MultiPoly& f, const MultiPoly& g, const Monomial& lcm) const {
    // both monic
    Coeff one = f.lead().coeff.one();
    return f.mul_term(lcm / f.lead().mono, one) - g.mul_term(lcm / g.lead().mono, one);
  }

  const Monomial& lm(std::size_t k) const { return polys_[k].lead().mono; }

  // Gebauer-Moeller update for a new basis element.
  void insert(MultiPoly h) {
    const std::size_t hi = polys_.size();
    polys_.push_back(std::move(h));
    active_.push_back(true);
    const Monomial& lh = lm(hi);

    std::vector<Pair> candidates;
    for (std::size_t g = 0; g < hi; ++g) {
      if (active_[g]) candidates.push_back({g, hi, lh.lcm(lm(g))});
    }
    std::vector<Pair> kept;
    for (std::size_t k = 0; k < candidates.size(); ++k) {
      const Pair& p = candidates[k];
      bool keep = lh.coprime(lm(p.i));
      if (!keep) {
        keep = true;
        for (std::size_t l = k + 1; l < candidates.size() && keep; ++l) {
          if (candidates[l].lcm.divides(p.lcm)) keep = false;
        }
        for (const auto& q : kept) {
          if (!keep) break;
          if (q.lcm.divides(p.lcm)) keep = false;
        }
      }
      if (keep) kept.push_back(p);
    }
    std::vector<Pair> next;
    for (auto& p : pairs_) {
      bool drop = lh.divides(p.lcm) && !(lh.lcm(lm(p.i)) == p.lcm) && !(lh.lcm(lm(p.j)) == p.lcm);
      if (!drop) next.push_back(std::move(p));
    }
    for (auto& p : kept) {
      if (!lh.coprime(lm(p.i))) next.push_back(std::move(p));
    }
    pairs_ = std::move(next);

    for (std::size_t g = 0; g < hi; ++g) {
      if (active_[g] && lh.divides(lm(g))) active_[g] = false;
    }
    active_basis_.clear();
    for (std::size_t g = 0; g <= hi; ++g) {
      if (active_[g]) active_basis_.push_back(polys_[g]);
    }
  }

  RingPtr ring_;
  StepBudget budget_;
  std::vector<MultiPoly> polys_;
  std::vector<bool> active_;
  std::vector<MultiPoly> active_basis_;
  std::vector<Pair> pairs_;
};

void require_same_ring(const RingPtr& ring, const std::vector<MultiPoly>& polys) {
  for (const auto& p : polys) {
    if (!same_ring(p.ring(), ring)) {
      throw RingMismatch("generator lives in " + p.ring()->describe() + ", expected " + ring->describe());
    }
  }
}

void enumerate_staircase(const std::vector<MultiPoly>& basis, const std::vector<unsigned>& bound,
                         std::size_t var, Monomial& current, std::vector<Monomial>& out) {
  if (var == bound.size()) {
    out.push_back(current);
    return;
  }
  for (unsigned e = 0; e < bound[var]; ++e) {
    current.set(var, e);
    bool divisible = std::any_of(basis.begin(), basis.end(), [&](const MultiPoly& g) {
      return g.lead().mono.divides(current);
    });
    // every multiple in this variable is divisible as well
    if (divisible) break;
    enumerate_staircase(basis, bound, var + 1, current, out);
  }
  current.set(var, 0);
}

}  // namespace

std::vector<MultiPoly> buchberger(const std::vector<MultiPoly>& gens, const GroebnerOptions& options) {
  if (gens.empty()) return {};
  const RingPtr& ring = gens.front().ring();
  require_same_ring(ring, gens);
  Buchberger engine(ring, options.budget);
  for (const auto& g : gens) {
    if (!g.is_zero()) engine.add(g);
  }
  engine.run();
  return engine.reduced_basis();
}

Ideal::Ideal(RingPtr ring, std::vector<MultiPoly> generators, GroebnerOptions options)
    : ring_(std::move(ring)), generators_(std::move(generators)), options_(options) {
  require_same_ring(ring_, generators_);
  std::vector<MultiPoly> nonzero;
  for (const auto& g : generators_) {
    if (!g.is_zero()) nonzero.push_back(g.in_ring(ring_));
  }
  basis_ = buchberger(nonzero, options_);
}

bool Ideal::is_unit() const { return basis_.size() == 1 && basis_.front().lead().mono.is_one(); }

MultiPoly Ideal::normal_form(const MultiPoly& f) const {
  if (!same_ring(f.ring(), ring_)) throw RingMismatch("polynomial is not in the ring of the ideal");
  StepBudget budget(options_.budget);
  return reduce(f.in_ring(ring_), basis_, budget);
}

bool Ideal::contains(const MultiPoly& f) const { return normal_form(f).is_zero(); }

MultiPoly normal_form(const MultiPoly& f, const Ideal& ideal) { return ideal.normal_form(f); }

bool ideal_contains(const Ideal& I, const Ideal& J) {
  if (!same_ring(I.ring(), J.ring())) throw RingMismatch("ideals live in different rings");
  return std::all_of(J.generators().begin(), J.generators().end(),
                     [&](const MultiPoly& g) { return I.contains(g); });
}

bool ideal_equal(const Ideal& I, const Ideal& J) { return ideal_contains(I, J) && ideal_contains(J, I); }

std::optional<std::vector<Monomial>> quotient_basis(const Ideal& ideal) {
  const std::size_t n = ideal.ring()->nvars();
  const auto& basis = ideal.basis();
  if (ideal.is_unit()) return std::vector<Monomial>{};
  std::vector<unsigned> bound(n, 0);
  for (const auto& g : basis) {
    const Monomial& m = g.lead().mono;
    std::size_t support = 0;
    std::size_t var = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (m[i] != 0) {
        ++support;
        var = i;
      }
    }
    if (support == 1 && (bound[var] == 0 || m[var] < bound[var])) bound[var] = m[var];
  }
  if (std::any_of(bound.begin(), bound.end(), [](unsigned b) { return b == 0; })) return std::nullopt;
  std::vector<Monomial> out;
  Monomial current(n);
  enumerate_staircase(basis, bound, 0, current, out);
  const TermOrder& order = ideal.ring()->order();
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return order.compare(a, b) < 0; });
  return out;
}

}  // namespace hilb
