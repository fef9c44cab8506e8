#include "hilb/symfun.hpp"

#include <map>
#include <string>
#include <unordered_map>

#include "hilb/errors.hpp"

namespace hilb {
namespace {

std::vector<std::string> numbered(const std::string& prefix, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

// Symmetric polynomial stored by its dominant terms (exponents sorted
// non-increasingly), largest partition in lex order first.
struct LexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] != b[i]) return a[i] > b[i];
    }
    return false;
  }
};
using SymMap = std::map<Monomial, Coeff, LexGreater>;

bool non_increasing(const Monomial& m) {
  for (std::size_t i = 1; i < m.size(); ++i) {
    if (m[i] > m[i - 1]) return false;
  }
  return true;
}

Monomial sorted_desc(const Monomial& m) {
  std::vector<unsigned> e(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) e[i] = m[i];
  std::sort(e.begin(), e.end(), std::greater<>());
  return Monomial(std::span<const unsigned>(e));
}

class ElementaryExpander {
 public:
  ElementaryExpander(std::size_t n, Domain domain) : n_(n), domain_(domain), subsets_(n + 1) {
    for (unsigned mask = 0; mask < (1u << n); ++mask) subsets_[std::size_t(__builtin_popcount(mask))].push_back(mask);
  }

  // m-basis expansion of s_1^{a_1} ... s_n^{a_n}
  const SymMap& expansion(const Monomial& a) {
    if (auto it = memo_.find(a); it != memo_.end()) return it->second;
    SymMap result;
    std::size_t k = n_;
    while (k > 0 && a[k - 1] == 0) --k;
    if (k == 0) {
      result.emplace(Monomial(n_), Coeff::from_int(1, domain_));
    } else {
      Monomial prev = a;
      prev.set(k - 1, a[k - 1] - 1);
      result = times_elementary(expansion(prev), k);
    }
    return memo_.emplace(a, std::move(result)).first->second;
  }

 private:
  // g * s_k in the m-basis
  SymMap times_elementary(const SymMap& g, std::size_t k) const {
    SymMap out;
    for (const auto& [mu, coeff] : g) {
      for (unsigned mask : subsets_[k]) {
        Monomial nu = mu;
        for (std::size_t i = 0; i < n_; ++i) {
          if (mask & (1u << i)) nu.set(i, nu[i] + 1);
        }
        if (!non_increasing(nu) || out.count(nu)) continue;
        Coeff total = Coeff::from_int(0, domain_);
        for (unsigned sub : subsets_[k]) {
          Monomial lower = nu;
          bool ok = true;
          for (std::size_t i = 0; i < n_ && ok; ++i) {
            if (sub & (1u << i)) {
              if (lower[i] == 0) {
                ok = false;
              } else {
                lower.set(i, lower[i] - 1);
              }
            }
          }
          if (!ok) continue;
          if (auto it = g.find(sorted_desc(lower)); it != g.end()) total += it->second;
        }
        if (!total.is_zero()) out.emplace(nu, std::move(total));
      }
    }
    return out;
  }

  std::size_t n_;
  Domain domain_;
  std::vector<std::vector<unsigned>> subsets_;
  std::unordered_map<Monomial, SymMap, MonomialHash> memo_;
};

}  // namespace

RingPtr t_ring(std::size_t n, bool with_x, Domain domain) {
  auto vars = numbered("t", n);
  if (with_x) vars.push_back("x");
  return PolyRing::make(std::move(vars), domain);
}

RingPtr s_ring(std::size_t n, bool with_x, Domain domain) {
  auto vars = numbered("s", n);
  std::vector<unsigned> weights;
  for (unsigned i = 1; i <= n; ++i) weights.push_back(i);
  if (with_x) {
    vars.push_back("x");
    weights.push_back(1);
  }
  return PolyRing::make(std::move(vars), domain, TermOrder::degrevlex(), std::move(weights));
}

std::vector<std::size_t> t_indices(const RingPtr& ring, std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i <= n; ++i) {
    auto idx = ring->index_of("t" + std::to_string(i));
    if (!idx) throw PreconditionViolation("ring " + ring->describe() + " lacks t" + std::to_string(i));
    out.push_back(*idx);
  }
  return out;
}

bool is_symmetric(const MultiPoly& f, const std::vector<std::size_t>& vars) {
  for (std::size_t k = 0; k + 1 < vars.size(); ++k) {
    std::vector<Term> swapped;
    swapped.reserve(f.size());
    for (const auto& t : f.terms()) {
      Monomial m = t.mono;
      unsigned a = m[vars[k]];
      m.set(vars[k], m[vars[k + 1]]);
      m.set(vars[k + 1], a);
      swapped.push_back({m, t.coeff});
    }
    if (!(MultiPoly::from_terms(f.ring(), std::move(swapped)) == f)) return false;
  }
  return true;
}

SymPoly::SymPoly(MultiPoly f, std::size_t n) : f_(std::move(f)), n_(n) {
  if (n_ == 0) throw PreconditionViolation("symmetric polynomial needs n >= 1");
  if (!is_symmetric(f_, t_indices(f_.ring(), n_))) {
    throw PreconditionViolation("polynomial is not symmetric in t1..t" + std::to_string(n_));
  }
}

SymPoly elementary_symmetric(std::size_t n, std::size_t i) { return elementary_symmetric(n, i, t_ring(n)); }

SymPoly elementary_symmetric(std::size_t n, std::size_t i, const RingPtr& ring) {
  auto idx = t_indices(ring, n);
  std::vector<Term> terms;
  if (i <= n) {
    const Coeff one = Coeff::from_int(1, ring->domain());
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      if (std::size_t(__builtin_popcount(mask)) != i) continue;
      Monomial m(ring->nvars());
      for (std::size_t k = 0; k < n; ++k) {
        if (mask & (1u << k)) m.set(idx[k], 1);
      }
      terms.push_back({m, one});
    }
  }
  return SymPoly(MultiPoly::from_terms(ring, std::move(terms)), n);
}

MultiPoly delta_expand(std::size_t n) {
  if (n == 0) throw PreconditionViolation("delta_expand needs n >= 1");
  RingPtr ring = t_ring(n, true);
  MultiPoly x = MultiPoly::variable(ring, n);
  MultiPoly out = MultiPoly::constant(ring, 1);
  for (std::size_t i = 0; i < n; ++i) out *= x - MultiPoly::variable(ring, i);
  return out;
}

MultiPoly dp_factor(const RingPtr& ring, std::size_t t_index, std::size_t x_index, unsigned p) {
  MultiPoly x = MultiPoly::variable(ring, x_index);
  MultiPoly t = MultiPoly::variable(ring, t_index);
  MultiPoly out = MultiPoly::constant(ring, 1);
  for (unsigned k = 0; k <= p; ++k) {
    unsigned e = 1u << k;
    out *= x.pow(e) + t.pow(e);
  }
  return out;
}

SymPoly dp_product(std::size_t n, unsigned p) {
  RingPtr ring = t_ring(n, true);
  MultiPoly out = MultiPoly::constant(ring, 1);
  for (std::size_t i = 0; i < n; ++i) out *= dp_factor(ring, i, n, p);
  return SymPoly(std::move(out), n);
}

SymPoly dp_product_truncated(std::size_t n, unsigned p, unsigned d) {
  RingPtr ring = t_ring(n, true);
  auto low_t_degree = [n, d](const Term& term) {
    unsigned deg = 0;
    for (std::size_t i = 0; i < n; ++i) deg += term.mono[i];
    return deg < d;
  };
  MultiPoly out = MultiPoly::constant(ring, 1);
  for (std::size_t i = 0; i < n; ++i) {
    out = (out * dp_factor(ring, i, n, p).filtered(low_t_degree)).filtered(low_t_degree);
  }
  return SymPoly(std::move(out), n);
}

MultiPoly to_elementary_basis(const SymPoly& sym) {
  const MultiPoly& f = sym.poly();
  const RingPtr& src = f.ring();
  const std::size_t n = sym.n();
  const auto tidx = t_indices(src, n);

  std::vector<std::size_t> params;
  std::vector<std::string> vars;
  std::vector<unsigned> weights;
  for (std::size_t i = 0; i < n; ++i) {
    vars.push_back("s" + std::to_string(i + 1));
    weights.push_back(unsigned(i + 1));
  }
  for (std::size_t v = 0; v < src->nvars(); ++v) {
    if (std::find(tidx.begin(), tidx.end(), v) != tidx.end()) continue;
    params.push_back(v);
    vars.push_back(src->vars()[v]);
    weights.push_back(1);
  }
  RingPtr out_ring = PolyRing::make(std::move(vars), src->domain(), TermOrder::degrevlex(), std::move(weights));

  std::map<std::vector<unsigned>, SymMap> groups;
  for (const auto& term : f.terms()) {
    Monomial lambda(n);
    for (std::size_t k = 0; k < n; ++k) lambda.set(k, term.mono[tidx[k]]);
    if (!non_increasing(lambda)) continue;
    std::vector<unsigned> key;
    for (std::size_t v : params) key.push_back(term.mono[v]);
    groups[key].emplace(lambda, term.coeff);
  }

  ElementaryExpander expander(n, src->domain());
  std::vector<Term> out;
  for (auto& [key, rem] : groups) {
    while (!rem.empty()) {
      const Monomial lambda = rem.begin()->first;
      const Coeff c = rem.begin()->second;
      Monomial a(n);
      for (std::size_t k = 0; k < n; ++k) a.set(k, lambda[k] - (k + 1 < n ? lambda[k + 1] : 0));
      Monomial m(out_ring->nvars());
      for (std::size_t k = 0; k < n; ++k) m.set(k, a[k]);
      for (std::size_t j = 0; j < params.size(); ++j) m.set(n + j, key[j]);
      out.push_back({m, c});
      for (const auto& [mu, v] : expander.expansion(a)) {
        auto it = rem.find(mu);
        Coeff updated = (it == rem.end() ? c.zero() : it->second) - c * v;
        if (updated.is_zero()) {
          if (it != rem.end()) rem.erase(it);
        } else if (it == rem.end()) {
          rem.emplace(mu, std::move(updated));
        } else {
          it->second = std::move(updated);
        }
      }
    }
  }
  return MultiPoly::from_terms(out_ring, std::move(out));
}

MultiPoly from_elementary_basis(const MultiPoly& g, std::size_t n, const RingPtr& target) {
  PolyImages images;
  for (std::size_t i = 1; i <= n; ++i) {
    images.emplace("s" + std::to_string(i), elementary_symmetric(n, i, target).poly());
  }
  for (const auto& v : g.ring()->vars()) {
    if (images.count(v)) continue;
    if (target->index_of(v)) images.emplace(v, MultiPoly::variable(target, v));
  }
  return apply_hom(g, images, target);
}

QdClass::QdClass(MultiPoly representative, unsigned d) : rep_(std::move(representative)), d_(d) {
  const auto w = rep_.ring()->weights();
  for (const auto& t : rep_.terms()) {
    if (t.mono.weighted_degree(w) >= d_) throw PreconditionViolation("Q_d representative has a term of degree >= d");
  }
}

QdClass operator*(const QdClass& a, const QdClass& b) {
  if (a.d_ != b.d_) throw RingMismatch("Q_d classes with different truncation degrees");
  return qd_truncate(a.rep_ * b.rep_, a.d_);
}

QdClass operator+(const QdClass& a, const QdClass& b) {
  if (a.d_ != b.d_) throw RingMismatch("Q_d classes with different truncation degrees");
  return QdClass(a.rep_ + b.rep_, a.d_);
}

QdClass qd_truncate(const MultiPoly& f, unsigned d) {
  const auto w = f.ring()->weights();
  return QdClass(f.filtered([&](const Term& t) { return t.mono.weighted_degree(w) < d; }), d);
}

MultiPoly qd_truncate_coefficients(const MultiPoly& f, unsigned d, std::size_t graded_vars) {
  const auto w = f.ring()->weights();
  return f.filtered([&](const Term& t) {
    unsigned deg = 0;
    for (std::size_t i = 0; i < graded_vars; ++i) deg += w[i] * t.mono[i];
    return deg < d;
  });
}

}  // namespace hilb
