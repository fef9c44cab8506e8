#include "hilb/hilbcore.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>

#include "hilb/errors.hpp"
#include "hilb/parse.hpp"
#include "hilb/symfun.hpp"

namespace hilb {
namespace {

RingPtr with_x(const QuotientRingPtr& A, const std::string& x) {
  std::vector<std::string> vars = A->ambient()->vars();
  if (std::find(vars.begin(), vars.end(), x) != vars.end()) {
    throw PreconditionViolation("variable name '" + x + "' is already used by " + A->describe());
  }
  vars.push_back(x);
  return PolyRing::make(std::move(vars), A->domain());
}

APoly x_power(const QuotientRingPtr& A, std::size_t N) { return APoly::x_power(A->one(), N); }

const QuotientRingPtr& base_ring(const AMonic& F) { return F.u(1).ring(); }

std::vector<unsigned> nilpotency_indices(const AMonic& F) {
  std::vector<unsigned> out;
  for (std::size_t i = 1; i <= F.degree(); ++i) {
    auto idx = is_nilpotent(F.u(i));
    if (!idx) throw PreconditionViolation("u_" + std::to_string(i) + " = " + F.u(i).to_string() + " is not nilpotent");
    out.push_back(*idx);
  }
  return out;
}

// D_p(t, x) truncated below t-degree d, in the elementary basis, over Q.
// Shared across calls; entries are written once.
std::shared_ptr<const MultiPoly> elementary_dp(std::size_t n, unsigned p, unsigned d) {
  static std::mutex mutex;
  static std::map<std::tuple<std::size_t, unsigned, unsigned>, std::shared_ptr<const MultiPoly>> cache;
  const auto key = std::make_tuple(n, p, d);
  {
    std::lock_guard<std::mutex> lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto value = std::make_shared<const MultiPoly>(to_elementary_basis(dp_product_truncated(n, p, d)));
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(key, std::move(value)).first->second;
}

std::size_t checked_power(std::size_t base, std::size_t exp, std::size_t limit) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (out > limit / base) throw Unsupported("enumeration too large");
    out *= base;
  }
  return out;
}

}  // namespace

AMonic monic_from_text(const QuotientRingPtr& A, const std::vector<std::string>& u) {
  std::vector<QuotElem> coeffs;
  for (const auto& text : u) coeffs.push_back(A->element(parse_poly(text, A->ambient())));
  return AMonic(std::move(coeffs));
}

MultiPoly to_multipoly(const APoly& f, const std::string& x) {
  const QuotientRingPtr& A = f.zero_element().ring();
  RingPtr ring = with_x(A, x);
  const std::size_t xi = ring->nvars() - 1;
  std::vector<Term> terms;
  for (std::size_t k = 0; k < f.coeffs().size(); ++k) {
    for (const auto& t : f.coeffs()[k].normal_form().terms()) {
      Monomial m(ring->nvars());
      for (std::size_t v = 0; v < xi; ++v) m.set(v, t.mono[v]);
      m.set(xi, unsigned(k));
      terms.push_back({m, t.coeff});
    }
  }
  return MultiPoly::from_terms(ring, std::move(terms));
}

APoly from_multipoly(const MultiPoly& f, const QuotientRingPtr& A, const std::string& x) {
  auto xi = f.ring()->index_of(x);
  if (!xi) return APoly(A->zero(), {A->element(f)});
  std::vector<QuotElem> coeffs;
  for (const auto& c : f.coefficients_in(*xi)) coeffs.push_back(A->element(c));
  return APoly(A->zero(), std::move(coeffs));
}

// Highest power of x first; within one power, the coefficient's own order.
std::string format_apoly(const APoly& f, const std::string& x) {
  const auto& c = f.coeffs();
  std::string out;
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k].is_zero()) continue;
    std::vector<QuotElem> single(k + 1, c[k].zero());
    single[k] = c[k];
    std::string piece = format_poly(to_multipoly(APoly(c[k], std::move(single)), x));
    if (out.empty()) {
      out = piece;
    } else if (piece[0] == '-') {
      out += " - " + piece.substr(1);
    } else {
      out += " + " + piece;
    }
  }
  return out.empty() ? "0" : out;
}

APoly parse_apoly(const std::string& text, const QuotientRingPtr& A, const std::string& x) {
  return from_multipoly(parse_poly(text, with_x(A, x)), A, x);
}

XPowerWalker::XPowerWalker(const AMonic& F, std::size_t start) : r_(F.u(1).zero()), N_(0) {
  low_ = F.expand().coeffs();
  low_.pop_back();
  // x^0 = 1 is already reduced since deg F >= 1
  r_ = APoly(F.u(1), {F.u(1).one()});
  while (N_ < start) step();
}

void XPowerWalker::step() {
  const std::size_t n = low_.size();
  const QuotElem zero = r_.zero_element();
  std::vector<QuotElem> r = r_.coeffs();
  r.resize(n, zero);
  QuotElem top = r[n - 1];
  for (std::size_t k = n - 1; k > 0; --k) r[k] = r[k - 1];
  r[0] = zero;
  if (!top.is_zero()) {
    for (std::size_t k = 0; k < n; ++k) r[k] = r[k] - top * low_[k];
  }
  r_ = APoly(zero, std::move(r));
  ++N_;
}

bool radical_contains_x(const AMonic& F) {
  for (const auto& u : F.us()) {
    if (!is_nilpotent(u)) return false;
  }
  return true;
}

Cofactor cofactor_Dp(const AMonic& F) {
  const QuotientRingPtr& A = base_ring(F);
  const std::size_t n = F.degree();
  Cofactor out{APoly(A->one(), {A->one()}), n, nilpotency_indices(F)};
  const bool all_zero = std::all_of(F.us().begin(), F.us().end(), [](const QuotElem& u) { return u.is_zero(); });
  if (all_zero) {
    out.tau = 1;
    out.degenerate = true;
    return out;
  }
  out.tau = *std::max_element(out.indices.begin(), out.indices.end());
  out.d = out.tau * unsigned(n * (n + 1) / 2);
  while ((std::size_t(1) << (out.p + 1)) < out.d) ++out.p;
  out.exponent = (std::size_t(1) << (out.p + 1)) * n;

  // powers u_i^e for e below the nilpotency index; higher powers vanish
  std::vector<std::vector<QuotElem>> powers(n);
  for (std::size_t i = 0; i < n; ++i) {
    powers[i].push_back(A->one());
    for (unsigned e = 1; e < out.indices[i]; ++e) powers[i].push_back(powers[i].back() * F.us()[i]);
  }

  auto g = elementary_dp(n, out.p, out.d);
  std::vector<QuotElem> coeffs(out.exponent - n + 1, A->zero());
  for (const auto& term : g->terms()) {
    bool vanishes = false;
    for (std::size_t i = 0; i < n && !vanishes; ++i) vanishes = term.mono[i] >= out.indices[i];
    if (vanishes) continue;
    QuotElem value = powers[0][term.mono[0]];
    for (std::size_t i = 1; i < n; ++i) {
      if (term.mono[i] != 0) value = value * powers[i][term.mono[i]];
    }
    const std::size_t k = term.mono[n];
    coeffs.at(k) = coeffs[k] + value.scaled(Coeff::from_rational(term.coeff.to_rational(), A->domain()));
  }
  out.G = APoly(A->zero(), std::move(coeffs));
  if (!(F.expand() * out.G == x_power(A, out.exponent))) {
    throw VerificationFailure("F * G != x^" + std::to_string(out.exponent));
  }
  return out;
}

std::size_t minimal_power(const AMonic& F, std::size_t cap) {
  XPowerWalker walker(F, F.degree());
  while (walker.exponent() <= cap) {
    if (walker.remainder().is_zero()) return walker.exponent();
    walker.step();
  }
  throw BudgetExceeded("no power x^N with N <= " + std::to_string(cap) + " lies in (F)");
}

namespace {

Cofactor point_certificate(const AMonic& F) {
  if (!base_ring(F)->is_local()) {
    throw PreconditionViolation("base ring " + base_ring(F)->describe() + " is not local artinian");
  }
  return cofactor_Dp(F);
}

}  // namespace

HilbPoint::HilbPoint(AMonic F) : F_(std::move(F)), cofactor_(point_certificate(F_)) {}

ProRepTuple::ProRepTuple(QuotientRingPtr A, std::vector<QuotElem> images) : ring(std::move(A)), u(std::move(images)) {
  if (u.empty()) throw PreconditionViolation("a tuple needs n >= 1 images");
  if (!ring->is_local()) throw PreconditionViolation("target " + ring->describe() + " is not local artinian");
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i].ring() != ring) throw RingMismatch("image of s" + std::to_string(i + 1) + " lies in another ring");
    if (!u[i].residue().is_zero()) {
      throw PreconditionViolation("image of s" + std::to_string(i + 1) + " has nonzero residue; not a local homomorphism");
    }
  }
}

HilbPoint prorep_forward(const ProRepTuple& t) { return HilbPoint(AMonic(t.u)); }

ProRepTuple prorep_backward(const HilbPoint& pt) { return ProRepTuple(pt.ring(), pt.polynomial().us()); }

std::vector<QuotElem> maximal_ideal_elements(const QuotientRingPtr& A) {
  if (A->domain().is_rational()) throw Unsupported("enumeration needs a finite coefficient field");
  if (!A->is_local()) throw PreconditionViolation(A->describe() + " is not local artinian");
  std::vector<Monomial> basis;
  for (const auto& m : *A->staircase()) {
    if (!m.is_one()) basis.push_back(m);
  }
  const std::uint32_t p = A->domain().characteristic();
  const std::size_t count = checked_power(p, basis.size(), std::size_t(1) << 24);
  std::vector<QuotElem> out;
  out.reserve(count);
  std::vector<std::uint32_t> digits(basis.size(), 0);
  for (std::size_t k = 0; k < count; ++k) {
    std::vector<Term> terms;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (digits[j] != 0) terms.push_back({basis[j], Coeff::from_int(digits[j], A->domain())});
    }
    out.push_back(A->element(MultiPoly::from_terms(A->ambient(), std::move(terms))));
    for (std::size_t j = 0; j < digits.size(); ++j) {
      if (++digits[j] < p) break;
      digits[j] = 0;
    }
  }
  return out;
}

std::vector<HilbPoint> enumerate_points(std::size_t n, const QuotientRingPtr& A) {
  if (n == 0) throw PreconditionViolation("degree n must be positive");
  const auto m = maximal_ideal_elements(A);
  const std::size_t count = checked_power(m.size(), n, std::size_t(1) << 22);
  std::vector<HilbPoint> out;
  out.reserve(count);
  std::vector<std::size_t> idx(n, 0);
  for (std::size_t k = 0; k < count; ++k) {
    std::vector<QuotElem> u;
    for (std::size_t i = 0; i < n; ++i) u.push_back(m[idx[i]]);
    out.emplace_back(AMonic(std::move(u)));
    for (std::size_t i = n; i-- > 0;) {
      if (++idx[i] < m.size()) break;
      idx[i] = 0;
    }
  }
  return out;
}

std::vector<MultiPoly> y_recursion(std::size_t n, std::size_t m, Domain domain) {
  if (n == 0) throw PreconditionViolation("n must be positive");
  RingPtr ring = s_ring(n, false, domain);
  std::vector<MultiPoly> y{MultiPoly::constant(ring, 1)};
  for (std::size_t i = 1; i <= m; ++i) {
    MultiPoly yi(ring);
    for (std::size_t j = 1; j <= std::min(i, n); ++j) {
      MultiPoly term = MultiPoly::variable(ring, j - 1) * y[i - j];
      yi += (j % 2 == 1) ? term : -term;
    }
    y.push_back(std::move(yi));
  }
  y.erase(y.begin());
  return y;
}

MultiPoly c_coefficient(std::size_t i, const std::vector<MultiPoly>& s, const std::vector<MultiPoly>& y) {
  const RingPtr& ring = s.front().ring();
  const std::size_t n = s.size();
  const std::size_t m = y.size();
  auto y_at = [&](std::size_t j) { return j == 0 ? MultiPoly::constant(ring, 1) : y[j - 1]; };
  MultiPoly out(ring);
  for (std::size_t l = 0; l <= std::min(n, i); ++l) {
    const std::size_t j = i - l;
    if (j > m) continue;
    MultiPoly term = l == 0 ? y_at(j) : s[l - 1] * y_at(j);
    out += (l % 2 == 0) ? term : -term;
  }
  return out;
}

HnmPresentation construct_Hnm(std::size_t n, std::size_t m, const GroebnerOptions& options, Domain domain) {
  std::vector<MultiPoly> y = y_recursion(n, m, domain);
  RingPtr ring = s_ring(n, false, domain);
  std::vector<MultiPoly> s;
  for (std::size_t i = 0; i < n; ++i) s.push_back(MultiPoly::variable(ring, i));

  for (std::size_t i = 1; i <= m; ++i) {
    if (!c_coefficient(i, s, y).is_zero()) throw VerificationFailure("C_{m," + std::to_string(i) + "} does not vanish");
  }
  std::vector<MultiPoly> gens;
  for (std::size_t j = 1; j <= n; ++j) {
    MultiPoly g = c_coefficient(m + j, s, y).monic();
    if (!g.is_weighted_homogeneous() || g.weighted_degree() != m + j) {
      throw VerificationFailure("generator " + format_poly(g) + " is not homogeneous of degree " + std::to_string(m + j));
    }
    gens.push_back(std::move(g));
  }

  // F(x) Y(x) = x^{n+m} + sum_j C_{m,m+j} x^{n-j} identically in k[s][x]
  RingPtr sx = s_ring(n, true, domain);
  MultiPoly x = MultiPoly::variable(sx, n);
  MultiPoly Fx = x.pow(unsigned(n));
  for (std::size_t i = 1; i <= n; ++i) {
    MultiPoly term = MultiPoly::variable(sx, i - 1) * x.pow(unsigned(n - i));
    Fx += (i % 2 == 1) ? -term : term;
  }
  MultiPoly Yx = x.pow(unsigned(m));
  for (std::size_t i = 1; i <= m; ++i) Yx += y[i - 1].in_ring(sx) * x.pow(unsigned(m - i));
  MultiPoly tail = Fx * Yx - x.pow(unsigned(n + m));
  for (std::size_t j = 1; j <= n; ++j) tail -= c_coefficient(m + j, s, y).in_ring(sx) * x.pow(unsigned(n - j));
  if (!tail.is_zero()) throw VerificationFailure("F Y - x^{n+m} has unexpected coefficients: " + format_poly(tail));

  auto H = QuotientRing::make(Ideal(ring, gens, options));
  std::vector<QuotElem> u;
  for (std::size_t i = 0; i < n; ++i) u.push_back(H->variable(i));
  HnmPresentation h{n, m, std::move(y), std::move(gens), H, AMonic(std::move(u))};
  verify_universal(h);
  return h;
}

UniversalCertificate verify_universal(const HnmPresentation& h) {
  const QuotientRingPtr& H = h.ring;
  auto [Y, r] = monic_divmod(x_power(H, h.n + h.m), h.F);
  std::vector<QuotElem> expected(h.m + 1, H->zero());
  expected[h.m] = H->one();
  for (std::size_t i = 1; i <= h.m; ++i) expected[h.m - i] = H->element(h.y[i - 1]);
  if (!r.is_zero()) throw VerificationFailure("x^{n+m} mod F_{n,m} = " + format_apoly(r) + " in H_{n,m}");
  if (!(Y == APoly(H->zero(), std::move(expected)))) {
    throw VerificationFailure("quotient of x^{n+m} by F_{n,m} differs from Y_m");
  }
  return UniversalCertificate{std::move(Y), std::move(r), true};
}

Ideal elimination_ideal(std::size_t n, std::size_t m, const GroebnerOptions& options, Domain domain) {
  if (n == 0) throw PreconditionViolation("n must be positive");
  std::vector<std::string> vars;
  for (std::size_t i = 1; i <= m; ++i) vars.push_back("y" + std::to_string(i));
  for (std::size_t i = 1; i <= n; ++i) vars.push_back("s" + std::to_string(i));
  RingPtr ring = PolyRing::make(vars, domain, m == 0 ? TermOrder::degrevlex() : TermOrder::block(m));
  std::vector<MultiPoly> y;
  std::vector<MultiPoly> s;
  for (std::size_t i = 0; i < m; ++i) y.push_back(MultiPoly::variable(ring, i));
  for (std::size_t i = 0; i < n; ++i) s.push_back(MultiPoly::variable(ring, m + i));
  std::vector<MultiPoly> gens;
  for (std::size_t i = 1; i <= m + n; ++i) gens.push_back(c_coefficient(i, s, y));

  RingPtr target = s_ring(n, false, domain);
  std::vector<MultiPoly> kept;
  for (const auto& g : buchberger(gens, options)) {
    bool free_of_y = std::all_of(g.terms().begin(), g.terms().end(), [&](const Term& t) {
      for (std::size_t i = 0; i < m; ++i) {
        if (t.mono[i] != 0) return false;
      }
      return true;
    });
    if (free_of_y) kept.push_back(g.in_ring(target));
  }
  return Ideal(target, std::move(kept), options);
}

std::vector<FiltrationStep> filtration_check(std::size_t n, std::size_t m_max, const GroebnerOptions& options) {
  if (m_max == 0) throw PreconditionViolation("m_max must be positive");
  std::vector<HnmPresentation> chain;
  for (std::size_t m = 0; m <= m_max; ++m) chain.push_back(construct_Hnm(n, m, options));
  std::vector<FiltrationStep> out;
  for (std::size_t m = 0; m < m_max; ++m) {
    const auto& lo = chain[m];
    const auto& hi = chain[m + 1];
    FiltrationStep step;
    step.m = m;
    step.contained = ideal_contains(lo.ring->ideal(), hi.ring->ideal());
    step.dim_m = lo.ring->dimension().value_or(0);
    step.dim_next = hi.ring->dimension().value_or(0);
    step.F_maps = true;
    for (std::size_t i = 1; i <= n; ++i) {
      if (!(lo.ring->element(hi.F.u(i).normal_form()) == lo.F.u(i))) step.F_maps = false;
    }
    out.push_back(step);
  }
  return out;
}

Witness witness_nonrepresentability(std::size_t n, std::size_t N) {
  if (n == 0) throw PreconditionViolation("n must be positive");
  if (N < n) throw PreconditionViolation("the truncation exponent N must be at least n");
  unsigned m = 0;
  while ((std::size_t(1) << (m + 1)) + n - 1 <= N) ++m;
  const std::size_t q = std::size_t(1) << (m + 1);
  auto A = QuotientRing::truncated("u", unsigned(q));
  std::vector<QuotElem> u(n, A->zero());
  u[0] = A->variable("u");
  AMonic F(std::move(u));
  const std::size_t M = q + n - 1;
  auto [cof, rest] = monic_divmod(x_power(A, M), F);
  if (!rest.is_zero()) throw VerificationFailure("x^" + std::to_string(M) + " is not in (F)");
  Witness w{n, N, m, A, F, M, std::move(cof), x_power_mod(N, F)};
  if (!verify_witness(w)) throw VerificationFailure("witness certificates do not re-verify");
  return w;
}

bool verify_witness(const Witness& w) {
  const QuotientRingPtr& A = w.ring;
  const std::size_t q = std::size_t(1) << (w.m + 1);
  if (q + w.n - 1 <= w.N) return false;
  if (w.m > 0 && (q / 2) + w.n - 1 > w.N) return false;
  if (!(w.F.expand() * w.cofactor == x_power(A, w.member_exponent))) return false;
  APoly r = monic_divmod(x_power(A, w.N), w.F).remainder;
  if (r.is_zero() || !(r == w.remainder)) return false;
  // x^N = x^{n-1} x^{N-n+1} and x = u modulo x - u
  std::vector<QuotElem> shape(w.n, A->zero());
  shape[w.n - 1] = A->variable("u").pow(unsigned(w.N - w.n + 1));
  return r == APoly(A->zero(), std::move(shape));
}

}  // namespace hilb
