#include "hilb/cli.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "hilb/errors.hpp"
#include "hilb/hilbcore.hpp"
#include "hilb/parse.hpp"
#include "hilb/symfun.hpp"

namespace hilb::cli {
namespace {

// Seeded generator for the randomized suites: std::mt19937_64 (constants
// fixed by the C++ standard), bounded draws by `engine() % bound`.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }
  std::int64_t range(std::int64_t lo, std::int64_t hi) { return lo + std::int64_t(below(std::uint64_t(hi - lo + 1))); }

 private:
  std::mt19937_64 engine_;
};

GroebnerOptions groebner_options(const Options& opt) { return GroebnerOptions{opt.budget}; }

std::string with_params(std::string name, std::size_t n, std::size_t m, const char* second = "m") {
  return name + " n=" + std::to_string(n) + " " + second + "=" + std::to_string(m);
}

std::vector<std::string> texts(const std::vector<MultiPoly>& polys) {
  std::vector<std::string> out;
  for (const auto& f : polys) out.push_back(format_poly(f));
  return out;
}

std::string monomial_text(const RingPtr& ring, const Monomial& m) {
  return format_poly(MultiPoly::monomial(ring, m, Coeff::from_int(1, ring->domain())));
}

std::string truncated_label(Domain domain, unsigned q) {
  if (q == 1) return domain.to_string();
  return domain.to_string() + "[u]/(u^" + std::to_string(q) + ")";
}

Json failed(std::string check, std::string detail) {
  Json r;
  r["check"] = std::move(check);
  r["pass"] = false;
  r["detail"] = std::move(detail);
  return r;
}

// Runs one check; library errors other than budget exhaustion become a
// failed result so that the rest of the suite still runs.
void run_check(Report& report, const std::string& name, const Options& opt, const std::function<Json()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Json r;
  try {
    r = body();
  } catch (const BudgetExceeded&) {
    throw;
  } catch (const Error& e) {
    r = failed(name, e.what());
  }
  if (!r.contains("check")) {
    Json named;
    named["check"] = name;
    for (auto it = r.begin(); it != r.end(); ++it) named[it.key()] = it.value();
    r = std::move(named);
  }
  if (opt.timings) {
    const auto stop = std::chrono::steady_clock::now();
    r["ms"] = std::chrono::duration<double, std::milli>(stop - start).count();
  }
  report.add(std::move(r));
}

Json result(bool pass) {
  Json r;
  r["pass"] = pass;
  return r;
}

// Every element of a finite A over F_p, in the order of base-p counting on
// the staircase coordinates.
std::vector<QuotElem> all_elements(const QuotientRingPtr& A) {
  const auto& stair = *A->staircase();
  const std::uint32_t p = A->domain().characteristic();
  std::vector<QuotElem> out;
  std::vector<std::uint32_t> digits(stair.size(), 0);
  for (;;) {
    std::vector<Term> terms;
    for (std::size_t j = 0; j < stair.size(); ++j) terms.push_back({stair[j], Coeff::from_int(digits[j], A->domain())});
    out.push_back(A->element(MultiPoly::from_terms(A->ambient(), std::move(terms))));
    std::size_t j = 0;
    while (j < digits.size() && ++digits[j] == p) digits[j++] = 0;
    if (j == digits.size()) break;
  }
  return out;
}

void for_each_monic(std::size_t n, const std::vector<QuotElem>& elems, const std::function<void(const AMonic&)>& f) {
  std::vector<std::size_t> idx(n, 0);
  for (;;) {
    std::vector<QuotElem> u;
    for (auto i : idx) u.push_back(elems[i]);
    f(AMonic(std::move(u)));
    std::size_t j = 0;
    while (j < n && ++idx[j] == elems.size()) idx[j++] = 0;
    if (j == n) break;
  }
}

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t out = 1;
  while (e--) out *= b;
  return out;
}

// ---- sym ----

Json check_delta_dp(std::size_t n, unsigned p) {
  const std::size_t N = std::size_t(1) << (p + 1);
  const MultiPoly prod = delta_expand(n) * dp_product(n, p).poly();
  const MultiPoly g = to_elementary_basis(SymPoly(prod, n));
  const RingPtr& R = g.ring();
  const RingPtr T = t_ring(n);
  PolyImages powers;
  for (std::size_t j = 0; j < n; ++j) powers.emplace(T->vars()[j], MultiPoly::variable(T, j).pow(unsigned(N)));
  const MultiPoly x = MultiPoly::variable(R, "x");
  MultiPoly expected(R);
  for (std::size_t i = 0; i <= n; ++i) {
    const MultiPoly e = apply_hom(elementary_symmetric(n, i).poly(), powers, T);
    const MultiPoly term = to_elementary_basis(SymPoly(e, n)).in_ring(R) * x.pow(unsigned(N * (n - i)));
    expected += (i % 2 == 1) ? -term : term;
  }
  const bool back = from_elementary_basis(g, n, prod.ring()) == prod;
  Json r = result(g == expected && back);
  r["N"] = N;
  r["terms"] = g.size();
  if (!r["pass"].get<bool>()) r["detail"] = "expanded: " + format_poly(g);
  return r;
}

Json check_elementary_round_trip(Rng& rng, std::size_t cases) {
  for (std::size_t k = 0; k < cases; ++k) {
    const std::size_t n = std::size_t(rng.range(1, 4));
    const RingPtr S = s_ring(n);
    std::vector<Term> terms;
    for (std::size_t t = 0, count = std::size_t(rng.range(1, 5)); t < count; ++t) {
      Monomial m(n);
      unsigned weight = 0;
      for (std::size_t v = 0; v < n; ++v) {
        const unsigned e = unsigned(rng.below(3));
        if (weight + e * unsigned(v + 1) > 8) continue;
        m.set(v, e);
        weight += e * unsigned(v + 1);
      }
      terms.push_back({m, Coeff::from_int(rng.range(-5, 5))});
    }
    const MultiPoly g = MultiPoly::from_terms(S, std::move(terms));
    const MultiPoly f = from_elementary_basis(g, n, t_ring(n));
    const MultiPoly back = to_elementary_basis(SymPoly(f, n));
    if (!(back == g)) {
      Json r = result(false);
      r["detail"] = "case " + std::to_string(k) + ": " + format_poly(g) + " came back as " + format_poly(back);
      return r;
    }
  }
  Json r = result(true);
  r["cases"] = cases;
  return r;
}

void suite_sym(Report& report, const Options& opt) {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (unsigned p = 0; p <= 3; ++p) {
      run_check(report, with_params("delta-Dp identity", n, p, "p"), opt, [=] { return check_delta_dp(n, p); });
    }
  }
  Rng rng(opt.seed);
  run_check(report, "elementary basis round trip", opt, [&] { return check_elementary_round_trip(rng, 100); });
}

// ---- groebner ----

Json check_hnm_basis(std::size_t n, std::size_t m, const Options& opt) {
  const auto h = construct_Hnm(n, m, groebner_options(opt));
  const Ideal& I = h.ring->ideal();
  bool ok = buchberger(I.basis(), groebner_options(opt)) == I.basis();
  for (const auto& g : h.generators) ok = ok && I.normal_form(g).is_zero();
  ok = ok && h.ring->is_local();
  Json r = result(ok);
  r["basis"] = texts(I.basis());
  r["dimension"] = h.ring->dimension().value_or(0);
  return r;
}

Json check_normal_forms(Rng& rng, std::size_t cases, const Options& opt) {
  const auto h = construct_Hnm(2, 3, groebner_options(opt));
  const Ideal& I = h.ring->ideal();
  const RingPtr& R = I.ring();
  std::set<std::vector<unsigned>> stair;
  for (const auto& mono : *h.ring->staircase()) stair.insert({mono[0], mono[1]});
  for (std::size_t k = 0; k < cases; ++k) {
    std::vector<Term> terms;
    for (std::size_t t = 0, count = std::size_t(rng.range(1, 6)); t < count; ++t) {
      Monomial mono(2);
      mono.set(0, unsigned(rng.below(7)));
      mono.set(1, unsigned(rng.below(7)));
      terms.push_back({mono, Coeff::from_int(rng.range(-9, 9))});
    }
    const MultiPoly f = MultiPoly::from_terms(R, std::move(terms));
    const MultiPoly r = I.normal_form(f);
    bool ok = I.normal_form(r) == r && I.contains(f - r);
    for (const auto& t : r.terms()) ok = ok && stair.count({t.mono[0], t.mono[1]});
    if (!ok) {
      Json out = result(false);
      out["detail"] = "normal form of " + format_poly(f) + " is " + format_poly(r);
      return out;
    }
  }
  Json out = result(true);
  out["cases"] = cases;
  return out;
}

Json check_nilpotency(const Options& opt) {
  const auto h = construct_Hnm(2, 1, groebner_options(opt));
  const auto s1 = is_nilpotent(h.ring->variable("s1"));
  const auto u = is_nilpotent(QuotientRing::truncated("u", 8)->variable("u"));
  Json r = result(s1 == 3u && u == 8u);
  r["s1 in H_{2,1}"] = s1.value_or(0);
  r["u in Q[u]/(u^8)"] = u.value_or(0);
  return r;
}

void suite_groebner(Report& report, const Options& opt) {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::size_t m = 0; m <= 4; ++m) {
      run_check(report, with_params("reduced basis of J_m", n, m), opt, [&, n, m] { return check_hnm_basis(n, m, opt); });
    }
  }
  Rng rng(opt.seed);
  run_check(report, "normal forms in H_{2,3}", opt, [&] { return check_normal_forms(rng, 100, opt); });
  run_check(report, "nilpotency indices", opt, [&] { return check_nilpotency(opt); });
}

// ---- hilb ----

Json minexp_result(std::size_t n, std::size_t m, Domain domain) {
  if (m > 20) throw PreconditionViolation("m must be at most 20");
  const unsigned q = 1u << (m + 1);
  auto A = QuotientRing::truncated("u", q, domain);
  std::vector<std::string> u(n, "0");
  u[0] = "u";
  const AMonic F = monic_from_text(A, u);
  const std::size_t formula = q + n - 1;
  const std::size_t N = minimal_power(F, std::max<std::size_t>(4096, formula + 1));
  const APoly below = x_power_mod(N - 1, F);
  Json r = result(N == formula && !below.is_zero());
  r["ring"] = truncated_label(domain, q);
  r["F"] = format_apoly(F.expand());
  r["N"] = N;
  r["formula"] = formula;
  r["match"] = N == formula;
  r["remainder at N-1"] = format_apoly(below);
  return r;
}

Json check_golden(std::size_t n, std::size_t m, const std::vector<std::string>& expected, const Options& opt) {
  const auto h = construct_Hnm(n, m, groebner_options(opt));
  const RingPtr S = s_ring(n);
  std::vector<MultiPoly> gens;
  for (const auto& t : expected) gens.push_back(parse_poly(t, S));
  const bool same = ideal_equal(h.ring->ideal(), Ideal(S, gens, groebner_options(opt)));
  Json r = result(same && h.generators == gens);
  r["generators"] = texts(h.generators);
  r["dimension"] = h.ring->dimension().value_or(0);
  return r;
}

Json check_line(const Options& opt) {
  std::vector<std::size_t> dims;
  bool ok = true;
  for (std::size_t m = 0; m <= 10; ++m) {
    const auto h = construct_Hnm(1, m, groebner_options(opt));
    const MultiPoly expected = MultiPoly::variable(s_ring(1), 0).pow(unsigned(m + 1));
    ok = ok && h.generators.size() == 1 && h.generators[0] == expected && h.ring->dimension() == m + 1;
    dims.push_back(h.ring->dimension().value_or(0));
  }
  Json r = result(ok);
  r["dimensions"] = dims;
  return r;
}

const char* kH21Note =
    "the presentation k[x,y]/(x^2, x*y) sometimes quoted for H_{2,1} is infinite-dimensional; "
    "the computed ideal (s1^2 - s2, s1*s2) has a 3-dimensional quotient";

Json check_universal(std::size_t n, std::size_t m_max, const Options& opt) {
  bool ok = true;
  std::vector<std::size_t> dims;
  for (std::size_t m = 0; m <= m_max; ++m) {
    const auto h = construct_Hnm(n, m, groebner_options(opt));
    ok = ok && verify_universal(h).ok;
    dims.push_back(h.ring->dimension().value_or(0));
  }
  Json r = result(ok);
  r["dimensions"] = dims;
  return r;
}

Json check_filtration(std::size_t n, std::size_t m_max, const Options& opt) {
  const auto steps = filtration_check(n, m_max, groebner_options(opt));
  bool ok = true;
  std::vector<std::size_t> dims;
  for (const auto& s : steps) {
    ok = ok && s.ok();
    dims.push_back(s.dim_m);
  }
  if (!steps.empty()) dims.push_back(steps.back().dim_next);
  Json r = result(ok);
  r["dimensions"] = dims;
  return r;
}

Json check_elimination(std::size_t n, std::size_t m_max, const Options& opt) {
  bool ok = true;
  for (std::size_t m = 0; m <= m_max; ++m) {
    const auto h = construct_Hnm(n, m, groebner_options(opt));
    ok = ok && ideal_equal(elimination_ideal(n, m, groebner_options(opt)), h.ring->ideal());
  }
  return result(ok);
}

Json check_random_cofactors(Rng& rng, std::size_t cases) {
  std::vector<QuotientRingPtr> rings{QuotientRing::truncated("u", 2), QuotientRing::truncated("u", 3),
                                     QuotientRing::truncated("u", 4),
                                     QuotientRing::from_text({"u", "v"}, {"u^2", "v^2"})};
  std::size_t max_exponent = 0;
  for (std::size_t k = 0; k < cases; ++k) {
    const auto& A = rings[rng.below(rings.size())];
    const auto& stair = *A->staircase();
    std::vector<QuotElem> u;
    for (std::size_t i = 0, n = std::size_t(rng.range(1, 3)); i < n; ++i) {
      MultiPoly f(A->ambient());
      for (std::size_t j = 1; j < stair.size(); ++j) {
        f += MultiPoly::monomial(A->ambient(), stair[j], Coeff::from_int(rng.range(-3, 3)));
      }
      u.push_back(A->element(f));
    }
    const AMonic F(std::move(u));
    const Cofactor c = cofactor_Dp(F);
    if (!(F.expand() * c.G == APoly::x_power(A->one(), c.exponent))) {
      Json r = result(false);
      r["detail"] = "F = " + format_apoly(F.expand()) + " over " + A->describe();
      return r;
    }
    max_exponent = std::max(max_exponent, c.exponent);
  }
  Json r = result(true);
  r["cases"] = cases;
  r["largest exponent"] = max_exponent;
  return r;
}

Json check_radical_criterion(const QuotientRingPtr& A, std::size_t n_max) {
  const auto elems = all_elements(A);
  const std::size_t D = *A->dimension();
  std::size_t total = 0;
  std::size_t members = 0;
  std::string bad;
  for (std::size_t n = 1; n <= n_max && bad.empty(); ++n) {
    for_each_monic(n, elems, [&](const AMonic& F) {
      if (!bad.empty()) return;
      bool member = false;
      for (XPowerWalker w(F); w.exponent() <= 4 * D * n && !member; w.step()) member = w.remainder().is_zero();
      ++total;
      members += member;
      if (member != radical_contains_x(F)) bad = format_apoly(F.expand());
    });
  }
  Json r = result(bad.empty());
  r["polynomials"] = total;
  r["with x^N in (F)"] = members;
  if (!bad.empty()) r["detail"] = "criterion disagrees on " + bad;
  return r;
}

Json witness_result(std::size_t n, std::size_t N) {
  const Witness w = witness_nonrepresentability(n, N);
  const std::string cofactor = format_apoly(w.cofactor);
  const std::string remainder = format_apoly(w.remainder);
  // the emitted text must carry the certificate on its own
  const APoly G = parse_apoly(cofactor, w.ring);
  const bool reparsed = w.F.expand() * G == APoly::x_power(w.ring->one(), w.member_exponent) &&
                        parse_apoly(remainder, w.ring) == x_power_mod(N, w.F);
  Json r = result(verify_witness(w) && reparsed);
  r["m"] = w.m;
  r["ring"] = truncated_label(Domain::rationals(), 1u << (w.m + 1));
  r["F"] = format_apoly(w.F.expand());
  r["member exponent"] = w.member_exponent;
  r["cofactor"] = cofactor;
  r["remainder"] = remainder;
  return r;
}

void suite_hilb(Report& report, const Options& opt) {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::size_t m = 0; m <= 4; ++m) {
      run_check(report, with_params("minimal power", n, m), opt, [=] { return minexp_result(n, m, Domain::rationals()); });
    }
  }
  run_check(report, "J_m n=2 m=2", opt, [&] { return check_golden(2, 2, {"s1^3 - 2*s1*s2", "s1^2*s2 - s2^2"}, opt); });
  run_check(report, "J_m n=2 m=3", opt,
            [&] { return check_golden(2, 3, {"s1^4 - 3*s1^2*s2 + s2^2", "s1^3*s2 - 2*s1*s2^2"}, opt); });
  run_check(report, "J_m n=2 m=1", opt, [&] {
    Json r = check_golden(2, 1, {"s1^2 - s2", "s1*s2"}, opt);
    r["note"] = kH21Note;
    return r;
  });
  run_check(report, "J_m n=1 m<=10", opt, [&] { return check_line(opt); });
  for (std::size_t n = 1; n <= 3; ++n) {
    run_check(report, "universal family n=" + std::to_string(n) + " m<=4", opt, [&, n] { return check_universal(n, 4, opt); });
  }
  for (std::size_t n = 1; n <= 3; ++n) {
    run_check(report, "filtration n=" + std::to_string(n) + " m<=4", opt, [&, n] { return check_filtration(n, 4, opt); });
  }
  for (std::size_t n = 1; n <= 3; ++n) {
    run_check(report, "elimination n=" + std::to_string(n) + " m<=3", opt, [&, n] { return check_elimination(n, 3, opt); });
  }
  Rng rng(opt.seed);
  run_check(report, "random cofactors", opt, [&] { return check_random_cofactors(rng, 100); });
  const Domain f2 = Domain::prime_field(2);
  const Domain f3 = Domain::prime_field(3);
  const std::vector<std::pair<Domain, unsigned>> rings{{f2, 2}, {f2, 3}, {f3, 2}};
  for (const auto& [domain, q] : rings) {
    run_check(report, "nilpotent criterion A=" + truncated_label(domain, q), opt,
              [=] { return check_radical_criterion(QuotientRing::truncated("u", q, domain), 3); });
  }
  for (const auto& [n, N] : std::vector<std::pair<std::size_t, std::size_t>>{{1, 5}, {2, 4}, {3, 8}}) {
    run_check(report, with_params("witness", n, N, "N"), opt, [=] { return witness_result(n, N); });
  }
}

// ---- prorep ----

std::vector<std::pair<Domain, unsigned>> prorep_rings(const Options& opt) {
  if (opt.field.is_rational()) {
    const Domain f2 = Domain::prime_field(2);
    return {{f2, 1}, {f2, 2}, {f2, 3}, {Domain::prime_field(3), 2}};
  }
  return {{opt.field, 1}, {opt.field, 2}, {opt.field, 3}};
}

Json check_round_trips(Rng& rng, std::size_t cases, const Options& opt) {
  std::vector<QuotientRingPtr> rings;
  std::vector<std::vector<QuotElem>> maximal;
  for (const auto& [domain, q] : prorep_rings(opt)) {
    rings.push_back(q == 1 ? QuotientRing::field(domain) : QuotientRing::truncated("u", q, domain));
    maximal.push_back(maximal_ideal_elements(rings.back()));
  }
  for (std::size_t k = 0; k < cases; ++k) {
    const std::size_t a = rng.below(rings.size());
    std::vector<QuotElem> u;
    for (std::size_t i = 0, n = std::size_t(rng.range(1, 3)); i < n; ++i) {
      u.push_back(maximal[a][rng.below(maximal[a].size())]);
    }
    const ProRepTuple t(rings[a], std::move(u));
    const HilbPoint pt = prorep_forward(t);
    const ProRepTuple back = prorep_backward(pt);
    if (!(back == t) || !(prorep_forward(back) == pt)) {
      Json r = result(false);
      r["detail"] = "round trip fails for F = " + format_apoly(pt.polynomial().expand());
      return r;
    }
  }
  Json r = result(true);
  r["cases"] = cases;
  return r;
}

Json check_counting(const QuotientRingPtr& A, std::size_t n) {
  const std::size_t m = maximal_ideal_elements(A).size();
  const std::size_t expected = ipow(m, n);
  const std::size_t points = enumerate_points(n, A).size();
  Json r;
  const std::size_t size = *A->dimension();
  const std::size_t p = A->domain().characteristic();
  // brute force over all monic polynomials when that is cheap
  if (size * n <= 16 && ipow(ipow(p, size), n) <= (1u << 16)) {
    std::size_t nilpotent = 0;
    for_each_monic(n, all_elements(A), [&](const AMonic& F) { nilpotent += radical_contains_x(F); });
    r = result(points == expected && nilpotent == expected);
    r["brute force"] = nilpotent;
  } else {
    r = result(points == expected);
  }
  r["points"] = points;
  r["|m_A|^n"] = expected;
  return r;
}

void suite_prorep(Report& report, const Options& opt) {
  Rng rng(opt.seed);
  run_check(report, "round trips", opt, [&] { return check_round_trips(rng, 500, opt); });
  for (const auto& [domain, q] : prorep_rings(opt)) {
    for (std::size_t n = 1; n <= 3; ++n) {
      run_check(report, "counting A=" + truncated_label(domain, q) + " n=" + std::to_string(n), opt, [=] {
        return check_counting(q == 1 ? QuotientRing::field(domain) : QuotientRing::truncated("u", q, domain), n);
      });
    }
  }
}

Json base_params(const Options& opt) {
  Json p;
  p["field"] = opt.field.to_string();
  p["seed"] = opt.seed;
  p["budget"] = opt.budget;
  return p;
}

std::vector<std::string> infer_vars(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::string> vars;
  for (const auto* list : {&a, &b}) {
    for (const auto& t : *list) {
      for (auto& v : scan_variables(t)) vars.push_back(std::move(v));
    }
  }
  std::sort(vars.begin(), vars.end(), natural_less);
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

std::string render(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& e) { return e.is_string(); })) {
    std::string out;
    for (const auto& e : v) {
      if (!out.empty()) out += ", ";
      out += e.get<std::string>();
    }
    return out;
  }
  return v.dump();
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  for (auto& s : out) {
    const auto b = s.find_first_not_of(" \t");
    const auto e = s.find_last_not_of(" \t");
    s = b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  }
  return out;
}

}  // namespace

bool Report::pass() const { return first_failure() == nullptr; }

const Json* Report::first_failure() const {
  for (const auto& r : results_) {
    if (!r.value("pass", false)) return &r;
  }
  return nullptr;
}

Json Report::to_json() const {
  Json doc;
  doc["command"] = command_;
  doc["params"] = params_;
  doc["results"] = results_;
  doc["pass"] = pass();
  return doc;
}

std::string Report::to_text() const {
  std::ostringstream out;
  out << "command: " << command_ << "\n";
  std::string params;
  for (auto it = params_.begin(); it != params_.end(); ++it) {
    if (!params.empty()) params += " ";
    params += it.key() + "=" + render(it.value());
  }
  out << "params: " << params << "\n";
  std::size_t passed = 0;
  for (const auto& r : results_) {
    const bool ok = r.value("pass", false);
    passed += ok;
    out << (ok ? "[PASS] " : "[FAIL] ") << r.value("check", std::string("?")) << "\n";
    for (auto it = r.begin(); it != r.end(); ++it) {
      if (it.key() == "check" || it.key() == "pass") continue;
      out << "    " << it.key() << ": " << render(it.value()) << "\n";
    }
  }
  out << "overall: " << (pass() ? "PASS" : "FAIL") << " (" << passed << "/" << results_.size() << " checks passed)\n";
  if (const Json* f = first_failure()) {
    out << "first failure: " << f->value("check", std::string("?"));
    if (f->contains("detail")) out << ": " << render((*f)["detail"]);
    out << "\n";
  }
  return out.str();
}

Report cmd_hnm(std::size_t n, std::size_t m, const Options& opt) {
  if (n == 0) throw PreconditionViolation("n must be at least 1");
  Json params;
  params["n"] = n;
  params["m"] = m;
  params.update(base_params(opt));
  Report report("hnm", params);
  run_check(report, "H_{" + std::to_string(n) + "," + std::to_string(m) + "}", opt, [&] {
    const auto h = construct_Hnm(n, m, groebner_options(opt), opt.field);
    const auto cert = verify_universal(h);
    // generators re-parse to the same ideal
    std::vector<MultiPoly> reparsed;
    for (const auto& g : h.generators) reparsed.push_back(parse_poly(format_poly(g), h.ring->ambient()));
    const bool same = ideal_equal(h.ring->ideal(), Ideal(h.ring->ambient(), reparsed, groebner_options(opt)));
    Json r = result(cert.ok && same);
    r["generators"] = texts(h.generators);
    std::vector<std::string> stair;
    for (const auto& mono : *h.ring->staircase()) stair.push_back(monomial_text(h.ring->ambient(), mono));
    r["staircase"] = stair;
    r["dimension"] = stair.size();
    r["F"] = format_apoly(h.F.expand());
    r["Y"] = format_apoly(cert.Y);
    r["remainder"] = format_apoly(cert.remainder);
    r["universal family"] = cert.ok ? "verified" : "failed";
    if (n == 2 && m == 1) r["note"] = kH21Note;
    return r;
  });
  return report;
}

Report cmd_minexp(std::size_t n, std::size_t m, const Options& opt) {
  if (n == 0) throw PreconditionViolation("n must be at least 1");
  Json params;
  params["n"] = n;
  params["m"] = m;
  params.update(base_params(opt));
  Report report("minexp", params);
  run_check(report, with_params("minimal power", n, m), opt, [&] { return minexp_result(n, m, opt.field); });
  return report;
}

Report cmd_cofactor(const std::vector<std::string>& ideal, const std::vector<std::string>& coeffs,
                    std::vector<std::string> vars, const Options& opt) {
  if (coeffs.empty()) throw PreconditionViolation("at least one coefficient is required");
  if (vars.empty()) vars = infer_vars(ideal, coeffs);
  Json params;
  params["ideal"] = ideal;
  params["coeffs"] = coeffs;
  params["vars"] = vars;
  params.update(base_params(opt));
  Report report("cofactor", params);
  const auto A = QuotientRing::from_text(vars, ideal, opt.field);
  const AMonic F = monic_from_text(A, coeffs);
  const Cofactor c = cofactor_Dp(F);
  run_check(report, "cofactor", opt, [&] {
    const std::string G = format_apoly(c.G);
    const bool reparsed = F.expand() * parse_apoly(G, A) == APoly::x_power(A->one(), c.exponent);
    Json r = result(reparsed);
    r["ring"] = A->describe();
    r["F"] = format_apoly(F.expand());
    r["indices"] = c.indices;
    r["tau"] = c.tau;
    r["d"] = c.d;
    r["p"] = c.p;
    r["exponent"] = c.exponent;
    r["degenerate"] = c.degenerate;
    r["G"] = G;
    return r;
  });
  return report;
}

Report cmd_witness(std::size_t n, std::size_t N, const Options& opt) {
  Json params;
  params["n"] = n;
  params["N"] = N;
  params.update(base_params(opt));
  params["field"] = "Q";
  Report report("witness", params);
  witness_nonrepresentability(n, N);  // precondition errors surface as usage errors
  run_check(report, with_params("witness", n, N, "N"), opt, [&] { return witness_result(n, N); });
  return report;
}

Report cmd_check(const std::string& suite, const Options& opt) {
  static const std::vector<std::pair<std::string, void (*)(Report&, const Options&)>> suites{
      {"sym", suite_sym}, {"groebner", suite_groebner}, {"hilb", suite_hilb}, {"prorep", suite_prorep}};
  if (suite != "all" && std::none_of(suites.begin(), suites.end(), [&](const auto& s) { return s.first == suite; })) {
    throw PreconditionViolation("unknown suite '" + suite + "'");
  }
  Json params;
  params["suite"] = suite;
  params.update(base_params(opt));
  Report report("check", params);
  for (const auto& [name, body] : suites) {
    if (suite == "all" || suite == name) body(report, opt);
  }
  return report;
}

Report cmd_enumerate(std::size_t n, const std::vector<std::string>& ideal, std::vector<std::string> vars,
                     const Options& opt) {
  if (n == 0) throw PreconditionViolation("n must be at least 1");
  if (opt.field.is_rational()) throw Unsupported("enumeration needs a finite field; pass --field Fp:<p>");
  if (vars.empty()) vars = infer_vars(ideal, {});
  Json params;
  params["n"] = n;
  params["ideal"] = ideal;
  params["vars"] = vars;
  params.update(base_params(opt));
  Report report("enumerate", params);
  const auto A = QuotientRing::from_text(vars, ideal, opt.field);
  if (!A->is_local()) throw PreconditionViolation(A->describe() + " is not a local artinian ring");
  run_check(report, "points of H_" + std::to_string(n), opt, [&] {
    const auto pts = enumerate_points(n, A);
    const std::size_t expected = ipow(maximal_ideal_elements(A).size(), n);
    std::vector<std::string> polys;
    for (const auto& pt : pts) polys.push_back(format_apoly(pt.polynomial().expand()));
    Json r = result(pts.size() == expected);
    r["ring"] = A->describe();
    r["count"] = pts.size();
    r["|m_A|^n"] = expected;
    r["points"] = polys;
    return r;
  });
  return report;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact constructions and checks for the punctual Hilbert functor of the line", "hilb"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  std::string field = "Q";
  app.add_flag("--json", opt.json, "Emit one JSON document instead of text");
  app.add_option("--seed", opt.seed, "Seed for randomized suites")->capture_default_str();
  app.add_option("--budget", opt.budget, "Groebner step budget")->capture_default_str();
  app.add_option("--field", field, "Coefficient field: Q or Fp:<p>")->capture_default_str();
  app.add_flag("--timings", opt.timings, "Add elapsed milliseconds to each result");

  std::size_t n = 0, m = 0, N = 0;
  std::string suite = "all";
  std::string ideal_text, coeffs_text, vars_text;

  auto* hnm = app.add_subcommand("hnm", "Presentation of H_{n,m} and its universal family");
  hnm->add_option("-n", n, "Degree n >= 1")->required();
  hnm->add_option("-m", m, "Level m >= 0")->required();

  auto* minexp = app.add_subcommand("minexp", "Minimal N with x^N in (x^n - u x^{n-1}) over k[u]/(u^{2^{m+1}})");
  minexp->add_option("-n", n, "Degree n >= 1")->required();
  minexp->add_option("-m", m, "Level m >= 0")->required();

  auto* cofactor = app.add_subcommand("cofactor", "Explicit G with F G = x^E for nilpotent coefficients");
  cofactor->add_option("--ideal", ideal_text, "Comma separated generators of the ideal presenting A");
  cofactor->add_option("--coeffs", coeffs_text, "Comma separated u_1..u_n")->required();
  cofactor->add_option("--vars", vars_text, "Comma separated variables of A (inferred when omitted)");

  auto* witness = app.add_subcommand("witness", "Family over k[u]/(u^{2^{m+1}}) escaping the truncation x^N");
  witness->add_option("-n", n, "Degree n >= 1")->required();
  witness->add_option("-N", N, "Truncation exponent N >= n")->required();

  auto* check = app.add_subcommand("check", "Run property suites");
  check->add_option("--suite", suite, "all, sym, groebner, hilb or prorep")
      ->check(CLI::IsMember({"all", "sym", "groebner", "hilb", "prorep"}))
      ->capture_default_str();

  auto* enumerate = app.add_subcommand("enumerate", "All points of H_n(A) for finite local A");
  enumerate->add_option("-n", n, "Degree n >= 1")->required();
  ideal_text = "";
  enumerate->add_option("--ideal", ideal_text, "Comma separated generators of the ideal presenting A (default u^2)");
  enumerate->add_option("--vars", vars_text, "Comma separated variables of A (inferred when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }

  auto list = [](const std::string& text) { return text.empty() ? std::vector<std::string>{} : split_list(text); };
  std::string command = app.get_subcommands().front()->get_name();
  try {
    opt.field = Domain::parse(field);
    std::optional<Report> report;
    if (*hnm) {
      report = cmd_hnm(n, m, opt);
    } else if (*minexp) {
      report = cmd_minexp(n, m, opt);
    } else if (*cofactor) {
      report = cmd_cofactor(list(ideal_text), list(coeffs_text), list(vars_text), opt);
    } else if (*witness) {
      report = cmd_witness(n, N, opt);
    } else if (*check) {
      report = cmd_check(suite, opt);
    } else {
      report = cmd_enumerate(n, ideal_text.empty() ? std::vector<std::string>{"u^2"} : list(ideal_text), list(vars_text),
                             opt);
    }
    if (opt.json) {
      out << report->to_json().dump(2) << "\n";
    } else {
      out << report->to_text();
    }
    if (!report->pass()) {
      const Json* f = report->first_failure();
      err << "hilb: check failed: " << f->value("check", std::string("?"));
      if (f->contains("detail")) err << ": " << render((*f)["detail"]);
      err << "\n";
      return kFail;
    }
    return kPass;
  } catch (const BudgetExceeded& e) {
    err << "hilb: budget exhausted: " << e.what() << "\n";
    return kBudget;
  } catch (const VerificationFailure& e) {
    err << "hilb: verification failed: " << e.what() << "\n";
    return kFail;
  } catch (const Error& e) {
    err << "hilb: " << command << ": " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "hilb: " << command << ": " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "hilb: " << command << ": " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace hilb::cli
