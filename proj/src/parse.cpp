#include "hilb/parse.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "hilb/errors.hpp"

namespace hilb {
namespace {

bool name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; }
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

struct RawFactor {
  std::string name;  // empty for a numeric coefficient
  Rational value;
  unsigned exponent = 1;
};

struct RawTerm {
  bool negative = false;
  std::vector<RawFactor> factors;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<RawTerm> parse() {
    std::vector<RawTerm> terms;
    skip_ws();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    bool first = true;
    while (!at_end()) {
      RawTerm term;
      if (peek() == '+' || peek() == '-') {
        term.negative = peek() == '-';
        ++pos_;
        skip_ws();
      } else if (!first) {
        throw ParseError(std::string("expected '+' or '-' but found '") + peek() + "'", pos_);
      }
      first = false;
      term.factors.push_back(factor());
      while (true) {
        skip_ws();
        if (at_end() || peek() == '+' || peek() == '-') break;
        if (peek() == '*') {
          ++pos_;
          skip_ws();
        } else if (!name_start(peek()) && !digit(peek())) {
          throw ParseError(std::string("unexpected character '") + peek() + "'", pos_);
        }
        term.factors.push_back(factor());
      }
      terms.push_back(std::move(term));
    }
    return terms;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  std::string digits() {
    std::size_t start = pos_;
    while (!at_end() && digit(peek())) ++pos_;
    if (start == pos_) throw ParseError("expected digits", pos_);
    return std::string(text_.substr(start, pos_ - start));
  }

  RawFactor factor() {
    if (at_end()) throw ParseError("unexpected end of input", pos_);
    RawFactor f;
    if (digit(peek())) {
      std::string num = digits();
      skip_ws();
      if (!at_end() && peek() == '/') {
        ++pos_;
        skip_ws();
        std::size_t at = pos_;
        std::string den = digits();
        if (den.find_first_not_of('0') == std::string::npos) throw ParseError("zero denominator", at);
        num += "/" + den;
      }
      f.value = Rational::from_string(num);
      return f;
    }
    if (!name_start(peek())) throw ParseError(std::string("unexpected character '") + peek() + "'", pos_);
    std::size_t start = pos_;
    while (!at_end() && name_char(peek())) ++pos_;
    f.name = normalize_variable(text_.substr(start, pos_ - start));
    skip_ws();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_ws();
      std::size_t at = pos_;
      std::string e = digits();
      if (e.size() > 9) throw ParseError("exponent too large", at);
      f.exponent = unsigned(std::stoul(e));
    }
    return f;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

MultiPoly build(const std::vector<RawTerm>& raw, const RingPtr& ring, std::string_view text) {
  std::vector<Term> terms;
  terms.reserve(raw.size());
  for (const auto& rt : raw) {
    Rational c = rt.negative ? Rational(-1) : Rational(1);
    Monomial m(ring->nvars());
    for (const auto& f : rt.factors) {
      if (f.name.empty()) {
        c *= f.value;
        continue;
      }
      auto idx = ring->index_of(f.name);
      if (!idx) {
        throw ParseError("unknown variable '" + f.name + "'", text.find(f.name) == std::string_view::npos
                                                                    ? 0
                                                                    : text.find(f.name));
      }
      m.set(*idx, m[*idx] + f.exponent);
    }
    terms.push_back({m, Coeff::from_rational(c, ring->domain())});
  }
  return MultiPoly::from_terms(ring, std::move(terms));
}

void append_monomial(std::string& out, const Monomial& m, const std::vector<std::string>& vars) {
  bool first = true;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (m[i] == 0) continue;
    if (!first) out += '*';
    first = false;
    out += vars[i];
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
}

}  // namespace

std::string normalize_variable(std::string_view name) {
  auto us = name.find('_');
  if (us != std::string_view::npos && us > 0 && us + 1 < name.size() && name.find('_', us + 1) == std::string_view::npos &&
      std::all_of(name.begin() + long(us) + 1, name.end(), digit) &&
      std::all_of(name.begin(), name.begin() + long(us), [](char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; })) {
    return std::string(name.substr(0, us)) + std::string(name.substr(us + 1));
  }
  return std::string(name);
}

bool natural_less(const std::string& a, const std::string& b) {
  auto split = [](const std::string& s) {
    std::size_t k = s.size();
    while (k > 0 && digit(s[k - 1])) --k;
    return std::pair<std::string, std::string>(s.substr(0, k), s.substr(k));
  };
  auto [pa, na] = split(a);
  auto [pb, nb] = split(b);
  if (pa != pb) return pa < pb;
  if (na.size() != nb.size()) return na.size() < nb.size();
  return na < nb;
}

std::vector<std::string> scan_variables(std::string_view text) {
  std::set<std::string> names;
  std::size_t i = 0;
  while (i < text.size()) {
    if (digit(text[i])) {
      while (i < text.size() && digit(text[i])) ++i;
    } else if (name_start(text[i])) {
      std::size_t start = i;
      while (i < text.size() && name_char(text[i])) ++i;
      names.insert(normalize_variable(text.substr(start, i - start)));
    } else {
      ++i;
    }
  }
  std::vector<std::string> out(names.begin(), names.end());
  std::sort(out.begin(), out.end(), natural_less);
  return out;
}

MultiPoly parse_poly(std::string_view text, const RingPtr& ring) {
  Lexer lexer(text);
  return build(lexer.parse(), ring, text);
}

MultiPoly parse_poly(std::string_view text, Domain domain) {
  Lexer lexer(text);
  auto raw = lexer.parse();
  return build(raw, PolyRing::make(scan_variables(text), domain), text);
}

std::string format_poly(const MultiPoly& f) {
  if (f.is_zero()) return "0";
  const auto& vars = f.ring()->vars();
  const std::size_t n = vars.size();
  std::vector<const Term*> order;
  order.reserve(f.size());
  for (const auto& t : f.terms()) order.push_back(&t);
  std::sort(order.begin(), order.end(),
            [&](const Term* a, const Term* b) { return degrevlex_compare(a->mono, b->mono, 0, n) > 0; });
  std::string out;
  bool first = true;
  for (const Term* t : order) {
    bool negative = t->coeff.prints_negative();
    Coeff magnitude = negative ? -t->coeff : t->coeff;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (t->mono.is_one()) {
      out += magnitude.to_string();
      continue;
    }
    if (!magnitude.is_one()) out += magnitude.to_string() + "*";
    append_monomial(out, t->mono, vars);
  }
  return out;
}

}  // namespace hilb
