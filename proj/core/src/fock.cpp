#include "hvlie/fock.hpp"

#include "text_cursor.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>

namespace hvlie {
namespace {

using Json = nlohmann::ordered_json;

void check_monomial(const FockMonomial& w) {
  for (std::int64_t k : w.a) {
    if (k > 0) throw std::invalid_argument("monomial a-index must be <= 0");
  }
  for (std::int64_t k : w.astar) {
    if (k >= 0) throw std::invalid_argument("monomial a*-index must be < 0");
  }
}

FockVector apply_f_impl(std::int64_t m, std::int64_t n, const FockVector& v) {
  if (n < 0) throw std::invalid_argument("apply_f: power must be >= 0");
  FockVector out;
  for (const auto& [w, c] : v.terms()) {
    for (std::int64_t i : f_candidate_indices(m, w)) {
      Rational coeff = c * Rational(ipow(BigInt(-i), n));
      if (coeff == 0) continue;
      FockVector part = apply_normal_ordered_pair(m - i, i, FockVector::term(w, coeff));
      out += part;
    }
  }
  return out;
}

FockVector closed_form_rhs(std::int64_t m1, std::int64_t n1, std::int64_t m2,
                           std::int64_t n2, const FockVector& v, bool flip_phi) {
  FockVector rhs;
  for (std::int64_t i = 0; i <= n1; ++i) {
    Rational c = Rational(binomial(n1, i) * ipow(BigInt(m2), i));
    if (c != 0) rhs += c * apply_f_impl(m1 + m2, n1 + n2 - i, v);
  }
  for (std::int64_t j = 0; j <= n2; ++j) {
    Rational c = Rational(binomial(n2, j) * ipow(BigInt(m1), j));
    if (c != 0) rhs -= c * apply_f_impl(m1 + m2, n1 + n2 - j, v);
  }
  Rational anomaly = phi(m1, n1, m2, n2);
  if (flip_phi) anomaly = -anomaly;
  rhs += anomaly * v;
  return rhs;
}

FockVector residual_impl(std::int64_t m1, std::int64_t n1, std::int64_t m2,
                         std::int64_t n2, const FockVector& v, bool flip_phi) {
  FockVector lhs = apply_f_impl(m1, n1, apply_f_impl(m2, n2, v));
  lhs -= apply_f_impl(m2, n2, apply_f_impl(m1, n1, v));
  return lhs - closed_form_rhs(m1, n1, m2, n2, v, flip_phi);
}

}  // namespace

std::string to_text(const WeylSymbol& g) {
  return std::string(g.star ? "a*(" : "a(") + std::to_string(g.index) + ")";
}

FockVector FockVector::term(FockMonomial w, const Rational& c) {
  check_monomial(w);
  std::sort(w.a.begin(), w.a.end());
  std::sort(w.astar.begin(), w.astar.end());
  FockVector out;
  out.add_term(w, c);
  return out;
}

Rational FockVector::coeff(const FockMonomial& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

void FockVector::add_term(const FockMonomial& w, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

FockVector& FockVector::operator+=(const FockVector& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

FockVector& FockVector::operator-=(const FockVector& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

FockVector& FockVector::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

FockVector apply_generator(const WeylSymbol& g, const FockMonomial& w) {
  FockVector out;
  if (g.is_creation()) {
    FockMonomial m = w;
    auto& part = g.star ? m.astar : m.a;
    part.insert(std::upper_bound(part.begin(), part.end(), g.index), g.index);
    out.add_term(m, 1);
    return out;
  }
  // Annihilation: a*(i) contracts a(-i) with +1, a(i) contracts a*(-i)
  // with -1, once per matching factor.
  const auto& part = g.star ? w.a : w.astar;
  std::int64_t partner = -g.index;
  auto lo = std::lower_bound(part.begin(), part.end(), partner);
  auto hi = std::upper_bound(part.begin(), part.end(), partner);
  std::int64_t mult = hi - lo;
  if (mult == 0) return out;
  FockMonomial m = w;
  auto& mpart = g.star ? m.a : m.astar;
  mpart.erase(mpart.begin() + (lo - part.begin()));
  out.add_term(m, Rational(g.star ? mult : -mult));
  return out;
}

FockVector apply_generator(const WeylSymbol& g, const FockVector& v) {
  FockVector out;
  for (const auto& [w, c] : v.terms()) {
    FockVector part = apply_generator(g, w);
    part *= c;
    out += part;
  }
  return out;
}

FockVector apply_normal_ordered_pair(std::int64_t n, std::int64_t m, const FockVector& v) {
  if (n <= m) {
    return apply_generator(WeylSymbol::a(n), apply_generator(WeylSymbol::astar(m), v));
  }
  return apply_generator(WeylSymbol::astar(m), apply_generator(WeylSymbol::a(n), v));
}

std::vector<std::int64_t> f_candidate_indices(std::int64_t m, const FockMonomial& w) {
  std::set<std::int64_t> out;
  for (std::int64_t i = m; i <= -1; ++i) out.insert(i);  // both factors creation
  for (std::int64_t k : w.a) out.insert(-k);
  for (std::int64_t b : w.astar) out.insert(m + b);
  return {out.begin(), out.end()};
}

FockVector apply_f(std::int64_t m, std::int64_t n, const FockVector& v) {
  return apply_f_impl(m, n, v);
}

Rational phi(std::int64_t m1, std::int64_t n1, std::int64_t m2, std::int64_t n2) {
  if (n1 < 0 || n2 < 0) throw std::invalid_argument("phi: powers must be >= 0");
  if (m1 == 0 || m1 + m2 != 0) return 0;
  BigInt sum = 0;
  if (m1 > 0) {
    for (std::int64_t i = 1; i <= m1; ++i) {
      sum += ipow(BigInt(m1 - i), n1) * ipow(BigInt(i), n2);
    }
    if (n1 % 2 == 0) sum = -sum;  // sign (-1)^(n1+1)
  } else {
    // Exponents trade places on this side; that is what makes the whole
    // anomaly antisymmetric against the m1 > 0 branch.
    for (std::int64_t i = m1; i <= -1; ++i) {
      sum += ipow(BigInt(m1 - i), n2) * ipow(BigInt(i), n1);
    }
    if (n1 % 2 == 1) sum = -sum;  // sign (-1)^n1
  }
  return Rational(sum);
}

FockVector commutator_residual_f(std::int64_t m1, std::int64_t n1, std::int64_t m2,
                                 std::int64_t n2, const FockVector& v) {
  return residual_impl(m1, n1, m2, n2, v, false);
}

CentralCharges fock_central_charges() {
  return {Rational(2), Rational(1), make_rational(1, 2)};
}

CentralCharges stated_central_charges() {
  return {Rational(1), Rational(2), make_rational(1, 2)};
}

FockVector pi_apply(const AlgebraElement& x, const FockVector& v) {
  return pi_apply(x, v, fock_central_charges());
}

FockVector pi_apply(const AlgebraElement& x, const FockVector& v,
                    const CentralCharges& charges) {
  FockVector out;
  for (const auto& [s, c] : x.terms()) {
    FockVector part;
    switch (s.tag) {
      case SymbolTag::L: part = apply_f(s.index, 1, v); break;
      case SymbolTag::I: part = apply_f(s.index, 0, v); break;
      case SymbolTag::CL: part = charges.cl * v; break;
      case SymbolTag::CI: part = charges.ci * v; break;
      case SymbolTag::CLI: part = charges.cli * v; break;
    }
    out += c * part;
  }
  return out;
}

FockVector fock_rep_residual(const AlgebraElement& x, const AlgebraElement& y,
                             const FockVector& v, const CentralCharges& charges) {
  FockVector lhs = pi_apply(bracket(x, y), v, charges);
  FockVector rhs = pi_apply(x, pi_apply(y, v, charges), charges);
  rhs -= pi_apply(y, pi_apply(x, v, charges), charges);
  return lhs - rhs;
}

std::int64_t t_degree(const FockVector& v) {
  if (v.is_zero()) throw std::domain_error("t_degree: zero vector has no degree");
  std::int64_t deg = v.terms().begin()->first.t_degree();
  for (const auto& [w, c] : v.terms()) {
    if (w.t_degree() != deg) {
      throw std::domain_error("t_degree: mixed degrees " + std::to_string(deg) +
                              " and " + std::to_string(w.t_degree()));
    }
  }
  return deg;
}

std::string to_text(const FockMonomial& w) {
  std::string out = "[";
  for (std::int64_t k : w.a) out += "a(" + std::to_string(k) + ")";
  out += "|";
  for (std::int64_t k : w.astar) out += "a*(" + std::to_string(k) + ")";
  return out + "]";
}

std::string to_text(const FockVector& v) {
  if (v.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : v.terms()) {
    if (first) {
      out += rational_to_string(c);
      first = false;
    } else {
      out += c < 0 ? " - " : " + ";
      out += rational_to_string(abs(c));
    }
    out += "*" + to_text(w);
  }
  return out;
}

FockVector parse_fock_vector(const std::string& text) {
  detail::Cursor c{text};
  c.skip_ws();
  if (c.lookahead("0") && c.pos + 1 == c.s.size()) return FockVector::zero();
  FockVector out;
  bool negate = false;
  for (;;) {
    Rational coeff = parse_rational(c.read_number_token());
    if (negate) coeff = -coeff;
    if (!c.eat('*')) c.fail("expected '*'");
    if (!c.eat('[')) c.fail("expected '['");
    FockMonomial w;
    while (!c.eat('|')) {
      if (!c.eat_lit("a(")) c.fail("expected 'a(' or '|'");
      w.a.push_back(c.read_int());
      if (!c.eat(')')) c.fail("expected ')'");
    }
    while (!c.eat(']')) {
      if (!c.eat_lit("a*(")) c.fail("expected 'a*(' or ']'");
      w.astar.push_back(c.read_int());
      if (!c.eat(')')) c.fail("expected ')'");
    }
    out += FockVector::term(std::move(w), coeff);
    c.skip_ws();
    if (c.pos == c.s.size()) break;
    if (c.eat('+')) {
      negate = false;
    } else if (c.eat('-')) {
      negate = true;
    } else {
      c.fail("expected '+' or '-'");
    }
    c.skip_ws();
  }
  return out;
}

std::string to_json_string(const FockVector& v) {
  Json arr = Json::array();
  for (const auto& [w, c] : v.terms()) {
    Json t;
    t["a"] = w.a;
    t["astar"] = w.astar;
    t["num"] = numerator_string(c);
    t["den"] = denominator_string(c);
    arr.push_back(std::move(t));
  }
  return arr.dump();
}

FockVector fock_vector_from_json(const std::string& json) {
  Json arr = Json::parse(json);
  if (!arr.is_array()) throw std::invalid_argument("state JSON: expected array");
  FockVector out;
  for (const auto& t : arr) {
    FockMonomial w;
    w.a = t.at("a").get<std::vector<std::int64_t>>();
    w.astar = t.at("astar").get<std::vector<std::int64_t>>();
    Rational c = make_rational(BigInt(t.at("num").get<std::string>()),
                               BigInt(t.at("den").get<std::string>()));
    out += FockVector::term(std::move(w), c);
  }
  return out;
}

namespace selftest {

FockVector commutator_residual_phi_defect(std::int64_t m1, std::int64_t n1,
                                          std::int64_t m2, std::int64_t n2,
                                          const FockVector& v) {
  return residual_impl(m1, n1, m2, n2, v, true);
}

}  // namespace selftest

}  // namespace hvlie
