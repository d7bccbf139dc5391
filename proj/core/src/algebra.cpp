#include "hvlie/algebra.hpp"

#include "text_cursor.hpp"

#include <json.hpp>

#include <cctype>

namespace hvlie {
namespace {

using Json = nlohmann::ordered_json;

// (m^3 - m)/12, exact.
Rational ll_cocycle(std::int64_t m) {
  BigInt b(m);
  return make_rational(b * b * b - b, 12);
}

// m^2 - m.
Rational li_cocycle(std::int64_t m) {
  BigInt b(m);
  return Rational(b * b - b);
}

AlgebraElement bracket_ordered(const BasisSymbol& x, const BasisSymbol& y) {
  AlgebraElement out;
  std::int64_t m = x.index, n = y.index;
  if (x.tag == SymbolTag::L && y.tag == SymbolTag::L) {
    out.add_term(BasisSymbol::L(m + n), Rational(n - m));
    if (m + n == 0) out.add_term(BasisSymbol::CL(), ll_cocycle(m));
  } else if (x.tag == SymbolTag::L && y.tag == SymbolTag::I) {
    out.add_term(BasisSymbol::I(m + n), Rational(n));
    if (m + n == 0) out.add_term(BasisSymbol::CLI(), li_cocycle(m));
  } else {  // I-I
    if (m + n == 0) out.add_term(BasisSymbol::CI(), Rational(n));
  }
  return out;
}

AlgebraElement bracket_basis(const BasisSymbol& x, const BasisSymbol& y,
                             bool defect) {
  if (x.is_central() || y.is_central() || x == y) return {};
  if (defect) {
    // Direct evaluation in the given order, [L, L] cocycle sign flipped when
    // the first index is positive. No antisymmetric completion, so the
    // central part of [L(m), L(-m)] + [L(-m), L(m)] no longer cancels.
    if (x.tag == SymbolTag::I && y.tag == SymbolTag::L) {
      return -bracket_ordered(y, x);
    }
    std::int64_t m = x.index, n = y.index;
    if (x.tag == SymbolTag::L && y.tag == SymbolTag::L) {
      AlgebraElement out;
      out.add_term(BasisSymbol::L(m + n), Rational(n - m));
      if (m + n == 0) {
        Rational c = ll_cocycle(m);
        if (m > 0) c = -c;
        out.add_term(BasisSymbol::CL(), c);
      }
      return out;
    }
    return bracket_ordered(x, y);  // L-I and I-I are order-agnostic
  }
  if (y < x) return -bracket_basis(y, x, false);
  return bracket_ordered(x, y);
}

AlgebraElement bracket_bilinear(const AlgebraElement& x, const AlgebraElement& y,
                                bool defect) {
  AlgebraElement out;
  for (const auto& [sx, cx] : x.terms()) {
    for (const auto& [sy, cy] : y.terms()) {
      AlgebraElement b = bracket_basis(sx, sy, defect);
      b *= cx * cy;
      out += b;
    }
  }
  return out;
}

AlgebraElement jacobi_sum(const AlgebraElement& x, const AlgebraElement& y,
                          const AlgebraElement& z, bool defect) {
  AlgebraElement out = bracket_bilinear(bracket_bilinear(x, y, defect), z, defect);
  out += bracket_bilinear(bracket_bilinear(y, z, defect), x, defect);
  out += bracket_bilinear(bracket_bilinear(z, x, defect), y, defect);
  return out;
}

using detail::Cursor;

BasisSymbol parse_symbol(Cursor& c) {
  if (c.s.compare(c.pos, 3, "CLI") == 0) {
    c.pos += 3;
    return BasisSymbol::CLI();
  }
  if (c.s.compare(c.pos, 2, "CL") == 0) {
    c.pos += 2;
    return BasisSymbol::CL();
  }
  if (c.s.compare(c.pos, 2, "CI") == 0) {
    c.pos += 2;
    return BasisSymbol::CI();
  }
  if (c.pos < c.s.size() && (c.s[c.pos] == 'L' || c.s[c.pos] == 'I')) {
    SymbolTag tag = c.s[c.pos] == 'L' ? SymbolTag::L : SymbolTag::I;
    ++c.pos;
    if (!c.eat('(')) c.fail("expected '('");
    std::int64_t idx = c.read_int();
    if (!c.eat(')')) c.fail("expected ')'");
    return {tag, idx};
  }
  c.fail("expected basis symbol");
}

const char* tag_name(SymbolTag t) {
  switch (t) {
    case SymbolTag::L: return "L";
    case SymbolTag::I: return "I";
    case SymbolTag::CL: return "CL";
    case SymbolTag::CI: return "CI";
    case SymbolTag::CLI: return "CLI";
  }
  return "?";
}

SymbolTag tag_from_name(const std::string& name) {
  if (name == "L") return SymbolTag::L;
  if (name == "I") return SymbolTag::I;
  if (name == "CL") return SymbolTag::CL;
  if (name == "CI") return SymbolTag::CI;
  if (name == "CLI") return SymbolTag::CLI;
  throw std::invalid_argument("unknown symbol tag \"" + name + "\"");
}

}  // namespace

AlgebraElement AlgebraElement::term(BasisSymbol s, const Rational& c) {
  AlgebraElement out;
  out.add_term(s, c);
  return out;
}

Rational AlgebraElement::coeff(const BasisSymbol& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? Rational(0) : it->second;
}

void AlgebraElement::add_term(const BasisSymbol& s, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(s, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  for (const auto& [s, c] : o.terms_) add_term(s, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  for (const auto& [s, c] : o.terms_) add_term(s, -c);
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [s, v] : terms_) v *= c;
  return *this;
}

AlgebraElement bracket(const BasisSymbol& x, const BasisSymbol& y) {
  return bracket_basis(x, y, false);
}

AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y) {
  return bracket_bilinear(x, y, false);
}

AlgebraElement jacobi_residual(const AlgebraElement& x, const AlgebraElement& y,
                               const AlgebraElement& z) {
  return jacobi_sum(x, y, z, false);
}

std::int64_t grade(const AlgebraElement& x) {
  if (x.is_zero()) throw std::domain_error("grade: zero element has no degree");
  std::int64_t deg = x.terms().begin()->first.degree();
  for (const auto& [s, c] : x.terms()) {
    if (s.degree() != deg) {
      throw std::domain_error("grade: mixed degrees " + std::to_string(deg) +
                              " and " + std::to_string(s.degree()));
    }
  }
  return deg;
}

std::string to_text(const BasisSymbol& s) {
  std::string out = tag_name(s.tag);
  if (!s.is_central()) out += "(" + std::to_string(s.index) + ")";
  return out;
}

std::string to_text(const AlgebraElement& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [s, c] : x.terms()) {
    if (first) {
      out += rational_to_string(c);
      first = false;
    } else {
      out += c < 0 ? " - " : " + ";
      out += rational_to_string(abs(c));
    }
    out += "*" + to_text(s);
  }
  return out;
}

AlgebraElement parse_algebra_element(const std::string& text) {
  Cursor c{text};
  c.skip_ws();
  if (c.s.compare(c.pos, 1, "0") == 0 && c.pos + 1 == c.s.size()) {
    return AlgebraElement::zero();
  }
  AlgebraElement out;
  bool negate = false;
  for (;;) {
    Rational coeff = parse_rational(c.read_number_token());
    if (negate) coeff = -coeff;
    if (!c.eat('*')) c.fail("expected '*'");
    out.add_term(parse_symbol(c), coeff);
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

std::string to_json_string(const AlgebraElement& x) {
  Json arr = Json::array();
  for (const auto& [s, c] : x.terms()) {
    Json t;
    t["tag"] = tag_name(s.tag);
    if (!s.is_central()) t["index"] = s.index;
    t["num"] = numerator_string(c);
    t["den"] = denominator_string(c);
    arr.push_back(std::move(t));
  }
  return arr.dump();
}

AlgebraElement algebra_element_from_json(const std::string& json) {
  Json arr = Json::parse(json);
  if (!arr.is_array()) throw std::invalid_argument("element JSON: expected array");
  AlgebraElement out;
  for (const auto& t : arr) {
    SymbolTag tag = tag_from_name(t.at("tag").get<std::string>());
    BasisSymbol s{tag, 0};
    if (t.contains("index")) {
      if (s.is_central()) throw std::invalid_argument("element JSON: index on central symbol");
      s.index = t.at("index").get<std::int64_t>();
    } else if (!s.is_central()) {
      throw std::invalid_argument("element JSON: missing index");
    }
    Rational c = make_rational(BigInt(t.at("num").get<std::string>()),
                               BigInt(t.at("den").get<std::string>()));
    out.add_term(s, c);
  }
  return out;
}

namespace selftest {

AlgebraElement bracket_defect(const BasisSymbol& x, const BasisSymbol& y) {
  return bracket_basis(x, y, true);
}

AlgebraElement bracket_defect(const AlgebraElement& x, const AlgebraElement& y) {
  return bracket_bilinear(x, y, true);
}

AlgebraElement jacobi_residual_defect(const AlgebraElement& x, const AlgebraElement& y,
                                      const AlgebraElement& z) {
  return jacobi_sum(x, y, z, true);
}

}  // namespace selftest

}  // namespace hvlie
