#pragma once

#include "hvlie/rational.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <string>

namespace hvlie {

/// Basis of the twisted Heisenberg-Virasoro algebra: Witt-type generators
/// L(m), Heisenberg generators I(m), and the three central elements.
enum class SymbolTag : int { L = 0, I = 1, CL = 2, CI = 3, CLI = 4 };

struct BasisSymbol {
  SymbolTag tag;
  std::int64_t index;  // 0 for central symbols

  static BasisSymbol L(std::int64_t m) { return {SymbolTag::L, m}; }
  static BasisSymbol I(std::int64_t m) { return {SymbolTag::I, m}; }
  static BasisSymbol CL() { return {SymbolTag::CL, 0}; }
  static BasisSymbol CI() { return {SymbolTag::CI, 0}; }
  static BasisSymbol CLI() { return {SymbolTag::CLI, 0}; }

  bool is_central() const { return tag >= SymbolTag::CL; }
  std::int64_t degree() const { return is_central() ? 0 : index; }

  auto operator<=>(const BasisSymbol&) const = default;
};

std::string to_text(const BasisSymbol& s);

/// Finite rational linear combination of basis symbols, kept canonical:
/// no zero coefficients, terms ordered by (tag, index).
class AlgebraElement {
 public:
  AlgebraElement() = default;

  static AlgebraElement zero() { return {}; }
  static AlgebraElement term(BasisSymbol s, const Rational& c);
  static AlgebraElement basis(BasisSymbol s) { return term(s, 1); }

  const std::map<BasisSymbol, Rational>& terms() const { return terms_; }
  Rational coeff(const BasisSymbol& s) const;
  bool is_zero() const { return terms_.empty(); }

  void add_term(const BasisSymbol& s, const Rational& c);

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement& operator*=(const Rational& c);

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(AlgebraElement a, const Rational& c) { return a *= c; }
  friend AlgebraElement operator*(const Rational& c, AlgebraElement a) { return a *= c; }
  friend AlgebraElement operator-(AlgebraElement a) { return a *= Rational(-1); }

  bool operator==(const AlgebraElement&) const = default;

 private:
  std::map<BasisSymbol, Rational> terms_;
};

/// Structure constants on basis pairs, extended bilinearly below. Defined on
/// ordered pairs (L before I, lower index first) and completed by
/// antisymmetry, so [x, x] = 0 holds by construction.
AlgebraElement bracket(const BasisSymbol& x, const BasisSymbol& y);
AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y);

/// [[x,y],z] + [[y,z],x] + [[z,x],y]; zero iff the triple satisfies Jacobi.
AlgebraElement jacobi_residual(const AlgebraElement& x, const AlgebraElement& y,
                               const AlgebraElement& z);

/// Common degree of all terms (deg L(m) = deg I(m) = m, centrals 0).
/// Throws std::domain_error on the zero element or mixed-degree input.
std::int64_t grade(const AlgebraElement& x);

/// Canonical text form, e.g. "-4*L(0) + 1/2*CL". Round-trips bit-exact.
std::string to_text(const AlgebraElement& x);
AlgebraElement parse_algebra_element(const std::string& text);

/// JSON array of terms with decimal-string num/den; index omitted for
/// central symbols. Round-trips bit-exact.
std::string to_json_string(const AlgebraElement& x);
AlgebraElement algebra_element_from_json(const std::string& json);

namespace selftest {

/// Deliberately defective bracket for harness self-tests: the [L, L] central
/// cocycle sign is flipped when the lower index is positive, which breaks the
/// 2-cocycle condition (a global flip would not).
AlgebraElement bracket_defect(const BasisSymbol& x, const BasisSymbol& y);
AlgebraElement bracket_defect(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement jacobi_residual_defect(const AlgebraElement& x, const AlgebraElement& y,
                                      const AlgebraElement& z);

}  // namespace selftest

}  // namespace hvlie
