#pragma once

#include "hvlie/algebra.hpp"
#include "hvlie/rational.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace hvlie {

/// One Weyl-algebra generator, a(index) or a*(index) when star is set.
/// Commutation: [a(n), a*(m)] = -delta_{n+m,0}, all other pairs commute.
/// Acting on the vacuum: a(n) annihilates for n > 0, a*(m) annihilates for
/// m >= 0; the rest are creation operators.
struct WeylSymbol {
  bool star;
  std::int64_t index;

  static WeylSymbol a(std::int64_t n) { return {false, n}; }
  static WeylSymbol astar(std::int64_t n) { return {true, n}; }

  bool is_creation() const { return star ? index < 0 : index <= 0; }

  auto operator<=>(const WeylSymbol&) const = default;
};

std::string to_text(const WeylSymbol& g);

/// Product of creation operators applied to the vacuum, stored as the two
/// sorted index multisets. Invariants: a entries <= 0, astar entries < 0,
/// both non-decreasing.
struct FockMonomial {
  std::vector<std::int64_t> a;
  std::vector<std::int64_t> astar;

  static FockMonomial vacuum() { return {}; }

  /// Eigenvalue of the degree operator f(0,0): #a - #astar.
  std::int64_t t_degree() const {
    return static_cast<std::int64_t>(a.size()) - static_cast<std::int64_t>(astar.size());
  }

  auto operator<=>(const FockMonomial&) const = default;
};

/// Finite rational combination of monomials, canonical (no zero coefficients).
class FockVector {
 public:
  FockVector() = default;

  static FockVector zero() { return {}; }
  static FockVector vacuum() { return term(FockMonomial::vacuum(), 1); }
  static FockVector term(FockMonomial w, const Rational& c);

  const std::map<FockMonomial, Rational>& terms() const { return terms_; }
  Rational coeff(const FockMonomial& w) const;
  bool is_zero() const { return terms_.empty(); }

  void add_term(const FockMonomial& w, const Rational& c);

  FockVector& operator+=(const FockVector& o);
  FockVector& operator-=(const FockVector& o);
  FockVector& operator*=(const Rational& c);

  friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
  friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
  friend FockVector operator*(FockVector a, const Rational& c) { return a *= c; }
  friend FockVector operator*(const Rational& c, FockVector a) { return a *= c; }
  friend FockVector operator-(FockVector a) { return a *= Rational(-1); }

  bool operator==(const FockVector&) const = default;

 private:
  std::map<FockMonomial, Rational> terms_;
};

/// One generator acting on a state. Creation inserts an index; annihilation
/// contracts against every matching factor (multiplicity times +1 for a*
/// against a, -1 for a against a*) and kills the rest of the product.
FockVector apply_generator(const WeylSymbol& g, const FockMonomial& w);
FockVector apply_generator(const WeylSymbol& g, const FockVector& v);

/// :a(n)a*(m): v, the pair in normal order (a(n) left iff n <= m).
FockVector apply_normal_ordered_pair(std::int64_t n, std::int64_t m, const FockVector& v);

/// The contraction indices through which f(m, n) = sum_i (-i)^n :a(m-i)a*(i):
/// can act on w with a nonzero term. Exact and finite: a term survives only
/// if both factors are creation operators, which pins i to the window
/// [m, -1] (nonempty only for m < 0), or if each annihilation factor
/// contracts an original factor of w; normal ordering applies annihilation
/// first, so a factor created by the same term is never a contraction
/// partner. That gives i in {-k : k in w.a} for the a*(i) slot and
/// i in {m + b : b in w.astar} for the a(m-i) slot, and nothing else.
std::vector<std::int64_t> f_candidate_indices(std::int64_t m, const FockMonomial& w);

/// f(m, n) acting on a state, n >= 0.
FockVector apply_f(std::int64_t m, std::int64_t n, const FockVector& v);

/// Anomaly of [f(m1,n1), f(m2,n2)]: supported on m1 + m2 = 0, piecewise sum
/// over the contraction window, with 0^0 = 1.
Rational phi(std::int64_t m1, std::int64_t n1, std::int64_t m2, std::int64_t n2);

/// [f(m1,n1), f(m2,n2)] v minus its closed form (binomial recombination plus
/// the anomaly times v). Zero for every state iff the closed form is right.
FockVector commutator_residual_f(std::int64_t m1, std::int64_t n1, std::int64_t m2,
                                 std::int64_t n2, const FockVector& v);

/// Central charge triple (C_L, C_I, C_LI) of a module.
struct CentralCharges {
  Rational cl, ci, cli;

  bool operator==(const CentralCharges&) const = default;
};

/// Charges the Fock representation actually has: (2, 1, 1/2), recovered from
/// the anomaly values phi(m,1,-m,1), phi(m,0,-m,0), phi(m,1,-m,0).
CentralCharges fock_central_charges();

/// The commonly quoted triple (1, 2, 1/2). It fails the representation
/// check; kept so the discrepancy stays visible.
CentralCharges stated_central_charges();

/// The representation: L(m) acts as f(m,1), I(m) as f(m,0), centrals as the
/// given scalars (defaults to fock_central_charges()).
FockVector pi_apply(const AlgebraElement& x, const FockVector& v);
FockVector pi_apply(const AlgebraElement& x, const FockVector& v,
                    const CentralCharges& charges);

/// pi([x,y]) v - (pi(x)pi(y) - pi(y)pi(x)) v.
FockVector fock_rep_residual(const AlgebraElement& x, const AlgebraElement& y,
                             const FockVector& v, const CentralCharges& charges);

/// Common t-degree of all monomials; throws std::domain_error on zero or
/// mixed input.
std::int64_t t_degree(const FockVector& v);

/// Canonical text form, e.g. "3/2*[a(-2)a(-1)|a*(-1)] + 1*[|]"; the vacuum
/// monomial is "[|]". Round-trips bit-exact.
std::string to_text(const FockMonomial& w);
std::string to_text(const FockVector& v);
FockVector parse_fock_vector(const std::string& text);

/// JSON array of terms: {"a": [...], "astar": [...], "num": "...", "den": "..."}.
std::string to_json_string(const FockVector& v);
FockVector fock_vector_from_json(const std::string& json);

namespace selftest {

/// Defective variant for harness self-tests: the anomaly enters the closed
/// form with flipped sign, so the residual is 2*phi*v wherever phi != 0.
FockVector commutator_residual_phi_defect(std::int64_t m1, std::int64_t n1,
                                          std::int64_t m2, std::int64_t n2,
                                          const FockVector& v);

}  // namespace selftest

}  // namespace hvlie
