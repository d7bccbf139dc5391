#pragma once

#include "hvlie/families.hpp"
#include "hvlie/linalg.hpp"
#include "hvlie/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hvlie {

/// The Virasoro restrictions the classification splits into: I is the
/// A[a,b] action, II the A[a] action, III the B[a] action, IV the common
/// degenerate action of the tilde families.
enum class VirCaseKind : int { I, II, III, IV };

struct VirCase {
  VirCaseKind kind;
  Rational a, b;  // I uses (a, b); II and III use a; IV is parameter-free

  static VirCase case_i(const Rational& a, const Rational& b) {
    return {VirCaseKind::I, a, b};
  }
  static VirCase case_ii(const Rational& a) { return {VirCaseKind::II, a, 0}; }
  static VirCase case_iii(const Rational& a) { return {VirCaseKind::III, a, 0}; }
  static VirCase case_iv() { return {VirCaseKind::IV, 0, 0}; }

  bool operator==(const VirCase&) const = default;
};

/// Text form "I[a=1/3,b=5]", "II[a=4]", "III[a=2]", "IV".
std::string to_text(const VirCase& vcase);
VirCase parse_vir_case(const std::string& text);

/// alpha(n, s): coefficient of L(n) mapping v_s to v_{n+s} in the case.
Rational vir_coeff(const VirCase& vcase, std::int64_t n, std::int64_t s);

/// Index window for the unknowns f(n, t), |n| <= G, |t| <= N.
struct FWindow {
  std::int64_t N, G;

  bool in_range(std::int64_t n, std::int64_t t) const {
    return n >= -G && n <= G && t >= -N && t <= N;
  }
  std::size_t var_count() const {
    return static_cast<std::size_t>(2 * G + 1) * static_cast<std::size_t>(2 * N + 1);
  }
  std::size_t var_id(std::int64_t n, std::int64_t t) const;
  std::pair<std::int64_t, std::int64_t> var_of(std::size_t id) const;

  bool operator==(const FWindow&) const = default;
};

/// The compatibility constraints on f over the window. Linear rows come
/// from commuting L(n) past I(m) (one per in-window triple, identically
/// zero rows dropped); quadratics are the I-I commutation residuals
/// f(n,t)f(m,n+t) - f(m,t)f(n,m+t), kept as index triples.
struct ConstraintSystem {
  VirCase vcase;
  FWindow window;
  Matrix linear;
  struct QuadEq {
    std::int64_t m, n, t;
  };
  std::vector<QuadEq> quadratics;
};

/// Requires G >= 1 and N >= 3G so every pattern the window can certify has
/// room to act; throws WindowError otherwise.
ConstraintSystem build_constraints(const VirCase& vcase, std::int64_t N, std::int64_t G);

/// Dense assignment of f over a window.
struct FAssignment {
  FWindow window;
  std::vector<Rational> values;

  static FAssignment zeros(const FWindow& w) {
    return {w, std::vector<Rational>(w.var_count())};
  }

  const Rational& at(std::int64_t n, std::int64_t t) const;
  Rational& at(std::int64_t n, std::int64_t t);

  bool operator==(const FAssignment&) const = default;
};

struct AffineSolution {
  FWindow window;
  std::size_t rank;
  std::vector<FAssignment> basis;  // canonical nullspace basis
};

AffineSolution solve_affine(const ConstraintSystem& sys);

/// Evaluates every quadratic over the assignment's window.
struct QuadraticWitness {
  std::int64_t m, n, t;
  Rational lhs, rhs;  // f(n,t)f(m,n+t) and f(m,t)f(n,m+t)
};
struct QuadraticReport {
  bool zero;
  std::int64_t checked;
  std::optional<QuadraticWitness> witness;
};

QuadraticReport heisenberg_residual(const FAssignment& f);

/// All catalogued families whose Heisenberg pattern matches f exactly on
/// the whole window, checked in the fixed catalogue order. The parameter
/// is read from a designated entry, then every window entry is compared.
/// For integral a in case I the shifted U/V patterns are recognized and
/// reported as U[d]/V[d] (the index relabeling that makes a = 0).
std::vector<ModuleSpec> match_family(const FAssignment& f, const VirCase& vcase);

/// One catalogued solution line of a case cell: the family (with a sample
/// value filled into its free parameter) and the pattern it induces on f,
/// built from the family's own action table, not from match_family.
struct CataloguedLine {
  ModuleSpec family;
  std::string free_param;
  FAssignment pattern;
};

std::vector<CataloguedLine> catalogue_for(const VirCase& vcase, const FWindow& w,
                                          const Rational& sample);

/// Named consequences of the constraint system that the source derivation
/// leans on, evaluated per case on a solved assignment; returns the names
/// that fail.
std::vector<std::string> identity_spot_checks(const FAssignment& f, const VirCase& vcase);

/// Raised when the solved variety disagrees with the catalogue.
struct ClassificationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ClassificationReport {
  VirCase vcase;
  FWindow window;
  std::size_t rank;
  std::size_t linear_dim;
  std::vector<FAssignment> basis;
  std::vector<ModuleSpec> families;  // inventory; free parameter left at sample 1
  // Witnessed quadratic failures of pairwise sums of catalogued lines: the
  // evidence that the variety is a union of lines, not their span.
  std::vector<QuadraticWitness> violations;
  struct ProbeResult {
    FAssignment f;
    bool on_variety;
    std::vector<ModuleSpec> matches;
  };
  std::vector<ProbeResult> probes;
};

/// Solve, probe, and cross-check one case cell:
///   - the linear dimension must equal the catalogue size, and every
///     catalogued pattern must solve the linear system, pass the quadratic,
///     and be recovered by match_family;
///   - probes (basis, pairwise sums, seeded random combinations) that pass
///     the quadratic must match some family; probes that fail it must not;
///   - sums of two distinct catalogued lines must fail the quadratic;
///   - no identity spot check may fail on an on-variety probe.
/// Violations raise ClassificationError with the witness in the message.
ClassificationReport classify(const VirCase& vcase, std::int64_t N, std::int64_t G,
                              std::uint64_t seed);

std::string to_json_string(const ClassificationReport& report);

}  // namespace hvlie
