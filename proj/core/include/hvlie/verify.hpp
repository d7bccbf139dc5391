#pragma once

#include "hvlie/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hvlie {

/// One named property check. `witness` is empty on pass; on failure it holds
/// the concrete counterexample (inputs and the nonzero value) in text form.
struct Check {
  std::string name;
  bool pass;
  std::string witness;
};

struct Suite {
  std::string name;
  std::vector<Check> checks;
  std::vector<std::string> notes;  // flagged discrepancies, inventories
  double elapsed_seconds = 0;      // wall time; kept out of the JSON form

  bool all_pass() const;
};

/// Deliberate defects the harness can inject to prove the checks can fail.
/// None runs the real code paths.
enum class Mutation : int { None, BracketCocycle, PhiSign, FamilyActionSign };

/// Bracket laws on the span of L(m), I(m), |m| <= range, and the centrals:
/// antisymmetry, Jacobi (|m| <= jacobi_range), grading, and frozen structure
/// constants.
Suite verify_algebra(std::int64_t range, std::int64_t jacobi_range,
                     Mutation mutation = Mutation::None);

/// The oscillator construction: anomaly closed forms, the commutator closed
/// form on a fixed state list (factor indices down to -index_range, products
/// up to degree_cap), the representation property at the verified central
/// charges, degree eigenvalues, and the failure of the quoted alternative
/// charge triple.
Suite verify_boson(std::int64_t index_range, std::int64_t degree_cap,
                   Mutation mutation = Mutation::None);

/// Bracket compatibility of all ten family action tables over a fixed
/// parameter grid plus seeded random parameters, generators |m| <= G,
/// weights |t| <= N.
Suite verify_families(std::int64_t N, std::int64_t G, std::uint64_t seed,
                      Mutation mutation = Mutation::None);

/// Invariant-subspace scan against the closed-form simplicity criterion on
/// the A[a,b,c] grid.
Suite verify_simplicity(std::int64_t N, std::int64_t G);

/// Isomorphism witnesses between catalogued actions (index shifts, the
/// rescaling between b = 0 and b = 1, submodule and quotient chains, the
/// scaled Heisenberg twist) plus negative controls that must not intertwine.
Suite check_intertwiners(std::int64_t N, std::int64_t G);

/// classify() on the standard case cells at two windows, requiring identical
/// family inventories; cell dimensions and inventories land in the notes.
Suite classify_suite(std::uint64_t seed, std::int64_t n1 = 8, std::int64_t g1 = 2,
                     std::int64_t n2 = 12, std::int64_t g2 = 3);

/// {"suite", "all_pass", "checks", "notes"}; elapsed time is excluded so the
/// output is byte-deterministic.
std::string to_json_string(const Suite& suite);

}  // namespace hvlie
