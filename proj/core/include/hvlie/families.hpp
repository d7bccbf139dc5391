#pragma once

#include "hvlie/algebra.hpp"
#include "hvlie/rational.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace hvlie {

/// The catalogued weight-module families. The first three carry only the
/// Witt part (I and the centrals act as zero); the rest are modules for the
/// full algebra, all with central charge zero. Text names reuse the letters
/// and are told apart by their parameter-name sets:
///   VirAab  A[a,b]    VirAa  A[a]      VirBa   B[a]
///   Aabc    A[a,b,c]  Aad    A[a,d]    Bad     B[a,d]
///   Ud      U[d]      Vd     V[d]      Utilde  Utilde[d]   Vtilde  Vtilde[c]
enum class FamilyTag : int { VirAab, VirAa, VirBa, Aabc, Aad, Bad, Ud, Vd, Utilde, Vtilde };

const char* family_name(FamilyTag tag);
std::vector<std::string> family_param_names(FamilyTag tag);

struct ModuleSpec {
  FamilyTag tag;
  Rational a, b, c, d;  // only the family's own parameters are meaningful

  static ModuleSpec vir_aab(const Rational& a, const Rational& b);
  static ModuleSpec vir_aa(const Rational& a);
  static ModuleSpec vir_ba(const Rational& a);
  static ModuleSpec aabc(const Rational& a, const Rational& b, const Rational& c);
  static ModuleSpec aad(const Rational& a, const Rational& d);
  static ModuleSpec bad(const Rational& a, const Rational& d);
  static ModuleSpec ud(const Rational& d);
  static ModuleSpec vd(const Rational& d);
  static ModuleSpec utilde(const Rational& d);  // requires d != 0
  static ModuleSpec vtilde(const Rational& c);  // requires c != 0

  bool operator==(const ModuleSpec&) const = default;
};

/// Build from parsed parts; validates the parameter-name set against the
/// family and the domain restrictions (Utilde needs d != 0, Vtilde c != 0).
ModuleSpec make_module(FamilyTag tag, const std::map<std::string, Rational>& params);

/// Canonical text form, e.g. "A[a=1/3,b=2,c=5]" or "Utilde[d=3]".
std::string to_text(const ModuleSpec& spec);
ModuleSpec parse_module_spec(const std::string& text);

/// g . v_t = coeff * v_target with target = t + deg(g).
struct WeightAction {
  Rational coeff;
  std::int64_t target;
};

WeightAction act(const ModuleSpec& spec, const BasisSymbol& g, std::int64_t t);

/// Sparse element of the weight module: index -> coefficient, canonical.
using WeightVector = std::map<std::int64_t, Rational>;

WeightVector act(const ModuleSpec& spec, const AlgebraElement& x, std::int64_t t);
WeightVector act(const ModuleSpec& spec, const AlgebraElement& x, const WeightVector& v);

/// act([x,y]) v_t - (act(x) act(y) - act(y) act(x)) v_t. Zero everywhere iff
/// the family's table really is a module for the bracket.
WeightVector module_rep_residual(const ModuleSpec& spec, const AlgebraElement& x,
                                 const AlgebraElement& y, std::int64_t t);

/// Exact simplicity criterion for the A[a,b,c] family: simple unless a is an
/// integer, b is 0 or 1, and c = 0 all at once. Other tags are an error.
bool simplicity_predicate(const ModuleSpec& spec);

/// Invariant-subspace scan over the index window [-N, N]. Moves use
/// generators with |n| <= G and nonzero action coefficient; closures are
/// computed inside the core window [-N+G, N-G], where every single move
/// still lands inside the full window and so can be evaluated exactly. A
/// closure that some nonzero move would carry outside the core is flagged
/// as boundary-truncated (its invariance is only certified up to the core
/// edge). Closures equal to the whole core are dropped; what remains are
/// the proper invariant candidates, deduplicated and sorted.
struct ScanReport {
  std::int64_t N, G;
  struct InvariantSet {
    std::vector<std::int64_t> indices;
    bool boundary;
  };
  std::vector<InvariantSet> sets;
};

ScanReport submodule_scan(const ModuleSpec& spec, std::int64_t N, std::int64_t G);

std::string to_json_string(const ModuleSpec& spec, const ScanReport& report);

/// Weight-action table with a possibly punctured index domain. Base class
/// for the catalogued families plus the derived tables (submodules,
/// quotients, twisted actions) that the isomorphism witnesses need.
class ActionTable {
 public:
  virtual ~ActionTable() = default;
  virtual bool in_domain(std::int64_t t) const { return true; }
  virtual WeightAction act(const BasisSymbol& g, std::int64_t t) const = 0;
};

class FamilyTable : public ActionTable {
 public:
  explicit FamilyTable(ModuleSpec spec) : spec_(std::move(spec)) {}
  WeightAction act(const BasisSymbol& g, std::int64_t t) const override {
    return hvlie::act(spec_, g, t);
  }

 private:
  ModuleSpec spec_;
};

/// Restriction to the complement of `removed`. Throws std::logic_error if a
/// nonzero move leaves the subspace (i.e. it was not a submodule).
class SubTable : public ActionTable {
 public:
  SubTable(const ActionTable& base, std::set<std::int64_t> removed)
      : base_(base), removed_(std::move(removed)) {}
  bool in_domain(std::int64_t t) const override;
  WeightAction act(const BasisSymbol& g, std::int64_t t) const override;

 private:
  const ActionTable& base_;
  std::set<std::int64_t> removed_;
};

/// Quotient by the span of `killed`: coefficients landing there become 0.
class QuotientTable : public ActionTable {
 public:
  QuotientTable(const ActionTable& base, std::set<std::int64_t> killed)
      : base_(base), killed_(std::move(killed)) {}
  bool in_domain(std::int64_t t) const override;
  WeightAction act(const BasisSymbol& g, std::int64_t t) const override;

 private:
  const ActionTable& base_;
  std::set<std::int64_t> killed_;
};

/// The scaled Heisenberg twist of the A[a,b,c] action for b in {0,1}:
/// L(n)v_t = (a+t+bn) v_{n+t} as in A[a,b,.], but
/// I(n)v_t = c (a+t+bn)/(a+t+(1-b)n) v_{n+t}. For non-integral a this
/// table is isomorphic to A[a,1-b,c]: with b=0 via v_t -> (a+t) w_t, with
/// b=1 via v_t -> w_t/(a+t). It is what the b-swap statement for nonzero c
/// is actually about; the literal constant-I table admits no such map.
/// Throws std::domain_error when a denominator vanishes (integral a).
class TwistedHeisenbergTable : public ActionTable {
 public:
  TwistedHeisenbergTable(const Rational& a, const Rational& c, std::int64_t b)
      : a_(a), c_(c), b_(b) {
    if (b != 0 && b != 1) throw std::domain_error("twisted table needs b in {0,1}");
  }
  WeightAction act(const BasisSymbol& g, std::int64_t t) const override;

 private:
  Rational a_, c_;
  std::int64_t b_;
};

struct IntertwinerWitness {
  BasisSymbol g;
  std::int64_t t;
  Rational value;
};

struct IntertwinerReport {
  bool zero;
  std::int64_t checked;
  std::optional<IntertwinerWitness> first_nonzero;
};

/// Residual of the candidate map phi(v_t) = scale(t) w_{t+shift} over all
/// generators with |n| <= G and all t with t, t+n in [-N, N] and in both
/// domains: src(g, t) scale(t+n) - scale(t) dst(g, t+shift). Throws
/// std::domain_error when scale vanishes on a used index (the map must be
/// a bijection on weight spaces).
IntertwinerReport intertwiner_residual(const ActionTable& src, const ActionTable& dst,
                                       const std::function<Rational(std::int64_t)>& scale,
                                       std::int64_t shift, std::int64_t N, std::int64_t G);

namespace selftest {

/// Defective action for harness self-tests: the L(n) coefficient is negated
/// for n < 0, which breaks [L(n), L(-n)] residuals in every family.
WeightAction act_defect(const ModuleSpec& spec, const BasisSymbol& g, std::int64_t t);
WeightVector module_rep_residual_defect(const ModuleSpec& spec, const AlgebraElement& x,
                                        const AlgebraElement& y, std::int64_t t);

}  // namespace selftest

}  // namespace hvlie
