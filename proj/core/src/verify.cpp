#include "hvlie/verify.hpp"

#include "hvlie/algebra.hpp"
#include "hvlie/families.hpp"
#include "hvlie/fock.hpp"
#include "hvlie/solver.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <set>

namespace hvlie {
namespace {

using Json = nlohmann::ordered_json;

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

std::string weight_text(const WeightVector& v) {
  if (v.empty()) return "0";
  std::string out;
  for (const auto& [idx, c] : v) {
    if (!out.empty()) out += " + ";
    out += rational_to_string(c) + "*v(" + std::to_string(idx) + ")";
  }
  return out;
}

std::string pair_text(const AlgebraElement& x, const AlgebraElement& y) {
  return "x = " + to_text(x) + ", y = " + to_text(y);
}

}  // namespace

bool Suite::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.pass; });
}

Suite verify_algebra(std::int64_t range, std::int64_t jacobi_range, Mutation mutation) {
  Timer timer;
  Suite suite{"algebra", {}, {}, 0};
  const bool mutate = mutation == Mutation::BracketCocycle;
  auto br = [&](const BasisSymbol& x, const BasisSymbol& y) {
    return mutate ? selftest::bracket_defect(x, y) : bracket(x, y);
  };

  std::vector<BasisSymbol> symbols;
  for (std::int64_t m = -range; m <= range; ++m) {
    symbols.push_back(BasisSymbol::L(m));
    symbols.push_back(BasisSymbol::I(m));
  }
  symbols.push_back(BasisSymbol::CL());
  symbols.push_back(BasisSymbol::CI());
  symbols.push_back(BasisSymbol::CLI());

  {
    Check c{"antisymmetry", true, ""};
    for (const auto& x : symbols) {
      for (const auto& y : symbols) {
        AlgebraElement sum = br(x, y) + br(y, x);
        if (!sum.is_zero()) {
          c.pass = false;
          c.witness = "[x,y] + [y,x] = " + to_text(sum) + " for x = " + to_text(x) +
                      ", y = " + to_text(y);
          break;
        }
      }
      if (!c.pass) break;
    }
    suite.checks.push_back(std::move(c));
  }

  {
    Check c{"Jacobi identity", true, ""};
    auto jac = mutate ? selftest::jacobi_residual_defect : jacobi_residual;
    std::vector<BasisSymbol> small;
    for (std::int64_t m = -jacobi_range; m <= jacobi_range; ++m) {
      small.push_back(BasisSymbol::L(m));
      small.push_back(BasisSymbol::I(m));
    }
    small.push_back(BasisSymbol::CL());
    small.push_back(BasisSymbol::CI());
    small.push_back(BasisSymbol::CLI());
    for (const auto& x : small) {
      for (const auto& y : small) {
        for (const auto& z : small) {
          AlgebraElement r = jac(AlgebraElement::basis(x), AlgebraElement::basis(y),
                                 AlgebraElement::basis(z));
          if (!r.is_zero()) {
            c.pass = false;
            c.witness = "cyclic sum = " + to_text(r) + " for x = " + to_text(x) +
                        ", y = " + to_text(y) + ", z = " + to_text(z);
            break;
          }
        }
        if (!c.pass) break;
      }
      if (!c.pass) break;
    }
    suite.checks.push_back(std::move(c));
  }

  {
    Check c{"bracket grading", true, ""};
    for (const auto& x : symbols) {
      for (const auto& y : symbols) {
        AlgebraElement r = br(x, y);
        if (r.is_zero()) continue;
        if (grade(r) != x.degree() + y.degree()) {
          c.pass = false;
          c.witness = "[x,y] = " + to_text(r) + " has degree " +
                      std::to_string(grade(r)) + ", expected " +
                      std::to_string(x.degree() + y.degree()) + " for x = " + to_text(x) +
                      ", y = " + to_text(y);
          break;
        }
      }
      if (!c.pass) break;
    }
    suite.checks.push_back(std::move(c));
  }

  {
    Check c{"frozen structure constants", true, ""};
    auto L = [](std::int64_t m) { return BasisSymbol::L(m); };
    auto I = [](std::int64_t m) { return BasisSymbol::I(m); };
    auto term = [](const BasisSymbol& s, const Rational& v) {
      return AlgebraElement::term(s, v);
    };
    struct Entry {
      BasisSymbol x, y;
      AlgebraElement expected;
    };
    std::vector<Entry> table;
    table.push_back({L(2), L(-2), term(L(0), -4) + term(BasisSymbol::CL(), make_rational(1, 2))});
    table.push_back({L(3), L(-3), term(L(0), -6) + term(BasisSymbol::CL(), 2)});
    table.push_back({L(1), I(-1), term(I(0), -1)});
    table.push_back({L(2), I(-2), term(I(0), -2) + term(BasisSymbol::CLI(), 2)});
    table.push_back({L(-2), I(2), term(I(0), 2) + term(BasisSymbol::CLI(), 6)});
    table.push_back({I(3), I(-3), term(BasisSymbol::CI(), -3)});
    table.push_back({L(0), L(5), term(L(5), 5)});
    table.push_back({BasisSymbol::CL(), L(7), AlgebraElement::zero()});
    for (const auto& e : table) {
      AlgebraElement got = br(e.x, e.y);
      if (!(got == e.expected)) {
        c.pass = false;
        c.witness = "[" + to_text(e.x) + ", " + to_text(e.y) + "] = " + to_text(got) +
                    ", expected " + to_text(e.expected);
        break;
      }
    }
    suite.checks.push_back(std::move(c));
  }

  suite.elapsed_seconds = timer.seconds();
  return suite;
}

Suite verify_boson(std::int64_t index_range, std::int64_t degree_cap, Mutation mutation) {
  Timer timer;
  Suite suite{"boson", {}, {}, 0};
  const bool mutate = mutation == Mutation::PhiSign;
  auto resid = [&](std::int64_t m1, std::int64_t n1, std::int64_t m2, std::int64_t n2,
                   const FockVector& v) {
    return mutate ? selftest::commutator_residual_phi_defect(m1, n1, m2, n2, v)
                  : commutator_residual_f(m1, n1, m2, n2, v);
  };

  std::vector<FockVector> states;
  states.push_back(FockVector::vacuum());
  states.push_back(FockVector::term(FockMonomial{{-1}, {}}, 1));
  states.push_back(FockVector::term(FockMonomial{{0}, {}}, 1));
  states.push_back(FockVector::term(FockMonomial{{}, {-1}}, 1));
  states.push_back(FockVector::term(FockMonomial{{-2, -1}, {}}, 1));
  states.push_back(FockVector::term(FockMonomial{{-1}, {-2}}, 1));
  if (degree_cap >= 3 && index_range >= 4) {
    states.push_back(FockVector::term(FockMonomial{{-4, -1}, {-3}}, 1));
    states.push_back(FockVector::term(FockMonomial{{0, -3}, {-1}}, 1));
  }

  {
    Check c{"anomaly closed forms", true, ""};
    for (std::int64_t m = 1; m <= 10 && c.pass; ++m) {
      struct Entry {
        std::int64_t n1, n2;
        Rational expected;
      };
      Entry entries[] = {
          {1, 1, make_rational(m * m * m - m, 6)},
          {1, 0, make_rational(m * (m - 1), 2)},
          {0, 0, Rational(-m)},
      };
      for (const auto& e : entries) {
        Rational got = phi(m, e.n1, -m, e.n2);
        if (got != e.expected) {
          c.pass = false;
          c.witness = "phi(" + std::to_string(m) + "," + std::to_string(e.n1) + "," +
                      std::to_string(-m) + "," + std::to_string(e.n2) + ") = " +
                      rational_to_string(got) + ", expected " + rational_to_string(e.expected);
          break;
        }
      }
    }
    suite.checks.push_back(std::move(c));
  }

  {
    Check c{"anomaly antisymmetry", true, ""};
    for (std::int64_t m = 1; m <= 10 && c.pass; ++m) {
      for (std::int64_t n1 = 0; n1 <= 3 && c.pass; ++n1) {
        for (std::int64_t n2 = 0; n2 <= 3; ++n2) {
          if (phi(-m, n2, m, n1) != -phi(m, n1, -m, n2)) {
            c.pass = false;
            c.witness = "phi is not antisymmetric at m = " + std::to_string(m) +
                        ", n1 = " + std::to_string(n1) + ", n2 = " + std::to_string(n2);
            break;
          }
        }
      }
    }
    suite.checks.push_back(std::move(c));
  }

  {
    Check c{"anomaly support", true, ""};
    for (std::int64_t m1 = -3; m1 <= 3 && c.pass; ++m1) {
      for (std::int64_t m2 = -3; m2 <= 3; ++m2) {
        if (m1 != 0 && m1 + m2 == 0) continue;
        if (phi(m1, 1, m2, 1) != 0 || phi(m1, 0, m2, 2) != 0) {
          c.pass = false;
          c.witness = "phi nonzero off the support at m1 = " + std::to_string(m1) +
                      ", m2 = " + std::to_string(m2);
          break;
        }
      }
    }
    suite.checks.push_back(std::move(c));
  }

  {
    Check c{"commutator closed form", true, ""};
    for (std::int64_t m1 = -index_range; m1 <= index_range && c.pass; ++m1) {
      for (std::int64_t m2 = -index_range; m2 <= index_range && c.pass; ++m2) {
        for (std::int64_t n1 = 0; n1 <= 2 && c.pass; ++n1) {
          for (std::int64_t n2 = 0; n2 <= 2 && c.pass; ++n2) {
            for (const auto& v : states) {
              FockVector r = resid(m1, n1, m2, n2, v);
              if (!r.is_zero()) {
                c.pass = false;
                c.witness = "residual of [f(" + std::to_string(m1) + "," +
                            std::to_string(n1) + "), f(" + std::to_string(m2) + "," +
                            std::to_string(n2) + ")] on " + to_text(v) + " is " + to_text(r);
                break;
              }
            }
          }
        }
      }
    }
    suite.checks.push_back(std::move(c));
  }

  {
    Check c{"degree eigenvalues", true, ""};
    for (const auto& v : states) {
      const FockMonomial& w = v.terms().begin()->first;
      std::int64_t idx_sum = 0;
      for (std::int64_t i : w.a) idx_sum += i;
      for (std::int64_t i : w.astar) idx_sum += i;
      FockVector d0 = apply_f(0, 0, v) - Rational(w.t_degree()) * v;
      FockVector d1 = apply_f(0, 1, v) - Rational(idx_sum) * v;
      if (!d0.is_zero() || !d1.is_zero()) {
        c.pass = false;
        c.witness = "f(0,0) or f(0,1) eigenvalue mismatch on " + to_text(v);
        break;
      }
    }
    suite.checks.push_back(std::move(c));
  }

  std::vector<AlgebraElement> generators;
  for (std::int64_t m = -3; m <= 3; ++m) {
    generators.push_back(AlgebraElement::basis(BasisSymbol::L(m)));
    generators.push_back(AlgebraElement::basis(BasisSymbol::I(m)));
  }
  generators.push_back(AlgebraElement::basis(BasisSymbol::CL()));
  generators.push_back(AlgebraElement::basis(BasisSymbol::CI()));
  generators.push_back(AlgebraElement::basis(BasisSymbol::CLI()));

  {
    Check c{"representation property", true, ""};
    CentralCharges charges = fock_central_charges();
    for (const auto& x : generators) {
      for (const auto& y : generators) {
        for (const auto& v : states) {
          FockVector r = fock_rep_residual(x, y, v, charges);
          if (!r.is_zero()) {
            c.pass = false;
            c.witness = pair_text(x, y) + " on " + to_text(v) + ": residual " + to_text(r);
            break;
          }
        }
        if (!c.pass) break;
      }
      if (!c.pass) break;
    }
    suite.checks.push_back(std::move(c));
  }

  {
    Check c{"recovered central charges", true, ""};
    CentralCharges charges = fock_central_charges();
    bool ok = charges == CentralCharges{2, 1, make_rational(1, 2)};
    for (std::int64_t m = 1; m <= 6 && ok; ++m) {
      ok = ok && phi(m, 1, -m, 1) == charges.cl * make_rational(m * m * m - m, 12);
      ok = ok && phi(m, 1, -m, 0) == charges.cli * Rational(m * m - m);
      ok = ok && phi(m, 0, -m, 0) == charges.ci * Rational(-m);
    }
    if (!ok) {
      c.pass = false;
      c.witness = "anomaly values do not reproduce the charge triple (2, 1, 1/2)";
    }
    suite.checks.push_back(std::move(c));
  }

  {
    Check c{"quoted alternative charges fail", true, ""};
    CentralCharges stated = stated_central_charges();
    bool found_nonzero = false;
    for (const auto& x : generators) {
      for (const auto& y : generators) {
        if (!fock_rep_residual(x, y, FockVector::vacuum(), stated).is_zero()) {
          found_nonzero = true;
          break;
        }
      }
      if (found_nonzero) break;
    }
    if (!found_nonzero) {
      c.pass = false;
      c.witness = "the quoted triple (1, 2, 1/2) unexpectedly satisfies every checked pair";
    }
    suite.checks.push_back(std::move(c));
  }
  suite.notes.push_back(
      "The charge triple quoted alongside this construction, (C_L, C_I, C_LI) = "
      "(1, 2, 1/2), fails the bracket check (e.g. on [L(2), L(-2)] at the vacuum); "
      "the action verifies with (2, 1, 1/2), matching the anomaly values "
      "phi(m,1,-m,1) = (m^3-m)/6, phi(m,0,-m,0) = -m, phi(m,1,-m,0) = (m^2-m)/2.");

  suite.elapsed_seconds = timer.seconds();
  return suite;
}

Suite verify_families(std::int64_t N, std::int64_t G, std::uint64_t seed, Mutation mutation) {
  Timer timer;
  Suite suite{"families", {}, {}, 0};
  auto resid = mutation == Mutation::FamilyActionSign ? selftest::module_rep_residual_defect
                                                      : module_rep_residual;

  const std::vector<Rational> as{2, -3, make_rational(1, 2), make_rational(7, 3)};
  const std::vector<Rational> bs{0, 1, 2, make_rational(-1, 2)};
  const std::vector<Rational> cs{0, 1};
  const std::vector<Rational> ds{0, 1, make_rational(-2, 3)};
  const std::vector<Rational> nonzero{1, make_rational(-2, 3)};

  Rng rng(seed);
  auto specs_for = [&](FamilyTag tag) {
    std::vector<ModuleSpec> specs;
    switch (tag) {
      case FamilyTag::VirAab:
        for (const auto& a : as)
          for (const auto& b : bs) specs.push_back(ModuleSpec::vir_aab(a, b));
        for (int k = 0; k < 3; ++k)
          specs.push_back(ModuleSpec::vir_aab(rng.next_rational(), rng.next_rational()));
        break;
      case FamilyTag::VirAa:
        for (const auto& a : as) specs.push_back(ModuleSpec::vir_aa(a));
        for (int k = 0; k < 3; ++k) specs.push_back(ModuleSpec::vir_aa(rng.next_rational()));
        break;
      case FamilyTag::VirBa:
        for (const auto& a : as) specs.push_back(ModuleSpec::vir_ba(a));
        for (int k = 0; k < 3; ++k) specs.push_back(ModuleSpec::vir_ba(rng.next_rational()));
        break;
      case FamilyTag::Aabc:
        for (const auto& a : as)
          for (const auto& b : bs)
            for (const auto& c : cs) specs.push_back(ModuleSpec::aabc(a, b, c));
        for (int k = 0; k < 3; ++k)
          specs.push_back(ModuleSpec::aabc(rng.next_rational(), rng.next_rational(),
                                           rng.next_rational()));
        break;
      case FamilyTag::Aad:
        for (const auto& a : as)
          for (const auto& d : ds) specs.push_back(ModuleSpec::aad(a, d));
        for (int k = 0; k < 3; ++k)
          specs.push_back(ModuleSpec::aad(rng.next_rational(), rng.next_rational()));
        break;
      case FamilyTag::Bad:
        for (const auto& a : as)
          for (const auto& d : ds) specs.push_back(ModuleSpec::bad(a, d));
        for (int k = 0; k < 3; ++k)
          specs.push_back(ModuleSpec::bad(rng.next_rational(), rng.next_rational()));
        break;
      case FamilyTag::Ud:
        for (const auto& d : ds) specs.push_back(ModuleSpec::ud(d));
        for (int k = 0; k < 3; ++k) specs.push_back(ModuleSpec::ud(rng.next_rational()));
        break;
      case FamilyTag::Vd:
        for (const auto& d : ds) specs.push_back(ModuleSpec::vd(d));
        for (int k = 0; k < 3; ++k) specs.push_back(ModuleSpec::vd(rng.next_rational()));
        break;
      case FamilyTag::Utilde:
        for (const auto& d : nonzero) specs.push_back(ModuleSpec::utilde(d));
        for (int k = 0; k < 3; ++k)
          specs.push_back(ModuleSpec::utilde(rng.next_nonzero_rational()));
        break;
      case FamilyTag::Vtilde:
        for (const auto& c : nonzero) specs.push_back(ModuleSpec::vtilde(c));
        for (int k = 0; k < 3; ++k)
          specs.push_back(ModuleSpec::vtilde(rng.next_nonzero_rational()));
        break;
    }
    return specs;
  };

  std::vector<AlgebraElement> gens;
  for (std::int64_t m = -G; m <= G; ++m) {
    gens.push_back(AlgebraElement::basis(BasisSymbol::L(m)));
    gens.push_back(AlgebraElement::basis(BasisSymbol::I(m)));
  }
  gens.push_back(AlgebraElement::basis(BasisSymbol::CL()));
  gens.push_back(AlgebraElement::basis(BasisSymbol::CI()));
  gens.push_back(AlgebraElement::basis(BasisSymbol::CLI()));
  AlgebraElement combo_x = AlgebraElement::term(BasisSymbol::L(1), 1) +
                           AlgebraElement::term(BasisSymbol::I(-1), 2);
  AlgebraElement combo_y = AlgebraElement::term(BasisSymbol::L(-1), 1) +
                           AlgebraElement::term(BasisSymbol::I(2), -1);

  std::set<std::int64_t> t_set{-N, -5, -2, -1, 0, 1, 2, 5, N};
  std::vector<std::int64_t> ts(t_set.begin(), t_set.end());

  std::vector<ModuleSpec> all_specs;
  const FamilyTag tags[] = {FamilyTag::VirAab, FamilyTag::VirAa,   FamilyTag::VirBa,
                            FamilyTag::Aabc,   FamilyTag::Aad,     FamilyTag::Bad,
                            FamilyTag::Ud,     FamilyTag::Vd,      FamilyTag::Utilde,
                            FamilyTag::Vtilde};
  for (FamilyTag tag : tags) {
    std::string signature = family_name(tag);
    signature += "[";
    for (const auto& p : family_param_names(tag)) {
      if (signature.back() != '[') signature += ",";
      signature += p;
    }
    signature += "]";
    Check c{"bracket compatibility: " + signature, true, ""};
    for (const auto& spec : specs_for(tag)) {
      all_specs.push_back(spec);
      for (std::size_t i = 0; i < gens.size() && c.pass; ++i) {
        for (std::size_t j = i; j < gens.size() && c.pass; ++j) {
          for (std::int64_t t : ts) {
            WeightVector r = resid(spec, gens[i], gens[j], t);
            if (!r.empty()) {
              c.pass = false;
              c.witness = to_text(spec) + ", " + pair_text(gens[i], gens[j]) + ", t = " +
                          std::to_string(t) + ": residual " + weight_text(r);
              break;
            }
          }
        }
      }
      for (std::int64_t t : ts) {
        if (!c.pass) break;
        WeightVector r = resid(spec, combo_x, combo_y, t);
        if (!r.empty()) {
          c.pass = false;
          c.witness = to_text(spec) + ", composite pair, t = " + std::to_string(t) +
                      ": residual " + weight_text(r);
        }
      }
      if (!c.pass) break;
    }
    suite.checks.push_back(std::move(c));
  }

  {
    Check c{"centrals act as zero", true, ""};
    for (const auto& spec : all_specs) {
      for (const auto& s : {BasisSymbol::CL(), BasisSymbol::CI(), BasisSymbol::CLI()}) {
        for (std::int64_t t : ts) {
          if (act(spec, s, t).coeff != 0) {
            c.pass = false;
            c.witness = to_text(spec) + ": " + to_text(s) + " acts on v(" +
                        std::to_string(t) + ")";
            break;
          }
        }
        if (!c.pass) break;
      }
      if (!c.pass) break;
    }
    suite.checks.push_back(std::move(c));
  }

  suite.elapsed_seconds = timer.seconds();
  return suite;
}

Suite verify_simplicity(std::int64_t N, std::int64_t G) {
  Timer timer;
  Suite suite{"simplicity", {}, {}, 0};
  const std::vector<Rational> as{2, -3, make_rational(1, 2), make_rational(7, 3)};
  const std::vector<Rational> bs{0, 1, 2, make_rational(-1, 2)};
  const std::vector<Rational> cs{0, 1};

  std::vector<ModuleSpec> grid;
  for (const auto& a : as)
    for (const auto& b : bs)
      for (const auto& c : cs) grid.push_back(ModuleSpec::aabc(a, b, c));

  {
    Check c{"scan agrees with the closed-form criterion", true, ""};
    for (const auto& spec : grid) {
      ScanReport report = submodule_scan(spec, N, G);
      bool simple = simplicity_predicate(spec);
      if (simple != report.sets.empty()) {
        c.pass = false;
        c.witness = to_text(spec) + ": criterion says " +
                    (simple ? "simple" : "not simple") + " but the scan found " +
                    std::to_string(report.sets.size()) + " invariant set(s)";
        break;
      }
    }
    suite.checks.push_back(std::move(c));
  }

  {
    Check c{"degenerate cells carry the expected invariant sets", true, ""};
    for (const Rational& a : {Rational(2), Rational(-3)}) {
      std::int64_t ia = numerator(a).convert_to<std::int64_t>();
      for (std::int64_t b = 0; b <= 1 && c.pass; ++b) {
        ModuleSpec spec = ModuleSpec::aabc(a, b, 0);
        ScanReport report = submodule_scan(spec, N, G);
        std::vector<std::int64_t> expected;
        if (b == 0) {
          expected = {-ia};
        } else {
          for (std::int64_t t = -N + G; t <= N - G; ++t) {
            if (t != -ia) expected.push_back(t);
          }
        }
        bool ok = report.sets.size() == 1 && report.sets[0].indices == expected &&
                  report.sets[0].boundary == (b == 1);
        if (!ok) {
          c.pass = false;
          c.witness = to_text(spec) + ": scan output differs from the expected " +
                      (b == 0 ? "one-dimensional" : "codimension-one") + " set";
        }
      }
      if (!c.pass) break;
    }
    suite.checks.push_back(std::move(c));
  }

  suite.elapsed_seconds = timer.seconds();
  return suite;
}

Suite check_intertwiners(std::int64_t N, std::int64_t G) {
  Timer timer;
  Suite suite{"intertwiners", {}, {}, 0};
  const Rational half = make_rational(1, 2);
  auto unit = [](std::int64_t) { return Rational(1); };
  auto run = [&](const char* name, const ActionTable& src, const ActionTable& dst,
                 const std::function<Rational(std::int64_t)>& scale, std::int64_t shift,
                 bool expect_zero) {
    Check c{name, true, ""};
    try {
      IntertwinerReport r = intertwiner_residual(src, dst, scale, shift, N, G);
      if (r.zero != expect_zero) {
        c.pass = false;
        if (r.first_nonzero) {
          const auto& w = *r.first_nonzero;
          c.witness = "residual " + rational_to_string(w.value) + " at g = " + to_text(w.g) +
                      ", t = " + std::to_string(w.t);
        } else {
          c.witness = "residual vanished everywhere but a nonzero one was expected";
        }
      }
    } catch (const std::exception& e) {
      c.pass = false;
      c.witness = e.what();
    }
    suite.checks.push_back(std::move(c));
  };

  {
    FamilyTable src(ModuleSpec::vir_aab(make_rational(1, 3), make_rational(5, 2)));
    FamilyTable dst(ModuleSpec::vir_aab(make_rational(4, 3), make_rational(5, 2)));
    run("index shift (Vir family)", src, dst, unit, -1, true);
  }
  {
    FamilyTable src(ModuleSpec::vir_aab(half, 0));
    FamilyTable dst(ModuleSpec::vir_aab(half, 1));
    run("zero-b to unit-b rescale (Vir family)", src, dst,
        [&](std::int64_t t) { return half + t; }, 0, true);
  }
  {
    FamilyTable base_src(ModuleSpec::vir_aa(4));
    FamilyTable base_dst(ModuleSpec::vir_aab(0, 1));
    SubTable src(base_src, {0});
    SubTable dst(base_dst, {0});
    run("submodule chain (unit scale)", src, dst, unit, 0, true);
  }
  {
    FamilyTable base_src(ModuleSpec::vir_aa(4));
    FamilyTable base_dst(ModuleSpec::vir_aab(0, 0));
    SubTable src(base_src, {0});
    QuotientTable dst(base_dst, {0});
    run("submodule to quotient chain (reciprocal scale)", src, dst,
        [](std::int64_t t) { return make_rational(1, t); }, 0, true);
  }
  {
    FamilyTable base_src(ModuleSpec::vir_ba(2));
    FamilyTable base_dst(ModuleSpec::vir_aab(0, 0));
    QuotientTable src(base_src, {0});
    QuotientTable dst(base_dst, {0});
    run("quotient chain (unit scale)", src, dst, unit, 0, true);
  }
  {
    FamilyTable src(ModuleSpec::aabc(make_rational(1, 3), make_rational(5, 2), 7));
    FamilyTable dst(ModuleSpec::aabc(make_rational(4, 3), make_rational(5, 2), 7));
    run("index shift (full family)", src, dst, unit, -1, true);
  }
  {
    FamilyTable src(ModuleSpec::aabc(half, 1, 3));
    TwistedHeisenbergTable dst(half, 3, 0);
    run("twisted action realized over the constant-I table (b = 0 target)", src, dst,
        [&](std::int64_t t) { return Rational(1) / (half + t); }, 0, true);
  }
  {
    FamilyTable src(ModuleSpec::aabc(half, 0, 3));
    TwistedHeisenbergTable dst(half, 3, 1);
    run("twisted action realized over the constant-I table (b = 1 target)", src, dst,
        [&](std::int64_t t) { return half + t; }, 0, true);
  }
  {
    FamilyTable src(ModuleSpec::aabc(half, 0, 3));
    FamilyTable dst(ModuleSpec::aabc(half, 1, 3));
    run("literal b swap with nonzero I, rescale map (negative control)", src, dst,
        [&](std::int64_t t) { return half + t; }, 0, false);
    run("literal b swap with nonzero I, unit map (negative control)", src, dst, unit, 0,
        false);
  }
  {
    FamilyTable src(ModuleSpec::vir_aab(make_rational(1, 3), make_rational(5, 2)));
    FamilyTable dst(ModuleSpec::vir_aab(make_rational(1, 3), make_rational(5, 2)));
    run("mismatched shift (negative control)", src, dst, unit, -1, false);
  }
  {
    FamilyTable src(ModuleSpec::vir_aab(make_rational(1, 3), 2));
    FamilyTable dst(ModuleSpec::vir_aab(make_rational(1, 3), 3));
    run("mismatched b (negative control)", src, dst, unit, 0, false);
  }

  suite.notes.push_back(
      "The b <-> 1-b swap for the constant-I family with c != 0 admits no intertwiner "
      "(negative controls above); what does hold is the isomorphism onto the scaled "
      "Heisenberg twist, checked in both directions. The swap as commonly stated is "
      "only literal at c = 0.");

  suite.elapsed_seconds = timer.seconds();
  return suite;
}

Suite classify_suite(std::uint64_t seed, std::int64_t n1, std::int64_t g1, std::int64_t n2,
                     std::int64_t g2) {
  Timer timer;
  Suite suite{"classification", {}, {}, 0};
  const Rational a27 = make_rational(22, 7);
  std::vector<VirCase> cells = {
      VirCase::case_i(make_rational(1, 3), 5),
      VirCase::case_i(make_rational(1, 3), 0),
      VirCase::case_i(make_rational(1, 3), 1),
      VirCase::case_i(a27, a27),
      VirCase::case_i(a27, -a27),
      VirCase::case_i(a27, make_rational(11, 7)),
      VirCase::case_i(a27, make_rational(-11, 7)),
      VirCase::case_i(2, 5),
      VirCase::case_i(2, 0),
      VirCase::case_i(2, 1),
      VirCase::case_i(0, 0),
      VirCase::case_i(0, 1),
      VirCase::case_ii(4),
      VirCase::case_iii(2),
      VirCase::case_iv(),
  };

  for (const auto& cell : cells) {
    Check c{to_text(cell), true, ""};
    try {
      ClassificationReport small = classify(cell, n1, g1, seed);
      ClassificationReport large = classify(cell, n2, g2, seed);
      if (!(small.families == large.families)) {
        c.pass = false;
        c.witness = "family inventories differ between the two windows";
      } else {
        std::string inv;
        for (const auto& spec : large.families) {
          if (!inv.empty()) inv += ", ";
          inv += to_text(spec);
        }
        suite.notes.push_back(to_text(cell) + ": dimension " +
                              std::to_string(large.linear_dim) + ", lines " + inv);
      }
    } catch (const std::exception& e) {
      c.pass = false;
      c.witness = e.what();
    }
    suite.checks.push_back(std::move(c));
  }

  suite.elapsed_seconds = timer.seconds();
  return suite;
}

std::string to_json_string(const Suite& suite) {
  Json j;
  j["suite"] = suite.name;
  j["all_pass"] = suite.all_pass();
  Json checks = Json::array();
  for (const auto& c : suite.checks) {
    Json jc;
    jc["name"] = c.name;
    jc["pass"] = c.pass;
    if (!c.witness.empty()) jc["witness"] = c.witness;
    checks.push_back(std::move(jc));
  }
  j["checks"] = std::move(checks);
  j["notes"] = suite.notes;
  return j.dump();
}

}  // namespace hvlie
