#include "hvlie/solver.hpp"

#include "text_cursor.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>

namespace hvlie {
namespace {

using Json = nlohmann::ordered_json;

bool is_integer(const Rational& q) { return denominator(q) == 1; }

std::int64_t to_int(const Rational& q) {
  return numerator(q).convert_to<std::int64_t>();
}

const char* case_name(VirCaseKind k) {
  switch (k) {
    case VirCaseKind::I: return "I";
    case VirCaseKind::II: return "II";
    case VirCaseKind::III: return "III";
    case VirCaseKind::IV: return "IV";
  }
  return "?";
}

std::vector<std::string> case_param_names(VirCaseKind k) {
  switch (k) {
    case VirCaseKind::I: return {"a", "b"};
    case VirCaseKind::II:
    case VirCaseKind::III: return {"a"};
    case VirCaseKind::IV: return {};
  }
  return {};
}

/// Window entry of the linear residual of the rows against an assignment.
std::optional<std::size_t> first_linear_violation(const ConstraintSystem& sys,
                                                  const FAssignment& f) {
  for (std::size_t r = 0; r < sys.linear.rows; ++r) {
    Rational dot = 0;
    for (std::size_t c = 0; c < sys.linear.cols; ++c) {
      if (sys.linear.a[r][c] != 0) dot += sys.linear.a[r][c] * f.values[c];
    }
    if (dot != 0) return r;
  }
  return std::nullopt;
}

FAssignment pattern_from_table(const ActionTable& table, const FWindow& w,
                               std::int64_t shift) {
  FAssignment out = FAssignment::zeros(w);
  for (std::int64_t n = -w.G; n <= w.G; ++n) {
    for (std::int64_t t = -w.N; t <= w.N; ++t) {
      out.at(n, t) = table.act(BasisSymbol::I(n), t + shift).coeff;
    }
  }
  return out;
}

FAssignment pattern_from_family(const ModuleSpec& spec, const FWindow& w,
                                std::int64_t shift) {
  FamilyTable table(spec);
  return pattern_from_table(table, w, shift);
}

std::string describe(const VirCase& vc, const FWindow& w) {
  return to_text(vc) + " at N=" + std::to_string(w.N) + ", G=" + std::to_string(w.G);
}

}  // namespace

std::string to_text(const VirCase& vcase) {
  std::string out = case_name(vcase.kind);
  auto names = case_param_names(vcase.kind);
  if (names.empty()) return out;
  out += "[a=" + rational_to_string(vcase.a);
  if (names.size() == 2) out += ",b=" + rational_to_string(vcase.b);
  return out + "]";
}

VirCase parse_vir_case(const std::string& text) {
  detail::Cursor c{text};
  c.skip_ws();
  VirCaseKind kind;
  if (c.eat_lit("III")) {
    kind = VirCaseKind::III;
  } else if (c.eat_lit("IV")) {
    kind = VirCaseKind::IV;
  } else if (c.eat_lit("II")) {
    kind = VirCaseKind::II;
  } else if (c.eat_lit("I")) {
    kind = VirCaseKind::I;
  } else {
    c.fail("expected case I, II, III or IV");
  }
  VirCase out{kind, 0, 0};
  if (kind == VirCaseKind::IV) {
    c.expect_end();
    return out;
  }
  if (!c.eat('[')) c.fail("expected '['");
  if (!c.eat_lit("a=")) c.fail("expected 'a='");
  out.a = parse_rational(c.read_number_token());
  if (kind == VirCaseKind::I) {
    if (!c.eat_lit(",b=")) c.fail("expected ',b='");
    out.b = parse_rational(c.read_number_token());
  }
  if (!c.eat(']')) c.fail("expected ']'");
  c.expect_end();
  return out;
}

Rational vir_coeff(const VirCase& vcase, std::int64_t n, std::int64_t s) {
  switch (vcase.kind) {
    case VirCaseKind::I:
      return vcase.a + s + vcase.b * n;
    case VirCaseKind::II:
      return s != 0 ? Rational(s + n) : n * (vcase.a + n);
    case VirCaseKind::III:
      return s != -n ? Rational(s) : -n * (vcase.a + n);
    case VirCaseKind::IV:
      return n + s != 0 ? Rational(s) : Rational(0);
  }
  return 0;
}

std::size_t FWindow::var_id(std::int64_t n, std::int64_t t) const {
  if (!in_range(n, t)) {
    throw WindowError("f(" + std::to_string(n) + "," + std::to_string(t) +
                      ") outside window N=" + std::to_string(N) + ", G=" + std::to_string(G));
  }
  return static_cast<std::size_t>(n + G) * static_cast<std::size_t>(2 * N + 1) +
         static_cast<std::size_t>(t + N);
}

std::pair<std::int64_t, std::int64_t> FWindow::var_of(std::size_t id) const {
  std::int64_t span = 2 * N + 1;
  return {static_cast<std::int64_t>(id) / span - G,
          static_cast<std::int64_t>(id) % span - N};
}

const Rational& FAssignment::at(std::int64_t n, std::int64_t t) const {
  return values[window.var_id(n, t)];
}

Rational& FAssignment::at(std::int64_t n, std::int64_t t) {
  return values[window.var_id(n, t)];
}

ConstraintSystem build_constraints(const VirCase& vcase, std::int64_t N, std::int64_t G) {
  if (G < 1 || N < 3 * G) {
    throw WindowError("constraint window needs G >= 1 and N >= 3G");
  }
  ConstraintSystem sys{vcase, FWindow{N, G}, {}, {}};
  const FWindow& w = sys.window;

  std::vector<std::vector<Rational>> rows;
  for (std::int64_t n = -G; n <= G; ++n) {        // L-generator index
    for (std::int64_t m = -G; m <= G; ++m) {      // I-generator index
      if (m + n < -G || m + n > G) continue;
      for (std::int64_t t = -N; t <= N; ++t) {
        if (n + t < -N || n + t > N) continue;
        std::map<std::size_t, Rational> row;
        auto add = [&](std::size_t id, const Rational& coeff) {
          if (coeff == 0) return;
          auto [it, inserted] = row.emplace(id, coeff);
          if (!inserted) {
            it->second += coeff;
            if (it->second == 0) row.erase(it);
          }
        };
        add(w.var_id(m, t), vir_coeff(vcase, n, m + t));
        add(w.var_id(m, n + t), -vir_coeff(vcase, n, t));
        add(w.var_id(m + n, t), Rational(-m));
        if (row.empty()) continue;
        std::vector<Rational> dense(w.var_count());
        for (const auto& [id, coeff] : row) dense[id] = coeff;
        rows.push_back(std::move(dense));
      }
    }
  }
  sys.linear.rows = rows.size();
  sys.linear.cols = w.var_count();
  sys.linear.a = std::move(rows);

  for (std::int64_t m = -G; m <= G; ++m) {
    for (std::int64_t n = -G; n <= G; ++n) {
      if (m == n) continue;
      for (std::int64_t t = -N; t <= N; ++t) {
        if (n + t < -N || n + t > N || m + t < -N || m + t > N) continue;
        sys.quadratics.push_back({m, n, t});
      }
    }
  }
  return sys;
}

AffineSolution solve_affine(const ConstraintSystem& sys) {
  AffineSolution out{sys.window, 0, {}};
  auto basis = nullspace_basis(sys.linear);
  out.rank = sys.linear.cols - basis.size();
  for (auto& v : basis) {
    out.basis.push_back(FAssignment{sys.window, std::move(v)});
  }
  return out;
}

QuadraticReport heisenberg_residual(const FAssignment& f) {
  const FWindow& w = f.window;
  QuadraticReport report{true, 0, std::nullopt};
  for (std::int64_t m = -w.G; m <= w.G; ++m) {
    for (std::int64_t n = -w.G; n <= w.G; ++n) {
      if (m == n) continue;
      for (std::int64_t t = -w.N; t <= w.N; ++t) {
        if (n + t < -w.N || n + t > w.N || m + t < -w.N || m + t > w.N) continue;
        Rational lhs = f.at(n, t) * f.at(m, n + t);
        Rational rhs = f.at(m, t) * f.at(n, m + t);
        ++report.checked;
        if (lhs != rhs && report.zero) {
          report.zero = false;
          report.witness = QuadraticWitness{m, n, t, lhs, rhs};
        }
      }
    }
  }
  return report;
}

std::vector<ModuleSpec> match_family(const FAssignment& f, const VirCase& vcase) {
  const FWindow& w = f.window;
  auto matches = [&](const FAssignment& pattern) { return f == pattern; };
  std::vector<ModuleSpec> out;

  switch (vcase.kind) {
    case VirCaseKind::I: {
      Rational c = f.at(1, 1);
      {
        ModuleSpec spec = ModuleSpec::aabc(vcase.a, vcase.b, c);
        if (matches(pattern_from_family(spec, w, 0))) out.push_back(spec);
      }
      if (vcase.b != 0 && vcase.b != 1) break;
      std::int64_t b = to_int(vcase.b);
      if (!is_integer(vcase.a)) {
        Rational c2 = f.at(0, 1);
        if (c2 != 0) {
          TwistedHeisenbergTable table(vcase.a, c2, b);
          if (matches(pattern_from_table(table, w, 0))) {
            out.push_back(ModuleSpec::aabc(vcase.a, 1 - vcase.b, c2));
          }
        }
      } else {
        std::int64_t ia = to_int(vcase.a);
        if (ia >= -(w.N - w.G) && ia <= w.N - w.G) {
          if (b == 1) {
            Rational d = f.at(1, -ia);
            if (d != 0) {
              ModuleSpec spec = ModuleSpec::vd(d);
              if (matches(pattern_from_family(spec, w, ia))) out.push_back(spec);
            }
          } else {
            Rational d = f.at(1, -1 - ia);
            if (d != 0) {
              ModuleSpec spec = ModuleSpec::ud(d);
              if (matches(pattern_from_family(spec, w, ia))) out.push_back(spec);
            }
          }
        }
      }
      break;
    }
    case VirCaseKind::II: {
      ModuleSpec spec = ModuleSpec::aad(vcase.a, f.at(1, 0));
      if (matches(pattern_from_family(spec, w, 0))) out.push_back(spec);
      break;
    }
    case VirCaseKind::III: {
      ModuleSpec spec = ModuleSpec::bad(vcase.a, f.at(1, -1));
      if (matches(pattern_from_family(spec, w, 0))) out.push_back(spec);
      break;
    }
    case VirCaseKind::IV: {
      Rational d = f.at(1, -1);
      if (d != 0) {
        ModuleSpec spec = ModuleSpec::utilde(d);
        if (matches(pattern_from_family(spec, w, 0))) out.push_back(spec);
      }
      Rational c = f.at(1, 0);
      if (c != 0) {
        ModuleSpec spec = ModuleSpec::vtilde(c);
        if (matches(pattern_from_family(spec, w, 0))) out.push_back(spec);
      }
      break;
    }
  }
  return out;
}

std::vector<CataloguedLine> catalogue_for(const VirCase& vcase, const FWindow& w,
                                          const Rational& sample) {
  std::vector<CataloguedLine> out;
  switch (vcase.kind) {
    case VirCaseKind::I: {
      ModuleSpec base = ModuleSpec::aabc(vcase.a, vcase.b, sample);
      out.push_back({base, "c", pattern_from_family(base, w, 0)});
      if (vcase.b != 0 && vcase.b != 1) break;
      std::int64_t b = to_int(vcase.b);
      if (!is_integer(vcase.a)) {
        TwistedHeisenbergTable table(vcase.a, sample, b);
        out.push_back({ModuleSpec::aabc(vcase.a, 1 - vcase.b, sample), "c",
                       pattern_from_table(table, w, 0)});
      } else {
        std::int64_t ia = to_int(vcase.a);
        if (ia >= -(w.N - w.G) && ia <= w.N - w.G) {
          ModuleSpec spec = b == 1 ? ModuleSpec::vd(sample) : ModuleSpec::ud(sample);
          out.push_back({spec, "d", pattern_from_family(spec, w, ia)});
        }
      }
      break;
    }
    case VirCaseKind::II: {
      ModuleSpec spec = ModuleSpec::aad(vcase.a, sample);
      out.push_back({spec, "d", pattern_from_family(spec, w, 0)});
      break;
    }
    case VirCaseKind::III: {
      ModuleSpec spec = ModuleSpec::bad(vcase.a, sample);
      out.push_back({spec, "d", pattern_from_family(spec, w, 0)});
      break;
    }
    case VirCaseKind::IV: {
      ModuleSpec ut = ModuleSpec::utilde(sample);
      out.push_back({ut, "d", pattern_from_family(ut, w, 0)});
      ModuleSpec vt = ModuleSpec::vtilde(sample);
      out.push_back({vt, "c", pattern_from_family(vt, w, 0)});
      break;
    }
  }
  return out;
}

std::vector<std::string> identity_spot_checks(const FAssignment& f, const VirCase& vcase) {
  const FWindow& w = f.window;
  std::vector<std::string> fails;
  auto check = [&](const char* name, bool ok) {
    if (!ok) fails.push_back(name);
  };

  {
    bool ok = true;
    for (std::int64_t t = -w.N; t <= w.N; ++t) ok = ok && f.at(0, t) == f.at(0, 0);
    check("f(0,.) constant", ok);
  }

  switch (vcase.kind) {
    case VirCaseKind::I: {
      bool a_int = is_integer(vcase.a);
      // Constancy of the zero column survives only where no second line can
      // bend it: generic b, or the b = 0, a = 0 cell whose extra line
      // vanishes on the column. Twisted and shifted lines both break it.
      if ((vcase.b != 0 && vcase.b != 1) || (vcase.b == 0 && vcase.a == 0)) {
        bool ok = true;
        for (std::int64_t m = -w.G; m <= w.G; ++m) ok = ok && f.at(m, 0) == f.at(0, 0);
        check("f(.,0) constant", ok);
      }
      if (vcase.b == 0) {
        bool ok = true;
        for (std::int64_t k = 2; k <= w.G; ++k) {
          for (std::int64_t m = -w.G; m <= w.G; ++m) {
            if (k * m < -w.G || k * m > w.G) continue;
            Rational lhs = (k * m + vcase.a) * f.at(k * m, 0);
            Rational rhs = k * (m + vcase.a) * f.at(m, 0) - (k - 1) * vcase.a * f.at(0, 0);
            ok = ok && lhs == rhs;
          }
        }
        check("weighted f(.,0) recurrence", ok);
      }
      if (vcase.b == 1 && a_int) {
        bool add_ok = true, affine_ok = true;
        for (std::int64_t m = -w.G; m <= w.G; ++m) {
          affine_ok = affine_ok &&
                      f.at(m, 0) == m * (f.at(1, 0) - f.at(0, 0)) + f.at(0, 0);
          for (std::int64_t n = -w.G; n <= w.G; ++n) {
            if (m + n < -w.G || m + n > w.G) continue;
            add_ok = add_ok && f.at(m + n, 0) == f.at(m, 0) + f.at(n, 0) - f.at(0, 0);
          }
        }
        check("f(.,0) additive", add_ok);
        check("f(.,0) affine", affine_ok);
      }
      if (vcase.b == 0 && vcase.a == 0) {
        bool mean_ok = true;
        for (std::int64_t m = 1; m <= w.G; ++m) {
          mean_ok = mean_ok && f.at(m, -m) + f.at(-m, m) == 2 * f.at(0, 0);
        }
        check("antipodal mean", mean_ok);
        bool shift_ok = true;
        for (std::int64_t m = -w.G; m <= w.G; ++m) {
          if (m == 0) continue;
          for (std::int64_t n = -w.G; n <= w.G; ++n) {
            if (m - n < -w.G || m - n > w.G) continue;
            if (-n - m < -w.N || -n - m > w.N || -m < -w.N || -m > w.N) continue;
            shift_ok = shift_ok && f.at(m, -n - m) == f.at(m - n, -m);
          }
        }
        check("resonant shift equality", shift_ok);
      }
      break;
    }
    case VirCaseKind::II: {
      bool off_ok = true, lin_ok = true;
      for (std::int64_t m = -w.G; m <= w.G; ++m) {
        lin_ok = lin_ok && f.at(m, 0) == m * f.at(1, 0);
        for (std::int64_t t = -w.N; t <= w.N; ++t) {
          if (t != 0) off_ok = off_ok && f.at(m, t) == 0;
        }
      }
      check("support on t=0 only", off_ok);
      check("f(.,0) linear", lin_ok);
      break;
    }
    case VirCaseKind::III: {
      bool off_ok = true, lin_ok = true;
      for (std::int64_t m = -w.G; m <= w.G; ++m) {
        lin_ok = lin_ok && f.at(m, -m) == m * f.at(1, -1);
        for (std::int64_t t = -w.N; t <= w.N; ++t) {
          if (m + t != 0) off_ok = off_ok && f.at(m, t) == 0;
        }
      }
      check("support on m+t=0 only", off_ok);
      check("antidiagonal linear", lin_ok);
      break;
    }
    case VirCaseKind::IV: {
      check("f(0,0) = 0", f.at(0, 0) == 0);
      {
        bool ok = true;
        for (std::int64_t k = 2; k <= w.G; ++k) {
          for (std::int64_t t = -w.N; t <= w.N; ++t) {
            if (-k * t < -w.G || -k * t > w.G) continue;
            ok = ok && f.at(-k * t, t) == 0;
          }
        }
        check("f(-kt,t)=0 for k>=2", ok);
      }
      {
        bool ok = true;
        for (std::int64_t m = -w.G; m <= w.G; ++m) {
          if (m == 0) continue;
          for (std::int64_t n = -w.G; n <= w.G; ++n) {
            if (n == 0) continue;
            ok = ok && f.at(m, 0) == f.at(n, 0);
          }
        }
        check("f(.,0) constant off 0", ok);
      }
      {
        bool ok = true;
        for (std::int64_t t = -w.G; t <= w.G; ++t) {
          if (t == 0) continue;
          for (std::int64_t n = -w.G; n <= w.G; ++n) {
            if (n + t == 0 || n - t < -w.G || n - t > w.G) continue;
            if (n + t < -w.N || n + t > w.N) continue;
            ok = ok && f.at(-t, n + t) == f.at(n - t, t);
          }
        }
        check("resonant transport", ok);
      }
      {
        bool ok = true;
        for (std::int64_t t = -w.G; t <= w.G; ++t) {
          for (std::int64_t k = 1; k * t >= -w.N && k * t <= w.N; ++k) {
            ok = ok && f.at(t, k * t) == 0;
            if (t == 0) break;
          }
        }
        check("f(t,kt)=0 for k>=1", ok);
      }
      {
        bool ok = true;
        for (std::int64_t t = -w.N; t <= w.N; ++t) {
          for (std::int64_t k = -w.G - 1; k <= w.G + 1; ++k) {
            if (k == -1 || k == 0) continue;
            if (k * t < -w.G || k * t > w.G) continue;
            ok = ok && f.at(k * t, t) == 0;
          }
        }
        check("f(kt,t)=0 for k outside {-1,0}", ok);
      }
      {
        bool ok = true;
        for (std::int64_t n = -w.G; n <= w.G; ++n) {
          for (std::int64_t t = -w.N; t <= w.N; ++t) {
            if (n + t != 0 && t != 0) ok = ok && f.at(n, t) == 0;
          }
        }
        check("support on t=0 or n+t=0 only", ok);
      }
      break;
    }
  }
  return fails;
}

ClassificationReport classify(const VirCase& vcase, std::int64_t N, std::int64_t G,
                              std::uint64_t seed) {
  ConstraintSystem sys = build_constraints(vcase, N, G);
  AffineSolution sol = solve_affine(sys);
  const FWindow& w = sys.window;

  ClassificationReport rep{vcase, w, sol.rank, sol.basis.size(), sol.basis, {}, {}, {}};

  std::vector<Rational> samples{Rational(1), make_rational(-2, 3), make_rational(5, 7)};
  std::vector<CataloguedLine> lines = catalogue_for(vcase, w, samples[0]);
  if (lines.size() != sol.basis.size()) {
    throw ClassificationError("solution dimension " + std::to_string(sol.basis.size()) +
                              " does not equal catalogue size " +
                              std::to_string(lines.size()) + " for " + describe(vcase, w));
  }
  for (const auto& line : lines) rep.families.push_back(line.family);

  for (const auto& sample : samples) {
    for (const auto& line : catalogue_for(vcase, w, sample)) {
      std::string label = to_text(line.family) + " in " + describe(vcase, w);
      if (auto row = first_linear_violation(sys, line.pattern)) {
        throw ClassificationError("catalogued pattern " + label +
                                  " violates linear row " + std::to_string(*row));
      }
      QuadraticReport quad = heisenberg_residual(line.pattern);
      if (!quad.zero) {
        throw ClassificationError("catalogued pattern " + label +
                                  " fails its quadratic check");
      }
      std::vector<ModuleSpec> found = match_family(line.pattern, vcase);
      if (std::find(found.begin(), found.end(), line.family) == found.end()) {
        throw ClassificationError("match_family does not recover " + label);
      }
    }
  }

  // Sums of two distinct catalogued lines must leave the variety: the
  // solution set is a union of lines, not a plane.
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      FAssignment mixed = lines[i].pattern;
      for (std::size_t v = 0; v < mixed.values.size(); ++v) {
        mixed.values[v] += lines[j].pattern.values[v];
      }
      QuadraticReport quad = heisenberg_residual(mixed);
      if (quad.zero) {
        throw ClassificationError("sum of catalogued lines " + to_text(lines[i].family) +
                                  " + " + to_text(lines[j].family) +
                                  " unexpectedly satisfies the quadratics in " +
                                  describe(vcase, w));
      }
      if (!match_family(mixed, vcase).empty()) {
        throw ClassificationError("sum of catalogued lines matches a family in " +
                                  describe(vcase, w));
      }
      rep.violations.push_back(*quad.witness);
    }
  }

  std::vector<FAssignment> probes = sol.basis;
  for (std::size_t i = 0; i < sol.basis.size(); ++i) {
    for (std::size_t j = i + 1; j < sol.basis.size(); ++j) {
      FAssignment sum = sol.basis[i];
      for (std::size_t v = 0; v < sum.values.size(); ++v) {
        sum.values[v] += sol.basis[j].values[v];
      }
      probes.push_back(std::move(sum));
    }
  }
  Rng rng(seed);
  for (int k = 0; k < 8 && !sol.basis.empty(); ++k) {
    FAssignment combo = FAssignment::zeros(w);
    for (const auto& b : sol.basis) {
      Rational coeff = rng.next_nonzero_rational();
      for (std::size_t v = 0; v < combo.values.size(); ++v) {
        combo.values[v] += coeff * b.values[v];
      }
    }
    probes.push_back(std::move(combo));
  }

  for (const auto& probe : probes) {
    QuadraticReport quad = heisenberg_residual(probe);
    std::vector<ModuleSpec> found = match_family(probe, vcase);
    if (quad.zero && found.empty()) {
      throw ClassificationError("probe satisfies the quadratics but matches no family in " +
                                describe(vcase, w));
    }
    if (!quad.zero && !found.empty()) {
      throw ClassificationError("probe fails the quadratics yet matches " +
                                to_text(found.front()) + " in " + describe(vcase, w));
    }
    if (quad.zero) {
      auto bad = identity_spot_checks(probe, vcase);
      if (!bad.empty()) {
        throw ClassificationError("identity \"" + bad.front() +
                                  "\" fails on an on-variety probe in " + describe(vcase, w));
      }
    }
    rep.probes.push_back({probe, quad.zero, std::move(found)});
  }
  return rep;
}

std::string to_json_string(const ClassificationReport& report) {
  Json j;
  j["case"] = case_name(report.vcase.kind);
  Json params = Json::object();
  auto names = case_param_names(report.vcase.kind);
  if (!names.empty()) params["a"] = rational_to_string(report.vcase.a);
  if (names.size() == 2) params["b"] = rational_to_string(report.vcase.b);
  j["params"] = std::move(params);
  j["window"] = {{"N", report.window.N}, {"G", report.window.G}};
  j["rank"] = report.rank;
  j["linear_dim"] = report.linear_dim;

  Json basis = Json::array();
  for (const auto& f : report.basis) {
    Json entries = Json::array();
    for (std::size_t id = 0; id < f.values.size(); ++id) {
      if (f.values[id] == 0) continue;
      auto [n, t] = f.window.var_of(id);
      entries.push_back({{"n", n},
                         {"t", t},
                         {"num", numerator_string(f.values[id])},
                         {"den", denominator_string(f.values[id])}});
    }
    basis.push_back(std::move(entries));
  }
  j["basis"] = std::move(basis);

  Json matches = Json::array();
  for (const auto& spec : report.families) {
    Json m;
    m["family"] = family_name(spec.tag);
    Json p = Json::object();
    for (const auto& name : family_param_names(spec.tag)) {
      if (name == "a") p[name] = rational_to_string(spec.a);
      if (name == "b") p[name] = rational_to_string(spec.b);
      if (name == "c") p[name] = rational_to_string(spec.c);
      if (name == "d") p[name] = rational_to_string(spec.d);
    }
    m["params"] = std::move(p);
    matches.push_back(std::move(m));
  }
  j["matches"] = std::move(matches);

  Json violations = Json::array();
  for (const auto& v : report.violations) {
    violations.push_back({{"m", v.m},
                          {"n", v.n},
                          {"t", v.t},
                          {"lhs", rational_to_string(v.lhs)},
                          {"rhs", rational_to_string(v.rhs)}});
  }
  j["violations"] = std::move(violations);
  return j.dump();
}

}  // namespace hvlie
