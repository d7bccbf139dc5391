#include "hvlie/families.hpp"

#include "text_cursor.hpp"

#include <json.hpp>

#include <algorithm>
#include <deque>

namespace hvlie {
namespace {

using Json = nlohmann::ordered_json;

bool is_integer(const Rational& q) { return denominator(q) == 1; }

void add_to(WeightVector& v, std::int64_t idx, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = v.emplace(idx, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) v.erase(it);
  }
}

WeightAction act_impl(const ModuleSpec& spec, const BasisSymbol& g, std::int64_t t,
                      bool defect) {
  std::int64_t n = g.index;
  WeightAction out{Rational(0), t + g.degree()};
  if (g.tag == SymbolTag::L) {
    switch (spec.tag) {
      case FamilyTag::VirAab:
      case FamilyTag::Aabc:
        out.coeff = spec.a + t + spec.b * n;
        break;
      case FamilyTag::VirAa:
      case FamilyTag::Aad:
        out.coeff = t != 0 ? Rational(t + n) : n * (spec.a + n);
        break;
      case FamilyTag::VirBa:
      case FamilyTag::Bad:
        out.coeff = t != -n ? Rational(t) : -n * (spec.a + n);
        break;
      case FamilyTag::Ud:
        out.coeff = t;
        break;
      case FamilyTag::Vd:
        out.coeff = t + n;
        break;
      case FamilyTag::Utilde:
      case FamilyTag::Vtilde:
        out.coeff = n + t != 0 ? Rational(t) : Rational(0);
        break;
    }
    if (defect && n < 0) out.coeff = -out.coeff;
  } else if (g.tag == SymbolTag::I) {
    switch (spec.tag) {
      case FamilyTag::VirAab:
      case FamilyTag::VirAa:
      case FamilyTag::VirBa:
        break;
      case FamilyTag::Aabc:
        out.coeff = spec.c;
        break;
      case FamilyTag::Aad:
      case FamilyTag::Vd:
        if (t == 0) out.coeff = spec.d * n;
        break;
      case FamilyTag::Bad:
      case FamilyTag::Ud:
      case FamilyTag::Utilde:
        if (n + t == 0) out.coeff = spec.d * n;
        break;
      case FamilyTag::Vtilde:
        if (t == 0 && n != 0) out.coeff = spec.c;
        break;
    }
  }
  // central symbols act as zero in every catalogued family
  return out;
}

WeightVector act_elem_impl(const ModuleSpec& spec, const AlgebraElement& x,
                           const WeightVector& v, bool defect) {
  WeightVector out;
  for (const auto& [idx, cv] : v) {
    for (const auto& [s, cx] : x.terms()) {
      WeightAction wa = act_impl(spec, s, idx, defect);
      add_to(out, wa.target, cv * cx * wa.coeff);
    }
  }
  return out;
}

WeightVector rep_residual_impl(const ModuleSpec& spec, const AlgebraElement& x,
                               const AlgebraElement& y, std::int64_t t, bool defect) {
  WeightVector unit{{t, Rational(1)}};
  WeightVector out = act_elem_impl(spec, bracket(x, y), unit, defect);
  WeightVector xy = act_elem_impl(spec, x, act_elem_impl(spec, y, unit, defect), defect);
  WeightVector yx = act_elem_impl(spec, y, act_elem_impl(spec, x, unit, defect), defect);
  for (const auto& [idx, c] : xy) add_to(out, idx, -c);
  for (const auto& [idx, c] : yx) add_to(out, idx, c);
  return out;
}

ModuleSpec checked(ModuleSpec spec) {
  if (spec.tag == FamilyTag::Utilde && spec.d == 0) {
    throw std::domain_error("Utilde requires d != 0");
  }
  if (spec.tag == FamilyTag::Vtilde && spec.c == 0) {
    throw std::domain_error("Vtilde requires c != 0");
  }
  return spec;
}

const Rational& param_by_name(const ModuleSpec& spec, const std::string& name) {
  if (name == "a") return spec.a;
  if (name == "b") return spec.b;
  if (name == "c") return spec.c;
  if (name == "d") return spec.d;
  throw std::invalid_argument("unknown parameter \"" + name + "\"");
}

Rational& param_by_name(ModuleSpec& spec, const std::string& name) {
  return const_cast<Rational&>(param_by_name(static_cast<const ModuleSpec&>(spec), name));
}

}  // namespace

const char* family_name(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::VirAab:
    case FamilyTag::VirAa:
    case FamilyTag::Aabc:
    case FamilyTag::Aad: return "A";
    case FamilyTag::VirBa:
    case FamilyTag::Bad: return "B";
    case FamilyTag::Ud: return "U";
    case FamilyTag::Vd: return "V";
    case FamilyTag::Utilde: return "Utilde";
    case FamilyTag::Vtilde: return "Vtilde";
  }
  return "?";
}

std::vector<std::string> family_param_names(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::VirAab: return {"a", "b"};
    case FamilyTag::VirAa: return {"a"};
    case FamilyTag::VirBa: return {"a"};
    case FamilyTag::Aabc: return {"a", "b", "c"};
    case FamilyTag::Aad: return {"a", "d"};
    case FamilyTag::Bad: return {"a", "d"};
    case FamilyTag::Ud:
    case FamilyTag::Vd:
    case FamilyTag::Utilde: return {"d"};
    case FamilyTag::Vtilde: return {"c"};
  }
  return {};
}

ModuleSpec ModuleSpec::vir_aab(const Rational& a, const Rational& b) {
  return {FamilyTag::VirAab, a, b, 0, 0};
}
ModuleSpec ModuleSpec::vir_aa(const Rational& a) { return {FamilyTag::VirAa, a, 0, 0, 0}; }
ModuleSpec ModuleSpec::vir_ba(const Rational& a) { return {FamilyTag::VirBa, a, 0, 0, 0}; }
ModuleSpec ModuleSpec::aabc(const Rational& a, const Rational& b, const Rational& c) {
  return {FamilyTag::Aabc, a, b, c, 0};
}
ModuleSpec ModuleSpec::aad(const Rational& a, const Rational& d) {
  return {FamilyTag::Aad, a, 0, 0, d};
}
ModuleSpec ModuleSpec::bad(const Rational& a, const Rational& d) {
  return {FamilyTag::Bad, a, 0, 0, d};
}
ModuleSpec ModuleSpec::ud(const Rational& d) { return {FamilyTag::Ud, 0, 0, 0, d}; }
ModuleSpec ModuleSpec::vd(const Rational& d) { return {FamilyTag::Vd, 0, 0, 0, d}; }
ModuleSpec ModuleSpec::utilde(const Rational& d) {
  return checked({FamilyTag::Utilde, 0, 0, 0, d});
}
ModuleSpec ModuleSpec::vtilde(const Rational& c) {
  return checked({FamilyTag::Vtilde, 0, 0, c, 0});
}

ModuleSpec make_module(FamilyTag tag, const std::map<std::string, Rational>& params) {
  std::vector<std::string> names = family_param_names(tag);
  if (params.size() != names.size()) {
    throw std::invalid_argument(std::string("family ") + family_name(tag) +
                                " takes " + std::to_string(names.size()) + " parameters");
  }
  ModuleSpec spec{tag, 0, 0, 0, 0};
  for (const auto& name : names) {
    auto it = params.find(name);
    if (it == params.end()) {
      throw std::invalid_argument(std::string("family ") + family_name(tag) +
                                  " is missing parameter \"" + name + "\"");
    }
    param_by_name(spec, name) = it->second;
  }
  return checked(spec);
}

std::string to_text(const ModuleSpec& spec) {
  std::string out = family_name(spec.tag);
  out += "[";
  bool first = true;
  for (const auto& name : family_param_names(spec.tag)) {
    if (!first) out += ",";
    first = false;
    out += name + "=" + rational_to_string(param_by_name(spec, name));
  }
  return out + "]";
}

ModuleSpec parse_module_spec(const std::string& text) {
  detail::Cursor c{text};
  c.skip_ws();
  std::size_t start = c.pos;
  while (c.pos < c.s.size() && std::isalpha(static_cast<unsigned char>(c.s[c.pos]))) ++c.pos;
  std::string name = c.s.substr(start, c.pos - start);
  if (!c.eat('[')) c.fail("expected '['");
  std::map<std::string, Rational> params;
  while (!c.eat(']')) {
    if (!params.empty() && !c.eat(',')) c.fail("expected ',' or ']'");
    if (c.pos >= c.s.size() || !std::isalpha(static_cast<unsigned char>(c.s[c.pos]))) {
      c.fail("expected parameter name");
    }
    std::string key(1, c.s[c.pos++]);
    if (!c.eat('=')) c.fail("expected '='");
    if (!params.emplace(key, parse_rational(c.read_number_token())).second) {
      c.fail("duplicate parameter \"" + key + "\"");
    }
  }
  c.expect_end();

  std::set<std::string> keys;
  for (const auto& [k, v] : params) keys.insert(k);
  for (FamilyTag tag : {FamilyTag::VirAab, FamilyTag::VirAa, FamilyTag::VirBa,
                        FamilyTag::Aabc, FamilyTag::Aad, FamilyTag::Bad, FamilyTag::Ud,
                        FamilyTag::Vd, FamilyTag::Utilde, FamilyTag::Vtilde}) {
    if (family_name(tag) != name) continue;
    auto names = family_param_names(tag);
    if (std::set<std::string>(names.begin(), names.end()) == keys) {
      return make_module(tag, params);
    }
  }
  throw std::invalid_argument("no family named \"" + name +
                              "\" with the given parameter set in \"" + text + "\"");
}

WeightAction act(const ModuleSpec& spec, const BasisSymbol& g, std::int64_t t) {
  return act_impl(spec, g, t, false);
}

WeightVector act(const ModuleSpec& spec, const AlgebraElement& x, std::int64_t t) {
  return act_elem_impl(spec, x, WeightVector{{t, Rational(1)}}, false);
}

WeightVector act(const ModuleSpec& spec, const AlgebraElement& x, const WeightVector& v) {
  return act_elem_impl(spec, x, v, false);
}

WeightVector module_rep_residual(const ModuleSpec& spec, const AlgebraElement& x,
                                 const AlgebraElement& y, std::int64_t t) {
  return rep_residual_impl(spec, x, y, t, false);
}

bool simplicity_predicate(const ModuleSpec& spec) {
  if (spec.tag != FamilyTag::Aabc) {
    throw std::invalid_argument("simplicity predicate covers the A[a,b,c] family only");
  }
  bool degenerate = is_integer(spec.a) && (spec.b == 0 || spec.b == 1) && spec.c == 0;
  return !degenerate;
}

ScanReport submodule_scan(const ModuleSpec& spec, std::int64_t N, std::int64_t G) {
  if (G < 1 || N < 2 * G) {
    throw WindowError("submodule scan needs G >= 1 and N >= 2G");
  }
  std::int64_t lo = -N + G, hi = N - G;
  std::size_t core_size = static_cast<std::size_t>(hi - lo + 1);

  std::map<std::vector<std::int64_t>, bool> found;
  for (std::int64_t seed = lo; seed <= hi; ++seed) {
    std::set<std::int64_t> closure{seed};
    std::deque<std::int64_t> queue{seed};
    bool boundary = false;
    while (!queue.empty()) {
      std::int64_t t = queue.front();
      queue.pop_front();
      for (std::int64_t n = -G; n <= G; ++n) {
        for (SymbolTag tag : {SymbolTag::L, SymbolTag::I}) {
          WeightAction wa = act(spec, BasisSymbol{tag, n}, t);
          if (wa.coeff == 0) continue;
          if (wa.target < lo || wa.target > hi) {
            boundary = true;
          } else if (closure.insert(wa.target).second) {
            queue.push_back(wa.target);
          }
        }
      }
    }
    if (closure.size() == core_size) continue;
    found.emplace(std::vector<std::int64_t>(closure.begin(), closure.end()), boundary);
  }

  ScanReport report{N, G, {}};
  for (const auto& [indices, boundary] : found) {
    report.sets.push_back({indices, boundary});
  }
  std::sort(report.sets.begin(), report.sets.end(), [](const auto& x, const auto& y) {
    if (x.indices.size() != y.indices.size()) return x.indices.size() < y.indices.size();
    return x.indices < y.indices;
  });
  return report;
}

std::string to_json_string(const ModuleSpec& spec, const ScanReport& report) {
  Json j;
  j["family"] = family_name(spec.tag);
  Json params = Json::object();
  for (const auto& name : family_param_names(spec.tag)) {
    params[name] = rational_to_string(param_by_name(spec, name));
  }
  j["params"] = std::move(params);
  j["window"] = {{"N", report.N}, {"G", report.G}};
  Json sets = Json::array();
  Json flags = Json::array();
  for (const auto& s : report.sets) {
    sets.push_back(s.indices);
    flags.push_back(s.boundary);
  }
  j["invariant_sets"] = std::move(sets);
  j["boundary_flags"] = std::move(flags);
  return j.dump();
}

bool SubTable::in_domain(std::int64_t t) const {
  return !removed_.count(t) && base_.in_domain(t);
}

WeightAction SubTable::act(const BasisSymbol& g, std::int64_t t) const {
  if (!in_domain(t)) throw std::domain_error("index outside subspace");
  WeightAction wa = base_.act(g, t);
  if (wa.coeff != 0 && removed_.count(wa.target)) {
    throw std::logic_error("removed span is not invariant: " + to_text(g) + " from " +
                           std::to_string(t) + " hits " + std::to_string(wa.target));
  }
  return wa;
}

bool QuotientTable::in_domain(std::int64_t t) const {
  return !killed_.count(t) && base_.in_domain(t);
}

WeightAction QuotientTable::act(const BasisSymbol& g, std::int64_t t) const {
  if (!in_domain(t)) throw std::domain_error("index killed by quotient");
  WeightAction wa = base_.act(g, t);
  if (killed_.count(wa.target)) wa.coeff = 0;
  return wa;
}

WeightAction TwistedHeisenbergTable::act(const BasisSymbol& g, std::int64_t t) const {
  std::int64_t n = g.index;
  WeightAction out{Rational(0), t + g.degree()};
  if (g.tag == SymbolTag::L) {
    out.coeff = a_ + t + b_ * n;
  } else if (g.tag == SymbolTag::I) {
    Rational den = a_ + t + (1 - b_) * n;
    if (den == 0) throw std::domain_error("twisted action needs a non-integral");
    out.coeff = c_ * (a_ + t + b_ * n) / den;
  }
  return out;
}

IntertwinerReport intertwiner_residual(const ActionTable& src, const ActionTable& dst,
                                       const std::function<Rational(std::int64_t)>& scale,
                                       std::int64_t shift, std::int64_t N, std::int64_t G) {
  if (G < 1 || N < G) throw WindowError("intertwiner check needs 1 <= G <= N");
  IntertwinerReport report{true, 0, std::nullopt};
  for (std::int64_t t = -N; t <= N; ++t) {
    if (!src.in_domain(t) || !dst.in_domain(t + shift)) continue;
    if (scale(t) == 0) {
      throw std::domain_error("scale vanishes at index " + std::to_string(t));
    }
    for (std::int64_t n = -G; n <= G; ++n) {
      if (t + n < -N || t + n > N) continue;
      for (SymbolTag tag : {SymbolTag::L, SymbolTag::I}) {
        BasisSymbol g{tag, n};
        Rational r = 0;
        WeightAction sa = src.act(g, t);
        if (sa.coeff != 0) {
          if (!src.in_domain(sa.target) || !dst.in_domain(sa.target + shift)) {
            throw std::logic_error("action leaves the compared domains at index " +
                                   std::to_string(sa.target));
          }
          r += sa.coeff * scale(sa.target);
        }
        WeightAction da = dst.act(g, t + shift);
        if (da.coeff != 0) r -= scale(t) * da.coeff;
        ++report.checked;
        if (r != 0 && report.zero) {
          report.zero = false;
          report.first_nonzero = IntertwinerWitness{g, t, r};
        }
      }
    }
  }
  return report;
}

namespace selftest {

WeightAction act_defect(const ModuleSpec& spec, const BasisSymbol& g, std::int64_t t) {
  return act_impl(spec, g, t, true);
}

WeightVector module_rep_residual_defect(const ModuleSpec& spec, const AlgebraElement& x,
                                        const AlgebraElement& y, std::int64_t t) {
  return rep_residual_impl(spec, x, y, t, true);
}

}  // namespace selftest

}  // namespace hvlie
