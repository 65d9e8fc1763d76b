// Acceptance run: prints one PASS/FAIL line per numbered criterion.
// Usage: acceptance [criterion...]   (no arguments: all of them)

#include "k3/classify.hpp"
#include "k3/cohomology.hpp"
#include "k3/enumeration.hpp"
#include "k3/model_io.hpp"
#include "k3/registry.hpp"
#include "k3/scroll.hpp"

#include <chrono>
#include <functional>
#include <future>
#include <iostream>
#include <map>
#include <sstream>

using namespace k3;

namespace {

struct Result {
  bool ok = true;
  std::ostringstream notes;
  void expect(bool cond, const std::string& what) {
    if (!cond) {
      if (!ok) notes << "; ";
      ok = false;
      notes << what;
    }
  }
};

std::string str(Integer v) { return std::to_string(v); }

std::string str(const std::vector<Integer>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

Model model(const std::string& name) { return registry_model(name).model; }

DivisorClass cls(const Model& m, const std::string& expr) { return parse_class_expr(m, expr); }

std::vector<std::string> ordinary_models() {
  std::vector<std::string> out;
  for (const auto& n : registry_names())
    if (!registry_model(n).polarization_not_very_ample) out.push_back(n);
  return out;
}

// Surface/curve inequality recorded while criteria 3-5 classify models.
std::map<std::string, std::pair<Integer, Integer>> observed_pairs;

void record(const Model& m) {
  const Integer s = surface_normal_twist2(m).value;
  const CurveTwist c = curve_normal_twist2(m);
  observed_pairs[m.name()] = {s, c.exact ? c.value : c.lower};
}

Result criterion1() {
  Result r;
  const std::map<std::string, std::vector<std::pair<std::string, Integer>>> table = {
      {"L_T9", {{"H", 10}, {"H-E", 7}, {"H-2E", 4}, {"H-3E", 1}, {"H-4E", 0}}},
      {"L_T8", {{"H", 9}, {"H-E", 6}, {"H-2E", 3}, {"H-3E", 0}, {"H-4E", 0}}},
      {"L_T7", {{"H", 8}, {"H-E", 5}, {"H-2E", 2}}},
  };
  for (const auto& [name, rows] : table) {
    const Model m = model(name);
    for (const auto& [expr, want] : rows) {
      const Integer got = cohomology_dims(m, cls(m, expr)).h0;
      r.expect(got == want, name + " h0(" + expr + ") = " + str(got) + ", want " + str(want));
    }
  }
  return r;
}

Result criterion2() {
  Result r;
  struct Row {
    std::string model, pencil;
    std::vector<Integer> scroll, hyperplane;
  };
  const std::vector<Row> rows = {{"L_T9", "E", {3, 2, 2}, {4, 3}},
                                 {"L_T8", "E", {2, 2, 2}, {3, 3}},
                                 {"L_T7", "E", {2, 2, 1}, {3, 2}},
                                 {"L_I", "E", {3, 1, 1}, {3, 2}},
                                 {"L_VI", "E", {3, 2, 1, 0}, {3, 2, 1}}};
  for (const auto& row : rows) {
    const Model m = model(row.model);
    const ScrollType t = scroll_type(m, cls(m, row.pencil));
    r.expect(t.parts == row.scroll, row.model + " scroll " + str(t.parts) + ", want " + str(row.scroll));
    const HyperplaneScroll h = generic_hyperplane_scroll(t);
    r.expect(h.type.parts == row.hyperplane,
             row.model + " hyperplane " + str(h.type.parts) + ", want " + str(row.hyperplane));
  }
  return r;
}

Result criterion3() {
  Result r;
  const std::vector<std::pair<std::string, std::string>> cases = {
      {"L_I", "I"}, {"L_II", "II"}, {"L_III", "III"}, {"L_IV", "IV"}, {"L_V", "V"}, {"L_VI", "VI"}, {"L_DM", "VII"}};
  for (const auto& [name, label] : cases) {
    const Model m = model(name);
    const SurfaceTwist s = surface_normal_twist2(m);
    r.expect(s.value == 1 && s.case_label == label,
             name + " gives (" + str(s.value) + ", " + s.case_label + "), want (1, " + label + ")");
    record(m);
  }
  for (const auto& [name, want] : std::vector<std::pair<std::string, Integer>>{{"L_T5", 3}, {"L_T6", 1}}) {
    const Model m = model(name);
    const Integer got = surface_normal_twist2(m).value;
    r.expect(got == want, name + " gives " + str(got) + ", want " + str(want));
    record(m);
  }
  return r;
}

Result criterion4() {
  Result r;
  std::vector<std::string> names = {"L_T7", "L_T8", "L_T9", "L_T10", "L_92"};
  Integer controls = 0;
  for (const auto& n : registry_names())
    if (n.rfind("controls/", 0) == 0) {
      names.push_back(n);
      ++controls;
    }
  r.expect(controls >= 5, "only " + str(controls) + " shipped controls");
  for (const auto& name : names) {
    const Model m = model(name);
    const SurfaceTwist s = surface_normal_twist2(m);
    r.expect(s.value == 0, name + " gives (" + str(s.value) + ", " + s.case_label + "), want 0");
    record(m);
  }
  return r;
}

Result criterion5() {
  Result r;
  const std::vector<std::pair<std::string, Integer>> rows = {{"L_T5", 3}, {"L_T6", 2}, {"L_T7", 1}, {"L_T8", 0},
                                                             {"L_T9", 0}, {"L_I", 1},  {"L_92", 1}, {"L_DM", 1}};
  for (const auto& [name, want] : rows) {
    const Model m = model(name);
    const CurveTwist c = curve_normal_twist2(m);
    r.expect(c.exact && c.value == want,
             name + " gives " + (c.exact ? str(c.value) : "[" + str(c.lower) + "," + str(c.upper) + "]") +
                 ", want " + str(want));
    record(m);
  }
  return r;
}

Result criterion6() {
  Result r;
  for (const auto& [name, want] : std::vector<std::pair<std::string, Integer>>{
           {"L_JK7", 2}, {"L_JK8", 1}, {"L_JK9", 1}, {"L_JK10", 1}}) {
    const ModelFile f = registry_model(name);
    r.expect(f.polarization_not_very_ample, name + " is not flagged as a special member");
    const SpecialMemberReport rep = classify_special_member(f.model);
    r.expect(rep.h0_normal_curve.exact && rep.h0_normal_curve.value == want,
             name + " gives " + str(rep.h0_normal_curve.value) + ", want " + str(want));
    if (name == "L_JK7") {
      const RestrictionEstimate e = h0_restricted(f.model, cls(f.model, "E"), f.model.polarization());
      r.expect(e.exact && e.lower == 2, "L_JK7 h0(O_C(E)) in [" + str(e.lower) + "," + str(e.upper) + "], want 2");
    }
  }
  return r;
}

Result criterion7() {
  Result r;
  const std::map<std::string, std::string> special = {{"L_T6", "a"}, {"L_T7", "b"}, {"L_92", "c"}};
  for (const auto& name : ordinary_models()) {
    const auto it = special.find(name);
    const std::string want = it == special.end() ? "equal" : it->second;
    const Comparison c = compare_surface_curve(model(name));
    r.expect(c.case_name == want, name + " gives " + c.case_name + " (" + str(c.surface) + " vs " + str(c.curve) +
                                      "), want " + want);
  }
  return r;
}

Result criterion8() {
  Result r;
  for (const auto& name : registry_names()) {
    const Model m = model(name);
    if (genus_of(m) < 5) continue;
    for (Integer k : {3, 4})
      for (TwistTarget t : {TwistTarget::surface, TwistTarget::curve}) {
        const Integer v = normal_twist_k(m, k, t);
        r.expect(v == 0, name + " k=" + str(k) + (t == TwistTarget::surface ? " surface" : " curve") + " gives " +
                             str(v));
      }
  }
  return r;
}

// Checks one model over [-10,10]^rank with |D.H| <= 20.
std::string property_failures(const std::string& name, std::size_t& count) {
  const Model m = model(name);
  const GramMatrix& g = m.gram();
  std::ostringstream bad;
  auto fail = [&](const std::string& s) {
    if (bad.tellp() == 0) bad << name << ": " << s;
  };
  const Integer radius = 10;
  DivisorClass x = DivisorClass::Constant(m.rank(), -radius);
  for (;;) {
    const DivisorClass gx = g * x;
    const Integer deg = m.polarization().dot(gx);
    if (deg >= -20 && deg <= 20) {
      ++count;
      const Integer sq = x.dot(gx);
      const Integer chi = 2 + sq / 2;  // Riemann-Roch on a K3
      const bool eff = is_effective(m, x);
      if (eff != effective_oracle(m, x)) fail(render_class(m, x) + " effectivity disagrees with the oracle");
      const CohomologyDims d = cohomology_dims(m, x);
      const CohomologyDims dual = cohomology_dims(m, DivisorClass(-x));
      if (d.h0 - d.h1 + d.h2 != chi) fail(render_class(m, x) + " breaks Euler");
      if (d.h0 != dual.h2 || d.h1 != dual.h1 || d.h2 != dual.h0) fail(render_class(m, x) + " breaks Serre");
      // h0(O) = 1 < chi(O) = 2: the bound needs h2 = 0, i.e. a nonzero class.
      if (eff && !x.isZero() && d.h0 < chi) fail(render_class(m, x) + " has h0 < chi");
      if (eff && sq > 0 && is_nef(m, x) && d.h0 != chi) fail(render_class(m, x) + " is nef and big with h0 != chi");
      if (bad.tellp() != 0) break;
    }
    Eigen::Index i = 0;
    while (i < m.rank() && x(i) == radius) x(i++) = -radius;
    if (i == m.rank()) break;
    ++x(i);
  }
  return bad.str();
}

Result criterion9() {
  Result r;
  std::vector<std::future<std::pair<std::string, std::size_t>>> jobs;
  for (const auto& name : registry_names())
    jobs.push_back(std::async(std::launch::async, [name] {
      std::size_t count = 0;
      std::string bad = property_failures(name, count);
      return std::make_pair(bad, count);
    }));
  std::size_t total = 0;
  for (auto& j : jobs) {
    auto [bad, count] = j.get();
    total += count;
    r.expect(bad.empty(), bad);
  }
  if (r.ok) r.notes << total << " classes";
  return r;
}

Result criterion10() {
  Result r;
  if (observed_pairs.empty()) {
    criterion3();
    criterion4();
    criterion5();
  }
  for (const auto& name : ordinary_models())
    if (!observed_pairs.count(name)) record(model(name));
  for (const auto& [name, sc] : observed_pairs)
    r.expect(sc.first <= sc.second, name + ": surface " + str(sc.first) + " > curve " + str(sc.second));
  if (r.ok) r.notes << observed_pairs.size() << " models";
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Result()>>> criteria = {
      {"trigonal h0 tables", criterion1},
      {"scroll types and generic hyperplane scrolls", criterion2},
      {"surface twist, positive cases", criterion3},
      {"surface twist, negative controls", criterion4},
      {"curve twist values", criterion5},
      {"special members", criterion6},
      {"surface/curve comparison", criterion7},
      {"twist k >= 3 vanishes", criterion8},
      {"oracle equivalence and cohomology identities", criterion9},
      {"surface value <= curve value", criterion10},
  };
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::stoi(argv[i]));
  if (selected.empty())
    for (int i = 1; i <= static_cast<int>(criteria.size()); ++i) selected.push_back(i);

  int failures = 0;
  for (int n : selected) {
    if (n < 1 || n > static_cast<int>(criteria.size())) {
      std::cerr << "no criterion " << n << "\n";
      return 1;
    }
    const auto& [title, run] = criteria[static_cast<std::size_t>(n - 1)];
    const auto start = std::chrono::steady_clock::now();
    Result r;
    try {
      r = run();
    } catch (const std::exception& e) {
      r.ok = false;
      r.notes << "exception: " << e.what();
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    std::cout << "criterion " << n << ": " << (r.ok ? "PASS" : "FAIL") << " - " << title << " (" << ms << " ms)";
    if (!r.notes.str().empty()) std::cout << " [" << r.notes.str() << "]";
    std::cout << "\n";
    if (!r.ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
