#include "k3/report.hpp"

#include <sstream>

namespace k3 {

namespace {

using nlohmann::json;

json coords(const DivisorClass& d) {
  json a = json::array();
  for (Eigen::Index i = 0; i < d.size(); ++i) a.push_back(d(i));
  return a;
}

json parts(const ScrollType& t) { return json(t.parts); }

json curve_value(const CurveTwist& c) {
  if (c.exact) return c.value;
  return json{{"lower", c.lower}, {"upper", c.upper}};
}

json restriction_value(const RestrictionEstimate& e) {
  if (e.exact) return e.lower;
  return json{{"lower", e.lower}, {"upper", e.upper}};
}

std::string join(const json& arr) {
  std::string s;
  for (const auto& v : arr) {
    if (!s.empty()) s += v.is_string() ? ", " : ",";
    s += v.is_string() ? v.get<std::string>() : v.dump();
  }
  return s;
}

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_object() && v.contains("lower")) return "[" + v["lower"].dump() + ", " + v["upper"].dump() + "]";
  if (v.is_array()) return "(" + join(v) + ")";
  return v.dump();
}

}  // namespace

json report_to_json(const Model& m, const ClassificationReport& r) {
  json j;
  j["model"] = r.model_name;
  j["genus"] = r.genus;
  j["clifford"] = to_string(r.clifford.value);
  if (r.clifford.witness) {
    j["clifford_witness"] = {{"class", render_class(m, *r.clifford.witness)},
                             {"coords", coords(*r.clifford.witness)},
                             {"kind", r.clifford.witness_kind},
                             {"square", r.clifford.witness_square},
                             {"degree", r.clifford.witness_degree}};
  }
  j["h0_NS_minus2"] = r.h0_normal_surface;
  j["h0_NC_minus2"] = curve_value(r.h0_normal_curve);
  j["case_label"] = r.case_label;
  j["comparison_case"] = r.comparison_case;
  if (r.scroll) j["scroll_type"] = parts(*r.scroll);
  if (r.hyperplane_scroll) {
    j["hyperplane_scroll"] = parts(r.hyperplane_scroll->type);
    j["hyperplane_scroll_extrapolated"] = r.hyperplane_scroll->extrapolated;
  }
  if (r.b_invariants) {
    j["b_invariants"] = {r.b_invariants->b1, r.b_invariants->b2};
    j["b_invariants_determined"] = r.b_invariants->determined;
    if (!r.b_invariants->determined) j["b1_alternative"] = r.b_invariants->b1_alternative;
  }
  j["citations"] = r.citations;
  j["assumptions"] = r.assumptions;
  return j;
}

json report_to_json(const Model& m, const SpecialMemberReport& r) {
  json j;
  j["model"] = r.model_name;
  j["genus"] = r.genus;
  json contracted = json::array();
  for (const auto& c : r.contracted) contracted.push_back(render_class(m, c));
  json sm;
  sm["contracted_roots"] = contracted;
  if (r.trigonal_pencil) sm["trigonal_pencil"] = render_class(m, *r.trigonal_pencil);
  sm["h0_OC_E"] = restriction_value(r.h0_pencil_restricted);
  sm["h0_NC_minus2"] = curve_value(r.h0_normal_curve);
  j["special_member"] = sm;
  j["citations"] = r.citations;
  j["assumptions"] = r.assumptions;
  return j;
}

namespace {

std::string text_of(const json& j) {
  std::ostringstream os;
  for (const auto& [k, v] : j.items()) {
    if (k == "citations" || k == "assumptions") continue;
    if (v.is_object() && !v.contains("lower")) {
      for (const auto& [k2, v2] : v.items()) os << k << "." << k2 << ": " << scalar_text(v2) << "\n";
    } else {
      os << k << ": " << scalar_text(v) << "\n";
    }
  }
  os << "citations: " << join(j["citations"]) << "\n";
  for (const auto& a : j["assumptions"]) os << "assumes: " << a.get<std::string>() << "\n";
  return os.str();
}

}  // namespace

std::string report_to_text(const Model& m, const ClassificationReport& r) { return text_of(report_to_json(m, r)); }
std::string report_to_text(const Model& m, const SpecialMemberReport& r) { return text_of(report_to_json(m, r)); }

json classify_model_file(const ModelFile& f) {
  if (f.polarization_not_very_ample) return report_to_json(f.model, classify_special_member(f.model));
  return report_to_json(f.model, classify(f.model));
}

std::string classify_model_file_text(const ModelFile& f) { return text_of(classify_model_file(f)); }

std::vector<ExpectationMismatch> check_expected(const ModelFile& f, const json& report) {
  std::vector<ExpectationMismatch> out;
  if (f.expected.is_null()) return out;
  auto compare = [&](const std::string& key, const json& want, const json* got) {
    if (!got)
      out.push_back({key, want.dump(), "absent"});
    else if (*got != want)
      out.push_back({key, want.dump(), got->dump()});
  };
  for (const auto& [key, want] : f.expected.items()) {
    if (key == "h0") {
      for (const auto& [expr, value] : want.items()) {
        const json got = h0(f.model, parse_class_expr(f.model, expr, f.classes));
        compare("h0(" + expr + ")", value, &got);
      }
    } else if (key == "special_member") {
      const json* sm = report.contains("special_member") ? &report["special_member"] : nullptr;
      for (const auto& [k2, v2] : want.items())
        compare("special_member." + k2, v2, sm && sm->contains(k2) ? &(*sm)[k2] : nullptr);
    } else {
      compare(key, want, report.contains(key) ? &report[key] : nullptr);
    }
  }
  return out;
}

}  // namespace k3
