#include "k3/registry.hpp"

#include <filesystem>
#include <utility>

namespace k3 {

namespace {

// Each entry is a complete model document; "expected" holds values the
// test suite and `verify` compare against.
const std::vector<std::pair<std::string, std::string>>& entries() {
  static const std::vector<std::pair<std::string, std::string>> data = {
    {"L_T5", R"json({"H": [1, 0], "basis_labels": ["H", "E"], "description": "general trigonal K3 of genus 5: elliptic pencil E with E.H = 3", "expected": {"case_label": "none", "clifford": "1", "comparison_case": "equal", "genus": 5, "h0": {"H": 6, "H-2E": 0, "H-E": 3}, "h0_NC_minus2": 3, "h0_NS_minus2": 3, "hyperplane_scroll": [2, 1], "scroll_type": [1, 1, 1]}, "gram": [[8, 3], [3, 0]], "name": "L_T5", "rank": 2})json"},
    {"L_T6", R"json({"H": [1, 0], "basis_labels": ["H", "E"], "description": "general trigonal K3 of genus 6: elliptic pencil E with E.H = 3", "expected": {"case_label": "none", "clifford": "1", "comparison_case": "a", "genus": 6, "h0": {"H": 7, "H-2E": 1, "H-3E": 0, "H-E": 4}, "h0_NC_minus2": 2, "h0_NS_minus2": 1, "hyperplane_scroll": [2, 2], "scroll_type": [2, 1, 1]}, "gram": [[10, 3], [3, 0]], "name": "L_T6", "rank": 2})json"},
    {"L_T7", R"json({"H": [1, 0], "basis_labels": ["H", "E"], "description": "general trigonal K3 of genus 7: elliptic pencil E with E.H = 3", "expected": {"case_label": "none", "clifford": "1", "comparison_case": "b", "genus": 7, "h0": {"H": 8, "H-2E": 2, "H-3E": 0, "H-E": 5}, "h0_NC_minus2": 1, "h0_NS_minus2": 0, "hyperplane_scroll": [3, 2], "scroll_type": [2, 2, 1]}, "gram": [[12, 3], [3, 0]], "name": "L_T7", "rank": 2})json"},
    {"L_T8", R"json({"H": [1, 0], "basis_labels": ["H", "E"], "description": "general trigonal K3 of genus 8: elliptic pencil E with E.H = 3", "expected": {"case_label": "none", "clifford": "1", "comparison_case": "equal", "genus": 8, "h0": {"H": 9, "H-2E": 3, "H-3E": 0, "H-4E": 0, "H-E": 6}, "h0_NC_minus2": 0, "h0_NS_minus2": 0, "hyperplane_scroll": [3, 3], "scroll_type": [2, 2, 2]}, "gram": [[14, 3], [3, 0]], "name": "L_T8", "rank": 2})json"},
    {"L_T9", R"json({"H": [1, 0], "basis_labels": ["H", "E"], "description": "general trigonal K3 of genus 9: elliptic pencil E with E.H = 3", "expected": {"case_label": "none", "clifford": "1", "comparison_case": "equal", "genus": 9, "h0": {"H": 10, "H-2E": 4, "H-3E": 1, "H-4E": 0, "H-E": 7}, "h0_NC_minus2": 0, "h0_NS_minus2": 0, "hyperplane_scroll": [4, 3], "scroll_type": [3, 2, 2]}, "gram": [[16, 3], [3, 0]], "name": "L_T9", "rank": 2})json"},
    {"L_T10", R"json({"H": [1, 0], "basis_labels": ["H", "E"], "description": "general trigonal K3 of genus 10: elliptic pencil E with E.H = 3", "expected": {"case_label": "none", "clifford": "1", "comparison_case": "equal", "genus": 10, "h0": {"H": 11, "H-2E": 5, "H-3E": 2, "H-4E": 0, "H-6E": 0, "H-E": 8}, "h0_NC_minus2": 0, "h0_NS_minus2": 0, "hyperplane_scroll": [4, 4], "scroll_type": [3, 3, 2]}, "gram": [[18, 3], [3, 0]], "name": "L_T10", "rank": 2})json"},
    {"L_I", R"json({"H": "3E+Gamma1+Gamma2+Gamma3", "basis_labels": ["E", "Gamma1", "Gamma2", "Gamma3"], "description": "genus 7, trigonal, H - 3E a sum of three disjoint lines", "expected": {"case_label": "I", "clifford": "1", "comparison_case": "equal", "genus": 7, "h0": {"H-2E": 2, "H-3E": 1, "H-E": 5}, "h0_NC_minus2": 1, "h0_NS_minus2": 1, "hyperplane_scroll": [3, 2], "scroll_type": [3, 1, 1]}, "gram": [[0, 1, 1, 1], [1, -2, 0, 0], [1, 0, -2, 0], [1, 0, 0, -2]], "name": "L_I", "rank": 4})json"},
    {"L_II", R"json({"H": "E1+E2+E3", "basis_labels": ["E1", "E2", "E3"], "description": "genus 7, three elliptic pencils of degree 4 with pairwise products 2", "expected": {"b_invariants": [2, 0], "case_label": "II", "clifford": "2", "comparison_case": "equal", "genus": 7, "h0": {"H-2E1": 0, "H-E1": 4}, "h0_NC_minus2": 1, "h0_NS_minus2": 1, "scroll_type": [1, 1, 1, 1]}, "gram": [[0, 2, 2], [2, 0, 2], [2, 2, 0]], "name": "L_II", "rank": 3})json"},
    {"L_III", R"json({"H": [1, 0], "basis_labels": ["H", "D"], "description": "genus 7 with a genus-2 class D of degree 6", "expected": {"case_label": "III", "clifford": "2", "comparison_case": "equal", "genus": 7, "h0_NC_minus2": 1, "h0_NS_minus2": 1}, "gram": [[12, 6], [6, 2]], "name": "L_III", "rank": 2})json"},
    {"L_IV", R"json({"H": [1, 0], "basis_labels": ["H", "D"], "description": "genus 8 with a genus-2 class D of degree 6", "expected": {"case_label": "IV", "clifford": "2", "comparison_case": "equal", "genus": 8, "h0_NC_minus2": 1, "h0_NS_minus2": 1}, "gram": [[14, 6], [6, 2]], "name": "L_IV", "rank": 2})json"},
    {"L_V", R"json({"H": "2D", "basis_labels": ["D"], "description": "genus 9, H = 2D with D^2 = 4", "expected": {"case_label": "V", "clifford": "2", "comparison_case": "equal", "genus": 9, "h0_NC_minus2": 1, "h0_NS_minus2": 1}, "gram": [[4]], "name": "L_V", "rank": 1})json"},
    {"L_VI", R"json({"H": "3E+2Delta", "basis_labels": ["E", "Delta"], "description": "genus 9, H = 3E + 2Delta with Delta^2 = -2, Delta.E = 2", "expected": {"case_label": "VI", "clifford": "2", "comparison_case": "equal", "genus": 9, "h0": {"H-3E": 1}, "h0_NC_minus2": 1, "h0_NS_minus2": 1, "hyperplane_scroll": [3, 2, 1], "scroll_type": [3, 2, 1, 0]}, "gram": [[0, 2], [2, -2]], "name": "L_VI", "rank": 2})json"},
    {"L_DM", R"json({"H": "3D", "basis_labels": ["D"], "description": "genus 10 double plane, H = 3D with D^2 = 2", "expected": {"case_label": "VII", "clifford": "2", "comparison_case": "equal", "genus": 10, "h0_NC_minus2": 1, "h0_NS_minus2": 1}, "gram": [[2]], "name": "L_DM", "rank": 1})json"},
    {"L_92", R"json({"H": [1, 0], "basis_labels": ["H", "D"], "description": "genus 9 with a genus-2 class of degree 6; E = H - 2D is a degree-4 pencil and H = 3E + 2(3D - H)", "expected": {"case_label": "VI", "clifford": "2", "comparison_case": "equal", "genus": 9, "h0": {"H-2D": 2}, "h0_NC_minus2": 1, "h0_NS_minus2": 1}, "gram": [[16, 6], [6, 2]], "name": "L_92", "rank": 2})json"},
    {"L_JK7", R"json({"H": "4E+3Gamma+2Gamma1+Gamma2", "basis_labels": ["E", "Gamma", "Gamma1", "Gamma2"], "description": "curve class C = 4E+3Gamma+2Gamma1+Gamma2 contracting a chain of three (-2)-curves", "expected": {"genus": 7, "special_member": {"h0_NC_minus2": 2, "h0_OC_E": 2}}, "gram": [[0, 1, 0, 0], [1, -2, 1, 0], [0, 1, -2, 1], [0, 0, 1, -2]], "name": "L_JK7", "polarization_not_very_ample": true, "rank": 4})json"},
    {"L_JK8", R"json({"H": "4E+2Gamma+Gamma'", "basis_labels": ["E", "Gamma", "Gamma'"], "description": "curve class C = 4E+2Gamma+Gamma'", "expected": {"genus": 8, "special_member": {"h0_NC_minus2": 1}}, "gram": [[0, 1, 1], [1, -2, 0], [1, 0, -2]], "name": "L_JK8", "polarization_not_very_ample": true, "rank": 3})json"},
    {"L_JK9", R"json({"H": "5E+3Gamma+Gamma'", "basis_labels": ["E", "Gamma", "Gamma'"], "description": "curve class C = 5E+3Gamma+Gamma'", "expected": {"genus": 9, "special_member": {"h0_NC_minus2": 1}}, "gram": [[0, 1, 0], [1, -2, 1], [0, 1, -2]], "name": "L_JK9", "polarization_not_very_ample": true, "rank": 3})json"},
    {"L_JK10", R"json({"H": "6E+3Gamma", "basis_labels": ["E", "Gamma"], "description": "curve class C = 6E+3Gamma", "expected": {"genus": 10, "special_member": {"h0_NC_minus2": 1}}, "gram": [[0, 1], [1, -2]], "name": "L_JK10", "polarization_not_very_ample": true, "rank": 2})json"},
    {"controls/tetragonal_g7", R"json({"H": [1, 0], "basis_labels": ["H", "E"], "description": "negative control: genus 7, one pencil E of degree 4", "expected": {"b_invariants": [1, 1], "case_label": "none", "clifford": "2", "comparison_case": "equal", "genus": 7, "h0_NC_minus2": 0, "h0_NS_minus2": 0}, "gram": [[12, 4], [4, 0]], "name": "controls/tetragonal_g7", "rank": 2})json"},
    {"controls/tetragonal_g8", R"json({"H": [1, 0], "basis_labels": ["H", "E"], "description": "negative control: genus 8, one pencil E of degree 4", "expected": {"b_invariants": [2, 1], "case_label": "none", "clifford": "2", "comparison_case": "equal", "genus": 8, "h0_NC_minus2": 0, "h0_NS_minus2": 0}, "gram": [[14, 4], [4, 0]], "name": "controls/tetragonal_g8", "rank": 2})json"},
    {"controls/tetragonal_g9", R"json({"H": [1, 0], "basis_labels": ["H", "E"], "description": "negative control: genus 9, one pencil E of degree 4", "expected": {"case_label": "none", "clifford": "2", "comparison_case": "equal", "genus": 9, "h0_NC_minus2": 0, "h0_NS_minus2": 0}, "gram": [[16, 4], [4, 0]], "name": "controls/tetragonal_g9", "rank": 2})json"},
    {"controls/tetragonal_g10", R"json({"H": [1, 0], "basis_labels": ["H", "E"], "description": "negative control: genus 10, one pencil E of degree 4", "expected": {"case_label": "none", "clifford": "2", "comparison_case": "equal", "genus": 10, "h0_NC_minus2": 0, "h0_NS_minus2": 0}, "gram": [[18, 4], [4, 0]], "name": "controls/tetragonal_g10", "rank": 2})json"},
    {"controls/pentagonal_g9", R"json({"H": [1, 0], "basis_labels": ["H", "E"], "description": "negative control: genus 9, one pencil E of degree 5", "expected": {"case_label": "none", "clifford": ">=3", "comparison_case": "equal", "genus": 9, "h0_NC_minus2": 0, "h0_NS_minus2": 0}, "gram": [[16, 5], [5, 0]], "name": "controls/pentagonal_g9", "rank": 2})json"},
    {"controls/rank1_g8", R"json({"H": [1], "basis_labels": ["H"], "description": "negative control: Picard rank 1, genus 8", "expected": {"case_label": "none", "clifford": ">=3", "comparison_case": "equal", "genus": 8, "h0_NC_minus2": 0, "h0_NS_minus2": 0}, "gram": [[14]], "name": "controls/rank1_g8", "rank": 1})json"},
  };
  return data;
}

}  // namespace

const std::vector<std::string>& registry_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& e : entries()) v.push_back(e.first);
    return v;
  }();
  return names;
}

std::optional<std::string> registry_source(const std::string& name) {
  for (const auto& e : entries())
    if (e.first == name) return e.second;
  return std::nullopt;
}

ModelFile registry_model(const std::string& name) {
  auto src = registry_source(name);
  if (!src) throw ContractError("unknown registry model '" + name + "'");
  return parse_model_json(*src);
}

ModelFile resolve_model(const std::string& name_or_path) {
  if (registry_source(name_or_path)) return registry_model(name_or_path);
  if (std::filesystem::exists(name_or_path)) return load_model_file(name_or_path);
  throw ParseError("'" + name_or_path + "' is neither a registry model nor a readable file");
}

}  // namespace k3
