#include "k3/model_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace k3 {

namespace {

using nlohmann::json;

bool is_label_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_label_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

Integer checked_mul(Integer a, Integer b) {
  Integer r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw ParseError("integer overflow in class expression");
  return r;
}

Integer checked_add(Integer a, Integer b) {
  Integer r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw ParseError("integer overflow in class expression");
  return r;
}

// Shared by model parsing (before a Model exists) and parse_class_expr.
DivisorClass parse_expr_with(std::string_view expr, Eigen::Index rank,
                             const std::function<std::optional<DivisorClass>(const std::string&)>& lookup) {
  std::string s;
  for (char c : expr)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw ParseError("empty class expression");

  DivisorClass total = DivisorClass::Zero(rank);
  std::size_t i = 0;
  bool first = true;
  while (i < s.size()) {
    Integer sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      throw ParseError("expected '+' or '-' at position " + std::to_string(i) + " in '" + s + "'");
    }
    first = false;
    if (i >= s.size()) throw ParseError("dangling sign at end of '" + s + "'");

    std::optional<Integer> coeff;
    if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      Integer v = 0;
      auto [ptr, ec] = std::from_chars(s.data() + i, s.data() + j, v);
      if (ec == std::errc::result_out_of_range) throw ParseError("integer overflow in class expression");
      if (ec != std::errc() || ptr != s.data() + j) throw ParseError("bad integer in '" + s + "'");
      coeff = v;
      i = j;
    }
    if (i < s.size() && is_label_start(s[i])) {
      std::size_t j = i;
      while (j < s.size() && is_label_char(s[j])) ++j;
      const std::string label = s.substr(i, j - i);
      auto cls = lookup(label);
      if (!cls) throw ParseError("unknown label '" + label + "'");
      const Integer k = checked_mul(sign, coeff.value_or(1));
      for (Eigen::Index r = 0; r < rank; ++r) total(r) = checked_add(total(r), checked_mul(k, (*cls)(r)));
      i = j;
    } else if (coeff) {
      // A bare integer only makes sense as zero: there is no unit class.
      if (*coeff != 0) throw ParseError("bare nonzero integer term in '" + s + "'");
    } else {
      throw ParseError("expected a label or integer at position " + std::to_string(i) + " in '" + s + "'");
    }
  }
  return total;
}

Integer json_integer(const json& v, const std::string& what) {
  if (!v.is_number_integer()) throw ParseError(what + " must be an integer");
  if (v.is_number_unsigned() && v.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX))
    throw ParseError(what + " is out of range");
  return v.get<Integer>();
}

DivisorClass json_class(const json& v, Eigen::Index rank, const std::string& what,
                        const std::function<std::optional<DivisorClass>(const std::string&)>& lookup) {
  if (v.is_string()) return parse_expr_with(v.get<std::string>(), rank, lookup);
  if (!v.is_array() || static_cast<Eigen::Index>(v.size()) != rank)
    throw ParseError(what + " must be an expression or an array of " + std::to_string(rank) + " integers");
  DivisorClass d(rank);
  for (Eigen::Index i = 0; i < rank; ++i) d(i) = json_integer(v[static_cast<std::size_t>(i)], what);
  return d;
}

}  // namespace

DivisorClass parse_class_expr(const Model& m, std::string_view expr, const NamedClasses& names) {
  const auto& labels = m.basis_labels();
  return parse_expr_with(expr, m.rank(), [&](const std::string& label) -> std::optional<DivisorClass> {
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == label) {
        DivisorClass e = DivisorClass::Zero(m.rank());
        e(static_cast<Eigen::Index>(i)) = 1;
        return e;
      }
    if (auto it = names.find(label); it != names.end()) return it->second;
    if (label == "H") return m.polarization();
    return std::nullopt;
  });
}

std::string render_class(const Model& m, const DivisorClass& d) {
  std::ostringstream os;
  bool any = false;
  for (Eigen::Index i = 0; i < d.size(); ++i) {
    const Integer c = d(i);
    if (c == 0) continue;
    if (c < 0)
      os << '-';
    else if (any)
      os << '+';
    const Integer a = c < 0 ? -c : c;
    if (a != 1) os << a;
    os << m.basis_labels()[static_cast<std::size_t>(i)];
    any = true;
  }
  return any ? os.str() : "0";
}

ModelFile parse_model_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("model file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("model file must be a JSON object");
  for (const char* key : {"gram", "basis_labels", "H"})
    if (!doc.contains(key)) throw ParseError(std::string("model file lacks '") + key + "'");

  const json& gj = doc["gram"];
  if (!gj.is_array() || gj.empty()) throw ParseError("gram must be a nonempty array of rows");
  const auto rank = static_cast<Eigen::Index>(gj.size());
  if (doc.contains("rank") && json_integer(doc["rank"], "rank") != rank)
    throw ParseError("rank does not match the gram matrix");
  GramMatrix g(rank, rank);
  for (Eigen::Index i = 0; i < rank; ++i) {
    const json& row = gj[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != rank) throw ParseError("gram must be square");
    for (Eigen::Index j = 0; j < rank; ++j) g(i, j) = json_integer(row[static_cast<std::size_t>(j)], "gram entry");
  }

  std::vector<std::string> labels;
  for (const auto& l : doc["basis_labels"]) {
    if (!l.is_string()) throw ParseError("basis labels must be strings");
    const std::string s = l.get<std::string>();
    if (s.empty() || !is_label_start(s[0]) || !std::all_of(s.begin(), s.end(), is_label_char))
      throw ParseError("basis label '" + s + "' is not an identifier");
    labels.push_back(s);
  }
  if (static_cast<Eigen::Index>(labels.size()) != rank) throw ParseError("basis_labels length differs from rank");

  auto basis_lookup = [&](const std::string& label) -> std::optional<DivisorClass> {
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == label) {
        DivisorClass e = DivisorClass::Zero(rank);
        e(static_cast<Eigen::Index>(i)) = 1;
        return e;
      }
    return std::nullopt;
  };
  const DivisorClass h = json_class(doc["H"], rank, "H", basis_lookup);
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == "H" && h != *basis_lookup("H"))
      throw ParseError("basis label 'H' must be the polarization itself");
  std::optional<DivisorClass> ample;
  if (doc.contains("ample")) ample = json_class(doc["ample"], rank, "ample", basis_lookup);

  const std::string name = doc.value("name", std::string{});
  ModelFile f{Model(g, labels, h, name, ample), {}, nullptr, false, doc.value("description", std::string{})};
  if (doc.contains("classes")) {
    if (!doc["classes"].is_object()) throw ParseError("classes must be an object");
    for (const auto& [label, value] : doc["classes"].items()) {
      auto lookup = [&](const std::string& l) -> std::optional<DivisorClass> {
        if (auto b = basis_lookup(l)) return b;
        if (l == "H") return h;
        if (auto it = f.classes.find(l); it != f.classes.end()) return it->second;
        return std::nullopt;
      };
      f.classes[label] = json_class(value, rank, "class '" + label + "'", lookup);
    }
  }
  if (doc.contains("expected")) f.expected = doc["expected"];
  if (doc.contains("polarization_not_very_ample")) {
    if (!doc["polarization_not_very_ample"].is_boolean())
      throw ParseError("polarization_not_very_ample must be a boolean");
    f.polarization_not_very_ample = doc["polarization_not_very_ample"].get<bool>();
  }
  return f;
}

ModelFile load_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open model file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_model_json(buf.str());
}

nlohmann::json model_to_json(const ModelFile& f) {
  const Model& m = f.model;
  json doc;
  doc["name"] = m.name();
  doc["rank"] = m.rank();
  json gram = json::array();
  for (Eigen::Index i = 0; i < m.rank(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.rank(); ++j) row.push_back(m.gram()(i, j));
    gram.push_back(row);
  }
  doc["gram"] = gram;
  doc["basis_labels"] = m.basis_labels();
  auto coords = [](const DivisorClass& d) {
    json a = json::array();
    for (Eigen::Index i = 0; i < d.size(); ++i) a.push_back(d(i));
    return a;
  };
  doc["H"] = coords(m.polarization());
  if (!f.classes.empty()) {
    json cls = json::object();
    for (const auto& [k, v] : f.classes) cls[k] = coords(v);
    doc["classes"] = cls;
  }
  if (!f.expected.is_null()) doc["expected"] = f.expected;
  if (f.polarization_not_very_ample) doc["polarization_not_very_ample"] = true;
  if (!f.description.empty()) doc["description"] = f.description;
  return doc;
}

}  // namespace k3
