#include "k3/classify.hpp"

#include "k3/enumeration.hpp"

#include <algorithm>

namespace k3 {

namespace {

const char* const kGenericAssumption = "generic K3 surface whose Picard lattice is exactly the given lattice";

std::optional<DivisorClass> divided_polarization(const Model& m, Integer divisor, Integer sq) {
  const DivisorClass& h = m.polarization();
  if (content(h) % divisor != 0) return std::nullopt;
  DivisorClass d = h / divisor;
  if (square(m, d) != sq) return std::nullopt;
  return d;
}

// H = 3E + 2 Delta with E a degree-4 pencil, Delta^2 = -2 and Delta.E = 2.
std::optional<DivisorClass> case_vi_pencil(const Model& m) {
  for (const auto& e : elliptic_pencils(m, 4)) {
    const DivisorClass rest = m.polarization() - 3 * e;
    if (content(rest) % 2 != 0) continue;
    const DivisorClass delta = rest / 2;
    if (square(m, delta) == -2 && pair(m, delta, e) == 2) return e;
  }
  return std::nullopt;
}

bool has_sextic_class(const Model& m) { return !classes_with(m, {6, 2}).empty(); }

// A nef, base point free class with D^2 = 2 and D.H = 6.
std::optional<DivisorClass> globally_generated_sextic(const Model& m) {
  for (const auto& d : classes_with(m, {6, 2}))
    if (is_nef(m, d) && is_base_point_free(m, d)) return d;
  return std::nullopt;
}

}  // namespace

std::string to_string(CliffordValue v) {
  switch (v) {
    case CliffordValue::one:
      return "1";
    case CliffordValue::two:
      return "2";
    case CliffordValue::at_least_three:
      return ">=3";
  }
  return "?";
}

void require_smooth_model(const Model& m) {
  const ValidationReport r = validate_model(m);
  if (!r.valid()) {
    std::string what = "invalid model";
    for (const auto& v : r.violations) what += "; " + v.message;
    throw RefusedModel(what, "invalid");
  }
  if (genus_of(m) < 5) throw RefusedModel("genus below 5", "small_genus");
  if (auto obstruction = very_ample_obstruction(m, m.polarization()))
    throw RefusedModel("polarization is not very ample (" + obstruction->kind + ")", obstruction->kind,
                       obstruction->witness);
}

CliffordVerdict clifford_index(const Model& m) {
  require_smooth_model(m);
  const Integer g = genus_of(m);
  CliffordVerdict v;
  auto take = [&](CliffordValue value, const DivisorClass& w, std::string kind) {
    v.value = value;
    v.witness = w;
    v.witness_square = square(m, w);
    v.witness_degree = degree(m, w);
    v.witness_kind = std::move(kind);
  };

  if (auto p = elliptic_pencils(m, 3); !p.empty()) {
    take(CliffordValue::one, p.front(), "pencil");
    return v;
  }
  const auto third = divided_polarization(m, 3, 2);
  v.triple_of_genus_2 = third.has_value();
  if (auto p = elliptic_pencils(m, 4); !p.empty()) {
    take(CliffordValue::two, p.front(), "pencil");
    return v;
  }
  // Degree 6 shapes: a genus-2 class of degree 6 (including H = 3D).
  if (auto s = classes_with(m, {6, 2}); !s.empty()) {
    take(CliffordValue::two, s.front(), "genus_2_sextic");
    return v;
  }
  if (auto half = divided_polarization(m, 2, 4)) {
    take(CliffordValue::two, *half, "half_polarization");
    return v;
  }
  if (g == 5 || g == 6) {
    v.value = CliffordValue::two;
    v.witness_kind = "genus_bound";
    return v;
  }
  v.value = CliffordValue::at_least_three;
  return v;
}

SurfaceTwist surface_normal_twist2(const Model& m) {
  const CliffordVerdict c = clifford_index(m);
  const Integer g = genus_of(m);
  SurfaceTwist out;
  if (g == 5) return {3, "none"};
  if (g == 6) return {1, "none"};
  if (g >= 11 || c.value == CliffordValue::at_least_three) return out;

  if (c.value == CliffordValue::one) {
    const DivisorClass e = *c.witness;
    out.value = h0(m, DivisorClass(m.polarization() - (g - 4) * e));
    if (out.value >= 1) {
      check_internal(g == 7 && out.value == 1, "trigonal surface value outside the single genus-7 case");
      out.case_label = "I";
    }
    return out;
  }

  if (c.triple_of_genus_2 && g == 10) return {1, "VII"};
  if (g == 9 && divided_polarization(m, 2, 4)) return {1, "V"};
  if (g == 9 && case_vi_pencil(m)) return {1, "VI"};
  if (g == 9 && has_sextic_class(m)) return out;
  if ((g == 7 || g == 8) && has_sextic_class(m)) {
    check_internal(globally_generated_sextic(m).has_value(),
                   "a genus-2 sextic class exists but none is globally generated");
    return {1, g == 7 ? "III" : "IV"};
  }
  if (g == 7 && triple_pencil_decomposition(m)) return {1, "II"};
  return out;
}

CurveTwist curve_normal_twist2(const Model& m) {
  const CliffordVerdict c = clifford_index(m);
  const Integer g = genus_of(m);
  auto exact = [](Integer v) { return CurveTwist{v, true, v, v}; };
  if (c.value == CliffordValue::at_least_three) return exact(0);

  if (c.value == CliffordValue::one) {
    const DivisorClass e = *c.witness;
    if (g == 10)
      check_internal(h0(m, DivisorClass(m.polarization() - 6 * e)) == 0,
                     "omega_C = 6A cannot occur on a very ample genus-10 model");
    const ScrollType t = scroll_type_unchecked(m, e);
    const HyperplaneScroll f = generic_hyperplane_scroll(t);
    return exact(section_h0_from_scroll(f.type, g - 4));
  }

  if (g >= 11) return exact(0);
  if (g == 5) return exact(3);
  if (g == 6) return exact(1);
  if (g >= 7 && g <= 9) {
    if (has_sextic_class(m) || divided_polarization(m, 2, 4)) return exact(1);
    if (g == 7) return exact(tetragonal_b_invariants(m).b2 == 0 ? 1 : 0);
    return exact(0);
  }
  if (g == 10 && c.triple_of_genus_2) return exact(1);
  return exact(0);
}

CurveTwist curve_normal_twist2_special(const Model& m) {
  const DivisorClass& c = m.polarization();
  if (!validate_lattice(m).valid()) throw RefusedModel("invalid lattice", "invalid");
  if (square(m, c) < 8 || !is_nef(m, c)) throw RefusedModel("curve class must be nef with square >= 8", "invalid");
  const Integer g = genus_of(m);
  const ClassList pencils = elliptic_pencils_against(m, c, 3);
  if (pencils.empty() || curve_is_hyperelliptic(m, c))
    throw RefusedModel("special members are only supported for trigonal curves", "unsupported");
  const RestrictionEstimate r = h0_restricted(m, DivisorClass(c - (g - 4) * pencils.front()), c);
  return CurveTwist{r.lower, r.exact, r.lower, r.upper};
}

Integer canonical_curve_h0(Integer g, Integer mult) {
  if (mult < 0) return 0;
  if (mult == 0) return 1;
  if (mult == 1) return g;
  return (2 * mult - 1) * (g - 1);
}

Integer normal_twist_k(const Model& m, Integer k, TwistTarget target) {
  if (k < 2) throw ContractError("normal_twist_k needs k >= 2");
  if (!validate_lattice(m).valid()) throw RefusedModel("invalid lattice", "invalid");
  const Integer g = genus_of(m);
  if (g < 3) throw RefusedModel("genus below 3 has no embedded model", "small_genus");
  const DivisorClass& h = m.polarization();
  auto surface_h0 = [&](Integer mult) { return h0(m, DivisorClass(mult * h)); };
  if (g == 3) {
    // quartic surface in P^3, plane quartic curve: N = O(4)
    return target == TwistTarget::surface ? surface_h0(4 - k) : canonical_curve_h0(g, 4 - k);
  }
  if (g == 4) {
    // complete intersection of a quadric and a cubic: N = O(2) + O(3)
    return target == TwistTarget::surface ? surface_h0(2 - k) + surface_h0(3 - k)
                                          : canonical_curve_h0(g, 2 - k) + canonical_curve_h0(g, 3 - k);
  }
  if (k >= 3) return 0;
  if (target == TwistTarget::surface) return surface_normal_twist2(m).value;
  const CurveTwist c = curve_normal_twist2(m);
  check_internal(c.exact, "general-member curve value must be exact");
  return c.value;
}

Comparison compare_surface_curve(const Model& m) {
  const CliffordVerdict c = clifford_index(m);
  const Integer g = genus_of(m);
  const SurfaceTwist s = surface_normal_twist2(m);
  const CurveTwist cu = curve_normal_twist2(m);
  Comparison out{"equal", s.value, cu.value};
  if (g == 6 && c.value == CliffordValue::one) {
    out.case_name = "a";
  } else if (g == 7 && c.value == CliffordValue::one && s.case_label != "I") {
    out.case_name = "b";
  } else if (g == 9 && c.value == CliffordValue::two && !divided_polarization(m, 2, 4) && !case_vi_pencil(m) &&
             has_sextic_class(m)) {
    out.case_name = "c";
  }
  check_internal(s.value <= cu.value, "surface value exceeds curve value");
  check_internal((out.case_name == "equal") == (s.value == cu.value),
                 "comparison case disagrees with the computed values");
  return out;
}

ClassificationReport classify(const Model& m) {
  ClassificationReport r;
  r.model_name = m.name();
  r.genus = genus_of(m);
  r.clifford = clifford_index(m);
  const SurfaceTwist s = surface_normal_twist2(m);
  r.h0_normal_surface = s.value;
  r.case_label = s.case_label;
  r.h0_normal_curve = curve_normal_twist2(m);
  r.comparison_case = compare_surface_curve(m).case_name;
  check_internal(normal_twist_k(m, 3, TwistTarget::surface) == 0 && normal_twist_k(m, 3, TwistTarget::curve) == 0,
                 "twist 3 must vanish");
  check_internal((r.case_label != "none") == (r.h0_normal_surface >= 1 && r.genus >= 7),
                 "case label disagrees with the surface value");
  const Integer g = r.genus;

  auto& cite = r.citations;
  r.assumptions.push_back(kGenericAssumption);
  switch (r.clifford.value) {
    case CliffordValue::one:
      cite.push_back("clifford.trigonal-pencil");
      break;
    case CliffordValue::two:
      cite.push_back(r.clifford.witness_kind == "genus_bound" ? "clifford.low-genus" : "clifford.tetragonal-shapes");
      break;
    case CliffordValue::at_least_three:
      cite.push_back("clifford.at-least-3");
      break;
  }

  if (r.clifford.value == CliffordValue::one) {
    const DivisorClass e = *r.clifford.witness;
    r.scroll = scroll_type_unchecked(m, e);
    r.hyperplane_scroll = generic_hyperplane_scroll(*r.scroll);
  } else if (r.clifford.value == CliffordValue::two && r.clifford.witness_kind == "pencil") {
    r.scroll = scroll_type_unchecked(m, *r.clifford.witness);
    r.hyperplane_scroll = generic_hyperplane_scroll(*r.scroll);
    if (g >= 7 && g <= 9 && !has_sextic_class(m) && !divided_polarization(m, 2, 4))
      r.b_invariants = tetragonal_b_invariants(m);
  }

  if (g == 5)
    cite.push_back("surface.genus-5");
  else if (g == 6)
    cite.push_back("surface.genus-6");
  else if (r.case_label != "none")
    cite.push_back("surface.case-" + r.case_label);
  else if (g >= 11)
    cite.push_back("surface.genus-at-least-11");
  else if (r.clifford.value == CliffordValue::at_least_three)
    cite.push_back("surface.clifford-at-least-3");
  else if (r.clifford.value == CliffordValue::one)
    cite.push_back("surface.trigonal-formula");
  else
    cite.push_back("surface.tetragonal-vanishing");

  if (r.clifford.value == CliffordValue::at_least_three)
    cite.push_back("curve.clifford-at-least-3");
  else if (r.clifford.value == CliffordValue::one)
    cite.push_back("curve.trigonal-scroll");
  else if (g == 10 && r.clifford.triple_of_genus_2)
    cite.push_back("curve.plane-sextic");
  else
    cite.push_back("curve.tetragonal");
  cite.push_back("twist.k-at-least-3-vanishing");
  cite.push_back("comparison." + std::string(r.comparison_case == "equal" ? "equal" : "case-" + r.comparison_case));
  return r;
}

SpecialMemberReport classify_special_member(const Model& m) {
  SpecialMemberReport r;
  r.model_name = m.name();
  r.genus = genus_of(m);
  r.h0_normal_curve = curve_normal_twist2_special(m);
  const DivisorClass& c = m.polarization();
  r.contracted = contracted_roots(m, c);
  const ClassList pencils = elliptic_pencils_against(m, c, 3);
  r.trigonal_pencil = pencils.front();
  r.h0_pencil_restricted = h0_restricted(m, pencils.front(), c);
  r.citations = {"curve.special-member-restriction", "curve.trigonal-scroll"};
  r.assumptions = {kGenericAssumption,
                   "kernel of Pic S -> Pic C is spanned by the (-2)-curves orthogonal to C"};
  return r;
}

}  // namespace k3
