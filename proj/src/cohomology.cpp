#include "k3/cohomology.hpp"

#include "k3/enumeration.hpp"

#include <algorithm>
#include <limits>

namespace k3 {

namespace {

std::optional<DivisorClass> first_negative_root(const Model& m, const DivisorClass& d, Integer deg) {
  std::optional<DivisorClass> best;
  for (const auto& r : irreducible_roots(m, deg))
    if (pair(m, d, r) < 0 && (!best || LexLess{}(r, *best))) best = r;
  return best;
}

// h0 of a class with no negatively pairing root of bounded degree.
Integer h0_of_moving(const Model& m, const DivisorClass& d) {
  if (d.isZero()) return 1;
  if (ample_degree(m, d) <= 0) return 0;
  const Integer s = square(m, d);
  if (s < 0) return 0;
  if (s > 0) return 2 + s / 2;
  return content(d) + 1;
}

}  // namespace

PeelTrace peel_fixed_part(const Model& m, const DivisorClass& d) {
  PeelTrace t{d, {}};
  const Integer start = ample_degree(m, d);
  while (!t.residual.isZero()) {
    const Integer k = ample_degree(m, t.residual);
    if (k <= 0) break;
    auto r = first_negative_root(m, t.residual, k);
    if (!r) break;
    t.residual -= *r;
    t.removed.push_back(*r);
    check_internal(static_cast<Integer>(t.removed.size()) <= start, "peeling did not terminate within the degree bound");
  }
  return t;
}

bool is_effective(const Model& m, const DivisorClass& d) {
  DivisorClass cur = d;
  const Integer start = ample_degree(m, d);
  Integer steps = 0;
  for (;;) {
    if (cur.isZero()) return true;
    const Integer k = ample_degree(m, cur);
    if (k <= 0) return false;
    if (square(m, cur) >= -2) return true;
    auto r = first_negative_root(m, cur, k);
    if (!r) return false;
    cur -= *r;
    check_internal(++steps <= start, "peeling did not terminate within the degree bound");
  }
}

bool is_nef(const Model& m, const DivisorClass& d) {
  if (d.isZero()) return true;
  if (!is_effective(m, d)) throw ContractError("is_nef is only defined on effective classes");
  const Integer k = ample_degree(m, d);
  return k >= 0 && pairs_nonnegatively_with_roots(m, d, k);
}

Integer h0(const Model& m, const DivisorClass& d) {
  const PeelTrace t = peel_fixed_part(m, d);
  return h0_of_moving(m, t.residual);
}

CohomologyDims cohomology_dims(const Model& m, const DivisorClass& d) {
  CohomologyDims c;
  c.h0 = h0(m, d);
  c.h2 = h0(m, DivisorClass(-d));
  c.h1 = c.h0 + c.h2 - chi_rr(m, d);
  check_internal(c.h1 >= 0, "negative h1 from peeling");
  return c;
}

bool is_base_point_free(const Model& m, const DivisorClass& d) {
  if (d.isZero()) return true;
  if (!is_nef(m, d)) throw ContractError("is_base_point_free needs a nef class");
  const Integer s = square(m, d);
  if (s == 0) return true;
  return elliptic_pencils_against(m, d, 1).empty();
}

std::optional<VeryAmpleObstruction> very_ample_obstruction(const Model& m, const DivisorClass& d) {
  if (!is_effective(m, d) || square(m, d) < 8)
    throw ContractError("very ampleness is only decided for effective classes with square >= 8");
  const PeelTrace t = peel_fixed_part(m, d);
  if (!t.removed.empty()) return VeryAmpleObstruction{"fixed_component", t.removed.front()};
  if (!is_nef(m, d)) {
    auto r = first_negative_root(m, d, ample_degree(m, d));
    return VeryAmpleObstruction{"not_nef", r ? *r : d};
  }
  if (auto roots = classes_with_against(m, d, {0, -2}); !roots.empty())
    return VeryAmpleObstruction{"contracted_root", roots.front()};
  for (Integer k = 1; k <= 2; ++k)
    if (auto pencils = elliptic_pencils_against(m, d, k); !pencils.empty())
      return VeryAmpleObstruction{k == 1 ? "pencil_degree_1" : "pencil_degree_2", pencils.front()};
  if (content(d) % 2 == 0) {
    const DivisorClass b = d / 2;
    if (square(m, b) == 2) return VeryAmpleObstruction{"double_of_genus_2", b};
  }
  return std::nullopt;
}

bool is_very_ample(const Model& m, const DivisorClass& d) { return !very_ample_obstruction(m, d); }

bool curve_is_hyperelliptic(const Model& m, const DivisorClass& c) {
  if (square(m, c) <= 0) throw ContractError("hyperellipticity needs a class of positive square");
  if (content(c) % 2 == 0 && square(m, DivisorClass(c / 2)) == 2) return true;
  return !elliptic_pencils_against(m, c, 2).empty();
}

ClassList contracted_roots(const Model& m, const DivisorClass& c) {
  ClassList positive;
  Integer top = 0;
  for (const auto& r : classes_with_against(m, c, {0, -2})) {
    const Integer a = ample_degree(m, r);
    if (a > 0) {
      positive.push_back(r);
      top = std::max(top, a);
    }
  }
  ClassList out;
  if (positive.empty()) return out;
  const ClassList irr = irreducible_roots(m, top);
  for (const auto& r : positive)
    if (std::find_if(irr.begin(), irr.end(), [&](const DivisorClass& x) { return x == r; }) != irr.end())
      out.push_back(r);
  sort_lex(out);
  return out;
}

bool in_root_span(const Model& m, const DivisorClass& d, const ClassList& roots) {
  if (roots.empty()) return d.isZero();
  const auto k = static_cast<Eigen::Index>(roots.size());
  // Solve cartan * n = (roots . d); the Cartan matrix is negative definite.
  DenseMatrix<Rational> aug(k, k + 1);
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = 0; j < k; ++j)
      aug(i, j) = Rational(pair(m, roots[static_cast<std::size_t>(i)], roots[static_cast<std::size_t>(j)]));
    aug(i, k) = Rational(pair(m, roots[static_cast<std::size_t>(i)], d));
  }
  for (Eigen::Index c = 0; c < k; ++c) {
    Eigen::Index p = c;
    while (p < k && aug(p, c) == 0) ++p;
    if (p == k) throw ContractError("roots are linearly dependent");
    aug.row(c).swap(aug.row(p));
    const Rational piv = aug(c, c);
    for (Eigen::Index j = 0; j <= k; ++j) aug(c, j) /= piv;
    for (Eigen::Index r = 0; r < k; ++r) {
      if (r == c || aug(r, c) == 0) continue;
      const Rational f = aug(r, c);
      for (Eigen::Index j = 0; j <= k; ++j) aug(r, j) -= f * aug(c, j);
    }
  }
  DivisorClass combo = DivisorClass::Zero(m.rank());
  for (Eigen::Index i = 0; i < k; ++i) {
    if (boost::multiprecision::denominator(aug(i, k)) != 1) return false;
    const auto n = static_cast<Integer>(boost::multiprecision::numerator(aug(i, k)));
    combo += n * roots[static_cast<std::size_t>(i)];
  }
  return combo == d;
}

namespace {

struct Interval {
  Integer lo;
  Integer hi;
  void meet(Integer l, Integer h) {
    lo = std::max(lo, l);
    hi = std::min(hi, h);
  }
};

// Bounds for h0(O_C(D)) read off the restriction sequence of every
// representative of O_C(D) obtained by adding contracted roots.
Interval sequence_bounds(const Model& m, const DivisorClass& d, const DivisorClass& c, const ClassList& contracted) {
  DivisorClass reduced = d;
  for (int guard = 0;; ++guard) {
    check_internal(guard < 100000, "contracted-root reduction did not terminate");
    auto it = std::find_if(contracted.begin(), contracted.end(),
                           [&](const DivisorClass& r) { return pair(m, reduced, r) < 0; });
    if (it == contracted.end()) break;
    reduced -= *it;
  }
  ClassList reps{d, reduced};
  for (const auto& r : contracted) {
    reps.push_back(reduced + r);
    reps.push_back(reduced - r);
  }
  Interval out{0, std::numeric_limits<Integer>::max()};
  for (const auto& rep : reps) {
    const DivisorClass below = rep - c;
    const Integer lower = h0(m, rep) - h0(m, below);
    const Integer upper = lower + cohomology_dims(m, below).h1;
    out.meet(lower, upper);
  }
  return out;
}

// Identification of low-degree restrictions; see the header for the assumption.
Interval low_degree_bounds(const Model& m, const DivisorClass& d, const DivisorClass& c, const ClassList& contracted,
                           Integer genus, bool hyperelliptic) {
  Interval out{0, std::numeric_limits<Integer>::max()};
  const Integer deg = pair(m, d, c);
  if (deg == 0) {
    const Integer v = in_root_span(m, d, contracted) ? 1 : 0;
    out.meet(v, v);
  } else if ((deg == 1 || deg == 2) && !hyperelliptic) {
    out.meet(0, 1);
  } else if (deg == 3 && genus >= 5 && !hyperelliptic) {
    bool trigonal_match = false;
    for (const auto& e : elliptic_pencils_against(m, c, 3))
      if (in_root_span(m, DivisorClass(d - e), contracted)) trigonal_match = true;
    if (trigonal_match)
      out.meet(2, 2);
    else
      out.meet(0, 1);
  }
  return out;
}

}  // namespace

RestrictionEstimate h0_restricted(const Model& m, const DivisorClass& d, const DivisorClass& c) {
  if (square(m, c) < 8 || !is_effective(m, c))
    throw ContractError("h0_restricted needs an effective curve class with square >= 8");
  const Integer deg = pair(m, d, c);
  if (deg < 0) return RestrictionEstimate::interval(0, 0);
  const Integer genus = square(m, c) / 2 + 1;
  const Integer chi_c = deg + 1 - genus;
  if (deg > 2 * genus - 2) return RestrictionEstimate::interval(chi_c, chi_c);

  const ClassList contracted = contracted_roots(m, c);
  const bool hyperelliptic = curve_is_hyperelliptic(m, c);
  const DivisorClass dual = c - d;

  Interval direct = sequence_bounds(m, d, c, contracted);
  const Interval low = low_degree_bounds(m, d, c, contracted, genus, hyperelliptic);
  direct.meet(low.lo, low.hi);

  Interval serre = sequence_bounds(m, dual, c, contracted);
  const Interval low_dual = low_degree_bounds(m, dual, c, contracted, genus, hyperelliptic);
  serre.meet(low_dual.lo, low_dual.hi);

  Interval out = direct;
  if (serre.hi != std::numeric_limits<Integer>::max())
    out.meet(serre.lo + chi_c, serre.hi + chi_c);
  else
    out.meet(serre.lo + chi_c, out.hi);
  out.meet(std::max<Integer>(0, chi_c), deg / 2 + 1);  // Riemann-Roch and Clifford
  if (deg == 0) out.meet(0, 1);
  check_internal(out.lo <= out.hi, "empty restriction interval");
  return RestrictionEstimate::interval(out.lo, out.hi);
}

}  // namespace k3
