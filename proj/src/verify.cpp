#include "k3/verify.hpp"

#include "k3/classify.hpp"
#include "k3/cohomology.hpp"
#include "k3/enumeration.hpp"
#include "k3/report.hpp"
#include "k3/scroll.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace k3 {

namespace {

// Coordinates in [-r, r]^rank with r chosen so the box has at most ~20000 points.
Integer default_radius(Eigen::Index rank) {
  Integer r = 10;
  while (r > 1 && std::pow(2.0 * static_cast<double>(r) + 1.0, static_cast<double>(rank)) > 20000.0) --r;
  return r;
}

ClassList box_classes(const Model& m, Integer radius, Integer max_degree) {
  ClassList out;
  DivisorClass x = DivisorClass::Constant(m.rank(), -radius);
  for (;;) {
    const Integer d = ample_degree(m, x);
    if (d >= -max_degree && d <= max_degree) out.push_back(x);
    Eigen::Index i = 0;
    while (i < m.rank() && x(i) == radius) x(i++) = -radius;
    if (i == m.rank()) break;
    ++x(i);
  }
  return out;
}

std::string show(const Model& m, const DivisorClass& d) { return render_class(m, d); }

struct Checker {
  VerifyCheck check;
  explicit Checker(std::string name, bool informational = false) {
    check.name = std::move(name);
    check.informational = informational;
  }
  void fail(const std::string& why) {
    if (check.passed) {
      check.passed = false;
      check.detail = why;
    }
  }
};

}  // namespace

std::vector<VerifyCheck> run_verify(const ModelFile& f, const VerifyOptions& opts) {
  const Model& m = f.model;
  std::vector<VerifyCheck> out;

  {
    Checker c("lattice_valid");
    const ValidationReport rep = f.polarization_not_very_ample ? validate_lattice(m) : validate_model(m);
    if (!rep.valid()) c.fail(rep.violations.front().code + ": " + rep.violations.front().message);
    out.push_back(c.check);
    if (!c.check.passed) return out;
  }

  const Integer radius = opts.box_radius > 0 ? opts.box_radius : default_radius(m.rank());
  const ClassList box = box_classes(m, radius, opts.max_degree);
  std::ostringstream scope;
  scope << box.size() << " classes in [-" << radius << "," << radius << "]^" << m.rank()
        << " with |D.A| <= " << opts.max_degree;

  {
    Checker c("oracle_equivalence");
    for (const auto& d : box) {
      const bool peel = is_effective(m, d);
      const bool dp = effective_oracle(m, d);
      if (peel != dp) {
        c.fail(show(m, d) + ": peeling says " + (peel ? "effective" : "not effective") + ", oracle disagrees");
        break;
      }
    }
    if (c.check.passed) c.check.detail = scope.str();
    out.push_back(c.check);
  }

  {
    Checker euler("euler_characteristic"), serre("serre_duality"), chi("h0_at_least_chi_on_effective"),
        nef("h0_equals_chi_on_nef_big"), peel("peeling_terminates");
    for (const auto& d : box) {
      const CohomologyDims dims = cohomology_dims(m, d);
      if (dims.h0 - dims.h1 + dims.h2 != chi_rr(m, d) || dims.h1 < 0)
        euler.fail(show(m, d) + ": h0-h1+h2 != chi");
      const CohomologyDims dual = cohomology_dims(m, DivisorClass(-d));
      if (dual.h0 != dims.h2 || dual.h1 != dims.h1 || dual.h2 != dims.h0)
        serre.fail(show(m, d) + ": h^i(D) != h^{2-i}(-D)");
      if (!d.isZero() && is_effective(m, d)) {
        if (dims.h0 < chi_rr(m, d)) chi.fail(show(m, d) + ": h0 < chi");
        if (square(m, d) > 0 && is_nef(m, d) && dims.h0 != chi_rr(m, d))
          nef.fail(show(m, d) + ": nef and big but h0 != chi");
        const PeelTrace t = peel_fixed_part(m, d);
        if (static_cast<Integer>(t.removed.size()) > ample_degree(m, d))
          peel.fail(show(m, d) + ": more roots removed than the degree allows");
        if (ample_degree(m, t.residual) > 0 && is_effective(m, t.residual) && !is_nef(m, t.residual))
          peel.fail(show(m, d) + ": residual " + show(m, t.residual) + " is effective but not nef");
      }
    }
    for (Checker* c : {&euler, &serre, &chi, &nef, &peel}) {
      if (c->check.passed) c->check.detail = scope.str();
      out.push_back(c->check);
    }
  }

  {
    Checker c("hodge_index");
    for (const auto& d : box)
      if (!d.isZero() && degree(m, d) == 0 && square(m, d) >= 0) {
        c.fail(show(m, d) + " is orthogonal to H with nonnegative square");
        break;
      }
    out.push_back(c.check);
  }

  {
    Checker c("pencil_cohomology");
    Integer count = 0;
    for (Integer deg = 1; deg <= std::min<Integer>(opts.max_degree, 6); ++deg)
      for (const auto& e : elliptic_pencils_against(m, m.ample(), deg)) {
        ++count;
        for (Integer k = 1; k <= 3; ++k)
          if (h0(m, DivisorClass(k * e)) != k + 1)
            c.fail("h0(" + std::to_string(k) + "*(" + show(m, e) + ")) != " + std::to_string(k + 1));
      }
    if (c.check.passed) c.check.detail = std::to_string(count) + " pencils of degree <= 6";
    out.push_back(c.check);
  }

  {
    // Every class the enumerator returns inside the box must be found by
    // brute force and vice versa; also compares the unreduced enumerator.
    Checker c("enumeration_completeness");
    std::set<std::pair<Integer, Integer>> queries;
    for (const auto& d : box) {
      const Integer deg = ample_degree(m, d);
      const Integer sq = square(m, d);
      if (deg >= 0 && deg <= std::min<Integer>(opts.max_degree, 8) && sq >= -4) queries.insert({deg, sq});
    }
    const ShortVectorEnumerator plain(m.gram(), m.ample(), false);
    for (const auto& [deg, sq] : queries) {
      ClassList brute;
      for (const auto& d : box)
        if (ample_degree(m, d) == deg && square(m, d) == sq) brute.push_back(d);
      sort_lex(brute);
      const ClassList found = classes_with_against(m, m.ample(), {deg, sq});
      ClassList inside;
      for (const auto& d : found)
        if (d.cwiseAbs().maxCoeff() <= radius) inside.push_back(d);
      if (inside != brute) {
        c.fail("degree " + std::to_string(deg) + ", square " + std::to_string(sq) + ": enumerator and box disagree");
        break;
      }
      if (plain.with_degree_and_square(deg, sq) != found) {
        c.fail("degree " + std::to_string(deg) + ", square " + std::to_string(sq) +
               ": reduced and unreduced enumerators disagree");
        break;
      }
    }
    if (c.check.passed) c.check.detail = std::to_string(queries.size()) + " (degree, square) queries";
    out.push_back(c.check);
  }

  if (f.polarization_not_very_ample) {
    Checker c("special_member_restriction");
    const SpecialMemberReport r = classify_special_member(m);
    if (r.h0_pencil_restricted.lower < 2) c.fail("h0(O_C(E)) < 2 for the trigonal pencil");
    out.push_back(c.check);
  } else if (genus_of(m) >= 5) {
    const ClassificationReport r = classify(m);
    {
      Checker c("surface_at_most_curve");
      const Integer curve = r.h0_normal_curve.exact ? r.h0_normal_curve.value : r.h0_normal_curve.lower;
      if (r.h0_normal_surface > curve)
        c.fail(std::to_string(r.h0_normal_surface) + " > " + std::to_string(curve));
      out.push_back(c.check);
    }
    if (r.scroll && r.clifford.witness) {
      Checker c("scroll_sum");
      const Integer want = r.genus + 1 - degree(m, *r.clifford.witness);
      if (r.scroll->sum() != want)
        c.fail("sum " + std::to_string(r.scroll->sum()) + " != g + 1 - E.H = " + std::to_string(want));
      if (r.hyperplane_scroll && r.hyperplane_scroll->type.sum() != want)
        c.fail("hyperplane scroll sum differs from " + std::to_string(want));
      out.push_back(c.check);
    }
    {
      Checker c("polarization_1_connected", true);
      const auto splits = nonconnected_decompositions(m, m.polarization(), degree(m, m.polarization()) / 2);
      c.check.detail = splits.empty() ? "yes" : "no: " + show(m, splits.front().first) + " + " +
                                                    show(m, splits.front().second);
      out.push_back(c.check);
    }
    if (r.clifford.witness && r.clifford.witness_kind == "pencil") {
      Checker c("h0_H_minus_jE", true);
      std::ostringstream os;
      const DivisorClass& e = *r.clifford.witness;
      for (Integer j = 0;; ++j) {
        const Integer v = h0(m, DivisorClass(m.polarization() - j * e));
        os << (j ? " " : "") << v;
        if (v == 0) break;
      }
      c.check.detail = "E = " + show(m, e) + ": " + os.str();
      out.push_back(c.check);
    }
  }

  if (!f.expected.is_null()) {
    Checker c("expected_values");
    const auto mism = check_expected(f, classify_model_file(f));
    if (!mism.empty())
      c.fail(mism.front().key + ": expected " + mism.front().expected + ", got " + mism.front().actual);
    out.push_back(c.check);
  }
  return out;
}

}  // namespace k3
