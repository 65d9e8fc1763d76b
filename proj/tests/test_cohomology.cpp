#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "k3/cohomology.hpp"
#include "k3/enumeration.hpp"
#include "k3/registry.hpp"
#include "oracles.hpp"

using namespace k3;

namespace {

Model reg(const std::string& n) { return registry_model(n).model; }
DivisorClass cls(const Model& m, const std::string& e) { return parse_class_expr(m, e); }

}  // namespace

TEST_CASE("rank one: h0(kH) = 2 + k^2 H^2 / 2 for k > 0") {
  const Model m = reg("controls/rank1_g8");
  for (Integer k = -3; k <= 4; ++k) {
    const DivisorClass d = make_class({k});
    const Integer want = k > 0 ? 2 + 7 * k * k : k == 0 ? 1 : 0;
    CHECK(h0(m, d) == want);
    const CohomologyDims dims = cohomology_dims(m, d);
    CHECK(dims.h1 == 0);
    CHECK(dims.h2 == (k < 0 ? 2 + 7 * k * k : k == 0 ? 1 : 0));
  }
}

TEST_CASE("pencil multiples: h0(kE) = k + 1 and h1(kE) = k - 1") {
  const Model m = reg("L_T8");
  for (Integer k = 1; k <= 5; ++k) {
    const CohomologyDims d = cohomology_dims(m, make_class({0, k}));
    CHECK(d.h0 == k + 1);
    CHECK(d.h1 == k - 1);
  }
}

TEST_CASE("fixed components are peeled root by root") {
  const Model m = reg("L_VI");
  // E + 3Delta: (.Delta) = 2 - 6 < 0, then E + 2Delta: 2 - 4 < 0, then E + Delta is nef of square 2.
  const PeelTrace t = peel_fixed_part(m, cls(m, "E+3Delta"));
  CHECK(t.residual == cls(m, "E+Delta"));
  REQUIRE(t.removed.size() == 2);
  CHECK(t.removed[0] == cls(m, "Delta"));
  CHECK(h0(m, cls(m, "E+3Delta")) == 3);
  CHECK(h0(m, cls(m, "4E+4Delta")) == 2 + square(m, cls(m, "4E+4Delta")) / 2);
}

TEST_CASE("is_effective agrees with the brute-force monoid") {
  for (const std::string name : {"L_VI", "L_T6", "L_JK10"}) {
    CAPTURE(name);
    const Model m = reg(name);
    const Integer n = 10;
    const auto eff = oracle::box_monoid(m.gram(), m.ample(), n, 25);
    oracle::for_each_in_box(m.rank(), 8, [&](const DivisorClass& x) {
      const Integer d = ample_degree(m, x);
      if (d < 0 || d > n) return;
      CAPTURE(x.transpose());
      CHECK(is_effective(m, x) == (eff[static_cast<std::size_t>(d)].count(oracle::as_vector(x)) == 1));
    });
  }
}

TEST_CASE("nefness") {
  const Model m = reg("L_I");
  CHECK(is_nef(m, m.polarization()));
  CHECK(is_nef(m, cls(m, "E")));
  CHECK_FALSE(is_nef(m, cls(m, "E+2Gamma1")));
  CHECK_THROWS_AS(is_nef(m, cls(m, "-E")), ContractError);
}

TEST_CASE("base point freeness and very ampleness") {
  const Model t7 = reg("L_T7");
  CHECK(is_base_point_free(t7, t7.polarization()));
  CHECK(is_very_ample(t7, t7.polarization()));
  // H^2 = 8 with a degree-2 pencil: hyperelliptic.
  GramMatrix g2(2, 2);
  g2 << 8, 2, 2, 0;
  const Model hyp(g2, {"H", "E"}, make_class({1, 0}));
  const auto obs = very_ample_obstruction(hyp, hyp.polarization());
  REQUIRE(obs.has_value());
  CHECK(obs->kind == "pencil_degree_2");
  CHECK(curve_is_hyperelliptic(hyp, hyp.polarization()));
  // H = 2D with D^2 = 2.
  const Model dbl(GramMatrix::Constant(1, 1, 2), {"D"}, make_class({2}));
  const auto obs2 = very_ample_obstruction(dbl, dbl.polarization());
  REQUIRE(obs2.has_value());
  CHECK(obs2->kind == "double_of_genus_2");
  // The special members contract roots.
  const Model jk = reg("L_JK9");
  const auto obs3 = very_ample_obstruction(jk, jk.polarization());
  REQUIRE(obs3.has_value());
  CHECK(obs3->kind == "contracted_root");
}

TEST_CASE("contracted roots and root span") {
  const Model m = reg("L_JK7");
  const ClassList r = contracted_roots(m, m.polarization());
  CHECK(r.size() == 3);
  for (const auto& g : r) {
    CHECK(square(m, g) == -2);
    CHECK(degree(m, g) == 0);
  }
  CHECK(in_root_span(m, cls(m, "Gamma+2Gamma1"), r));
  CHECK_FALSE(in_root_span(m, cls(m, "E"), r));
}

TEST_CASE("restriction to a smooth member") {
  const Model jk7 = reg("L_JK7");
  const RestrictionEstimate e = h0_restricted(jk7, cls(jk7, "E"), jk7.polarization());
  CHECK(e.exact);
  CHECK(e.lower == 2);
  // Degree above 2g - 2 on the curve: Riemann-Roch is exact.
  const Model t7 = reg("L_T7");
  const RestrictionEstimate big = h0_restricted(t7, cls(t7, "2H"), t7.polarization());
  CHECK(big.exact);
  CHECK(big.lower == 2 * 12 + 1 - 7);
  // omega_C - 3A on the genus 7 trigonal curve: degree 3, not the g^1_3.
  const RestrictionEstimate w = h0_restricted(t7, cls(t7, "H-3E"), t7.polarization());
  CHECK(w.exact);
  CHECK(w.lower == 1);
  // Trivial restriction.
  const RestrictionEstimate zero = h0_restricted(t7, make_class({0, 0}), t7.polarization());
  CHECK(zero == RestrictionEstimate::interval(1, 1));
}
