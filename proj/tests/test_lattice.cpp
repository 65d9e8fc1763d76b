#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "k3/exact_ldlt.hpp"
#include "k3/lattice.hpp"

#include <Eigen/Eigenvalues>

using namespace k3;

namespace {

GramMatrix gram(std::initializer_list<std::initializer_list<Integer>> rows) {
  GramMatrix g(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.size()));
  Eigen::Index i = 0;
  for (const auto& r : rows) {
    Eigen::Index j = 0;
    for (Integer v : r) g(i, j++) = v;
    ++i;
  }
  return g;
}

// Floating eigenvalue signs as the reference for exact inertia.
Inertia float_inertia(const GramMatrix& g) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g.cast<double>());
  Inertia in;
  for (double ev : es.eigenvalues()) {
    if (ev > 1e-9)
      ++in.positive;
    else if (ev < -1e-9)
      ++in.negative;
    else
      ++in.zero;
  }
  return in;
}

}  // namespace

TEST_CASE("pairing, genus and Riemann-Roch on a trigonal lattice") {
  const Model m(gram({{16, 3}, {3, 0}}), {"H", "E"}, make_class({1, 0}));
  CHECK(genus_of(m) == 9);
  const DivisorClass d = make_class({1, -2});
  // (H-2E)^2 = 16 - 12 = 4 by hand.
  CHECK(square(m, d) == 4);
  CHECK(chi_rr(m, d) == 4);
  CHECK(degree(m, make_class({0, 1})) == 3);
  CHECK(ample_degree(m, make_class({0, 1})) == 3);
  CHECK(pair(m, make_class({1, 0}), make_class({0, 1})) == 3);
}

TEST_CASE("exact inertia agrees with floating eigenvalues") {
  const std::vector<GramMatrix> grams = {
      gram({{0, 1, 1, 1}, {1, -2, 0, 0}, {1, 0, -2, 0}, {1, 0, 0, -2}}),
      gram({{0, 2, 2}, {2, 0, 2}, {2, 2, 0}}),
      gram({{0, 1, 0, 0}, {1, -2, 1, 0}, {0, 1, -2, 1}, {0, 0, 1, -2}}),
      gram({{2, 1}, {1, 2}}),
      gram({{-2, 1}, {1, -2}}),
      gram({{2, 2}, {2, 2}}),
  };
  for (const auto& g : grams) CHECK(signature_of(g) == float_inertia(g));
}

TEST_CASE("Bareiss determinant matches cofactor expansion") {
  const GramMatrix g = gram({{0, 1, 1, 1}, {1, -2, 0, 0}, {1, 0, -2, 0}, {1, 0, 0, -2}});
  // Schur complement on the -2 block: det = (-8) * (0 - 3 * (-1/2)) = -12.
  CHECK(bareiss_determinant(g) == -12);
  CHECK(bareiss_determinant(gram({{16, 6}, {6, 2}})) == -4);
}

TEST_CASE("lattice validation codes") {
  CHECK(validate_lattice(Model(gram({{3, 1}, {1, 0}}), {"a", "b"}, make_class({1, 0}))).has("odd_diagonal"));
  CHECK(validate_lattice(Model(gram({{2, 2}, {2, 2}}), {"a", "b"}, make_class({1, 0}))).has("degenerate"));
  CHECK(validate_lattice(Model(gram({{2, 0}, {0, 2}}), {"a", "b"}, make_class({1, 0}))).has("signature"));
  CHECK(validate_model(Model(gram({{4}}), {"H"}, make_class({1}))).has("small_polarization"));
  // (6E+3Gamma).Gamma = 6 - 6 = 0, so Gamma is contracted.
  const Model jk(gram({{0, 1}, {1, -2}}), {"E", "Gamma"}, make_class({6, 3}));
  CHECK(validate_model(jk).has("not_ample"));
  CHECK(validate_lattice(jk).valid());
  CHECK(validate_model(Model(gram({{12, 3}, {3, 0}}), {"H", "E"}, make_class({1, 0}))).valid());
}

TEST_CASE("model constructor rejects malformed input") {
  CHECK_THROWS_AS(Model(gram({{2, 1}, {0, 2}}), {"a", "b"}, make_class({1, 0})), ContractError);
  CHECK_THROWS_AS(Model(gram({{2, 1}, {1, 2}}), {"a"}, make_class({1, 0})), ContractError);
  CHECK_THROWS_AS(Model(gram({{2, 1}, {1, 2}}), {"a", "a"}, make_class({1, 0})), ContractError);
}

TEST_CASE("auxiliary ample class on a special-member lattice") {
  const Model m(gram({{0, 1, 0, 0}, {1, -2, 1, 0}, {0, 1, -2, 1}, {0, 0, 1, -2}}), {"E", "G", "G1", "G2"},
                make_class({4, 3, 2, 1}));
  CHECK_FALSE(m.polarization_is_degree_class());
  const DivisorClass& a = m.ample();
  CHECK(square(m, a) > 0);
  // Positive on the three contracted basis roots and on E.
  for (Eigen::Index i = 0; i < 4; ++i) {
    DivisorClass e = DivisorClass::Zero(4);
    e(i) = 1;
    CHECK(pair(m, a, e) > 0);
  }
}

TEST_CASE("checked pairing overflow") {
  const Model m(gram({{2, 1}, {1, -2}}), {"a", "b"}, make_class({1, 0}));
  const Integer big = Integer{1} << 40;
  CHECK_THROWS_AS(square(m, make_class({big, big})), ContractError);
}

TEST_CASE("proportional") {
  CHECK(proportional(make_class({2, 4}), make_class({-1, -2})));
  CHECK_FALSE(proportional(make_class({2, 4}), make_class({1, 3})));
}
