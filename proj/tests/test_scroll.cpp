#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "k3/cohomology.hpp"
#include "k3/registry.hpp"
#include "k3/scroll.hpp"

using namespace k3;

namespace {

Model reg(const std::string& n) { return registry_model(n).model; }

// Scroll type straight from a list of h0(H - jE), j = 0, 1, ...: with
// d_j = h0(H-jE) - h0(H-(j+1)E), e_i = #{j : d_j >= i} - 1.
std::vector<Integer> scroll_from_table(const std::vector<Integer>& h) {
  std::vector<Integer> d;
  for (std::size_t j = 0; j + 1 < h.size(); ++j) d.push_back(h[j] - h[j + 1]);
  std::vector<Integer> e;
  for (Integer i = 1; i <= d.front(); ++i)
    e.push_back(std::count_if(d.begin(), d.end(), [&](Integer v) { return v >= i; }) - 1);
  return e;
}

// Sections of O(1) - jF on S(a_1, ..., a_n): sum of max(0, a_i - j + 1).
Integer scroll_sections(const std::vector<Integer>& a, Integer j) {
  Integer s = 0;
  for (Integer v : a) s += std::max<Integer>(0, v - j + 1);
  return s;
}

}  // namespace

TEST_CASE("scroll types from hand-computed h0 tables") {
  CHECK(scroll_type(reg("L_T9"), make_class({0, 1})).parts == scroll_from_table({10, 7, 4, 1, 0}));
  CHECK(scroll_type(reg("L_T8"), make_class({0, 1})).parts == scroll_from_table({9, 6, 3, 0}));
  CHECK(scroll_type(reg("L_T7"), make_class({0, 1})).parts == scroll_from_table({8, 5, 2, 0}));
  CHECK(scroll_type(reg("L_I"), make_class({1, 0, 0, 0})).parts == scroll_from_table({8, 5, 2, 1, 0}));
  CHECK(scroll_type(reg("L_VI"), make_class({1, 0})).parts == scroll_from_table({10, 6, 3, 1, 0}));
}

TEST_CASE("scroll invariants") {
  for (const auto& [name, pencil] : std::vector<std::pair<std::string, DivisorClass>>{
           {"L_T5", make_class({0, 1})}, {"L_T10", make_class({0, 1})}, {"L_II", make_class({1, 0, 0})}}) {
    const Model m = reg(name);
    const ScrollType t = scroll_type(m, pencil);
    CHECK(t.sum() == genus_of(m) + 1 - degree(m, pencil));
    CHECK(static_cast<Integer>(t.parts.size()) == degree(m, pencil));
    CHECK(std::is_sorted(t.parts.rbegin(), t.parts.rend()));
    const auto d = scroll_differences(m, pencil);
    CHECK(d.back() == 0);
  }
}

TEST_CASE("scroll_type refuses a non very ample polarization") {
  const Model jk = reg("L_JK10");
  CHECK_THROWS_AS(scroll_type(jk, make_class({1, 0})), ContractError);
}

TEST_CASE("generic hyperplane sections of scrolls") {
  const std::vector<std::pair<std::vector<Integer>, std::vector<Integer>>> table = {
      {{3, 2, 2}, {4, 3}}, {{2, 2, 2}, {3, 3}}, {{2, 2, 1}, {3, 2}},
      {{3, 1, 1}, {3, 2}}, {{3, 2, 1, 0}, {3, 2, 1}}};
  for (const auto& [in, out] : table) {
    const HyperplaneScroll h = generic_hyperplane_scroll(ScrollType{in});
    CHECK(h.type.parts == out);
    CHECK_FALSE(h.extrapolated);
  }
  const HyperplaneScroll big = generic_hyperplane_scroll(ScrollType{{3, 3, 3}});
  CHECK(big.extrapolated);
  CHECK(big.type.sum() == 9);
  CHECK(big.type.parts.size() == 2);
  CHECK_THROWS_AS(generic_hyperplane_scroll(ScrollType{{4}}), ContractError);
}

TEST_CASE("hyperplane scroll has at least the sections of the original") {
  for (const std::vector<Integer>& in : std::vector<std::vector<Integer>>{{1, 1, 1}, {2, 1, 1}, {3, 3, 2}, {2, 1, 1, 1}}) {
    const HyperplaneScroll h = generic_hyperplane_scroll(ScrollType{in});
    CHECK(h.type.parts.size() + 1 == in.size());
    // For j >= 1, O(-jF) has no sections, so restriction to the hyperplane is injective.
    for (Integer j = 1; j <= 6; ++j) CHECK(scroll_sections(h.type.parts, j) >= scroll_sections(in, j));
    CHECK(scroll_sections(h.type.parts, 0) == scroll_sections(in, 0) - 1);
  }
}

TEST_CASE("sections of twists on two-part scrolls") {
  for (const std::vector<Integer>& f : std::vector<std::vector<Integer>>{{4, 3}, {3, 2}, {2, 1}}) {
    for (Integer j = 0; j <= 6; ++j) CHECK(section_h0_from_scroll(ScrollType{f}, j) == scroll_sections(f, j));
  }
  CHECK_THROWS_AS(section_h0_from_scroll(ScrollType{{1, 1, 1}}, 1), ContractError);
}

TEST_CASE("tetragonal b-invariants") {
  const TetragonalBs ii = tetragonal_b_invariants(reg("L_II"));
  CHECK(ii.b1 == 2);
  CHECK(ii.b2 == 0);
  const TetragonalBs g7 = tetragonal_b_invariants(reg("controls/tetragonal_g7"));
  CHECK(g7.b1 == 1);
  CHECK(g7.b2 == 1);
  const TetragonalBs g8 = tetragonal_b_invariants(reg("controls/tetragonal_g8"));
  CHECK(g8.b1 == 2);
  CHECK(g8.b2 == 1);
  const TetragonalBs g9 = tetragonal_b_invariants(reg("controls/tetragonal_g9"));
  CHECK_FALSE(g9.determined);
  CHECK(g9.b1_alternative == 3);
}

TEST_CASE("three degree-4 pencils summing to H") {
  const auto t = triple_pencil_decomposition(reg("L_II"));
  REQUIRE(t.has_value());
  CHECK((*t)[0] + (*t)[1] + (*t)[2] == reg("L_II").polarization());
  CHECK_FALSE(triple_pencil_decomposition(reg("controls/tetragonal_g7")).has_value());
}
