#pragma once

// Scroll types swept out by pencils of low degree on the embedded surface or
// its canonical curve sections.

#include "k3/lattice.hpp"

#include <array>
#include <optional>
#include <vector>

namespace k3 {

struct ScrollType {
  std::vector<Integer> parts;  // weakly decreasing, nonnegative

  Integer sum() const;
  bool operator==(const ScrollType&) const = default;
};

/// Splitting type of the scroll swept out by the spans of the members of |E|
/// on S in P^g. Precondition: E an elliptic pencil with E.H in {3, 4} and H
/// very ample. Uses d_j = h0(H - jE) - h0(H - (j+1)E) and
/// e_i = #{j : d_j >= i} - 1.
ScrollType scroll_type(const Model& m, const DivisorClass& e);

/// The same computation without the very-ampleness check; used on trusted
/// inputs inside the classifier.
ScrollType scroll_type_unchecked(const Model& m, const DivisorClass& e);

/// The d_j sequence behind scroll_type, ending at the first zero.
std::vector<Integer> scroll_differences(const Model& m, const DivisorClass& e);

struct HyperplaneScroll {
  ScrollType type;
  bool extrapolated = false;  // input outside sum <= 8, at most 4 parts
};

/// Type of a general hyperplane section: among partitions of the same sum into
/// one fewer part whose twisted section counts dominate the input's, the most
/// balanced one (least sum of squares, then lexicographically smallest).
HyperplaneScroll generic_hyperplane_scroll(const ScrollType& t);

/// sum_i max(f_i - j + 1, 0) for a two-part type.
Integer section_h0_from_scroll(const ScrollType& f, Integer j);

struct TetragonalBs {
  Integer b1 = 0;
  Integer b2 = 0;
  // Genus 9 leaves b1 in {2, 3}; then b1_alternative = 3 and determined = false.
  bool determined = true;
  Integer b1_alternative = 0;
};

/// Preconditions: g in {7, 8, 9}, a degree-4 pencil and no degree-3 pencil,
/// no class with D^2 = 2 and D.H = 6, and H not twice a class of square 4.
TetragonalBs tetragonal_b_invariants(const Model& m);

/// Three degree-4 pencils with pairwise products 2 summing to H, if any.
std::optional<std::array<DivisorClass, 3>> triple_pencil_decomposition(const Model& m);

}  // namespace k3
