#pragma once

// Finite enumeration of divisor classes.
//
// For a class P with P^2 > 0 on a hyperbolic lattice, the form
//
//     Q_P(x) = 2 (x.P)^2 - P^2 x^2
//
// is positive definite (it equals P^2 times the squared norm of x in the
// decomposition Q (P) (+) P-perp with the sign on P-perp flipped). A class with
// x.P = d and x^2 >= s satisfies Q_P(x) <= 2 d^2 - P^2 s, so every degree /
// square query is a short-vector problem for Q_P, solved by Fincke-Pohst
// recursion over exact rational Gram-Schmidt data.

#include "k3/lattice.hpp"

#include <functional>
#include <memory>
#include <unordered_set>
#include <utility>
#include <vector>

namespace k3 {

struct DegreeSquareQuery {
  Integer degree = 0;
  Integer square = 0;
};

class ShortVectorEnumerator {
 public:
  /// `reduce_basis` applies an integral unimodular size reduction to Q_P
  /// first. Output does not depend on it.
  ShortVectorEnumerator(const GramMatrix& gram, const DivisorClass& polarization,
                        bool reduce_basis = true);

  /// Calls `visit` on every x with Q_P(x) <= bound (unordered).
  void for_each_within(Integer bound, const std::function<void(const DivisorClass&)>& visit) const;

  /// All x with x.P = degree and x^2 = square, lexicographically sorted.
  ClassList with_degree_and_square(Integer degree, Integer square) const;

  /// All x with x.P = degree and x^2 >= min_square, lexicographically sorted.
  ClassList with_degree_min_square(Integer degree, Integer min_square) const;

  const GramMatrix& form() const { return form_; }
  Integer polarization_square() const { return p_square_; }

 private:
  GramMatrix gram_;
  DivisorClass polarization_row_;
  Integer p_square_ = 0;
  GramMatrix form_;       // Q_P in the original basis
  GramMatrix transform_;  // columns: reduced basis in original coordinates
  Ldlt<Rational> gs_;     // Gram-Schmidt data of the reduced form
};

/// {D : D.H = degree, D^2 = square}, lexicographic.
ClassList classes_with(const Model& m, DegreeSquareQuery q);

/// {D : D.P = degree, D^2 = square} for an arbitrary class P with P^2 > 0.
ClassList classes_with_against(const Model& m, const DivisorClass& p, DegreeSquareQuery q);

/// Irreducible (-2)-curves with 0 < Gamma.A <= max_degree (A the ample class),
/// sorted by degree then lexicographically. A root is irreducible iff it pairs
/// nonnegatively with every irreducible root of smaller degree.
ClassList irreducible_roots(const Model& m, Integer max_degree);

/// D.Gamma >= 0 for every irreducible root Gamma with Gamma.A <= max_degree.
/// With max_degree >= D.A and D effective this is exactly nefness.
bool pairs_nonnegatively_with_roots(const Model& m, const DivisorClass& d, Integer max_degree);

/// Layered table for the monoid generated by {C : C.A > 0, C^2 >= -2}.
/// Layer k holds the effective classes of degree k and the indecomposable
/// ones. Copies share layers; extending never mutates existing layers.
class OracleTable {
 public:
  struct Layer {
    ClassList effective;    // lexicographic
    ClassList indecomposable;
    std::unordered_set<DivisorClass, ClassHash, ClassEqual> lookup;
  };

  Integer depth() const { return static_cast<Integer>(layers_.size()) - 1; }
  OracleTable extended_to(const Model& m, Integer degree) const;
  const Layer& layer(Integer degree) const { return *layers_.at(static_cast<std::size_t>(degree)); }
  bool contains(const DivisorClass& d, Integer degree) const;

 private:
  std::vector<std::shared_ptr<const Layer>> layers_;
};

struct OracleResult {
  bool effective = false;
  OracleTable table;
};

/// Independent effectivity decision by dynamic programming over degree.
OracleResult effective_oracle(const Model& m, const DivisorClass& d, OracleTable table);

/// Convenience form using the model's shared table.
bool effective_oracle(const Model& m, const DivisorClass& d);

/// Classes with 0 < D.H <= max_degree and D^2 >= -2 that are not a sum of two
/// nonzero effective classes.
ClassList irreducible_classes(const Model& m, Integer max_degree);

/// Primitive nef classes E with E^2 = 0 and E.H = degree.
ClassList elliptic_pencils(const Model& m, Integer degree);

/// Primitive nef isotropic classes E with E.P = degree (P^2 > 0).
ClassList elliptic_pencils_against(const Model& m, const DivisorClass& p, Integer degree);

/// Unordered pairs (A1, A2) of nonzero effective classes with A1 + A2 = D and
/// A1.A2 <= 0; A1 is the lexicographically smaller one. Only splittings whose
/// smaller-degree part has degree <= max_parts_degree are searched.
std::vector<std::pair<DivisorClass, DivisorClass>> nonconnected_decompositions(
    const Model& m, const DivisorClass& d, Integer max_parts_degree);

}  // namespace k3
