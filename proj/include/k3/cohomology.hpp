#pragma once

// Line-bundle cohomology on the generic K3 carrying a given Picard lattice.
//
// Fixed components are peeled off one (-2)-curve at a time: if Gamma is an
// irreducible root with Gamma.D < 0 and D is effective, Gamma is a component
// of every member, so h0(D) = h0(D - Gamma). What is left is either nef or
// visibly not effective, and nef classes have known h0.

#include "k3/lattice.hpp"

namespace k3 {

struct PeelTrace {
  DivisorClass residual;  // moving part when the input is effective
  ClassList removed;      // roots subtracted, in order
};

/// Subtracts lexicographically-first negatively pairing irreducible roots
/// until none is left or the class has nonpositive degree.
PeelTrace peel_fixed_part(const Model& m, const DivisorClass& d);

bool is_effective(const Model& m, const DivisorClass& d);

/// Precondition: d is zero or effective (ContractError otherwise).
bool is_nef(const Model& m, const DivisorClass& d);

Integer h0(const Model& m, const DivisorClass& d);

CohomologyDims cohomology_dims(const Model& m, const DivisorClass& d);

/// Precondition: d effective and nef.
bool is_base_point_free(const Model& m, const DivisorClass& d);

/// Precondition: d effective with d^2 >= 8.
bool is_very_ample(const Model& m, const DivisorClass& d);

/// First obstruction to very ampleness (a root orthogonal to D, a pencil of
/// degree <= 2, B with D = 2B and B^2 = 2, or a negatively pairing root when
/// D is not nef); nullopt when D is very ample.
struct VeryAmpleObstruction {
  std::string kind;
  DivisorClass witness;
};
std::optional<VeryAmpleObstruction> very_ample_obstruction(const Model& m, const DivisorClass& d);

/// True when a smooth member of |C| is hyperelliptic: C = 2B with B^2 = 2 or
/// a pencil E has E.C = 2. Precondition: C nef with C^2 > 0.
bool curve_is_hyperelliptic(const Model& m, const DivisorClass& c);

struct RestrictionEstimate {
  Integer lower = 0;
  Integer upper = 0;
  bool exact = false;

  static RestrictionEstimate interval(Integer lo, Integer hi) { return {lo, hi, lo == hi}; }
  bool operator==(const RestrictionEstimate&) const = default;
};

/// Irreducible roots orthogonal to C, sorted lexicographically.
ClassList contracted_roots(const Model& m, const DivisorClass& c);

/// True when d is an integral combination of the given (independent) roots.
bool in_root_span(const Model& m, const DivisorClass& d, const ClassList& roots);

/// h0(O_C(D)) on a smooth member C of |C|. Precondition: C effective with
/// C^2 >= 8. Degree 0 and 3 identifications assume the kernel of restriction
/// Pic S -> Pic C is spanned by the roots orthogonal to C.
RestrictionEstimate h0_restricted(const Model& m, const DivisorClass& d, const DivisorClass& c);

}  // namespace k3
