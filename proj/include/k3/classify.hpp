#pragma once

// Clifford index of hyperplane sections, h0(N(-2)) for S in P^g and for a
// canonical curve section, and how the two compare.

#include "k3/cohomology.hpp"
#include "k3/lattice.hpp"
#include "k3/scroll.hpp"

#include <optional>
#include <string>
#include <vector>

namespace k3 {

/// Raised when a classifier is asked about a model outside its domain
/// (invalid lattice, H not very ample, genus too small).
class RefusedModel : public ContractError {
 public:
  RefusedModel(const std::string& what, std::string kind, std::optional<DivisorClass> witness = std::nullopt)
      : ContractError(what), kind_(std::move(kind)), witness_(std::move(witness)) {}
  const std::string& kind() const { return kind_; }
  const std::optional<DivisorClass>& witness() const { return witness_; }

 private:
  std::string kind_;
  std::optional<DivisorClass> witness_;
};

enum class CliffordValue { one, two, at_least_three };

std::string to_string(CliffordValue v);

struct CliffordVerdict {
  CliffordValue value = CliffordValue::at_least_three;
  std::optional<DivisorClass> witness;
  Integer witness_square = 0;
  Integer witness_degree = 0;
  std::string witness_kind;  // "pencil", "genus_2_sextic", "half_polarization", "genus_bound", ""
  bool triple_of_genus_2 = false;  // H = 3D with D^2 = 2
};

/// Refuses (RefusedModel) unless the model is valid, g >= 5 and H very ample.
void require_smooth_model(const Model& m);

CliffordVerdict clifford_index(const Model& m);

struct SurfaceTwist {
  Integer value = 0;
  std::string case_label = "none";  // I .. VII or none
};

SurfaceTwist surface_normal_twist2(const Model& m);

struct CurveTwist {
  Integer value = 0;  // meaningful when exact
  bool exact = true;
  Integer lower = 0;
  Integer upper = 0;
};

/// General smooth member of |H|.
CurveTwist curve_normal_twist2(const Model& m);

/// The smooth member of |C| on a model whose polarization C contracts some
/// (-2)-curves (the polarization_not_very_ample entries). Only the trigonal
/// case is supported.
CurveTwist curve_normal_twist2_special(const Model& m);

enum class TwistTarget { surface, curve };

/// h0(N(-k)) for k >= 2. Genus 3 and 4 use the complete-intersection
/// normal bundles; genus >= 5 delegates for k = 2 and vanishes for k >= 3.
Integer normal_twist_k(const Model& m, Integer k, TwistTarget target);

/// h0 of omega_C^m on a canonical curve of genus g.
Integer canonical_curve_h0(Integer g, Integer m);

struct Comparison {
  std::string case_name;  // a, b, c or equal
  Integer surface = 0;
  Integer curve = 0;
};

Comparison compare_surface_curve(const Model& m);

struct ClassificationReport {
  std::string model_name;
  Integer genus = 0;
  CliffordVerdict clifford;
  Integer h0_normal_surface = 0;
  CurveTwist h0_normal_curve;
  std::string case_label = "none";
  std::string comparison_case = "equal";
  std::optional<ScrollType> scroll;             // trigonal or tetragonal pencil scroll
  std::optional<HyperplaneScroll> hyperplane_scroll;
  std::optional<TetragonalBs> b_invariants;
  std::vector<std::string> citations;
  std::vector<std::string> assumptions;
};

ClassificationReport classify(const Model& m);

/// Curve-level report for a special member (contracted roots allowed).
struct SpecialMemberReport {
  std::string model_name;
  Integer genus = 0;
  ClassList contracted;
  std::optional<DivisorClass> trigonal_pencil;
  RestrictionEstimate h0_pencil_restricted;  // h0(O_C(E))
  CurveTwist h0_normal_curve;
  std::vector<std::string> citations;
  std::vector<std::string> assumptions;
};

SpecialMemberReport classify_special_member(const Model& m);

}  // namespace k3
