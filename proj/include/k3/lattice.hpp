#pragma once

// Picard lattice models: an even hyperbolic lattice with a distinguished
// polarization H. Everything is integral and exact.

#include "k3/exact_ldlt.hpp"
#include "k3/types.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace k3 {

namespace detail {
struct ModelCache;
}

struct CohomologyDims {
  Integer h0 = 0;
  Integer h1 = 0;
  Integer h2 = 0;

  bool operator==(const CohomologyDims&) const = default;
};

/// A polarized lattice (Pic S, H).
///
/// `polarization()` is the embedding class H. Degrees used to order the
/// enumeration and the fixed-component machinery are taken against
/// `ample()`, which equals H unless H merely contracts some (-2)-curves (the
/// special-member curves), in which case an auxiliary ample class is carried
/// alongside.
class Model {
 public:
  Model(GramMatrix gram, std::vector<std::string> basis_labels, DivisorClass polarization,
        std::string name = {}, std::optional<DivisorClass> ample = std::nullopt);

  Eigen::Index rank() const { return gram_.rows(); }
  const GramMatrix& gram() const { return gram_; }
  const std::vector<std::string>& basis_labels() const { return labels_; }
  const DivisorClass& polarization() const { return polarization_; }
  const DivisorClass& ample() const { return ample_; }
  bool polarization_is_degree_class() const { return ample_ == polarization_; }
  const std::string& name() const { return name_; }

  /// gram * H, cached: D.H is then a dot product.
  const DivisorClass& polarization_row() const { return polarization_row_; }
  const DivisorClass& ample_row() const { return ample_row_; }

  detail::ModelCache& cache() const { return *cache_; }

 private:
  GramMatrix gram_;
  std::vector<std::string> labels_;
  DivisorClass polarization_;
  DivisorClass ample_;
  std::string name_;
  DivisorClass polarization_row_;
  DivisorClass ample_row_;
  std::shared_ptr<detail::ModelCache> cache_;
};

Integer pair(const Model& m, const DivisorClass& a, const DivisorClass& b);

inline Integer square(const Model& m, const DivisorClass& d) { return pair(m, d, d); }

/// D.H against the polarization.
Integer degree(const Model& m, const DivisorClass& d);

/// D.A against the ample class used for ordering (equals degree() on ordinary models).
Integer ample_degree(const Model& m, const DivisorClass& d);

/// chi(O(D)) = 2 + D^2/2.
Integer chi_rr(const Model& m, const DivisorClass& d);

/// g = H^2/2 + 1.
Integer genus_of(const Model& m);

DivisorClass zero_class(const Model& m);

/// One violated invariant per entry; empty when the model is valid.
struct Violation {
  std::string code;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool valid() const { return violations.empty(); }
  bool has(const std::string& code) const;
};

/// Checks evenness, nondegeneracy, signature (1, rank-1), H^2 >= 8 and
/// ampleness of H (no (-2)-class orthogonal to H).
ValidationReport validate_model(const Model& m);

/// Structural checks only: evenness, nondegeneracy and signature. Used where
/// small genus (H^2 < 8) is legitimate.
ValidationReport validate_lattice(const Model& m);

Inertia signature_of(const GramMatrix& gram);

/// True when a and b are proportional over the rationals.
bool proportional(const DivisorClass& a, const DivisorClass& b);

}  // namespace k3
