#include "k3/lattice.hpp"

#include "k3/detail/model_cache.hpp"
#include "k3/enumeration.hpp"

#include <cmath>
#include <set>
#include <sstream>

namespace k3 {

namespace {

void require_dims(const Model& m, const DivisorClass& d) {
  if (d.size() != m.rank())
    throw ContractError("class has " + std::to_string(d.size()) + " coordinates, model rank is " +
                        std::to_string(m.rank()));
}

Integer dot_checked(const DivisorClass& row, const DivisorClass& d) {
  Integer out = 0;
  for (Eigen::Index i = 0; i < row.size(); ++i) {
    Integer term = 0;
    if (__builtin_mul_overflow(row(i), d(i), &term) || __builtin_add_overflow(out, term, &out))
      throw ContractError("intersection number overflows 64-bit integers");
  }
  return out;
}

DivisorClass gram_times(const GramMatrix& g, const DivisorClass& d) {
  DivisorClass out(g.rows());
  for (Eigen::Index i = 0; i < g.rows(); ++i) out(i) = dot_checked(g.row(i).transpose(), d);
  return out;
}

// Basis vectors e with e.H = 0 and e^2 = -2.
std::vector<Eigen::Index> contracted_basis_roots(const GramMatrix& g, const DivisorClass& h_row) {
  std::vector<Eigen::Index> out;
  for (Eigen::Index i = 0; i < g.rows(); ++i)
    if (h_row(i) == 0 && g(i, i) == -2) out.push_back(i);
  return out;
}


// When H contracts some roots, build A = mH - x with x in the span of the
// contracted basis roots and x.G_i = -s < 0, so A is positive on them; m is
// large enough that Cauchy-Schwarz on H-perp keeps A positive on every curve
// that H does not contract. Every root orthogonal to H must then be a signed
// nonnegative combination of the basis roots, otherwise no chamber is known.
DivisorClass auxiliary_ample(const GramMatrix& g, const DivisorClass& h) {
  const DivisorClass h_row = gram_times(g, h);
  const Integer hh = dot_checked(h_row, h);
  if (hh <= 0) return h;

  ShortVectorEnumerator probe(g, h);
  const ClassList orthogonal = probe.with_degree_and_square(0, -2);
  if (orthogonal.empty()) return h;

  const auto simple = contracted_basis_roots(g, h_row);
  if (simple.empty())
    throw ContractError("polarization contracts roots but none is a basis vector; give an explicit ample class");
  const auto k = static_cast<Eigen::Index>(simple.size());

  DenseMatrix<Rational> cartan(k, k);
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = 0; j < k; ++j) cartan(i, j) = Rational(g(simple[i], simple[j]));

  // Solve cartan * a = -1 by Gauss-Jordan over the rationals.
  DenseMatrix<Rational> aug(k, k + 1);
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = 0; j < k; ++j) aug(i, j) = cartan(i, j);
    aug(i, k) = Rational(-1);
  }
  for (Eigen::Index c = 0; c < k; ++c) {
    Eigen::Index p = c;
    while (p < k && aug(p, c) == 0) ++p;
    if (p == k) throw ContractError("contracted roots are linearly dependent");
    aug.row(c).swap(aug.row(p));
    const Rational piv = aug(c, c);
    for (Eigen::Index j = 0; j <= k; ++j) aug(c, j) /= piv;
    for (Eigen::Index r = 0; r < k; ++r) {
      if (r == c || aug(r, c) == 0) continue;
      const Rational f = aug(r, c);
      for (Eigen::Index j = 0; j <= k; ++j) aug(r, j) -= f * aug(c, j);
    }
  }
  boost::multiprecision::cpp_int scale = 1;
  for (Eigen::Index i = 0; i < k; ++i) {
    const auto den = boost::multiprecision::denominator(aug(i, k));
    scale = scale / boost::multiprecision::gcd(scale, den) * den;
  }
  DivisorClass x = DivisorClass::Zero(g.rows());
  for (Eigen::Index i = 0; i < k; ++i) {
    const Rational coeff = aug(i, k) * Rational(scale);
    x(simple[static_cast<std::size_t>(i)]) =
        static_cast<Integer>(boost::multiprecision::numerator(coeff));
  }

  // Every orthogonal root must lie in the cone spanned by +-(simple roots).
  for (const auto& r : orthogonal) {
    DivisorClass rest = r;
    for (auto idx : simple) rest(idx) = 0;
    bool in_span = rest.isZero();
    // Coordinates along simple roots must share one sign.
    bool pos = true, neg = true;
    for (auto idx : simple) {
      pos = pos && r(idx) >= 0;
      neg = neg && r(idx) <= 0;
    }
    if (!in_span || !(pos || neg))
      throw ContractError("roots orthogonal to the polarization are not spanned by contracted basis roots; give an explicit ample class");
  }

  const Integer xx = -dot_checked(gram_times(g, x), x);  // x^2 < 0 on H-perp
  // m^2 h > |x^2| (2h + 1)
  Integer mult = 1;
  while (static_cast<__int128>(mult) * mult * hh <= static_cast<__int128>(xx) * (2 * hh + 1)) ++mult;
  return DivisorClass(mult * h - x);
}

}  // namespace

Model::Model(GramMatrix gram, std::vector<std::string> basis_labels, DivisorClass polarization,
             std::string name, std::optional<DivisorClass> ample)
    : gram_(std::move(gram)),
      labels_(std::move(basis_labels)),
      polarization_(std::move(polarization)),
      name_(std::move(name)),
      cache_(std::make_shared<detail::ModelCache>()) {
  if (gram_.rows() == 0 || gram_.rows() != gram_.cols())
    throw ContractError("gram matrix must be square and nonempty");
  if (gram_ != gram_.transpose()) throw ContractError("gram matrix is not symmetric");
  if (static_cast<Eigen::Index>(labels_.size()) != gram_.rows())
    throw ContractError("basis_labels length differs from rank");
  if (polarization_.size() != gram_.rows()) throw ContractError("polarization length differs from rank");
  std::set<std::string> seen(labels_.begin(), labels_.end());
  if (seen.size() != labels_.size()) throw ContractError("basis labels are not distinct");

  polarization_row_ = gram_times(gram_, polarization_);
  if (ample) {
    if (ample->size() != gram_.rows()) throw ContractError("ample class length differs from rank");
    ample_ = *ample;
  } else if (signature_of(gram_) == Inertia{1, static_cast<int>(gram_.rows()) - 1, 0} &&
             dot_checked(polarization_row_, polarization_) > 0) {
    ample_ = auxiliary_ample(gram_, polarization_);
  } else {
    ample_ = polarization_;
  }
  ample_row_ = gram_times(gram_, ample_);
}

Integer pair(const Model& m, const DivisorClass& a, const DivisorClass& b) {
  require_dims(m, a);
  require_dims(m, b);
  return dot_checked(gram_times(m.gram(), a), b);
}

Integer degree(const Model& m, const DivisorClass& d) {
  require_dims(m, d);
  return dot_checked(m.polarization_row(), d);
}

Integer ample_degree(const Model& m, const DivisorClass& d) {
  require_dims(m, d);
  return dot_checked(m.ample_row(), d);
}

Integer chi_rr(const Model& m, const DivisorClass& d) { return 2 + square(m, d) / 2; }

Integer genus_of(const Model& m) { return square(m, m.polarization()) / 2 + 1; }

DivisorClass zero_class(const Model& m) { return DivisorClass::Zero(m.rank()); }

bool ValidationReport::has(const std::string& code) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.code == code; });
}

Inertia signature_of(const GramMatrix& gram) { return inertia(cast_exact<Rational>(gram)); }

bool proportional(const DivisorClass& a, const DivisorClass& b) {
  if (a.size() != b.size()) return false;
  for (Eigen::Index i = 0; i < a.size(); ++i)
    for (Eigen::Index j = i + 1; j < a.size(); ++j)
      if (static_cast<__int128>(a(i)) * b(j) != static_cast<__int128>(a(j)) * b(i)) return false;
  return true;
}

ValidationReport validate_lattice(const Model& m) {
  ValidationReport r;
  const auto& g = m.gram();
  for (Eigen::Index i = 0; i < g.rows(); ++i)
    if (g(i, i) % 2 != 0) {
      r.violations.push_back({"odd_diagonal", "diagonal entry " + std::to_string(i) + " is odd"});
      break;
    }
  if (bareiss_determinant(g) == 0) {
    r.violations.push_back({"degenerate", "gram matrix is singular"});
    return r;
  }
  const Inertia in = signature_of(g);
  if (in.positive != 1 || in.negative != g.rows() - 1) {
    std::ostringstream os;
    os << "signature is (" << in.positive << ", " << in.negative << "), expected (1, "
       << g.rows() - 1 << ")";
    r.violations.push_back({"signature", os.str()});
  }
  return r;
}

ValidationReport validate_model(const Model& m) {
  ValidationReport r = validate_lattice(m);
  const Integer hh = square(m, m.polarization());
  if (hh < 8) r.violations.push_back({"small_polarization", "H^2 = " + std::to_string(hh) + " < 8"});
  if (!r.has("signature") && !r.has("degenerate") && hh > 0) {
    const ClassList contracted = classes_with(m, {0, -2});
    if (!contracted.empty()) {
      std::ostringstream os;
      os << "H is not ample: " << contracted.size() << " root(s) orthogonal to H";
      r.violations.push_back({"not_ample", os.str()});
    }
  }
  return r;
}

}  // namespace k3
