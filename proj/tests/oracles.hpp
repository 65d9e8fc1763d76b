#pragma once

// Brute-force reference computations for the unit tests. Nothing here calls
// the library's search code; only Model accessors are used.

#include "k3/lattice.hpp"

#include <functional>
#include <set>
#include <vector>

namespace oracle {

using k3::ClassList;
using k3::DivisorClass;
using k3::Integer;

inline Integer dot(const k3::GramMatrix& g, const DivisorClass& a, const DivisorClass& b) { return a.dot(g * b); }

/// Every vector in [-r, r]^n.
inline void for_each_in_box(Eigen::Index n, Integer r, const std::function<void(const DivisorClass&)>& f) {
  DivisorClass x = DivisorClass::Constant(n, -r);
  for (;;) {
    f(x);
    Eigen::Index i = 0;
    while (i < n && x(i) == r) x(i++) = -r;
    if (i == n) return;
    ++x(i);
  }
}

inline std::vector<Integer> as_vector(const DivisorClass& d) { return {d.data(), d.data() + d.size()}; }

using ClassSet = std::set<std::vector<Integer>>;

inline ClassSet to_set(const ClassList& l) {
  ClassSet s;
  for (const auto& d : l) s.insert(as_vector(d));
  return s;
}

/// {x in box : x.P = deg, x^2 = sq}
inline ClassSet box_search(const k3::GramMatrix& g, const DivisorClass& p, Integer deg, Integer sq, Integer r) {
  ClassSet out;
  for_each_in_box(g.rows(), r, [&](const DivisorClass& x) {
    if (dot(g, x, p) == deg && dot(g, x, x) == sq) out.insert(as_vector(x));
  });
  return out;
}

/// Effective classes of degree <= max_deg (against p) inside the box, built
/// as sums of generators {C : C.p > 0, C^2 >= -2}. Indexed by degree.
inline std::vector<ClassSet> box_monoid(const k3::GramMatrix& g, const DivisorClass& p, Integer max_deg, Integer r) {
  std::vector<ClassList> gens(static_cast<std::size_t>(max_deg + 1));
  for_each_in_box(g.rows(), r, [&](const DivisorClass& x) {
    const Integer d = dot(g, x, p);
    if (d > 0 && d <= max_deg && dot(g, x, x) >= -2) gens[static_cast<std::size_t>(d)].push_back(x);
  });
  std::vector<ClassSet> eff(static_cast<std::size_t>(max_deg + 1));
  eff[0].insert(as_vector(DivisorClass::Zero(g.rows())));
  for (Integer k = 1; k <= max_deg; ++k)
    for (Integer j = 1; j <= k; ++j)
      for (const auto& c : gens[static_cast<std::size_t>(j)])
        for (const auto& e : eff[static_cast<std::size_t>(k - j)]) {
          std::vector<Integer> s = e;
          for (std::size_t i = 0; i < s.size(); ++i) s[i] += c(static_cast<Eigen::Index>(i));
          eff[static_cast<std::size_t>(k)].insert(s);
        }
  return eff;
}

inline DivisorClass from_vector(const std::vector<Integer>& v) {
  DivisorClass d(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) d(static_cast<Eigen::Index>(i)) = v[i];
  return d;
}

/// Roots of degree in (0, max_deg] that are not a sum of two nonzero
/// effective classes (from box_monoid).
inline ClassSet irreducible_roots(const k3::GramMatrix& g, const DivisorClass& p, Integer max_deg, Integer r) {
  const auto eff = box_monoid(g, p, max_deg, r);
  ClassSet out;
  for (Integer k = 1; k <= max_deg; ++k)
    for (const auto& v : eff[static_cast<std::size_t>(k)]) {
      const DivisorClass x = from_vector(v);
      if (dot(g, x, x) != -2) continue;
      bool split = false;
      for (Integer j = 1; j < k && !split; ++j)
        for (const auto& a : eff[static_cast<std::size_t>(j)])
          if (eff[static_cast<std::size_t>(k - j)].count(as_vector(x - from_vector(a)))) {
            split = true;
            break;
          }
      if (!split) out.insert(v);
    }
  return out;
}

inline Integer gcd_all(const DivisorClass& d) {
  Integer c = 0;
  for (Eigen::Index i = 0; i < d.size(); ++i) c = std::gcd(c, d(i) < 0 ? -d(i) : d(i));
  return c;
}

}  // namespace oracle
