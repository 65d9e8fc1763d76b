#include "k3/scroll.hpp"

#include "k3/cohomology.hpp"
#include "k3/enumeration.hpp"

#include <algorithm>
#include <functional>

namespace k3 {

Integer ScrollType::sum() const { return std::accumulate(parts.begin(), parts.end(), Integer{0}); }

namespace {

void require_pencil(const Model& m, const DivisorClass& e) {
  const Integer n = degree(m, e);
  if (n != 3 && n != 4) throw ContractError("scroll_type needs a pencil of degree 3 or 4");
  if (square(m, e) != 0 || !is_primitive(e) || !is_nef(m, e))
    throw ContractError("scroll_type needs an elliptic pencil");
}

Integer twisted_sections(const std::vector<Integer>& parts, Integer k) {
  Integer s = 0;
  for (Integer p : parts) s += std::max<Integer>(p - k + 1, 0);
  return s;
}

}  // namespace

std::vector<Integer> scroll_differences(const Model& m, const DivisorClass& e) {
  std::vector<Integer> d;
  Integer prev = h0(m, m.polarization());
  for (Integer j = 1;; ++j) {
    const Integer next = h0(m, DivisorClass(m.polarization() - j * e));
    d.push_back(prev - next);
    if (prev == 0) break;
    prev = next;
  }
  return d;
}

ScrollType scroll_type_unchecked(const Model& m, const DivisorClass& e) {
  require_pencil(m, e);
  const Integer n = degree(m, e);
  const auto d = scroll_differences(m, e);
  for (std::size_t j = 1; j < d.size(); ++j)
    check_internal(d[j] <= d[j - 1], "scroll differences are not weakly decreasing");
  check_internal(std::accumulate(d.begin(), d.end(), Integer{0}) == genus_of(m) + 1,
                 "scroll differences do not add up to h0(H)");
  check_internal(d.front() == n, "first scroll difference differs from the pencil degree");
  ScrollType t;
  for (Integer i = 1; i <= n; ++i) {
    const auto count = std::count_if(d.begin(), d.end(), [&](Integer x) { return x >= i; });
    t.parts.push_back(static_cast<Integer>(count) - 1);
  }
  check_internal(t.sum() == genus_of(m) + 1 - n, "scroll type has the wrong degree");
  return t;
}

ScrollType scroll_type(const Model& m, const DivisorClass& e) {
  if (!is_very_ample(m, m.polarization())) throw ContractError("scroll_type needs a very ample polarization");
  return scroll_type_unchecked(m, e);
}

HyperplaneScroll generic_hyperplane_scroll(const ScrollType& t) {
  if (t.parts.size() < 2) throw ContractError("a hyperplane scroll needs at least two parts");
  const Integer total = t.sum();
  const std::size_t k = t.parts.size() - 1;
  const Integer top = t.parts.front();

  std::vector<Integer> best;
  Integer best_energy = -1;
  std::vector<Integer> cur;
  std::function<void(Integer, Integer)> build = [&](Integer remaining, Integer cap) {
    if (cur.size() == k) {
      if (remaining != 0) return;
      for (Integer j = 1; j <= total + 1; ++j)
        if (twisted_sections(cur, j) < twisted_sections(t.parts, j)) return;
      Integer energy = 0;
      for (Integer p : cur) energy += p * p;
      if (best_energy < 0 || energy < best_energy || (energy == best_energy && cur < best)) {
        best = cur;
        best_energy = energy;
      }
      return;
    }
    for (Integer p = std::min(cap, remaining); p >= 0; --p) {
      cur.push_back(p);
      build(remaining - p, p);
      cur.pop_back();
    }
  };
  build(total, std::max(total, top));
  check_internal(!best.empty(), "no hyperplane scroll dominates the input");
  HyperplaneScroll out;
  out.type.parts = best;
  out.extrapolated = total > 8 || t.parts.size() > 4;
  return out;
}

Integer section_h0_from_scroll(const ScrollType& f, Integer j) {
  if (f.parts.size() != 2) throw ContractError("section counts are defined on two-part scrolls");
  if (j < 0) throw ContractError("twist must be nonnegative");
  return twisted_sections(f.parts, j);
}

std::optional<std::array<DivisorClass, 3>> triple_pencil_decomposition(const Model& m) {
  const ClassList pencils = elliptic_pencils(m, 4);
  for (std::size_t a = 0; a < pencils.size(); ++a)
    for (std::size_t b = a + 1; b < pencils.size(); ++b)
      for (std::size_t c = b + 1; c < pencils.size(); ++c) {
        if (pair(m, pencils[a], pencils[b]) != 2 || pair(m, pencils[a], pencils[c]) != 2 ||
            pair(m, pencils[b], pencils[c]) != 2)
          continue;
        if (pencils[a] + pencils[b] + pencils[c] == m.polarization())
          return std::array<DivisorClass, 3>{pencils[a], pencils[b], pencils[c]};
      }
  return std::nullopt;
}

TetragonalBs tetragonal_b_invariants(const Model& m) {
  const Integer g = genus_of(m);
  if (g < 7 || g > 9) throw ContractError("b-invariants are tabulated for genus 7, 8, 9");
  if (!elliptic_pencils(m, 3).empty()) throw ContractError("b-invariants need Clifford index 2 (a trigonal pencil exists)");
  if (elliptic_pencils(m, 4).empty()) throw ContractError("b-invariants need a degree-4 pencil");
  if (!classes_with(m, {6, 2}).empty()) throw ContractError("b-invariants need every Clifford divisor to have square 0");
  const DivisorClass& h = m.polarization();
  if (content(h) % 2 == 0 && square(m, DivisorClass(h / 2)) == 4)
    throw ContractError("b-invariants need H not twice a class of square 4");

  TetragonalBs out;
  if (g == 8) {
    out.b1 = 2;
    out.b2 = 1;
  } else if (g == 9) {
    out.b1 = 2;
    out.b2 = 2;
    out.determined = false;
    out.b1_alternative = 3;
  } else if (triple_pencil_decomposition(m)) {
    out.b1 = 2;
    out.b2 = 0;
  } else {
    out.b1 = 1;
    out.b2 = 1;
  }
  check_internal(out.b1 + out.b2 == g - 5, "b-invariants do not add up to g - 5");
  return out;
}

}  // namespace k3
