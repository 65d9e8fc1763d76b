#include "k3/enumeration.hpp"

#include "k3/detail/model_cache.hpp"

#include <algorithm>
#include <cstdlib>

namespace k3 {

namespace {

using boost::multiprecision::cpp_int;

cpp_int floor_div(const cpp_int& num, const cpp_int& den) {
  cpp_int q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

Integer nearest_integer(const Rational& c) {
  const Rational shifted = c + Rational(1, 2);
  return static_cast<Integer>(
      floor_div(boost::multiprecision::numerator(shifted), boost::multiprecision::denominator(shifted)));
}

Integer dot(const DivisorClass& a, const DivisorClass& b) { return a.dot(b); }

// Pairwise size reduction of a positive definite integral form. Each step is
// an elementary column operation, so the accumulated transform is unimodular.
void size_reduce(GramMatrix& q, GramMatrix& t) {
  const Eigen::Index n = q.rows();
  for (int pass = 0; pass < 64; ++pass) {
    bool changed = false;
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) {
        if (i == j || q(j, j) == 0) continue;
        // round(q_ij / q_jj), ties toward zero
        const Integer num = q(i, j), den = q(j, j);
        Integer r = (2 * std::llabs(num) + den) / (2 * den);
        if (2 * std::llabs(num) == (2 * r - 1) * den) --r;
        if (num < 0) r = -r;
        if (r == 0) continue;
        // b_i <- b_i - r b_j
        const Integer new_ii = q(i, i) - 2 * r * q(i, j) + r * r * q(j, j);
        if (new_ii >= q(i, i)) continue;
        t.col(i) -= r * t.col(j);
        q.col(i) -= r * q.col(j);
        q.row(i) -= r * q.row(j);
        changed = true;
      }
    if (!changed) break;
  }
  // Larger diagonal first in the elimination order keeps the outer levels narrow.
  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index a, Eigen::Index b) { return q(a, a) < q(b, b); });
  GramMatrix q2(n, n), t2(t.rows(), n);
  for (Eigen::Index a = 0; a < n; ++a) {
    t2.col(a) = t.col(order[static_cast<std::size_t>(a)]);
    for (Eigen::Index b = 0; b < n; ++b)
      q2(a, b) = q(order[static_cast<std::size_t>(a)], order[static_cast<std::size_t>(b)]);
  }
  q = q2;
  t = t2;
}

}  // namespace

ShortVectorEnumerator::ShortVectorEnumerator(const GramMatrix& gram, const DivisorClass& polarization,
                                             bool reduce_basis)
    : gram_(gram) {
  polarization_row_ = gram * polarization;
  p_square_ = dot(polarization_row_, polarization);
  if (p_square_ <= 0) throw ContractError("enumeration needs a class of positive square");
  const Eigen::Index n = gram.rows();
  form_ = 2 * polarization_row_ * polarization_row_.transpose() - p_square_ * gram;
  GramMatrix reduced = form_;
  transform_ = GramMatrix::Identity(n, n);
  if (reduce_basis) size_reduce(reduced, transform_);
  auto ldlt = ldlt_unpivoted(cast_exact<Rational>(reduced));
  if (!ldlt) throw ContractError("quadratic form is not positive definite; lattice is not hyperbolic");
  for (Rational d : ldlt->diagonal)
    if (d <= 0) throw ContractError("quadratic form is not positive definite; lattice is not hyperbolic");
  gs_ = std::move(*ldlt);
}

void ShortVectorEnumerator::for_each_within(
    Integer bound, const std::function<void(const DivisorClass&)>& visit) const {
  if (bound < 0) return;
  const Eigen::Index n = form_.rows();
  std::vector<Integer> y(static_cast<std::size_t>(n), 0);
  DivisorClass x(n);

  // Depth-first over levels n-1 .. 0; `budget` is what the remaining levels may spend.
  std::function<void(Eigen::Index, const Rational&)> descend = [&](Eigen::Index i, const Rational& budget) {
    Rational center = 0;
    for (Eigen::Index j = i + 1; j < n; ++j) center -= gs_.lower(j, i) * y[static_cast<std::size_t>(j)];
    const Rational& di = gs_.diagonal[static_cast<std::size_t>(i)];
    const Rational room = budget / di;
    auto cost = [&](Integer v) -> Rational {
      const Rational off = Rational(v) - center;
      return off * off;
    };
    const Integer mid = nearest_integer(center);
    if (cost(mid) > room) return;
    Integer lo = mid, hi = mid;
    while (cost(lo - 1) <= room) --lo;
    while (cost(hi + 1) <= room) ++hi;
    for (Integer v = lo; v <= hi; ++v) {
      y[static_cast<std::size_t>(i)] = v;
      const Rational rest = budget - di * cost(v);
      if (i == 0) {
        for (Eigen::Index r = 0; r < n; ++r) {
          Integer s = 0;
          for (Eigen::Index c = 0; c < n; ++c) s += transform_(r, c) * y[static_cast<std::size_t>(c)];
          x(r) = s;
        }
        visit(x);
      } else {
        descend(i - 1, rest);
      }
    }
    y[static_cast<std::size_t>(i)] = 0;
  };
  descend(n - 1, Rational(bound));
}

ClassList ShortVectorEnumerator::with_degree_and_square(Integer degree, Integer square) const {
  ClassList out;
  const Integer bound = 2 * degree * degree - p_square_ * square;
  for_each_within(bound, [&](const DivisorClass& x) {
    if (dot(polarization_row_, x) == degree && dot(gram_ * x, x) == square) out.push_back(x);
  });
  sort_lex(out);
  return out;
}

ClassList ShortVectorEnumerator::with_degree_min_square(Integer degree, Integer min_square) const {
  ClassList out;
  const Integer bound = 2 * degree * degree - p_square_ * min_square;
  for_each_within(bound, [&](const DivisorClass& x) {
    if (dot(polarization_row_, x) == degree && dot(gram_ * x, x) >= min_square) out.push_back(x);
  });
  sort_lex(out);
  return out;
}

namespace detail {

std::shared_ptr<const ShortVectorEnumerator> enumerator_for(const Model& m, const DivisorClass& p) {
  auto& cache = m.cache();
  std::vector<Integer> key(p.data(), p.data() + p.size());
  {
    std::lock_guard<std::mutex> lock(cache.mutex);
    auto it = cache.enumerators.find(key);
    if (it != cache.enumerators.end()) return it->second;
  }
  auto made = std::make_shared<const ShortVectorEnumerator>(m.gram(), p);
  std::lock_guard<std::mutex> lock(cache.mutex);
  return cache.enumerators.emplace(std::move(key), std::move(made)).first->second;
}

}  // namespace detail

ClassList classes_with(const Model& m, DegreeSquareQuery q) {
  return detail::enumerator_for(m, m.polarization())->with_degree_and_square(q.degree, q.square);
}

ClassList classes_with_against(const Model& m, const DivisorClass& p, DegreeSquareQuery q) {
  if (p.size() != m.rank()) throw ContractError("polarizing class has wrong length");
  return detail::enumerator_for(m, p)->with_degree_and_square(q.degree, q.square);
}

ClassList irreducible_roots(const Model& m, Integer max_degree) {
  auto& cache = m.cache();
  {
    std::lock_guard<std::mutex> lock(cache.mutex);
    if (cache.roots_complete_to >= max_degree) {
      ClassList out;
      for (const auto& r : cache.roots)
        if (ample_degree(m, r) <= max_degree) out.push_back(r);
      return out;
    }
  }
  const auto en = detail::enumerator_for(m, m.ample());
  const Integer aa = en->polarization_square();
  std::vector<ClassList> by_degree(static_cast<std::size_t>(max_degree) + 1);
  en->for_each_within(2 * max_degree * max_degree + 2 * aa, [&](const DivisorClass& x) {
    const Integer k = ample_degree(m, x);
    if (k >= 1 && k <= max_degree && square(m, x) == -2) by_degree[static_cast<std::size_t>(k)].push_back(x);
  });
  ClassList roots;
  for (Integer k = 1; k <= max_degree; ++k) {
    auto& layer = by_degree[static_cast<std::size_t>(k)];
    sort_lex(layer);
    const std::size_t lower_end = roots.size();
    for (const auto& g : layer) {
      bool irreducible = true;
      for (std::size_t i = 0; i < lower_end && irreducible; ++i)
        if (pair(m, g, roots[i]) < 0) irreducible = false;
      if (irreducible) roots.push_back(g);
    }
  }
  std::lock_guard<std::mutex> lock(cache.mutex);
  if (cache.roots_complete_to < max_degree) {
    cache.roots = roots;
    cache.roots_complete_to = max_degree;
  }
  return roots;
}

bool pairs_nonnegatively_with_roots(const Model& m, const DivisorClass& d, Integer max_degree) {
  if (max_degree < 1) return true;
  for (const auto& r : irreducible_roots(m, max_degree))
    if (pair(m, d, r) < 0) return false;
  return true;
}

OracleTable OracleTable::extended_to(const Model& m, Integer degree) const {
  OracleTable out = *this;
  if (out.layers_.empty()) {
    auto zero = std::make_shared<Layer>();
    zero->effective.push_back(zero_class(m));
    zero->lookup.insert(zero_class(m));
    out.layers_.push_back(std::move(zero));
  }
  if (degree <= out.depth()) return out;
  const auto en = detail::enumerator_for(m, m.ample());
  for (Integer k = out.depth() + 1; k <= degree; ++k) {
    auto layer = std::make_shared<Layer>();
    const ClassList gens = en->with_degree_min_square(k, -2);
    std::unordered_set<DivisorClass, ClassHash, ClassEqual> decomposable;
    for (Integer j = 1; j < k; ++j) {
      const Layer& low = *out.layers_[static_cast<std::size_t>(j)];
      const Layer& high = *out.layers_[static_cast<std::size_t>(k - j)];
      for (const auto& a : low.indecomposable)
        for (const auto& b : high.effective) decomposable.insert(a + b);
    }
    for (const auto& g : gens)
      if (!decomposable.count(g)) layer->indecomposable.push_back(g);
    layer->lookup = std::move(decomposable);
    for (const auto& g : gens) layer->lookup.insert(g);
    layer->effective.assign(layer->lookup.begin(), layer->lookup.end());
    sort_lex(layer->effective);
    for (const auto& e : layer->effective)
      check_internal(square(m, e) >= -2 * k * k, "effective class below the square bound in oracle layer");
    out.layers_.push_back(std::move(layer));
  }
  return out;
}

bool OracleTable::contains(const DivisorClass& d, Integer degree) const {
  if (degree < 0 || degree > depth()) throw ContractError("oracle table too shallow for query");
  return layers_[static_cast<std::size_t>(degree)]->lookup.count(d) > 0;
}

OracleResult effective_oracle(const Model& m, const DivisorClass& d, OracleTable table) {
  if (d.isZero()) return {true, std::move(table)};
  const Integer k = ample_degree(m, d);
  if (k <= 0) return {false, std::move(table)};
  OracleTable grown = table.extended_to(m, k);
  const bool eff = grown.contains(d, k);
  return {eff, std::move(grown)};
}

bool effective_oracle(const Model& m, const DivisorClass& d) {
  if (d.isZero()) return true;
  const Integer k = ample_degree(m, d);
  if (k <= 0) return false;
  auto& cache = m.cache();
  OracleTable snapshot;
  {
    std::lock_guard<std::mutex> lock(cache.mutex);
    snapshot = cache.oracle;
  }
  if (snapshot.depth() < k) {
    snapshot = snapshot.extended_to(m, k);
    std::lock_guard<std::mutex> lock(cache.mutex);
    if (cache.oracle.depth() < snapshot.depth()) cache.oracle = snapshot;
  }
  return snapshot.contains(d, k);
}

ClassList irreducible_classes(const Model& m, Integer max_degree) {
  if (max_degree < 1) throw ContractError("max_degree must be at least 1");
  // Layers are indexed by the ample class; for ordinary models that is H.
  ClassList out;
  Integer depth = max_degree;
  if (!m.polarization_is_degree_class()) {
    // A class of H-degree <= max_degree may have larger A-degree; collect by H.
    throw ContractError("irreducible_classes needs an ample polarization");
  }
  OracleTable t = OracleTable{}.extended_to(m, depth);
  for (Integer k = 1; k <= depth; ++k) {
    const auto& layer = t.layer(k);
    out.insert(out.end(), layer.indecomposable.begin(), layer.indecomposable.end());
  }
  sort_lex(out);
  return out;
}

ClassList elliptic_pencils_against(const Model& m, const DivisorClass& p, Integer degree) {
  ClassList out;
  for (const auto& e : classes_with_against(m, p, {degree, 0})) {
    if (!is_primitive(e)) continue;
    const Integer a = ample_degree(m, e);
    if (a <= 0) continue;
    if (pairs_nonnegatively_with_roots(m, e, a)) out.push_back(e);
  }
  return out;
}

ClassList elliptic_pencils(const Model& m, Integer degree) {
  if (degree < 1) throw ContractError("pencil degree must be positive");
  return elliptic_pencils_against(m, m.polarization(), degree);
}

std::vector<std::pair<DivisorClass, DivisorClass>> nonconnected_decompositions(
    const Model& m, const DivisorClass& d, Integer max_parts_degree) {
  if (!effective_oracle(m, d)) throw ContractError("nonconnected_decompositions needs an effective class");
  std::vector<std::pair<DivisorClass, DivisorClass>> out;
  const Integer total = ample_degree(m, d);
  if (total <= 1) return out;
  OracleTable t = OracleTable{}.extended_to(m, total);
  for (Integer j = 1; j <= std::min(max_parts_degree, total / 2); ++j) {
    for (const auto& a1 : t.layer(j).effective) {
      DivisorClass a2 = d - a1;
      if (!t.contains(a2, total - j)) continue;
      if (pair(m, a1, a2) > 0) continue;
      if (LexLess{}(a2, a1)) {
        if (j == total - j) continue;  // reached from the other side
        out.emplace_back(a2, a1);
      } else {
        out.emplace_back(a1, a2);
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (!ClassEqual{}(x.first, y.first)) return LexLess{}(x.first, y.first);
    return LexLess{}(x.second, y.second);
  });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const auto& x, const auto& y) {
                          return ClassEqual{}(x.first, y.first) && ClassEqual{}(x.second, y.second);
                        }),
            out.end());
  return out;
}

}  // namespace k3
