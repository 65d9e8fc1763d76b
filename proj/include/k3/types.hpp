#pragma once

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace k3 {

using Integer = std::int64_t;
using Rational = boost::multiprecision::cpp_rational;

using DivisorClass = Eigen::Matrix<Integer, Eigen::Dynamic, 1>;
using GramMatrix = Eigen::Matrix<Integer, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Raised when an operation is called outside its documented domain.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Raised when an internal consistency assertion fails (a bug, not bad input).
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline void check_internal(bool condition, const std::string& what) {
  if (!condition) throw InternalError(what);
}

/// Strict lexicographic order on coordinates; the engine's canonical output order.
struct LexLess {
  bool operator()(const DivisorClass& a, const DivisorClass& b) const {
    return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(),
                                        b.data() + b.size());
  }
};

struct ClassHash {
  std::size_t operator()(const DivisorClass& d) const noexcept {
    std::size_t h = static_cast<std::size_t>(d.size());
    for (Eigen::Index i = 0; i < d.size(); ++i) {
      h ^= std::hash<Integer>{}(d(i)) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

struct ClassEqual {
  bool operator()(const DivisorClass& a, const DivisorClass& b) const {
    return a.size() == b.size() && a == b;
  }
};

using ClassList = std::vector<DivisorClass>;

inline void sort_lex(ClassList& classes) { std::sort(classes.begin(), classes.end(), LexLess{}); }

inline DivisorClass make_class(std::initializer_list<Integer> coords) {
  DivisorClass d(static_cast<Eigen::Index>(coords.size()));
  Eigen::Index i = 0;
  for (Integer c : coords) d(i++) = c;
  return d;
}

/// gcd of the coordinates (0 for the zero class).
inline Integer content(const DivisorClass& d) {
  Integer g = 0;
  for (Eigen::Index i = 0; i < d.size(); ++i) g = std::gcd(g, d(i) < 0 ? -d(i) : d(i));
  return g;
}

inline bool is_primitive(const DivisorClass& d) { return content(d) == 1; }

}  // namespace k3
