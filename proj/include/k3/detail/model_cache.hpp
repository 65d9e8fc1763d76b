#pragma once

// Lazily grown, mutex-guarded caches hanging off a Model. Everything stored
// here is a deterministic function of the model, so sharing it between
// threads never changes observable results.

#include "k3/enumeration.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <vector>

namespace k3::detail {

struct ModelCache {
  std::mutex mutex;

  // Enumerators keyed by the coordinates of the polarizing class.
  std::map<std::vector<Integer>, std::shared_ptr<const ShortVectorEnumerator>> enumerators;

  // Irreducible roots sorted by (ample degree, lex), complete up to roots_complete_to.
  Integer roots_complete_to = 0;
  ClassList roots;

  OracleTable oracle;
};

std::shared_ptr<const ShortVectorEnumerator> enumerator_for(const Model& m, const DivisorClass& p);

}  // namespace k3::detail
