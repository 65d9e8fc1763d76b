#pragma once

// Self-consistency checks run by `k3tool verify`.

#include "k3/model_io.hpp"

#include <string>
#include <vector>

namespace k3 {

struct VerifyCheck {
  std::string name;
  bool passed = true;
  bool informational = false;  // printed, never fails the run
  std::string detail;          // first counterexample, or a summary
};

struct VerifyOptions {
  Integer max_degree = 20;  // |D.A| bound for the sampled classes
  Integer box_radius = 0;   // 0: chosen from the rank
};

std::vector<VerifyCheck> run_verify(const ModelFile& f, const VerifyOptions& opts = {});

}  // namespace k3
