#pragma once

#include <vector>

#include "mfmut/rational.hpp"

namespace mfmut {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rat objective;
  RatVec x;
};

/// Exact two-phase simplex with Bland's rule:
/// minimize c·x subject to A·x = b, x ≥ 0.
LpResult lp_minimize(const RatMatrix& a, const RatVec& b, const RatVec& c);

/// Feasibility only (phase I).
bool lp_feasible(const RatMatrix& a, const RatVec& b);

}  // namespace mfmut
