#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "vnum/polyhedron.hpp"

namespace vnum {

/// seq(k) = slope*k + intercepts[k mod period] for every k >= k_min in the window.
struct QuasiLinearFit {
  Rational slope;
  std::size_t period = 1;
  std::vector<Rational> intercepts;
  std::int64_t k_min = 1;
};

inline constexpr std::size_t kMaxFitPeriod = 3;

/// `seq[i]` is the value at k = i + 1. Tries periods 1..3 and returns the
/// smallest that fits exactly, or nothing. Each residue class needs at least
/// two points past k_min, and the window must hold k_min + 4 values.
std::optional<QuasiLinearFit> fit_quasilinear(const std::vector<std::int64_t>& seq, std::int64_t k_min);

}  // namespace vnum
