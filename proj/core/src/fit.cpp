#include "vnum/fit.hpp"

namespace vnum {

std::optional<QuasiLinearFit> fit_quasilinear(const std::vector<std::int64_t>& seq, std::int64_t k_min) {
  const auto len = static_cast<std::int64_t>(seq.size());
  if (k_min < 1 || len < k_min + 4) return std::nullopt;
  auto at = [&](std::int64_t k) { return Rational(static_cast<long>(seq[static_cast<std::size_t>(k - 1)])); };

  for (std::size_t d = 1; d <= kMaxFitPeriod; ++d) {
    const auto dd = static_cast<std::int64_t>(d);
    if (k_min + 2 * dd - 1 > len) break;  // some class would have a single point
    Rational slope = (at(k_min + dd) - at(k_min)) / Rational(static_cast<long>(dd));
    std::vector<Rational> intercepts(d);
    bool ok = true;
    for (std::int64_t k = k_min; k <= len && ok; ++k) {
      Rational b = at(k) - slope * Rational(static_cast<long>(k));
      auto r = static_cast<std::size_t>(k % dd);
      if (k < k_min + dd) {
        intercepts[r] = b;
      } else {
        ok = intercepts[r] == b;
      }
    }
    if (ok) return QuasiLinearFit{slope, d, std::move(intercepts), k_min};
  }
  return std::nullopt;
}

}  // namespace vnum
