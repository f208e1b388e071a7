#include "vnum/vnumber.hpp"

#include <optional>

#include "vnum/errors.hpp"
#include "vnum/homology.hpp"
#include "vnum/symbolic.hpp"

namespace vnum {

std::optional<PrimeSupport> colon_prime(const MonomialIdeal& I, const Monomial& f) {
  const std::size_t n = I.nvars();
  std::vector<char> linear(n, 0);
  bool any = false;
  for (const auto& g : I.generators()) {
    std::uint64_t deg = 0;
    std::size_t var = 0;
    for (std::size_t i = 0; i < n && deg < 2; ++i)
      if (g[i] > f[i]) {
        deg += g[i] - f[i];
        var = i;
      }
    if (deg == 0) return std::nullopt;  // f ∈ I
    if (deg == 1) {
      linear[var] = 1;
      any = true;
    }
  }
  if (!any) return std::nullopt;
  for (const auto& g : I.generators()) {
    bool meets = false;
    for (std::size_t i = 0; i < n && !meets; ++i) meets = linear[i] && g[i] > f[i];
    if (!meets) return std::nullopt;
  }
  PrimeSupport p;
  for (std::size_t i = 0; i < n; ++i)
    if (linear[i]) p.vars.push_back(i);
  return p;
}

namespace {

// Ordering on candidate witnesses: lower degree first, then the larger exponent tuple.
bool better_witness(std::uint64_t deg, const Monomial& f, std::uint64_t best_deg, const Monomial& best) {
  return deg != best_deg ? deg < best_deg : best < f;
}

}  // namespace

VReport v_number(const MonomialIdeal& I, std::uint64_t budget) {
  if (!I.is_proper_nonzero()) throw DomainError("v-number: needs a proper nonzero ideal");
  const std::size_t n = I.nvars();
  const Monomial top = I.generator_lcm();
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < n; ++i) {
    count *= static_cast<std::uint64_t>(top[i]) + 1;
    if (count > budget) throw ResourceError("v-number: divisor scan exceeds the witness budget");
  }

  VReport report;
  std::vector<Exponent> e(n, 0);
  for (std::uint64_t step = 0; step < count; ++step) {
    Monomial f(e);
    if (auto p = colon_prime(I, f)) {
      auto deg = f.degree();
      auto it = report.local.find(*p);
      if (it == report.local.end()) {
        report.local.emplace(*p, LocalV{deg, f});
      } else if (better_witness(deg, f, it->second.v, it->second.witness)) {
        it->second = LocalV{deg, f};
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (e[i] < top[i]) {
        ++e[i];
        break;
      }
      e[i] = 0;
    }
  }
  if (report.local.empty()) throw std::logic_error("v-number: no associated prime found");
  bool first = true;
  for (const auto& [p, lv] : report.local) {
    if (first || better_witness(lv.v, lv.witness, report.v, report.witness)) {
      report.v = lv.v;
      report.witness = lv.witness;
      report.prime = p;
      first = false;
    }
  }
  return report;
}

bool v_polarization_check(const MonomialIdeal& I) {
  return v_number(I).v == v_number(polarize(I).ideal).v;
}

std::string to_string(PowerType p) {
  switch (p) {
    case PowerType::Ordinary:
      return "ordinary";
    case PowerType::SymbolicMin:
      return "symbolic-min";
    case PowerType::SymbolicAss:
      return "symbolic-ass";
  }
  return "?";
}

PowerType parse_power_type(const std::string& s) {
  if (s == "ordinary") return PowerType::Ordinary;
  if (s == "symbolic-min" || s == "symbolic") return PowerType::SymbolicMin;
  if (s == "symbolic-ass") return PowerType::SymbolicAss;
  throw std::invalid_argument("unknown power type '" + s + "'");
}

MonomialIdeal filtration_member(const MonomialIdeal& I, std::int64_t k, PowerType type) {
  switch (type) {
    case PowerType::Ordinary:
      return power(I, k);
    case PowerType::SymbolicMin:
      return symbolic_power(I, k, SymbolicPowerVariant::Min);
    case PowerType::SymbolicAss:
      return symbolic_power(I, k, SymbolicPowerVariant::Ass);
  }
  throw std::logic_error("unreachable power type");
}

std::vector<std::uint64_t> v_sequence(const MonomialIdeal& I, std::int64_t K, PowerType type, std::uint64_t budget) {
  if (K < 1) throw DomainError("v-sequence: K must be at least 1");
  std::vector<std::uint64_t> out;
  for (std::int64_t k = 1; k <= K; ++k) out.push_back(v_number(filtration_member(I, k, type), budget).v);
  return out;
}

}  // namespace vnum
