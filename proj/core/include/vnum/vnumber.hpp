#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vnum/decomposition.hpp"
#include "vnum/ideal.hpp"

namespace vnum {

struct LocalV {
  std::uint64_t v = 0;
  Monomial witness;
};

/// v(I) together with v_p(I) and a minimal-degree witness for every associated prime.
struct VReport {
  std::uint64_t v = 0;
  Monomial witness;
  PrimeSupport prime;
  std::map<PrimeSupport, LocalV> local;
};

inline constexpr std::uint64_t kDefaultWitnessBudget = std::uint64_t{1} << 24;

/// If (I : f) is generated by variables, returns that prime; otherwise nothing.
std::optional<PrimeSupport> colon_prime(const MonomialIdeal& I, const Monomial& f);

/// Scans the monomial divisors of lcm(I) in increasing degree. Ties among
/// witnesses of equal degree go to the one that reads first as a word
/// (x1 < x2 < ...), i.e. the lexicographically largest exponent tuple.
/// Throws DomainError for the zero or unit ideal and ResourceError when the
/// divisor count exceeds `budget`.
VReport v_number(const MonomialIdeal& I, std::uint64_t budget = kDefaultWitnessBudget);

/// v(I^P) == v(I).
bool v_polarization_check(const MonomialIdeal& I);

enum class PowerType { Ordinary, SymbolicMin, SymbolicAss };

std::string to_string(PowerType p);
/// Accepts `ordinary`, `symbolic-min`, `symbolic-ass`.
PowerType parse_power_type(const std::string& s);

/// I^k or I^(k) according to `type`.
MonomialIdeal filtration_member(const MonomialIdeal& I, std::int64_t k, PowerType type);

/// [v(I_1), ..., v(I_K)] along the chosen filtration.
std::vector<std::uint64_t> v_sequence(const MonomialIdeal& I, std::int64_t K, PowerType type,
                                      std::uint64_t budget = kDefaultWitnessBudget);

}  // namespace vnum
