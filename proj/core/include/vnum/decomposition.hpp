#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "vnum/ideal.hpp"

namespace vnum {

/// The prime ideal generated by a set of variables, stored as sorted indices.
struct PrimeSupport {
  std::vector<std::size_t> vars;

  MonomialIdeal ideal(std::size_t nvars) const { return MonomialIdeal::prime(nvars, vars); }
  /// Height of the prime; alpha is always 1.
  std::size_t size() const { return vars.size(); }
  bool contains(const PrimeSupport& other) const;

  friend auto operator<=>(const PrimeSupport&, const PrimeSupport&) = default;
  friend bool operator==(const PrimeSupport&, const PrimeSupport&) = default;
};

std::string to_string(const PrimeSupport& p);

/// An irreducible monomial ideal (x_i^{a_i} : i in support), a_i >= 1.
struct IrreducibleComponent {
  std::map<std::size_t, Exponent> entries;

  MonomialIdeal ideal(std::size_t nvars) const;
  PrimeSupport radical() const;
  /// Ideal containment: this ⊆ other.
  bool is_contained_in(const IrreducibleComponent& other) const;

  friend auto operator<=>(const IrreducibleComponent&, const IrreducibleComponent&) = default;
  friend bool operator==(const IrreducibleComponent&, const IrreducibleComponent&) = default;
};

/// Irredundant irreducible decomposition by binary splitting, sorted.
/// Throws DomainError for the zero or unit ideal.
std::vector<IrreducibleComponent> irreducible_decomposition(const MonomialIdeal& I);

/// Radicals of the irredundant irreducible components.
std::vector<PrimeSupport> associated_primes(const MonomialIdeal& I);
std::vector<PrimeSupport> minimal_primes(const MonomialIdeal& I);
/// max alpha(p) over Min(I); equal to 1 for every proper nonzero monomial ideal.
std::uint64_t c_constant(const MonomialIdeal& I);

/// Inclusion-minimal members of a prime list.
std::vector<PrimeSupport> minimal_elements(std::vector<PrimeSupport> primes);

}  // namespace vnum
