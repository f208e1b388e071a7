#pragma once

#include <cstdint>
#include <string>

#include "vnum/decomposition.hpp"
#include "vnum/ideal.hpp"
#include "vnum/polyhedron.hpp"

namespace vnum {

/// Which prime set the localizations range over: minimal primes or all
/// associated primes of I.
enum class SymbolicPowerVariant { Min, Ass };

std::string to_string(SymbolicPowerVariant v);

/// I^(k): intersection over the chosen primes P of I^k R_P ∩ R, each realized as
/// the saturation of I^k by the product of the variables outside P.
MonomialIdeal symbolic_power(const MonomialIdeal& I, std::int64_t k,
                             SymbolicPowerVariant variant = SymbolicPowerVariant::Min);

/// For square-free I: intersection of P^k over the minimal primes. Independent
/// route used to cross-check symbolic_power.
MonomialIdeal symbolic_power_square_free(const MonomialIdeal& I, std::int64_t k);

/// (I^(k) : I^(1)) == I^(k-1) for 2 <= k <= K.
bool has_symbolic_strong_persistence_upto(const MonomialIdeal& I, std::int64_t K,
                                          SymbolicPowerVariant variant = SymbolicPowerVariant::Min);
/// (I^{k+1} : I) == I^k for 1 <= k < K.
bool has_strong_persistence_upto(const MonomialIdeal& I, std::int64_t K);

/// {y >= 0 : sum_{i in P} y_i >= 1 for every minimal prime P}; square-free I only.
RationalPolyhedron symbolic_polyhedron(const MonomialIdeal& I);

/// Minimum coordinate sum over the symbolic polyhedron, by exact simplex.
Rational waldschmidt_constant(const MonomialIdeal& I);
/// Maximum coordinate sum over the vertices of the symbolic polyhedron.
Rational delta_invariant(const MonomialIdeal& I, std::size_t dimension_cap = kDefaultVertexDimensionCap);

}  // namespace vnum
