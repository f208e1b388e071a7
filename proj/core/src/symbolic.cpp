#include "vnum/symbolic.hpp"

#include <algorithm>

#include "vnum/errors.hpp"

namespace vnum {

std::string to_string(SymbolicPowerVariant v) { return v == SymbolicPowerVariant::Min ? "min" : "ass"; }

namespace {

void require_square_free(const MonomialIdeal& I, const char* what) {
  if (!I.is_proper_nonzero()) throw DomainError(std::string(what) + ": needs a proper nonzero ideal");
  if (!I.is_square_free()) throw UnsupportedInputError(std::string(what) + ": only square-free ideals are supported");
}

Monomial outside_product(std::size_t nvars, const PrimeSupport& p) {
  std::vector<Exponent> e(nvars, 1);
  for (auto v : p.vars) e[v] = 0;
  return Monomial(std::move(e));
}

}  // namespace

MonomialIdeal symbolic_power(const MonomialIdeal& I, std::int64_t k, SymbolicPowerVariant variant) {
  if (k < 1) throw DomainError("symbolic power: k must be at least 1");
  if (!I.is_proper_nonzero()) throw DomainError("symbolic power: needs a proper nonzero ideal");
  auto primes = variant == SymbolicPowerVariant::Min ? minimal_primes(I) : associated_primes(I);
  MonomialIdeal Ik = power(I, k);
  std::vector<MonomialIdeal> local;
  local.reserve(primes.size());
  for (const auto& p : primes) local.push_back(saturate(Ik, outside_product(I.nvars(), p)));
  return intersect(local);
}

MonomialIdeal symbolic_power_square_free(const MonomialIdeal& I, std::int64_t k) {
  if (k < 1) throw DomainError("symbolic power: k must be at least 1");
  require_square_free(I, "symbolic power");
  std::vector<MonomialIdeal> parts;
  for (const auto& p : minimal_primes(I)) parts.push_back(power(p.ideal(I.nvars()), k));
  return intersect(parts);
}

bool has_symbolic_strong_persistence_upto(const MonomialIdeal& I, std::int64_t K, SymbolicPowerVariant variant) {
  if (K < 2) throw DomainError("symbolic strong persistence: K must be at least 2");
  MonomialIdeal first = symbolic_power(I, 1, variant);
  MonomialIdeal prev = first;
  for (std::int64_t k = 2; k <= K; ++k) {
    MonomialIdeal cur = symbolic_power(I, k, variant);
    if (colon(cur, first) != prev) return false;
    prev = std::move(cur);
  }
  return true;
}

bool has_strong_persistence_upto(const MonomialIdeal& I, std::int64_t K) {
  if (K < 2) throw DomainError("strong persistence: K must be at least 2");
  MonomialIdeal prev = I;
  for (std::int64_t k = 1; k < K; ++k) {
    MonomialIdeal next = product(prev, I);
    if (colon(next, I) != prev) return false;
    prev = std::move(next);
  }
  return true;
}

RationalPolyhedron symbolic_polyhedron(const MonomialIdeal& I) {
  require_square_free(I, "symbolic polyhedron");
  RationalPolyhedron P(I.nvars());
  for (const auto& p : minimal_primes(I)) {
    RationalVector a(I.nvars(), 0);
    for (auto v : p.vars) a[v] = 1;
    P.add_constraint({std::move(a), 1});
  }
  return P;
}

Rational waldschmidt_constant(const MonomialIdeal& I) {
  auto P = symbolic_polyhedron(I);
  auto res = lp_minimize(P, RationalVector(I.nvars(), 1));
  if (res.status != LpStatus::Optimal) throw DomainError("waldschmidt constant: LP did not reach an optimum");
  return res.value;
}

Rational delta_invariant(const MonomialIdeal& I, std::size_t dimension_cap) {
  auto P = symbolic_polyhedron(I);
  auto verts = enumerate_vertices(P, dimension_cap);
  if (verts.empty()) throw DomainError("delta invariant: symbolic polyhedron has no vertices");
  Rational best = coordinate_sum(verts.front());
  for (const auto& v : verts) best = std::max(best, coordinate_sum(v));
  return best;
}

}  // namespace vnum
