#include "vnum/decomposition.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "vnum/errors.hpp"

namespace vnum {

bool PrimeSupport::contains(const PrimeSupport& other) const {
  return std::includes(vars.begin(), vars.end(), other.vars.begin(), other.vars.end());
}

std::string to_string(const PrimeSupport& p) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < p.vars.size(); ++i) os << (i ? "," : "") << 'x' << p.vars[i] + 1;
  os << ')';
  return os.str();
}

MonomialIdeal IrreducibleComponent::ideal(std::size_t nvars) const {
  std::vector<Monomial> gens;
  for (auto [var, e] : entries) {
    auto m = Monomial::variable(nvars, var).pow(e);
    gens.push_back(m);
  }
  return MonomialIdeal(nvars, std::move(gens));
}

PrimeSupport IrreducibleComponent::radical() const {
  PrimeSupport p;
  for (auto [var, e] : entries) p.vars.push_back(var);
  return p;
}

bool IrreducibleComponent::is_contained_in(const IrreducibleComponent& other) const {
  // x_i^a ∈ (x_j^{b_j}) iff i is in other's support with b_i <= a.
  for (auto [var, e] : entries) {
    auto it = other.entries.find(var);
    if (it == other.entries.end() || it->second > e) return false;
  }
  return true;
}

namespace {

using Components = std::set<IrreducibleComponent>;

void split(const MonomialIdeal& I, Components& out, std::set<std::vector<Monomial>>& seen) {
  if (!seen.insert(I.generators()).second) return;
  const auto& gens = I.generators();
  auto pivot = std::find_if(gens.begin(), gens.end(), [](const Monomial& g) { return !g.is_pure_power(); });
  if (pivot == gens.end()) {
    IrreducibleComponent c;
    for (const auto& g : gens) {
      auto s = g.support();
      c.entries[s.front()] = g[s.front()];
    }
    out.insert(std::move(c));
    return;
  }
  const Monomial& g = *pivot;
  std::size_t var = g.support().front();
  Monomial pure = Monomial::variable(I.nvars(), var).pow(g[var]);
  Monomial rest = divide(g, pure);
  split(sum(I, MonomialIdeal(I.nvars(), {pure})), out, seen);
  split(sum(I, MonomialIdeal(I.nvars(), {rest})), out, seen);
}

}  // namespace

std::vector<IrreducibleComponent> irreducible_decomposition(const MonomialIdeal& I) {
  if (!I.is_proper_nonzero()) throw DomainError("irreducible decomposition needs a proper nonzero ideal");
  Components found;
  std::set<std::vector<Monomial>> seen;
  split(I, found, seen);
  std::vector<IrreducibleComponent> all(found.begin(), found.end());
  std::vector<IrreducibleComponent> kept;
  for (std::size_t i = 0; i < all.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < all.size() && !redundant; ++j)
      redundant = i != j && all[j].is_contained_in(all[i]);
    if (!redundant) kept.push_back(all[i]);
  }
  return kept;
}

std::vector<PrimeSupport> associated_primes(const MonomialIdeal& I) {
  std::set<PrimeSupport> primes;
  for (const auto& c : irreducible_decomposition(I)) primes.insert(c.radical());
  return {primes.begin(), primes.end()};
}

std::vector<PrimeSupport> minimal_elements(std::vector<PrimeSupport> primes) {
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  std::vector<PrimeSupport> out;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < primes.size() && minimal; ++j)
      minimal = i == j || !primes[i].contains(primes[j]);
    if (minimal) out.push_back(primes[i]);
  }
  return out;
}

std::vector<PrimeSupport> minimal_primes(const MonomialIdeal& I) {
  return minimal_elements(associated_primes(I));
}

std::uint64_t c_constant(const MonomialIdeal& I) {
  std::uint64_t c = 0;
  for (const auto& p : minimal_primes(I)) c = std::max(c, alpha(p.ideal(I.nvars())));
  return c;
}

}  // namespace vnum
