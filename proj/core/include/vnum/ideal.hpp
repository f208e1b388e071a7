#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "vnum/monomial.hpp"

namespace vnum {

/// A monomial ideal stored by its minimal generating set in ascending
/// lexicographic order of exponent tuples.
///
/// The zero ideal has no generators; the unit ideal has the single generator 1.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  /// Minimalizes `gens`; throws StructuralError if any generator has the wrong length.
  MonomialIdeal(std::size_t nvars, std::vector<Monomial> gens);

  static MonomialIdeal zero(std::size_t nvars) { return MonomialIdeal(nvars, {}); }
  static MonomialIdeal unit(std::size_t nvars) { return MonomialIdeal(nvars, {Monomial::one(nvars)}); }
  /// The prime ideal generated by the listed variables.
  static MonomialIdeal prime(std::size_t nvars, const std::vector<std::size_t>& vars);
  static MonomialIdeal maximal(std::size_t nvars);

  std::size_t nvars() const { return nvars_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_one(); }
  bool is_proper_nonzero() const { return !is_zero() && !is_unit(); }
  bool is_square_free() const;
  /// True when every generator is a single variable.
  bool is_prime() const;
  /// lcm of the minimal generators (1 for the zero ideal).
  Monomial generator_lcm() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  struct Minimal {};
  MonomialIdeal(Minimal, std::size_t nvars, std::vector<Monomial> gens)
      : nvars_(nvars), gens_(std::move(gens)) {}
  friend MonomialIdeal minimalize(std::size_t nvars, std::vector<Monomial> gens);

  std::size_t nvars_ = 0;
  std::vector<Monomial> gens_;
};

/// Drops generators divisible by another generator and sorts the rest.
MonomialIdeal minimalize(std::size_t nvars, std::vector<Monomial> gens);
/// Variant that infers the ring from the generators; throws StructuralError on
/// mixed sizes or an empty list.
MonomialIdeal minimalize(std::vector<Monomial> gens);

std::uint64_t alpha(const MonomialIdeal& I);
/// Largest degree of a minimal generator; both w(I) and d(I).
std::uint64_t max_gen_degree(const MonomialIdeal& I);
bool is_equigenerated(const MonomialIdeal& I);

bool contains_monomial(const MonomialIdeal& I, const Monomial& m);
/// I ⊆ J.
bool is_subset(const MonomialIdeal& I, const MonomialIdeal& J);

MonomialIdeal colon(const MonomialIdeal& I, const Monomial& f);
/// (I : J) as the intersection of (I : g) over the generators g of J.
MonomialIdeal colon(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal intersect(std::span<const MonomialIdeal> ideals);
MonomialIdeal sum(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J);
/// I^k; k must be non-negative, I^0 is the unit ideal.
MonomialIdeal power(const MonomialIdeal& I, std::int64_t k);
/// (I : f^infinity).
MonomialIdeal saturate(const MonomialIdeal& I, const Monomial& f);

/// Text format: `ring <n>` header, one `*`-separated generator per line,
/// blank lines and `#` comments ignored.
MonomialIdeal parse_ideal(std::istream& in);
MonomialIdeal parse_ideal(const std::string& text);
/// Parses a single monomial token such as `x1^2*x3` (or `1`).
Monomial parse_monomial(const std::string& token, std::size_t nvars, int line = 0);
std::string format_ideal(const MonomialIdeal& I);
/// Compact one-line rendering `(x1*x2, x3)`.
std::string to_string(const MonomialIdeal& I);

}  // namespace vnum
