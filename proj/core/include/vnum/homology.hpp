#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "vnum/ideal.hpp"

namespace vnum {

/// Vertex subsets are bit masks; complexes carry at most 64 vertices.
using VertexSet = std::uint64_t;

/// A simplicial complex given by its inclusion-maximal faces.
///
/// The void complex has no faces at all; the irrelevant complex has only the
/// empty face. They are distinct: H̃_{-1} of the irrelevant complex has rank 1,
/// the void complex has no homology.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  SimplicialComplex(std::size_t nverts, std::vector<VertexSet> facets);

  static SimplicialComplex void_complex(std::size_t nverts) { return SimplicialComplex(nverts, {}); }
  static SimplicialComplex irrelevant(std::size_t nverts) { return SimplicialComplex(nverts, {VertexSet{0}}); }
  static SimplicialComplex simplex(std::size_t nverts);

  std::size_t vertex_count() const { return nverts_; }
  const std::vector<VertexSet>& facets() const { return facets_; }
  bool is_void() const { return facets_.empty(); }
  /// -1 for the irrelevant complex, -2 for the void complex.
  int dimension() const;
  bool contains_face(VertexSet face) const;
  /// All faces, sorted by size then value.
  std::vector<VertexSet> faces() const;
  SimplicialComplex link(VertexSet face) const;
  SimplicialComplex restriction(VertexSet vertices) const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  std::size_t nverts_ = 0;
  std::vector<VertexSet> facets_;
};

/// Rank of H̃_d(C; Q). Out-of-range d gives 0.
std::int64_t reduced_homology_rank(const SimplicialComplex& C, int d);
/// Ranks of H̃_d for d = -1 .. dim C (index 0 holds d = -1). Empty for the void complex.
std::vector<std::int64_t> reduced_homology(const SimplicialComplex& C);
/// Same ranks, computed from an explicit face list (any order; must be closed under subsets).
std::vector<std::int64_t> reduced_homology_of_faces(std::vector<VertexSet> faces);

/// Rank over Q of an integer matrix given as sparse rows (column, value).
std::size_t integer_matrix_rank(const std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>>& rows);

/// β_{i,j}(R/I) keyed by (i, j).
using BettiTable = std::map<std::pair<int, int>, std::int64_t>;

inline constexpr std::size_t kDefaultHochsterVariableCap = 24;

/// A square-free ideal together with the origin of each of its variables:
/// variable v of the polarized ring is copy names[v].second (1-based) of the
/// original variable names[v].first.
struct Polarization {
  MonomialIdeal ideal;
  std::vector<std::pair<std::size_t, Exponent>> names;
};

/// Replaces x_j^a by x_{j,1}...x_{j,a}. Every original variable keeps at
/// least one copy, so square-free input maps to itself.
Polarization polarize(const MonomialIdeal& I);

/// Faces are the square-free monomials outside I. Throws UnsupportedInputError
/// unless I is square-free and proper.
SimplicialComplex stanley_reisner_complex(const MonomialIdeal& I);

/// Graded Betti numbers of R/I over a characteristic-0 field by Hochster's
/// formula. I must be square-free.
BettiTable betti_numbers(const MonomialIdeal& I, std::size_t variable_cap = kDefaultHochsterVariableCap);
int regularity_from_betti(const BettiTable& table);
/// reg(R/I); non-square-free input is polarized first.
int regularity(const MonomialIdeal& I, std::size_t variable_cap = kDefaultHochsterVariableCap);

/// Reisner's criterion over Q. I must be square-free.
bool is_cohen_macaulay(const MonomialIdeal& I);

}  // namespace vnum
