#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "vnum/homology.hpp"
#include "vnum/ideal.hpp"

namespace vnum {

/// Simple graph on vertices 0..n-1. Edges are stored as sorted pairs (u < v).
class Graph {
 public:
  Graph() = default;
  /// Throws StructuralError on loops or out-of-range endpoints; duplicates are merged.
  Graph(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> edges);

  std::size_t vertex_count() const { return n_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }
  VertexSet neighbors(std::size_t v) const { return adj_[v]; }
  bool adjacent(std::size_t u, std::size_t v) const { return (adj_[u] >> v & 1U) != 0; }
  bool has_isolated_vertex() const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  std::size_t n_ = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  std::vector<VertexSet> adj_;
};

/// Simple hypergraph: edges are pairwise inclusion-incomparable vertex sets.
class Hypergraph {
 public:
  Hypergraph() = default;
  /// Throws StructuralError if one edge contains another or an edge is empty.
  Hypergraph(std::size_t n, std::vector<VertexSet> edges);
  static Hypergraph from_graph(const Graph& g);
  /// The generating hypergraph of a square-free ideal.
  static Hypergraph from_ideal(const MonomialIdeal& I);

  std::size_t vertex_count() const { return n_; }
  const std::vector<VertexSet>& edges() const { return edges_; }

 private:
  std::size_t n_ = 0;
  std::vector<VertexSet> edges_;
};

MonomialIdeal edge_ideal(const Hypergraph& H);
MonomialIdeal edge_ideal(const Graph& G);

/// Inclusion-minimal vertex covers, sorted.
std::vector<VertexSet> minimal_vertex_covers(const Graph& G);
std::vector<VertexSet> minimal_vertex_covers(const Hypergraph& H);
std::vector<VertexSet> maximal_independent_sets(const Graph& G);

/// Generated by the minimal cover monomials.
MonomialIdeal cover_ideal(const Graph& G);
/// Same ideal as the intersection of (x_i, x_j) over the edges.
MonomialIdeal cover_ideal_by_intersection(const Graph& G);

bool is_very_well_covered(const Graph& G);
bool is_cm_very_well_covered(const Graph& G);

/// Vertex (i, p) of G_k, 1 <= p <= k, has index i*k + (p-1); `names` records
/// (i, p) per index.
struct FakhariGraph {
  Graph graph;
  std::vector<std::pair<std::size_t, std::size_t>> names;
};
FakhariGraph fakhari_gk(const Graph& G, std::int64_t k);

/// polarize(J(G)^(k)) equals J(G_k) after renaming x_{i,t} to vertex (i, t).
bool cover_polarization_check(const Graph& G, std::int64_t k);

std::size_t induced_matching_number(const Hypergraph& H);
/// Max of sum(|E_i| - 1) over induced matchings that use an edge of maximum size.
std::size_t best_induced_matching_weight(const Hypergraph& H);

bool odd_cycle_condition(const Graph& G);
bool is_bipartite(const Graph& G);
bool is_chordal(const Graph& G);
bool is_polymatroidal(const MonomialIdeal& I);

// Named families. Vertices are numbered along the cycle/path.
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph path_graph(std::size_t n);
/// Adds a pendant vertex n+i to every base vertex i.
Graph whisker_graph(const Graph& base);

/// `graph <n>` header, then one `u v` edge per line with 1-based indices.
Graph parse_graph(std::istream& in);
Graph parse_graph(const std::string& text);
std::string format_graph(const Graph& G);

}  // namespace vnum
