#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vnum/combinatorics.hpp"
#include "vnum/ideal.hpp"

namespace vnum {

inline constexpr std::size_t kMaxCorpusGraphVertices = 8;
inline constexpr std::size_t kMaxCorpusSquareFreeVariables = 6;

/// `All` also keeps the edgeless graph.
enum class GraphFilter { All, AnyWithEdge, NoIsolated, Connected };

/// Graphs on exactly n vertices (with at least one edge unless `All`), one per isomorphism
/// class, in a fixed deterministic order.
std::vector<Graph> graphs_on(std::size_t n, GraphFilter filter = GraphFilter::AnyWithEdge);
/// Concatenation of graphs_on(2..n_max).
std::vector<Graph> graphs_up_to(std::size_t n_max, GraphFilter filter = GraphFilter::NoIsolated);

bool is_connected(const Graph& G);

/// Lexicographically least adjacency code over all relabelings.
std::vector<VertexSet> canonical_form(const Graph& G);

/// Named families: cycle, complete, path, whisker (whiskered path P_n).
Graph named_graph(const std::string& family, std::size_t n);

/// Proper nonzero square-free ideals in m variables with at most `max_gens`
/// generators, one per class under permutation of the variables. With
/// `degree`, only generators of that degree are used.
std::vector<MonomialIdeal> square_free_ideals(std::size_t m, std::size_t max_gens,
                                              std::optional<std::size_t> degree = std::nullopt);

/// Number of nonempty sets of square-free monomials of the given degree in m
/// variables, before minimalization or symmetry reduction.
std::uint64_t square_free_candidate_count(std::size_t m, std::size_t degree);

/// Seeded random monomial ideals with 1..max_gens generators and exponents in
/// [0, max_exp], never the unit ideal. Deterministic for a fixed seed.
std::vector<MonomialIdeal> random_ideals(std::size_t count, std::size_t nvars, Exponent max_exp,
                                         std::size_t max_gens, std::uint64_t seed);

}  // namespace vnum
