#include "vnum/corpus.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "vnum/errors.hpp"

namespace vnum {

namespace {

using Rows = std::vector<VertexSet>;

Rows adjacency_rows(const Graph& G) {
  Rows rows(G.vertex_count());
  for (std::size_t v = 0; v < rows.size(); ++v) rows[v] = G.neighbors(v);
  return rows;
}

// Colour refinement: start from degrees, split by the multiset of neighbour
// colours until stable. Colours are ranks of label-independent signatures.
std::vector<std::size_t> refined_colours(const Rows& adj) {
  const std::size_t n = adj.size();
  std::vector<std::size_t> colour(n);
  for (std::size_t v = 0; v < n; ++v) colour[v] = static_cast<std::size_t>(std::popcount(adj[v]));
  for (;;) {
    std::vector<std::pair<std::size_t, std::vector<std::size_t>>> sig(n);
    for (std::size_t v = 0; v < n; ++v) {
      sig[v].first = colour[v];
      for (VertexSet r = adj[v]; r; r &= r - 1) sig[v].second.push_back(colour[std::countr_zero(r)]);
      std::sort(sig[v].second.begin(), sig[v].second.end());
    }
    auto distinct = sig;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::vector<std::size_t> next(n);
    for (std::size_t v = 0; v < n; ++v)
      next[v] = static_cast<std::size_t>(std::lower_bound(distinct.begin(), distinct.end(), sig[v]) - distinct.begin());
    auto classes = [](const std::vector<std::size_t>& c) { return std::set<std::size_t>(c.begin(), c.end()).size(); };
    bool stable = classes(next) == classes(colour);
    colour = std::move(next);
    if (stable) return colour;
  }
}

Rows canonical_rows(const Rows& adj) {
  const std::size_t n = adj.size();
  auto colour = refined_colours(adj);
  // Position p takes a vertex of colour sorted[p]; only colour-preserving maps are tried.
  std::vector<std::size_t> sorted = colour;
  std::sort(sorted.begin(), sorted.end());
  Rows best;
  std::vector<std::size_t> at(n);  // at[p] = original vertex placed at position p
  std::vector<std::size_t> pos(n);
  std::vector<char> used(n, 0);
  auto build = [&] {
    Rows rows(n, 0);
    for (std::size_t p = 0; p < n; ++p)
      for (VertexSet r = adj[at[p]]; r; r &= r - 1) rows[p] |= VertexSet{1} << pos[std::countr_zero(r)];
    return rows;
  };
  auto dfs = [&](auto&& self, std::size_t p) -> void {
    if (p == n) {
      auto rows = build();
      if (best.empty() || rows < best) best = std::move(rows);
      return;
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (used[v] || colour[v] != sorted[p]) continue;
      used[v] = 1;
      at[p] = v;
      pos[v] = p;
      self(self, p + 1);
      used[v] = 0;
    }
  };
  dfs(dfs, 0);
  return best;
}

Graph graph_from_rows(const Rows& rows) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t u = 0; u < rows.size(); ++u)
    for (VertexSet r = rows[u]; r; r &= r - 1) {
      auto v = static_cast<std::size_t>(std::countr_zero(r));
      if (u < v) edges.emplace_back(u, v);
    }
  return Graph(rows.size(), std::move(edges));
}

// All isomorphism classes on n vertices (edgeless included), as canonical rows.
const std::vector<Rows>& all_classes(std::size_t n) {
  static std::map<std::size_t, std::vector<Rows>> memo;
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  std::set<Rows> found;
  if (n == 0) {
    found.insert(Rows{});
  } else {
    for (const auto& smaller : all_classes(n - 1)) {
      for (VertexSet nb = 0; nb < (VertexSet{1} << (n - 1)); ++nb) {
        Rows rows = smaller;
        rows.push_back(nb);
        for (VertexSet r = nb; r; r &= r - 1) rows[std::countr_zero(r)] |= VertexSet{1} << (n - 1);
        found.insert(canonical_rows(rows));
      }
    }
  }
  return memo[n] = std::vector<Rows>(found.begin(), found.end());
}

}  // namespace

std::vector<VertexSet> canonical_form(const Graph& G) { return canonical_rows(adjacency_rows(G)); }

bool is_connected(const Graph& G) {
  const std::size_t n = G.vertex_count();
  if (n == 0) return true;
  VertexSet seen = 1, frontier = 1;
  while (frontier) {
    VertexSet next = 0;
    for (VertexSet r = frontier; r; r &= r - 1) next |= G.neighbors(static_cast<std::size_t>(std::countr_zero(r)));
    frontier = next & ~seen;
    seen |= next;
  }
  return static_cast<std::size_t>(std::popcount(seen)) == n;
}

std::vector<Graph> graphs_on(std::size_t n, GraphFilter filter) {
  if (n > kMaxCorpusGraphVertices) throw ResourceError("graph corpus is capped at 8 vertices");
  std::vector<std::pair<std::size_t, Graph>> keyed;
  for (const auto& rows : all_classes(n)) {
    Graph g = graph_from_rows(rows);
    if (g.edges().empty() && filter != GraphFilter::All) continue;
    if (filter == GraphFilter::NoIsolated && g.has_isolated_vertex()) continue;
    if (filter == GraphFilter::Connected && !is_connected(g)) continue;
    keyed.emplace_back(g.edges().size(), std::move(g));
  }
  std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Graph> out;
  for (auto& [e, g] : keyed) out.push_back(std::move(g));
  return out;
}

std::vector<Graph> graphs_up_to(std::size_t n_max, GraphFilter filter) {
  std::vector<Graph> out;
  for (std::size_t n = 2; n <= n_max; ++n) {
    auto part = graphs_on(n, filter);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

Graph named_graph(const std::string& family, std::size_t n) {
  if (family == "cycle") return cycle_graph(n);
  if (family == "complete") return complete_graph(n);
  if (family == "path") return path_graph(n);
  if (family == "whisker") return whisker_graph(path_graph(n));
  throw std::invalid_argument("unknown graph family '" + family + "'");
}

namespace {

std::vector<std::vector<std::uint64_t>> mask_permutations(std::size_t m) {
  std::vector<std::size_t> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<std::uint64_t>> out;
  do {
    std::vector<std::uint64_t> table(std::size_t{1} << m, 0);
    for (std::uint64_t mask = 0; mask < table.size(); ++mask)
      for (std::size_t i = 0; i < m; ++i)
        if (mask >> i & 1U) table[mask] |= std::uint64_t{1} << perm[i];
    out.push_back(std::move(table));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace

std::vector<MonomialIdeal> square_free_ideals(std::size_t m, std::size_t max_gens, std::optional<std::size_t> degree) {
  if (m > kMaxCorpusSquareFreeVariables) throw ResourceError("square-free corpus is capped at 6 variables");
  if (m == 0 || max_gens == 0) return {};
  std::vector<std::uint64_t> candidates;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask)
    if (!degree || static_cast<std::size_t>(std::popcount(mask)) == *degree) candidates.push_back(mask);
  auto perms = mask_permutations(m);

  std::set<std::vector<std::uint64_t>> classes;
  std::vector<std::uint64_t> chosen;
  auto canonical = [&] {
    std::vector<std::uint64_t> best;
    for (const auto& table : perms) {
      std::vector<std::uint64_t> image;
      for (auto g : chosen) image.push_back(table[g]);
      std::sort(image.begin(), image.end());
      if (best.empty() || image < best) best = std::move(image);
    }
    return best;
  };
  auto dfs = [&](auto&& self, std::size_t start) -> void {
    if (!chosen.empty()) classes.insert(canonical());
    if (chosen.size() == max_gens) return;
    for (std::size_t i = start; i < candidates.size(); ++i) {
      auto c = candidates[i];
      bool incomparable = std::none_of(chosen.begin(), chosen.end(), [&](std::uint64_t g) {
        return (g & ~c) == 0 || (c & ~g) == 0;
      });
      if (!incomparable) continue;
      chosen.push_back(c);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  dfs(dfs, 0);

  std::vector<std::pair<std::pair<std::size_t, std::vector<std::uint64_t>>, MonomialIdeal>> keyed;
  for (const auto& cls : classes) {
    std::vector<Monomial> gens;
    for (auto g : cls) gens.push_back(Monomial::from_mask(m, g));
    keyed.push_back({{cls.size(), cls}, MonomialIdeal(m, std::move(gens))});
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<MonomialIdeal> out;
  for (auto& [key, I] : keyed) out.push_back(std::move(I));
  return out;
}

std::uint64_t square_free_candidate_count(std::size_t m, std::size_t degree) {
  std::uint64_t monomials = 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask)
    if (static_cast<std::size_t>(std::popcount(mask)) == degree) ++monomials;
  if (monomials >= 64) throw ResourceError("candidate count overflows");
  return (std::uint64_t{1} << monomials) - 1;
}

std::vector<MonomialIdeal> random_ideals(std::size_t count, std::size_t nvars, Exponent max_exp, std::size_t max_gens,
                                         std::uint64_t seed) {
  if (nvars == 0 || max_exp == 0 || max_gens == 0) throw DomainError("random ideals need nvars, max_exp, max_gens >= 1");
  std::mt19937_64 rng(seed);
  std::vector<MonomialIdeal> out;
  while (out.size() < count) {
    std::size_t ngens = 1 + static_cast<std::size_t>(rng() % max_gens);
    std::vector<Monomial> gens;
    while (gens.size() < ngens) {
      std::vector<Exponent> e(nvars);
      for (auto& x : e) x = static_cast<Exponent>(rng() % (static_cast<std::uint64_t>(max_exp) + 1));
      Monomial m(std::move(e));
      if (!m.is_one()) gens.push_back(std::move(m));
    }
    out.emplace_back(nvars, std::move(gens));
  }
  return out;
}

}  // namespace vnum
