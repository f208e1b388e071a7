#include "vnum/combinatorics.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <set>
#include <sstream>

#include "vnum/errors.hpp"
#include "vnum/symbolic.hpp"

namespace vnum {

Graph::Graph(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> edges) : n_(n), adj_(n, 0) {
  if (n > 64) throw ResourceError("graphs are limited to 64 vertices");
  for (auto& [u, v] : edges) {
    if (u >= n || v >= n) throw StructuralError("edge endpoint out of range");
    if (u == v) throw StructuralError("loops are not allowed");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
  for (auto [u, v] : edges_) {
    adj_[u] |= VertexSet{1} << v;
    adj_[v] |= VertexSet{1} << u;
  }
}

bool Graph::has_isolated_vertex() const {
  return std::any_of(adj_.begin(), adj_.end(), [](VertexSet a) { return a == 0; });
}

Hypergraph::Hypergraph(std::size_t n, std::vector<VertexSet> edges) : n_(n) {
  if (n > 64) throw ResourceError("hypergraphs are limited to 64 vertices");
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  for (auto e : edges) {
    if (e == 0) throw StructuralError("hypergraph edges must be nonempty");
    if (n < 64 && (e >> n) != 0) throw StructuralError("hyperedge uses a vertex out of range");
  }
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = 0; j < edges.size(); ++j)
      if (i != j && (edges[i] & ~edges[j]) == 0) throw StructuralError("hyperedges must not contain each other");
  edges_ = std::move(edges);
}

Hypergraph Hypergraph::from_graph(const Graph& g) {
  std::vector<VertexSet> edges;
  for (auto [u, v] : g.edges()) edges.push_back(VertexSet{1} << u | VertexSet{1} << v);
  return Hypergraph(g.vertex_count(), std::move(edges));
}

Hypergraph Hypergraph::from_ideal(const MonomialIdeal& I) {
  if (!I.is_square_free()) throw UnsupportedInputError("hypergraph of a non-square-free ideal");
  std::vector<VertexSet> edges;
  for (const auto& g : I.generators()) edges.push_back(g.support_mask());
  return Hypergraph(I.nvars(), std::move(edges));
}

MonomialIdeal edge_ideal(const Hypergraph& H) {
  if (H.edges().empty()) throw DomainError("edge ideal: hypergraph has no edges");
  std::vector<Monomial> gens;
  for (auto e : H.edges()) gens.push_back(Monomial::from_mask(H.vertex_count(), e));
  return MonomialIdeal(H.vertex_count(), std::move(gens));
}

MonomialIdeal edge_ideal(const Graph& G) { return edge_ideal(Hypergraph::from_graph(G)); }

namespace {

// Maximal sets containing no edge, by include/exclude search; a vertex may only
// be left out if some edge would block it at the end.
std::vector<VertexSet> maximal_independent(std::size_t n, const std::vector<VertexSet>& edges) {
  std::vector<std::vector<VertexSet>> through(n);
  for (auto e : edges)
    for (VertexSet r = e; r; r &= r - 1) through[static_cast<std::size_t>(std::countr_zero(r))].push_back(e);
  auto blocked = [&](VertexSet set, std::size_t v) {
    VertexSet with = set | VertexSet{1} << v;
    return std::any_of(through[v].begin(), through[v].end(), [&](VertexSet e) { return (e & ~with) == 0; });
  };
  std::vector<VertexSet> out;
  auto dfs = [&](auto&& self, std::size_t v, VertexSet set, VertexSet skipped) -> void {
    if (v == n) {
      for (VertexSet r = skipped; r; r &= r - 1)
        if (!blocked(set, static_cast<std::size_t>(std::countr_zero(r)))) return;
      out.push_back(set);
      return;
    }
    if (!blocked(set, v)) self(self, v + 1, set | VertexSet{1} << v, skipped);
    // Skipping v is only useful if v can be blocked, i.e. it lies on some edge.
    if (!through[v].empty()) self(self, v + 1, set, skipped | VertexSet{1} << v);
  };
  dfs(dfs, 0, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

VertexSet all_vertices(std::size_t n) { return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1; }

std::vector<VertexSet> complements(std::size_t n, const std::vector<VertexSet>& sets) {
  std::vector<VertexSet> out;
  for (auto s : sets) out.push_back(all_vertices(n) & ~s);
  std::sort(out.begin(), out.end());
  return out;
}

void require_edges(const Graph& G, const char* what) {
  if (G.edges().empty()) throw DomainError(std::string(what) + ": graph has no edges");
}

void require_no_isolated(const Graph& G, const char* what) {
  if (G.has_isolated_vertex()) throw DomainError(std::string(what) + ": graph has isolated vertices");
}

}  // namespace

std::vector<VertexSet> maximal_independent_sets(const Graph& G) {
  return maximal_independent(G.vertex_count(), Hypergraph::from_graph(G).edges());
}

std::vector<VertexSet> minimal_vertex_covers(const Hypergraph& H) {
  if (H.edges().empty()) throw DomainError("minimal vertex covers: no edges");
  return complements(H.vertex_count(), maximal_independent(H.vertex_count(), H.edges()));
}

std::vector<VertexSet> minimal_vertex_covers(const Graph& G) {
  require_edges(G, "minimal vertex covers");
  return minimal_vertex_covers(Hypergraph::from_graph(G));
}

MonomialIdeal cover_ideal(const Graph& G) {
  require_edges(G, "cover ideal");
  std::vector<Monomial> gens;
  for (auto c : minimal_vertex_covers(G)) gens.push_back(Monomial::from_mask(G.vertex_count(), c));
  return MonomialIdeal(G.vertex_count(), std::move(gens));
}

MonomialIdeal cover_ideal_by_intersection(const Graph& G) {
  require_edges(G, "cover ideal");
  std::vector<MonomialIdeal> primes;
  for (auto [u, v] : G.edges()) primes.push_back(MonomialIdeal::prime(G.vertex_count(), {u, v}));
  return intersect(primes);
}

bool is_very_well_covered(const Graph& G) {
  require_no_isolated(G, "very well-covered");
  const std::size_t n = G.vertex_count();
  if (n % 2 != 0) return false;
  auto sets = maximal_independent_sets(G);
  return std::all_of(sets.begin(), sets.end(),
                     [&](VertexSet s) { return static_cast<std::size_t>(std::popcount(s)) == n / 2; });
}

bool is_cm_very_well_covered(const Graph& G) {
  return is_very_well_covered(G) && is_cohen_macaulay(edge_ideal(G));
}

FakhariGraph fakhari_gk(const Graph& G, std::int64_t k) {
  if (k < 1) throw DomainError("fakhari_gk: k must be at least 1");
  const auto kk = static_cast<std::size_t>(k);
  const std::size_t n = G.vertex_count();
  FakhariGraph out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t p = 1; p <= kk; ++p) out.names.emplace_back(i, p);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (auto [u, v] : G.edges())
    for (std::size_t p = 1; p <= kk; ++p)
      for (std::size_t q = 1; p + q <= kk + 1; ++q) edges.emplace_back(u * kk + p - 1, v * kk + q - 1);
  out.graph = Graph(n * kk, std::move(edges));
  return out;
}

bool cover_polarization_check(const Graph& G, std::int64_t k) {
  auto gk = fakhari_gk(G, k);
  const auto kk = static_cast<std::size_t>(k);
  auto pol = polarize(symbolic_power(cover_ideal(G), k, SymbolicPowerVariant::Min));
  const std::size_t m = gk.graph.vertex_count();
  std::vector<Monomial> gens;
  for (const auto& g : pol.ideal.generators()) {
    std::vector<Exponent> e(m, 0);
    for (std::size_t v = 0; v < g.nvars(); ++v) {
      if (g[v] == 0) continue;
      auto [orig, copy] = pol.names[v];
      if (copy > kk) return false;
      e[orig * kk + copy - 1] = 1;
    }
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(m, std::move(gens)) == cover_ideal(gk.graph);
}

namespace {

template <typename Visit>
void for_each_induced_matching(const Hypergraph& H, Visit&& visit) {
  const auto& edges = H.edges();
  std::vector<std::size_t> chosen;
  auto is_induced = [&](VertexSet U) {
    std::size_t inside = 0;
    for (auto e : edges)
      if ((e & ~U) == 0) ++inside;
    return inside == chosen.size();
  };
  auto dfs = [&](auto&& self, std::size_t start, VertexSet used) -> void {
    for (std::size_t i = start; i < edges.size(); ++i) {
      if (edges[i] & used) continue;
      chosen.push_back(i);
      VertexSet U = used | edges[i];
      if (is_induced(U)) visit(chosen);
      self(self, i + 1, U);
      chosen.pop_back();
    }
  };
  dfs(dfs, 0, 0);
}

}  // namespace

std::size_t induced_matching_number(const Hypergraph& H) {
  if (H.edges().empty()) throw DomainError("induced matching number: no edges");
  std::size_t best = 0;
  for_each_induced_matching(H, [&](const std::vector<std::size_t>& m) { best = std::max(best, m.size()); });
  return best;
}

std::size_t best_induced_matching_weight(const Hypergraph& H) {
  if (H.edges().empty()) throw DomainError("induced matching weight: no edges");
  int d = 0;
  for (auto e : H.edges()) d = std::max(d, std::popcount(e));
  std::size_t best = 0;
  for_each_induced_matching(H, [&](const std::vector<std::size_t>& m) {
    bool has_max = false;
    std::size_t w = 0;
    for (auto i : m) {
      int s = std::popcount(H.edges()[i]);
      has_max = has_max || s == d;
      w += static_cast<std::size_t>(s - 1);
    }
    if (has_max) best = std::max(best, w);
  });
  return best;
}

bool odd_cycle_condition(const Graph& G) {
  const std::size_t n = G.vertex_count();
  std::set<VertexSet> odd;
  // Cycles rooted at their smallest vertex; each is found twice (both directions).
  for (std::size_t s = 0; s < n; ++s) {
    auto dfs = [&](auto&& self, std::size_t v, VertexSet path, std::size_t len) -> void {
      for (VertexSet r = G.neighbors(v); r; r &= r - 1) {
        auto w = static_cast<std::size_t>(std::countr_zero(r));
        if (w == s && len >= 3) {
          if (len % 2 == 1) odd.insert(path);
          continue;
        }
        if (w <= s || (path >> w & 1U)) continue;
        self(self, w, path | VertexSet{1} << w, len + 1);
      }
    };
    dfs(dfs, s, VertexSet{1} << s, 1);
  }
  for (auto C : odd)
    for (std::size_t i = 0; i < n; ++i)
      if ((G.neighbors(i) & C) == 0) return false;
  return true;
}

bool is_bipartite(const Graph& G) {
  const std::size_t n = G.vertex_count();
  std::vector<int> color(n, -1);
  for (std::size_t s = 0; s < n; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::vector<std::size_t> stack{s};
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      for (VertexSet r = G.neighbors(v); r; r &= r - 1) {
        auto w = static_cast<std::size_t>(std::countr_zero(r));
        if (color[w] == -1) {
          color[w] = 1 - color[v];
          stack.push_back(w);
        } else if (color[w] == color[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_chordal(const Graph& G) {
  // Repeatedly delete a simplicial vertex; chordal graphs never get stuck.
  VertexSet alive = all_vertices(G.vertex_count());
  while (alive) {
    bool removed = false;
    for (VertexSet r = alive; r; r &= r - 1) {
      auto v = static_cast<std::size_t>(std::countr_zero(r));
      VertexSet nb = G.neighbors(v) & alive;
      bool clique = true;
      for (VertexSet q = nb; q && clique; q &= q - 1) {
        auto u = static_cast<std::size_t>(std::countr_zero(q));
        clique = (nb & ~(G.neighbors(u) | VertexSet{1} << u)) == 0;
      }
      if (clique) {
        alive &= ~(VertexSet{1} << v);
        removed = true;
        break;
      }
    }
    if (!removed) return false;
  }
  return true;
}

bool is_polymatroidal(const MonomialIdeal& I) {
  if (!I.is_proper_nonzero() || !is_equigenerated(I)) return false;
  const auto& gens = I.generators();
  const std::size_t n = I.nvars();
  std::set<Monomial> lookup(gens.begin(), gens.end());
  for (const auto& u : gens)
    for (const auto& v : gens) {
      for (std::size_t i = 0; i < n; ++i) {
        if (u[i] <= v[i]) continue;
        bool exchanged = false;
        for (std::size_t j = 0; j < n && !exchanged; ++j) {
          if (u[j] >= v[j]) continue;
          auto e = u.exponents();
          --e[i];
          ++e[j];
          exchanged = lookup.count(Monomial(std::move(e))) > 0;
        }
        if (!exchanged) return false;
      }
    }
  return true;
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw DomainError("cycle graph needs at least 3 vertices");
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, std::move(e));
}

Graph complete_graph(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, std::move(e));
}

Graph path_graph(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, std::move(e));
}

Graph whisker_graph(const Graph& base) {
  const std::size_t n = base.vertex_count();
  auto e = base.edges();
  for (std::size_t i = 0; i < n; ++i) e.emplace_back(i, n + i);
  return Graph(2 * n, std::move(e));
}

Graph parse_graph(std::istream& in) {
  std::string raw;
  int line = 0;
  long long n = -1;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  while (std::getline(in, raw)) {
    ++line;
    auto hash = raw.find('#');
    std::istringstream ls(hash == std::string::npos ? raw : raw.substr(0, hash));
    std::string first;
    if (!(ls >> first)) continue;
    if (n < 0) {
      if (first != "graph" || !(ls >> n) || n < 0) throw ParseError("expected 'graph <n>' header", line);
      continue;
    }
    long long u = 0, v = 0;
    try {
      u = std::stoll(first);
    } catch (const std::exception&) {
      throw ParseError("bad vertex '" + first + "'", line);
    }
    std::string extra;
    if (!(ls >> v) || (ls >> extra)) throw ParseError("expected 'u v'", line);
    if (u < 1 || v < 1 || u > n || v > n) throw ParseError("vertex index out of range", line);
    if (u == v) throw ParseError("loops are not allowed", line);
    edges.emplace_back(static_cast<std::size_t>(u - 1), static_cast<std::size_t>(v - 1));
  }
  if (n < 0) throw ParseError("missing 'graph <n>' header", line);
  return Graph(static_cast<std::size_t>(n), std::move(edges));
}

Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

std::string format_graph(const Graph& G) {
  std::ostringstream os;
  os << "graph " << G.vertex_count() << '\n';
  for (auto [u, v] : G.edges()) os << u + 1 << ' ' << v + 1 << '\n';
  return os.str();
}

}  // namespace vnum
