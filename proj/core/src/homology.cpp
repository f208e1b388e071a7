#include "vnum/homology.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include <gmpxx.h>

#include "vnum/errors.hpp"

namespace vnum {

namespace {

std::vector<VertexSet> maximalize(std::vector<VertexSet> sets) {
  std::sort(sets.begin(), sets.end(), [](VertexSet a, VertexSet b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa > pb : a < b;
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<VertexSet> kept;
  for (auto s : sets) {
    bool covered = std::any_of(kept.begin(), kept.end(), [&](VertexSet k) { return (s & ~k) == 0; });
    if (!covered) kept.push_back(s);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

VertexSet full_mask(std::size_t n) { return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1; }

}  // namespace

SimplicialComplex::SimplicialComplex(std::size_t nverts, std::vector<VertexSet> facets) : nverts_(nverts) {
  if (nverts > 64) throw ResourceError("simplicial complexes are limited to 64 vertices");
  for (auto f : facets)
    if ((f & ~full_mask(nverts)) != 0) throw StructuralError("facet uses a vertex outside the vertex set");
  facets_ = maximalize(std::move(facets));
}

SimplicialComplex SimplicialComplex::simplex(std::size_t nverts) { return SimplicialComplex(nverts, {full_mask(nverts)}); }

int SimplicialComplex::dimension() const {
  if (facets_.empty()) return -2;
  int best = 0;
  for (auto f : facets_) best = std::max(best, std::popcount(f));
  return best - 1;
}

bool SimplicialComplex::contains_face(VertexSet face) const {
  return std::any_of(facets_.begin(), facets_.end(), [&](VertexSet f) { return (face & ~f) == 0; });
}

std::vector<VertexSet> SimplicialComplex::faces() const {
  std::unordered_set<VertexSet> seen;
  for (auto f : facets_) {
    VertexSet s = f;
    for (;;) {
      seen.insert(s);
      if (s == 0) break;
      s = (s - 1) & f;
    }
  }
  std::vector<VertexSet> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [](VertexSet a, VertexSet b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  return out;
}

SimplicialComplex SimplicialComplex::link(VertexSet face) const {
  std::vector<VertexSet> out;
  for (auto f : facets_)
    if ((face & ~f) == 0) out.push_back(f & ~face);
  return SimplicialComplex(nverts_, std::move(out));
}

SimplicialComplex SimplicialComplex::restriction(VertexSet vertices) const {
  std::vector<VertexSet> out;
  for (auto f : facets_) out.push_back(f & vertices);
  return SimplicialComplex(nverts_, std::move(out));
}

// ---------------------------------------------------------------------------
// Exact rank by fraction-free elimination over Z.

namespace {

struct Overflow {};

template <typename T>
using SparseRow = std::vector<std::pair<std::uint32_t, T>>;

std::int64_t narrow(__int128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) throw Overflow{};
  return static_cast<std::int64_t>(v);
}

// a*x - b*y
std::int64_t combine(std::int64_t a, std::int64_t x, std::int64_t b, std::int64_t y) {
  return narrow(static_cast<__int128>(a) * x - static_cast<__int128>(b) * y);
}
mpz_class combine(const mpz_class& a, const mpz_class& x, const mpz_class& b, const mpz_class& y) {
  return a * x - b * y;
}

std::int64_t gcd_abs(std::int64_t a, std::int64_t b) {
  if (a == std::numeric_limits<std::int64_t>::min() || b == std::numeric_limits<std::int64_t>::min()) throw Overflow{};
  return std::gcd(a, b);
}
mpz_class gcd_abs(const mpz_class& a, const mpz_class& b) { return gcd(a, b); }

template <typename T>
void normalize(SparseRow<T>& row) {
  if (row.empty()) return;
  T g = 0;
  for (const auto& [c, v] : row) g = gcd_abs(g, v);
  if (row.front().second < 0) g = -g;
  if (g != 1)
    for (auto& e : row) e.second /= g;
}

template <typename T>
std::size_t rank_impl(const std::vector<SparseRow<T>>& input) {
  std::unordered_map<std::uint32_t, SparseRow<T>> pivots;
  SparseRow<T> scratch;
  for (const auto& original : input) {
    SparseRow<T> row = original;
    normalize(row);
    while (!row.empty()) {
      auto it = pivots.find(row.front().first);
      if (it == pivots.end()) {
        auto lead = row.front().first;
        pivots.emplace(lead, std::move(row));
        break;
      }
      const auto& p = it->second;
      T a = p.front().second, b = row.front().second;
      scratch.clear();
      std::size_t i = 0, j = 0;
      while (i < row.size() || j < p.size()) {
        if (j == p.size() || (i < row.size() && row[i].first < p[j].first)) {
          scratch.emplace_back(row[i].first, combine(a, row[i].second, T(0), T(0)));
          ++i;
        } else if (i == row.size() || p[j].first < row[i].first) {
          scratch.emplace_back(p[j].first, combine(T(0), T(0), b, p[j].second));
          ++j;
        } else {
          T v = combine(a, row[i].second, b, p[j].second);
          if (v != 0) scratch.emplace_back(row[i].first, std::move(v));
          ++i;
          ++j;
        }
      }
      row.swap(scratch);
      normalize(row);
    }
  }
  return pivots.size();
}

}  // namespace

std::size_t integer_matrix_rank(const std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>>& rows) {
  std::vector<SparseRow<std::int64_t>> sorted;
  sorted.reserve(rows.size());
  for (auto r : rows) {
    std::sort(r.begin(), r.end());
    SparseRow<std::int64_t> clean;
    for (const auto& [c, v] : r) {
      if (!clean.empty() && clean.back().first == c) {
        clean.back().second += v;
        if (clean.back().second == 0) clean.pop_back();
      } else if (v != 0) {
        clean.emplace_back(c, v);
      }
    }
    sorted.push_back(std::move(clean));
  }
  try {
    return rank_impl(sorted);
  } catch (const Overflow&) {
    std::vector<SparseRow<mpz_class>> big;
    for (const auto& r : sorted) {
      SparseRow<mpz_class> b;
      for (const auto& [c, v] : r) b.emplace_back(c, mpz_class(static_cast<long>(v)));
      big.push_back(std::move(b));
    }
    return rank_impl(big);
  }
}

std::vector<std::int64_t> reduced_homology_of_faces(std::vector<VertexSet> faces) {
  if (faces.empty()) return {};
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  int top = 0;
  for (auto f : faces) top = std::max(top, std::popcount(f));
  // levels[s] holds faces with s vertices (dimension s - 1).
  std::vector<std::vector<VertexSet>> levels(static_cast<std::size_t>(top) + 1);
  for (auto f : faces) levels[static_cast<std::size_t>(std::popcount(f))].push_back(f);
  std::vector<std::unordered_map<VertexSet, std::uint32_t>> index(levels.size());
  for (std::size_t s = 0; s < levels.size(); ++s)
    for (std::uint32_t i = 0; i < levels[s].size(); ++i) index[s].emplace(levels[s][i], i);

  // rank of the boundary from size s to size s - 1; boundary of size 0 is zero.
  std::vector<std::size_t> rank(levels.size() + 1, 0);
  for (std::size_t s = 1; s < levels.size(); ++s) {
    std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> rows;
    rows.reserve(levels[s].size());
    for (auto f : levels[s]) {
      std::vector<std::pair<std::uint32_t, std::int64_t>> row;
      int pos = 0;
      for (VertexSet rest = f; rest; rest &= rest - 1, ++pos) {
        VertexSet v = rest & (~rest + 1);
        auto it = index[s - 1].find(f & ~v);
        if (it == index[s - 1].end()) throw StructuralError("face list is not closed under subsets");
        row.emplace_back(it->second, pos % 2 == 0 ? 1 : -1);
      }
      rows.push_back(std::move(row));
    }
    rank[s] = integer_matrix_rank(rows);
  }
  std::vector<std::int64_t> h(levels.size());
  std::int64_t euler_faces = 0, euler_homology = 0;
  for (std::size_t s = 0; s < levels.size(); ++s) {
    h[s] = static_cast<std::int64_t>(levels[s].size()) - static_cast<std::int64_t>(rank[s]) -
           static_cast<std::int64_t>(rank[s + 1]);
    std::int64_t sign = s % 2 == 0 ? -1 : 1;  // dimension s - 1
    euler_faces += sign * static_cast<std::int64_t>(levels[s].size());
    euler_homology += sign * h[s];
  }
  if (euler_faces != euler_homology) throw std::logic_error("reduced Euler characteristic mismatch");
  return h;
}

std::vector<std::int64_t> reduced_homology(const SimplicialComplex& C) { return reduced_homology_of_faces(C.faces()); }

std::int64_t reduced_homology_rank(const SimplicialComplex& C, int d) {
  auto h = reduced_homology(C);
  if (d < -1 || d + 1 >= static_cast<int>(h.size())) return 0;
  return h[static_cast<std::size_t>(d + 1)];
}

// ---------------------------------------------------------------------------

Polarization polarize(const MonomialIdeal& I) {
  if (I.is_zero()) throw DomainError("polarize: zero ideal");
  const std::size_t n = I.nvars();
  std::vector<Exponent> copies(n, 1);
  for (const auto& g : I.generators())
    for (std::size_t j = 0; j < n; ++j) copies[j] = std::max(copies[j], g[j]);
  Polarization out;
  std::vector<std::size_t> offset(n);
  for (std::size_t j = 0; j < n; ++j) {
    offset[j] = out.names.size();
    for (Exponent t = 1; t <= copies[j]; ++t) out.names.emplace_back(j, t);
  }
  const std::size_t m = out.names.size();
  std::vector<Monomial> gens;
  for (const auto& g : I.generators()) {
    std::vector<Exponent> e(m, 0);
    for (std::size_t j = 0; j < n; ++j)
      for (Exponent t = 0; t < g[j]; ++t) e[offset[j] + t] = 1;
    gens.emplace_back(std::move(e));
  }
  out.ideal = MonomialIdeal(m, std::move(gens));
  return out;
}

namespace {

std::vector<VertexSet> generator_masks(const MonomialIdeal& I) {
  std::vector<VertexSet> out;
  for (const auto& g : I.generators()) out.push_back(g.support_mask());
  return out;
}

void require_square_free(const MonomialIdeal& I, const char* what) {
  if (!I.is_square_free()) throw UnsupportedInputError(std::string(what) + ": ideal must be square-free");
}

// Faces of the complex on `ground` whose minimal non-faces are `nonfaces`, or
// nothing if there are more than `limit` of them.
bool enumerate_faces(VertexSet ground, const std::vector<VertexSet>& nonfaces, std::size_t limit,
                     std::vector<VertexSet>& out) {
  std::vector<int> verts;
  for (VertexSet r = ground; r; r &= r - 1) verts.push_back(std::countr_zero(r));
  std::vector<std::vector<VertexSet>> through(64);
  for (auto g : nonfaces)
    for (VertexSet r = g; r; r &= r - 1) through[static_cast<std::size_t>(std::countr_zero(r))].push_back(g);
  out.clear();
  bool overflow = false;
  auto dfs = [&](auto&& self, std::size_t idx, VertexSet face) -> void {
    if (overflow) return;
    if (idx == verts.size()) {
      out.push_back(face);
      if (out.size() > limit) overflow = true;
      return;
    }
    self(self, idx + 1, face);
    int v = verts[idx];
    VertexSet with = face | (VertexSet{1} << v);
    bool blocked = std::any_of(through[static_cast<std::size_t>(v)].begin(), through[static_cast<std::size_t>(v)].end(),
                               [&](VertexSet g) { return (g & ~with) == 0; });
    if (!blocked) self(self, idx + 1, with);
  };
  dfs(dfs, 0, 0);
  return !overflow;
}

}  // namespace

SimplicialComplex stanley_reisner_complex(const MonomialIdeal& I) {
  require_square_free(I, "stanley_reisner_complex");
  if (I.is_unit()) throw UnsupportedInputError("stanley_reisner_complex: unit ideal has no complex");
  const std::size_t n = I.nvars();
  if (n > 64) throw ResourceError("stanley_reisner_complex: more than 64 variables");
  std::vector<VertexSet> faces;
  enumerate_faces(full_mask(n), generator_masks(I), std::numeric_limits<std::size_t>::max(), faces);
  return SimplicialComplex(n, std::move(faces));
}

BettiTable betti_numbers(const MonomialIdeal& I, std::size_t variable_cap) {
  require_square_free(I, "betti_numbers");
  const std::size_t n = I.nvars();
  if (n > variable_cap)
    throw ResourceError("betti_numbers: " + std::to_string(n) + " variables exceed the Hochster cap of " +
                        std::to_string(variable_cap));
  BettiTable table;
  if (I.is_unit()) return table;
  table[{0, 0}] = 1;
  if (I.is_zero()) return table;

  auto gens = generator_masks(I);
  // β_{i,W} can only be nonzero when W is a union of generator supports;
  // otherwise some vertex of W lies in no minimal non-face and Δ_W is a cone.
  std::vector<char> in_lattice(std::size_t{1} << n, 0);
  std::vector<VertexSet> lattice{0};
  in_lattice[0] = 1;
  for (auto g : gens) {
    std::size_t cur = lattice.size();
    for (std::size_t i = 0; i < cur; ++i) {
      VertexSet u = lattice[i] | g;
      if (!in_lattice[u]) {
        in_lattice[u] = 1;
        lattice.push_back(u);
      }
    }
  }
  std::sort(lattice.begin(), lattice.end());

  std::vector<VertexSet> inside, faces;
  for (auto W : lattice) {
    if (W == 0) continue;
    const int size = std::popcount(W);
    inside.clear();
    for (auto g : gens)
      if ((g & ~W) == 0) inside.push_back(g);
    // Alexander dual of Δ_W inside W has facets W \ g; pick the smaller complex.
    std::size_t dual_bound = 0;
    for (auto g : inside) dual_bound += std::size_t{1} << (size - std::popcount(g));
    if (enumerate_faces(W, inside, dual_bound, faces)) {
      auto h = reduced_homology_of_faces(faces);
      for (std::size_t s = 0; s < h.size(); ++s) {
        if (h[s] == 0) continue;
        int d = static_cast<int>(s) - 1;
        table[{size - d - 1, size}] += h[s];
      }
    } else {
      std::vector<VertexSet> facets;
      for (auto g : inside) facets.push_back(W & ~g);
      auto h = reduced_homology(SimplicialComplex(n, std::move(facets)));
      for (std::size_t s = 0; s < h.size(); ++s) {
        if (h[s] == 0) continue;
        int d = static_cast<int>(s) - 1;
        table[{d + 2, size}] += h[s];
      }
    }
  }
  return table;
}

int regularity_from_betti(const BettiTable& table) {
  if (table.empty()) throw UndefinedInvariantError("regularity of the zero module");
  int best = std::numeric_limits<int>::min();
  for (const auto& [key, beta] : table)
    if (beta != 0) best = std::max(best, key.second - key.first);
  return best;
}

int regularity(const MonomialIdeal& I, std::size_t variable_cap) {
  if (!I.is_proper_nonzero()) throw DomainError("regularity: needs a proper nonzero ideal");
  if (I.is_square_free()) return regularity_from_betti(betti_numbers(I, variable_cap));
  return regularity_from_betti(betti_numbers(polarize(I).ideal, variable_cap));
}

bool is_cohen_macaulay(const MonomialIdeal& I) {
  auto delta = stanley_reisner_complex(I);
  for (auto F : delta.faces()) {
    auto link = delta.link(F);
    auto h = reduced_homology(link);
    int dim = link.dimension();
    for (int d = -1; d < dim; ++d)
      if (h[static_cast<std::size_t>(d + 1)] != 0) return false;
  }
  return true;
}

}  // namespace vnum
