#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vnum/combinatorics.hpp"
#include "vnum/fit.hpp"
#include "vnum/homology.hpp"
#include "vnum/ideal.hpp"
#include "vnum/vnumber.hpp"

namespace vnum {

/// TrendPass marks a finite-window stand-in for a "for all k >> 0" claim.
/// Inconclusive means the window cannot decide the statement.
enum class Status { Pass, Fail, Skip, TrendPass, Inconclusive };
std::string to_string(Status s);

struct Verdict {
  std::string name;
  Status status = Status::Pass;
  std::string reason;
  /// Ordered key/value payload: the ideal, k and both sides of a violated relation.
  std::vector<std::pair<std::string, std::string>> witness;
};

struct Caps {
  std::uint64_t witness_budget = kDefaultWitnessBudget;
  std::size_t hochster_variables = kDefaultHochsterVariableCap;
  std::size_t vertex_dimension = kDefaultVertexDimensionCap;
};

/// Parses `witness=N,hochster=N,vertex=N` (any subset, any order).
Caps parse_caps(const std::string& text);

struct FiltrationRow {
  std::int64_t k = 0;
  std::uint64_t alpha = 0;
  std::uint64_t v = 0;
  std::optional<int> reg;
};

struct FiltrationReport {
  std::string instance;
  PowerType type = PowerType::SymbolicMin;
  std::vector<FiltrationRow> rows;
  std::optional<QuasiLinearFit> fit;
  std::vector<Verdict> checks;
};

/// Lazily computed members of {I^k} or {I^(k)} and their invariants.
class Filtration {
 public:
  Filtration(MonomialIdeal I, PowerType type, Caps caps = {});

  const MonomialIdeal& base() const { return base_; }
  PowerType type() const { return type_; }
  const MonomialIdeal& member(std::int64_t k);
  std::uint64_t alpha(std::int64_t k);
  std::uint64_t v(std::int64_t k);
  int reg(std::int64_t k);

 private:
  struct Entry {
    std::optional<MonomialIdeal> ideal;
    std::optional<std::uint64_t> v;
    std::optional<int> reg;
  };
  Entry& entry(std::int64_t k);

  MonomialIdeal base_;
  PowerType type_;
  Caps caps_;
  std::map<std::int64_t, Entry> entries_;
};

/// Rows k = 1..K with alpha and v, plus reg when `with_reg`.
FiltrationReport filtration_report(const MonomialIdeal& I, const std::string& instance, PowerType type,
                                   std::int64_t K, bool with_reg, const Caps& caps = {});

/// Fitted slope of v(I^(k)) against the LP Waldschmidt constant, plus
/// alpha(I^(k)) - 1 <= v(I^(k)) <= (k-1)d(I) + v(I) at each k. I square-free, K <= 6.
Verdict check_slope_theorem(const MonomialIdeal& I, std::int64_t K, const Caps& caps = {});
/// alpha(I^(k)) - 1 <= v(I^(k)) <= (k-1)d(I) + v(I) for k <= K; I square-free.
Verdict check_sandwich(const MonomialIdeal& I, std::int64_t K, const Caps& caps = {});
/// v(J(G)^(k)) <= reg(R/J(G)^(k)) for k <= K.
Verdict check_cover_vs_reg(const Graph& G, std::int64_t K, const Caps& caps = {});
/// [v = reg = alpha - 1 for all k <= K] against is_cm_very_well_covered(G).
Verdict check_cmvwc_equivalence(const Graph& G, std::int64_t K, const Caps& caps = {});
/// The symbolic and ordinary upper bounds for square-free I, and for edge
/// ideals of graphs the 2(k-1) + v bounds.
Verdict check_upper_bounds(const MonomialIdeal& I, std::int64_t K, const Caps& caps = {});
/// One verdict per criterion: alpha-delta gap, non-equigenerated gap,
/// induced matching, uniform hypergraph, polymatroidal, edge-ideal matching.
std::vector<Verdict> check_criteria_suite(const MonomialIdeal& I, std::int64_t K, const Caps& caps = {});
/// Graph classes with v(I(G)) <= im(G) (bipartite, chordal, very well-covered, C_n with n != 5).
Verdict check_graph_class_matching(const Graph& G);
/// I_[rk] = (I_[r])^k: r = 1 for ordinary powers; for symbolic powers some r <= 3 with kr <= 6.
Verdict check_power_stabilization(const MonomialIdeal& I, PowerType type);
/// (I^(k) : I) = I^(k-1) for 2 <= k <= K.
Verdict check_symbolic_persistence(const MonomialIdeal& I, std::int64_t K);
/// (I^{k+1} : I) = I^k for 1 <= k <= K.
Verdict check_ordinary_persistence(const MonomialIdeal& I, std::int64_t K);
/// The Min and Ass symbolic powers agree for k <= K.
Verdict check_variant_agreement(const MonomialIdeal& I, std::int64_t K);
/// v(I^P) = v(I).
Verdict check_v_polarization(const MonomialIdeal& I, const Caps& caps = {});
/// polarize(J(G)^(k)) = J(G_k) for k <= K.
Verdict check_cover_polarization(const Graph& G, std::int64_t K);
/// Very well-covered and Cohen-Macaulay very well-covered lift from G to G_k, k <= K.
Verdict check_gk_lift(const Graph& G, std::int64_t K, const Caps& caps = {});
/// Under the odd-cycle condition, J^(2) = J^2 + (x1...xn) and
/// alpha(J^(2))/2 = min(alpha(J), n/2) = Waldschmidt constant of J.
Verdict check_second_alpha(const Graph& G);
/// beta_{0,j} against generator counts, decomposition re-intersection, and
/// LP optimum against the vertex scan (square-free only).
Verdict check_oracles(const MonomialIdeal& I, const Caps& caps = {});

/// Named suites: cover, cmvwc, slope, bounds, criteria, persistence,
/// polarization, oracles, all.
struct SuiteOptions {
  std::size_t n_max = 4;
  std::int64_t max_k = 3;
  std::uint64_t seed = 1;
  unsigned jobs = 1;
  Caps caps;
};
const std::vector<std::string>& suite_names();
std::vector<FiltrationReport> run_suite(const std::string& name, const SuiteOptions& options);

bool any_failure(const std::vector<FiltrationReport>& reports);

}  // namespace vnum
