#include "doctest.h"

#include "json.hpp"

#include "oracles.hpp"
#include "vnum/checks.hpp"
#include "vnum/combinatorics.hpp"
#include "vnum/corpus.hpp"
#include "vnum/errors.hpp"
#include "vnum/fit.hpp"
#include "vnum/homology.hpp"
#include "vnum/report.hpp"
#include "vnum/symbolic.hpp"

using namespace vnum;

namespace {

const MonomialIdeal tri = MonomialIdeal(3, {Monomial{1, 1, 0}, Monomial{0, 1, 1}, Monomial{1, 0, 1}});

Rational q(long p, long r = 1) {
  Rational v(p, r);
  v.canonicalize();
  return v;
}

std::string witness_value(const Verdict& v, const std::string& key) {
  for (const auto& [k, val] : v.witness)
    if (k == key) return val;
  return "";
}

const Verdict& by_name(const std::vector<Verdict>& vs, const std::string& name) {
  for (const auto& v : vs)
    if (v.name == name) return v;
  FAIL("no verdict named " << name);
  return vs.front();
}

}  // namespace

TEST_CASE("graph corpus sizes") {
  // Unlabeled graphs on n vertices, all and connected. Every filter except
  // All also asks for an edge, which drops the single vertex.
  const std::vector<std::size_t> all = {1, 2, 4, 11, 34, 156};
  const std::vector<std::size_t> connected = {0, 1, 2, 6, 21, 112};
  for (std::size_t n = 1; n <= 6; ++n) {
    CHECK(graphs_on(n, GraphFilter::All).size() == all[n - 1]);
    CHECK(graphs_on(n, GraphFilter::Connected).size() == connected[n - 1]);
    CHECK(graphs_on(n, GraphFilter::AnyWithEdge).size() == all[n - 1] - 1);
  }
  auto c3 = graphs_on(3, GraphFilter::Connected);
  REQUIRE(c3.size() == 2);
  CHECK(canonical_form(c3[0]) == canonical_form(path_graph(3)));
  CHECK(canonical_form(c3[1]) == canonical_form(complete_graph(3)));
  CHECK_THROWS_AS(graphs_on(9), ResourceError);
}

TEST_CASE("graph corpus classes are pairwise non-isomorphic") {
  for (std::size_t n = 2; n <= 5; ++n) {
    std::set<std::vector<VertexSet>> seen;
    for (const auto& G : graphs_on(n, GraphFilter::All)) CHECK(seen.insert(canonical_form(G)).second);
  }
  CHECK(canonical_form(cycle_graph(5)) == canonical_form(Graph(5, {{0, 2}, {2, 4}, {4, 1}, {1, 3}, {3, 0}})));
  CHECK(canonical_form(cycle_graph(6)) != canonical_form(Graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}})));
}

TEST_CASE("named families") {
  CHECK(named_graph("cycle", 5) == cycle_graph(5));
  CHECK(named_graph("complete", 4) == complete_graph(4));
  CHECK(named_graph("path", 3) == path_graph(3));
  CHECK(named_graph("whisker", 2) == whisker_graph(path_graph(2)));
  CHECK_THROWS(named_graph("star", 4));
}

TEST_CASE("square-free corpus") {
  CHECK(square_free_candidate_count(3, 2) == 7);
  // Non-isomorphic antichains of subsets, minus the zero and unit ideals.
  const std::vector<std::size_t> classes = {1, 3, 8, 28, 208};
  for (std::size_t m = 1; m <= 5; ++m) CHECK(square_free_ideals(m, 10).size() == classes[m - 1]);
  auto quads = square_free_ideals(3, 3, 2);
  CHECK(quads.size() == 3);  // one edge, a path, the triangle
  for (const auto& I : quads) CHECK(is_equigenerated(I));
  for (const auto& I : square_free_ideals(4, 3)) {
    CHECK(I.is_square_free());
    CHECK(I.is_proper_nonzero());
    CHECK(I.size() <= 3);
  }
  CHECK_THROWS_AS(square_free_ideals(7, 2), ResourceError);
}

TEST_CASE("random corpus is seeded and deterministic") {
  auto a = random_ideals(50, 4, 3, 4, 1);
  auto b = random_ideals(50, 4, 3, 4, 1);
  auto c = random_ideals(50, 4, 3, 4, 2);
  CHECK(a == b);
  CHECK_FALSE(a == c);
  for (const auto& I : a) {
    CHECK(I.is_proper_nonzero());
    for (const auto& g : I.generators())
      for (auto e : g.exponents()) CHECK(e <= 3);
  }
}

TEST_CASE("fit examples") {
  auto f = fit_quasilinear({0, 1, 2, 3, 4, 5}, 1);
  REQUIRE(f);
  CHECK(f->slope == 1);
  CHECK(f->period == 1);
  CHECK(f->intercepts == std::vector<Rational>{-1});

  auto g = fit_quasilinear({1, 3, 4, 6, 7, 9}, 1);
  REQUIRE(g);
  CHECK(g->slope == q(3, 2));
  CHECK(g->period == 2);
  // Residue 0 (even k): 3 = 3/2*2 + 0; residue 1 (odd k): 1 = 3/2*1 - 1/2.
  CHECK(g->intercepts == std::vector<Rational>{0, q(-1, 2)});

  CHECK_FALSE(fit_quasilinear({0, 1, 4, 9, 16, 25}, 1));
  CHECK_FALSE(fit_quasilinear({0, 1, 2, 3}, 1));  // too short
  auto late = fit_quasilinear({5, 0, 2, 4, 6, 8}, 2);
  REQUIRE(late);
  CHECK(late->slope == 2);
  CHECK(late->k_min == 2);
}

TEST_CASE("property: fits reproduce the sequence") {
  const std::vector<std::vector<std::int64_t>> seqs = {{2, 4, 5, 7, 8, 10}, {1, 3, 4, 6, 8, 9, 11}, {0, 0, 0, 0, 0}, {3, 3, 6, 6, 9, 9, 12}};
  for (const auto& s : seqs) {
    auto f = fit_quasilinear(s, 1);
    if (!f) continue;
    for (std::size_t i = 0; i < s.size(); ++i) {
      const auto k = static_cast<std::int64_t>(i + 1);
      CHECK(f->slope * k + f->intercepts[k % f->period] == s[i]);
    }
  }
}

TEST_CASE("caps parsing") {
  auto c = parse_caps("witness=100,hochster=20");
  CHECK(c.witness_budget == 100);
  CHECK(c.hochster_variables == 20);
  CHECK(c.vertex_dimension == kDefaultVertexDimensionCap);
  CHECK(parse_caps("").witness_budget == kDefaultWitnessBudget);
  CHECK_THROWS(parse_caps("speed=3"));
  CHECK_THROWS(parse_caps("witness=abc"));
}

TEST_CASE("slope check examples") {
  for (std::size_t n = 1; n <= 4; ++n) {
    auto v = check_slope_theorem(MonomialIdeal::maximal(n), 6);
    CHECK(v.status == Status::Pass);
    CHECK(witness_value(v, "slope") == "1");
  }
  auto c5 = check_slope_theorem(cover_ideal(cycle_graph(5)), 6);
  CHECK(c5.status == Status::Pass);
  CHECK(witness_value(c5, "slope") == "5/2");
  CHECK(check_sandwich(tri, 4).status == Status::Pass);
  CHECK(check_slope_theorem(tri, 7).status == Status::Skip);
}

TEST_CASE("cover and cmvwc check examples") {
  CHECK(check_cover_vs_reg(complete_graph(2), 3).status == Status::Pass);
  CHECK(check_cover_vs_reg(cycle_graph(5), 2).status == Status::Pass);
  CHECK(check_cover_vs_reg(path_graph(4), 2).status == Status::Pass);
  CHECK(check_cover_vs_reg(Graph(3, {{0, 1}}), 2).status == Status::Pass);  // isolated vertex allowed here

  Filtration p4(cover_ideal(path_graph(4)), PowerType::SymbolicMin);
  for (int k = 1; k <= 2; ++k) {
    CHECK(p4.v(k) == static_cast<std::uint64_t>(p4.reg(k)));
    CHECK(p4.v(k) + 1 == p4.alpha(k));
  }
  Filtration k2(cover_ideal(complete_graph(2)), PowerType::SymbolicMin);
  for (int k = 1; k <= 3; ++k) {
    CHECK(k2.v(k) == static_cast<std::uint64_t>(k - 1));
    CHECK(k2.reg(k) == k - 1);
  }

  CHECK(check_cmvwc_equivalence(complete_graph(2), 3).status == Status::Pass);
  CHECK(check_cmvwc_equivalence(path_graph(4), 2).status == Status::Pass);
  auto c4 = check_cmvwc_equivalence(cycle_graph(4), 3);
  CHECK(c4.status == Status::Pass);
  CHECK(std::stoi(witness_value(c4, "k")) <= 2);
  CHECK(check_cmvwc_equivalence(Graph(3, {{0, 1}}), 2).status == Status::Skip);
}

TEST_CASE("upper bound check examples") {
  CHECK(check_upper_bounds(edge_ideal(cycle_graph(5)), 3).status == Status::Pass);
  CHECK(check_upper_bounds(tri, 3).status == Status::Pass);
  CHECK(check_upper_bounds(MonomialIdeal::maximal(3), 3).status == Status::Pass);
  Filtration m(MonomialIdeal::maximal(3), PowerType::SymbolicMin);
  for (int k = 1; k <= 4; ++k) CHECK(m.v(k) == static_cast<std::uint64_t>(k - 1));
  Filtration c5(edge_ideal(cycle_graph(5)), PowerType::SymbolicMin);
  for (int k = 1; k <= 3; ++k) CHECK(c5.v(k) <= static_cast<std::uint64_t>(2 * (k - 1) + 2));
}

TEST_CASE("criteria examples") {
  auto xyz = MonomialIdeal(3, {Monomial{1, 0, 0}, Monomial{0, 1, 1}});
  auto vs = check_criteria_suite(xyz, 3);
  CHECK(by_name(vs, "alpha-delta").status == Status::TrendPass);
  CHECK(by_name(vs, "nonequi").status == Status::TrendPass);

  auto tv = check_criteria_suite(tri, 3);
  CHECK(by_name(tv, "polymatroidal").status == Status::Pass);
  Filtration ord(tri, PowerType::Ordinary);
  for (int k = 1; k <= 3; ++k) {
    CHECK(ord.v(k) == static_cast<std::uint64_t>(2 * k - 1));
    CHECK(ord.reg(k) == 2 * k - 1);
  }

  for (const auto& G : {cycle_graph(6), path_graph(5), complete_graph(4), cycle_graph(4)}) {
    auto v = check_graph_class_matching(G);
    CHECK(v.status == Status::Pass);
    CHECK(v_number(edge_ideal(G)).v <= induced_matching_number(Hypergraph::from_graph(G)));
  }
}

TEST_CASE("persistence, stabilization and polarization checks") {
  CHECK(check_symbolic_persistence(tri, 4).status == Status::Pass);
  CHECK(check_ordinary_persistence(edge_ideal(cycle_graph(5)), 3).status == Status::Pass);
  CHECK(check_power_stabilization(tri, PowerType::Ordinary).status == Status::Pass);
  CHECK(check_variant_agreement(tri, 3).status == Status::Pass);
  CHECK(check_cover_polarization(cycle_graph(4), 3).status == Status::Pass);
  CHECK(check_gk_lift(path_graph(4), 3).status == Status::Pass);
  CHECK(check_second_alpha(cycle_graph(5)).status == Status::Pass);
  CHECK(check_oracles(tri).status == Status::Pass);

  auto bad = check_v_polarization(MonomialIdeal(4, {Monomial{0, 0, 2, 0}, Monomial{3, 0, 1, 2}}));
  CHECK(bad.status == Status::Fail);
  CHECK(witness_value(bad, "embedded-primes") == "yes");
  CHECK(witness_value(bad, "lhs") == "1");
  CHECK(witness_value(bad, "rhs") == "5");
  CHECK(check_v_polarization(MonomialIdeal(2, {Monomial{2, 0}, Monomial{1, 1}})).status == Status::Pass);
}

TEST_CASE("every fail verdict carries a witness") {
  auto reports = run_suite("polarization", SuiteOptions{});
  bool saw_fail = false;
  for (const auto& r : reports)
    for (const auto& v : r.checks)
      if (v.status == Status::Fail) {
        saw_fail = true;
        CHECK_FALSE(v.reason.empty());
        CHECK_FALSE(witness_value(v, "ideal").empty());
        CHECK_FALSE(witness_value(v, "lhs").empty());
        CHECK_FALSE(witness_value(v, "rhs").empty());
      }
  CHECK(saw_fail);
  CHECK(any_failure(reports));
}

TEST_CASE("suites are deterministic across worker counts") {
  SuiteOptions one;
  one.n_max = 4;
  one.max_k = 2;
  SuiteOptions three = one;
  three.jobs = 3;
  auto a = render_json("cover", run_suite("cover", one));
  auto b = render_json("cover", run_suite("cover", three));
  auto c = render_json("cover", run_suite("cover", one));
  CHECK(a == b);
  CHECK(a == c);
  CHECK_THROWS(run_suite("nonsense", one));
}

TEST_CASE("report JSON layout") {
  SuiteOptions o;
  o.n_max = 3;
  o.max_k = 2;
  auto reports = run_suite("cover", o);
  auto j = nlohmann::json::parse(render_json("cover", reports));
  CHECK(j["schema"] == kReportSchema);
  CHECK(j["suite"] == "cover");
  CHECK(j["summary"]["instances"] == reports.size());
  REQUIRE(j["reports"].size() == reports.size());
  const auto& r0 = j["reports"][0];
  CHECK(r0.contains("instance"));
  CHECK(r0["power"] == "symbolic-min");
  REQUIRE(r0["sequences"].size() == 2);
  CHECK(r0["sequences"][0]["k"] == 1);
  CHECK(r0["sequences"][0].contains("alpha"));
  CHECK(r0["sequences"][0].contains("v"));
  CHECK(r0["sequences"][0].contains("reg"));
  CHECK(r0["checks"][0]["name"] == "cover-vs-reg");
  CHECK(r0["checks"][0]["status"] == "pass");
  CHECK(r0.contains("fit"));
}

TEST_CASE("report CSV and fit JSON") {
  auto rep = filtration_report(MonomialIdeal::maximal(2), "m2", PowerType::Ordinary, 5, true);
  REQUIRE(rep.rows.size() == 5);
  auto csv = render_csv({rep});
  CHECK(csv.rfind("instance,power,k,alpha,v,reg\n", 0) == 0);
  CHECK(csv.find("m2,ordinary,3,3,2,2\n") != std::string::npos);
  CHECK(csv_escape("a,b") == "\"a,b\"");
  CHECK(csv_escape("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(csv_escape("plain") == "plain");
  QuasiLinearFit fit{q(5, 2), 2, {0, q(-1, 2)}, 1};
  auto fj = to_json(fit);
  CHECK(fj["slope"] == "5/2");
  CHECK(fj["period"] == 2);
  CHECK(fj["intercepts"][1] == "-1/2");
}
