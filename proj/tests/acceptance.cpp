// Prints one PASS/FAIL line per acceptance criterion and exits 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "vnum/checks.hpp"
#include "vnum/combinatorics.hpp"
#include "vnum/corpus.hpp"
#include "vnum/fit.hpp"
#include "vnum/homology.hpp"
#include "vnum/symbolic.hpp"
#include "vnum/vnumber.hpp"

using namespace vnum;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
};

Rational q(std::int64_t p, std::int64_t r = 1) {
  Rational v(static_cast<long>(p), static_cast<long>(r));
  v.canonicalize();
  return v;
}

std::string witness_text(const Verdict& v) {
  std::string s;
  for (const auto& [k, val] : v.witness) s += (s.empty() ? "" : ", ") + k + "=" + val;
  return s;
}

// Notes the first offending verdict and flips the outcome.
void expect(Outcome& o, const Verdict& v, Status want, std::size_t& bad, std::string& first) {
  if (v.status == want) return;
  o.pass = false;
  if (bad++ == 0) first = v.name + " " + to_string(v.status) + ": " + v.reason + " [" + witness_text(v) + "]";
}

std::vector<MonomialIdeal> square_free_corpus(std::size_t max_vars, std::size_t max_gens) {
  std::vector<MonomialIdeal> out;
  for (std::size_t m = 1; m <= max_vars; ++m)
    for (auto& I : square_free_ideals(m, max_gens)) out.push_back(std::move(I));
  return out;
}

std::string graph_text(const Graph& G) {
  std::string s = "{";
  for (auto [u, v] : G.edges()) s += (s.size() > 1 ? "," : "") + std::to_string(u + 1) + "-" + std::to_string(v + 1);
  return s + "}";
}

Outcome cover_inequality() {
  Outcome o;
  std::size_t n = 0, bad = 0;
  std::string first;
  for (const auto& G : graphs_up_to(4, GraphFilter::NoIsolated)) {
    ++n;
    expect(o, check_cover_vs_reg(G, 3), Status::Pass, bad, first);
  }
  for (const auto& G : graphs_on(5, GraphFilter::NoIsolated)) {
    ++n;
    expect(o, check_cover_vs_reg(G, 2), Status::Pass, bad, first);
  }
  o.detail << n << " graphs, " << bad << " violations";
  if (bad) o.detail << "; first: " << first;
  return o;
}

Outcome cmvwc_chain() {
  Outcome o;
  std::vector<std::pair<std::string, Graph>> holds = {{"K2", complete_graph(2)}, {"P4", path_graph(4)}};
  for (std::size_t n = 1; n <= 3; ++n)
    for (const auto& B : graphs_on(n, GraphFilter::All)) holds.emplace_back("W" + graph_text(B) + "/" + std::to_string(n), whisker_graph(B));
  std::size_t ok = 0;
  for (const auto& [name, G] : holds) {
    Filtration F(cover_ideal(G), PowerType::SymbolicMin);
    bool chain = is_cm_very_well_covered(G);
    for (int k = 1; k <= 3 && chain; ++k)
      chain = F.v(k) == static_cast<std::uint64_t>(F.reg(k)) && F.v(k) + 1 == F.alpha(k);
    if (chain) {
      ++ok;
    } else {
      o.pass = false;
      o.detail << name << " breaks the chain; ";
    }
  }
  o.detail << ok << "/" << holds.size() << " CM very well-covered graphs hold v = reg = alpha-1 for k <= 3";
  for (const auto& [name, G] : {std::pair{std::string("C4"), cycle_graph(4)}, std::pair{std::string("C5"), cycle_graph(5)}}) {
    Filtration F(cover_ideal(G), PowerType::SymbolicMin);
    int breaks = 0;
    for (int k = 1; k <= 2 && !breaks; ++k) {
      const auto v = F.v(k);
      const auto r = F.reg(k);
      const auto a1 = F.alpha(k) - 1;
      if (v != static_cast<std::uint64_t>(r) || static_cast<std::uint64_t>(r) != a1) {
        breaks = k;
        o.detail << "; " << name << " breaks at k=" << k << " (v=" << v << ", reg=" << r << ", alpha-1=" << a1 << ")";
      }
    }
    if (!breaks) {
      o.pass = false;
      o.detail << "; " << name << " does not break for k <= 2";
    }
  }
  return o;
}

Outcome waldschmidt_values() {
  Outcome o;
  struct Case {
    std::string name;
    MonomialIdeal I;
    int k;
    Rational expected;
  };
  const std::vector<Case> cases = {
      {"(xy,yz,xz)", edge_ideal(complete_graph(3)), 2, q(3, 2)},
      {"I(C5)", edge_ideal(cycle_graph(5)), 3, q(5, 3)},
      {"J(C5)", cover_ideal(cycle_graph(5)), 2, q(5, 2)},
  };
  for (const auto& c : cases) {
    const Rational lp = waldschmidt_constant(c.I);
    const Rational via_alpha = q(static_cast<std::int64_t>(alpha(symbolic_power(c.I, c.k))), c.k);
    const bool ok = lp == c.expected && via_alpha == c.expected;
    o.pass = o.pass && ok;
    o.detail << c.name << ": LP " << to_string(lp) << ", alpha(I^(" << c.k << "))/" << c.k << " = " << to_string(via_alpha)
             << (ok ? "" : " (expected " + to_string(c.expected) + ")") << "; ";
  }
  return o;
}

std::vector<std::int64_t> as_signed(const std::vector<std::uint64_t>& v) { return {v.begin(), v.end()}; }

Outcome slope_window() {
  Outcome o;
  const auto J = cover_ideal(cycle_graph(5));
  const auto seq = as_signed(v_sequence(J, 5, PowerType::SymbolicMin));
  const auto fit = fit_quasilinear(seq, 1);
  const Rational half_alpha2 = q(static_cast<std::int64_t>(alpha(symbolic_power(J, 2))), 2);
  o.detail << "J(C5) v = [";
  for (std::size_t i = 0; i < seq.size(); ++i) o.detail << (i ? "," : "") << seq[i];
  o.detail << "]";
  if (fit && fit->slope == q(5, 2) && half_alpha2 == q(5, 2)) {
    o.detail << ", slope 5/2, period " << fit->period;
  } else {
    o.pass = false;
    o.detail << (fit ? ", slope " + to_string(fit->slope) : ", no fit") << ", alpha(J^(2))/2 = " << to_string(half_alpha2);
  }
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto s = as_signed(v_sequence(MonomialIdeal::maximal(n), 5, PowerType::Ordinary));
    bool exact = true;
    for (std::size_t i = 0; i < s.size(); ++i) exact = exact && s[i] == static_cast<std::int64_t>(i);
    const auto f = fit_quasilinear(s, 1);
    if (!exact || !f || f->slope != 1) {
      o.pass = false;
      o.detail << "; maximal ideal in " << n << " variables off";
    }
  }
  o.detail << "; maximal ideals n <= 4: v(m^k) = k-1, slope 1";
  return o;
}

Outcome sandwich() {
  Outcome o;
  std::size_t n = 0, bad = 0;
  std::string first;
  for (const auto& I : square_free_corpus(5, 6)) {
    ++n;
    expect(o, check_sandwich(I, 4), Status::Pass, bad, first);
  }
  o.detail << n << " square-free ideals, k <= 4, " << bad << " violations";
  if (bad) o.detail << "; first: " << first;
  return o;
}

Outcome polarization() {
  Outcome o;
  std::vector<MonomialIdeal> corpus;
  for (const auto& I : random_ideals(200, 4, 3, 4, 1)) {
    if (!I.is_square_free()) corpus.push_back(I);
    if (corpus.size() == 50) break;
  }
  std::size_t bad = 0, embedded = 0;
  std::string first;
  for (const auto& I : corpus) {
    const auto v = check_v_polarization(I);
    if (v.status == Status::Fail) {
      for (const auto& [k, val] : v.witness)
        if (k == "embedded-primes" && val == "yes") ++embedded;
    }
    expect(o, v, Status::Pass, bad, first);
  }
  o.detail << "v(I^P) = v(I): " << corpus.size() << " random ideals, " << bad << " violations (" << embedded
           << " with embedded primes)";
  if (bad) o.detail << "; first: " << first;

  std::size_t graphs = 0, gbad = 0;
  std::string gfirst;
  Outcome cover;
  for (const auto& G : graphs_up_to(4, GraphFilter::AnyWithEdge)) {
    ++graphs;
    expect(cover, check_cover_polarization(G, 3), Status::Pass, gbad, gfirst);
  }
  o.pass = o.pass && cover.pass;
  o.detail << "; (J(G)^(k))^P = J(G_k): " << graphs << " graphs, k <= 3, " << gbad << " violations";
  if (gbad) o.detail << "; first: " << gfirst;
  return o;
}

Outcome polymatroidal_chain() {
  Outcome o;
  std::size_t n = 0;
  for (const auto& I : square_free_corpus(5, 10)) {
    if (!is_polymatroidal(I)) continue;
    ++n;
    const auto d = static_cast<std::int64_t>(max_gen_degree(I));
    Filtration ord(I, PowerType::Ordinary), sym(I, PowerType::SymbolicMin);
    for (std::int64_t k = 1; k <= 3; ++k) {
      const auto dk1 = d * k - 1;
      const auto vo = static_cast<std::int64_t>(ord.v(k));
      const auto ro = ord.reg(k);
      const auto vs = static_cast<std::int64_t>(sym.v(k));
      const auto rs = sym.reg(k);
      if (vo != dk1 || ro != dk1 || vs > dk1 || dk1 > rs) {
        if (o.pass)
          o.detail << "first violation " << to_string(I) << " k=" << k << " v(I^k)=" << vo << " reg(R/I^k)=" << ro
                   << " v(I^(k))=" << vs << " reg(R/I^(k))=" << rs << " dk-1=" << dk1 << "; ";
        o.pass = false;
      }
    }
  }
  o.detail << n << " polymatroidal ideals on <= 5 variables (triangle included), k <= 3";
  return o;
}

Outcome alpha_delta_gap() {
  Outcome o;
  std::size_t n = 0, bad = 0;
  std::string first;
  for (const auto& I : square_free_corpus(5, 6)) {
    if (is_equigenerated(I)) continue;
    ++n;
    const auto a = waldschmidt_constant(I);
    const auto d = delta_invariant(I);
    if (!(a < d)) {
      o.pass = false;
      if (bad++ == 0) first = to_string(I) + ": waldschmidt " + to_string(a) + " >= delta " + to_string(d);
      continue;
    }
    for (const auto& v : check_criteria_suite(I, 3))
      if (v.name == "nonequi") expect(o, v, Status::TrendPass, bad, first);
  }
  o.detail << n << " non-equigenerated square-free ideals, waldschmidt < delta and trend-pass for k <= 3, " << bad
           << " exceptions";
  if (bad) o.detail << "; first: " << first;
  return o;
}

Outcome persistence() {
  Outcome o;
  std::size_t n = 0, g = 0, bad = 0;
  std::string first;
  for (const auto& I : square_free_corpus(5, 6)) {
    ++n;
    expect(o, check_symbolic_persistence(I, 4), Status::Pass, bad, first);
  }
  for (const auto& G : graphs_up_to(5, GraphFilter::AnyWithEdge)) {
    ++g;
    expect(o, check_ordinary_persistence(edge_ideal(G), 3), Status::Pass, bad, first);
  }
  o.detail << n << " square-free ideals (k <= 4), " << g << " edge ideals (k <= 3), " << bad << " violations";
  if (bad) o.detail << "; first: " << first;
  return o;
}

Outcome oracles() {
  Outcome o;
  std::size_t n = 0, bad = 0;
  std::string first;
  auto corpus = square_free_corpus(5, 6);
  for (auto& I : random_ideals(50, 4, 3, 4, 1)) corpus.push_back(std::move(I));
  for (const auto& I : corpus) {
    ++n;
    expect(o, check_oracles(I), Status::Pass, bad, first);
  }
  o.detail << n << " ideals, " << bad << " mismatches";
  if (bad) o.detail << "; first: " << first;
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"cover ideal: v <= reg", cover_inequality},
      {"CM very well-covered equality chain", cmvwc_chain},
      {"Waldschmidt constant by LP", waldschmidt_values},
      {"slope window", slope_window},
      {"sandwich bounds", sandwich},
      {"polarization invariances", polarization},
      {"polymatroidal chain", polymatroidal_chain},
      {"waldschmidt/delta gap", alpha_delta_gap},
      {"persistence identities", persistence},
      {"internal oracles", oracles},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "error: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failures;
    std::printf("%s %2zu %s: %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.str().c_str(), secs);
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
