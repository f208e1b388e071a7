#include "vnum/checks.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <sstream>
#include <thread>

#include "vnum/corpus.hpp"
#include "vnum/decomposition.hpp"
#include "vnum/errors.hpp"
#include "vnum/homology.hpp"
#include "vnum/polyhedron.hpp"
#include "vnum/symbolic.hpp"

namespace vnum {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::Skip:
      return "skip";
    case Status::TrendPass:
      return "trend-pass";
    case Status::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

Caps parse_caps(const std::string& text) {
  Caps caps;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("caps entry '" + item + "' needs key=value");
    std::string key = item.substr(0, eq);
    std::uint64_t value = 0;
    try {
      value = std::stoull(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw std::invalid_argument("caps entry '" + item + "' has a bad value");
    }
    if (key == "witness") {
      caps.witness_budget = value;
    } else if (key == "hochster") {
      caps.hochster_variables = value;
    } else if (key == "vertex") {
      caps.vertex_dimension = value;
    } else {
      throw std::invalid_argument("unknown caps key '" + key + "'");
    }
  }
  return caps;
}

Filtration::Filtration(MonomialIdeal I, PowerType type, Caps caps)
    : base_(std::move(I)), type_(type), caps_(caps) {}

Filtration::Entry& Filtration::entry(std::int64_t k) {
  auto& e = entries_[k];
  if (!e.ideal) e.ideal = filtration_member(base_, k, type_);
  return e;
}

const MonomialIdeal& Filtration::member(std::int64_t k) { return *entry(k).ideal; }

std::uint64_t Filtration::alpha(std::int64_t k) { return vnum::alpha(member(k)); }

std::uint64_t Filtration::v(std::int64_t k) {
  auto& e = entry(k);
  if (!e.v) e.v = v_number(*e.ideal, caps_.witness_budget).v;
  return *e.v;
}

int Filtration::reg(std::int64_t k) {
  auto& e = entry(k);
  if (!e.reg) e.reg = regularity(*e.ideal, caps_.hochster_variables);
  return *e.reg;
}

namespace {

using Witness = std::vector<std::pair<std::string, std::string>>;

std::string str(std::int64_t x) { return std::to_string(x); }
std::string str(std::uint64_t x) { return std::to_string(x); }
std::string str(int x) { return std::to_string(x); }

std::string describe(const MonomialIdeal& I) { return "ring " + std::to_string(I.nvars()) + ": " + to_string(I); }

std::string describe(const Graph& G) {
  std::string s = "graph " + std::to_string(G.vertex_count()) + ": {";
  bool first = true;
  for (auto [u, v] : G.edges()) {
    s += (first ? "" : ", ") + std::to_string(u + 1) + "-" + std::to_string(v + 1);
    first = false;
  }
  return s + "}";
}

Verdict named(std::string name) {
  Verdict v;
  v.name = std::move(name);
  return v;
}

void fail(Verdict& out, std::string reason, Witness w) {
  if (out.status == Status::Fail) return;
  out.status = Status::Fail;
  out.reason = std::move(reason);
  out.witness = std::move(w);
}

Verdict skip(Verdict out, std::string reason) {
  out.status = Status::Skip;
  out.reason = std::move(reason);
  return out;
}

// Resource and input-scope errors become skips; anything else propagates.
Verdict guarded(const std::string& name, const std::function<Verdict()>& body) {
  try {
    return body();
  } catch (const ResourceError& e) {
    return skip(named(name), std::string("resource cap: ") + e.what());
  } catch (const UnsupportedInputError& e) {
    return skip(named(name), std::string("unsupported input: ") + e.what());
  }
}

bool is_graph_edge_ideal(const MonomialIdeal& I) {
  return I.is_proper_nonzero() && I.is_square_free() &&
         std::all_of(I.generators().begin(), I.generators().end(), [](const Monomial& g) { return g.degree() == 2; });
}

// alpha - c <= v <= (k-1)d + v(I), the stable-prime lower bound and the square-free upper bound.
void sandwich_into(Verdict& out, Filtration& F, std::int64_t K) {
  const auto& I = F.base();
  const auto c = c_constant(I);
  const auto d = max_gen_degree(I);
  const auto v1 = F.v(1);
  for (std::int64_t k = 1; k <= K; ++k) {
    const auto a = F.alpha(k);
    const auto vk = F.v(k);
    if (vk + c < a)
      fail(out, "alpha(I^(k)) - c <= v(I^(k)) violated",
           {{"ideal", describe(I)}, {"k", str(k)}, {"lhs", str(a) + " - " + str(c)}, {"rhs", str(vk)}});
    const auto upper = static_cast<std::uint64_t>(k - 1) * d + v1;
    if (vk > upper)
      fail(out, "v(I^(k)) <= (k-1)d(I) + v(I) violated",
           {{"ideal", describe(I)}, {"k", str(k)}, {"lhs", str(vk)}, {"rhs", str(upper)}});
  }
}

Verdict slope_check(Filtration& F, std::int64_t K, std::optional<QuasiLinearFit>* fit_out) {
  Verdict out = named("slope");
  const auto& I = F.base();
  if (!I.is_square_free()) return skip(out, "Waldschmidt constant by LP needs a square-free ideal");
  if (K > 6) return skip(out, "window is capped at k <= 6");
  sandwich_into(out, F, K);
  const Rational ahat = waldschmidt_constant(I);
  std::vector<std::int64_t> seq;
  for (std::int64_t k = 1; k <= K; ++k) seq.push_back(static_cast<std::int64_t>(F.v(k)));
  std::optional<QuasiLinearFit> fit;
  for (std::int64_t k_min = 1; k_min + 4 <= K && !fit; ++k_min) fit = fit_quasilinear(seq, k_min);
  if (fit_out) *fit_out = fit;
  if (out.status == Status::Fail) return out;
  if (!fit) return skip(out, "no quasi-linear fit with period <= 3 in the window");
  if (fit->slope != ahat) {
    fail(out, "fitted slope differs from the Waldschmidt constant",
         {{"ideal", describe(I)}, {"k_max", str(K)}, {"lhs", to_string(fit->slope)}, {"rhs", to_string(ahat)}});
    return out;
  }
  out.witness = {{"slope", to_string(fit->slope)}, {"period", std::to_string(fit->period)},
                 {"k_min", str(fit->k_min)}, {"waldschmidt", to_string(ahat)}};
  return out;
}

// margin_k = reg - v over the window; a "k >> 0" claim is only ever trend-passed.
void trend_into(Verdict& out, Filtration& F, std::int64_t K, const std::string& what) {
  std::vector<std::int64_t> margin;
  for (std::int64_t k = 1; k <= K; ++k) {
    const auto vk = static_cast<std::int64_t>(F.v(k));
    const auto rk = static_cast<std::int64_t>(F.reg(k));
    margin.push_back(rk - vk);
    if (rk < vk && out.status != Status::Inconclusive) {
      out.status = Status::Inconclusive;
      out.reason = what + " violated inside the window";
      out.witness = {{"ideal", describe(F.base())}, {"k", str(k)}, {"lhs", str(vk)}, {"rhs", str(rk)}};
    }
  }
  if (out.status == Status::Inconclusive) return;
  const std::size_t from = margin.size() >= 3 ? margin.size() - 3 : 0;
  for (std::size_t i = from + 1; i < margin.size(); ++i) {
    if (margin[i] < margin[i - 1]) {
      out.status = Status::Inconclusive;
      out.reason = "margin reg - v shrinks on the window tail";
      out.witness = {{"ideal", describe(F.base())},
                     {"k", str(static_cast<std::int64_t>(i + 1))},
                     {"lhs", str(margin[i])},
                     {"rhs", str(margin[i - 1])}};
      return;
    }
  }
  out.status = Status::TrendPass;
  out.reason = "no violation for k <= " + str(K) + " and non-shrinking margin";
}

// v <= reg at every k of the window; exact statement.
void v_le_reg_into(Verdict& out, Filtration& F, std::int64_t K) {
  for (std::int64_t k = 1; k <= K; ++k) {
    const auto vk = F.v(k);
    const auto rk = F.reg(k);
    if (static_cast<std::int64_t>(vk) > rk)
      fail(out, "v <= reg violated for " + to_string(F.type()) + " powers",
           {{"ideal", describe(F.base())}, {"k", str(k)}, {"lhs", str(vk)}, {"rhs", str(rk)}});
  }
}

struct Context {
  Filtration sym;
  Filtration ord;
  Context(const MonomialIdeal& I, const Caps& caps)
      : sym(I, PowerType::SymbolicMin, caps), ord(I, PowerType::Ordinary, caps) {}
};

Verdict upper_bounds_check(Context& cx, std::int64_t K) {
  Verdict out = named("upper-bounds");
  auto& F = cx.sym;
  const auto& I = F.base();
  if (!I.is_square_free()) return skip(out, "bounds are stated for square-free ideals");
  const auto d = max_gen_degree(I);
  const auto v1 = F.v(1);
  for (std::int64_t k = 1; k <= K; ++k) {
    const auto bound = static_cast<std::uint64_t>(k - 1) * d + v1;
    if (F.v(k) > bound)
      fail(out, "v(I^(k)) <= (k-1)d(I) + v(I) violated",
           {{"ideal", describe(I)}, {"k", str(k)}, {"lhs", str(F.v(k))}, {"rhs", str(bound)}});
  }
  if (v1 + 1 <= d) {
    for (std::int64_t k = 1; k <= K; ++k) {
      const auto kd1 = static_cast<std::int64_t>(static_cast<std::uint64_t>(k) * d) - 1;
      const auto vk = static_cast<std::int64_t>(F.v(k));
      const auto rk = static_cast<std::int64_t>(F.reg(k));
      if (vk > kd1 || kd1 > rk)
        fail(out, "v(I^(k)) <= kd(I) - 1 <= reg(R/I^(k)) violated",
             {{"ideal", describe(I)}, {"k", str(k)}, {"lhs", str(vk) + " <= " + str(kd1)}, {"rhs", str(kd1) + " <= " + str(rk)}});
    }
  }
  // Ordinary powers: the same bound under strong persistence; always for edge ideals of graphs.
  if (is_graph_edge_ideal(I) || has_strong_persistence_upto(I, K)) {
    for (std::int64_t k = 1; k <= K; ++k) {
      const auto bound = static_cast<std::uint64_t>(k - 1) * d + v1;
      if (cx.ord.v(k) > bound)
        fail(out, "v(I^k) <= (k-1)d(I) + v(I) violated",
             {{"ideal", describe(I)}, {"k", str(k)}, {"lhs", str(cx.ord.v(k))}, {"rhs", str(bound)}});
    }
  }
  return out;
}

std::vector<Verdict> criteria_check(Context& cx, std::int64_t K, const Caps& caps) {
  const auto& I = cx.sym.base();
  std::vector<Verdict> out;
  const std::vector<std::string> names{"alpha-delta", "nonequi", "induced-matching", "uniform-matching",
                                       "polymatroidal", "edge-matching"};
  if (!I.is_square_free()) {
    for (const auto& n : names) out.push_back(skip(named(n), "criterion is stated for square-free ideals"));
    return out;
  }
  const auto d = max_gen_degree(I);
  const auto v1 = cx.sym.v(1);

  std::optional<Rational> ahat, delta;
  auto gap = [&]() -> bool {
    if (!ahat) ahat = waldschmidt_constant(I);
    if (!delta) delta = delta_invariant(I, caps.vertex_dimension);
    return *ahat < *delta;
  };

  out.push_back(guarded("alpha-delta", [&] {
    Verdict v = named("alpha-delta");
    if (!gap()) return skip(v, "hypothesis fails: Waldschmidt constant equals delta");
    trend_into(v, cx.sym, K, "v(I^(k)) <= reg(R/I^(k))");
    v.witness.insert(v.witness.begin(), {{"waldschmidt", to_string(*ahat)}, {"delta", to_string(*delta)}});
    return v;
  }));

  out.push_back(guarded("nonequi", [&] {
    Verdict v = named("nonequi");
    if (is_equigenerated(I)) return skip(v, "hypothesis fails: equigenerated");
    if (!gap()) {
      fail(v, "non-equigenerated but Waldschmidt constant is not below delta",
           {{"ideal", describe(I)}, {"lhs", to_string(*ahat)}, {"rhs", to_string(*delta)}});
      return v;
    }
    trend_into(v, cx.sym, K, "v(I^(k)) <= reg(R/I^(k))");
    v.witness.insert(v.witness.begin(), {{"waldschmidt", to_string(*ahat)}, {"delta", to_string(*delta)}});
    return v;
  }));

  const auto H = Hypergraph::from_ideal(I);
  out.push_back(guarded("induced-matching", [&] {
    Verdict v = named("induced-matching");
    const auto w = best_induced_matching_weight(H);
    if (v1 > w) return skip(v, "hypothesis fails: v(I) exceeds the best induced matching weight");
    v_le_reg_into(v, cx.sym, K);
    if (has_strong_persistence_upto(I, K)) v_le_reg_into(v, cx.ord, K);
    return v;
  }));

  out.push_back(guarded("uniform-matching", [&] {
    Verdict v = named("uniform-matching");
    if (!is_equigenerated(I)) return skip(v, "hypothesis fails: hypergraph is not uniform");
    const auto im = induced_matching_number(H);
    if (v1 > im * (d - 1)) return skip(v, "hypothesis fails: v(I) > im(H)(d-1)");
    v_le_reg_into(v, cx.sym, K);
    return v;
  }));

  out.push_back(guarded("polymatroidal", [&] {
    Verdict v = named("polymatroidal");
    if (!is_polymatroidal(I)) return skip(v, "hypothesis fails: not polymatroidal");
    bool linear_symbolic = false;
    for (std::int64_t k = 1; k <= K; ++k) {
      const auto dk1 = static_cast<std::int64_t>(static_cast<std::uint64_t>(k) * d) - 1;
      const auto vo = static_cast<std::int64_t>(cx.ord.v(k));
      const auto ro = static_cast<std::int64_t>(cx.ord.reg(k));
      if (vo != dk1 || ro != dk1)
        fail(v, "v(I^k) = dk - 1 = reg(R/I^k) violated",
             {{"ideal", describe(I)}, {"k", str(k)}, {"lhs", str(vo) + ", " + str(ro)}, {"rhs", str(dk1)}});
      const auto vs = static_cast<std::int64_t>(cx.sym.v(k));
      const auto rs = static_cast<std::int64_t>(cx.sym.reg(k));
      if (vs > dk1 || dk1 > rs)
        fail(v, "v(I^(k)) <= dk - 1 <= reg(R/I^(k)) violated",
             {{"ideal", describe(I)}, {"k", str(k)}, {"lhs", str(vs)}, {"rhs", str(dk1) + ", " + str(rs)}});
      const auto& Sk = cx.sym.member(k);
      if (k >= 2 && is_equigenerated(Sk) && rs == static_cast<std::int64_t>(max_gen_degree(Sk)) - 1)
        linear_symbolic = true;
    }
    if (linear_symbolic) {
      for (std::int64_t k = 1; k <= K; ++k) {
        const auto dk1 = static_cast<std::int64_t>(static_cast<std::uint64_t>(k) * d) - 1;
        const auto vs = static_cast<std::int64_t>(cx.sym.v(k));
        const auto rs = static_cast<std::int64_t>(cx.sym.reg(k));
        if (vs != dk1 || rs != dk1)
          fail(v, "linear symbolic power but v(I^(k)) = reg(R/I^(k)) = dk - 1 fails",
               {{"ideal", describe(I)}, {"k", str(k)}, {"lhs", str(vs) + ", " + str(rs)}, {"rhs", str(dk1)}});
      }
    }
    return v;
  }));

  out.push_back(guarded("edge-matching", [&] {
    Verdict v = named("edge-matching");
    if (!is_graph_edge_ideal(I)) return skip(v, "hypothesis fails: not the edge ideal of a graph");
    const auto im = induced_matching_number(H);
    if (v1 > im) return skip(v, "hypothesis fails: v(I(G)) > im(G)");
    v_le_reg_into(v, cx.ord, K);
    v_le_reg_into(v, cx.sym, K);
    return v;
  }));
  return out;
}

void finish_rows(FiltrationReport& report, Filtration& F, std::int64_t K, bool with_reg) {
  for (std::int64_t k = 1; k <= K; ++k) {
    FiltrationRow row;
    row.k = k;
    row.alpha = F.alpha(k);
    row.v = F.v(k);
    if (with_reg) {
      try {
        row.reg = F.reg(k);
      } catch (const ResourceError&) {
        // Left empty; the checks that need it report the skip.
      }
    }
    report.rows.push_back(row);
  }
}

}  // namespace

FiltrationReport filtration_report(const MonomialIdeal& I, const std::string& instance, PowerType type, std::int64_t K,
                                   bool with_reg, const Caps& caps) {
  FiltrationReport report;
  report.instance = instance;
  report.type = type;
  Filtration F(I, type, caps);
  finish_rows(report, F, K, with_reg);
  return report;
}

Verdict check_slope_theorem(const MonomialIdeal& I, std::int64_t K, const Caps& caps) {
  return guarded("slope", [&] {
    Filtration F(I, PowerType::SymbolicMin, caps);
    return slope_check(F, K, nullptr);
  });
}

Verdict check_sandwich(const MonomialIdeal& I, std::int64_t K, const Caps& caps) {
  return guarded("sandwich", [&] {
    Verdict out = named("sandwich");
    if (!I.is_square_free()) return skip(out, "upper bound is stated for square-free ideals");
    Filtration F(I, PowerType::SymbolicMin, caps);
    sandwich_into(out, F, K);
    return out;
  });
}

namespace {

Verdict cover_vs_reg_check(const Graph& G, Filtration& F, std::int64_t K) {
  Verdict out = named("cover-vs-reg");
  for (std::int64_t k = 1; k <= K; ++k) {
    const auto vk = F.v(k);
    const auto rk = F.reg(k);
    if (static_cast<std::int64_t>(vk) > rk)
      fail(out, "v(J(G)^(k)) <= reg(R/J(G)^(k)) violated",
           {{"graph", describe(G)}, {"ideal", describe(F.base())}, {"k", str(k)}, {"lhs", str(vk)}, {"rhs", str(rk)}});
  }
  return out;
}

Verdict cmvwc_check(const Graph& G, Filtration& F, std::int64_t K) {
  Verdict out = named("cmvwc");
  if (G.has_isolated_vertex()) return skip(out, "graph has isolated vertices");
  const bool cm = is_cm_very_well_covered(G);
  std::optional<std::int64_t> breaks;
  Witness at_break;
  for (std::int64_t k = 1; k <= K && !breaks; ++k) {
    const auto vk = static_cast<std::int64_t>(F.v(k));
    const auto rk = static_cast<std::int64_t>(F.reg(k));
    const auto a1 = static_cast<std::int64_t>(F.alpha(k)) - 1;
    if (vk != rk || rk != a1) {
      breaks = k;
      at_break = {{"graph", describe(G)}, {"k", str(k)}, {"v", str(vk)}, {"reg", str(rk)}, {"alpha-1", str(a1)}};
    }
  }
  if (cm && breaks) {
    fail(out, "Cohen-Macaulay very well-covered but the equality chain breaks", at_break);
  } else if (cm) {
    out.reason = "Cohen-Macaulay very well-covered; chain holds for k <= " + str(K);
  } else if (breaks) {
    out.reason = "not Cohen-Macaulay very well-covered; chain breaks at k = " + str(*breaks);
    out.witness = at_break;
  } else {
    out.status = Status::Inconclusive;
    out.reason = "inconclusive-at-K: chain holds for k <= " + str(K) + " but graph is not Cohen-Macaulay very well-covered";
    out.witness = {{"graph", describe(G)}, {"k_max", str(K)}};
  }
  return out;
}

}  // namespace

Verdict check_cover_vs_reg(const Graph& G, std::int64_t K, const Caps& caps) {
  return guarded("cover-vs-reg", [&] {
    if (G.edges().empty()) return skip(named("cover-vs-reg"), "graph has no edges");
    Filtration F(cover_ideal(G), PowerType::SymbolicMin, caps);
    return cover_vs_reg_check(G, F, K);
  });
}

Verdict check_cmvwc_equivalence(const Graph& G, std::int64_t K, const Caps& caps) {
  return guarded("cmvwc", [&] {
    if (G.edges().empty()) return skip(named("cmvwc"), "graph has no edges");
    Filtration F(cover_ideal(G), PowerType::SymbolicMin, caps);
    return cmvwc_check(G, F, K);
  });
}

Verdict check_upper_bounds(const MonomialIdeal& I, std::int64_t K, const Caps& caps) {
  return guarded("upper-bounds", [&] {
    Context cx(I, caps);
    return upper_bounds_check(cx, K);
  });
}

std::vector<Verdict> check_criteria_suite(const MonomialIdeal& I, std::int64_t K, const Caps& caps) {
  Context cx(I, caps);
  return criteria_check(cx, K, caps);
}

Verdict check_graph_class_matching(const Graph& G) {
  return guarded("class-matching", [&] {
    Verdict out = named("class-matching");
    if (G.edges().empty()) return skip(out, "graph has no edges");
    std::vector<std::string> classes;
    if (is_bipartite(G)) classes.push_back("bipartite");
    if (is_chordal(G)) classes.push_back("chordal");
    if (!G.has_isolated_vertex() && is_very_well_covered(G)) classes.push_back("very well-covered");
    const std::size_t n = G.vertex_count();
    if (n >= 3 && n != 5 && canonical_form(G) == canonical_form(cycle_graph(n))) classes.push_back("cycle");
    if (classes.empty()) return skip(out, "graph is in none of the listed classes");
    const auto I = edge_ideal(G);
    const auto v = v_number(I).v;
    const auto im = induced_matching_number(Hypergraph::from_graph(G));
    std::string joined;
    for (const auto& c : classes) joined += (joined.empty() ? "" : ", ") + c;
    if (v > im)
      fail(out, "v(I(G)) <= im(G) violated for a graph in a listed class",
           {{"graph", describe(G)}, {"classes", joined}, {"lhs", str(v)}, {"rhs", str(im)}});
    else
      out.reason = joined;
    return out;
  });
}

Verdict check_power_stabilization(const MonomialIdeal& I, PowerType type) {
  return guarded("power-stabilization", [&] {
    Verdict out = named("power-stabilization");
    if (type == PowerType::Ordinary) {
      out.reason = "r = 1";
      out.witness = {{"r", "1"}};
      return out;
    }
    for (std::int64_t r = 1; r <= 3; ++r) {
      const auto Ir = filtration_member(I, r, type);
      bool holds = true;
      for (std::int64_t k = 2; k * r <= 6 && holds; ++k) holds = filtration_member(I, r * k, type) == power(Ir, k);
      if (holds) {
        out.reason = "found r = " + str(r) + " for kr <= 6";
        out.witness = {{"r", str(r)}};
        return out;
      }
    }
    out.status = Status::Inconclusive;
    out.reason = "not found in window (r <= 3, kr <= 6)";
    out.witness = {{"ideal", describe(I)}};
    return out;
  });
}

Verdict check_symbolic_persistence(const MonomialIdeal& I, std::int64_t K) {
  return guarded("symbolic-persistence", [&] {
    Verdict out = named("symbolic-persistence");
    if (!I.is_proper_nonzero()) return skip(out, "needs a proper nonzero ideal");
    for (std::int64_t k = 2; k <= K; ++k) {
      auto lhs = colon(symbolic_power(I, k), I);
      auto rhs = symbolic_power(I, k - 1);
      if (lhs != rhs)
        fail(out, "(I^(k) : I) = I^(k-1) violated",
             {{"ideal", describe(I)}, {"k", str(k)}, {"lhs", to_string(lhs)}, {"rhs", to_string(rhs)}});
    }
    return out;
  });
}

Verdict check_ordinary_persistence(const MonomialIdeal& I, std::int64_t K) {
  return guarded("ordinary-persistence", [&] {
    Verdict out = named("ordinary-persistence");
    if (!I.is_proper_nonzero()) return skip(out, "needs a proper nonzero ideal");
    for (std::int64_t k = 1; k <= K; ++k) {
      auto lhs = colon(power(I, k + 1), I);
      auto rhs = power(I, k);
      if (lhs != rhs)
        fail(out, "(I^{k+1} : I) = I^k violated",
             {{"ideal", describe(I)}, {"k", str(k)}, {"lhs", to_string(lhs)}, {"rhs", to_string(rhs)}});
    }
    return out;
  });
}

Verdict check_variant_agreement(const MonomialIdeal& I, std::int64_t K) {
  return guarded("variant-agreement", [&] {
    Verdict out = named("variant-agreement");
    if (!I.is_square_free()) return skip(out, "variants may differ when embedded primes exist");
    for (std::int64_t k = 1; k <= K; ++k) {
      auto a = symbolic_power(I, k, SymbolicPowerVariant::Min);
      auto b = symbolic_power(I, k, SymbolicPowerVariant::Ass);
      if (a != b)
        fail(out, "Min and Ass symbolic powers differ on a square-free ideal",
             {{"ideal", describe(I)}, {"k", str(k)}, {"lhs", to_string(a)}, {"rhs", to_string(b)}});
    }
    return out;
  });
}

Verdict check_v_polarization(const MonomialIdeal& I, const Caps& caps) {
  return guarded("v-polarization", [&] {
    Verdict out = named("v-polarization");
    if (!I.is_proper_nonzero()) return skip(out, "needs a proper nonzero ideal");
    const auto P = polarize(I).ideal;
    const auto a = v_number(I, caps.witness_budget).v;
    const auto b = v_number(P, caps.witness_budget).v;
    if (a != b) {
      const bool embedded = associated_primes(I).size() != minimal_primes(I).size();
      fail(out, "v(I^P) = v(I) violated",
           {{"ideal", describe(I)}, {"lhs", str(b)}, {"rhs", str(a)}, {"embedded-primes", embedded ? "yes" : "no"}});
    }
    return out;
  });
}

Verdict check_cover_polarization(const Graph& G, std::int64_t K) {
  return guarded("cover-polarization", [&] {
    Verdict out = named("cover-polarization");
    if (G.edges().empty()) return skip(out, "graph has no edges");
    for (std::int64_t k = 1; k <= K; ++k)
      if (!cover_polarization_check(G, k))
        fail(out, "polarization of J(G)^(k) differs from J(G_k)", {{"graph", describe(G)}, {"k", str(k)}});
    return out;
  });
}

Verdict check_gk_lift(const Graph& G, std::int64_t K, const Caps& caps) {
  return guarded("gk-lift", [&] {
    Verdict out = named("gk-lift");
    if (G.edges().empty() || G.has_isolated_vertex()) return skip(out, "needs a graph without isolated vertices");
    if (!is_very_well_covered(G)) return skip(out, "hypothesis fails: not very well-covered");
    const bool cm = is_cohen_macaulay(edge_ideal(G));
    for (std::int64_t k = 2; k <= K; ++k) {
      auto Gk = fakhari_gk(G, k).graph;
      if (Gk.vertex_count() > caps.hochster_variables) throw ResourceError("G_k exceeds the Hochster variable cap");
      if (!is_very_well_covered(Gk))
        fail(out, "G very well-covered but G_k is not", {{"graph", describe(G)}, {"k", str(k)}});
      if (cm && !is_cohen_macaulay(edge_ideal(Gk)))
        fail(out, "G Cohen-Macaulay very well-covered but G_k is not Cohen-Macaulay",
             {{"graph", describe(G)}, {"k", str(k)}});
    }
    return out;
  });
}

Verdict check_second_alpha(const Graph& G) {
  return guarded("second-alpha", [&] {
    Verdict out = named("second-alpha");
    if (G.edges().empty()) return skip(out, "graph has no edges");
    const auto J = cover_ideal(G);
    const auto J2 = symbolic_power(J, 2);
    Rational half_alpha2(static_cast<long>(alpha(J2)), 2L);
    half_alpha2.canonicalize();
    const Rational ahat = waldschmidt_constant(J);
    if (ahat != half_alpha2)
      fail(out, "Waldschmidt constant of J(G) differs from alpha(J(G)^(2))/2",
           {{"graph", describe(G)}, {"lhs", to_string(ahat)}, {"rhs", to_string(half_alpha2)}});
    if (odd_cycle_condition(G)) {
      const std::size_t n = G.vertex_count();
      const auto top = MonomialIdeal(n, {Monomial::from_mask(n, n >= 64 ? ~0ULL : (1ULL << n) - 1)});
      const auto rhs = sum(power(J, 2), top);
      if (J2 != rhs)
        fail(out, "J(G)^(2) = J(G)^2 + (x1...xn) violated",
             {{"graph", describe(G)}, {"lhs", to_string(J2)}, {"rhs", to_string(rhs)}});
      Rational half_n(static_cast<long>(n), 2L);
      half_n.canonicalize();
      const Rational expect = std::min(Rational(static_cast<long>(alpha(J))), half_n);
      if (half_alpha2 != expect)
        fail(out, "alpha(J(G)^(2))/2 = min(alpha(J(G)), n/2) violated",
             {{"graph", describe(G)}, {"lhs", to_string(half_alpha2)}, {"rhs", to_string(expect)}});
      if (out.status == Status::Pass) out.reason = "odd-cycle condition holds";
    }
    return out;
  });
}

Verdict check_oracles(const MonomialIdeal& I, const Caps& caps) {
  return guarded("oracles", [&] {
    Verdict out = named("oracles");
    if (!I.is_proper_nonzero()) return skip(out, "needs a proper nonzero ideal");
    // Generator counts sit at homological degree 1 of R/I.
    const auto table = betti_numbers(polarize(I).ideal, caps.hochster_variables);
    std::map<int, std::int64_t> counts;
    for (const auto& g : I.generators()) ++counts[static_cast<int>(g.degree())];
    std::map<int, std::int64_t> first;
    for (const auto& [ij, b] : table)
      if (ij.first == 1 && b != 0) first[ij.second] = b;
    if (first != counts)
      fail(out, "Betti numbers in homological degree 1 differ from generator counts", {{"ideal", describe(I)}});

    std::vector<MonomialIdeal> comps;
    for (const auto& c : irreducible_decomposition(I)) comps.push_back(c.ideal(I.nvars()));
    const auto back = intersect(comps);
    if (back != I)
      fail(out, "irreducible components do not intersect back to the ideal",
           {{"ideal", describe(I)}, {"lhs", to_string(back)}, {"rhs", to_string(I)}});

    if (I.is_square_free()) {
      const auto SP = symbolic_polyhedron(I);
      const Rational lp = waldschmidt_constant(I);
      if (SP.dimension() <= caps.vertex_dimension) {
        auto verts = enumerate_vertices(SP, caps.vertex_dimension);
        Rational best = coordinate_sum(verts.front());
        for (const auto& v : verts) best = std::min(best, coordinate_sum(v));
        if (best != lp)
          fail(out, "LP optimum differs from the vertex-scan optimum",
               {{"ideal", describe(I)}, {"lhs", to_string(lp)}, {"rhs", to_string(best)}});
      }
      for (std::int64_t k = 2; k <= 3; ++k) {
        auto a = symbolic_power(I, k);
        auto b = symbolic_power_square_free(I, k);
        if (a != b)
          fail(out, "saturation route differs from the prime-power intersection",
               {{"ideal", describe(I)}, {"k", str(k)}, {"lhs", to_string(a)}, {"rhs", to_string(b)}});
      }
    }
    return out;
  });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"cover",       "cmvwc",        "slope",   "bounds", "criteria",
                                              "persistence", "polarization", "oracles", "all"};
  return names;
}

namespace {

using Task = std::function<FiltrationReport()>;

std::vector<FiltrationReport> run_tasks(const std::vector<Task>& tasks, unsigned jobs) {
  std::vector<FiltrationReport> out(tasks.size());
  if (jobs <= 1 || tasks.size() <= 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) out[i] = tasks[i]();
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(tasks.size());
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) {
      try {
        out[i] = tasks[i]();
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < std::min<std::size_t>(jobs, tasks.size()); ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

std::vector<Graph> whiskered_small_bases() {
  std::vector<Graph> out;
  for (std::size_t n = 1; n <= 3; ++n)
    for (const auto& base : graphs_on(n, GraphFilter::All)) out.push_back(whisker_graph(base));
  return out;
}

void add_cover_tasks(std::vector<Task>& tasks, const SuiteOptions& o) {
  for (const auto& G : graphs_up_to(o.n_max, GraphFilter::NoIsolated)) {
    tasks.push_back([G, o] {
      FiltrationReport r;
      r.instance = describe(G);
      r.type = PowerType::SymbolicMin;
      Filtration F(cover_ideal(G), PowerType::SymbolicMin, o.caps);
      r.checks.push_back(guarded("cover-vs-reg", [&] { return cover_vs_reg_check(G, F, o.max_k); }));
      finish_rows(r, F, o.max_k, true);
      return r;
    });
  }
}

void add_cmvwc_tasks(std::vector<Task>& tasks, const SuiteOptions& o) {
  auto graphs = graphs_up_to(o.n_max, GraphFilter::NoIsolated);
  for (auto& w : whiskered_small_bases()) graphs.push_back(w);
  for (const auto& G : graphs) {
    tasks.push_back([G, o] {
      FiltrationReport r;
      r.instance = describe(G);
      r.type = PowerType::SymbolicMin;
      Filtration F(cover_ideal(G), PowerType::SymbolicMin, o.caps);
      r.checks.push_back(guarded("cmvwc", [&] { return cmvwc_check(G, F, o.max_k); }));
      r.checks.push_back(check_gk_lift(G, std::min<std::int64_t>(o.max_k, 3), o.caps));
      finish_rows(r, F, o.max_k, true);
      return r;
    });
  }
}

void add_slope_tasks(std::vector<Task>& tasks, const SuiteOptions& o) {
  const std::int64_t K = 6;
  std::vector<std::pair<std::string, MonomialIdeal>> ideals;
  for (std::size_t n = 1; n <= std::min<std::size_t>(o.n_max, 4); ++n)
    ideals.emplace_back("maximal ideal, ring " + std::to_string(n), MonomialIdeal::maximal(n));
  for (const auto& G : graphs_up_to(std::min<std::size_t>(o.n_max, 5), GraphFilter::Connected)) {
    ideals.emplace_back("J(" + describe(G) + ")", cover_ideal(G));
    ideals.emplace_back("I(" + describe(G) + ")", edge_ideal(G));
  }
  ideals.emplace_back("J(C5)", cover_ideal(cycle_graph(5)));
  for (const auto& [name, I] : ideals) {
    tasks.push_back([name = name, I = I, o, K] {
      FiltrationReport r;
      r.instance = name + " " + describe(I);
      r.type = PowerType::SymbolicMin;
      Filtration F(I, PowerType::SymbolicMin, o.caps);
      r.checks.push_back(guarded("slope", [&] { return slope_check(F, K, &r.fit); }));
      r.checks.push_back(check_variant_agreement(I, 2));
      finish_rows(r, F, K, false);
      return r;
    });
  }
  for (const auto& G : graphs_up_to(std::min<std::size_t>(o.n_max, 6), GraphFilter::NoIsolated)) {
    tasks.push_back([G, o] {
      FiltrationReport r;
      r.instance = describe(G);
      r.type = PowerType::SymbolicMin;
      r.checks.push_back(check_second_alpha(G));
      return r;
    });
  }
}

std::vector<MonomialIdeal> square_free_corpus(const SuiteOptions& o) {
  return square_free_ideals(std::min<std::size_t>(o.n_max, 5), 6);
}

void add_bounds_tasks(std::vector<Task>& tasks, const SuiteOptions& o) {
  const std::int64_t K = std::max<std::int64_t>(o.max_k, 1);
  for (const auto& I : square_free_corpus(o)) {
    tasks.push_back([I, o, K] {
      FiltrationReport r;
      r.instance = describe(I);
      r.type = PowerType::SymbolicMin;
      Context cx(I, o.caps);
      r.checks.push_back(guarded("sandwich", [&] {
        Verdict v = named("sandwich");
        sandwich_into(v, cx.sym, K);
        return v;
      }));
      r.checks.push_back(guarded("upper-bounds", [&] { return upper_bounds_check(cx, K); }));
      r.checks.push_back(check_variant_agreement(I, 2));
      finish_rows(r, cx.sym, K, false);
      return r;
    });
  }
}

void add_criteria_tasks(std::vector<Task>& tasks, const SuiteOptions& o) {
  const std::int64_t K = std::max<std::int64_t>(o.max_k, 1);
  for (const auto& I : square_free_corpus(o)) {
    tasks.push_back([I, o, K] {
      FiltrationReport r;
      r.instance = describe(I);
      r.type = PowerType::SymbolicMin;
      Context cx(I, o.caps);
      r.checks = criteria_check(cx, K, o.caps);
      return r;
    });
  }
  for (const auto& G : graphs_up_to(std::min<std::size_t>(o.n_max, 5), GraphFilter::AnyWithEdge)) {
    tasks.push_back([G, o, K] {
      FiltrationReport r;
      r.instance = describe(G);
      r.type = PowerType::Ordinary;
      Context cx(edge_ideal(G), o.caps);
      r.checks.push_back(check_graph_class_matching(G));
      for (auto& v : criteria_check(cx, K, o.caps))
        if (v.name == "edge-matching") r.checks.push_back(std::move(v));
      return r;
    });
  }
}

void add_persistence_tasks(std::vector<Task>& tasks, const SuiteOptions& o) {
  for (const auto& I : square_free_corpus(o)) {
    tasks.push_back([I] {
      FiltrationReport r;
      r.instance = describe(I);
      r.type = PowerType::SymbolicMin;
      r.checks.push_back(check_symbolic_persistence(I, 4));
      r.checks.push_back(check_power_stabilization(I, PowerType::SymbolicMin));
      return r;
    });
  }
  for (const auto& G : graphs_up_to(std::min<std::size_t>(o.n_max, 5), GraphFilter::AnyWithEdge)) {
    tasks.push_back([G, o] {
      FiltrationReport r;
      r.instance = describe(G);
      r.type = PowerType::Ordinary;
      r.checks.push_back(check_ordinary_persistence(edge_ideal(G), std::max<std::int64_t>(o.max_k, 1)));
      r.checks.push_back(check_power_stabilization(edge_ideal(G), PowerType::Ordinary));
      return r;
    });
  }
}

void add_polarization_tasks(std::vector<Task>& tasks, const SuiteOptions& o) {
  for (const auto& I : random_ideals(50, 4, 3, 4, o.seed)) {
    tasks.push_back([I, o] {
      FiltrationReport r;
      r.instance = describe(I);
      r.type = PowerType::Ordinary;
      r.checks.push_back(check_v_polarization(I, o.caps));
      return r;
    });
  }
  for (const auto& G : graphs_up_to(std::min<std::size_t>(o.n_max, 4), GraphFilter::AnyWithEdge)) {
    tasks.push_back([G, o] {
      FiltrationReport r;
      r.instance = describe(G);
      r.type = PowerType::SymbolicMin;
      r.checks.push_back(check_cover_polarization(G, std::max<std::int64_t>(o.max_k, 1)));
      return r;
    });
  }
}

void add_oracle_tasks(std::vector<Task>& tasks, const SuiteOptions& o) {
  std::vector<MonomialIdeal> ideals = square_free_corpus(o);
  for (auto& I : random_ideals(50, 4, 3, 4, o.seed)) ideals.push_back(std::move(I));
  for (const auto& I : ideals) {
    tasks.push_back([I, o] {
      FiltrationReport r;
      r.instance = describe(I);
      r.type = PowerType::Ordinary;
      r.checks.push_back(check_oracles(I, o.caps));
      return r;
    });
  }
}

}  // namespace

std::vector<FiltrationReport> run_suite(const std::string& name, const SuiteOptions& options) {
  std::vector<Task> tasks;
  const bool all = name == "all";
  bool known = false;
  auto want = [&](const char* s) {
    bool w = all || name == s;
    known = known || w;
    return w;
  };
  if (want("cover")) add_cover_tasks(tasks, options);
  if (want("cmvwc")) add_cmvwc_tasks(tasks, options);
  if (want("slope")) add_slope_tasks(tasks, options);
  if (want("bounds")) add_bounds_tasks(tasks, options);
  if (want("criteria")) add_criteria_tasks(tasks, options);
  if (want("persistence")) add_persistence_tasks(tasks, options);
  if (want("polarization")) add_polarization_tasks(tasks, options);
  if (want("oracles")) add_oracle_tasks(tasks, options);
  if (!known) throw std::invalid_argument("unknown suite '" + name + "'");
  return run_tasks(tasks, options.jobs);
}

bool any_failure(const std::vector<FiltrationReport>& reports) {
  for (const auto& r : reports)
    for (const auto& c : r.checks)
      if (c.status == Status::Fail) return true;
  return false;
}

}  // namespace vnum
