#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "vnum/checks.hpp"
#include "vnum/combinatorics.hpp"
#include "vnum/corpus.hpp"
#include "vnum/decomposition.hpp"
#include "vnum/errors.hpp"
#include "vnum/homology.hpp"
#include "vnum/report.hpp"
#include "vnum/symbolic.hpp"
#include "vnum/vnumber.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace vnum;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Global {
  std::string format = "json";
  bool format_given = false;
  unsigned jobs = 1;
  std::uint64_t seed = 1;
  std::string caps_text;
  int field_char = 0;
  Caps caps;
};

struct Input {
  std::string ideal_path;
  std::string graph_path;
  std::string graph_ideal = "cover";
  std::string power = "symbolic-min";
};

std::string read_all(const std::string& path) {
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Loaded {
  std::string name;
  MonomialIdeal ideal;
};

Loaded load(const Input& in) {
  if (in.ideal_path.empty() == in.graph_path.empty()) throw UsageError("give exactly one of --ideal or --graph");
  try {
    if (!in.ideal_path.empty()) return {in.ideal_path, parse_ideal(read_all(in.ideal_path))};
    Graph G = parse_graph(read_all(in.graph_path));
    if (in.graph_ideal == "cover") return {"J(" + in.graph_path + ")", cover_ideal(G)};
    return {"I(" + in.graph_path + ")", edge_ideal(G)};
  } catch (const ParseError& e) {
    throw UsageError(e.what());
  }
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::string format_of(const Global& g, const std::string& fallback) { return g.format_given ? g.format : fallback; }

int run_invariants(const Global& g, const Input& in, const std::string& show, std::int64_t k) {
  static const std::vector<std::string> known{"alpha", "v",           "vlocal", "reg", "betti", "cm",
                                              "waldschmidt", "delta", "ass",    "min", "generators"};
  auto keys = split_list(show);
  for (const auto& key : keys)
    if (std::find(known.begin(), known.end(), key) == known.end()) throw UsageError("unknown --show key '" + key + "'");
  auto [name, base] = load(in);
  const auto type = parse_power_type(in.power);
  const MonomialIdeal I = filtration_member(base, k, type);

  json values;
  std::vector<std::pair<std::string, std::string>> flat;
  std::optional<VReport> vr;
  auto vreport = [&]() -> const VReport& {
    if (!vr) vr = v_number(I, g.caps.witness_budget);
    return *vr;
  };
  for (const auto& key : keys) {
    if (key == "alpha") {
      values[key] = alpha(I);
      flat.emplace_back(key, std::to_string(alpha(I)));
    } else if (key == "generators") {
      values[key] = to_string(I);
      flat.emplace_back(key, to_string(I));
    } else if (key == "v") {
      const auto& r = vreport();
      values[key] = r.v;
      values["witness"] = to_string(r.witness);
      values["prime"] = to_string(r.prime);
      flat.emplace_back(key, std::to_string(r.v));
      flat.emplace_back("witness", to_string(r.witness));
      flat.emplace_back("prime", to_string(r.prime));
    } else if (key == "vlocal") {
      json local = json::object();
      for (const auto& [p, lv] : vreport().local) {
        local[to_string(p)] = json{{"v", lv.v}, {"witness", to_string(lv.witness)}};
        flat.emplace_back("vlocal " + to_string(p), std::to_string(lv.v));
      }
      values[key] = local;
    } else if (key == "reg") {
      const int r = regularity(I, g.caps.hochster_variables);
      values[key] = r;
      flat.emplace_back(key, std::to_string(r));
    } else if (key == "betti") {
      const auto P = polarize(I).ideal;
      json rows = json::array();
      for (const auto& [ij, b] : betti_numbers(P, g.caps.hochster_variables)) {
        rows.push_back(json{{"i", ij.first}, {"j", ij.second}, {"beta", b}});
        flat.emplace_back("betti " + std::to_string(ij.first) + " " + std::to_string(ij.second), std::to_string(b));
      }
      values[key] = rows;
    } else if (key == "cm") {
      const bool cm = is_cohen_macaulay(polarize(I).ideal);
      values[key] = cm;
      flat.emplace_back(key, cm ? "true" : "false");
    } else if (key == "waldschmidt") {
      // Both rationals are invariants of the whole filtration, so they use the base ideal.
      const auto a = to_string(waldschmidt_constant(base));
      values[key] = a;
      flat.emplace_back(key, a);
    } else if (key == "delta") {
      const auto d = to_string(delta_invariant(base, g.caps.vertex_dimension));
      values[key] = d;
      flat.emplace_back(key, d);
    } else if (key == "ass" || key == "min") {
      auto primes = key == "ass" ? associated_primes(I) : minimal_primes(I);
      json arr = json::array();
      std::string joined;
      for (const auto& p : primes) {
        arr.push_back(to_string(p));
        joined += (joined.empty() ? "" : " ") + to_string(p);
      }
      values[key] = arr;
      flat.emplace_back(key, joined);
    }
  }
  if (format_of(g, "text") == "json") {
    json out;
    out["instance"] = name;
    out["power"] = to_string(type);
    out["k"] = k;
    out["values"] = values;
    std::cout << out.dump(2) << "\n";
  } else if (format_of(g, "text") == "csv") {
    std::cout << "key,value\n";
    for (const auto& [key, v] : flat) std::cout << csv_escape(key) << ',' << csv_escape(v) << '\n';
  } else {
    for (const auto& [key, v] : flat) std::cout << key << ": " << v << '\n';
  }
  return kExitPass;
}

int run_sequence(const Global& g, const Input& in, const std::string& show, std::int64_t max_k) {
  auto keys = split_list(show);
  for (const auto& key : keys)
    if (key != "alpha" && key != "v" && key != "reg") throw UsageError("unknown --show key '" + key + "'");
  if (max_k < 1) throw UsageError("--max-k must be at least 1");
  auto [name, base] = load(in);
  const auto type = parse_power_type(in.power);
  Filtration F(base, type, g.caps);
  std::vector<std::vector<std::string>> rows;
  std::vector<std::int64_t> vs;
  bool want_v = std::find(keys.begin(), keys.end(), "v") != keys.end();
  for (std::int64_t k = 1; k <= max_k; ++k) {
    std::vector<std::string> row{std::to_string(k)};
    for (const auto& key : keys) {
      if (key == "alpha") row.push_back(std::to_string(F.alpha(k)));
      if (key == "v") row.push_back(std::to_string(F.v(k)));
      if (key == "reg") row.push_back(std::to_string(F.reg(k)));
    }
    if (want_v) vs.push_back(static_cast<std::int64_t>(F.v(k)));
    rows.push_back(std::move(row));
  }
  if (format_of(g, "csv") == "json") {
    json out;
    out["instance"] = name;
    out["power"] = to_string(type);
    json seq = json::array();
    for (const auto& row : rows) {
      json x;
      x["k"] = std::stoll(row[0]);
      for (std::size_t i = 0; i < keys.size(); ++i) x[keys[i]] = std::stoll(row[i + 1]);
      seq.push_back(x);
    }
    out["sequences"] = seq;
    std::optional<QuasiLinearFit> fit;
    for (std::int64_t k_min = 1; want_v && k_min + 4 <= max_k && !fit; ++k_min) fit = fit_quasilinear(vs, k_min);
    out["fit"] = fit ? to_json(*fit) : json(nullptr);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "k";
    for (const auto& key : keys) std::cout << ',' << key;
    std::cout << '\n';
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) std::cout << (i ? "," : "") << row[i];
      std::cout << '\n';
    }
  }
  return kExitPass;
}

int run_verify(const Global& g, const std::string& suite, std::size_t n_max, std::int64_t max_k) {
  SuiteOptions o;
  o.n_max = n_max;
  o.max_k = max_k;
  o.seed = g.seed;
  o.jobs = g.jobs;
  o.caps = g.caps;
  const auto reports = run_suite(suite, o);
  if (format_of(g, "json") == "csv") {
    std::cout << render_csv(reports);
  } else {
    std::cout << render_json(suite, reports);
  }
  return any_failure(reports) ? kExitFail : kExitPass;
}

int run_corpus(const Global& g, const std::string& family, std::size_t n, bool connected, std::size_t max_gens,
               std::optional<std::size_t> degree, std::size_t count, unsigned max_exp) {
  std::vector<std::string> items;
  if (family == "cycle" || family == "complete" || family == "path" || family == "whisker") {
    items.push_back(format_graph(named_graph(family, n)));
  } else if (family == "graphs") {
    for (const auto& G : graphs_on(n, connected ? GraphFilter::Connected : GraphFilter::AnyWithEdge))
      items.push_back(format_graph(G));
  } else if (family == "squarefree") {
    for (const auto& I : square_free_ideals(n, max_gens, degree)) items.push_back(format_ideal(I));
  } else if (family == "random") {
    for (const auto& I : random_ideals(count, n, max_exp, max_gens, g.seed)) items.push_back(format_ideal(I));
  } else {
    throw UsageError("unknown family '" + family + "'");
  }
  if (format_of(g, "text") == "json") {
    json out;
    out["family"] = family;
    out["n"] = n;
    out["count"] = items.size();
    out["items"] = items;
    std::cout << out.dump(2) << "\n";
  } else {
    for (std::size_t i = 0; i < items.size(); ++i) std::cout << (i ? "\n" : "") << items[i];
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact v-numbers, symbolic powers and regularity of monomial ideals"};
  app.require_subcommand(1);
  Global g;
  auto* fmt = app.add_option("--format", g.format, "Output format")
                  ->check(CLI::IsMember({"json", "csv", "text"}))
                  ->expected(1);
  app.add_option("--jobs", g.jobs, "Worker threads for corpus suites")->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "Seed for random corpora");
  app.add_option("--caps", g.caps_text, "Resource caps: witness=N,hochster=N,vertex=N");
  app.add_option("--field-char", g.field_char, "Field characteristic (only 0 is supported)");

  Input in;
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("--ideal", in.ideal_path, "Ideal file ('-' for stdin)");
    sub->add_option("--graph", in.graph_path, "Graph file ('-' for stdin)");
    sub->add_option("--graph-ideal", in.graph_ideal, "Ideal of the graph")->check(CLI::IsMember({"cover", "edge"}));
    sub->add_option("--power", in.power, "ordinary, symbolic-min or symbolic-ass")
        ->check(CLI::IsMember({"ordinary", "symbolic", "symbolic-min", "symbolic-ass"}));
  };

  auto* inv = app.add_subcommand("invariants", "Invariants of one ideal or filtration member");
  add_input(inv);
  std::string inv_show = "alpha,v,reg";
  std::int64_t inv_k = 1;
  inv->add_option("--show", inv_show, "alpha,v,vlocal,reg,betti,cm,waldschmidt,delta,ass,min,generators");
  inv->add_option("--k", inv_k, "Filtration index")->check(CLI::PositiveNumber);

  auto* seq = app.add_subcommand("sequence", "Invariants along k = 1..max-k");
  add_input(seq);
  std::string seq_show = "alpha,v";
  std::int64_t seq_k = 4;
  seq->add_option("--show", seq_show, "alpha,v,reg");
  seq->add_option("--max-k", seq_k, "Largest k");

  auto* ver = app.add_subcommand("verify", "Run a verification suite over its default corpus");
  std::string suite = "all";
  std::size_t n_max = 4;
  std::int64_t ver_k = 3;
  ver->add_option("--suite", suite, "Suite name")->check(CLI::IsMember(suite_names()));
  ver->add_option("--n-max", n_max, "Largest graph or ring size");
  ver->add_option("--max-k", ver_k, "Largest power")->check(CLI::PositiveNumber);

  auto* cor = app.add_subcommand("corpus", "Print a corpus");
  std::string family;
  std::size_t cor_n = 3;
  bool connected = false;
  std::size_t max_gens = 6;
  std::optional<std::size_t> degree;
  std::size_t count = 10;
  unsigned max_exp = 3;
  cor->add_option("--family", family, "cycle|complete|path|whisker|graphs|squarefree|random")->required();
  cor->add_option("--n", cor_n, "Vertices or variables");
  cor->add_flag("--connected", connected, "Connected graphs only");
  cor->add_option("--max-gens", max_gens, "Generator bound for ideal families");
  cor->add_option("--degree", degree, "Generator degree filter for square-free ideals");
  cor->add_option("--count", count, "Number of random ideals");
  cor->add_option("--max-exp", max_exp, "Exponent bound for random ideals");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }
  g.format_given = fmt->count() > 0;

  try {
    if (g.field_char != 0) throw UsageError("only characteristic 0 is supported");
    if (!g.caps_text.empty()) g.caps = parse_caps(g.caps_text);
    if (*inv) return run_invariants(g, in, inv_show, inv_k);
    if (*seq) return run_sequence(g, in, seq_show, seq_k);
    if (*ver) return run_verify(g, suite, n_max, ver_k);
    if (*cor) return run_corpus(g, family, cor_n, connected, max_gens, degree, count, max_exp);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    // Structural, unsupported-input and option-value errors.
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
