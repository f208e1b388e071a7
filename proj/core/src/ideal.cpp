#include "vnum/ideal.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <sstream>

#include "vnum/errors.hpp"

namespace vnum {

namespace {

void require_same_ring(const MonomialIdeal& I, const MonomialIdeal& J) {
  if (I.nvars() != J.nvars()) throw StructuralError("ideals live in rings of different sizes");
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

MonomialIdeal minimalize(std::size_t nvars, std::vector<Monomial> gens) {
  for (const auto& g : gens)
    if (g.nvars() != nvars) throw StructuralError("generator has the wrong number of variables");
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    auto da = a.degree(), db = b.degree();
    return da != db ? da < db : a < b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> kept;
  kept.reserve(gens.size());
  for (auto& g : gens) {
    bool redundant = std::any_of(kept.begin(), kept.end(), [&](const Monomial& k) { return k.divides(g); });
    if (!redundant) kept.push_back(std::move(g));
  }
  std::sort(kept.begin(), kept.end());
  return MonomialIdeal(MonomialIdeal::Minimal{}, nvars, std::move(kept));
}

MonomialIdeal minimalize(std::vector<Monomial> gens) {
  if (gens.empty()) throw StructuralError("cannot infer the ring of an empty generator list");
  auto n = gens.front().nvars();
  return minimalize(n, std::move(gens));
}

MonomialIdeal::MonomialIdeal(std::size_t nvars, std::vector<Monomial> gens)
    : MonomialIdeal(minimalize(nvars, std::move(gens))) {}

MonomialIdeal MonomialIdeal::prime(std::size_t nvars, const std::vector<std::size_t>& vars) {
  std::vector<Monomial> gens;
  for (auto v : vars) gens.push_back(Monomial::variable(nvars, v));
  return MonomialIdeal(nvars, std::move(gens));
}

MonomialIdeal MonomialIdeal::maximal(std::size_t nvars) {
  std::vector<std::size_t> all(nvars);
  for (std::size_t i = 0; i < nvars; ++i) all[i] = i;
  return prime(nvars, all);
}

bool MonomialIdeal::is_square_free() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.is_square_free(); });
}

bool MonomialIdeal::is_prime() const {
  return !gens_.empty() &&
         std::all_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.degree() == 1; });
}

Monomial MonomialIdeal::generator_lcm() const {
  Monomial out = Monomial::one(nvars_);
  for (const auto& g : gens_) out = lcm(out, g);
  return out;
}

std::uint64_t alpha(const MonomialIdeal& I) {
  if (I.is_zero()) throw UndefinedInvariantError("alpha of the zero ideal is undefined");
  std::uint64_t best = I.generators().front().degree();
  for (const auto& g : I.generators()) best = std::min(best, g.degree());
  return best;
}

std::uint64_t max_gen_degree(const MonomialIdeal& I) {
  if (I.is_zero()) throw UndefinedInvariantError("generator degree of the zero ideal is undefined");
  std::uint64_t best = 0;
  for (const auto& g : I.generators()) best = std::max(best, g.degree());
  return best;
}

bool is_equigenerated(const MonomialIdeal& I) { return alpha(I) == max_gen_degree(I); }

bool contains_monomial(const MonomialIdeal& I, const Monomial& m) {
  if (m.nvars() != I.nvars()) throw StructuralError("monomial and ideal live in different rings");
  return std::any_of(I.generators().begin(), I.generators().end(),
                     [&](const Monomial& g) { return g.divides(m); });
}

bool is_subset(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_ring(I, J);
  return std::all_of(I.generators().begin(), I.generators().end(),
                     [&](const Monomial& g) { return contains_monomial(J, g); });
}

MonomialIdeal colon(const MonomialIdeal& I, const Monomial& f) {
  if (f.nvars() != I.nvars()) throw StructuralError("monomial and ideal live in different rings");
  std::vector<Monomial> gens;
  gens.reserve(I.size());
  for (const auto& g : I.generators()) gens.push_back(colon(g, f));
  return minimalize(I.nvars(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_ring(I, J);
  if (J.is_zero()) return MonomialIdeal::unit(I.nvars());
  std::vector<MonomialIdeal> parts;
  parts.reserve(J.size());
  for (const auto& g : J.generators()) parts.push_back(colon(I, g));
  return intersect(parts);
}

MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_ring(I, J);
  std::vector<Monomial> gens;
  gens.reserve(I.size() * J.size());
  for (const auto& g : I.generators())
    for (const auto& h : J.generators()) gens.push_back(lcm(g, h));
  return minimalize(I.nvars(), std::move(gens));
}

MonomialIdeal intersect(std::span<const MonomialIdeal> ideals) {
  if (ideals.empty()) throw StructuralError("intersection of an empty family");
  // Fold smallest first to keep intermediate generator sets small.
  std::vector<const MonomialIdeal*> order;
  for (const auto& I : ideals) order.push_back(&I);
  std::stable_sort(order.begin(), order.end(),
                   [](const MonomialIdeal* a, const MonomialIdeal* b) { return a->size() < b->size(); });
  MonomialIdeal acc = *order.front();
  for (std::size_t i = 1; i < order.size(); ++i) acc = intersect(acc, *order[i]);
  return acc;
}

MonomialIdeal sum(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_ring(I, J);
  std::vector<Monomial> gens = I.generators();
  gens.insert(gens.end(), J.generators().begin(), J.generators().end());
  return minimalize(I.nvars(), std::move(gens));
}

MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_ring(I, J);
  std::vector<Monomial> gens;
  gens.reserve(I.size() * J.size());
  for (const auto& g : I.generators())
    for (const auto& h : J.generators()) gens.push_back(g * h);
  return minimalize(I.nvars(), std::move(gens));
}

MonomialIdeal power(const MonomialIdeal& I, std::int64_t k) {
  if (k < 0) throw DomainError("power: exponent must be non-negative");
  MonomialIdeal acc = MonomialIdeal::unit(I.nvars());
  for (std::int64_t i = 0; i < k; ++i) acc = product(acc, I);
  return acc;
}

MonomialIdeal saturate(const MonomialIdeal& I, const Monomial& f) {
  if (f.nvars() != I.nvars()) throw StructuralError("monomial and ideal live in different rings");
  // Colon by a high enough power of f clears every variable in its support.
  std::vector<Monomial> gens;
  gens.reserve(I.size());
  for (const auto& g : I.generators()) {
    auto e = g.exponents();
    for (std::size_t i = 0; i < e.size(); ++i)
      if (f[i] > 0) e[i] = 0;
    gens.emplace_back(std::move(e));
  }
  return minimalize(I.nvars(), std::move(gens));
}

Monomial parse_monomial(const std::string& token, std::size_t nvars, int line) {
  Monomial m(nvars);
  std::string t = trim(token);
  if (t == "1") return m;
  std::vector<Exponent> e(nvars, 0);
  std::stringstream ss(t);
  std::string factor;
  while (std::getline(ss, factor, '*')) {
    factor = trim(factor);
    if (factor.size() < 2 || factor[0] != 'x') throw ParseError("bad factor '" + factor + "'", line);
    auto caret = factor.find('^');
    std::string idx = factor.substr(1, caret == std::string::npos ? std::string::npos : caret - 1);
    std::size_t var = 0;
    auto [p, ec] = std::from_chars(idx.data(), idx.data() + idx.size(), var);
    if (ec != std::errc() || p != idx.data() + idx.size() || var < 1 || var > nvars)
      throw ParseError("bad variable index in '" + factor + "'", line);
    Exponent ex = 1;
    if (caret != std::string::npos) {
      std::string es = factor.substr(caret + 1);
      auto [q, ec2] = std::from_chars(es.data(), es.data() + es.size(), ex);
      if (ec2 != std::errc() || q != es.data() + es.size() || ex == 0)
        throw ParseError("bad exponent in '" + factor + "'", line);
    }
    e[var - 1] += ex;
  }
  return Monomial(std::move(e));
}

MonomialIdeal parse_ideal(std::istream& in) {
  std::string raw;
  int line = 0;
  std::size_t nvars = 0;
  bool have_header = false;
  std::vector<Monomial> gens;
  while (std::getline(in, raw)) {
    ++line;
    auto hash = raw.find('#');
    std::string s = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (s.empty()) continue;
    if (!have_header) {
      std::istringstream hs(s);
      std::string kw;
      long long n = -1;
      if (!(hs >> kw >> n) || kw != "ring" || n < 0) throw ParseError("expected 'ring <n>' header", line);
      std::string rest;
      if (hs >> rest) throw ParseError("trailing text after ring header", line);
      nvars = static_cast<std::size_t>(n);
      have_header = true;
      continue;
    }
    gens.push_back(parse_monomial(s, nvars, line));
  }
  if (!have_header) throw ParseError("missing 'ring <n>' header", line);
  return MonomialIdeal(nvars, std::move(gens));
}

MonomialIdeal parse_ideal(const std::string& text) {
  std::istringstream in(text);
  return parse_ideal(in);
}

std::string format_ideal(const MonomialIdeal& I) {
  std::ostringstream os;
  os << "ring " << I.nvars() << '\n';
  for (const auto& g : I.generators()) os << to_string(g) << '\n';
  return os.str();
}

std::string to_string(const MonomialIdeal& I) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < I.size(); ++i) {
    if (i) os << ", ";
    os << to_string(I.generators()[i]);
  }
  if (I.is_zero()) os << '0';
  os << ')';
  return os.str();
}

}  // namespace vnum
