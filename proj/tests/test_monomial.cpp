#include "doctest.h"

#include "oracles.hpp"
#include "vnum/corpus.hpp"
#include "vnum/errors.hpp"
#include "vnum/ideal.hpp"

using namespace vnum;

namespace {

MonomialIdeal I3(std::vector<Monomial> gens) { return MonomialIdeal(3, std::move(gens)); }

// x = x1, y = x2, z = x3
const Monomial x{1, 0, 0}, y{0, 1, 0}, z{0, 0, 1};

// Equal as ideals, decided by membership on the joint lcm box.
bool same_by_membership(const MonomialIdeal& A, const MonomialIdeal& B) {
  auto ga = oracle::gens_of(A), gb = oracle::gens_of(B);
  bool same = true;
  oracle::for_each_in_box(oracle::joint_lcm(A.nvars(), {&ga, &gb}), [&](const oracle::Exps& m) {
    if (oracle::member(ga, m) != oracle::member(gb, m)) same = false;
  });
  return same;
}

std::vector<MonomialIdeal> small_corpus(std::uint64_t seed, std::size_t count = 40) {
  return random_ideals(count, 4, 3, 4, seed);
}

}  // namespace

TEST_CASE("monomial basics") {
  Monomial m{2, 0, 1};
  CHECK(m.degree() == 3);
  CHECK(to_string(m) == "x1^2*x3");
  CHECK(to_string(Monomial::one(3)) == "1");
  CHECK(Monomial{1, 0, 0}.divides(m));
  CHECK_FALSE(m.divides(Monomial{1, 0, 0}));
  CHECK(lcm(Monomial{2, 1, 0}, Monomial{1, 3, 0}) == Monomial{2, 3, 0});
  CHECK(gcd(Monomial{2, 1, 0}, Monomial{1, 3, 0}) == Monomial{1, 1, 0});
  CHECK(colon(Monomial{2, 1, 0}, Monomial{1, 3, 1}) == Monomial{1, 0, 0});
  CHECK(parse_monomial("x1^2*x3", 3) == m);
}

TEST_CASE("exponent overflow is reported, not wrapped") {
  Monomial big{std::numeric_limits<Exponent>::max()};
  CHECK_THROWS_AS(big * Monomial{1}, ResourceError);
  CHECK_THROWS_AS(Monomial{2}.pow(std::uint64_t{1} << 40), ResourceError);
}

TEST_CASE("minimalize") {
  const Monomial x2{2, 0, 0}, xy{1, 1, 0}, yz{0, 1, 1}, xyz{1, 1, 1}, y2{0, 2, 0};
  CHECK(minimalize({x, x2}).generators() == std::vector<Monomial>{x});
  CHECK(minimalize({xy, yz, xyz}).generators() == std::vector<Monomial>{yz, xy});
  CHECK(minimalize({x2, xy, y2}).size() == 3);
  CHECK_THROWS_AS(minimalize({Monomial{1, 0}, Monomial{1, 0, 0}}), StructuralError);
  CHECK_THROWS_AS(MonomialIdeal(2, {Monomial{1, 0, 0}}), StructuralError);
}

TEST_CASE("canonical generator order is lexicographic on exponent tuples") {
  auto I = I3({z, x, y, Monomial{0, 2, 1}});
  auto g = I.generators();
  CHECK(std::is_sorted(g.begin(), g.end()));
  CHECK(I == I3({y, Monomial{0, 2, 1}, x, z}));
}

TEST_CASE("zero and unit ideals") {
  auto Z = MonomialIdeal::zero(3), U = MonomialIdeal::unit(3);
  CHECK(Z.is_zero());
  CHECK(U.is_unit());
  CHECK_FALSE(Z.is_proper_nonzero());
  CHECK_THROWS_AS(alpha(Z), UndefinedInvariantError);
  CHECK_THROWS_AS(max_gen_degree(Z), UndefinedInvariantError);
  CHECK_THROWS_AS(is_equigenerated(Z), UndefinedInvariantError);
  CHECK(power(Z, 0).is_unit());
  CHECK(power(U, 3).is_unit());
  CHECK(intersect(Z, U).is_zero());
  CHECK(colon(Z, x).is_zero());
  CHECK(colon(I3({x}), x).is_unit());
}

TEST_CASE("alpha and max_gen_degree") {
  CHECK(alpha(I3({Monomial{2, 0, 0}, Monomial{1, 1, 0}})) == 2);
  CHECK(alpha(MonomialIdeal::maximal(5)) == 1);
  CHECK(max_gen_degree(I3({x, Monomial{0, 1, 1}})) == 2);
  CHECK(max_gen_degree(I3({Monomial{1, 1, 0}, Monomial{0, 1, 1}, Monomial{1, 0, 1}})) == 2);
  CHECK(is_equigenerated(I3({Monomial{1, 1, 0}, Monomial{0, 1, 1}, Monomial{1, 0, 1}})));
  CHECK_FALSE(is_equigenerated(I3({x, Monomial{0, 1, 1}})));
  CHECK(is_equigenerated(I3({Monomial{2, 0, 0}, Monomial{1, 1, 0}})));
}

TEST_CASE("colon examples") {
  auto I = I3({Monomial{1, 1, 0}, Monomial{0, 1, 1}});
  CHECK(colon(I, x) == I3({y}));
  CHECK(colon(I, Monomial{1, 0, 1}) == I3({y}));
  CHECK(colon(I, Monomial::one(3)) == I);
  // Membership scan of degree <= 2 monomials.
  oracle::for_each_up_to_degree(3, 2, [&](const oracle::Exps& m) {
    oracle::Exps mx = m;
    mx[0] += 1;
    CHECK(contains_monomial(colon(I, x), Monomial(m)) == oracle::member(I, mx));
  });
}

TEST_CASE("intersect examples") {
  CHECK(intersect(I3({x}), I3({y})) == I3({Monomial{1, 1, 0}}));
  std::vector<MonomialIdeal> primes = {I3({x, y}), I3({y, z}), I3({x, z})};
  auto T = intersect(primes);
  CHECK(T == I3({Monomial{1, 1, 0}, Monomial{0, 1, 1}, Monomial{1, 0, 1}}));
  oracle::for_each_up_to_degree(3, 3, [&](const oracle::Exps& m) {
    bool all = true;
    for (const auto& P : primes) all = all && oracle::member(P, m);
    CHECK(contains_monomial(T, Monomial(m)) == all);
  });
  CHECK(intersect(T, T) == T);
  CHECK_THROWS_AS(intersect(I3({x}), MonomialIdeal(2, {Monomial{1, 0}})), StructuralError);
}

TEST_CASE("power examples") {
  auto m = MonomialIdeal::maximal(2);
  CHECK(power(m, 2) == MonomialIdeal(2, {Monomial{2, 0}, Monomial{1, 1}, Monomial{0, 2}}));
  CHECK(power(m, 0).is_unit());
  auto tri = I3({Monomial{1, 1, 0}, Monomial{0, 1, 1}, Monomial{1, 0, 1}});
  CHECK(alpha(power(tri, 2)) == 4);
  CHECK_THROWS_AS(power(tri, -1), DomainError);
}

TEST_CASE("saturate examples") {
  auto M2 = [](std::vector<Monomial> g) { return MonomialIdeal(2, std::move(g)); };
  const Monomial X{1, 0}, Y{0, 1};
  CHECK(saturate(M2({Monomial{1, 1}}), Y) == M2({X}));
  CHECK(saturate(M2({Monomial{2, 0}, Monomial{1, 1}}), Y) == M2({X}));
  CHECK(saturate(M2({X}), Y) == M2({X}));
  CHECK(saturate(M2({Monomial{1, 1}}), Monomial::one(2)) == M2({Monomial{1, 1}}));
}

TEST_CASE("contains_monomial examples") {
  CHECK(contains_monomial(I3({Monomial{1, 1, 0}}), Monomial{1, 1, 1}));
  CHECK_FALSE(contains_monomial(MonomialIdeal(1, {Monomial{2}}), Monomial{1}));
  std::vector<MonomialIdeal> sq = {power(I3({x, y}), 2), power(I3({y, z}), 2), power(I3({x, z}), 2)};
  CHECK(contains_monomial(intersect(sq), Monomial{1, 1, 1}));
}

TEST_CASE("parse and format round trip") {
  auto I = parse_ideal("# triangle\nring 3\n\nx1*x2\nx2*x3  # edge\nx1*x3\n");
  CHECK(I == I3({Monomial{1, 1, 0}, Monomial{0, 1, 1}, Monomial{1, 0, 1}}));
  CHECK(parse_ideal(format_ideal(I)) == I);
  auto J = parse_ideal("ring 4\nx1^3*x4\nx2^2\n");
  CHECK(parse_ideal(format_ideal(J)) == J);
  CHECK_THROWS_AS(parse_ideal("ring 2\nx3\n"), ParseError);
  CHECK_THROWS_AS(parse_ideal("x1\n"), ParseError);
  CHECK_THROWS_AS(parse_ideal("ring 2\nx1^\n"), ParseError);
}

TEST_CASE("property: membership matches a divisibility scan up to degree 6") {
  for (const auto& I : small_corpus(11)) {
    const auto gens = oracle::gens_of(I);
    oracle::for_each_up_to_degree(4, 6, [&](const oracle::Exps& m) {
      REQUIRE(contains_monomial(I, Monomial(m)) == oracle::member(gens, m));
    });
  }
}

TEST_CASE("property: colon distributes over intersection") {
  auto corpus = random_ideals(30, 5, 3, 3, 21);
  auto fs = random_ideals(30, 5, 2, 1, 22);
  for (std::size_t i = 0; i + 1 < corpus.size(); ++i) {
    const auto& I = corpus[i];
    const auto& J = corpus[i + 1];
    const auto& f = fs[i].generators().front();
    CHECK(colon(intersect(I, J), f) == intersect(colon(I, f), colon(J, f)));
  }
}

TEST_CASE("property: colon, intersection and power agree with membership oracles") {
  auto corpus = small_corpus(31, 30);
  for (std::size_t i = 0; i + 1 < corpus.size(); ++i) {
    const auto& I = corpus[i];
    const auto& J = corpus[i + 1];
    const auto gi = oracle::gens_of(I), gj = oracle::gens_of(J);
    const Monomial& f = J.generators().front();

    auto C = colon(I, f);
    auto N = intersect(I, J);
    auto gc = oracle::gens_of(C), gn = oracle::gens_of(N);
    oracle::for_each_in_box(oracle::joint_lcm(4, {&gi, &gj, &gc, &gn}), [&](const oracle::Exps& m) {
      oracle::Exps mf = m;
      for (std::size_t v = 0; v < 4; ++v) mf[v] += f[v];
      REQUIRE(oracle::member(gc, m) == oracle::member(gi, mf));
      REQUIRE(oracle::member(gn, m) == (oracle::member(gi, m) && oracle::member(gj, m)));
    });

    auto P2 = power(I, 2);
    auto gp = oracle::gens_of(P2);
    oracle::Exps box = oracle::joint_lcm(4, {&gp});
    oracle::for_each_in_box(box, [&](const oracle::Exps& m) {
      REQUIRE(oracle::member(gp, m) == oracle::member_of_power(gi, m, 2));
    });
  }
}

TEST_CASE("property: power products and containments") {
  for (const auto& I : small_corpus(41, 25)) {
    for (int a = 0; a <= 2; ++a)
      for (int b = 0; b + a <= 3; ++b) CHECK(product(power(I, a), power(I, b)) == power(I, a + b));
    for (int k = 1; k <= 3; ++k) {
      const auto ak = alpha(power(I, k));
      CHECK(ak >= k * alpha(I));
      if (is_equigenerated(I)) CHECK(ak == k * alpha(I));
    }
  }
}

TEST_CASE("property: colon and saturation grow the ideal") {
  auto corpus = small_corpus(51, 30);
  for (std::size_t i = 0; i + 1 < corpus.size(); ++i) {
    const auto& I = corpus[i];
    const Monomial& f = corpus[i + 1].generators().front();
    auto C = colon(I, f);
    auto S = saturate(I, f);
    CHECK(is_subset(I, C));
    CHECK(is_subset(C, S));
    // Iterated colon until it stabilizes.
    MonomialIdeal prev = I, cur = colon(I, f);
    while (!(cur == prev)) {
      prev = cur;
      cur = colon(cur, f);
    }
    CHECK(S == cur);
    CHECK(same_by_membership(S, cur));
  }
}
