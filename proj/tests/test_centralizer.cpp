#include <doctest.h>

#include "pcla/centralizer.hpp"
#include "pcla/printing.hpp"
#include "pcla/verify.hpp"
#include "support/oracles.hpp"

using namespace pcla;

namespace {

const int X = 0, Y = 1, Z = 2;

GeneratorOrder o3() { return GeneratorOrder::declaration(3); }

CommutationGraph g1() {
  return CommutationGraph({"x", "y", "z"},
                          std::vector<std::pair<int, int>>{{0, 1}});
}
CommutationGraph free3() {
  return CommutationGraph({"x", "y", "z"}, std::vector<std::pair<int, int>>{});
}
CommutationGraph g3() {
  return CommutationGraph({"x", "y", "z"},
                          std::vector<std::pair<int, int>>{{0, 1}, {0, 2}});
}

LieElement gen(const GeneratorOrder& o, int i) {
  return LieElement::monomial(o, ElementForm::nf, LieMonomial::leaf(i));
}

}  // namespace

TEST_SUITE("centralizer") {

TEST_CASE("commutes") {
  const GeneratorOrder o = o3();
  const ReductionTable tg1 = build_reduction(g1(), o, 4);
  const ReductionTable tfree = build_reduction(free3(), o, 4);
  CHECK(commutes(tg1, gen(o, X), gen(o, Y)));
  CHECK_FALSE(commutes(tfree, gen(o, X), gen(o, Y)));
  const LieElement g = gen(o, X).scaled(Scalar(3)) + gen(o, Z);
  CHECK(commutes(tfree, g, g));
}

TEST_CASE("proportionality") {
  const GeneratorOrder o = o3();
  LieElement g(o, ElementForm::nf);
  g.add_term(LieMonomial::leaf(X), Scalar(2));
  g.add_term(bracket_word(o, {X, Z}), Scalar(4));
  LieElement h(o, ElementForm::nf);
  h.add_term(LieMonomial::leaf(X), Scalar(3));
  h.add_term(bracket_word(o, {X, Z}), Scalar(6));
  const auto witness = proportional(g, h);
  REQUIRE(witness.has_value());
  CHECK(witness->lambda == Scalar(3));
  CHECK(witness->mu == Scalar(2));
  CHECK(g.scaled(witness->lambda) == h.scaled(witness->mu));

  CHECK_FALSE(proportional(gen(o, X), gen(o, Y)).has_value());

  const auto zero_witness =
      proportional(g, LieElement::zero(o, ElementForm::nf));
  REQUIRE(zero_witness.has_value());
  CHECK(zero_witness->lambda == Scalar(0));
  CHECK(zero_witness->mu == Scalar(1));

  const GeneratorOrder reversed = GeneratorOrder::descending({2, 1, 0});
  CHECK_THROWS_AS(
      proportional(g, LieElement::zero(reversed, ElementForm::nf)), Error);
}

TEST_CASE("proportionality via exhaustive pivot search") {
  // Cross-check the pivot criterion against directly searching for a valid
  // scalar pair on grids of small coefficient vectors.
  const GeneratorOrder o = o3();
  const std::vector<LieMonomial> keys{LieMonomial::leaf(X),
                                      LieMonomial::leaf(Y),
                                      bracket_word(o, {X, Z})};
  auto element = [&](int a, int b, int c) {
    LieElement e(o, ElementForm::nf);
    e.add_term(keys[0], Scalar(a));
    e.add_term(keys[1], Scalar(b));
    e.add_term(keys[2], Scalar(c));
    return e;
  };
  auto exhaustive = [&](const LieElement& g, const LieElement& h) {
    for (int l = -6; l <= 6; ++l)
      for (int m = -6; m <= 6; ++m) {
        if (l == 0 && m == 0) continue;
        if (g.scaled(Scalar(l)) == h.scaled(Scalar(m))) return true;
      }
    return false;
  };
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b)
      for (int c = -2; c <= 2; ++c)
        for (int d = -2; d <= 2; ++d) {
          const LieElement g = element(a, b, 1);
          const LieElement h = element(c, d, (a == c && b == d) ? 1 : 2);
          CHECK(proportional(g, h).has_value() == exhaustive(g, h));
        }
}

TEST_CASE("homogeneous commutation criterion") {
  const GeneratorOrder o = o3();
  CHECK(homogeneous_commutes_criterion(g1(), gen(o, X), gen(o, Y)));
  CHECK_FALSE(homogeneous_commutes_criterion(free3(), gen(o, X), gen(o, Y)));
  const LieElement xz =
      LieElement::monomial(o, ElementForm::nf, bracket_word(o, {X, Z}));
  CHECK(homogeneous_commutes_criterion(g1(), xz, xz.scaled(Scalar(5))));
  CHECK_THROWS_AS(homogeneous_commutes_criterion(
                      g1(), LieElement::zero(o, ElementForm::nf), xz),
                  Error);
  LieElement mixed(o, ElementForm::nf);
  mixed.add_term(LieMonomial::leaf(X), Scalar(1));
  mixed.add_term(bracket_word(o, {X, Z}), Scalar(1));
  CHECK_THROWS_AS(homogeneous_commutes_criterion(g1(), mixed, xz), Error);
}

TEST_CASE("criterion agrees with the product on randomized homogeneous pairs") {
  VerifyRng rng(20240811);
  for (const CommutationGraph& g : testing::all_graphs({"x", "y", "z"})) {
    const GeneratorOrder o = o3();
    const ReductionTable t = build_reduction(g, o, 6);
    for (int i = 0; i < 60; ++i) {
      const int da = 1 + static_cast<int>(pick_index(rng, 3));
      const int db = 1 + static_cast<int>(pick_index(rng, 3));
      const LieElement a = random_homogeneous_element(t, rng, da, 3);
      const LieElement b = random_homogeneous_element(t, rng, db, 3);
      if (a.is_zero() || b.is_zero()) continue;
      CHECK(homogeneous_commutes_criterion(g, a, b) == commutes(t, a, b));
    }
  }
}

TEST_CASE("centralizer descriptions") {
  const GeneratorOrder o = o3();

  const ReductionTable t3 = build_reduction(g3(), o, 4);
  const auto dy = centralizer_of(t3, gen(o, Y));
  REQUIRE(dy.components.size() == 1);
  CHECK(to_string(dy.components[0], g3()) == "1*y");
  CHECK(dy.common_neighbors == GenSet::single(X));

  const ReductionTable t1 = build_reduction(g1(), o, 4);
  const auto dxy = centralizer_of(t1, gen(o, X) + gen(o, Y));
  REQUIRE(dxy.components.size() == 2);
  CHECK(to_string(dxy.components[0], g1()) == "1*x");
  CHECK(to_string(dxy.components[1], g1()) == "1*y");
  CHECK(dxy.common_neighbors.empty());

  const ReductionTable tf = build_reduction(free3(), o, 4);
  const auto dfree = centralizer_of(tf, gen(o, X) + gen(o, Y));
  REQUIRE(dfree.components.size() == 1);
  CHECK(dfree.common_neighbors.empty());

  CHECK_THROWS_WITH_AS(
      centralizer_of(t1, LieElement::zero(o, ElementForm::nf)),
      "centralizer of zero is the whole algebra", Error);
}

TEST_CASE("membership") {
  const GeneratorOrder o = o3();
  const ReductionTable t1 = build_reduction(g1(), o, 4);
  const auto dx = centralizer_of(t1, gen(o, X));

  LieElement h(o, ElementForm::nf);
  h.add_term(LieMonomial::leaf(X), Scalar(3));
  h.add_term(LieMonomial::leaf(Y), Scalar(2));
  CHECK(centralizer_membership(t1, dx, h));
  CHECK_FALSE(centralizer_membership(t1, dx, gen(o, Z)));

  const ReductionTable tf = build_reduction(free3(), o, 4);
  const auto dxy = centralizer_of(tf, gen(o, X) + gen(o, Y));
  CHECK_FALSE(centralizer_membership(tf, dxy, gen(o, X)));
  CHECK(centralizer_membership(tf, dxy, gen(o, X) + gen(o, Y)));
}

TEST_CASE("membership is scalar robust") {
  const GeneratorOrder o = o3();
  const ReductionTable t = build_reduction(g1(), o, 5);
  VerifyRng rng(99);
  const LieElement g = gen(o, X) + gen(o, Y).scaled(Scalar(2));
  const auto d = centralizer_of(t, g);
  for (int i = 0; i < 100; ++i) {
    const LieElement h = random_nf_element(t, rng, 3, 3, true);
    const bool base = centralizer_membership(t, d, h);
    for (int c : {2, -3, 7})
      CHECK(centralizer_membership(t, d, h.scaled(Scalar(c))) == base);
  }
}

TEST_CASE("membership equals the product test across graphs and orders") {
  VerifyRng rng(4242);
  for (const CommutationGraph& g : testing::all_graphs({"x", "y", "z"})) {
    for (const GeneratorOrder& o : testing::all_orders(3)) {
      const ReductionTable t = build_reduction(g, o, 5);
      FreeBracketCache cache;
      for (int i = 0; i < 12; ++i) {
        const LieElement ge = random_nf_element(t, rng, 2, 3);
        if (ge.is_zero()) continue;
        const auto d = centralizer_of(t, ge);
        const LieElement h = random_nf_element(t, rng, 3, 3, true);
        CHECK(centralizer_membership(t, d, h) == commutes(t, ge, h, cache));
      }
    }
  }
}

TEST_CASE("generator brackets vanish exactly off the support or neighbors") {
  // Nonzero homogeneous g of degree >= 2 never commutes with a generator in
  // its support, nor with one outside that misses part of the support.
  VerifyRng rng(5150);
  for (const CommutationGraph& g : testing::all_graphs({"x", "y", "z"})) {
    const GeneratorOrder o = o3();
    const ReductionTable t = build_reduction(g, o, 5);
    FreeBracketCache cache;
    for (int i = 0; i < 40; ++i) {
      const int deg = 2 + static_cast<int>(pick_index(rng, 3));
      const LieElement e = random_homogeneous_element(t, rng, deg, 3);
      if (e.is_zero()) continue;
      const GenSet supp = support(e);
      for (int x = 0; x < 3; ++x) {
        const LieElement xe = gen(o, x);
        if (supp.contains(x)) {
          CHECK_FALSE(commutes(t, e, xe, cache));
        } else if (!g.adjacent_to_all(x, supp)) {
          CHECK_FALSE(commutes(t, e, xe, cache));
        } else {
          CHECK(commutes(t, e, xe, cache));
        }
      }
    }
  }
}

TEST_CASE("commutant of generator combinations") {
  const GeneratorOrder o = o3();
  const ReductionTable t3 = build_reduction(g3(), o, 4);
  CHECK(centralizer_in_commutant(t3, {{X, Scalar(1)}}) ==
        (GenSet::single(Y) | GenSet::single(Z)));

  const ReductionTable t1 = build_reduction(g1(), o, 4);
  CHECK(centralizer_in_commutant(t1, {{X, Scalar(1)}}) == GenSet::single(Y));

  CHECK(centralizer_in_commutant(t3, {{Y, Scalar(1)}, {Z, Scalar(1)}}) ==
        GenSet::single(X));

  CHECK_THROWS_AS(centralizer_in_commutant(t3, {{X, Scalar(0)}}), Error);
  CHECK_THROWS_AS(
      centralizer_in_commutant(t3, {{X, Scalar(1)}, {X, Scalar(2)}}), Error);
}

TEST_CASE("monomials over the common neighbors annihilate the generator") {
  const GeneratorOrder o = o3();
  for (const CommutationGraph& g : testing::all_graphs({"x", "y", "z"})) {
    const ReductionTable t = build_reduction(g, o, 5);
    FreeBracketCache cache;
    const auto basis = enumerate_pcls(o, g, 4);
    for (int x = 0; x < 3; ++x) {
      for (const auto& level : basis)
        for (const LieMonomial& u : level) {
          if (u.degree() < 2) continue;
          if (!g.adjacent_to_all(x, u.support())) continue;
          CHECK(commutes(t, LieElement::monomial(o, ElementForm::nf, u),
                         gen(o, x), cache));
        }
    }
  }
}

TEST_CASE("commutant membership of an intersection") {
  // Membership in the commutant centralizer of a combination equals
  // membership for every listed generator.
  VerifyRng rng(31337);
  const GeneratorOrder o = o3();
  for (const CommutationGraph& g : testing::all_graphs({"x", "y", "z"})) {
    const ReductionTable t = build_reduction(g, o, 5);
    FreeBracketCache cache;
    std::vector<std::pair<int, Scalar>> combo{{X, Scalar(2)}, {Y, Scalar(-1)}};
    LieElement sum = gen(o, X).scaled(Scalar(2)) - gen(o, Y);
    const GenSet yset = centralizer_in_commutant(t, combo);
    // random elements of the derived subalgebra: degree >= 2 monomials
    for (int i = 0; i < 25; ++i) {
      LieElement h(o, ElementForm::nf);
      const auto basis = pcls_basis_flat(o, g, 3);
      for (int k = 0; k < 3; ++k) {
        const LieMonomial& m = basis[pick_index(rng, basis.size())];
        if (m.degree() >= 2) h.add_term(m, random_coefficient(rng));
      }
      const bool in_intersection =
          commutes(t, gen(o, X), h, cache) && commutes(t, gen(o, Y), h, cache);
      CHECK(commutes(t, sum, h, cache) == in_intersection);
      // the structural description: supported in yset
      bool structural = true;
      h.for_each_term([&](const LieMonomial& m, const Scalar&) {
        if (!m.support().subset_of(yset)) structural = false;
      });
      if (structural) CHECK(in_intersection);
    }
  }
}

}  // TEST_SUITE
