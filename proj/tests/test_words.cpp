#include <doctest.h>

#include <set>

#include "pcla/printing.hpp"
#include "pcla/words.hpp"
#include "support/oracles.hpp"

using namespace pcla;

namespace {

// x > y > z under declaration order on {"x","y","z"}.
const int X = 0, Y = 1, Z = 2;

GeneratorOrder o3() { return GeneratorOrder::declaration(3); }

CommutationGraph g1() {
  return CommutationGraph({"x", "y", "z"},
                          std::vector<std::pair<int, int>>{{0, 1}});
}

}  // namespace

TEST_SUITE("words") {

TEST_CASE("word comparison") {
  const GeneratorOrder o = o3();
  // A proper prefix is greater than the word.
  CHECK(compare_words(o, {X, Y}, {X}) == std::strong_ordering::less);
  CHECK(compare_words(o, {X}, {Y}) == std::strong_ordering::greater);
  CHECK(compare_words(o, {X, Y}, {X, Z}) == std::strong_ordering::greater);
  CHECK(compare_words(o, {}, {X}) == std::strong_ordering::greater);
  CHECK(compare_words(o, {X, Y}, {X, Y}) == std::strong_ordering::equal);
}

TEST_CASE("word comparison is a total order with dominant prefixes") {
  const GeneratorOrder o = o3();
  std::vector<Word> words{{}};
  for (int len = 1; len <= 3; ++len) {
    std::vector<Word> next;
    for (const Word& w : words)
      if (static_cast<int>(w.size()) == len - 1)
        for (int g = 0; g < 3; ++g) {
          Word e = w;
          e.push_back(g);
          next.push_back(e);
        }
    words.insert(words.end(), next.begin(), next.end());
  }
  for (const Word& u : words)
    for (const Word& v : words) {
      const auto uv = compare_words(o, u, v);
      const auto vu = compare_words(o, v, u);
      CHECK((uv == std::strong_ordering::equal) == (u == v));
      if (uv == std::strong_ordering::less)
        CHECK(vu == std::strong_ordering::greater);
      // transitivity spot-check against a third word
      for (const Word& w : words)
        if (uv == std::strong_ordering::less &&
            compare_words(o, v, w) == std::strong_ordering::less)
          CHECK(compare_words(o, u, w) == std::strong_ordering::less);
    }
}

TEST_CASE("LSA predicate") {
  const GeneratorOrder o = o3();
  CHECK(is_lsa(o, {X, Y}));
  CHECK_FALSE(is_lsa(o, {Y, X}));
  CHECK_FALSE(is_lsa(o, {X, X}));
  CHECK_THROWS_AS(is_lsa(o, {}), Error);
}

TEST_CASE("standard bracketing") {
  const GeneratorOrder o = o3();
  const LieMonomial xy = bracket_word(o, {X, Y});
  CHECK(xy.left().generator() == X);
  CHECK(xy.right().generator() == Y);

  const LieMonomial xxy = bracket_word(o, {X, X, Y});
  CHECK(xxy == LieMonomial::pair(LieMonomial::leaf(X),
                                 LieMonomial::pair(LieMonomial::leaf(X),
                                                   LieMonomial::leaf(Y))));

  const LieMonomial xyz = bracket_word(o, {X, Y, Z});
  CHECK(xyz == LieMonomial::pair(LieMonomial::leaf(X),
                                 LieMonomial::pair(LieMonomial::leaf(Y),
                                                   LieMonomial::leaf(Z))));

  CHECK_THROWS_AS(bracket_word(o, {Y, X}), Error);
}

TEST_CASE("LS predicate") {
  const GeneratorOrder o = o3();
  const LieMonomial x = LieMonomial::leaf(X);
  const LieMonomial y = LieMonomial::leaf(Y);
  CHECK(is_ls(o, LieMonomial::pair(x, LieMonomial::pair(x, y))));
  CHECK_FALSE(is_ls(o, LieMonomial::pair(y, x)));
  // ((x,(x,y)),y) fails the right-factor condition: y < xy.
  CHECK_FALSE(is_ls(
      o, LieMonomial::pair(LieMonomial::pair(x, LieMonomial::pair(x, y)), y)));
}

TEST_CASE("bracketing is the unique LS bracketing") {
  // For every LSA word up to length 6 on up to 3 letters, exactly one full
  // bracketing satisfies the LS conditions, and bracket_word returns it.
  for (int n = 2; n <= 3; ++n) {
    const GeneratorOrder o = GeneratorOrder::declaration(n);
    for (int len = 1; len <= 6; ++len) {
      for (const Word& w : enumerate_lsa(o, len)) {
        const LieMonomial expected = bracket_word(o, w);
        CHECK(is_ls(o, expected));
        int ls_count = 0;
        for (const LieMonomial& candidate : testing::all_bracketings(w)) {
          if (is_ls(o, candidate)) {
            ++ls_count;
            CHECK(candidate == expected);
          }
        }
        CHECK(ls_count == 1);
      }
    }
  }
}

TEST_CASE("concatenation of ordered LSA words is LSA") {
  const GeneratorOrder o = o3();
  std::vector<Word> lsa;
  for (int len = 1; len <= 5; ++len)
    for (const Word& w : enumerate_lsa(o, len)) lsa.push_back(w);
  for (const Word& u : lsa)
    for (const Word& v : lsa) {
      if (u.size() + v.size() > 6) continue;
      if (compare_words(o, u, v) != std::strong_ordering::greater) continue;
      Word uv = u;
      uv.insert(uv.end(), v.begin(), v.end());
      CHECK(is_lsa(o, uv));
    }
}

TEST_CASE("admissibility") {
  const GeneratorOrder o = o3();
  const CommutationGraph g = g1();
  const LieMonomial x = LieMonomial::leaf(X);
  const LieMonomial y = LieMonomial::leaf(Y);
  const LieMonomial z = LieMonomial::leaf(Z);
  CHECK_FALSE(is_pcls(o, g, LieMonomial::pair(x, y)));  // edge relator
  CHECK(is_pcls(o, g, LieMonomial::pair(x, z)));
  CHECK_FALSE(is_pcls(o, g, LieMonomial::pair(x, LieMonomial::pair(y, z))));
}

TEST_CASE("admissible monomials are LS") {
  const GeneratorOrder o = o3();
  for (const CommutationGraph& g : testing::all_graphs({"x", "y", "z"}))
    for (int len = 2; len <= 4; ++len)
      for (const Word& w : enumerate_lsa(o, len))
        for (const LieMonomial& m : testing::all_bracketings(w))
          if (is_pcls(o, g, m)) CHECK(is_ls(o, m));
}

TEST_CASE("basis enumeration") {
  const GeneratorOrder o = o3();
  const CommutationGraph g = g1();
  const auto basis = enumerate_pcls(o, g, 3);
  REQUIRE(basis.size() == 3);
  CHECK(basis[0].size() == 3);
  REQUIRE(basis[1].size() == 2);
  CHECK(to_string(basis[1][0], g) == "[x,z]");
  CHECK(to_string(basis[1][1], g) == "[y,z]");
  REQUIRE(basis[2].size() == 5);
  CHECK(to_string(basis[2][0], g) == "[x,[x,z]]");
  CHECK(to_string(basis[2][1], g) == "[[x,z],y]");
  CHECK(to_string(basis[2][2], g) == "[[x,z],z]");
  CHECK(to_string(basis[2][3], g) == "[y,[y,z]]");
  CHECK(to_string(basis[2][4], g) == "[[y,z],z]");

  const CommutationGraph complete({"x", "y"},
                                  std::vector<std::pair<int, int>>{{0, 1}});
  const auto abelian = enumerate_pcls(GeneratorOrder::declaration(2), complete, 4);
  CHECK(abelian[0].size() == 2);
  for (int n = 2; n <= 4; ++n) CHECK(abelian[static_cast<std::size_t>(n - 1)].empty());

  CHECK_THROWS_AS(enumerate_pcls(o, g, 0), Error);
}

TEST_CASE("free basis matches the Witt dimensions") {
  const std::vector<int> witt2{2, 1, 2, 3, 6, 9};
  const std::vector<int> witt3{3, 3, 8, 18, 48, 116};
  const CommutationGraph free2({"a", "b"}, std::vector<std::pair<int, int>>{});
  const CommutationGraph free3({"a", "b", "c"},
                               std::vector<std::pair<int, int>>{});
  const auto b2 = enumerate_pcls(GeneratorOrder::declaration(2), free2, 6);
  const auto b3 = enumerate_pcls(GeneratorOrder::declaration(3), free3, 6);
  for (int n = 0; n < 6; ++n) {
    CHECK(static_cast<int>(b2[static_cast<std::size_t>(n)].size()) == witt2[static_cast<std::size_t>(n)]);
    CHECK(static_cast<int>(b3[static_cast<std::size_t>(n)].size()) == witt3[static_cast<std::size_t>(n)]);
  }
}

TEST_CASE("multidegree and support") {
  const LieMonomial x = LieMonomial::leaf(X);
  const LieMonomial y = LieMonomial::leaf(Y);
  const LieMonomial z = LieMonomial::leaf(Z);
  const LieMonomial xxy = LieMonomial::pair(x, LieMonomial::pair(x, y));
  CHECK(multidegree(xxy, 3).counts == std::vector<int>{2, 1, 0});
  CHECK(support(xxy) == (GenSet::single(X) | GenSet::single(Y)));
  CHECK(multidegree(z, 3).counts == std::vector<int>{0, 0, 1});
  const LieMonomial xzy = LieMonomial::pair(LieMonomial::pair(x, z), y);
  CHECK(multidegree(xzy, 3).counts == std::vector<int>{1, 1, 1});
  CHECK(support(xzy) == GenSet::full(3));
}

TEST_CASE("multidegree order") {
  const MultidegreeOrder om_x({X}, 3);
  CHECK(om_x.compare({{1, 0, 5}}, {{0, 7, 0}}) == std::strong_ordering::greater);
  const MultidegreeOrder om_xy({X, Y}, 3);
  CHECK(om_xy.compare({{1, 2, 0}}, {{1, 3, 9}}) == std::strong_ordering::less);
  CHECK(om_xy.compare({{1, 2, 3}}, {{1, 2, 3}}) == std::strong_ordering::equal);
  CHECK_THROWS_AS(om_x.compare({{1, 0}}, {{1, 0, 0}}), Error);
  CHECK_THROWS_AS(MultidegreeOrder({X, X}, 3), Error);
}

}  // TEST_SUITE
