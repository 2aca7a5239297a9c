#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "qgr/errors.hpp"
#include "qgr/oracles.hpp"

using namespace qgr;
using namespace qgr::oracles;

TEST_CASE("path enumeration on a single loop") {
  Quiver q = parse_quiver("vertex a\narrow f: a -> a");
  auto table = enumerate_paths(q, 4);
  std::size_t total = 0;
  for (unsigned len = 0; len <= 4; ++len) total += table[{0, 0, len}].size();
  CHECK(total == 5);  // one path per length 0..4
}

TEST_CASE("path enumeration on the worked example") {
  Quiver q = parse_quiver("vertex a\nvertex b\narrow f: a -> b\narrow p: a -> a\narrow q: b -> b");
  auto table = enumerate_paths(q, 2);
  auto& ab2 = table[{q.vertex_index("a"), q.vertex_index("b"), 2}];
  CHECK(ab2.size() == 2);  // p.f and f.q
  for (const auto& p : ab2) {
    CHECK(p.length() == 2);
    CHECK(p.vertices.front() == q.vertex_index("a"));
    CHECK(p.vertices.back() == q.vertex_index("b"));
  }
}

TEST_CASE("no backward paths in an acyclic 2-chain") {
  Quiver q = parse_quiver("vertex a\nvertex b\narrow f: a -> b");
  auto table = enumerate_paths(q, 4);
  for (unsigned len = 1; len <= 4; ++len)
    CHECK(table.find({q.vertex_index("b"), q.vertex_index("a"), len}) == table.end());
}

TEST_CASE("path enumeration honors its explosion cap") {
  Quiver q = parse_quiver("vertex a\narrow f: a -> a\narrow g: a -> a");
  CHECK_THROWS_AS(enumerate_paths(q, 40, 1000), ExplosionCap);
}

TEST_CASE("normal word counts") {
  auto xy = parse_algebra("gens x y\nrel xy\n").presentation;
  auto counts = enumerate_normal_words(xy, 3);
  CHECK(counts[3] == 4);  // xxx, yxx, yyx, yyy

  auto free2 = parse_algebra("gens x y\n").presentation;
  auto f = enumerate_normal_words(free2, 10);
  Int expect = 1;
  for (unsigned n = 0; n <= 10; ++n, expect *= 2) CHECK(f[n] == expect);

  auto skl = parse_algebra("gens u v w\nrel uv\nrel vw\nrel wu\n").presentation;
  CHECK(enumerate_normal_words(skl, 2)[2] == 6);
}

TEST_CASE("poset isomorphism brute force") {
  auto chain2 = Poset({"x", "y"}, {{false, true}, {false, false}});
  auto anti2 = Poset({"x", "y"}, {{false, false}, {false, false}});
  CHECK(poset_iso_bruteforce(chain2, chain2).has_value());
  CHECK(!poset_iso_bruteforce(chain2, anti2).has_value());
}

TEST_CASE("brute force finds the inverse of a relabeling") {
  // fixed 5-element poset: 0<2, 0<3, 1<3, 2<3 plus transitive closure
  std::vector<std::vector<bool>> lt(5, std::vector<bool>(5, false));
  lt[0][2] = lt[0][3] = lt[1][3] = lt[2][3] = true;
  Poset p({"a", "b", "c", "d", "e"}, lt);
  // relabel by the permutation (0 1 2 3 4) -> (3 0 4 1 2)
  std::vector<std::size_t> perm{3, 0, 4, 1, 2};
  std::vector<std::vector<bool>> lt2(5, std::vector<bool>(5, false));
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j)
      if (lt[i][j]) lt2[perm[i]][perm[j]] = true;
  Poset p2({"a", "b", "c", "d", "e"}, lt2);
  auto found = poset_iso_bruteforce(p, p2);
  REQUIRE(found.has_value());
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j)
      CHECK(p.less(i, j) == p2.less((*found)[i], (*found)[j]));
}

TEST_CASE("poset family sizes match the known counts") {
  CHECK(all_posets(1).size() == 1);
  CHECK(all_posets(2).size() == 2);
  CHECK(all_posets(3).size() == 5);
  CHECK(all_posets(4).size() == 16);
  CHECK(all_posets(5).size() == 63);
  CHECK(all_posets(6).size() == 318);
}

TEST_CASE("corpus buckets split by the growth verdict") {
  CorpusParams params;
  params.count = 60;
  auto corpus = generate_corpus(params);
  CHECK(corpus.finite_gk.size() + corpus.infinite_gk.size() == 60);
  CHECK(!corpus.finite_gk.empty());
  CHECK(!corpus.infinite_gk.empty());
}

TEST_CASE("QGR_SEED steers default corpus parameters") {
  CHECK(seed_from_env(123) >= 0);
  setenv("QGR_SEED", "42", 1);
  CHECK(seed_from_env(123) == 42);
  unsetenv("QGR_SEED");
  CHECK(seed_from_env(123) == 123);
}

TEST_CASE("corpus generation is reproducible") {
  CorpusParams params;
  params.count = 10;
  auto a = random_corpus(params);
  auto b = random_corpus(params);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    CHECK(serialize(a[i], QuiverFormat::Text) == serialize(b[i], QuiverFormat::Text));
  params.seed += 1;
  auto c = random_corpus(params);
  bool any_different = false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (serialize(a[i], QuiverFormat::Text) != serialize(c[i], QuiverFormat::Text))
      any_different = true;
  CHECK(any_different);
}

TEST_CASE("corpus respects its size bounds") {
  CorpusParams params;
  params.count = 50;
  for (const auto& q : random_corpus(params)) {
    CHECK(q.vertex_count() >= 1);
    CHECK(q.vertex_count() <= params.max_vertices);
    CHECK(q.arrow_count() <= params.max_arrows);
  }
}
