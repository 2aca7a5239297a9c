#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qgr/errors.hpp"
#include "qgr/growth.hpp"
#include "qgr/monomial.hpp"
#include "qgr/oracles.hpp"

using namespace qgr;

namespace {

const char* kExample8 =
    "vertex a\nvertex b\narrow f: a -> b\narrow p: a -> a\narrow q: b -> b\n";

Quiver xy_graph() {
  // Ufnarovskii graph of k<x,y>/(xy): loops at x and y, arrow y -> x
  return parse_quiver("vertex x\nvertex y\narrow xx: x -> x\narrow yy: y -> y\narrow yx: y -> x\n");
}

}  // namespace

TEST_CASE("two loops at one vertex make it doubly cyclic") {
  Quiver q = parse_quiver("vertex a\narrow f: a -> a\narrow g: a -> a");
  auto dec = strongly_connected_cycles(q);
  CHECK(dec.cycles.empty());
  REQUIRE(dec.doubly_cyclic.size() == 1);
  CHECK(q.vertex_id(dec.doubly_cyclic[0]) == "a");
  CHECK(!gk_dimension(q).finite);
}

TEST_CASE("degenerate Sklyanin graph has doubly cyclic vertices") {
  auto alg = parse_algebra("gens u v w\nrel uv\nrel vw\nrel wu\n");
  Quiver q = ufnarovskii_graph(alg.presentation);
  auto dec = strongly_connected_cycles(q);
  CHECK(!dec.doubly_cyclic.empty());
  CHECK(!gk_dimension(q).finite);
}

TEST_CASE("loop-arrow-loop quiver has two cycles and no doubly cyclic vertex") {
  Quiver q = parse_quiver(kExample8);
  auto dec = strongly_connected_cycles(q);
  CHECK(dec.cycles.size() == 2);
  CHECK(dec.doubly_cyclic.empty());
}

TEST_CASE("cycle poset of the worked example is a 2-chain") {
  auto p = cycle_poset(parse_quiver(kExample8));
  REQUIRE(p.cycles.size() == 2);
  CHECK(p.leq[0][1]);
  CHECK(!p.leq[1][0]);
}

TEST_CASE("two disjoint loops form an antichain") {
  Quiver q = parse_quiver("vertex a\nvertex b\narrow p: a -> a\narrow q: b -> b");
  auto p = cycle_poset(q);
  REQUIRE(p.cycles.size() == 2);
  CHECK(!p.leq[0][1]);
  CHECK(!p.leq[1][0]);
}

TEST_CASE("a single 3-cycle gives a singleton poset") {
  Quiver q = parse_quiver("vertex a\nvertex b\nvertex c\narrow x: a -> b\narrow y: b -> c\narrow z: c -> a");
  auto p = cycle_poset(q);
  CHECK(p.cycles.size() == 1);
  CHECK(p.cycles[0].length() == 3);
}

TEST_CASE("cycle_poset rejects infinite GK input") {
  Quiver q = parse_quiver("vertex a\narrow f: a -> a\narrow g: a -> a");
  CHECK_THROWS_AS(cycle_poset(q), NotFiniteGK);
}

TEST_CASE("gk dimension examples") {
  CHECK(gk_dimension(parse_quiver("vertex a\nvertex b\narrow f: a -> b")).gk_dimension == 0);
  auto rep = gk_dimension(xy_graph());
  CHECK(rep.finite);
  CHECK(rep.gk_dimension == 2);
  CHECK(rep.max_chain.size() == 2);
}

TEST_CASE("growth oracle on small quivers") {
  Quiver loop = parse_quiver("vertex a\narrow f: a -> a");
  auto r = growth_oracle(loop, 10);
  for (const auto& x : r) CHECK(x == 1);

  auto r8 = growth_oracle(parse_quiver(kExample8), 10);
  for (unsigned n = 0; n <= 10; ++n) CHECK(r8[n] == n + 2);

  Quiver two = parse_quiver("vertex a\narrow f: a -> a\narrow g: a -> a");
  auto rt = growth_oracle(two, 10);
  Int expect = 1;
  for (unsigned n = 0; n <= 10; ++n, expect *= 2) CHECK(rt[n] == expect);
}

TEST_CASE("growth oracle agrees with exhaustive path lists") {
  Quiver q = parse_quiver(kExample8);
  auto table = oracles::enumerate_paths(q, 6);
  auto r = growth_oracle(q, 6);
  for (unsigned len = 0; len <= 6; ++len) {
    std::size_t total = 0;
    for (const auto& [key, paths] : table)
      if (std::get<2>(key) == len) total += paths.size();
    CHECK(r[len] == Int(static_cast<long>(total)));
  }
}

TEST_CASE("finiteness criterion is equivalent to the SCC shape across the corpus") {
  oracles::CorpusParams params;
  params.count = 120;
  for (const auto& q : oracles::random_corpus(params)) {
    auto dec = strongly_connected_cycles(q);
    auto rep = gk_dimension(q);
    CHECK(rep.finite == dec.doubly_cyclic.empty());
    if (rep.finite) {
      CHECK_NOTHROW(cycle_poset(q));
      CHECK(rep.doubly_cyclic.empty());
      CHECK(static_cast<int>(rep.max_chain.size()) == rep.gk_dimension);
    } else {
      CHECK_THROWS_AS(cycle_poset(q), NotFiniteGK);
      CHECK(!rep.doubly_cyclic.empty());
    }
  }
}

TEST_CASE("polynomial growth stays within a bounded envelope") {
  // gk d >= 1 means r_n = Theta(n^{d-1}); on [10,40] the normalized
  // ratios have to stay within a modest instance-level band
  oracles::CorpusParams params;
  params.count = 60;
  for (const auto& q : oracles::random_corpus(params)) {
    auto rep = gk_dimension(q);
    if (!rep.finite || rep.gk_dimension < 1) continue;
    auto r = growth_oracle(q, 40);
    Rat lo, hi;
    bool first = true;
    for (unsigned n = 10; n <= 40; ++n) {
      Int denom = 1;
      for (int t = 1; t < rep.gk_dimension; ++t) denom *= n;
      Rat ratio = Rat(r[n]) / Rat(denom);
      if (first) {
        lo = hi = ratio;
        first = false;
      } else {
        if (ratio < lo) lo = ratio;
        if (ratio > hi) hi = ratio;
      }
    }
    CHECK(lo > 0);
    CHECK(hi <= lo * 64);
  }
}

TEST_CASE("veronese preserves finiteness of GK dimension") {
  oracles::CorpusParams params;
  params.count = 40;
  params.max_arrows = 7;
  for (const auto& q : oracles::random_corpus(params)) {
    bool fin = gk_dimension(q).finite;
    for (unsigned d = 2; d <= 4; ++d) {
      auto m = incidence_matrix(q).pow(d);
      Int total = 0;
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) total += m(i, j);
      if (total > 20000) continue;
      CHECK(gk_dimension(veronese(q, d)).finite == fin);
    }
  }
}

TEST_CASE("growth report serializes to the documented schema") {
  auto s = to_json(gk_dimension(parse_quiver(kExample8)));
  CHECK(s.find("\"finite\":true") != std::string::npos);
  CHECK(s.find("\"gk\":2") != std::string::npos);
  auto s2 = to_json(gk_dimension(parse_quiver("vertex a\narrow f: a -> a\narrow g: a -> a")));
  CHECK(s2.find("\"finite\":false") != std::string::npos);
  CHECK(s2.find("\"gk\":null") != std::string::npos);
  CHECK(s2.find("\"doubly_cyclic\":[\"a\"]") != std::string::npos);
}
