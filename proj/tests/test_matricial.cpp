#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qgr/errors.hpp"
#include "qgr/growth.hpp"
#include "qgr/matricial.hpp"
#include "qgr/oracles.hpp"

using namespace qgr;

namespace {

const char* kExample8 =
    "vertex a\nvertex b\narrow f: a -> b\narrow p: a -> a\narrow q: b -> b\n";

Quiver n_cycle(int n) {
  std::string text;
  for (int i = 0; i < n; ++i) text += "vertex c" + std::to_string(i) + "\n";
  for (int i = 0; i < n; ++i)
    text += "arrow a" + std::to_string(i) + ": c" + std::to_string(i) + " -> c" +
            std::to_string((i + 1) % n) + "\n";
  return parse_quiver(text);
}

}  // namespace

TEST_CASE("Bratteli data of fixed quivers") {
  auto loop = bratteli(parse_quiver("vertex a\narrow p: a -> a"), 8);
  for (const auto& v : loop.p) CHECK(v == std::vector<Int>{1});

  auto ex = bratteli(parse_quiver(kExample8), 8);
  for (unsigned m = 0; m <= 8; ++m) {
    CHECK(ex.p[m][0] == 1);
    CHECK(ex.p[m][1] == m + 1);
  }

  auto two = bratteli(parse_quiver("vertex a\narrow p: a -> a\narrow q: a -> a"), 8);
  Int expect = 1;
  for (unsigned m = 0; m <= 8; ++m, expect *= 2) CHECK(two.p[m][0] == expect);
}

TEST_CASE("Bratteli sums count all paths") {
  oracles::CorpusParams params;
  params.count = 50;
  for (const auto& q : oracles::random_corpus(params)) {
    auto seq = bratteli(q, 12);
    auto r = growth_oracle(q, 12);
    for (unsigned m = 0; m <= 12; ++m) {
      Int total = 0;
      for (const auto& x : seq.p[m]) total += x;
      CHECK(total == r[m]);
    }
  }
}

TEST_CASE("endomorphism blocks of a single cycle") {
  for (int n : {1, 4}) {
    auto endo = endo_block_dims(n_cycle(n), 6);
    for (const auto& blocks : endo.blocks) {
      CHECK(blocks.size() == static_cast<std::size_t>(n));
      for (const auto& [id, dim] : blocks) CHECK(dim == 1);
    }
  }
}

TEST_CASE("endomorphism blocks of the worked example") {
  auto endo = endo_block_dims(parse_quiver(kExample8), 6);
  for (unsigned m = 0; m <= 6; ++m) {
    REQUIRE(endo.blocks[m].size() == 2);
    CHECK(endo.blocks[m].at("a") == 1);
    CHECK(endo.blocks[m].at("b") == m + 1);
  }
}

TEST_CASE("endo blocks reject infinite GK input") {
  Quiver q = parse_quiver("vertex a\narrow p: a -> a\narrow q: a -> a");
  CHECK_THROWS_AS(endo_block_dims(q, 4), NotFiniteGK);
}

TEST_CASE("dead branches carry no blocks") {
  // loop at a, arrow into a sink: the sink is not live
  Quiver q = parse_quiver("vertex a\nvertex b\narrow p: a -> a\narrow f: a -> b");
  auto endo = endo_block_dims(q, 5);
  for (const auto& blocks : endo.blocks) {
    CHECK(blocks.size() == 1);
    CHECK(blocks.count("a") == 1);
  }
}

TEST_CASE("Noetherian criteria") {
  for (int n : {1, 2, 5}) {
    auto rep = noetherian_check(n_cycle(n));
    CHECK(rep.left);
    CHECK(rep.right);
  }
  Quiver xy = parse_quiver("vertex x\nvertex y\narrow xx: x -> x\narrow yy: y -> y\narrow yx: y -> x");
  auto rep = noetherian_check(xy);
  CHECK(!rep.left);   // x has in-degree 2
  CHECK(!rep.right);  // y has out-degree 2
  auto acyclic = noetherian_check(parse_quiver("vertex a\nvertex b\narrow f: a -> b"));
  CHECK(acyclic.left);
  CHECK(acyclic.right);
}

TEST_CASE("GK-one quivers are semisimple") {
  auto c4 = gk1_report(n_cycle(4));
  REQUIRE(c4.applicable);
  CHECK(c4.simple_count == 4);
  CHECK(c4.noetherian_left);
  CHECK(c4.noetherian_right);

  Quiver loops3 = parse_quiver(
      "vertex a\nvertex b\nvertex c\narrow p: a -> a\narrow q: b -> b\narrow r: c -> c");
  auto rep3 = gk1_report(loops3);
  REQUIRE(rep3.applicable);
  CHECK(rep3.simple_count == 3);

  CHECK(!gk1_report(parse_quiver(kExample8)).applicable);  // GK 2
}

TEST_CASE("Noetherian implies GK at most one across the corpus") {
  oracles::CorpusParams params;
  params.count = 120;
  for (const auto& q : oracles::random_corpus(params)) {
    auto rep = noetherian_check(q);
    if (rep.left || rep.right) {
      auto growth = gk_dimension(q);
      REQUIRE(growth.finite);
      CHECK(growth.gk_dimension <= 1);
    }
  }
}

TEST_CASE("GK one forces all-ones blocks across the corpus") {
  oracles::CorpusParams params;
  params.count = 120;
  for (const auto& q : oracles::random_corpus(params)) {
    auto growth = gk_dimension(q);
    if (!growth.finite || growth.gk_dimension != 1) continue;
    auto endo = endo_block_dims(q, 8);
    std::size_t cyclic = cyclic_vertices(q).size();
    for (std::size_t m = 4; m <= 8; ++m) {
      CHECK(endo.blocks[m].size() == cyclic);
      for (const auto& [id, dim] : endo.blocks[m]) CHECK(dim == 1);
    }
  }
}

TEST_CASE("matricial JSON schema") {
  auto s = matricial_json(parse_quiver(kExample8), 3);
  CHECK(s.find("\"bratteli\"") != std::string::npos);
  CHECK(s.find("\"endo_blocks\"") != std::string::npos);
  CHECK(s.find("\"noetherian\"") != std::string::npos);
  CHECK(s.find("\"left\":false") != std::string::npos);
}
