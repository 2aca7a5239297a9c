#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qgr/errors.hpp"
#include "qgr/oracles.hpp"
#include "qgr/quiver.hpp"

using namespace qgr;

namespace {

const char* kExample8 =
    "vertex a\nvertex b\narrow f: a -> b\narrow p: a -> a\narrow q: b -> b\n";

Quiver three_cycle() {
  return parse_quiver("vertex a\nvertex b\nvertex c\narrow x: a -> b\narrow y: b -> c\narrow z: c -> a\n");
}

}  // namespace

TEST_CASE("parse smallest loop quiver") {
  Quiver q = parse_quiver("vertex a\narrow f: a -> a");
  CHECK(q.vertex_count() == 1);
  CHECK(q.arrow_count() == 1);
  CHECK(q.arrows()[0].src == q.arrows()[0].tgt);
}

TEST_CASE("parse the two-vertex quiver with loops") {
  Quiver q = parse_quiver(kExample8);
  CHECK(q.vertex_count() == 2);
  CHECK(q.arrow_count() == 3);
  CHECK(q.vertex_id(0) == "a");  // declaration order preserved
  CHECK(q.vertex_id(1) == "b");
}

TEST_CASE("parse errors carry line numbers") {
  CHECK_THROWS_AS(parse_quiver("arrow f: a -> b"), ParseError);
  CHECK_THROWS_AS(parse_quiver("vertex a\nvertex a"), ParseError);
  CHECK_THROWS_AS(parse_quiver("vertex a\narrow f: a -> b"), ParseError);
  CHECK_THROWS_AS(parse_quiver("vertex a\nnonsense"), ParseError);
  try {
    parse_quiver("vertex a\narrow f a -> a");
  } catch (const ParseError& e) {
    CHECK(e.line_number == 2);
  }
}

TEST_CASE("comments and blank lines are ignored") {
  Quiver q = parse_quiver("# header\n\nvertex a  # trailing\narrow f: a -> a\n");
  CHECK(q.vertex_count() == 1);
}

TEST_CASE("duplicate arrow identifiers are rejected") {
  CHECK_THROWS_AS(parse_quiver("vertex a\narrow f: a -> a\narrow f: a -> a"), ParseError);
}

TEST_CASE("veronese power must be positive") {
  CHECK_THROWS_AS(veronese(parse_quiver("vertex a\narrow f: a -> a"), 0), std::invalid_argument);
}

TEST_CASE("incidence matrix of the worked example") {
  auto m = incidence_matrix(parse_quiver(kExample8));
  CHECK(m(0, 0) == 1);
  CHECK(m(0, 1) == 1);
  CHECK(m(1, 0) == 0);
  CHECK(m(1, 1) == 1);
}

TEST_CASE("incidence matrix of a single vertex") {
  auto m = incidence_matrix(parse_quiver("vertex a\n"));
  CHECK(m.rows() == 1);
  CHECK(m(0, 0) == 0);
}

TEST_CASE("3-cycle incidence cubes to the identity") {
  auto m = incidence_matrix(three_cycle());
  CHECK(m.pow(3) == IntMatrix::identity(3));
  // cross-check against full enumeration
  Quiver q = three_cycle();
  for (const auto& u : q.vertices())
    for (const auto& v : q.vertices())
      CHECK(count_paths(q, u, v, 3) == oracles::count_paths_bruteforce(q, u, v, 3));
}

TEST_CASE("count_paths on the worked example") {
  Quiver q = parse_quiver(kExample8);
  CHECK(count_paths(q, "a", "b", 3) == 3);  // M^3 = [[1,3],[0,1]]
  CHECK(count_paths(q, "a", "a", 0) == 1);
  CHECK(count_paths(q, "b", "a", 5) == 0);
}

TEST_CASE("count_paths on a 3-cycle") {
  Quiver q = three_cycle();
  CHECK(count_paths(q, "a", "a", 4) == 0);
  CHECK(count_paths(q, "a", "a", 4) == oracles::count_paths_bruteforce(q, "a", "a", 4));
}

TEST_CASE("veronese of a single loop is a single loop") {
  Quiver q = parse_quiver("vertex a\narrow f: a -> a");
  for (unsigned d : {1u, 2u, 5u}) {
    Quiver v = veronese(q, d);
    CHECK(v.vertex_count() == 1);
    CHECK(v.arrow_count() == 1);
  }
}

TEST_CASE("veronese square of a 2-cycle is two disjoint loops") {
  Quiver q = parse_quiver("vertex a\nvertex b\narrow f: a -> b\narrow g: b -> a");
  Quiver v = veronese(q, 2);
  auto m = incidence_matrix(v);
  CHECK(m == IntMatrix::identity(2));
}

TEST_CASE("veronese square of the worked example") {
  Quiver v = veronese(parse_quiver(kExample8), 2);
  auto m = incidence_matrix(v);
  CHECK(m(0, 0) == 1);
  CHECK(m(0, 1) == 2);
  CHECK(m(1, 0) == 0);
  CHECK(m(1, 1) == 1);
  CHECK(v.arrow_count() == 4);
}

TEST_CASE("serialization round trips") {
  Quiver q = parse_quiver(kExample8);
  Quiver q2 = parse_quiver(serialize(q, QuiverFormat::Text));
  CHECK(serialize(q2, QuiverFormat::Text) == serialize(q, QuiverFormat::Text));
  Quiver q3 = quiver_from_json(serialize(q, QuiverFormat::Json));
  CHECK(serialize(q3, QuiverFormat::Text) == serialize(q, QuiverFormat::Text));
}

TEST_CASE("empty quiver serializes to a valid empty document") {
  Quiver q = parse_quiver("");
  CHECK(q.vertex_count() == 0);
  Quiver q2 = parse_quiver(serialize(q, QuiverFormat::Text));
  CHECK(q2.vertex_count() == 0);
  Quiver q3 = quiver_from_json(serialize(q, QuiverFormat::Json));
  CHECK(q3.vertex_count() == 0);
}

TEST_CASE("dot export lists every vertex and arrow") {
  std::string dot = serialize(parse_quiver(kExample8), QuiverFormat::Dot);
  std::size_t edges = 0;
  for (std::size_t at = dot.find("->"); at != std::string::npos; at = dot.find("->", at + 1)) ++edges;
  CHECK(edges == 3);
  CHECK(dot.find("\"a\";") != std::string::npos);
  CHECK(dot.find("\"b\";") != std::string::npos);
}

TEST_CASE("path counts match incidence powers across the corpus") {
  oracles::CorpusParams params;
  params.count = 40;
  auto corpus = oracles::random_corpus(params);
  for (const auto& q : corpus) {
    auto m = incidence_matrix(q);
    IntMatrix p = IntMatrix::identity(q.vertex_count());
    for (unsigned len = 0; len <= 8; ++len) {
      for (std::size_t u = 0; u < q.vertex_count(); ++u)
        for (std::size_t v = 0; v < q.vertex_count(); ++v)
          CHECK(count_paths(q, q.vertex_id(u), q.vertex_id(v), len) == p(u, v));
      p = p * m;
    }
  }
}

TEST_CASE("veronese incidence equals incidence powers across the corpus") {
  oracles::CorpusParams params;
  params.count = 25;
  auto corpus = oracles::random_corpus(params);
  for (const auto& q : corpus) {
    auto m = incidence_matrix(q);
    for (unsigned d : {1u, 2u, 3u, 5u}) {
      IntMatrix expect = m.pow(d);
      Int total = 0;
      for (std::size_t i = 0; i < expect.rows(); ++i)
        for (std::size_t j = 0; j < expect.cols(); ++j) total += expect(i, j);
      if (total > 20000) continue;
      CHECK(incidence_matrix(veronese(q, d)) == expect);
    }
  }
}

TEST_CASE("veronese composes multiplicatively") {
  oracles::CorpusParams params;
  params.count = 15;
  params.max_arrows = 6;
  auto corpus = oracles::random_corpus(params);
  for (const auto& q : corpus) {
    auto m = incidence_matrix(q);
    Int total = 0;
    auto m6 = m.pow(6);
    for (std::size_t i = 0; i < m6.rows(); ++i)
      for (std::size_t j = 0; j < m6.cols(); ++j) total += m6(i, j);
    if (total > 20000) continue;
    CHECK(incidence_matrix(veronese(veronese(q, 2), 3)) == incidence_matrix(veronese(q, 6)));
  }
}

TEST_CASE("parse after serialize is the identity across the corpus") {
  oracles::CorpusParams params;
  params.count = 30;
  auto corpus = oracles::random_corpus(params);
  for (const auto& q : corpus) {
    Quiver t = parse_quiver(serialize(q, QuiverFormat::Text));
    CHECK(t.vertices() == q.vertices());
    CHECK(t.arrow_count() == q.arrow_count());
    Quiver j = quiver_from_json(serialize(q, QuiverFormat::Json));
    CHECK(j.vertices() == q.vertices());
    CHECK(serialize(j, QuiverFormat::Json) == serialize(q, QuiverFormat::Json));
  }
}
