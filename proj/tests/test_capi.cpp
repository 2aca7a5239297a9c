// Exercises the shared-library surface end to end: handles, error
// codes, and the JSON payloads the CLI consumes.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "qgr.h"

namespace {

const char* kExample8 =
    "vertex a\nvertex b\narrow f: a -> b\narrow p: a -> a\narrow q: b -> b\n";

struct QuiverHandle {
  qgr_quiver* q = nullptr;
  ~QuiverHandle() { qgr_quiver_free(q); }
};

struct StringOut {
  char* s = nullptr;
  ~StringOut() { qgr_string_free(s); }
  std::string str() const { return s ? s : ""; }
};

}  // namespace

TEST_CASE("parse, serialize and free") {
  QuiverHandle h;
  REQUIRE(qgr_quiver_parse(kExample8, &h.q) == QGR_OK);
  CHECK(qgr_quiver_vertex_count(h.q) == 2);
  CHECK(qgr_quiver_arrow_count(h.q) == 3);
  StringOut text, json, dot;
  CHECK(qgr_quiver_serialize(h.q, "text", &text.s) == QGR_OK);
  CHECK(qgr_quiver_serialize(h.q, "json", &json.s) == QGR_OK);
  CHECK(qgr_quiver_serialize(h.q, "dot", &dot.s) == QGR_OK);
  CHECK(text.str().find("arrow f: a -> b") != std::string::npos);
  CHECK(dot.str().find("digraph") != std::string::npos);

  QuiverHandle round;
  REQUIRE(qgr_quiver_from_json(json.s, &round.q) == QGR_OK);
  CHECK(qgr_quiver_vertex_count(round.q) == 2);
}

TEST_CASE("parse errors surface a message") {
  qgr_quiver* q = nullptr;
  CHECK(qgr_quiver_parse("arrow f: a -> b", &q) == QGR_ERR_PARSE);
  CHECK(std::string(qgr_last_error()).find("dangling") != std::string::npos);
  CHECK(qgr_quiver_serialize(nullptr, "text", nullptr) == QGR_ERR_INVALID);
}

TEST_CASE("growth and cycle reports") {
  QuiverHandle h;
  REQUIRE(qgr_quiver_parse(kExample8, &h.q) == QGR_OK);
  StringOut growth, cycles, verify;
  CHECK(qgr_growth_json(h.q, &growth.s) == QGR_OK);
  CHECK(growth.str().find("\"gk\":2") != std::string::npos);
  CHECK(qgr_cycles_json(h.q, &cycles.s) == QGR_OK);
  CHECK(cycles.str().find("\"finite\":true") != std::string::npos);
  CHECK(qgr_growth_verify_json(h.q, &verify.s) == QGR_OK);
  CHECK(verify.str().find("\"agrees\":true") != std::string::npos);
}

TEST_CASE("infinite GK maps to its status code") {
  QuiverHandle h;
  REQUIRE(qgr_quiver_parse("vertex a\narrow p: a -> a\narrow r: a -> a", &h.q) == QGR_OK);
  StringOut out;
  CHECK(qgr_simples_json(h.q, &out.s) == QGR_ERR_NOT_FINITE_GK);
  CHECK(std::string(qgr_last_error()).find("doubly cyclic") != std::string::npos);
}

TEST_CASE("monomial algebra pipeline") {
  qgr_quiver* graph = nullptr;
  StringOut warnings;
  REQUIRE(qgr_algebra_graph("gens x y\nrel xy\nrel xyx\n", &graph, &warnings.s) == QGR_OK);
  CHECK(qgr_quiver_vertex_count(graph) == 2);
  CHECK(qgr_quiver_arrow_count(graph) == 3);
  CHECK(warnings.str().find("redundant") != std::string::npos);
  StringOut growth;
  CHECK(qgr_growth_json(graph, &growth.s) == QGR_OK);
  CHECK(growth.str().find("\"gk\":2") != std::string::npos);
  qgr_quiver_free(graph);
}

TEST_CASE("ext quiver, canonical form and equivalence") {
  QuiverHandle h;
  REQUIRE(qgr_quiver_parse(kExample8, &h.q) == QGR_OK);
  qgr_quiver* e = nullptr;
  REQUIRE(qgr_ext_quiver(h.q, &e) == QGR_OK);
  CHECK(qgr_quiver_vertex_count(e) == 2);
  CHECK(qgr_quiver_arrow_count(e) == 1);
  qgr_quiver_free(e);

  StringOut poset;
  CHECK(qgr_ext_poset_json(h.q, &poset.s) == QGR_OK);
  CHECK(poset.str().find("covers") != std::string::npos);

  qgr_quiver* canon = nullptr;
  REQUIRE(qgr_canonical(h.q, &canon) == QGR_OK);
  int equivalent = 0;
  StringOut witness;
  CHECK(qgr_equivalent_verified(h.q, canon, &equivalent, &witness.s) == QGR_OK);
  CHECK(equivalent == 1);
  CHECK(witness.str().find("bijection") != std::string::npos);
  qgr_quiver_free(canon);
}

TEST_CASE("K0 report and cone queries") {
  QuiverHandle h;
  REQUIRE(qgr_quiver_parse(kExample8, &h.q) == QGR_OK);
  StringOut k0;
  CHECK(qgr_k0_json(h.q, &k0.s) == QGR_OK);
  CHECK(k0.str().find("\"rank\":2") != std::string::npos);
  int member = -1;
  CHECK(qgr_cone_contains(h.q, "1,-5", &member) == QGR_OK);
  CHECK(member == 1);
  CHECK(qgr_cone_contains(h.q, "-1,100", &member) == QGR_OK);
  CHECK(member == 0);
  int verdict = -2;
  CHECK(qgr_cone_oracle(h.q, "1,-5", 50, &verdict) == QGR_OK);
  CHECK(verdict == 1);
  CHECK(qgr_cone_oracle(h.q, "-1,100", 50, &verdict) == QGR_OK);
  CHECK(verdict == 0);
  CHECK(qgr_cone_contains(h.q, "1", &member) == QGR_ERR_INVALID);  // wrong length
}

TEST_CASE("hom dimensions through the C surface") {
  QuiverHandle h;
  REQUIRE(qgr_quiver_parse(kExample8, &h.q) == QGR_OK);
  int dim = -1, stabilized = 0;
  CHECK(qgr_hom_dim(h.q, "a", "a", 15, &dim, &stabilized) == QGR_OK);
  CHECK(dim == 1);
  CHECK(stabilized == 1);
  CHECK(qgr_hom_dim(h.q, "a", "b", 15, &dim, &stabilized) == QGR_OK);
  CHECK(dim == 0);
}

TEST_CASE("extension splitting through the C surface") {
  QuiverHandle h;
  REQUIRE(qgr_quiver_parse("vertex v\nvertex w\narrow p: v -> v\narrow q: w -> w\narrow r: v -> w",
                           &h.q) == QGR_OK);
  int verdict = -2, witness = -2;
  CHECK(qgr_ext_split(h.q, "v", "w", "r", "1,1,1,1,1,1,1,1,1,1,1,1,1,1,1", 15, &verdict,
                      &witness) == QGR_OK);
  CHECK(verdict == 0);  // nonsplit
  CHECK(qgr_ext_split(h.q, "v", "w", "r", "1", 15, &verdict, &witness) == QGR_OK);
  CHECK(verdict == 1);  // splits from degree 1 on
  CHECK(witness == 1);
}

TEST_CASE("point module serialization and classification") {
  QuiverHandle h;
  REQUIRE(qgr_quiver_parse(
              "vertex a\nvertex b\nvertex c\narrow x: a -> b\narrow y: b -> c\narrow z: c -> a",
              &h.q) == QGR_OK);
  StringOut rep;
  REQUIRE(qgr_point_module_json(h.q, "a", 10, 1, &rep.s) == QGR_OK);
  StringOut cls;
  REQUIRE(qgr_point_classify(rep.s, &cls.s) == QGR_OK);
  CHECK(cls.str().find("\"vertex\":\"b\"") != std::string::npos);
}

TEST_CASE("matricial and combined reports") {
  QuiverHandle h;
  REQUIRE(qgr_quiver_parse(kExample8, &h.q) == QGR_OK);
  StringOut mat, gk1, rep;
  CHECK(qgr_matricial_json(h.q, 6, &mat.s) == QGR_OK);
  CHECK(mat.str().find("bratteli") != std::string::npos);
  CHECK(qgr_gk1_json(h.q, &gk1.s) == QGR_OK);
  CHECK(gk1.str().find("\"applicable\":false") != std::string::npos);
  int left = -1, right = -1;
  CHECK(qgr_noetherian(h.q, &left, &right) == QGR_OK);
  CHECK(left == 0);
  CHECK(right == 0);
  CHECK(qgr_report_json(h.q, 15, 50, &rep.s) == QGR_OK);
  CHECK(rep.str().find("\"k0\"") != std::string::npos);
  CHECK(rep.str().find("\"canonical\"") != std::string::npos);
}

TEST_CASE("reports are byte-identical across calls") {
  QuiverHandle h;
  REQUIRE(qgr_quiver_parse(kExample8, &h.q) == QGR_OK);
  StringOut a, b;
  REQUIRE(qgr_report_json(h.q, 15, 50, &a.s) == QGR_OK);
  REQUIRE(qgr_report_json(h.q, 15, 50, &b.s) == QGR_OK);
  CHECK(a.str() == b.str());
}
