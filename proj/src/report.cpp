#include "qgr/report.hpp"

#include <json.hpp>

#include <memory>

#include "qgr/errors.hpp"
#include "qgr/ext_quiver.hpp"
#include "qgr/graded_rep.hpp"
#include "qgr/growth.hpp"
#include "qgr/k0.hpp"
#include "qgr/matricial.hpp"
#include "qgr/oracles.hpp"

namespace qgr {

using nlohmann::json;

std::string simples_json(const Quiver& q) {
  json j;
  json list = json::array();
  for (const auto& c : cyclic_vertices(q))
    list.push_back({{"vertex", c.vertex}, {"cycle_length", c.cycle_length}});
  j["simples"] = list;
  return j.dump();
}

std::string cycles_json(const Quiver& q) {
  json j;
  auto dec = strongly_connected_cycles(q);
  json cycles = json::array();
  for (const auto& c : dec.cycles) {
    json cj;
    cj["base"] = q.vertex_id(c.base());
    cj["length"] = c.length();
    json vs = json::array(), as = json::array();
    for (int v : c.vertices) vs.push_back(q.vertex_id(v));
    for (int a : c.arrows) as.push_back(q.arrows()[a].id);
    cj["vertices"] = vs;
    cj["arrows"] = as;
    cycles.push_back(cj);
  }
  j["cycles"] = cycles;
  json dc = json::array();
  for (int v : dec.doubly_cyclic) dc.push_back(q.vertex_id(v));
  j["doubly_cyclic"] = dc;
  j["finite"] = dec.finite();
  if (dec.finite()) {
    auto poset = cycle_poset(q);
    json rel = json::array();
    for (std::size_t i = 0; i < poset.cycles.size(); ++i)
      for (std::size_t k = 0; k < poset.cycles.size(); ++k)
        if (i != k && poset.leq[i][k])
          rel.push_back({q.vertex_id(poset.cycles[i].base()), q.vertex_id(poset.cycles[k].base())});
    j["relation"] = rel;
  } else {
    j["relation"] = nullptr;
  }
  return j.dump();
}

std::string growth_verify_json(const Quiver& q) {
  auto check = oracles::growth_signature_check(q);
  json j;
  j["agrees"] = check.agrees;
  j["note"] = check.note;
  return j.dump();
}

std::string report_json(const Quiver& q, int cap_degree, int cap_iterations) {
  (void)cap_iterations;
  json j;
  j["quiver"] = json::parse(serialize(q, QuiverFormat::Json));
  auto growth = gk_dimension(q);
  j["growth"] = json::parse(to_json(growth));
  j["matricial"] = json::parse(matricial_json(q, 12));
  j["gk1"] = json::parse(to_json(gk1_report(q)));
  if (growth.finite) {
    j["simples"] = json::parse(simples_json(q)).at("simples");
    auto e = ext_quiver(q);
    j["ext_quiver"] = json::parse(serialize(e.as_quiver(), QuiverFormat::Json));
    j["poset"] = json::parse(ext_poset_json(e));
    j["k0"] = json::parse(k0_json(k0(q)));
    j["canonical"] = serialize(gamma(e.poset()), QuiverFormat::Text);
    // Hom dimensions between all simple objects at the degree cap
    auto shared = std::make_shared<Quiver>(q);
    std::vector<TruncatedGradedRep> modules;
    for (const auto& v : e.vertices) modules.push_back(cyclic_point_module(shared, v, cap_degree));
    json hom = json::object();
    for (std::size_t a = 0; a < e.vertices.size(); ++a) {
      json row = json::object();
      for (std::size_t b = 0; b < e.vertices.size(); ++b) {
        auto res = qgr_hom_dim(modules[a], modules[b]);
        row[e.vertices[b]] = {{"dim", res.dimension}, {"stabilized", res.stabilized}};
      }
      hom[e.vertices[a]] = row;
    }
    j["hom"] = hom;
    j["cap_degree"] = cap_degree;
  } else {
    j["simples"] = nullptr;
    j["ext_quiver"] = nullptr;
    j["poset"] = nullptr;
    j["k0"] = nullptr;
    j["canonical"] = nullptr;
    j["hom"] = nullptr;
  }
  return j.dump();
}

}  // namespace qgr
