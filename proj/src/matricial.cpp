#include "qgr/matricial.hpp"

#include <json.hpp>

#include "qgr/errors.hpp"
#include "qgr/ext_quiver.hpp"
#include "qgr/growth.hpp"

namespace qgr {

BratteliSequence bratteli(const Quiver& q, unsigned n_max) {
  BratteliSequence seq;
  IntMatrix mt = incidence_matrix(q).transpose();
  std::vector<Int> v(q.vertex_count(), 1);
  for (unsigned m = 0; m <= n_max; ++m) {
    seq.p.push_back(v);
    if (m < n_max) v = mat_vec(mt, v);
  }
  return seq;
}

EndoBlockDims endo_block_dims(const Quiver& q, unsigned n_max) {
  auto cyc = cyclic_vertices(q);  // throws NotFiniteGK
  std::vector<bool> cyclic(q.vertex_count(), false);
  for (const auto& c : cyc) cyclic[q.vertex_index(c.vertex)] = true;

  // live = can reach some cycle; reverse reachability from the cyclic set
  std::vector<bool> live(q.vertex_count(), false);
  std::vector<int> stack;
  for (std::size_t v = 0; v < q.vertex_count(); ++v)
    if (cyclic[v]) {
      live[v] = true;
      stack.push_back(static_cast<int>(v));
    }
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int ai : q.in_arrows(v)) {
      int s = q.arrows()[ai].src;
      if (!live[s]) {
        live[s] = true;
        stack.push_back(s);
      }
    }
  }

  EndoBlockDims out;
  IntMatrix m = incidence_matrix(q);
  IntMatrix power = IntMatrix::identity(q.vertex_count());
  for (unsigned deg = 0; deg <= n_max; ++deg) {
    std::map<std::string, Int> blocks;
    for (std::size_t i = 0; i < q.vertex_count(); ++i) {
      if (!live[i]) continue;
      Int dim = 0;
      for (std::size_t v = 0; v < q.vertex_count(); ++v)
        if (cyclic[v]) dim += power(v, i);
      if (dim != 0) blocks[q.vertex_id(i)] = dim;
    }
    out.blocks.push_back(std::move(blocks));
    if (deg < n_max) power = power * m;
  }
  return out;
}

NoetherianReport noetherian_check(const Quiver& q) {
  NoetherianReport rep{true, true};
  auto dec = strongly_connected_cycles(q);
  std::vector<bool> cyclic(q.vertex_count(), false);
  for (const auto& c : dec.cycles)
    for (int v : c.vertices) cyclic[v] = true;
  for (int v : dec.doubly_cyclic) cyclic[v] = true;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    if (!cyclic[v]) continue;
    if (q.out_arrows(v).size() != 1) rep.right = false;
    if (q.in_arrows(v).size() != 1) rep.left = false;
  }
  return rep;
}

Gk1Report gk1_report(const Quiver& q) {
  Gk1Report rep;
  auto growth = gk_dimension(q);
  rep.applicable = growth.finite && growth.gk_dimension == 1;
  if (!rep.applicable) return rep;
  rep.simple_count = static_cast<int>(cyclic_vertices(q).size());
  auto noeth = noetherian_check(q);
  rep.noetherian_left = noeth.left;
  rep.noetherian_right = noeth.right;
  return rep;
}

std::string matricial_json(const Quiver& q, unsigned n_max) {
  nlohmann::json j;
  auto seq = bratteli(q, n_max);
  nlohmann::json bj = nlohmann::json::array();
  for (const auto& vec : seq.p) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& x : vec) row.push_back(x.get_str());
    bj.push_back(row);
  }
  j["bratteli"] = bj;
  auto noeth = noetherian_check(q);
  j["noetherian"] = {{"left", noeth.left}, {"right", noeth.right}};
  if (gk_dimension(q).finite) {
    auto endo = endo_block_dims(q, n_max);
    nlohmann::json ej = nlohmann::json::array();
    for (std::size_t deg = 0; deg < endo.blocks.size(); ++deg) {
      nlohmann::json blocks = nlohmann::json::object();
      for (const auto& [id, dim] : endo.blocks[deg]) blocks[id] = dim.get_str();
      ej.push_back({{"degree", deg}, {"blocks", blocks}});
    }
    j["endo_blocks"] = ej;
  } else {
    j["endo_blocks"] = nullptr;
  }
  return j.dump();
}

std::string to_json(const Gk1Report& r) {
  nlohmann::json j;
  j["applicable"] = r.applicable;
  if (r.applicable) {
    j["n"] = r.simple_count;
    j["noetherian"] = {{"left", r.noetherian_left}, {"right", r.noetherian_right}};
  } else {
    j["n"] = nullptr;
    j["noetherian"] = nullptr;
  }
  return j.dump();
}

}  // namespace qgr
