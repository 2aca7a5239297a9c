#include "qgr/ext_quiver.hpp"

#include <deque>
#include <json.hpp>

#include "qgr/errors.hpp"
#include "qgr/growth.hpp"

namespace qgr {

Poset ExtQuiver::poset() const {
  const std::size_t n = vertices.size();
  std::vector<std::vector<bool>> lt(n, std::vector<bool>(n, false));
  for (auto [v, w] : arrows) lt[v][w] = true;
  return Poset(vertices, std::move(lt));
}

Quiver ExtQuiver::as_quiver() const {
  std::vector<std::tuple<std::string, std::string, std::string>> as;
  for (auto [v, w] : arrows)
    as.emplace_back(vertices[v] + "__" + vertices[w], vertices[v], vertices[w]);
  return Quiver("", vertices, std::move(as));
}

std::vector<CyclicVertex> cyclic_vertices(const Quiver& q) {
  auto dec = strongly_connected_cycles(q);
  if (!dec.finite()) {
    std::vector<std::string> ids;
    for (int v : dec.doubly_cyclic) ids.push_back(q.vertex_id(v));
    throw NotFiniteGK(std::move(ids));
  }
  std::vector<std::optional<unsigned>> len(q.vertex_count());
  for (const auto& c : dec.cycles)
    for (int v : c.vertices) len[v] = static_cast<unsigned>(c.length());
  std::vector<CyclicVertex> out;
  for (std::size_t v = 0; v < q.vertex_count(); ++v)
    if (len[v]) out.push_back({q.vertex_id(v), *len[v]});
  return out;
}

bool has_path_multiple(const Quiver& q, const std::string& v, const std::string& w, unsigned k) {
  if (k == 0) throw std::invalid_argument("modulus must be positive");
  const int vi = q.vertex_index(v);
  const int wi = q.vertex_index(w);
  const std::size_t n = q.vertex_count();
  std::vector<bool> visited(n * k, false);
  std::deque<std::pair<int, unsigned>> queue;
  visited[vi * k + 0] = true;
  queue.emplace_back(vi, 0u);
  while (!queue.empty()) {
    auto [u, r] = queue.front();
    queue.pop_front();
    for (int ai : q.out_arrows(u)) {
      int t = q.arrows()[ai].tgt;
      unsigned r2 = (r + 1) % k;
      if (t == wi && r2 == 0) return true;  // arrived with positive length
      if (!visited[t * k + r2]) {
        visited[t * k + r2] = true;
        queue.emplace_back(t, r2);
      }
    }
  }
  return false;
}

ExtQuiver ext_quiver(const Quiver& q) {
  auto cyc = cyclic_vertices(q);
  ExtQuiver e;
  for (const auto& c : cyc) {
    e.vertices.push_back(c.vertex);
    e.cycle_lengths.push_back(c.cycle_length);
  }
  const std::size_t p = e.vertices.size();
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j) {
      if (i == j) continue;
      if (has_path_multiple(q, e.vertices[i], e.vertices[j],
                            e.cycle_lengths[i] * e.cycle_lengths[j]))
        e.arrows.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  return e;
}

Quiver gamma(const Poset& p) {
  std::vector<std::tuple<std::string, std::string, std::string>> arrows;
  for (std::size_t i = 0; i < p.size(); ++i)
    arrows.emplace_back("loop_" + p.element(i), p.element(i), p.element(i));
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j)
      if (p.less(i, j))
        arrows.emplace_back(p.element(i) + "__" + p.element(j), p.element(i), p.element(j));
  return Quiver("", p.elements(), std::move(arrows));
}

EquivalenceWitness qgr_equivalent(const Quiver& q, const Quiver& q2) {
  ExtQuiver ea = ext_quiver(q);
  ExtQuiver eb = ext_quiver(q2);
  EquivalenceWitness w;
  if (ea.vertices.size() != eb.vertices.size()) {
    w.equivalent = false;
    w.distinguishing = "different number of simple objects: " +
                       std::to_string(ea.vertices.size()) + " vs " +
                       std::to_string(eb.vertices.size());
    return w;
  }
  Poset pa = ea.poset(), pb = eb.poset();
  auto iso = poset_isomorphism(pa, pb);
  if (!iso) {
    w.equivalent = false;
    if (ea.arrows.size() != eb.arrows.size())
      w.distinguishing = "different Ext-quiver arrow counts: " +
                         std::to_string(ea.arrows.size()) + " vs " +
                         std::to_string(eb.arrows.size());
    else
      w.distinguishing = "Ext-quivers are not isomorphic (search exhausted)";
    return w;
  }
  w.equivalent = true;
  for (std::size_t i = 0; i < pa.size(); ++i)
    w.bijection.emplace_back(pa.element(i), pb.element((*iso)[i]));
  return w;
}

int gk_from_ext_quiver(const ExtQuiver& e) { return e.poset().longest_chain(); }

std::string ext_poset_json(const ExtQuiver& e) {
  nlohmann::json j;
  j["elements"] = e.vertices;
  nlohmann::json cov = nlohmann::json::array();
  for (auto [i, k] : e.poset().covers())
    cov.push_back({e.vertices[i], e.vertices[k]});
  j["covers"] = cov;
  return j.dump();
}

}  // namespace qgr
