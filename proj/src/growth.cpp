#include "qgr/growth.hpp"

#include <algorithm>
#include <functional>
#include <json.hpp>

#include "qgr/errors.hpp"

namespace qgr {

namespace {

// Iterative Tarjan SCC; components come out in reverse topological
// order and are re-sorted by least vertex for determinism.
std::vector<std::vector<int>> tarjan_scc(const Quiver& q) {
  const int n = static_cast<int>(q.vertex_count());
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
  std::vector<bool> on_stack(n, false);
  std::vector<int> stack;
  std::vector<std::vector<int>> sccs;
  int next_index = 0;

  struct Frame {
    int v;
    std::size_t ai;
  };
  for (int root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    std::vector<Frame> frames{{root, 0}};
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      Frame& f = frames.back();
      const auto& outs = q.out_arrows(f.v);
      if (f.ai < outs.size()) {
        int w = q.arrows()[outs[f.ai++]].tgt;
        if (index[w] == -1) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
      } else {
        if (low[f.v] == index[f.v]) {
          std::vector<int> scc;
          int w;
          do {
            w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            scc.push_back(w);
          } while (w != f.v);
          std::sort(scc.begin(), scc.end());
          sccs.push_back(std::move(scc));
        }
        int v = f.v;
        frames.pop_back();
        if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
      }
    }
  }
  std::sort(sccs.begin(), sccs.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return sccs;
}

}  // namespace

CycleDecomposition strongly_connected_cycles(const Quiver& q) {
  CycleDecomposition dec;
  auto sccs = tarjan_scc(q);
  for (const auto& scc : sccs) {
    std::vector<bool> in_scc(q.vertex_count(), false);
    for (int v : scc) in_scc[v] = true;
    std::vector<int> internal_arrows;
    for (std::size_t ai = 0; ai < q.arrow_count(); ++ai) {
      const auto& a = q.arrows()[ai];
      if (in_scc[a.src] && in_scc[a.tgt]) internal_arrows.push_back(static_cast<int>(ai));
    }
    if (internal_arrows.empty()) continue;  // trivial component
    bool simple = internal_arrows.size() == scc.size();
    if (simple) {
      std::vector<int> out_deg(q.vertex_count(), 0), in_deg(q.vertex_count(), 0);
      for (int ai : internal_arrows) {
        out_deg[q.arrows()[ai].src]++;
        in_deg[q.arrows()[ai].tgt]++;
      }
      for (int v : scc)
        if (out_deg[v] != 1 || in_deg[v] != 1) simple = false;
    }
    if (!simple) {
      for (int v : scc) dec.doubly_cyclic.push_back(v);
      continue;
    }
    // Walk the cycle from its least vertex.
    SimpleCycle cyc;
    std::vector<int> next_arrow(q.vertex_count(), -1);
    for (int ai : internal_arrows) next_arrow[q.arrows()[ai].src] = ai;
    int v = scc.front();
    do {
      cyc.vertices.push_back(v);
      cyc.arrows.push_back(next_arrow[v]);
      v = q.arrows()[next_arrow[v]].tgt;
    } while (v != scc.front());
    dec.cycles.push_back(std::move(cyc));
  }
  return dec;
}

std::vector<int> cycle_of_vertex(const Quiver& q, const CycleDecomposition& dec) {
  std::vector<int> of(q.vertex_count(), -1);
  for (std::size_t ci = 0; ci < dec.cycles.size(); ++ci)
    for (int v : dec.cycles[ci].vertices) of[v] = static_cast<int>(ci);
  return of;
}

namespace {

// reach[i][j]: some path (possibly trivial) runs i -> j
std::vector<std::vector<bool>> reachability(const Quiver& q) {
  const std::size_t n = q.vertex_count();
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) r[i][i] = true;
  for (const auto& a : q.arrows()) r[a.src][a.tgt] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (r[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (r[k][j]) r[i][j] = true;
  return r;
}

}  // namespace

CyclePoset cycle_poset(const Quiver& q) {
  auto dec = strongly_connected_cycles(q);
  if (!dec.finite()) {
    std::vector<std::string> ids;
    for (int v : dec.doubly_cyclic) ids.push_back(q.vertex_id(v));
    throw NotFiniteGK(std::move(ids));
  }
  auto reach = reachability(q);
  CyclePoset p;
  p.cycles = dec.cycles;
  const std::size_t m = p.cycles.size();
  p.leq.assign(m, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      p.leq[i][j] = reach[p.cycles[i].base()][p.cycles[j].base()];
  // antisymmetry is guaranteed once there is no doubly cyclic vertex
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (i != j && p.leq[i][j] && p.leq[j][i])
        throw AssertionFailure("cycle preorder failed antisymmetry on a finite-GK quiver");
  return p;
}

GrowthReport gk_dimension(const Quiver& q) {
  GrowthReport rep;
  auto dec = strongly_connected_cycles(q);
  if (!dec.finite()) {
    rep.finite = false;
    for (int v : dec.doubly_cyclic) rep.doubly_cyclic.push_back(q.vertex_id(v));
    return rep;
  }
  rep.finite = true;
  auto poset = cycle_poset(q);
  const std::size_t m = poset.cycles.size();
  // longest chain by DP over the strict order
  std::vector<int> best(m, 1), pred(m, -1);
  std::vector<std::size_t> order(m);
  for (std::size_t i = 0; i < m; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    int da = 0, db = 0;
    for (std::size_t k = 0; k < m; ++k) {
      if (poset.leq[k][a] && k != a) ++da;
      if (poset.leq[k][b] && k != b) ++db;
    }
    return da < db;
  });
  int overall = 0, overall_at = -1;
  for (std::size_t oi = 0; oi < m; ++oi) {
    std::size_t j = order[oi];
    for (std::size_t k = 0; k < m; ++k) {
      if (k == j || !poset.leq[k][j]) continue;
      if (best[k] + 1 > best[j]) {
        best[j] = best[k] + 1;
        pred[j] = static_cast<int>(k);
      }
    }
    if (best[j] > overall) {
      overall = best[j];
      overall_at = static_cast<int>(j);
    }
  }
  rep.gk_dimension = overall;
  for (int at = overall_at; at != -1; at = pred[at])
    rep.max_chain.push_back(q.vertex_id(poset.cycles[at].base()));
  std::reverse(rep.max_chain.begin(), rep.max_chain.end());
  return rep;
}

std::string to_json(const GrowthReport& r) {
  nlohmann::json j;
  j["finite"] = r.finite;
  if (r.finite)
    j["gk"] = r.gk_dimension;
  else
    j["gk"] = nullptr;
  j["doubly_cyclic"] = r.doubly_cyclic;
  j["max_chain"] = r.max_chain.empty() ? nlohmann::json::array()
                                       : nlohmann::json::array({r.max_chain});
  return j.dump();
}

std::vector<Int> growth_oracle(const Quiver& q, unsigned n_max) {
  const std::size_t n = q.vertex_count();
  IntMatrix m = incidence_matrix(q);
  std::vector<Int> counts;
  std::vector<Int> v(n, 1);  // row vector of ones; v * M^k sums columns
  for (unsigned k = 0; k <= n_max; ++k) {
    Int total = 0;
    for (const auto& x : v) total += x;
    counts.push_back(total);
    if (k < n_max) v = vec_mat(v, m);
  }
  return counts;
}

}  // namespace qgr
