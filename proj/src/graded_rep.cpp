#include "qgr/graded_rep.hpp"

#include <algorithm>
#include <json.hpp>

#include "qgr/errors.hpp"
#include "qgr/growth.hpp"

namespace qgr {

TruncatedGradedRep::TruncatedGradedRep(std::shared_ptr<const Quiver> quiver, int cap)
    : quiver_(std::move(quiver)), cap_(cap) {
  if (cap_ < 0) throw std::invalid_argument("degree cap must be nonnegative");
  dims_.assign(cap_ + 1, std::vector<int>(quiver_->vertex_count(), 0));
  labels_.assign(cap_ + 1, std::vector<std::vector<std::string>>(quiver_->vertex_count()));
}

int TruncatedGradedRep::total_dim(int degree) const {
  int total = 0;
  for (int d : dims_[degree]) total += d;
  return total;
}

const RatMatrix* TruncatedGradedRep::action(int arrow, int degree) const {
  auto it = actions_.find(arrow);
  if (it == actions_.end()) return nullptr;
  const RatMatrix& m = it->second[degree];
  if (m.rows() == 0 && m.cols() == 0) return nullptr;
  return &m;
}

void TruncatedGradedRep::set_dim(int vertex, int degree, int dim,
                                 std::vector<std::string> labels) {
  dims_[degree][vertex] = dim;
  if (labels.empty()) {
    labels.reserve(dim);
    for (int i = 0; i < dim; ++i)
      labels.push_back(quiver_->vertex_id(vertex) + ":" + std::to_string(degree) + ":" +
                       std::to_string(i));
  }
  if (static_cast<int>(labels.size()) != dim)
    throw DimensionMismatch("basis label count does not match dimension");
  labels_[degree][vertex] = std::move(labels);
}

void TruncatedGradedRep::set_action(int arrow, int degree, RatMatrix m) {
  auto it = actions_.find(arrow);
  if (it == actions_.end())
    it = actions_.emplace(arrow, std::vector<RatMatrix>(cap_)).first;
  it->second[degree] = std::move(m);
}

void TruncatedGradedRep::validate() const {
  for (const auto& [arrow, mats] : actions_) {
    const Arrow& a = quiver_->arrows()[arrow];
    if (static_cast<int>(mats.size()) != cap_)
      throw DimensionMismatch("action list for arrow '" + a.id + "' has wrong length");
    for (int i = 0; i < cap_; ++i) {
      const RatMatrix& m = mats[i];
      if (m.rows() == 0 && m.cols() == 0) continue;
      if (m.rows() != static_cast<std::size_t>(dims_[i][a.src]) ||
          m.cols() != static_cast<std::size_t>(dims_[i + 1][a.tgt]))
        throw DimensionMismatch("action of arrow '" + a.id + "' at degree " + std::to_string(i) +
                                " has shape " + std::to_string(m.rows()) + "x" +
                                std::to_string(m.cols()));
    }
  }
}

TruncatedGradedRep TruncatedGradedRep::shift_truncate(int z) const {
  if (z < 0 || z > cap_) throw std::invalid_argument("shift out of range");
  TruncatedGradedRep out(quiver_, cap_ - z);
  for (int deg = z; deg <= cap_; ++deg)
    for (std::size_t v = 0; v < quiver_->vertex_count(); ++v)
      out.set_dim(static_cast<int>(v), deg - z, dims_[deg][v], labels_[deg][v]);
  for (const auto& [arrow, mats] : actions_)
    for (int i = z; i < cap_; ++i)
      if (mats[i].rows() || mats[i].cols()) out.set_action(arrow, i - z, mats[i]);
  return out;
}

namespace {

// Simple cycle through v, as (vertex order starting at v, arrow order),
// or nullopt when v is acyclic. Throws NotFiniteGK first.
struct CycleAt {
  std::vector<int> vertices;
  std::vector<int> arrows;
};

std::optional<CycleAt> cycle_through(const Quiver& q, int v) {
  auto dec = strongly_connected_cycles(q);
  if (!dec.finite()) {
    std::vector<std::string> ids;
    for (int x : dec.doubly_cyclic) ids.push_back(q.vertex_id(x));
    throw NotFiniteGK(std::move(ids));
  }
  auto of = cycle_of_vertex(q, dec);
  if (of[v] < 0) return std::nullopt;
  const SimpleCycle& c = dec.cycles[of[v]];
  std::size_t at = 0;
  while (c.vertices[at] != v) ++at;
  CycleAt out;
  const std::size_t n = c.vertices.size();
  for (std::size_t k = 0; k < n; ++k) {
    out.vertices.push_back(c.vertices[(at + k) % n]);
    out.arrows.push_back(c.arrows[(at + k) % n]);
  }
  // finite GK forces the cycle arrow to be the only one between
  // consecutive cycle vertices; anything else is an internal bug
  for (std::size_t k = 0; k < n; ++k) {
    int from = out.vertices[k], to = out.vertices[(k + 1) % n];
    int parallel = 0;
    for (int ai : q.out_arrows(from))
      if (q.arrows()[ai].tgt == to) ++parallel;
    if (parallel != 1)
      throw AssertionFailure("parallel arrows along a simple cycle on a finite-GK quiver");
  }
  return out;
}

}  // namespace

TruncatedGradedRep cyclic_point_module(std::shared_ptr<const Quiver> q, const std::string& v,
                                       int cap) {
  const int vi = q->vertex_index(v);
  auto cycle = cycle_through(*q, vi);
  if (!cycle) throw NotCyclicVertex(v);
  const int n = static_cast<int>(cycle->vertices.size());
  TruncatedGradedRep rep(q, cap);
  for (int j = 0; j <= cap; ++j)
    rep.set_dim(cycle->vertices[j % n], j, 1,
                {v + ":p^" + std::to_string(j / n) + "a" + std::to_string(j % n)});
  RatMatrix one(1, 1);
  one(0, 0) = 1;
  for (int j = 0; j < cap; ++j) rep.set_action(cycle->arrows[j % n], j, one);
  return rep;
}

TruncatedGradedRep cyclic_point_module(const Quiver& q, const std::string& v, int cap) {
  return cyclic_point_module(std::make_shared<Quiver>(q), v, cap);
}

TruncatedGradedRep truncate_projective(std::shared_ptr<const Quiver> q, const std::string& v,
                                       int cap) {
  const int vi = q->vertex_index(v);
  TruncatedGradedRep rep(q, cap);

  // paths of length j from v, grouped by endpoint, in BFS order
  using PathKey = std::vector<int>;  // arrow index sequence
  std::vector<std::vector<std::pair<PathKey, int>>> frontier_by_vertex(q->vertex_count());
  frontier_by_vertex[vi].push_back({{}, vi});
  std::size_t total = 0;

  auto label_of = [&](const PathKey& path) {
    if (path.empty()) return "e_" + v;
    std::string s;
    for (std::size_t i = 0; i < path.size(); ++i) {
      if (i) s += ".";
      s += q->arrows()[path[i]].id;
    }
    return s;
  };

  for (int j = 0; j <= cap; ++j) {
    // index of each extended path within its (vertex, degree+1) component
    std::map<PathKey, int> next_position;
    std::vector<std::vector<std::pair<PathKey, int>>> next(q->vertex_count());
    for (std::size_t u = 0; u < q->vertex_count(); ++u) {
      std::vector<std::string> labels;
      for (const auto& [path, end] : frontier_by_vertex[u]) labels.push_back(label_of(path));
      rep.set_dim(static_cast<int>(u), j, static_cast<int>(frontier_by_vertex[u].size()),
                  std::move(labels));
      total += frontier_by_vertex[u].size();
      if (total > 200'000) throw ExplosionCap("projective truncation basis exceeded cap");
    }
    if (j == cap) break;
    // extend and record where each extension lands
    for (std::size_t u = 0; u < q->vertex_count(); ++u)
      for (const auto& [path, end] : frontier_by_vertex[u])
        for (int ai : q->out_arrows(static_cast<int>(u))) {
          PathKey p2 = path;
          p2.push_back(ai);
          int tgt = q->arrows()[ai].tgt;
          next_position[p2] = static_cast<int>(next[tgt].size());
          next[tgt].push_back({std::move(p2), tgt});
        }
    // arrow actions from degree j
    for (std::size_t ai = 0; ai < q->arrow_count(); ++ai) {
      const Arrow& a = q->arrows()[ai];
      const auto& rows = frontier_by_vertex[a.src];
      if (rows.empty() || next[a.tgt].empty()) continue;
      RatMatrix m(rows.size(), next[a.tgt].size());
      for (std::size_t r = 0; r < rows.size(); ++r) {
        PathKey p2 = rows[r].first;
        p2.push_back(static_cast<int>(ai));
        m(r, next_position.at(p2)) = 1;
      }
      rep.set_action(static_cast<int>(ai), j, std::move(m));
    }
    frontier_by_vertex = std::move(next);
  }
  rep.validate();
  return rep;
}

TruncatedGradedRep truncate_projective(const Quiver& q, const std::string& v, int cap) {
  return truncate_projective(std::make_shared<Quiver>(q), v, cap);
}

std::vector<int> torsion_elements(const TruncatedGradedRep& m) {
  const Quiver& q = m.quiver();
  const int cap = m.cap();
  // kernels[v] spans the certified subspace of component (v, degree);
  // walk downward from the cap, where nothing can be certified
  std::vector<int> result(cap + 1, 0);
  std::vector<RatMatrix> kernels(q.vertex_count());
  for (std::size_t v = 0; v < q.vertex_count(); ++v)
    kernels[v] = RatMatrix(0, m.dim(static_cast<int>(v), cap));
  for (int i = cap - 1; i >= 0; --i) {
    std::vector<RatMatrix> prev(q.vertex_count());
    for (std::size_t v = 0; v < q.vertex_count(); ++v) {
      const int dm = m.dim(static_cast<int>(v), i);
      if (dm == 0) {
        prev[v] = RatMatrix(0, 0);
        continue;
      }
      // constraints: x * action(a) must land in the certified subspace
      // of the target; y in rowspan(K) iff y * Z = 0 for Z spanning ker K
      std::vector<RatMatrix> blocks;
      std::size_t cols = 0;
      for (int ai : q.out_arrows(static_cast<int>(v))) {
        const RatMatrix* act = m.action(ai, i);
        if (!act) continue;
        int tgt = q.arrows()[ai].tgt;
        RatMatrix z = right_kernel(kernels[tgt]);
        if (kernels[tgt].rows() == 0) {
          // certified subspace is zero: membership means x * act = 0
          z = RatMatrix::identity(m.dim(tgt, i + 1));
        }
        RatMatrix constraint = (*act) * z;
        if (constraint.cols() == 0) continue;
        cols += constraint.cols();
        blocks.push_back(std::move(constraint));
      }
      RatMatrix stacked(dm, cols);
      std::size_t at = 0;
      for (const auto& b : blocks) {
        for (std::size_t r = 0; r < b.rows(); ++r)
          for (std::size_t c = 0; c < b.cols(); ++c) stacked(r, at + c) = b(r, c);
        at += b.cols();
      }
      prev[v] = left_kernel(stacked);
      result[i] += static_cast<int>(prev[v].rows());
    }
    kernels = std::move(prev);
  }
  return result;
}

namespace {

struct HomSystem {
  // unknown block (degree, vertex) -> offset into the flat unknown vector
  std::map<std::pair<int, int>, int> offsets;
  std::vector<std::pair<int, int>> block_shape_m;  // rows, cols per block in order
  int unknowns = 0;
  RatMatrix a;  // equations x rows, unknowns cols
  std::vector<Rat> rhs;

  const TruncatedGradedRep* m;
  const TruncatedGradedRep* n;
  int from;
};

HomSystem build_hom_system(const TruncatedGradedRep& m, const TruncatedGradedRep& n, int from) {
  if (&m.quiver() != &n.quiver() &&
      serialize(m.quiver(), QuiverFormat::Text) != serialize(n.quiver(), QuiverFormat::Text))
    throw DimensionMismatch("graded maps require representations over the same quiver");
  if (m.cap() != n.cap()) throw DimensionMismatch("representations have different degree caps");
  if (from < 0 || from > m.cap()) throw DimensionMismatch("tail start out of range");

  const Quiver& q = m.quiver();
  HomSystem sys;
  sys.m = &m;
  sys.n = &n;
  sys.from = from;
  for (int i = from; i <= m.cap(); ++i)
    for (std::size_t v = 0; v < q.vertex_count(); ++v) {
      int dm = m.dim(static_cast<int>(v), i), dn = n.dim(static_cast<int>(v), i);
      if (dm > 0 && dn > 0) {
        sys.offsets[{i, static_cast<int>(v)}] = sys.unknowns;
        sys.unknowns += dm * dn;
      }
    }

  // commuting squares: M_a phi_{t,i+1} = phi_{s,i} N_a
  struct Row {
    std::map<int, Rat> entries;
  };
  std::vector<Row> rows;
  for (std::size_t ai = 0; ai < q.arrow_count(); ++ai) {
    const Arrow& arrow = q.arrows()[ai];
    for (int i = from; i < m.cap(); ++i) {
      const RatMatrix* ma = m.action(static_cast<int>(ai), i);
      const RatMatrix* na = n.action(static_cast<int>(ai), i);
      if (!ma && !na) continue;
      int dms = m.dim(arrow.src, i), dnt = n.dim(arrow.tgt, i + 1);
      if (dms == 0 || dnt == 0) continue;
      int dmt = m.dim(arrow.tgt, i + 1), dns = n.dim(arrow.src, i);
      auto phi_t = sys.offsets.find({i + 1, arrow.tgt});
      auto phi_s = sys.offsets.find({i, arrow.src});
      for (int r = 0; r < dms; ++r)
        for (int c = 0; c < dnt; ++c) {
          Row row;
          if (ma && phi_t != sys.offsets.end())
            for (int k = 0; k < dmt; ++k) {
              Rat coef = (*ma)(r, k);
              if (coef != 0) row.entries[phi_t->second + k * dnt + c] += coef;
            }
          if (na && phi_s != sys.offsets.end())
            for (int l = 0; l < dns; ++l) {
              Rat coef = (*na)(l, c);
              if (coef != 0) row.entries[phi_s->second + r * dns + l] -= coef;
            }
          if (!row.entries.empty()) rows.push_back(std::move(row));
        }
    }
  }
  sys.a = RatMatrix(rows.size(), sys.unknowns);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& [col, coef] : rows[r].entries) sys.a(r, col) = coef;
  sys.rhs.assign(rows.size(), Rat(0));
  return sys;
}

GradedHom hom_from_flat(const HomSystem& sys, const std::vector<Rat>& x) {
  const Quiver& q = sys.m->quiver();
  GradedHom h;
  h.from = sys.from;
  h.blocks.assign(sys.m->cap() - sys.from + 1, std::vector<RatMatrix>(q.vertex_count()));
  for (const auto& [key, offset] : sys.offsets) {
    auto [i, v] = key;
    int dm = sys.m->dim(v, i), dn = sys.n->dim(v, i);
    RatMatrix block(dm, dn);
    for (int r = 0; r < dm; ++r)
      for (int c = 0; c < dn; ++c) block(r, c) = x[offset + r * dn + c];
    h.blocks[i - sys.from][v] = std::move(block);
  }
  return h;
}

}  // namespace

int hom_dim(const TruncatedGradedRep& m, const TruncatedGradedRep& n, int from) {
  auto sys = build_hom_system(m, n, from);
  return sys.unknowns - static_cast<int>(rank(sys.a));
}

std::vector<GradedHom> hom_space_basis(const TruncatedGradedRep& m, const TruncatedGradedRep& n,
                                       int from) {
  auto sys = build_hom_system(m, n, from);
  RatMatrix k = right_kernel(sys.a);
  if (sys.unknowns == 0) return {};
  std::vector<GradedHom> basis;
  for (std::size_t c = 0; c < k.cols(); ++c) {
    std::vector<Rat> x(sys.unknowns);
    for (int r = 0; r < sys.unknowns; ++r) x[r] = k(r, c);
    basis.push_back(hom_from_flat(sys, x));
  }
  return basis;
}

QgrHomResult qgr_hom_dim(const TruncatedGradedRep& m, const TruncatedGradedRep& n) {
  QgrHomResult res;
  const int last = m.cap() - 2;
  for (int from = 0; from <= last; ++from) res.values.push_back(hom_dim(m, n, from));
  if (res.values.empty()) {
    res.dimension = hom_dim(m, n, 0);
    res.stabilized = false;
    return res;
  }
  res.dimension = res.values.back();
  res.stabilized = res.values.size() >= 3 &&
                   res.values[res.values.size() - 2] == res.dimension &&
                   res.values[res.values.size() - 3] == res.dimension;
  return res;
}

Extension build_extension(std::shared_ptr<const Quiver> q, const std::string& v,
                          const std::string& w, const std::string& r,
                          const std::vector<Rat>& nu, int cap) {
  const int vi = q->vertex_index(v);
  const int wi = q->vertex_index(w);
  if (vi == wi) throw std::invalid_argument("extension endpoints must be distinct");
  int loop_v = -1, loop_w = -1, ri = -1;
  for (std::size_t ai = 0; ai < q->arrow_count(); ++ai) {
    const Arrow& a = q->arrows()[ai];
    if (a.id == r) {
      if (a.src != vi || a.tgt != wi)
        throw std::invalid_argument("arrow '" + r + "' does not run " + v + " -> " + w);
      ri = static_cast<int>(ai);
    }
    if (a.src == vi && a.tgt == vi) {
      if (loop_v != -1) throw std::invalid_argument("vertex '" + v + "' carries several loops");
      loop_v = static_cast<int>(ai);
    }
    if (a.src == wi && a.tgt == wi) {
      if (loop_w != -1) throw std::invalid_argument("vertex '" + w + "' carries several loops");
      loop_w = static_cast<int>(ai);
    }
  }
  if (ri == -1) throw std::invalid_argument("no arrow '" + r + "' in the quiver");
  if (loop_v == -1) throw std::invalid_argument("vertex '" + v + "' carries no loop; apply a Veronese power first");
  if (loop_w == -1) throw std::invalid_argument("vertex '" + w + "' carries no loop; apply a Veronese power first");

  Extension e{TruncatedGradedRep(q, cap), vi, wi, loop_v, loop_w, ri, nu};
  e.nu.resize(cap, Rat(0));
  for (int j = 0; j <= cap; ++j) {
    e.rep.set_dim(vi, j, 1, {v + ":t^" + std::to_string(j)});
    e.rep.set_dim(wi, j, 1, {w + ":t^" + std::to_string(j)});
  }
  RatMatrix one(1, 1);
  one(0, 0) = 1;
  for (int j = 0; j < cap; ++j) {
    e.rep.set_action(loop_v, j, one);
    e.rep.set_action(loop_w, j, one);
    if (e.nu[j] != 0) {
      RatMatrix m(1, 1);
      m(0, 0) = e.nu[j];
      e.rep.set_action(ri, j, m);
    }
  }
  e.rep.validate();
  return e;
}

SplitResult is_split_extension(const Extension& e) {
  const int cap = e.rep.cap();
  auto q = e.rep.quiver_ptr();
  const std::string v = q->vertex_id(e.v);
  TruncatedGradedRep ov = cyclic_point_module(q, v, cap);

  // A section (O_v)_{>= n} -> N(nu) over the lane-v projection is a
  // solution of the commuting-square system with the lane-v component
  // of phi pinned to the identity in every visible degree.
  for (int from = 0; from + 2 <= cap; ++from) {
    auto sys = build_hom_system(ov, e.rep, from);
    std::vector<std::map<int, Rat>> extra;
    for (int i = from; i <= cap; ++i) {
      auto it = sys.offsets.find({i, e.v});
      if (it == sys.offsets.end()) throw AssertionFailure("missing lane-v unknown in section solve");
      extra.push_back({{it->second, Rat(1)}});
    }
    RatMatrix a(sys.a.rows() + extra.size(), sys.unknowns);
    std::vector<Rat> b(sys.a.rows() + extra.size(), Rat(0));
    for (std::size_t r = 0; r < sys.a.rows(); ++r)
      for (int c = 0; c < sys.unknowns; ++c) a(r, c) = sys.a(r, c);
    for (std::size_t x = 0; x < extra.size(); ++x) {
      for (const auto& [col, coef] : extra[x]) a(sys.a.rows() + x, col) = coef;
      b[sys.a.rows() + x] = 1;
    }
    if (solve(a, b).has_value()) return {SplitVerdict::Split, from};
  }

  auto end = qgr_hom_dim(e.rep, e.rep);
  if (end.stabilized && end.dimension == 1) return {SplitVerdict::NonSplit, -1};
  return {SplitVerdict::Inconclusive, -1};
}

PointModuleDescriptor classify_point_module(const TruncatedGradedRep& m) {
  const Quiver& q = m.quiver();
  const int cap = m.cap();
  if (cap < 2 * static_cast<int>(q.vertex_count()) + 2)
    throw std::invalid_argument("degree cap too small: need at least 2|Q0| + 2");
  std::vector<int> support(cap + 1, -1);
  for (int j = 0; j <= cap; ++j) {
    for (std::size_t v = 0; v < q.vertex_count(); ++v) {
      int d = m.dim(static_cast<int>(v), j);
      if (d == 0) continue;
      if (d > 1 || support[j] != -1)
        throw std::invalid_argument("not a point-module truncation: dimension exceeds 1 in degree " +
                                    std::to_string(j));
      support[j] = static_cast<int>(v);
    }
    if (support[j] == -1)
      throw std::invalid_argument("not a point-module truncation: dimension 0 in degree " +
                                  std::to_string(j));
  }

  auto dec = strongly_connected_cycles(q);
  if (!dec.finite()) {
    std::vector<std::string> ids;
    for (int x : dec.doubly_cyclic) ids.push_back(q.vertex_id(x));
    throw NotFiniteGK(std::move(ids));
  }
  auto of = cycle_of_vertex(q, dec);

  for (int entry = 0; entry <= cap; ++entry) {
    int ci = of[support[entry]];
    if (ci < 0) continue;
    const SimpleCycle& cyc = dec.cycles[ci];
    const int len = static_cast<int>(cyc.length());
    // periodicity is only witnessed once the visible tail covers a
    // full turn of the cycle
    if (cap - entry < len) continue;
    int pos = 0;
    while (cyc.vertices[pos] != support[entry]) ++pos;
    bool follows = true;
    for (int j = entry; j < cap && follows; ++j) {
      int expect = cyc.vertices[(pos + (j - entry) + 1) % len];
      if (support[j + 1] != expect) {
        follows = false;
        break;
      }
      int cycle_arrow = cyc.arrows[(pos + (j - entry)) % len];
      const RatMatrix* act = m.action(cycle_arrow, j);
      if (!act || (*act)(0, 0) == 0) follows = false;
    }
    if (!follows) continue;
    PointModuleDescriptor d;
    d.cycle_length = static_cast<unsigned>(len);
    d.entry_degree = entry;
    // undo the shift: pi^* M = pi^* O_w with w sitting entry steps
    // before the entry vertex along the cycle
    int widx = ((pos - entry) % len + len) % len;
    d.vertex = q.vertex_id(cyc.vertices[widx]);
    for (int k = 0; k < len; ++k)
      d.sequence.push_back(q.vertex_id(cyc.vertices[(pos + k) % len]));
    return d;
  }
  throw NotEventuallyPeriodic(
      "support sequence never settles into a simple cycle; torsion tail or cap too small");
}

std::string rep_to_json(const TruncatedGradedRep& m) {
  nlohmann::json j;
  j["quiver"] = nlohmann::json::parse(serialize(m.quiver(), QuiverFormat::Json));
  j["cap"] = m.cap();
  nlohmann::json dims = nlohmann::json::array();
  nlohmann::json labels = nlohmann::json::array();
  for (int deg = 0; deg <= m.cap(); ++deg) {
    nlohmann::json row = nlohmann::json::array();
    nlohmann::json lrow = nlohmann::json::array();
    for (std::size_t v = 0; v < m.quiver().vertex_count(); ++v) {
      row.push_back(m.dim(static_cast<int>(v), deg));
      lrow.push_back(m.basis_labels(static_cast<int>(v), deg));
    }
    dims.push_back(row);
    labels.push_back(lrow);
  }
  j["dims"] = dims;
  j["labels"] = labels;
  nlohmann::json arrows = nlohmann::json::object();
  for (const auto& [ai, mats] : m.actions()) {
    nlohmann::json list = nlohmann::json::array();
    for (int deg = 0; deg < m.cap(); ++deg) {
      const RatMatrix& mat = mats[deg];
      if (mat.rows() == 0 && mat.cols() == 0) {
        list.push_back(nullptr);
        continue;
      }
      nlohmann::json rows = nlohmann::json::array();
      for (std::size_t r = 0; r < mat.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t c = 0; c < mat.cols(); ++c) row.push_back(mat(r, c).get_str());
        rows.push_back(row);
      }
      list.push_back(rows);
    }
    arrows[m.quiver().arrows()[ai].id] = list;
  }
  j["arrows"] = arrows;
  return j.dump();
}

TruncatedGradedRep rep_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  auto quiver = std::make_shared<Quiver>(quiver_from_json(j.at("quiver").dump()));
  TruncatedGradedRep rep(quiver, j.at("cap").get<int>());
  const auto& dims = j.at("dims");
  for (int deg = 0; deg <= rep.cap(); ++deg)
    for (std::size_t v = 0; v < quiver->vertex_count(); ++v) {
      std::vector<std::string> labels;
      if (j.contains("labels"))
        labels = j.at("labels").at(deg).at(v).get<std::vector<std::string>>();
      rep.set_dim(static_cast<int>(v), deg, dims.at(deg).at(v).get<int>(), std::move(labels));
    }
  for (const auto& [id, list] : j.at("arrows").items()) {
    int ai = -1;
    for (std::size_t k = 0; k < quiver->arrow_count(); ++k)
      if (quiver->arrows()[k].id == id) ai = static_cast<int>(k);
    if (ai < 0) throw DimensionMismatch("action for unknown arrow '" + id + "'");
    for (int deg = 0; deg < rep.cap(); ++deg) {
      const auto& entry = list.at(deg);
      if (entry.is_null()) continue;
      std::size_t rows = entry.size();
      std::size_t cols = rows ? entry.at(0).size() : 0;
      RatMatrix mat(rows, cols);
      for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
          mat(r, c) = parse_rational(entry.at(r).at(c).get<std::string>());
      rep.set_action(ai, deg, std::move(mat));
    }
  }
  rep.validate();
  return rep;
}

std::string to_json(const PointModuleDescriptor& d) {
  nlohmann::json j;
  j["vertex"] = d.vertex;
  j["cycle_length"] = d.cycle_length;
  j["sequence"] = d.sequence;
  j["entry_degree"] = d.entry_degree;
  return j.dump();
}

}  // namespace qgr
