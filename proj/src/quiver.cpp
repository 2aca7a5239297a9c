#include "qgr/quiver.hpp"

#include <map>
#include <stdexcept>

#include "qgr/errors.hpp"

namespace qgr {

Quiver::Quiver(std::string name, std::vector<std::string> vertices,
               std::vector<std::tuple<std::string, std::string, std::string>> arrows)
    : name_(std::move(name)), vertices_(std::move(vertices)) {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (!vertex_index_.emplace(vertices_[i], static_cast<int>(i)).second)
      throw std::invalid_argument("duplicate vertex identifier '" + vertices_[i] + "'");
  }
  out_.resize(vertices_.size());
  in_.resize(vertices_.size());
  std::unordered_map<std::string, int> arrow_ids;
  for (auto& [id, src, tgt] : arrows) {
    if (!arrow_ids.emplace(id, static_cast<int>(arrows_.size())).second)
      throw std::invalid_argument("duplicate arrow identifier '" + id + "'");
    auto si = find_vertex(src);
    auto ti = find_vertex(tgt);
    if (!si) throw std::invalid_argument("arrow '" + id + "': undeclared source vertex '" + src + "'");
    if (!ti) throw std::invalid_argument("arrow '" + id + "': undeclared target vertex '" + tgt + "'");
    out_[*si].push_back(static_cast<int>(arrows_.size()));
    in_[*ti].push_back(static_cast<int>(arrows_.size()));
    arrows_.push_back(Arrow{id, *si, *ti});
  }
}

int Quiver::vertex_index(const std::string& id) const {
  auto it = vertex_index_.find(id);
  if (it == vertex_index_.end()) throw std::invalid_argument("unknown vertex '" + id + "'");
  return it->second;
}

std::optional<int> Quiver::find_vertex(const std::string& id) const {
  auto it = vertex_index_.find(id);
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

IntMatrix incidence_matrix(const Quiver& q) {
  IntMatrix m(q.vertex_count(), q.vertex_count());
  for (const auto& a : q.arrows()) m(a.src, a.tgt) += 1;
  return m;
}

namespace {

Int count_paths_memo(const Quiver& q, int u, int v, unsigned len,
                     std::map<std::pair<int, unsigned>, Int>& memo) {
  if (len == 0) return Int(u == v ? 1 : 0);
  auto key = std::make_pair(u, len);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  Int total = 0;
  for (int ai : q.out_arrows(u))
    total += count_paths_memo(q, q.arrows()[ai].tgt, v, len - 1, memo);
  memo.emplace(key, total);
  return total;
}

}  // namespace

Int count_paths(const Quiver& q, const std::string& u, const std::string& v, unsigned len) {
  std::map<std::pair<int, unsigned>, Int> memo;
  return count_paths_memo(q, q.vertex_index(u), q.vertex_index(v), len, memo);
}

Quiver veronese(const Quiver& q, unsigned d) {
  if (d == 0) throw std::invalid_argument("veronese power must be >= 1");
  IntMatrix md = incidence_matrix(q).pow(d);
  Int total = 0;
  for (std::size_t i = 0; i < md.rows(); ++i)
    for (std::size_t j = 0; j < md.cols(); ++j) total += md(i, j);
  if (total > 5'000'000)
    throw ExplosionCap("veronese power " + std::to_string(d) + " would have " + total.get_str() +
                       " arrows");
  std::vector<std::tuple<std::string, std::string, std::string>> arrows;
  for (std::size_t i = 0; i < md.rows(); ++i)
    for (std::size_t j = 0; j < md.cols(); ++j) {
      unsigned long count = md(i, j).get_ui();
      for (unsigned long k = 0; k < count; ++k)
        arrows.emplace_back(q.vertex_id(i) + "__" + q.vertex_id(j) + "__" + std::to_string(k),
                            q.vertex_id(i), q.vertex_id(j));
    }
  return Quiver(q.name(), q.vertices(), std::move(arrows));
}

}  // namespace qgr
