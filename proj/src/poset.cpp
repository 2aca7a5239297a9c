#include "qgr/poset.hpp"

#include <algorithm>
#include <map>

#include "qgr/errors.hpp"

namespace qgr {

Poset::Poset(std::vector<std::string> elements, std::vector<std::vector<bool>> lt)
    : elements_(std::move(elements)), lt_(std::move(lt)) {
  const std::size_t n = elements_.size();
  if (lt_.size() != n) throw InvalidPoset("relation matrix size mismatch");
  for (const auto& row : lt_)
    if (row.size() != n) throw InvalidPoset("relation matrix size mismatch");
  for (std::size_t i = 0; i < n; ++i)
    if (lt_[i][i]) throw InvalidPoset("relation is not irreflexive at '" + elements_[i] + "'");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && lt_[i][j] && lt_[j][i])
        throw InvalidPoset("relation is not antisymmetric on '" + elements_[i] + "', '" +
                           elements_[j] + "'");
      if (!lt_[i][j]) continue;
      for (std::size_t k = 0; k < n; ++k)
        if (lt_[j][k] && !lt_[i][k])
          throw InvalidPoset("relation is not transitive through '" + elements_[j] + "'");
    }
}

std::vector<std::pair<std::size_t, std::size_t>> Poset::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> cov;
  const std::size_t n = size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!lt_[i][j]) continue;
      bool direct = true;
      for (std::size_t k = 0; k < n && direct; ++k)
        if (lt_[i][k] && lt_[k][j]) direct = false;
      if (direct) cov.emplace_back(i, j);
    }
  return cov;
}

std::vector<std::size_t> Poset::minimal_of(const std::vector<std::size_t>& subset) const {
  std::vector<std::size_t> mins;
  for (auto j : subset) {
    bool minimal = true;
    for (auto i : subset)
      if (i != j && lt_[i][j]) minimal = false;
    if (minimal) mins.push_back(j);
  }
  return mins;
}

int Poset::longest_chain() const {
  const std::size_t n = size();
  std::vector<int> best(n, 1);
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    int da = 0, db = 0;
    for (std::size_t k = 0; k < n; ++k) {
      if (lt_[k][a]) ++da;
      if (lt_[k][b]) ++db;
    }
    return da < db;
  });
  int overall = 0;
  for (auto j : order) {
    for (std::size_t k = 0; k < n; ++k)
      if (lt_[k][j]) best[j] = std::max(best[j], best[k] + 1);
    overall = std::max(overall, best[j]);
  }
  return overall;
}

namespace {

// Iterated neighborhood colors. A color is the rank of the node's
// signature among all signatures in lexicographic order, which makes
// the coloring canonical across relabelings.
std::vector<long> refine_colors(const Poset& p) {
  const std::size_t n = p.size();
  std::vector<long> color(n, 0);
  for (std::size_t round = 0; round < n; ++round) {
    std::map<std::vector<long>, long> palette;
    std::vector<std::vector<long>> sig(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<long> below, above;
      for (std::size_t k = 0; k < n; ++k) {
        if (p.less(k, i)) below.push_back(color[k]);
        if (p.less(i, k)) above.push_back(color[k]);
      }
      std::sort(below.begin(), below.end());
      std::sort(above.begin(), above.end());
      sig[i].push_back(color[i]);
      sig[i].push_back(-1);
      sig[i].insert(sig[i].end(), below.begin(), below.end());
      sig[i].push_back(-2);
      sig[i].insert(sig[i].end(), above.begin(), above.end());
    }
    for (std::size_t i = 0; i < n; ++i) palette[sig[i]] = 0;
    long rank = 0;
    for (auto& [key, value] : palette) value = rank++;
    for (std::size_t i = 0; i < n; ++i) color[i] = palette[sig[i]];
  }
  return color;
}

bool extend(const Poset& a, const Poset& b, const std::vector<long>& ca,
            const std::vector<long>& cb, std::vector<std::size_t>& map_ab,
            std::vector<bool>& used, std::size_t i) {
  const std::size_t n = a.size();
  if (i == n) return true;
  for (std::size_t j = 0; j < n; ++j) {
    if (used[j] || ca[i] != cb[j]) continue;
    bool ok = true;
    for (std::size_t k = 0; k < i && ok; ++k) {
      if (a.less(i, k) != b.less(j, map_ab[k])) ok = false;
      if (a.less(k, i) != b.less(map_ab[k], j)) ok = false;
    }
    if (!ok) continue;
    map_ab[i] = j;
    used[j] = true;
    if (extend(a, b, ca, cb, map_ab, used, i + 1)) return true;
    used[j] = false;
  }
  return false;
}

}  // namespace

std::optional<std::vector<std::size_t>> poset_isomorphism(const Poset& a, const Poset& b) {
  if (a.size() != b.size()) return std::nullopt;
  auto ca = refine_colors(a);
  auto cb = refine_colors(b);
  auto hist = [](const std::vector<long>& c) {
    std::map<long, int> h;
    for (long x : c) h[x]++;
    return h;
  };
  if (hist(ca) != hist(cb)) return std::nullopt;
  std::vector<std::size_t> map_ab(a.size());
  std::vector<bool> used(a.size(), false);
  if (extend(a, b, ca, cb, map_ab, used, 0)) return map_ab;
  return std::nullopt;
}

std::vector<long> poset_color_profile(const Poset& p) {
  auto colors = refine_colors(p);
  std::sort(colors.begin(), colors.end());
  return colors;
}

}  // namespace qgr
