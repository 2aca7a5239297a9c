#include "qgr/oracles.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

#include "qgr/errors.hpp"
#include "qgr/growth.hpp"

namespace qgr::oracles {

std::map<std::tuple<int, int, unsigned>, std::vector<Path>> enumerate_paths(const Quiver& q,
                                                                            unsigned max_len,
                                                                            std::size_t cap) {
  std::map<std::tuple<int, int, unsigned>, std::vector<Path>> table;
  std::size_t total = 0;
  std::vector<Path> frontier;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    Path trivial;
    trivial.vertices.push_back(static_cast<int>(v));
    frontier.push_back(trivial);
  }
  for (unsigned len = 0; len <= max_len; ++len) {
    for (const auto& p : frontier) {
      if (++total > cap) throw ExplosionCap("path enumeration exceeded cap");
      table[{p.vertices.front(), p.vertices.back(), len}].push_back(p);
    }
    if (len == max_len) break;
    std::vector<Path> next;
    for (const auto& p : frontier)
      for (int ai : q.out_arrows(p.vertices.back())) {
        Path p2 = p;
        p2.arrows.push_back(ai);
        p2.vertices.push_back(q.arrows()[ai].tgt);
        next.push_back(std::move(p2));
      }
    frontier = std::move(next);
  }
  return table;
}

Int count_paths_bruteforce(const Quiver& q, const std::string& u, const std::string& v,
                           unsigned len, std::size_t cap) {
  auto table = enumerate_paths(q, len, cap);
  auto it = table.find({q.vertex_index(u), q.vertex_index(v), len});
  return it == table.end() ? Int(0) : Int(static_cast<long>(it->second.size()));
}

std::vector<Int> enumerate_normal_words(const MonomialPresentation& a, unsigned max_len,
                                        std::size_t cap) {
  const int g = static_cast<int>(a.generators.size());
  std::vector<Int> counts;
  std::vector<std::vector<int>> frontier{{}};
  std::size_t total = 0;
  for (unsigned len = 0; len <= max_len; ++len) {
    counts.emplace_back(static_cast<long>(frontier.size()));
    if (len == max_len) break;
    std::vector<std::vector<int>> next;
    for (const auto& w : frontier)
      for (int c = 0; c < g; ++c) {
        std::vector<int> w2 = w;
        w2.push_back(c);
        bool normal = true;
        for (const auto& r : a.relations) {
          if (r.size() > w2.size()) continue;
          if (std::equal(r.begin(), r.end(), w2.end() - r.size())) {
            normal = false;
            break;
          }
        }
        if (normal) {
          if (++total > cap) throw ExplosionCap("normal word enumeration exceeded cap");
          next.push_back(std::move(w2));
        }
      }
    frontier = std::move(next);
  }
  return counts;
}

std::optional<std::vector<std::size_t>> poset_iso_bruteforce(const Poset& p1, const Poset& p2) {
  if (p1.size() != p2.size()) return std::nullopt;
  if (p1.size() > 8) throw ExplosionCap("poset_iso_bruteforce limited to 8 elements");
  std::vector<std::size_t> perm(p1.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < p1.size() && ok; ++i)
      for (std::size_t j = 0; j < p1.size() && ok; ++j)
        if (p1.less(i, j) != p2.less(perm[i], perm[j])) ok = false;
    if (ok) return perm;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

std::vector<Poset> all_posets(std::size_t n) {
  if (n > 6) throw ExplosionCap("all_posets limited to 6 elements");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
  std::vector<Poset> found;
  std::vector<std::vector<long>> profiles;  // iso-invariant dedup keys
  const std::size_t bits = n * (n - 1) / 2;
  for (std::size_t mask = 0; mask < (std::size_t(1) << bits); ++mask) {
    std::vector<std::vector<bool>> lt(n, std::vector<bool>(n, false));
    std::size_t b = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        lt[i][j] = (mask >> b++) & 1;
    bool transitive = true;
    for (std::size_t i = 0; i < n && transitive; ++i)
      for (std::size_t j = 0; j < n && transitive; ++j)
        for (std::size_t k = 0; k < n && transitive; ++k)
          if (lt[i][j] && lt[j][k] && !lt[i][k]) transitive = false;
    if (!transitive) continue;
    Poset p(labels, lt);
    auto profile = poset_color_profile(p);
    bool fresh = true;
    for (std::size_t f = 0; f < found.size() && fresh; ++f)
      if (profiles[f] == profile && poset_isomorphism(p, found[f])) fresh = false;
    if (fresh) {
      found.push_back(std::move(p));
      profiles.push_back(std::move(profile));
    }
  }
  return found;
}

std::uint64_t seed_from_env(std::uint64_t fallback) {
  const char* env = std::getenv("QGR_SEED");
  if (!env || !*env) return fallback;
  try {
    return std::stoull(env);
  } catch (const std::exception&) {
    return fallback;
  }
}

Corpus generate_corpus(const CorpusParams& params) {
  Corpus corpus;
  corpus.params = params;
  for (auto& q : random_corpus(params)) {
    if (gk_dimension(q).finite)
      corpus.finite_gk.push_back(std::move(q));
    else
      corpus.infinite_gk.push_back(std::move(q));
  }
  return corpus;
}

std::vector<Quiver> random_corpus(const CorpusParams& params) {
  Rng rng(params.seed);
  std::vector<Quiver> out;
  for (std::size_t i = 0; i < params.count; ++i) {
    std::size_t nv = 1 + rng.below(params.max_vertices);
    std::size_t na = rng.below(params.max_arrows + 1);
    std::vector<std::string> vertices;
    for (std::size_t v = 0; v < nv; ++v) vertices.push_back("v" + std::to_string(v));
    std::vector<std::tuple<std::string, std::string, std::string>> arrows;
    for (std::size_t a = 0; a < na; ++a) {
      std::size_t s = rng.below(nv), t = rng.below(nv);
      arrows.emplace_back("a" + std::to_string(a), vertices[s], vertices[t]);
    }
    out.emplace_back("c" + std::to_string(i), std::move(vertices), std::move(arrows));
  }
  return out;
}

SignatureCheck growth_signature_check(const Quiver& q) {
  auto rep = gk_dimension(q);
  auto r = growth_oracle(q, 40);
  if (rep.finite && rep.gk_dimension == 0) {
    for (unsigned n = 10; n <= 40; ++n)
      if (r[n] != 0) return {false, "finite-dimensional verdict but paths of length >= 10 exist"};
    return {true, "no long paths, matching GK 0"};
  }
  if (rep.finite) {
    const int d = rep.gk_dimension;
    Rat lo, hi;
    for (unsigned n = 10; n <= 40; ++n) {
      if (r[n] <= 0) return {false, "finite verdict but a path count vanished"};
      Int denom = 1;
      for (int t = 1; t < d; ++t) denom *= n;
      Rat ratio = Rat(r[n]) / Rat(denom);
      if (n == 10) {
        lo = hi = ratio;
      } else {
        if (ratio < lo) lo = ratio;
        if (ratio > hi) hi = ratio;
      }
    }
    if (hi > lo * 64)
      return {false, "normalized path counts escape the polynomial envelope"};
    return {true, "r_n / n^(d-1) stays within a 64x band on [10,40]"};
  }
  for (unsigned stride = 1; stride <= 12; ++stride) {
    bool ok = true;
    Int num = 1, den = 1;  // (11/10)^stride
    for (unsigned t = 0; t < stride; ++t) {
      num *= 11;
      den *= 10;
    }
    for (unsigned n = 10; n + stride <= 40 && ok; ++n)
      if (r[n + stride] * den < r[n] * num) ok = false;
    if (ok)
      return {true, "successive ratios exceed 11/10 at stride " + std::to_string(stride)};
  }
  return {false, "infinite verdict but no geometric lower bound found"};
}

std::vector<Quiver> finite_gk_corpus(const CorpusParams& params) {
  Rng rng(params.seed);
  std::vector<Quiver> out;
  std::size_t serial = 0;
  while (out.size() < params.count) {
    std::size_t nv = 1 + rng.below(params.max_vertices);
    std::size_t na = rng.below(params.max_arrows + 1);
    std::vector<std::string> vertices;
    for (std::size_t v = 0; v < nv; ++v) vertices.push_back("v" + std::to_string(v));
    std::vector<std::tuple<std::string, std::string, std::string>> arrows;
    for (std::size_t a = 0; a < na; ++a) {
      std::size_t s = rng.below(nv), t = rng.below(nv);
      arrows.emplace_back("a" + std::to_string(a), vertices[s], vertices[t]);
    }
    Quiver q("f" + std::to_string(serial++), std::move(vertices), std::move(arrows));
    if (gk_dimension(q).finite) out.push_back(std::move(q));
  }
  return out;
}

}  // namespace qgr::oracles
