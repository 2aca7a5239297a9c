#include "qgr/k0.hpp"

#include <algorithm>
#include <json.hpp>
#include <numeric>

#include "qgr/errors.hpp"
#include "qgr/ext_quiver.hpp"
#include "qgr/growth.hpp"

namespace qgr {

namespace {

IntMatrix permute(const IntMatrix& m, const std::vector<int>& perm) {
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(perm[i], perm[j]);
  return out;
}

// positive-length reachability on the digraph of nonzero entries
std::vector<std::vector<bool>> positive_reach(const IntMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r[i][j] = m(i, j) != 0;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (r[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (r[k][j]) r[i][j] = true;
  return r;
}

struct BulletCheck {
  bool upper_triangular = true;
  bool diagonal_01 = true;
  bool rank_is_p = true;
  bool path_iff_arrow = true;
  bool all() const { return upper_triangular && diagonal_01 && rank_is_p && path_iff_arrow; }
};

BulletCheck check_bullets(const IntMatrix& m, const std::vector<int>& cyclic) {
  BulletCheck c;
  const std::size_t n = m.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (m(i, j) != 0) c.upper_triangular = false;
  for (std::size_t i = 0; i < n; ++i)
    if (m(i, i) != 0 && m(i, i) != 1) c.diagonal_01 = false;
  c.rank_is_p = rank(m) == cyclic.size();
  auto reach = positive_reach(m);
  for (int i : cyclic)
    for (int j : cyclic)
      if (reach[i][j] != (m(i, j) != 0)) c.path_iff_arrow = false;
  return c;
}

std::vector<int> topological_order(const IntMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<int> indeg(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && m(i, j) != 0) indeg[j]++;
  std::vector<int> order;
  std::vector<bool> used(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    int pick = -1;
    for (std::size_t i = 0; i < n; ++i)
      if (!used[i] && indeg[i] == 0) {
        pick = static_cast<int>(i);
        break;
      }
    if (pick < 0)
      throw AssertionFailure("normalized quiver is not acyclic away from loops");
    used[pick] = true;
    order.push_back(pick);
    for (std::size_t j = 0; j < n; ++j)
      if (static_cast<std::size_t>(pick) != j && m(pick, j) != 0) indeg[j]--;
  }
  return order;
}

// coefficients of w in the rows of r, whose leading entries are
// r(j, pivot[j]) = 1 with zeros before and below
std::optional<std::vector<Int>> express_in_rows(const IntMatrix& r, const std::vector<int>& pivots,
                                                const std::vector<Int>& w) {
  const std::size_t p = r.rows();
  std::vector<Int> rem = w;
  std::vector<Int> coeffs(p, 0);
  for (std::size_t j = 0; j < p; ++j) {
    coeffs[j] = rem[pivots[j]];
    if (coeffs[j] != 0)
      for (std::size_t k = 0; k < r.cols(); ++k) rem[k] -= coeffs[j] * r(j, k);
  }
  for (const auto& x : rem)
    if (x != 0) return std::nullopt;
  return coeffs;
}

}  // namespace

Quiver NormalizedQuiver::to_quiver() const {
  Int total = 0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) total += m(i, j);
  if (total > 5'000'000) throw ExplosionCap("normalized quiver has too many arrows to materialize");
  std::vector<std::tuple<std::string, std::string, std::string>> arrows;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      for (unsigned long k = 0; k < m(i, j).get_ui(); ++k)
        arrows.emplace_back(labels[i] + "__" + labels[j] + "__" + std::to_string(k), labels[i],
                            labels[j]);
  return Quiver("", labels, std::move(arrows));
}

NormalizedQuiver normalize_for_k0(const Quiver& q) {
  auto dec = strongly_connected_cycles(q);
  if (!dec.finite()) {
    std::vector<std::string> ids;
    for (int v : dec.doubly_cyclic) ids.push_back(q.vertex_id(v));
    throw NotFiniteGK(std::move(ids));
  }

  Int l_int = 1;
  for (const auto& c : dec.cycles) l_int = int_lcm(l_int, Int(static_cast<long>(c.length())));
  unsigned L = static_cast<unsigned>(l_int.get_ui());

  IntMatrix m1 = incidence_matrix(q).pow(L);
  auto order = topological_order(m1);

  NormalizedQuiver nq;
  nq.veronese_l = L;
  nq.veronese_n = 1;
  nq.perm = order;
  for (int orig : order) nq.labels.push_back(q.vertex_id(orig));
  nq.m = permute(m1, order);
  for (std::size_t i = 0; i < nq.m.rows(); ++i)
    if (nq.m(i, i) == 1) nq.cyclic.push_back(static_cast<int>(i));

  auto bullets = check_bullets(nq.m, nq.cyclic);
  if (!bullets.upper_triangular || !bullets.diagonal_01)
    throw AssertionFailure("first Veronese step failed to triangularize");
  if (!bullets.all()) {
    nq.veronese_n = static_cast<unsigned>(q.vertex_count());
    nq.m = nq.m.pow(nq.veronese_n);
    nq.cyclic.clear();
    for (std::size_t i = 0; i < nq.m.rows(); ++i)
      if (nq.m(i, i) == 1) nq.cyclic.push_back(static_cast<int>(i));
    bullets = check_bullets(nq.m, nq.cyclic);
    if (!bullets.all()) throw AssertionFailure("normalization failed the structure checks");
  }

  // cyclic vertices must be exactly the cyclic vertices of the input
  std::vector<bool> cyclic_orig(q.vertex_count(), false);
  for (const auto& c : dec.cycles)
    for (int v : c.vertices) cyclic_orig[v] = true;
  std::vector<bool> cyclic_norm(q.vertex_count(), false);
  for (int i : nq.cyclic) cyclic_norm[nq.perm[i]] = true;
  if (cyclic_orig != cyclic_norm)
    throw AssertionFailure("normalization changed the cyclic vertex set");
  return nq;
}

IntMatrix cyclic_row_basis(const NormalizedQuiver& nq) {
  const std::size_t p = nq.cyclic.size();
  const std::size_t n = nq.m.rows();
  IntMatrix r(p, n);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < n; ++j) r(i, j) = nq.m(nq.cyclic[i], j);
  // leading-entry shape
  for (std::size_t i = 0; i < p; ++i) {
    if (r(i, nq.cyclic[i]) != 1)
      throw AssertionFailure("cyclic row basis: leading entry is not 1");
    for (int k = 0; k < nq.cyclic[i]; ++k)
      if (r(i, k) != 0) throw AssertionFailure("cyclic row basis: nonzero before the leading entry");
  }
  if (rank(r) != p) throw AssertionFailure("cyclic row basis rows are linearly dependent");
  // every row of M lies in the integer span
  for (std::size_t i = 0; i < n; ++i)
    if (!express_in_rows(r, nq.cyclic, nq.m.row(i)))
      throw AssertionFailure("image of the incidence matrix escapes the integer row span");
  return r;
}

IntMatrix solve_n_matrix(const NormalizedQuiver& nq, const IntMatrix& r) {
  const std::size_t p = nq.cyclic.size();
  IntMatrix n(p, p);
  for (std::size_t i = 0; i < p; ++i) {
    std::vector<Int> rim = vec_mat(r.row(i), nq.m);
    auto coeffs = express_in_rows(r, nq.cyclic, rim);
    if (!coeffs) throw AssertionFailure("N R = R M has no integer solution row");
    for (std::size_t j = 0; j < p; ++j) n(i, j) = (*coeffs)[j];
  }
  if (n * r != r * nq.m) throw AssertionFailure("N R = R M verification failed");
  for (std::size_t i = 0; i < p; ++i) {
    if (n(i, i) != 1) throw AssertionFailure("N is not unipotent");
    for (std::size_t j = 0; j < i; ++j)
      if (n(i, j) != 0) throw AssertionFailure("N is not upper triangular");
  }
  if (p <= 12 && n != closed_form_n_matrix(nq))
    throw AssertionFailure("linear solve and closed formula for N disagree");
  return n;
}

IntMatrix closed_form_n_matrix(const NormalizedQuiver& nq) {
  const std::size_t p = nq.cyclic.size();
  IntMatrix m2 = nq.m * nq.m;
  auto a = [&](std::size_t i, std::size_t j) { return nq.m(nq.cyclic[i], nq.cyclic[j]); };
  auto a2 = [&](std::size_t i, std::size_t j) { return m2(nq.cyclic[i], nq.cyclic[j]); };

  IntMatrix n = IntMatrix::identity(p);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t l = 1; i + l < p; ++l) {
      Int b = a2(i, i + l) - a(i, i + l);
      // signed sum over increasing chains i < i+j1 < ... < i+jd < i+l
      const std::size_t span = l - 1;
      for (std::size_t mask = 1; mask < (std::size_t(1) << span); ++mask) {
        std::vector<std::size_t> js;
        for (std::size_t b_ = 0; b_ < span; ++b_)
          if (mask & (std::size_t(1) << b_)) js.push_back(b_ + 1);
        Int term = a2(i, i + js[0]) - a(i, i + js[0]);
        for (std::size_t t = 0; t + 1 < js.size(); ++t) term *= a(i + js[t], i + js[t + 1]);
        term *= a(i + js.back(), i + l);
        if (js.size() % 2 == 1)
          b -= term;
        else
          b += term;
      }
      n(i, i + l) = b;
    }
  return n;
}

std::vector<std::vector<BinomialPolynomial>> n_power_polynomial(const IntMatrix& n) {
  const std::size_t p = n.rows();
  for (std::size_t i = 0; i < p; ++i) {
    if (n(i, i) != 1) throw std::invalid_argument("matrix is not unipotent");
    for (std::size_t j = 0; j < i; ++j)
      if (n(i, j) != 0) throw std::invalid_argument("matrix is not upper triangular");
  }
  IntMatrix u = n - IntMatrix::identity(p);
  std::vector<std::vector<std::vector<Rat>>> coeffs(
      p, std::vector<std::vector<Rat>>(p, std::vector<Rat>(p, Rat(0))));
  IntMatrix power = IntMatrix::identity(p);
  for (std::size_t l = 0; l < p; ++l) {
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = 0; j < p; ++j) coeffs[i][j][l] = Rat(power(i, j));
    power = power * u;
  }
  std::vector<std::vector<BinomialPolynomial>> out(p);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j) out[i].emplace_back(coeffs[i][j]);
  return out;
}

bool delta_contains(const Poset& p, const std::vector<Int>& v) {
  if (v.size() != p.size()) throw std::invalid_argument("vector length does not match the poset");
  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) support.push_back(i);
  if (support.empty()) return true;
  for (std::size_t j : p.minimal_of(support))
    if (v[j] <= 0) return false;
  return true;
}

bool delta_generator_oracle(const Poset& p, const std::vector<Int>& v, unsigned bound) {
  const std::size_t n = p.size();
  if (v.size() != n) throw std::invalid_argument("vector length does not match the poset");
  if (n >= 20) throw ExplosionCap("delta_generator_oracle limited to 20 elements");
  // Search over which generator monoids contribute. An active element i
  // supplies a head n_i in [1..bound] at coordinate i and arbitrary
  // z-coefficients in [-bound..bound] at the coordinates above i, so
  // for a fixed active set feasibility is an interval check per
  // coordinate: the residue v_k - n_k must be reachable by the bounded
  // z-sum over active elements below k.
  for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
    bool ok = true;
    for (std::size_t k = 0; k < n && ok; ++k) {
      long sources = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (((mask >> j) & 1) && p.less(j, k)) ++sources;
      Int reach = Int(sources) * static_cast<long>(bound);
      if ((mask >> k) & 1) {
        // residue ranges over [v_k - bound, v_k - 1]
        Int lo = v[k] - static_cast<long>(bound);
        Int hi = v[k] - 1;
        if (lo < -reach) lo = -reach;
        if (hi > reach) hi = reach;
        if (lo > hi) ok = false;
      } else {
        if (v[k] != 0 && abs(v[k]) > reach) ok = false;
      }
    }
    if (ok) return true;
  }
  return false;
}

OrderedK0 k0(const Quiver& q) {
  OrderedK0 out;
  out.normalization = normalize_for_k0(q);
  out.rank = out.normalization.rank_p();
  out.r = cyclic_row_basis(out.normalization);
  out.n = solve_n_matrix(out.normalization, out.r);

  // Ext-quiver relabeled into normalization order
  ExtQuiver e = ext_quiver(q);
  const std::size_t p = out.normalization.cyclic.size();
  if (e.vertices.size() != p) throw AssertionFailure("cyclic vertex count mismatch");
  std::vector<std::string> labels(p);
  std::vector<int> position_of_ext(p);  // ext index -> poset position
  for (std::size_t i = 0; i < p; ++i) {
    labels[i] = out.normalization.labels[out.normalization.cyclic[i]];
    bool found = false;
    for (std::size_t k = 0; k < p; ++k)
      if (e.vertices[k] == labels[i]) {
        position_of_ext[k] = static_cast<int>(i);
        found = true;
      }
    if (!found) throw AssertionFailure("cyclic vertex missing from the Ext-quiver");
  }
  std::vector<std::vector<bool>> lt(p, std::vector<bool>(p, false));
  for (auto [a, b] : e.arrows) {
    int i = position_of_ext[a], j = position_of_ext[b];
    if (i >= j) throw AssertionFailure("Ext order is incompatible with the normalized labeling");
    lt[i][j] = true;
  }
  // the Ext relation must match arrows of the normalized quiver
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j) {
      bool arrow =
          i != j && out.normalization.m(out.normalization.cyclic[i], out.normalization.cyclic[j]) != 0;
      if (arrow != static_cast<bool>(lt[i][j]))
        throw AssertionFailure("Ext-quiver disagrees with normalized adjacency");
    }
  out.poset = Poset(labels, std::move(lt));
  out.order_unit.assign(p, Int(1));
  return out;
}

bool k0_cone_contains(const OrderedK0& k, const std::vector<Int>& v) {
  return delta_contains(k.poset, v);
}

namespace {

ConeVerdict cone_oracle_core(const OrderedK0& k, const std::vector<Int>& start, unsigned cap) {
  const std::size_t n = k.normalization.m.rows();
  if (start.size() != n) throw std::invalid_argument("vector length does not match the quiver");

  auto nonneg = [](const std::vector<Int>& x) {
    for (const auto& c : x)
      if (c < 0) return false;
    return true;
  };

  std::vector<Int> x = start;
  if (nonneg(x)) return ConeVerdict::Member;
  for (unsigned m = 1; m <= cap; ++m) {
    x = vec_mat(x, k.normalization.m);
    if (nonneg(x)) return ConeVerdict::Member;
  }

  // polynomial model of start * M^{z+1} (z >= 0): express the first
  // image in the cyclic row basis, move z steps with N, multiply by R
  std::vector<Int> first = vec_mat(start, k.normalization.m);
  auto coeffs = express_in_rows(k.r, k.normalization.cyclic, first);
  if (!coeffs) throw AssertionFailure("image of the test vector escapes the row span");
  const std::size_t p = k.normalization.cyclic.size();
  auto b = n_power_polynomial(k.n);
  for (std::size_t col = 0; col < n; ++col) {
    // coordinate col of (c N^z) R as a polynomial in z
    std::vector<Rat> acc;
    for (std::size_t j = 0; j < p; ++j) {
      if (k.r(j, col) == 0) continue;
      for (std::size_t i = 0; i < p; ++i) {
        if ((*coeffs)[i] == 0) continue;
        const auto& poly = b[i][j].coeffs();
        if (acc.size() < poly.size()) acc.resize(poly.size(), Rat(0));
        for (std::size_t l = 0; l < poly.size(); ++l)
          acc[l] += Rat((*coeffs)[i]) * poly[l] * Rat(k.r(j, col));
      }
    }
    BinomialPolynomial coord(acc);
    if (!coord.is_zero() && coord.leading_monomial_coeff() < 0) {
      // eventually negative forever; nonnegative images propagate
      // forward, so no level can be nonnegative
      return ConeVerdict::NonMember;
    }
  }
  return ConeVerdict::Inconclusive;
}

}  // namespace

ConeVerdict positive_cone_oracle(const OrderedK0& k, const std::vector<Int>& vec, unsigned cap) {
  return cone_oracle_core(k, vec, cap);
}

ConeVerdict positive_cone_oracle_original(const OrderedK0& k, const std::vector<Int>& vec,
                                          unsigned cap) {
  const auto& perm = k.normalization.perm;
  if (vec.size() != perm.size()) throw std::invalid_argument("vector length does not match the quiver");
  std::vector<Int> permuted(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) permuted[i] = vec[perm[i]];
  return cone_oracle_core(k, permuted, cap);
}

ConeVerdict positive_cone_oracle_embedded(const OrderedK0& k, const std::vector<Int>& v,
                                          unsigned cap) {
  if (static_cast<int>(v.size()) != k.rank)
    throw std::invalid_argument("vector length does not match the K0 rank");
  std::vector<Int> image(k.normalization.m.rows(), 0);
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t col = 0; col < k.r.cols(); ++col) image[col] += v[i] * k.r(i, col);
  return cone_oracle_core(k, image, cap);
}

std::string k0_json(const OrderedK0& k) {
  nlohmann::json j;
  j["rank"] = k.rank;
  nlohmann::json poset;
  poset["elements"] = k.poset.elements();
  nlohmann::json covers = nlohmann::json::array();
  for (auto [i, jx] : k.poset.covers())
    covers.push_back({k.poset.element(i), k.poset.element(jx)});
  poset["covers"] = covers;
  j["poset"] = poset;
  nlohmann::json unit = nlohmann::json::array();
  for (const auto& u : k.order_unit) unit.push_back(u.get_str());
  j["order_unit"] = unit;
  j["normalization"] = {{"L", k.normalization.veronese_l},
                        {"n", k.normalization.veronese_n},
                        {"perm", k.normalization.labels}};
  return j.dump();
}

}  // namespace qgr
