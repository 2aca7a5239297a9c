#pragma once

#include <map>
#include <string>
#include <vector>

#include "qgr/quiver.hpp"

namespace qgr {

// Dimension data of the ultramatricial algebra S(Q): p_0 = (1,...,1),
// p_{m+1} = M^T p_m; S_m is the product of matrix algebras of those sizes.
struct BratteliSequence {
  std::vector<std::vector<Int>> p;  // p[m] indexed by vertex
};

BratteliSequence bratteli(const Quiver& q, unsigned n_max);

// Block sizes of End restricted to each degree: for degree m and live
// vertex i, the number of length-m paths from a cyclic vertex to i.
// Zero blocks are omitted.
struct EndoBlockDims {
  std::vector<std::map<std::string, Int>> blocks;  // per degree 0..n_max
};

EndoBlockDims endo_block_dims(const Quiver& q, unsigned n_max);

struct NoetherianReport {
  bool left;
  bool right;
};

// Right Noetherian iff every cyclic vertex has out-degree one; left
// with in-degree one.
NoetherianReport noetherian_check(const Quiver& q);

struct Gk1Report {
  bool applicable;           // GK-dimension is exactly one
  int simple_count = 0;      // QGr kQ is Mod k^n with this n
  bool noetherian_left = false;
  bool noetherian_right = false;
};

Gk1Report gk1_report(const Quiver& q);

std::string matricial_json(const Quiver& q, unsigned n_max);
std::string to_json(const Gk1Report& r);

}  // namespace qgr
