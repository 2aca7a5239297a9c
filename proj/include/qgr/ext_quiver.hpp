#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qgr/poset.hpp"
#include "qgr/quiver.hpp"

namespace qgr {

// Ext-quiver of QGr kQ: one vertex per cyclic vertex of Q (carrying
// its simple-cycle length), at most one arrow per ordered pair,
// no loops. The strict arrow relation is a partial order.
struct ExtQuiver {
  std::vector<std::string> vertices;       // cyclic vertices, declaration order
  std::vector<unsigned> cycle_lengths;     // parallel to vertices
  std::vector<std::pair<int, int>> arrows; // index pairs (v, w)

  Poset poset() const;
  Quiver as_quiver() const;
};

struct CyclicVertex {
  std::string vertex;
  unsigned cycle_length;
};

// Cyclic vertices with the length of their unique simple cycle.
// Throws NotFiniteGK on a doubly cyclic quiver.
std::vector<CyclicVertex> cyclic_vertices(const Quiver& q);

// True iff some path v -> w has positive length divisible by k.
// Reachability in the product automaton over (vertex, length mod k).
bool has_path_multiple(const Quiver& q, const std::string& v, const std::string& w, unsigned k);

ExtQuiver ext_quiver(const Quiver& q);

// Quiver of a poset with a loop at every element: arrow x -> y iff
// x <= y. Satisfies ext_quiver(gamma(P)) = P.
Quiver gamma(const Poset& p);

struct EquivalenceWitness {
  bool equivalent;
  // vertex of E_Q -> vertex of E_Q2 when equivalent
  std::vector<std::pair<std::string, std::string>> bijection;
  std::string distinguishing;  // human-readable reason when not
};

// QGr kQ and QGr kQ2 are equivalent iff their Ext-quivers are
// isomorphic posets.
EquivalenceWitness qgr_equivalent(const Quiver& q, const Quiver& q2);

// Longest chain in E, counting elements.
int gk_from_ext_quiver(const ExtQuiver& e);

std::string ext_poset_json(const ExtQuiver& e);

}  // namespace qgr
