#pragma once

#include <string>
#include <vector>

#include "qgr/quiver.hpp"

namespace qgr {

// Subquiver of a simple cycle. Vertices are listed in traversal order
// starting from the canonical base (least declaration index); arrow i
// runs from vertices[i] to vertices[(i+1) % length].
struct SimpleCycle {
  std::vector<int> vertices;
  std::vector<int> arrows;
  int base() const { return vertices.front(); }
  std::size_t length() const { return arrows.size(); }
};

struct CycleDecomposition {
  std::vector<SimpleCycle> cycles;        // nontrivial SCCs that are simple cycles
  std::vector<int> doubly_cyclic;         // vertices of nontrivial SCCs that are not
  bool finite() const { return doubly_cyclic.empty(); }
};

// Each nontrivial strongly connected component either is a simple
// cycle or witnesses exponential growth; in the latter case all of its
// vertices are reported.
CycleDecomposition strongly_connected_cycles(const Quiver& q);

// Partial order on the simple cycles: C1 <= C2 iff C1 = C2 or some
// path runs from a vertex of C1 to a vertex of C2. Throws NotFiniteGK
// when a doubly cyclic vertex makes the preorder fail antisymmetry.
struct CyclePoset {
  std::vector<SimpleCycle> cycles;
  std::vector<std::vector<bool>> leq;  // leq[i][j] <=> C_i <= C_j
};

CyclePoset cycle_poset(const Quiver& q);

struct GrowthReport {
  bool finite;
  int gk_dimension = 0;                   // meaningful iff finite
  std::vector<std::string> doubly_cyclic; // nonempty iff !finite
  std::vector<std::string> max_chain;     // base vertices of one maximum chain
};

GrowthReport gk_dimension(const Quiver& q);

std::string to_json(const GrowthReport& r);

// r_n = total number of paths of length n, for n = 0..n_max.
std::vector<Int> growth_oracle(const Quiver& q, unsigned n_max);

// Map the cycle containing each vertex: entry is the index into
// CycleDecomposition::cycles, or -1 for acyclic vertices. Only valid
// for finite-GK quivers.
std::vector<int> cycle_of_vertex(const Quiver& q, const CycleDecomposition& dec);

}  // namespace qgr
