#pragma once

#include <string>
#include <vector>

#include "qgr/ext_quiver.hpp"
#include "qgr/quiver.hpp"

namespace qgr {

// Finitely presented monomial algebra k<gens>/(relations). Relations
// are words of length >= 2 stored as generator indices; the stored
// presentation is reduced (no relation contains another as a subword).
struct MonomialPresentation {
  std::vector<std::string> generators;
  std::vector<std::vector<int>> relations;

  std::string word_string(const std::vector<int>& word) const;
};

struct ParsedAlgebra {
  MonomialPresentation presentation;
  std::vector<std::string> warnings;  // dropped redundant relations
};

ParsedAlgebra parse_algebra(const std::string& text);

// Overlap graph on normal words: vertices are the normal words of
// length d-1 (d = longest relation), one arrow u -> w per normal word
// of length d with prefix u and suffix w. The relation-free algebra on
// g generators maps to a single vertex with g loops.
Quiver ufnarovskii_graph(const MonomialPresentation& a);

// E_A := E_{Q_A}. Throws NotFiniteGK with the doubly cyclic witness.
ExtQuiver ext_quiver_of_algebra(const MonomialPresentation& a);

}  // namespace qgr
