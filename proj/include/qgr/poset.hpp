#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qgr/quiver.hpp"

namespace qgr {

// Finite poset given by its strict order relation. Construction
// validates irreflexivity, transitivity and antisymmetry.
class Poset {
 public:
  Poset() = default;
  Poset(std::vector<std::string> elements, std::vector<std::vector<bool>> lt);

  std::size_t size() const { return elements_.size(); }
  const std::vector<std::string>& elements() const { return elements_; }
  const std::string& element(std::size_t i) const { return elements_[i]; }
  bool less(std::size_t i, std::size_t j) const { return lt_[i][j]; }
  const std::vector<std::vector<bool>>& relation() const { return lt_; }

  // Pairs (i, j) with i < j and nothing strictly between.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;

  // Indices minimal within the given subset.
  std::vector<std::size_t> minimal_of(const std::vector<std::size_t>& subset) const;

  // Number of elements in a longest chain; 0 for the empty poset.
  int longest_chain() const;

  bool operator==(const Poset& o) const { return elements_ == o.elements_ && lt_ == o.lt_; }

 private:
  std::vector<std::string> elements_;
  std::vector<std::vector<bool>> lt_;
};

// Order isomorphism by degree-profile refinement plus backtracking.
// Returns the element bijection (index in a -> index in b) if one exists.
std::optional<std::vector<std::size_t>> poset_isomorphism(const Poset& a, const Poset& b);

// Sorted canonical refinement colors; equal for isomorphic posets, so
// differing profiles reject isomorphism outright.
std::vector<long> poset_color_profile(const Poset& p);

}  // namespace qgr
