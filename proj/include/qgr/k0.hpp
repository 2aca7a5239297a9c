#pragma once

#include <string>
#include <vector>

#include "qgr/matrix.hpp"
#include "qgr/poset.hpp"
#include "qgr/quiver.hpp"

namespace qgr {

// Result of the K0 normalization: a Veronese power of the input in
// which every simple cycle is a loop, vertices are relabeled so the
// incidence matrix is upper triangular with diagonal entries 0 or 1,
// the rank equals the number of cyclic vertices, and cyclic vertices
// see each other through an arrow iff through a path. The quiver is
// carried as incidence data; materializing its arrows can be
// astronomically large and nothing downstream needs them.
struct NormalizedQuiver {
  IntMatrix m;                      // incidence, normalized order
  std::vector<std::string> labels;  // original vertex ids in normalized order
  std::vector<int> perm;            // perm[new index] = original index
  unsigned veronese_l;              // lcm of simple cycle lengths
  unsigned veronese_n;              // second power (1 when not needed)
  std::vector<int> cyclic;          // nu_1 < ... < nu_p, normalized indices

  int rank_p() const { return static_cast<int>(cyclic.size()); }
  // Materializes the quiver; guarded by the Veronese arrow cap.
  Quiver to_quiver() const;
};

NormalizedQuiver normalize_for_k0(const Quiver& q);

// Rows of the normalized incidence matrix at the cyclic indices; a
// Z-basis of Z^n M. Verified against the leading-entry argument.
IntMatrix cyclic_row_basis(const NormalizedQuiver& nq);

// The unipotent N with N R = R M, solved row by row and cross-checked
// against the closed formula when the rank is small.
IntMatrix solve_n_matrix(const NormalizedQuiver& nq, const IntMatrix& r);

// Closed formula for the entries of N in terms of the entries of M and
// M^2: the signed sum over chains of intermediate cyclic indices.
IntMatrix closed_form_n_matrix(const NormalizedQuiver& nq);

// Entries of N^z as polynomials: b_ij(z) = sum_l C(z, l) * (N - I)^l_ij.
std::vector<std::vector<BinomialPolynomial>> n_power_polynomial(const IntMatrix& n);

// Membership in the cone Delta(P): zero, or every minimal element of
// the support carries a positive coordinate.
bool delta_contains(const Poset& p, const std::vector<Int>& v);

// Brute-force expression of v as a bounded sum of generator-monoid
// elements; test-side counterpart of delta_contains.
bool delta_generator_oracle(const Poset& p, const std::vector<Int>& v, unsigned bound);

struct OrderedK0 {
  int rank;
  Poset poset;  // elements: original cyclic vertex ids, normalized order
  std::vector<Int> order_unit;
  NormalizedQuiver normalization;
  IntMatrix r;  // p x n cyclic row basis
  IntMatrix n;  // p x p unipotent
};

OrderedK0 k0(const Quiver& q);

// Cone membership of a K0 class given in the cyclic-projective basis.
bool k0_cone_contains(const OrderedK0& k, const std::vector<Int>& v);

enum class ConeVerdict { Member, NonMember, Inconclusive };

// Iterates the direct-limit maps: membership once an image is
// entrywise nonnegative, nonmembership certified by a coordinate whose
// polynomial model has negative leading coefficient.
// `vec` lives at level zero of the normalized system (length n).
ConeVerdict positive_cone_oracle(const OrderedK0& k, const std::vector<Int>& vec, unsigned cap);

// Same oracle for a vector indexed by the caller's original vertex order.
ConeVerdict positive_cone_oracle_original(const OrderedK0& k, const std::vector<Int>& vec,
                                          unsigned cap);

// Embedding of a K0 class: v * R, then the oracle.
ConeVerdict positive_cone_oracle_embedded(const OrderedK0& k, const std::vector<Int>& v,
                                          unsigned cap);

std::string k0_json(const OrderedK0& k);

}  // namespace qgr
