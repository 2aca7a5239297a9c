#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qgr/matrix.hpp"
#include "qgr/quiver.hpp"

namespace qgr {

// A graded representation known in degrees 0..cap. Component (v, i) is
// a rational vector space with an ordered basis; for an arrow a and
// degree i < cap, action(a, i) maps component (s(a), i) into
// (t(a), i+1) by right multiplication of row vectors. Arrows without a
// stored action act by zero. Immutable in practice: operations build
// fresh values.
class TruncatedGradedRep {
 public:
  TruncatedGradedRep(std::shared_ptr<const Quiver> quiver, int cap);

  const Quiver& quiver() const { return *quiver_; }
  std::shared_ptr<const Quiver> quiver_ptr() const { return quiver_; }
  int cap() const { return cap_; }

  int dim(int vertex, int degree) const { return dims_[degree][vertex]; }
  int total_dim(int degree) const;
  const std::vector<std::string>& basis_labels(int vertex, int degree) const {
    return labels_[degree][vertex];
  }

  // nullptr when the arrow acts by zero at this degree
  const RatMatrix* action(int arrow, int degree) const;
  const std::map<int, std::vector<RatMatrix>>& actions() const { return actions_; }

  void set_dim(int vertex, int degree, int dim, std::vector<std::string> labels = {});
  void set_action(int arrow, int degree, RatMatrix m);

  // Shape invariants: every stored action matches the declared
  // dimensions. Throws DimensionMismatch.
  void validate() const;

  // Degrees z..cap shifted down to 0..cap-z.
  TruncatedGradedRep shift_truncate(int z) const;

 private:
  std::shared_ptr<const Quiver> quiver_;
  int cap_;
  std::vector<std::vector<int>> dims_;
  std::vector<std::vector<std::vector<std::string>>> labels_;
  std::map<int, std::vector<RatMatrix>> actions_;
};

// O_v: dimension one in every degree, supported along the simple cycle
// through v, the cycle arrows acting by 1.
TruncatedGradedRep cyclic_point_module(const Quiver& q, const std::string& v, int cap);
TruncatedGradedRep cyclic_point_module(std::shared_ptr<const Quiver> q, const std::string& v,
                                       int cap);

// e_v kQ truncated: degree-j basis is the paths of length j from v,
// arrows acting by concatenation.
TruncatedGradedRep truncate_projective(const Quiver& q, const std::string& v, int cap);
TruncatedGradedRep truncate_projective(std::shared_ptr<const Quiver> q, const std::string& v,
                                       int cap);

// Per-degree dimensions of the certified-torsion subspace: elements
// annihilated by every path long enough to stay below the cap. A lower
// bound for the true torsion submodule.
std::vector<int> torsion_elements(const TruncatedGradedRep& m);

// Dimension of the space of degree-0 graded maps M_{>=n} -> N seen in
// degrees n..cap: the commuting-square system solved exactly.
int hom_dim(const TruncatedGradedRep& m, const TruncatedGradedRep& n, int from);

struct GradedHom {
  int from;
  // blocks[degree - from][vertex]; zero-size blocks are empty matrices
  std::vector<std::vector<RatMatrix>> blocks;
};

std::vector<GradedHom> hom_space_basis(const TruncatedGradedRep& m, const TruncatedGradedRep& n,
                                       int from);

struct QgrHomResult {
  int dimension;
  bool stabilized;  // last three tail values agreed
  std::vector<int> values;  // hom_dim for from = 0..cap-2
};

QgrHomResult qgr_hom_dim(const TruncatedGradedRep& m, const TruncatedGradedRep& n);

// N(nu) over a quiver where v and w carry loops and r: v -> w. Lane v
// and lane w are one-dimensional in every degree; the loops act by 1
// and r maps lane v of degree i to nu_i times lane w of degree i+1.
struct Extension {
  TruncatedGradedRep rep;
  int v, w;
  int loop_v, loop_w, r;  // arrow indices
  std::vector<Rat> nu;
};

Extension build_extension(std::shared_ptr<const Quiver> q, const std::string& v,
                          const std::string& w, const std::string& r,
                          const std::vector<Rat>& nu, int cap);

enum class SplitVerdict { Split, NonSplit, Inconclusive };

struct SplitResult {
  SplitVerdict verdict;
  int witness_from = -1;  // section found from this degree on, when split
};

// Split: a graded section (O_v)_{>=n} -> N(nu) over the projection
// exists for some n <= cap-2. NonSplit: the stabilized endomorphism
// dimension of N(nu) is 1, so there is no nontrivial idempotent.
SplitResult is_split_extension(const Extension& e);

struct PointModuleDescriptor {
  std::string vertex;                 // w with pi^* M = pi^* O_w
  unsigned cycle_length;
  std::vector<std::string> sequence;  // eventual support, starting at the entry vertex
  int entry_degree;
};

// Requires dim 1 in every degree and cap >= 2|Q0| + 2. Traces the
// support sequence into its eventual cycle and undoes the shift.
PointModuleDescriptor classify_point_module(const TruncatedGradedRep& m);

std::string rep_to_json(const TruncatedGradedRep& m);
TruncatedGradedRep rep_from_json(const std::string& text);

std::string to_json(const PointModuleDescriptor& d);

}  // namespace qgr
