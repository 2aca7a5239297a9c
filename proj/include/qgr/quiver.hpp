#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "qgr/matrix.hpp"

namespace qgr {

struct Arrow {
  std::string id;
  int src;
  int tgt;
};

// Finite directed multigraph with named vertices and arrows. Vertex
// order is declaration order and every matrix in the library is
// indexed by it. Immutable after construction.
class Quiver {
 public:
  Quiver() = default;
  Quiver(std::string name, std::vector<std::string> vertices,
         std::vector<std::tuple<std::string, std::string, std::string>> arrows);

  const std::string& name() const { return name_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t arrow_count() const { return arrows_.size(); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const std::string& vertex_id(int i) const { return vertices_[i]; }

  int vertex_index(const std::string& id) const;  // throws if unknown
  std::optional<int> find_vertex(const std::string& id) const;

  const std::vector<int>& out_arrows(int v) const { return out_[v]; }
  const std::vector<int>& in_arrows(int v) const { return in_[v]; }

 private:
  std::string name_;
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::unordered_map<std::string, int> vertex_index_;
  std::vector<std::vector<int>> out_, in_;
};

// Path v_0 -a_1-> v_1 ... -a_m-> v_m; m = 0 is the trivial path.
struct Path {
  std::vector<int> vertices;  // m + 1 entries
  std::vector<int> arrows;    // m entries, indices into Quiver::arrows()
  std::size_t length() const { return arrows.size(); }
};

enum class QuiverFormat { Text, Json, Dot };

Quiver parse_quiver(const std::string& text);
Quiver quiver_from_json(const std::string& json_text);
std::string serialize(const Quiver& q, QuiverFormat format);

// Entry (i, j) counts arrows i -> j.
IntMatrix incidence_matrix(const Quiver& q);

// Number of paths u -> v of length len, by memoized walk over the
// arrow lists. Independent of incidence_matrix; the tests play the two
// against each other.
Int count_paths(const Quiver& q, const std::string& u, const std::string& v, unsigned len);

// Veronese quiver Q^(d): same vertices, (i, j) arrow multiplicity equal
// to the (i, j) entry of M_Q^d. Arrow ids are "src__tgt__k".
Quiver veronese(const Quiver& q, unsigned d);

}  // namespace qgr
