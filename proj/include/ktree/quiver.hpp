#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ktree/matrix.hpp"

namespace ktree {

struct Arrow {
  std::string id;
  std::string source;
  std::string target;
  std::optional<int> colour;

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

struct Bipartition {
  std::vector<std::string> sources;  // I
  std::vector<std::string> sinks;    // J

  friend bool operator==(const Bipartition&, const Bipartition&) = default;
};

// Finite quiver. Vertex and arrow ids are opaque tokens; all orderings that
// matter for determinism are by insertion order or lexicographic on ids.
class Quiver {
 public:
  Quiver() = default;
  // Validates endpoints, id uniqueness and the bipartition (when given).
  Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows,
         std::optional<Bipartition> bipartition = std::nullopt);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const std::optional<Bipartition>& bipartition() const { return bipartition_; }

  bool has_vertex(const std::string& v) const { return vindex_.count(v) > 0; }
  bool has_arrow(const std::string& a) const { return aindex_.count(a) > 0; }
  const Arrow& arrow(const std::string& id) const;

  // Indices into arrows(), in arrow order.
  const std::vector<std::size_t>& out_arrows(const std::string& v) const;
  const std::vector<std::size_t>& in_arrows(const std::string& v) const;
  std::size_t degree(const std::string& v) const;

  bool is_source(const std::string& v) const;  // in I (or no incoming arrows without bipartition)
  bool is_sink(const std::string& v) const;
  std::vector<std::string> sources() const;
  std::vector<std::string> sinks() const;

  // The bipartition, or one inferred from arrow directions; throws
  // InvalidInput if some vertex has both incoming and outgoing arrows.
  Bipartition require_bipartite() const;

  // Same quiver with colours replaced (missing ids become uncoloured).
  Quiver with_colours(const std::map<std::string, int>& colours) const;

  friend bool operator==(const Quiver& a, const Quiver& b) {
    return a.vertices_ == b.vertices_ && a.arrows_ == b.arrows_ && a.bipartition_ == b.bipartition_;
  }

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::optional<Bipartition> bipartition_;
  std::map<std::string, std::size_t> vindex_, aindex_;
  std::map<std::string, std::vector<std::size_t>> out_, in_;
};

// Vertex id -> dimension. Missing entries read as 0.
class DimVector {
 public:
  DimVector() = default;
  DimVector(std::map<std::string, long> entries);

  long operator[](const std::string& v) const;
  void set(const std::string& v, long d);
  long total() const;
  const std::map<std::string, long>& entries() const { return entries_; }

  friend bool operator==(const DimVector& a, const DimVector& b);

 private:
  std::map<std::string, long> entries_;
};

// Dimension vector with every vertex of q set to `value`.
DimVector constant_dims(const Quiver& q, long value);

// (Σ over sources, Σ over sinks).
std::pair<long, long> dimension_type(const Quiver& q, const DimVector& dims);

struct Representation {
  Quiver quiver;
  DimVector dims;
  std::map<std::string, Matrix> matrices;               // arrow id -> dims[target] x dims[source]
  std::map<std::string, std::vector<std::string>> basis;  // vertex id -> labels

  // Throws InvalidInput when shapes, label counts or ids are inconsistent.
  void validate() const;
  const Matrix& matrix(const std::string& arrow) const;
};

// Representation with default labels "b1".."bn" and the given matrices.
Representation make_representation(Quiver q, DimVector dims, std::map<std::string, Matrix> matrices);

// Thin representation: every vertex dimension 1, every map (1).
Representation thin_representation(const Quiver& q);

// Direct sum over the same quiver (block diagonal matrices).
Representation direct_sum(const Representation& x, const Representation& y);

struct BasisToken {
  std::string vertex;
  std::size_t index;
  friend auto operator<=>(const BasisToken&, const BasisToken&) = default;
};

struct CoefficientArrow {
  std::string arrow;
  BasisToken source;
  BasisToken target;
  Rational coefficient;
};

struct CoefficientQuiver {
  std::vector<BasisToken> vertices;
  std::vector<std::string> labels;  // "vertex/basislabel", parallel to vertices
  std::vector<CoefficientArrow> arrows;
};

CoefficientQuiver coefficient_quiver(const Representation& x);
bool is_tree(const CoefficientQuiver& g);

// A_i, A_j, N_i, N_j and the counts R.
struct NeighborSets {
  std::map<std::string, std::set<std::string>> A;  // neighbours of positive dimension
  std::map<std::string, std::set<std::string>> N;  // all neighbours
  long R(const std::string& v) const;
};
NeighborSets neighbor_sets(const Quiver& q, const DimVector& dims);

struct QuiverWithDims {
  Quiver quiver;
  DimVector dims;
};

// Glue j0 of Q with j1 of Q'. Vertices and arrows of Q' are prefixed with
// `prefix` to keep ids apart; the glued sink keeps the id j0 and gets
// dimension dims[j0] + dims'[j1] - 1.
QuiverWithDims glue(const QuiverWithDims& q, const std::string& j0, const QuiverWithDims& q2,
                    const std::string& j1, const std::string& prefix = "g");

// Proper boundary quivers, each given by its source subset (lexicographic).
std::vector<std::vector<std::string>> boundary_quivers(const Quiver& q);

// Full subquiver on the given source set together with all their sinks.
Quiver source_subquiver(const Quiver& q, const std::vector<std::string>& sources);

// Whether the underlying undirected multigraph of q is a tree.
bool is_tree_quiver(const Quiver& q);

// Zero-padded id so lexicographic and numeric order agree.
std::string padded_id(const std::string& prefix, std::size_t n, std::size_t width = 3);

}  // namespace ktree
