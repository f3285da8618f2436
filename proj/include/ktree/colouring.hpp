#pragma once

#include <map>
#include <string>
#include <vector>

#include "ktree/quiver.hpp"

namespace ktree {

// arrow id -> colour in 1..m
using Colouring = std::map<std::string, int>;

// Proper edge colouring of the underlying multigraph with m colours, found by
// backtracking over arrows sorted by (source, target, id); the first
// admissible colour is tried first.
Colouring stable_colouring(const Quiver& q, int m);
bool is_stable_colouring(const Quiver& q, const Colouring& c, int m);

// The m-Kronecker quiver: vertices "1" -> "2", arrows a1..am coloured 1..m.
Quiver kronecker_quiver(int m);

// Push a coloured bipartite representation down to K(m): V = ⊕ sources,
// W = ⊕ sinks (in vertex order), X_k collects the arrows of colour k.
Representation push_down(const Representation& x, int m);

// Generic representation of a bipartite quiver: maps into sinks of
// dimension > 1 use distinct points of the moment curve as columns, so any
// set of at most dim(j) incoming columns is independent.
Representation generic_representation(const Quiver& q, const DimVector& dims);

// realize_kronecker(Q, dims, colouring) = push_down(generic representation).
Representation realize_kronecker(const Quiver& q, const DimVector& dims, const Colouring& c, int m);

using Weight = std::vector<long>;

struct WeightReport {
  std::map<std::string, Weight> weight;
  std::map<std::string, int> side;  // 1 = source layer, 2 = sink layer
  // Pairs of distinct vertices on one side that share a weight.
  std::vector<std::pair<std::string, std::string>> collisions;
  // (source, sink, colour) with χ(sink) = χ(source) + e_colour that are not arrows of Q.
  struct Induced {
    std::string source, sink;
    int colour;
  };
  std::vector<Induced> induced;
  bool embeds() const { return collisions.empty() && induced.empty(); }
};

// BFS from root with χ(root) = 0 and χ(j) = χ(i) + e_k along arrows of colour k.
// Throws PropertyViolation on inconsistent propagation (possible only off trees).
WeightReport cover_weights(const Quiver& q, const Colouring& c, const std::string& root, int m);

}  // namespace ktree
