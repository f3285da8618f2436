#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ktree/quiver.hpp"

namespace ktree {

// Symmetric Cartan matrix of the underlying graph, vertices in quiver order.
std::vector<std::vector<long>> cartan_matrix(const Quiver& q);

std::pair<long, long> kronecker_reflect_dim(long d, long e, long m);

// R^- at a source: the new space at q is the cokernel of the stacked map
// X_q -> ⊕ X_j, with basis the rows not chosen as pivots. Arrows at q are
// reversed (same ids and colours). Throws PropertyViolation when the stacked
// map is not injective (an E_q summand).
Representation reflect_source(const Representation& x, const std::string& q);
// R^+ at a sink: the new space is the kernel of [X_α ...], with basis indexed
// by the non-pivot columns. Throws PropertyViolation when not surjective.
Representation reflect_sink(const Representation& x, const std::string& q);

// Reflection of a coloured bipartite representation at every source, as a
// representation of the universal cover: each nonzero sink is first padded
// with zero sources along its missing colours, pivots are chosen to keep the
// coefficient quiver a forest where possible, and zero vertices are pruned
// (kept with prune = false, so that reflect_all_sinks can restore them).
Representation reflect_all_sources(const Representation& x, int m, bool prune = true);
// R^+ at every sink; prunes zero vertices. Inverse of reflect_all_sources up to isomorphism.
Representation reflect_all_sinks(const Representation& x);

struct TreeBasis {
  Representation rep;
  CoefficientQuiver gamma;
};
// reflect_all_sources followed by a tree check; throws PropertyViolation when
// no pivot choice gives a tree.
TreeBasis tree_basis_after_reflection(const Representation& x, int m);

// Reverse all arrows and transpose all matrices.
Representation dual(const Representation& x);
// Dual of a K(m) representation, relabelled so it is again over K(m).
Representation kronecker_dual(const Representation& x);
// R^- at vertex 1 of K(m), relabelled so the result is again over K(m).
Representation kronecker_reflect(const Representation& x);
Representation kronecker_coreflect(const Representation& x);  // inverse direction

// Same representation re-expressed over q (same vertex and arrow ids).
Representation with_quiver(const Representation& x, const Quiver& q);

// Remove dim(sinks) - e_target degree-one sinks of dimension 1, in sink order.
Representation factor_module(const Representation& x, long e_target);

struct PlanStep {
  enum class Op { Reflect, Swap } op;
  long d_before, e_before, d_after, e_after;
};

struct ReflectionPlan {
  long d0 = 0, e0 = 0;  // fundamental-range start
  long d = 0, e = 0;    // target
  std::vector<PlanStep> steps;  // forward order, from (d0,e0) to (d,e)
};

// Throws InvalidInput when (d,e) does not reduce into the fundamental range
// (i.e. it is not a root).
ReflectionPlan normalize_root(long d, long e, long m);

struct Stage {
  std::string op;  // "base", "reflect" or "swap"
  long d, e;
  std::size_t gamma_vertices, gamma_arrows;
  bool tree;
};

struct TreeModule {
  Representation cover;      // coloured bipartite representation on its support tree
  Representation kronecker;  // push-down to K(m)
  CoefficientQuiver gamma;
  ReflectionPlan plan;
  std::string construction;  // "simple-E2", "star", "simple", "factor" or "chain"
  std::vector<long> tuple;   // simple or chain tuple when one was used
  bool stable = false;
  std::string stability_note;
  std::vector<Stage> stages;
};

// Throws InvalidInput for non-roots and m < 3; with require_stable, throws
// PropertyViolation for the excluded family (e = kd after normalization, d >= 2).
TreeModule construct_tree_module(long d, long e, int m, bool require_stable = false);

}  // namespace ktree
