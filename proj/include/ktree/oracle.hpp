#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ktree/quiver.hpp"
#include "ktree/stability.hpp"

namespace ktree {

using Morphism = std::map<std::string, Matrix>;  // vertex id -> φ_v

struct HomSpace {
  std::vector<Morphism> basis;
  std::size_t dim() const { return basis.size(); }
};

// Exact kernel of φ_j X_α = Y_α φ_i over all arrows. X and Y must share vertex and arrow ids.
HomSpace hom_space(const Representation& x, const Representation& y);
std::size_t hom_dim(const Representation& x, const Representation& y);

long euler_form(const Quiver& q, const DimVector& a, const DimVector& b);
long kronecker_euler_form(long d, long e, long d2, long e2, long m);
// hom_dim - euler_form; throws PropertyViolation if negative.
long ext_dim(const Representation& x, const Representation& y);

struct IndecomposabilityResult {
  bool indecomposable = false;
  std::size_t end_dim = 0;
  std::size_t top_dim = 0;             // dim End/rad
  std::optional<Morphism> witness;     // idempotent if one was found, else outside scalars + radical
  bool witness_is_idempotent = false;
};

// Fitting decomposition of φ - λ·id for basis elements φ of End(X) and
// rational λ on their diagonals; returns a nontrivial idempotent if found.
std::optional<Morphism> find_idempotent(const HomSpace& end);

// End(X) is local iff End/rad is one-dimensional; rad is the kernel of the
// trace form (φ, ψ) -> tr(φψ). Throws InvalidInput on the zero representation.
IndecomposabilityResult is_indecomposable(const Representation& x);

std::vector<Tuple> brute_simple_tuples(long d, long e, long n);

enum class RootKind { Real, Imaginary, NotRoot };

struct RootClass {
  RootKind kind = RootKind::NotRoot;
  long q = 0;                  // d^2 + e^2 - m d e
  bool slope_bound = false;    // q <= 0
  bool bounded_search = false; // reflection descent gave up after 64 steps
};

RootClass classify_root(long d, long e, long m);
const char* to_string(RootKind k);

// Coordinate stability of an arbitrary bipartite representation: for every
// nonempty set of source basis vectors, the subrepresentation they generate
// (span of the vectors plus their images) has smaller slope.
StabilityResult is_stable_coordinate(const Representation& x, std::size_t max_vectors = 20);

}  // namespace ktree
