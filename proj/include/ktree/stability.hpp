#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ktree/quiver.hpp"

namespace ktree {

// Θ(d)/dim(d) with Θ summing the source dimensions. Compared by cross-multiplication.
struct Slope {
  long num = 0;
  long den = 1;
  Rational value() const { return Rational(num, den); }
  friend bool operator<(const Slope& a, const Slope& b) { return a.num * b.den < b.num * a.den; }
  friend bool operator==(const Slope& a, const Slope& b) { return a.num * b.den == b.num * a.den; }
};

Slope slope(const DimVector& dims, const std::vector<std::string>& sources);

struct ImageDims {
  std::map<std::string, long> per_sink;
  long total = 0;  // d_U
};

// Generic image dimensions of the subspace spanned by the sources in `subset`.
ImageDims generic_image_dim(const Quiver& q, const DimVector& dims, const std::vector<std::string>& subset);

struct StabilityResult {
  bool stable = true;
  std::vector<std::string> witness;  // violating source subset when unstable
  long witness_d = 0, witness_e = 0;
};

// Coordinate-subrepresentation stability of the generic representation.
StabilityResult is_stable_generic(const Quiver& q, const DimVector& dims);

bool glueing_condition(long d, long e, long ds, long es);

struct GlueContext {
  long d, e, ds, es, k;
};

// min n >= 0 with ((k e + e_s) d1 + n) divisible by k d + d_s.
long f_map(long d1, const GlueContext& ctx);

using Tuple = std::vector<long>;

struct TupleWindow {
  long k, l;  // 1-based, inclusive
};

// Inequalities d(l-k+1) > (t+1)(s_k+...+s_l + l-k) over all windows except the full one.
bool simple_stable(const Tuple& s);
std::optional<TupleWindow> simple_stable_witness(const Tuple& s);

// Prefix form d l > (s_1+...+s_l + l-1)(t+1) for 1 <= l <= t; palindromic input only.
bool simple_stable_symmetric(const Tuple& s);

// sl + t > tΣ_{i<=l} s_i + l > s(l-1) + 1 for l = 1..t, s = Σ s_i.
bool chain_stable(const Tuple& s, long t);

}  // namespace ktree
