#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ktree/quiver.hpp"
#include "ktree/stability.hpp"

namespace ktree {

struct SimpleTuple {
  long n = 2;
  Tuple s;
  long t() const { return static_cast<long>(s.size()) - 1; }
  long d() const;
  long e() const;  // (n-1)d + t + 1
};

// ⌈e/d⌉ clamped to [2, m-1].
long default_n(long d, long e, long m);

std::pair<long, long> starting_vector(long d, long e);

struct Decomposition {
  long ds, es, k, dp, ep;  // (d,e) = (ds,es) + k(dp,ep)
};
Decomposition decompose(long d, long e);

// Repeated decomposition: k at each level until d' = 1.
std::vector<long> n_list(long d, long e);

using Word = std::vector<long>;

Word eta(long n, long l, const Word& w);
Word theta(long n, long l, const Word& w);

struct ChainStep {
  char kind;  // 'E' for η, 'T' for Θ
  long index;
};

struct QuiverFunctionChain {
  long type = 0;                 // l
  std::vector<long> ls;          // l_1, l_2, ...
  std::vector<ChainStep> steps;  // outermost first; the last one is applied first
  bool shortcut = false;         // one of the k_{1,*} in {0,1} closed forms was used
};

// Returns the chain and the word ŝ.
std::pair<QuiverFunctionChain, Word> quiver_function_chain(long d, long e, long n);

SimpleTuple simple_tuple(long d, long e, long n);
Word hat(const Tuple& s);
Word s_recursion(const std::vector<long>& ns);

// Chain of stars of the given arities, each star's first sink glued to the
// previous star's last sink. Sources i001.., sinks j001.., arrows a001...
Quiver stars_chain(const std::vector<long>& arities);
QuiverWithDims realize_simple(const SimpleTuple& s);
QuiverWithDims realize_star(long k);

struct Modification {
  QuiverWithDims quiver;
  std::string sink;
};
std::vector<Modification> modify(const QuiverWithDims& t, long m);

QuiverWithDims realize_chain(const Tuple& s, long n, long m);

struct ChainQuiver {
  Tuple s;
  long n;
  QuiverWithDims quiver;
};
// First tuple (lexicographic) passing chain_stable whose realization also
// passes is_stable_generic. Throws PropertyViolation when e is a multiple of d.
ChainQuiver general_stable_quiver(long d, long e, long m);

}  // namespace ktree
