#pragma once

#include <vector>

#include "bcd/composition.hpp"
#include "bcd/coxeter.hpp"
#include "bcd/klcore.hpp"
#include "bcd/qsymvec.hpp"

namespace bcd {

// Bruhat graph restricted to [u,v]: vertices in canonical order, upward
// edges with reflection labels.
struct IntervalGraph {
  std::vector<Element> elems;
  std::vector<std::vector<std::pair<int, Reflection>>> up;  // x -> (y, yx^{-1})
  int index_of(const Element& x) const;  // -1 if absent
};

IntervalGraph bruhat_graph(const Element& u, const Element& v);

// Directed path in the Bruhat graph.
struct BruhatPath {
  std::vector<Element> verts;
  std::vector<Reflection> labels() const;
};

Composition descent_composition(const BruhatPath& p, ReflectionOrdering ord);

// Tally of descent compositions over all Bruhat paths from u to v; the key
// size is the path length.
struct PathStats {
  std::map<Composition, Int> b;
  Int b_at(const Composition& a) const;
  Int total_paths() const;
  Int paths_of_length(int k) const;
};

PathStats b_stats(const Element& u, const Element& v, ReflectionOrdering ord);

// c_a = sum of b over coarsenings: paths of length |a| whose descent set is
// contained in set(a).
Int c_from_b(const PathStats& stats, const Composition& a);

// Same count by a depth-bounded walk, without the full tally.
Int c_by_paths(const Element& u, const Element& v, const Composition& a, ReflectionOrdering ord);

// Chain formula: sum over chains u = u_0 < ... < u_r = v of the product of
// [q^{a_j}] Rtilde_{u_{j-1},u_j}; evaluated by dynamic programming.
Int c_via_chains(KlContext& ctx, const Element& u, const Element& v, const Composition& a);

// All M-basis coefficients c_a at once, by the same chain recursion.
QSymVec f_tilde_via_chains(KlContext& ctx, const Element& u, const Element& v);

// Chain-formula c-vectors for every element of a canonical interval list:
// entry i of the first maps a to c_a(elems[i], back()), of the second to
// c_a(front(), elems[i]).
std::vector<std::map<Composition, Int>> chain_c_from(KlContext& ctx,
                                                     const std::vector<Element>& elems);
std::vector<std::map<Composition, Int>> chain_c_to(KlContext& ctx,
                                                   const std::vector<Element>& elems);

// Length-2 paths from u to v sorted by lexicographic label-pair order.
std::vector<BruhatPath> length2_paths(const Element& u, const Element& v, ReflectionOrdering ord);

// Lexicographic pairing of length-2 paths with opposite descent type.
// Throws InternalInconsistency if the descent split is uneven.
BruhatPath flip2(const BruhatPath& p, ReflectionOrdering ord);

// flip at interior position i of a longer path.
BruhatPath flip_at(const BruhatPath& p, int i, ReflectionOrdering ord);

// phi(p, S): flips applied at the positions of S in increasing order;
// requires D(p) empty.
BruhatPath phi_injection(const BruhatPath& p, const Subset& s, ReflectionOrdering ord);

// All increasing (empty descent set) paths from u to v of length k.
std::vector<BruhatPath> increasing_paths(const Element& u, const Element& v, int k,
                                         ReflectionOrdering ord);

}  // namespace bcd
