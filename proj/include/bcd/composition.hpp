#pragma once

#include <string>
#include <vector>

#include "bcd/bigint.hpp"

namespace bcd {

// A composition is a (possibly empty) sequence of positive parts.
using Composition = std::vector<int>;
// Subsets of [n-1] (or [n]) are kept as sorted vectors of 1-based positions.
using Subset = std::vector<int>;

int comp_size(const Composition& a);
inline int comp_length(const Composition& a) { return static_cast<int>(a.size()); }
Composition comp_reversed(const Composition& a);  // a*

// Standard bijection: composition b of n  <->  {b1, b1+b2, ...} subset of [n-1].
Composition subset_to_composition(const Subset& s, int n);
Subset composition_to_subset(const Composition& a);

// a refines b (a is finer): consecutive blocks of a sum to the parts of b.
bool refines(const Composition& a, const Composition& b);
// All a with a refining b, in lexicographic order.
std::vector<Composition> refinements(const Composition& b);
// All compositions of n.
std::vector<Composition> compositions_of(int n);

std::string comp_str(const Composition& a);  // "(1,2,2)"; "()" for empty

// cd-words are strings over {c,d}; c has degree 1, d degree 2.  The empty
// word has degree 0.
using CdWord = std::string;

int cd_degree(const CdWord& w);
int cd_dcount(const CdWord& w);
int cd_head(const CdWord& w);  // length of the leading c-run
// c-block lengths around the d's, in letter order: for c^a d c^b d c^e
// returns {a, b, e} (k d's give k+1 blocks; no d gives one block).
std::vector<int> cd_blocks(const CdWord& w);
std::vector<CdWord> cd_words_of_degree(int n);

// Degree-major order, then lexicographic with c < d.
struct CdLess {
  bool operator()(const CdWord& a, const CdWord& b) const;
};

}  // namespace bcd
