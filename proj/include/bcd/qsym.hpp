#pragma once

#include "bcd/brupaths.hpp"

namespace bcd {

using CdPoly = std::map<CdWord, Int, CdLess>;

std::string cd_str(const CdPoly& p);  // "c^4+dc^2+2cdc+..."; empty word "1"

// R-quasisymmetric function in the L basis: coefficients are the b_a;
// F(u,u) = 1 (empty composition).
QSymVec f_tilde(const Element& u, const Element& v, ReflectionOrdering ord);
QSymVec f_tilde_from_stats(const PathStats& stats);

// Sparse b-values at path length n+1, keyed by subsets of [n].
std::map<Subset, Int> b_subset_table(const PathStats& stats, int n);

// Complete cd-index from sparse path statistics (signed sparse-b formula);
// verifies that sum [w] Theta_w reproduces the L-expansion, and throws
// InternalInconsistency otherwise.  psi(u,u) = 0 by convention.
CdPoly complete_cd_index(const Element& u, const Element& v, ReflectionOrdering ord);
CdPoly complete_cd_index_from_stats(const PathStats& stats, int l);
// Single coefficient by the sparse-b route.
Int cd_coeff_from_b(const CdWord& w, const std::map<Subset, Int>& b_table);

// Sparse k-vector at degree n: k_S = sum_{T subset S} (-1)^{|S|-|T|} b_T.
std::map<Subset, Int> k_vector(const PathStats& stats, int n);
// [w] as the signed window sum over the k-vector (the second route).
Int cd_from_k(const CdWord& w, const std::map<Subset, Int>& kvec);

// Third route: solve sum_w [w] Theta_w = (degree n+1 component, L basis).
CdPoly cd_from_l_solve(const QSymVec& l_component, int n);

// Substitute c -> a+b, d -> ab+ba; keys are words over {a,b} ("" for 1).
std::map<std::string, Int> ab_expansion(const CdPoly& psi);

// q * psi(q, 0).
IntPoly r_tilde_from_cd(const CdPoly& psi);

// (1) sum_w 2^{n-|w|_d} [w] = c_{[n]}; (2) sum_w [w] = b_{1,3,5,...} at
// degree n.  Returns the two findings.
std::pair<bool, bool> sum_identities(const PathStats& stats, const CdPoly& psi, int n);

// Ordinary (homogeneous, top-degree) cd-index of the poset [u,v] via the
// flag f-vector, flag h, and an exact ab-to-cd solve.  Independent of the
// path machinery above.
CdPoly ordinary_cd_index(const Element& u, const Element& v);

}  // namespace bcd
