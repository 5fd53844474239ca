#pragma once

#include "bcd/qsym.hpp"

namespace bcd {

Int catalan(int i);
// C_{n/2}, zero for odd n.
Int catalan_half(int n);
// Ballot polynomial B_k(q).
IntPoly ballot(int k);

// Psi by the truncated recursion; throws on the empty composition.
IntPoly psi_alpha(const Composition& a);
// Upsilon by inclusion-exclusion over refinements.
IntPoly upsilon(const Composition& b);
// Upsilon by signed lattice-path enumeration (independent oracle).
IntPoly upsilon_lattice(const Composition& b);

// K(L_a) = q^{-|a|/2} Upsilon_a, equivalently K(M_a) = (-1)^{l(a)}
// q^{-|a|/2} Psi_a; linear in either basis.
HalfLaurent K_map(const QSymVec& v);

// Closed form for K(Theta_w).
HalfLaurent xi_w(const CdWord& w);

// q^{-l/2} P(q) - q^{l/2} P(1/q) as a Laurent polynomial in t.
HalfLaurent antisym_from_p(const IntPoly& p, int l);

// The same quantity by four routes (KL recursion, sum of [w] Xi_w, K of the
// path expansion, and the Upsilon sum identity); throws on any mismatch.
HalfLaurent antisymmetric_part(KlContext& ctx, const Element& u, const Element& v,
                               ReflectionOrdering ord);

// Coefficients of P in the basis q^i B_{n-2i}(-q), n = l-1, as linear forms
// in the complete cd-index.
std::vector<Int> a_vector(const CdPoly& psi, int l);
// Reconstruction sum a_i q^i B_{n-2i}(-q); l = 0 gives 1.
IntPoly kl_from_cd(const CdPoly& psi, int l);

IntPoly p_from_a(const std::vector<Int>& a, int n);
std::vector<Int> a_from_p(const IntPoly& p, int n);

// [q^1] P by the cd-coefficient formula and by the path-count formula.
std::pair<Int, Int> p1_two_ways(const CdPoly& psi, const PathStats& stats, int l);

// Ballot reconstruction restricted to top-degree cd-words: the dual
// g-polynomial.
IntPoly g_dual(const CdPoly& psi, int l);

struct ScanRecord {
  std::string u, v;
  int l = 0;
  Int cd_min;            // smallest cd-coefficient (0 for empty index)
  std::vector<Int> a;    // a-vector
  Int a_min;
  bool chaininject_ok = false;
  bool p1_check_ok = false;
  bool nonneg_cd() const { return cd_min >= 0; }
  bool nonneg_a() const { return a_min >= 0; }
};

ScanRecord scan_interval(KlContext& ctx, const Element& u, const Element& v,
                         ReflectionOrdering ord);

}  // namespace bcd
