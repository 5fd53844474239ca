#pragma once

#include <map>

#include "bcd/composition.hpp"

namespace bcd {

enum class Basis { M, L };

// Finitely supported integer vector over compositions, tagged with its
// basis.  Conversions always return a fresh vector; mixed-basis arithmetic
// is rejected.
struct QSymVec {
  Basis basis = Basis::M;
  std::map<Composition, Int> coeff;

  Int at(const Composition& a) const;
  void add(const Composition& a, const Int& k);
  void trim();
  bool operator==(const QSymVec& o) const;
  QSymVec plus(const QSymVec& o) const;
  QSymVec scaled(const Int& k) const;
  // Homogeneous component of degree n.
  QSymVec component(int n) const;
};

// L_b = sum of M_a over refinements a of b, extended linearly.
QSymVec l_to_m(const QSymVec& v);
// Moebius inverse of the above.
QSymVec m_to_l(const QSymVec& v);

// Peak function of a cd-word, in the L basis (degree deg(w)+1).
QSymVec theta_in_L(const CdWord& w);
// Same function expanded in the M basis with powers of 2.
QSymVec theta_in_M(const CdWord& w);

}  // namespace bcd
