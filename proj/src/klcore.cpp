#include "bcd/klcore.hpp"

namespace bcd {

std::string KlContext::key(const Element& u, const Element& v) {
  return u.text() + "/" + v.text();
}

const IntPoly& KlContext::r_polynomial(const Element& u, const Element& v) {
  std::string k = key(u, v);
  auto it = r_cache_.find(k);
  if (it != r_cache_.end()) return it->second;
  return r_cache_.emplace(std::move(k), r_impl(u, v)).first->second;
}

IntPoly KlContext::r_impl(const Element& u, const Element& v) {
  if (!bruhat_leq(u, v)) return IntPoly::zero();
  if (u == v) return IntPoly::one();
  // pivot: smallest right descent of v (factor-major)
  auto d = v.right_descents();
  auto [f, i] = d.front();
  Element vs = v.right_mult_simple(f, i);
  Element us = u.right_mult_simple(f, i);
  if (u.has_right_descent(f, i)) return r_polynomial(us, vs);
  IntPoly q = IntPoly::monomial(1);
  IntPoly qm1 = q - IntPoly::one();
  return q * r_polynomial(us, vs) + qm1 * r_polynomial(u, vs);
}

const IntPoly& KlContext::r_tilde(const Element& u, const Element& v) {
  std::string k = key(u, v);
  auto it = rt_cache_.find(k);
  if (it != rt_cache_.end()) return it->second;

  IntPoly rt;
  const IntPoly& r = r_polynomial(u, v);
  if (!r.is_zero()) {
    int l = v.length() - u.length();
    // Solve R(t^2) = t^l * Rtilde(t - 1/t) for Rtilde, top degree down.
    HalfLaurent residual = HalfLaurent::from_poly_q(r);
    HalfLaurent tm = HalfLaurent::t_power(1) - HalfLaurent::t_power(-1);
    for (int k2 = l; k2 >= 0; --k2) {
      HalfLaurent basis = HalfLaurent::t_power(l);
      for (int j = 0; j < k2; ++j) basis = basis * tm;
      Int ck = residual.is_zero() ? Int(0) : residual.coeff(l + k2);
      if (ck != 0) {
        rt.set_coeff(k2, ck);
        residual = residual - basis.scaled(ck);
      }
    }
    if (!residual.is_zero())
      throw InternalInconsistency("Rtilde substitution residual nonzero for [" + u.text() +
                                  "," + v.text() + "]");
  }
  return rt_cache_.emplace(std::move(k), std::move(rt)).first->second;
}

const IntPoly& KlContext::kl_polynomial(const Element& u, const Element& v) {
  std::string k = key(u, v);
  auto it = p_cache_.find(k);
  if (it != p_cache_.end()) return it->second;
  return p_cache_.emplace(std::move(k), p_impl(u, v)).first->second;
}

IntPoly KlContext::p_impl(const Element& u, const Element& v) {
  if (!bruhat_leq(u, v)) return IntPoly::zero();
  if (u == v) return IntPoly::one();
  int l = v.length() - u.length();
  // q^l P(1/q) = sum_{u <= z <= v} R_{u,z} P_{z,v}; with deg P < l/2 the
  // high coefficients of the right side determine P.
  IntPoly s;
  for (const auto& z : interval_elements(u, v)) {
    if (z == u) continue;
    s = s + r_polynomial(u, z) * kl_polynomial(z, v);
  }
  IntPoly p;
  for (int i = 0; 2 * i < l; ++i) p.set_coeff(i, s.coeff(l - i));
  return p;
}

}  // namespace bcd
