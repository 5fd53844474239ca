#include "bcd/klcd.hpp"

#include <cassert>

namespace bcd {

Int catalan(int i) {
  if (i < 0) return 0;
  Int n = binomial(2L * i + 1, i);
  assert(n % (2 * i + 1) == 0);
  return n / (2 * i + 1);
}

Int catalan_half(int n) {
  if (n < 0 || n % 2 != 0) return 0;
  return catalan(n / 2);
}

IntPoly ballot(int k) {
  IntPoly b;
  for (int i = 0; 2 * i <= k; ++i) {
    Int num = binomial(k + 1, i) * (k + 1 - 2 * i);
    assert(num % (k + 1) == 0);
    b.set_coeff(i, num / (k + 1));
  }
  return b;
}

IntPoly psi_alpha(const Composition& a) {
  if (a.empty()) throw std::invalid_argument("psi of the empty composition");
  IntPoly qm1 = IntPoly::monomial(1) - IntPoly::one();
  IntPoly head = IntPoly::one();
  for (int j = 0; j < a[0]; ++j) head = head * qm1;
  if (a.size() == 1) return head;
  Composition tail(a.begin() + 1, a.end());
  IntPoly rec = psi_alpha(tail);
  return head * rec.truncated((comp_size(tail) - 1) / 2);
}

IntPoly upsilon(const Composition& b) {
  if (b.empty()) throw std::invalid_argument("upsilon of the empty composition");
  IntPoly u;
  for (const auto& a : refinements(b)) {
    IntPoly p = psi_alpha(a);
    u = (a.size() % 2 == 0) ? u + p : u - p;
  }
  return u;
}

IntPoly upsilon_lattice(const Composition& b) {
  if (b.empty()) throw std::invalid_argument("upsilon of the empty composition");
  int n = comp_size(b);
  Composition target = comp_reversed(b);
  IntPoly u;
  // walks of n +-1 steps from 0; N = interior positions at negative height
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    int h = 0, ups = 0;
    Subset neg;
    for (int i = 1; i <= n; ++i) {
      if (mask & (1u << (i - 1))) {
        ++h;
        ++ups;
      } else {
        --h;
      }
      if (i < n && h < 0) neg.push_back(i);
    }
    if (subset_to_composition(neg, n) != target) continue;
    Int sign = (ups % 2 == 0) ? 1 : -1;  // (-q)^{ups}
    u = u + IntPoly::monomial(ups, sign);
  }
  int outer = (n - static_cast<int>(b.size())) % 2;
  return outer == 0 ? u : -u;
}

HalfLaurent K_map(const QSymVec& v) {
  HalfLaurent out;
  for (const auto& [a, k] : v.coeff) {
    if (k == 0) continue;
    if (a.empty()) {
      out = out + HalfLaurent::t_power(0, k);
      continue;
    }
    IntPoly p;
    Int scale = k;
    if (v.basis == Basis::L) {
      p = upsilon(a);
    } else {
      p = psi_alpha(a);
      if (a.size() % 2 == 1) scale = -scale;
    }
    out = out + HalfLaurent::from_poly_q(p).shifted(-comp_size(a)).scaled(scale);
  }
  return out;
}

HalfLaurent xi_w(const CdWord& w) {
  auto blocks = cd_blocks(w);  // head first: n_0, n_1, ..., n_k
  int k = static_cast<int>(blocks.size()) - 1;
  int n0 = blocks[0];
  Int c = 1;
  for (int j = 1; j <= k; ++j) {
    if (blocks[j] % 2 != 0) return {};
    c *= catalan(blocks[j] / 2);
  }
  int deg = cd_degree(w);
  Int sign = ((k + (deg - n0) / 2) % 2 == 0) ? 1 : -1;
  IntPoly bneg = ballot(n0).at_neg_q();
  HalfLaurent term = HalfLaurent::from_poly_q(bneg).shifted(-(n0 + 1)) -
                     HalfLaurent::from_poly_inv_q(bneg, n0 + 1);
  return term.scaled(sign * c);
}

HalfLaurent antisym_from_p(const IntPoly& p, int l) {
  return HalfLaurent::from_poly_q(p).shifted(-l) - HalfLaurent::from_poly_inv_q(p, l);
}

HalfLaurent antisymmetric_part(KlContext& ctx, const Element& u, const Element& v,
                               ReflectionOrdering ord) {
  if (!bruhat_leq(u, v) || u == v)
    throw std::invalid_argument("antisymmetric part needs u < v");
  int l = v.length() - u.length();
  const IntPoly& p = ctx.kl_polynomial(u, v);
  HalfLaurent lhs = antisym_from_p(p, l);

  PathStats stats = b_stats(u, v, ord);
  CdPoly psi = complete_cd_index_from_stats(stats, l);
  HalfLaurent via_cd;
  for (const auto& [w, c] : psi) via_cd = via_cd + xi_w(w).scaled(c);
  if (!(lhs == via_cd))
    throw InternalInconsistency(
        "cd-coefficient expansion of the KL antisymmetric part fails on [" + u.text() +
        "," + v.text() + "]");

  HalfLaurent via_k = K_map(f_tilde_from_stats(stats));
  if (!(lhs == via_k))
    throw InternalInconsistency(
        "K-transform of the path expansion disagrees with the KL antisymmetric part on [" +
        u.text() + "," + v.text() + "]");

  IntPoly poly_lhs = p - p.reversed(l);
  IntPoly poly_rhs;
  for (const auto& [beta, bcoeff] : stats.b) {
    int shift = l - comp_size(beta);
    if (shift % 2 != 0)
      throw InternalInconsistency("path length of wrong parity on [" + u.text() + "," +
                                  v.text() + "]");
    poly_rhs = poly_rhs + (IntPoly::monomial(shift / 2) * upsilon(beta)).scaled(bcoeff);
  }
  if (!(poly_lhs == poly_rhs))
    throw InternalInconsistency(
        "weighted path-statistic sum disagrees with P - q^l P(1/q) on [" + u.text() + "," +
        v.text() + "]");
  return lhs;
}

std::vector<Int> a_vector(const CdPoly& psi, int l) {
  int n = l - 1;
  std::vector<Int> a(n / 2 + 1, Int(0));
  for (const auto& [w, coeff] : psi) {
    auto blocks = cd_blocks(w);
    int k = static_cast<int>(blocks.size()) - 1;
    Int c = 1;
    bool even = true;
    for (int j = 1; j <= k; ++j) {
      if (blocks[j] % 2 != 0) {
        even = false;
        break;
      }
      c *= catalan(blocks[j] / 2);
    }
    if (!even) continue;
    int h = blocks[0];
    int deg = cd_degree(w);
    assert((n - h) % 2 == 0);
    int i = (n - h) / 2;
    Int sign = ((cd_dcount(w) + (deg - h) / 2) % 2 == 0) ? 1 : -1;
    a[i] += sign * c * coeff;
  }
  return a;
}

IntPoly kl_from_cd(const CdPoly& psi, int l) {
  if (l == 0) return IntPoly::one();
  int n = l - 1;
  auto a = a_vector(psi, l);
  IntPoly p;
  for (int i = 0; i < static_cast<int>(a.size()); ++i)
    p = p + (IntPoly::monomial(i) * ballot(n - 2 * i).at_neg_q()).scaled(a[i]);
  return p;
}

IntPoly p_from_a(const std::vector<Int>& a, int n) {
  IntPoly p;
  for (int j = 0; 2 * j <= n; ++j) {
    Int pj = 0;
    for (int i = 0; i <= j && i < static_cast<int>(a.size()); ++i) {
      Int num = binomial(n + 1 - 2 * i, j - i) * (n + 1 - 2 * j);
      assert(num % (n + 1 - 2 * i) == 0);
      Int term = num / (n + 1 - 2 * i);
      Int contrib = term * a[i];
      pj += ((j - i) % 2 == 0) ? contrib : Int(-contrib);
    }
    p.set_coeff(j, pj);
  }
  return p;
}

std::vector<Int> a_from_p(const IntPoly& p, int n) {
  std::vector<Int> a(n / 2 + 1, Int(0));
  for (int j = 0; 2 * j <= n; ++j) {
    Int aj = 0;
    for (int i = 0; i <= j; ++i) aj += binomial(n - j - i, n - 2 * j) * p.coeff(i);
    a[j] = aj;
  }
  return a;
}

namespace {

Int cd_at(const CdPoly& psi, const CdWord& w) {
  auto it = psi.find(w);
  return it == psi.end() ? Int(0) : it->second;
}

}  // namespace

std::pair<Int, Int> p1_two_ways(const CdPoly& psi, const PathStats& stats, int l) {
  if (l < 2) throw std::invalid_argument("p1 needs l >= 2");
  int n = l - 1;
  Int first = 0;
  if (n >= 2) {
    CdWord cpow(n - 2, 'c');
    first = cd_at(psi, cpow + "d") + cd_at(psi, cpow) -
            Int(n - 1) * cd_at(psi, CdWord(n, 'c'));
  }
  Int second = c_from_b(stats, Composition{n, 1}) +
               (n >= 2 ? c_from_b(stats, Composition{n - 1}) : Int(0)) - Int(n + 1);
  return {first, second};
}

IntPoly g_dual(const CdPoly& psi, int l) {
  int n = l - 1;
  CdPoly top;
  for (const auto& [w, c] : psi)
    if (cd_degree(w) == n) top[w] = c;
  return kl_from_cd(top, l);
}

ScanRecord scan_interval(KlContext& ctx, const Element& u, const Element& v,
                         ReflectionOrdering ord) {
  ScanRecord rec;
  rec.u = u.text();
  rec.v = v.text();
  rec.l = v.length() - u.length();
  PathStats stats = b_stats(u, v, ord);
  CdPoly psi = complete_cd_index_from_stats(stats, rec.l);
  rec.cd_min = 0;
  bool first = true;
  for (const auto& [w, c] : psi) {
    if (first || c < rec.cd_min) rec.cd_min = c;
    first = false;
  }
  rec.a = a_vector(psi, rec.l);
  rec.a_min = rec.a.empty() ? Int(0) : rec.a[0];
  for (const Int& x : rec.a)
    if (x < rec.a_min) rec.a_min = x;

  const IntPoly& rt = ctx.r_tilde(u, v);
  rec.chaininject_ok = true;
  for (int k = 1; k <= rec.l; ++k) {
    if ((rec.l - k) % 2 != 0) continue;
    if (pow2(k - 1) * rt.coeff(k) > stats.paths_of_length(k)) {
      rec.chaininject_ok = false;
      break;
    }
  }
  if (rec.l >= 2) {
    auto [p1a, p1b] = p1_two_ways(psi, stats, rec.l);
    Int p1 = ctx.kl_polynomial(u, v).coeff(1);
    rec.p1_check_ok = (p1a == p1) && (p1b == p1);
  } else {
    rec.p1_check_ok = true;
  }
  return rec;
}

}  // namespace bcd
