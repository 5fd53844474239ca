#include "bcd/qsymvec.hpp"

#include <stdexcept>

namespace bcd {

Int QSymVec::at(const Composition& a) const {
  auto it = coeff.find(a);
  return it == coeff.end() ? Int(0) : it->second;
}

void QSymVec::add(const Composition& a, const Int& k) {
  if (k == 0) return;
  auto [it, inserted] = coeff.try_emplace(a, k);
  if (!inserted) {
    it->second += k;
    if (it->second == 0) coeff.erase(it);
  }
}

void QSymVec::trim() {
  for (auto it = coeff.begin(); it != coeff.end();)
    it = (it->second == 0) ? coeff.erase(it) : std::next(it);
}

bool QSymVec::operator==(const QSymVec& o) const {
  return basis == o.basis && coeff == o.coeff;
}

QSymVec QSymVec::plus(const QSymVec& o) const {
  if (basis != o.basis) throw std::invalid_argument("basis mismatch");
  QSymVec r = *this;
  for (const auto& [a, k] : o.coeff) r.add(a, k);
  return r;
}

QSymVec QSymVec::scaled(const Int& k) const {
  QSymVec r{basis, {}};
  if (k == 0) return r;
  for (const auto& [a, c] : coeff) r.coeff[a] = c * k;
  return r;
}

QSymVec QSymVec::component(int n) const {
  QSymVec r{basis, {}};
  for (const auto& [a, c] : coeff)
    if (comp_size(a) == n) r.coeff[a] = c;
  return r;
}

QSymVec l_to_m(const QSymVec& v) {
  if (v.basis != Basis::L) throw std::invalid_argument("expected L basis");
  QSymVec r{Basis::M, {}};
  for (const auto& [b, k] : v.coeff)
    for (const auto& a : refinements(b)) r.add(a, k);
  return r;
}

QSymVec m_to_l(const QSymVec& v) {
  if (v.basis != Basis::M) throw std::invalid_argument("expected M basis");
  QSymVec r{Basis::L, {}};
  for (const auto& [b, k] : v.coeff)
    for (const auto& a : refinements(b)) {
      // M_b = sum over refinements a of b of (-1)^{l(a)-l(b)} L_a
      Int sign = ((a.size() - b.size()) % 2 == 0) ? 1 : -1;
      r.add(a, sign * k);
    }
  r.trim();
  return r;
}

namespace {

// The 2-element position sets {m_j - 1, m_j} marked by the d's of w.
std::vector<std::pair<int, int>> d_marks(const CdWord& w) {
  std::vector<std::pair<int, int>> marks;
  int deg = 0;
  for (char ch : w) {
    deg += (ch == 'd') ? 2 : 1;
    if (ch == 'd') marks.emplace_back(deg - 1, deg);
  }
  return marks;
}

bool meets_all(unsigned mask, const std::vector<std::pair<int, int>>& marks) {
  for (auto [a, b] : marks)
    if (!(mask & (1u << (a - 1))) && !(mask & (1u << (b - 1)))) return false;
  return true;
}

Subset mask_to_subset(unsigned mask, int n) {
  Subset s;
  for (int i = 1; i <= n; ++i)
    if (mask & (1u << (i - 1))) s.push_back(i);
  return s;
}

}  // namespace

QSymVec theta_in_L(const CdWord& w) {
  int n = cd_degree(w);
  auto marks = d_marks(w);
  QSymVec r{Basis::L, {}};
  unsigned full = (n >= 32) ? 0u : ((1u << n) - 1u);
  for (unsigned mask = 0; mask <= full; ++mask) {
    if (!meets_all(mask, marks) || !meets_all(full & ~mask, marks)) continue;
    r.add(subset_to_composition(mask_to_subset(mask, n), n + 1), 1);
    if (full == 0) break;
  }
  return r;
}

QSymVec theta_in_M(const CdWord& w) {
  int n = cd_degree(w);
  int nd = cd_dcount(w);
  auto marks = d_marks(w);
  QSymVec r{Basis::M, {}};
  unsigned full = (n >= 32) ? 0u : ((1u << n) - 1u);
  for (unsigned mask = 0; mask <= full; ++mask) {
    if (!meets_all(mask, marks)) continue;
    int popcount = __builtin_popcount(mask);
    r.add(subset_to_composition(mask_to_subset(mask, n), n + 1), pow2(popcount - nd));
    if (full == 0) break;
  }
  return r;
}

}  // namespace bcd
