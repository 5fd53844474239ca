#include "bcd/brupaths.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace bcd {

int IntervalGraph::index_of(const Element& x) const {
  auto it = std::lower_bound(elems.begin(), elems.end(), x, canonical_less);
  if (it == elems.end() || !(*it == x)) return -1;
  return static_cast<int>(it - elems.begin());
}

IntervalGraph bruhat_graph(const Element& u, const Element& v) {
  IntervalGraph g;
  g.elems = interval_elements(u, v);
  g.up.resize(g.elems.size());
  std::vector<int> deg;
  for (const auto& win : u.windows()) deg.push_back(static_cast<int>(win.size()));
  CoxeterSystem sys(deg);
  auto refls = reflections(sys);
  std::vector<Element> refl_elems;
  refl_elems.reserve(refls.size());
  for (const auto& t : refls) refl_elems.push_back(reflection_element(sys, t));
  for (size_t xi = 0; xi < g.elems.size(); ++xi) {
    const Element& x = g.elems[xi];
    int lx = x.length();
    for (size_t ti = 0; ti < refls.size(); ++ti) {
      Element y = refl_elems[ti] * x;  // yx^{-1} = t
      if (y.length() <= lx) continue;
      int yi = g.index_of(y);
      if (yi >= 0) g.up[xi].emplace_back(yi, refls[ti]);
    }
  }
  return g;
}

std::vector<Reflection> BruhatPath::labels() const {
  std::vector<Reflection> ls;
  for (size_t i = 0; i + 1 < verts.size(); ++i) {
    auto t = edge_label(verts[i], verts[i + 1]);
    assert(t.has_value());
    ls.push_back(*t);
  }
  return ls;
}

Composition descent_composition(const BruhatPath& p, ReflectionOrdering ord) {
  auto ls = p.labels();
  int r = static_cast<int>(ls.size());
  Subset d;
  for (int i = 1; i < r; ++i)
    if (compare_reflections(ls[i - 1], ls[i], ord) > 0) d.push_back(i);
  return subset_to_composition(d, r);
}

Int PathStats::b_at(const Composition& a) const {
  auto it = b.find(a);
  return it == b.end() ? Int(0) : it->second;
}

Int PathStats::total_paths() const {
  Int t = 0;
  for (const auto& [a, k] : b) t += k;
  return t;
}

Int PathStats::paths_of_length(int k) const {
  Int t = 0;
  for (const auto& [a, c] : b)
    if (comp_size(a) == k) t += c;
  return t;
}

namespace {

struct PathDfs {
  const IntervalGraph* g;
  ReflectionOrdering ord;
  int target;
  PathStats* stats;
  std::vector<Reflection> labels;
  Subset descents;

  void run(int x) {
    if (x == target && !labels.empty()) {
      int r = static_cast<int>(labels.size());
      ++(*stats).b[subset_to_composition(descents, r)];
    }
    for (const auto& [y, t] : g->up[x]) {
      bool desc = !labels.empty() && compare_reflections(labels.back(), t, ord) > 0;
      if (desc) descents.push_back(static_cast<int>(labels.size()));
      labels.push_back(t);
      run(y);
      labels.pop_back();
      if (desc) descents.pop_back();
    }
  }
};

}  // namespace

PathStats b_stats(const Element& u, const Element& v, ReflectionOrdering ord) {
  PathStats stats;
  if (u == v) return stats;
  IntervalGraph g = bruhat_graph(u, v);
  PathDfs dfs{&g, ord, g.index_of(v), &stats, {}, {}};
  dfs.run(g.index_of(u));
  return stats;
}

Int c_from_b(const PathStats& stats, const Composition& a) {
  Subset s = composition_to_subset(a);
  int n = comp_size(a);
  Int total = 0;
  unsigned m = static_cast<unsigned>(s.size());
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    Subset t;
    for (unsigned i = 0; i < m; ++i)
      if (mask & (1u << i)) t.push_back(s[i]);
    total += stats.b_at(subset_to_composition(t, n));
  }
  return total;
}

namespace {

struct BoundedDfs {
  const IntervalGraph* g;
  ReflectionOrdering ord;
  int target;
  int k;
  const Subset* allowed;  // descent positions allowed (sorted)
  Int count = 0;
  std::vector<Reflection> labels;

  void run(int x) {
    int depth = static_cast<int>(labels.size());
    if (depth == k) {
      if (x == target) ++count;
      return;
    }
    for (const auto& [y, t] : g->up[x]) {
      if (depth > 0 && compare_reflections(labels.back(), t, ord) > 0 &&
          !std::binary_search(allowed->begin(), allowed->end(), depth))
        continue;
      labels.push_back(t);
      run(y);
      labels.pop_back();
    }
  }
};

}  // namespace

Int c_by_paths(const Element& u, const Element& v, const Composition& a, ReflectionOrdering ord) {
  if (u == v) return a.empty() ? Int(1) : Int(0);
  if (a.empty()) return 0;
  IntervalGraph g = bruhat_graph(u, v);
  Subset allowed = composition_to_subset(a);
  BoundedDfs dfs{&g, ord, g.index_of(v), comp_size(a), &allowed};
  dfs.run(g.index_of(u));
  return dfs.count;
}

std::vector<std::map<Composition, Int>> chain_c_from(KlContext& ctx,
                                                     const std::vector<Element>& elems) {
  int m = static_cast<int>(elems.size());
  // cvec[i] holds the map alpha -> c_alpha(elems[i], back()); elements are
  // in increasing canonical order so we fill from the top down.
  std::vector<std::map<Composition, Int>> cvec(m);
  cvec[m - 1][{}] = 1;
  for (int i = m - 2; i >= 0; --i) {
    for (int j = i + 1; j < m; ++j) {
      if (!bruhat_leq(elems[i], elems[j])) continue;
      const IntPoly& rt = ctx.r_tilde(elems[i], elems[j]);
      for (int a1 = 1; a1 <= rt.degree(); ++a1) {
        Int coeff = rt.coeff(a1);
        if (coeff == 0) continue;
        for (const auto& [tail, ct] : cvec[j]) {
          Composition a{a1};
          a.insert(a.end(), tail.begin(), tail.end());
          cvec[i][a] += coeff * ct;
        }
      }
    }
  }
  return cvec;
}

std::vector<std::map<Composition, Int>> chain_c_to(KlContext& ctx,
                                                   const std::vector<Element>& elems) {
  int m = static_cast<int>(elems.size());
  std::vector<std::map<Composition, Int>> cvec(m);
  cvec[0][{}] = 1;
  for (int j = 1; j < m; ++j) {
    for (int i = 0; i < j; ++i) {
      if (cvec[i].empty() || !bruhat_leq(elems[i], elems[j])) continue;
      const IntPoly& rt = ctx.r_tilde(elems[i], elems[j]);
      for (int ar = 1; ar <= rt.degree(); ++ar) {
        Int coeff = rt.coeff(ar);
        if (coeff == 0) continue;
        for (const auto& [head, ct] : cvec[i]) {
          Composition a = head;
          a.push_back(ar);
          cvec[j][a] += coeff * ct;
        }
      }
    }
  }
  return cvec;
}

QSymVec f_tilde_via_chains(KlContext& ctx, const Element& u, const Element& v) {
  auto elems = interval_elements(u, v);
  auto cvec = chain_c_from(ctx, elems);
  QSymVec r{Basis::M, {}};
  for (auto& [a, c] : cvec[0])
    if (c != 0) r.coeff[a] = std::move(c);
  if (u == v) r.coeff[{}] = 1;
  return r;
}

Int c_via_chains(KlContext& ctx, const Element& u, const Element& v, const Composition& a) {
  return f_tilde_via_chains(ctx, u, v).at(a);
}

std::vector<BruhatPath> length2_paths(const Element& u, const Element& v,
                                      ReflectionOrdering ord) {
  std::vector<BruhatPath> paths;
  for (const auto& x : interval_elements(u, v)) {
    if (x == u || x == v) continue;
    if (edge_label(u, x) && edge_label(x, v)) paths.push_back(BruhatPath{{u, x, v}});
  }
  std::sort(paths.begin(), paths.end(), [&](const BruhatPath& p, const BruhatPath& q) {
    auto lp = p.labels(), lq = q.labels();
    int c0 = compare_reflections(lp[0], lq[0], ord);
    if (c0 != 0) return c0 < 0;
    return compare_reflections(lp[1], lq[1], ord) < 0;
  });
  return paths;
}

BruhatPath flip2(const BruhatPath& p, ReflectionOrdering ord) {
  assert(p.verts.size() == 3);
  const Element& u = p.verts.front();
  const Element& v = p.verts.back();
  auto paths = length2_paths(u, v, ord);
  std::vector<BruhatPath> asc, desc;
  int self_rank = -1;
  bool self_desc = false;
  for (const auto& q : paths) {
    auto ls = q.labels();
    bool is_desc = compare_reflections(ls[0], ls[1], ord) > 0;
    auto& bucket = is_desc ? desc : asc;
    if (q.verts[1] == p.verts[1]) {
      self_rank = static_cast<int>(bucket.size());
      self_desc = is_desc;
    }
    bucket.push_back(q);
  }
  if (asc.size() != desc.size())
    throw InternalInconsistency("uneven descent split in B_2(" + u.text() + "," + v.text() +
                                ")");
  assert(self_rank >= 0);
  return self_desc ? asc[self_rank] : desc[self_rank];
}

BruhatPath flip_at(const BruhatPath& p, int i, ReflectionOrdering ord) {
  assert(i >= 1 && i + 1 < static_cast<int>(p.verts.size()));
  BruhatPath sub{{p.verts[i - 1], p.verts[i], p.verts[i + 1]}};
  BruhatPath flipped = flip2(sub, ord);
  BruhatPath r = p;
  r.verts[i] = flipped.verts[1];
  return r;
}

BruhatPath phi_injection(const BruhatPath& p, const Subset& s, ReflectionOrdering ord) {
  if (!composition_to_subset(descent_composition(p, ord)).empty())
    throw std::invalid_argument("phi requires an increasing path");
  BruhatPath r = p;
  for (int pos : s) r = flip_at(r, pos, ord);
  return r;
}

namespace {

struct IncreasingDfs {
  const IntervalGraph* g;
  ReflectionOrdering ord;
  int target;
  int k;
  std::vector<BruhatPath>* out;
  std::vector<int> verts;
  std::vector<Reflection> labels;

  void run(int x) {
    int depth = static_cast<int>(labels.size());
    if (depth == k) {
      if (x == target) {
        BruhatPath p;
        for (int vi : verts) p.verts.push_back(g->elems[vi]);
        out->push_back(std::move(p));
      }
      return;
    }
    for (const auto& [y, t] : g->up[x]) {
      if (depth > 0 && compare_reflections(labels.back(), t, ord) > 0) continue;
      labels.push_back(t);
      verts.push_back(y);
      run(y);
      verts.pop_back();
      labels.pop_back();
    }
  }
};

}  // namespace

std::vector<BruhatPath> increasing_paths(const Element& u, const Element& v, int k,
                                         ReflectionOrdering ord) {
  std::vector<BruhatPath> out;
  if (u == v || k <= 0) return out;
  IntervalGraph g = bruhat_graph(u, v);
  IncreasingDfs dfs{&g, ord, g.index_of(v), k, &out, {g.index_of(u)}, {}};
  dfs.run(g.index_of(u));
  return out;
}

}  // namespace bcd
