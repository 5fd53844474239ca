#include "bcd/suites.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace bcd {

std::vector<std::pair<Element, Element>> comparable_pairs(const CoxeterSystem& sys,
                                                          bool strict) {
  auto elems = all_elements(sys);
  std::vector<std::pair<Element, Element>> pairs;
  for (const auto& u : elems)
    for (const auto& v : elems) {
      if (strict && u == v) continue;
      if (bruhat_leq(u, v)) pairs.emplace_back(u, v);
    }
  return pairs;
}

std::vector<std::pair<Element, Element>> sample_pairs(const CoxeterSystem& sys, int count,
                                                      unsigned long long seed) {
  std::mt19937_64 gen(seed);
  auto random_element = [&]() {
    std::vector<std::vector<int>> w;
    for (int n : sys.degrees()) {
      std::vector<int> win(n);
      for (int i = 0; i < n; ++i) win[i] = i + 1;
      for (int i = n - 1; i > 0; --i) {
        int j = static_cast<int>(gen() % static_cast<unsigned long long>(i + 1));
        std::swap(win[i], win[j]);
      }
      w.push_back(std::move(win));
    }
    return Element(std::move(w));
  };
  std::vector<std::pair<Element, Element>> pairs;
  std::set<std::pair<std::string, std::string>> seen;
  while (static_cast<int>(pairs.size()) < count) {
    Element a = random_element(), b = random_element();
    if (a == b) continue;
    if (bruhat_leq(b, a)) std::swap(a, b);
    if (!bruhat_leq(a, b)) continue;
    if (!seen.emplace(a.text(), b.text()).second) continue;
    pairs.emplace_back(std::move(a), std::move(b));
  }
  std::sort(pairs.begin(), pairs.end(),
            [](const auto& p, const auto& q) {
              if (canonical_less(p.first, q.first)) return true;
              if (canonical_less(q.first, p.first)) return false;
              return canonical_less(p.second, q.second);
            });
  return pairs;
}

namespace {

std::string ival(const Element& u, const Element& v) {
  return "[" + u.text() + "," + v.text() + "]";
}

struct Recorder {
  SuiteReport* report;
  const SuiteOptions* opt;
  void fail(const std::string& what, const Element& u, const Element& v) {
    if (report->failures.size() < opt->max_failures)
      report->failures.push_back(what + " on " + ival(u, v));
    else if (report->failures.size() == opt->max_failures)
      report->failures.push_back("(more failures suppressed)");
  }
  bool full() const { return report->failures.size() > opt->max_failures; }
};

// descent set T as an ab-monomial of length k-1 with b at the positions of T
std::string path_monomial(const Composition& a) {
  int k = comp_size(a);
  std::string m(k - 1, 'a');
  for (int pos : composition_to_subset(a)) m[pos - 1] = 'b';
  return m;
}

void check_interval(KlContext& ctx, const Element& u, const Element& v,
                    const SuiteOptions& opt, Recorder& rec) {
  int l = v.length() - u.length();
  if (u == v) {
    if (!(ctx.r_tilde(u, v) == IntPoly::one())) rec.fail("trivial Rtilde", u, v);
    if (!(ctx.kl_polynomial(u, v) == IntPoly::one())) rec.fail("trivial P", u, v);
    if (!complete_cd_index(u, v, opt.ord).empty()) rec.fail("trivial cd-index", u, v);
    return;
  }

  const IntPoly& r = ctx.r_polynomial(u, v);
  const IntPoly& rt = ctx.r_tilde(u, v);
  const IntPoly& p = ctx.kl_polynomial(u, v);

  // (a) Rtilde substitution: t^l Rtilde(t - 1/t) = R(t^2)
  {
    HalfLaurent tm = HalfLaurent::t_power(1) - HalfLaurent::t_power(-1);
    HalfLaurent acc, pw = HalfLaurent::t_power(l);
    for (int k = 0; k <= rt.degree(); ++k) {
      if (rt.coeff(k) != 0) acc = acc + pw.scaled(rt.coeff(k));
      pw = pw * tm;
    }
    if (!(acc == HalfLaurent::from_poly_q(r)))
      rec.fail("Rtilde substitution into R", u, v);
  }

  auto elems = interval_elements(u, v);

  // (b) KL functional equation: q^l P(1/q) = sum_z R_{u,z} P_{z,v}
  {
    IntPoly rhs;
    for (const auto& z : elems) rhs = rhs + ctx.r_polynomial(u, z) * ctx.kl_polynomial(z, v);
    if (!(p.reversed(l) == rhs)) rec.fail("KL functional equation", u, v);
    if (2 * p.degree() >= l && l > 0) rec.fail("KL degree bound", u, v);
  }

  PathStats stats = b_stats(u, v, opt.ord);

  // (k) reflection-ordering independence
  {
    auto other = opt.ord == ReflectionOrdering::lex ? ReflectionOrdering::revlex
                                                    : ReflectionOrdering::lex;
    if (!(b_stats(u, v, other).b == stats.b))
      rec.fail("reflection-ordering independence of path statistics", u, v);
  }

  CdPoly psi = complete_cd_index_from_stats(stats, l);

  // (f) peak-function reconstruction, both bases
  {
    QSymVec recon_l{Basis::L, {}}, recon_m{Basis::M, {}};
    for (const auto& [w, c] : psi) {
      recon_l = recon_l.plus(theta_in_L(w).scaled(c));
      recon_m = recon_m.plus(theta_in_M(w).scaled(c));
    }
    QSymVec ft = f_tilde_from_stats(stats);
    if (!(recon_l == ft)) rec.fail("peak expansion of the path function (L basis)", u, v);
    if (!(recon_m == l_to_m(ft)))
      rec.fail("peak expansion of the path function (M basis)", u, v);
  }

  // (e) sparse-b extraction vs k-vector extraction
  for (int n = l - 1; n >= 0; n -= 2) {
    auto kvec = k_vector(stats, n);
    for (const auto& w : cd_words_of_degree(n)) {
      auto it = psi.find(w);
      Int direct = it == psi.end() ? Int(0) : it->second;
      if (cd_from_k(w, kvec) != direct) {
        rec.fail("sparse-b vs k-vector cd extraction", u, v);
        break;
      }
    }
  }

  // parity support of the cd-index
  for (const auto& [w, c] : psi)
    if ((l - 1 - cd_degree(w)) % 2 != 0 && c != 0)
      rec.fail("cd-index degree parity", u, v);

  // (g) coefficient sums vs path counts
  for (int n = l - 1; n >= 0; n -= 2) {
    auto [s1, s2] = sum_identities(stats, psi, n);
    if (!s1 || !s2) rec.fail("cd coefficient sums vs path counts", u, v);
  }

  // (h) Rtilde from the cd-index
  if (!(r_tilde_from_cd(psi) == rt)) rec.fail("Rtilde from cd-index", u, v);

  // (i) ab-expansion equals the path-weight multiset
  {
    std::map<std::string, Int> expected;
    for (const auto& [a, k] : stats.b) expected[path_monomial(a)] += k;
    if (ab_expansion(psi) != expected) rec.fail("ab-expansion vs path weights", u, v);
  }

  // (d) ballot reconstruction of P
  if (!(kl_from_cd(psi, l) == p)) rec.fail("ballot reconstruction of P from cd-index", u, v);

  // p1 coefficient, two closed forms
  if (l >= 2) {
    auto [p1a, p1b] = p1_two_ways(psi, stats, l);
    if (p1a != p.coeff(1) || p1b != p.coeff(1))
      rec.fail("linear KL coefficient closed forms", u, v);
  }

  // (c) four-route antisymmetric part
  try {
    antisymmetric_part(ctx, u, v, opt.ord);
  } catch (const InternalInconsistency& e) {
    rec.fail(std::string("antisymmetric part: ") + e.what(), u, v);
  }

  // (j) chain formula vs path statistics, (l) concatenation identity
  {
    auto from_v = chain_c_from(ctx, elems);
    auto to_u = chain_c_to(ctx, elems);
    QSymVec chain_m{Basis::M, {}};
    for (const auto& [a, c] : from_v[0]) chain_m.add(a, c);
    if (!(chain_m == l_to_m(f_tilde_from_stats(stats))))
      rec.fail("chain formula vs path statistics", u, v);

    int bound = std::min(opt.concat_bound, l);
    bool concat_ok = true;
    for (int total = 2; total <= bound && concat_ok; ++total) {
      for (const auto& whole : compositions_of(total)) {
        for (size_t cut = 1; cut < whole.size() && concat_ok; ++cut) {
          Composition a(whole.begin(), whole.begin() + cut);
          Composition b(whole.begin() + cut, whole.end());
          Int rhs = 0;
          for (size_t i = 0; i < elems.size(); ++i) {
            auto ita = to_u[i].find(a);
            if (ita == to_u[i].end()) continue;
            auto itb = from_v[i].find(b);
            if (itb == from_v[i].end()) continue;
            rhs += ita->second * itb->second;
          }
          if (c_from_b(stats, whole) != rhs) {
            rec.fail("path-count concatenation", u, v);
            concat_ok = false;
          }
        }
      }
    }
  }

  // (m) top-degree part vs the flag-vector route
  {
    CdPoly top;
    for (const auto& [w, c] : psi)
      if (cd_degree(w) == l - 1) top[w] = c;
    if (!(ordinary_cd_index(u, v) == top))
      rec.fail("top-degree cd-index vs flag-vector cd-index", u, v);
  }
}

}  // namespace

SuiteReport identity_suite(KlContext& ctx,
                           const std::vector<std::pair<Element, Element>>& pairs,
                           const SuiteOptions& opt) {
  SuiteReport report;
  Recorder rec{&report, &opt};
  for (const auto& [u, v] : pairs) {
    if (rec.full()) break;
    ++report.intervals;
    check_interval(ctx, u, v, opt, rec);
  }
  return report;
}

namespace {

std::string path_key(const BruhatPath& p) {
  std::string k;
  for (const auto& x : p.verts) k += x.text() + ";";
  return k;
}

void check_flips(KlContext& ctx, const Element& u, const Element& v,
                 const SuiteOptions& opt, Recorder& rec) {
  int l = v.length() - u.length();
  if (l <= 0) return;

  if (l == 2) {
    auto paths = length2_paths(u, v, opt.ord);
    Int m = ctx.r_tilde(u, v).coeff(2);
    if (Int(static_cast<long>(paths.size())) != 2 * m)
      rec.fail("length-2 path count vs Rtilde", u, v);
    for (const auto& p : paths) {
      BruhatPath f = flip2(p, opt.ord);
      if (!(flip2(f, opt.ord).verts == p.verts)) rec.fail("flip involution", u, v);
      auto dp = descent_composition(p, opt.ord);
      if (composition_to_subset(dp).empty()) {
        auto lp = p.labels(), lf = f.labels();
        if (!(compare_reflections(lp[0], lf[0], opt.ord) < 0 &&
              compare_reflections(lf[1], lp[1], opt.ord) < 0))
          rec.fail("flip label inequalities", u, v);
      }
    }
  }

  PathStats stats = b_stats(u, v, opt.ord);
  const IntPoly& rt = ctx.r_tilde(u, v);
  for (int k = 1; k <= l; ++k) {
    if ((l - k) % 2 != 0) continue;
    if (pow2(k - 1) * rt.coeff(k) > stats.paths_of_length(k))
      rec.fail("increasing-path doubling bound", u, v);
    if (k > opt.phi_length_cap) continue;
    auto inc = increasing_paths(u, v, k, opt.ord);
    if (Int(static_cast<long>(inc.size())) != rt.coeff(k))
      rec.fail("increasing path count vs Rtilde", u, v);
    std::set<std::string> seen;
    for (const auto& p : inc) {
      unsigned subsets = 1u << (k - 1);
      for (unsigned mask = 0; mask < subsets; ++mask) {
        Subset s;
        for (int i = 1; i < k; ++i)
          if (mask & (1u << (i - 1))) s.push_back(i);
        BruhatPath img = phi_injection(p, s, opt.ord);
        if (!seen.insert(path_key(img)).second) {
          rec.fail("flip-sequence injectivity", u, v);
          mask = subsets;
        }
      }
    }
  }
}

}  // namespace

SuiteReport flip_suite(KlContext& ctx,
                       const std::vector<std::pair<Element, Element>>& pairs,
                       const SuiteOptions& opt) {
  SuiteReport report;
  Recorder rec{&report, &opt};
  for (const auto& [u, v] : pairs) {
    if (rec.full()) break;
    if (u == v) continue;
    ++report.intervals;
    check_flips(ctx, u, v, opt, rec);
  }
  return report;
}

std::map<Composition, Int> quasi_shuffle(const Composition& a, const Composition& b) {
  std::map<Composition, Int> out;
  if (a.empty() || b.empty()) {
    out[a.empty() ? b : a] = 1;
    return out;
  }
  Composition ta(a.begin() + 1, a.end());
  Composition tb(b.begin() + 1, b.end());
  auto prepend = [&out](int head, const std::map<Composition, Int>& tails, const Int& k) {
    for (const auto& [t, c] : tails) {
      Composition w{head};
      w.insert(w.end(), t.begin(), t.end());
      out[w] += c * k;
    }
  };
  prepend(a[0], quasi_shuffle(ta, b), 1);
  prepend(b[0], quasi_shuffle(a, tb), 1);
  prepend(a[0] + b[0], quasi_shuffle(ta, tb), 1);
  return out;
}

SuiteReport product_suite(KlContext& ctx, const CoxeterSystem& sys,
                          const SuiteOptions& opt) {
  SuiteReport report;
  Recorder rec{&report, &opt};
  if (sys.factors() < 2) {
    report.failures.push_back("product suite needs at least two factors");
    return report;
  }
  auto split = [&](const Element& x) {
    std::vector<Element> parts;
    for (const auto& win : x.windows()) parts.push_back(Element({win}));
    return parts;
  };
  for (const auto& [u, v] : comparable_pairs(sys, false)) {
    if (rec.full()) break;
    ++report.intervals;
    auto us = split(u), vs = split(v);
    IntPoly r_prod = IntPoly::one(), p_prod = IntPoly::one();
    std::map<Composition, Int> c_prod{{{}, 1}};
    for (int f = 0; f < sys.factors(); ++f) {
      r_prod = r_prod * ctx.r_polynomial(us[f], vs[f]);
      p_prod = p_prod * ctx.kl_polynomial(us[f], vs[f]);
      auto factor_c = l_to_m(f_tilde(us[f], vs[f], opt.ord)).coeff;
      std::map<Composition, Int> next;
      for (const auto& [a, ka] : c_prod)
        for (const auto& [b, kb] : factor_c)
          for (const auto& [w, mult] : quasi_shuffle(a, b)) next[w] += ka * kb * mult;
      c_prod = std::move(next);
    }
    if (!(ctx.r_polynomial(u, v) == r_prod)) rec.fail("R multiplicativity", u, v);
    if (!(ctx.kl_polynomial(u, v) == p_prod)) rec.fail("P multiplicativity", u, v);
    auto whole_c = l_to_m(f_tilde(u, v, opt.ord)).coeff;
    for (auto it = c_prod.begin(); it != c_prod.end();)
      it = (it->second == 0) ? c_prod.erase(it) : std::next(it);
    if (whole_c != c_prod) rec.fail("path-expansion multiplicativity", u, v);
  }
  return report;
}

}  // namespace bcd
