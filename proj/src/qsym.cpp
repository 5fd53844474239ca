#include "bcd/qsym.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <sstream>

namespace bcd {

namespace {

using Rat = boost::multiprecision::cpp_rational;

std::string cd_word_pretty(const CdWord& w) {
  if (w.empty()) return "1";
  std::ostringstream out;
  size_t i = 0;
  while (i < w.size()) {
    size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    out << w[i];
    if (j - i > 1) out << '^' << (j - i);
    i = j;
  }
  return out.str();
}

}  // namespace

std::string cd_str(const CdPoly& p) {
  if (p.empty()) return "0";
  // Descending degree; within a degree fewer d's first, then descending lex.
  std::vector<std::pair<CdWord, Int>> terms(p.begin(), p.end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    int da = cd_degree(a.first), db = cd_degree(b.first);
    if (da != db) return da > db;
    int na = cd_dcount(a.first), nb = cd_dcount(b.first);
    if (na != nb) return na < nb;
    return a.first > b.first;
  });
  std::ostringstream out;
  bool first = true;
  for (auto it = terms.begin(); it != terms.end(); ++it) {
    const Int& k = it->second;
    if (k == 0) continue;
    if (k > 0 && !first) out << '+';
    if (k == -1)
      out << '-';
    else if (k != 1)
      out << k;
    out << cd_word_pretty(it->first);
    first = false;
  }
  if (first) return "0";
  return out.str();
}

QSymVec f_tilde_from_stats(const PathStats& stats) {
  QSymVec r{Basis::L, {}};
  for (const auto& [a, k] : stats.b) r.add(a, k);
  return r;
}

QSymVec f_tilde(const Element& u, const Element& v, ReflectionOrdering ord) {
  if (u == v) {
    QSymVec r{Basis::L, {}};
    r.coeff[{}] = 1;
    return r;
  }
  return f_tilde_from_stats(b_stats(u, v, ord));
}

std::map<Subset, Int> b_subset_table(const PathStats& stats, int n) {
  std::map<Subset, Int> table;
  unsigned full = (1u << n) - 1u;
  for (unsigned mask = 0;; ++mask) {
    Subset s;
    for (int i = 1; i <= n; ++i)
      if (mask & (1u << (i - 1))) s.push_back(i);
    table[s] = stats.b_at(subset_to_composition(s, n + 1));
    if (mask == full) break;
  }
  return table;
}

namespace {

// Blocks of w in the tail-last convention w = c^{n_1} d ... c^{n_k} d c^{n_0}
// with the index windows A_j = [m_{j-1}, m_j - 2], m_0 = 1, m_j = m_{j-1} +
// n_j + 2.
struct TailWindows {
  int k = 0;
  std::vector<int> lo, hi;  // A_j = [lo[j], hi[j]], j in [0, k)
};

TailWindows tail_windows(const CdWord& w) {
  TailWindows tw;
  auto blocks = cd_blocks(w);
  tw.k = static_cast<int>(blocks.size()) - 1;
  int m = 1;
  for (int j = 0; j < tw.k; ++j) {
    tw.lo.push_back(m);
    m += blocks[j] + 2;
    tw.hi.push_back(m - 2);
  }
  return tw;
}

void sparse_b_sum(const TailWindows& tw, int j, int sign, Subset& s,
                  const std::map<Subset, Int>& table, Int& acc) {
  if (j == tw.k) {
    auto it = table.find(s);
    if (it != table.end()) acc += sign * it->second;
    return;
  }
  int width = tw.hi[j] - tw.lo[j] + 1;
  // A window of even width must contribute exactly one element, an odd one
  // may also contribute none.
  if (width % 2 == 1) sparse_b_sum(tw, j + 1, sign, s, table, acc);
  int m_j = tw.hi[j] + 2;
  for (int i = tw.lo[j]; i <= tw.hi[j]; ++i) {
    // each chosen element contributes (-1)^{m_j - i} and flips the
    // (-1)^{k-|S|} prefactor once
    int step = ((m_j - i) % 2 == 0) ? -sign : sign;
    s.push_back(i);
    sparse_b_sum(tw, j + 1, step, s, table, acc);
    s.pop_back();
  }
}

}  // namespace

Int cd_coeff_from_b(const CdWord& w, const std::map<Subset, Int>& b_table) {
  TailWindows tw = tail_windows(w);
  Int acc = 0;
  Subset s;
  // Global sign (-1)^{k - |S|} is folded in by starting at (-1)^k and
  // flipping once per window left empty... equivalently flip per element.
  int sign = (tw.k % 2 == 0) ? 1 : -1;
  sparse_b_sum(tw, 0, sign, s, b_table, acc);
  return acc;
}

std::map<Subset, Int> k_vector(const PathStats& stats, int n) {
  auto b_table = b_subset_table(stats, n);
  std::map<Subset, Int> kvec;
  for (const auto& [s, unused] : b_table) {
    bool sparse = true;
    for (size_t i = 0; i < s.size(); ++i) {
      if (s[i] == n || (i + 1 < s.size() && s[i + 1] == s[i] + 1)) {
        sparse = false;
        break;
      }
    }
    if (!sparse) continue;
    Int k = 0;
    unsigned m = static_cast<unsigned>(s.size());
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
      Subset t;
      for (unsigned i = 0; i < m; ++i)
        if (mask & (1u << i)) t.push_back(s[i]);
      int sign = ((m - __builtin_popcount(mask)) % 2 == 0) ? 1 : -1;
      k += sign * b_table.at(t);
    }
    kvec[s] = k;
  }
  return kvec;
}

namespace {

void k_window_sum(const TailWindows& tw, int j, int sign, Subset& s,
                  const std::map<Subset, Int>& kvec, Int& acc) {
  if (j == tw.k) {
    acc += sign * kvec.at(s);
    return;
  }
  int m_j = tw.hi[j] + 2;
  for (int i = tw.lo[j]; i <= tw.hi[j]; ++i) {
    int step = ((m_j - i) % 2 == 0) ? sign : -sign;
    s.push_back(i);
    k_window_sum(tw, j + 1, step, s, kvec, acc);
    s.pop_back();
  }
}

}  // namespace

Int cd_from_k(const CdWord& w, const std::map<Subset, Int>& kvec) {
  TailWindows tw = tail_windows(w);
  Int acc = 0;
  Subset s;
  k_window_sum(tw, 0, 1, s, kvec, acc);
  return acc;
}

CdPoly complete_cd_index_from_stats(const PathStats& stats, int l) {
  CdPoly psi;
  for (int n = l - 1; n >= 0; n -= 2) {
    auto table = b_subset_table(stats, n);
    for (const auto& w : cd_words_of_degree(n)) {
      Int c = cd_coeff_from_b(w, table);
      if (c != 0) psi[w] = c;
    }
  }
  return psi;
}

CdPoly complete_cd_index(const Element& u, const Element& v, ReflectionOrdering ord) {
  if (u == v) return {};
  PathStats stats = b_stats(u, v, ord);
  int l = v.length() - u.length();
  CdPoly psi = complete_cd_index_from_stats(stats, l);
  QSymVec recon{Basis::L, {}};
  for (const auto& [w, c] : psi) recon = recon.plus(theta_in_L(w).scaled(c));
  if (!(recon == f_tilde_from_stats(stats)))
    throw InternalInconsistency("cd-index does not reproduce the path expansion on [" +
                                u.text() + "," + v.text() + "]");
  return psi;
}

namespace {

// Exact linear solve; rows >= cols, unique solution expected.
std::vector<Rat> solve_exact(std::vector<std::vector<Rat>> a, std::vector<Rat> rhs) {
  size_t rows = a.size();
  size_t cols = rows ? a[0].size() : 0;
  size_t rank = 0;
  std::vector<size_t> pivot_row(cols);
  for (size_t c = 0; c < cols; ++c) {
    size_t p = rank;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) throw InternalInconsistency("singular system in cd extraction");
    std::swap(a[p], a[rank]);
    std::swap(rhs[p], rhs[rank]);
    Rat inv = a[rank][c];
    for (size_t j = c; j < cols; ++j) a[rank][j] /= inv;
    rhs[rank] /= inv;
    for (size_t r = 0; r < rows; ++r) {
      if (r == rank || a[r][c] == 0) continue;
      Rat f = a[r][c];
      for (size_t j = c; j < cols; ++j) a[r][j] -= f * a[rank][j];
      rhs[r] -= f * rhs[rank];
    }
    pivot_row[c] = rank;
    ++rank;
  }
  for (size_t r = rank; r < rows; ++r)
    if (rhs[r] != 0) throw InternalInconsistency("inconsistent system in cd extraction");
  std::vector<Rat> x(cols);
  for (size_t c = 0; c < cols; ++c) x[c] = rhs[pivot_row[c]];
  return x;
}

Int rat_to_int(const Rat& r) {
  if (boost::multiprecision::denominator(r) != 1)
    throw InternalInconsistency("non-integer cd coefficient");
  return boost::multiprecision::numerator(r);
}

}  // namespace

CdPoly cd_from_l_solve(const QSymVec& l_component, int n) {
  if (l_component.basis != Basis::L) throw std::invalid_argument("expected L basis");
  auto words = cd_words_of_degree(n);
  auto comps = compositions_of(n + 1);
  std::vector<std::vector<Rat>> a(comps.size(), std::vector<Rat>(words.size()));
  std::vector<Rat> rhs(comps.size());
  std::vector<QSymVec> thetas;
  for (const auto& w : words) thetas.push_back(theta_in_L(w));
  for (size_t r = 0; r < comps.size(); ++r) {
    for (size_t c = 0; c < words.size(); ++c) a[r][c] = Rat(thetas[c].at(comps[r]));
    rhs[r] = Rat(l_component.at(comps[r]));
  }
  auto x = solve_exact(std::move(a), std::move(rhs));
  CdPoly out;
  for (size_t c = 0; c < words.size(); ++c) {
    Int v = rat_to_int(x[c]);
    if (v != 0) out[words[c]] = v;
  }
  return out;
}

namespace {

std::map<std::string, Int> expand_word(const CdWord& w) {
  std::map<std::string, Int> cur;
  cur[""] = 1;
  for (char ch : w) {
    std::map<std::string, Int> next;
    for (const auto& [m, k] : cur) {
      if (ch == 'c') {
        next[m + "a"] += k;
        next[m + "b"] += k;
      } else {
        next[m + "ab"] += k;
        next[m + "ba"] += k;
      }
    }
    cur = std::move(next);
  }
  return cur;
}

}  // namespace

std::map<std::string, Int> ab_expansion(const CdPoly& psi) {
  std::map<std::string, Int> out;
  for (const auto& [w, c] : psi) {
    if (c == 0) continue;
    for (const auto& [m, k] : expand_word(w)) {
      out[m] += c * k;
      if (out[m] == 0) out.erase(m);
    }
  }
  return out;
}

IntPoly r_tilde_from_cd(const CdPoly& psi) {
  IntPoly p;
  for (const auto& [w, c] : psi) {
    if (w.find('d') != std::string::npos) continue;
    p.set_coeff(static_cast<int>(w.size()) + 1, p.coeff(static_cast<int>(w.size()) + 1) + c);
  }
  return p;
}

std::pair<bool, bool> sum_identities(const PathStats& stats, const CdPoly& psi, int n) {
  Int weighted = 0, plain = 0;
  for (const auto& [w, c] : psi) {
    if (cd_degree(w) != n) continue;
    weighted += pow2(n - cd_dcount(w)) * c;
    plain += c;
  }
  bool first = weighted == stats.paths_of_length(n + 1);
  Subset odd;
  for (int i = 1; i <= n; i += 2) odd.push_back(i);
  bool second = plain == stats.b_at(subset_to_composition(odd, n + 1));
  return {first, second};
}

CdPoly ordinary_cd_index(const Element& u, const Element& v) {
  if (!bruhat_leq(u, v) || u == v)
    throw std::invalid_argument("ordinary cd-index needs u < v");
  int l = v.length() - u.length();
  if (l == 1) return {{"", 1}};

  // Flag f-vector: chains u = x_0 < ... < x_r = v keyed by the composition
  // of rank jumps.
  auto elems = interval_elements(u, v);
  int m = static_cast<int>(elems.size());
  std::vector<std::map<Composition, Int>> fvec(m);
  fvec[m - 1][{}] = 1;
  for (int i = m - 2; i >= 0; --i) {
    int li = elems[i].length();
    for (int j = i + 1; j < m; ++j) {
      if (fvec[j].empty() || !bruhat_leq(elems[i], elems[j])) continue;
      int jump = elems[j].length() - li;
      for (const auto& [tail, k] : fvec[j]) {
        Composition a{jump};
        a.insert(a.end(), tail.begin(), tail.end());
        fvec[i][a] += k;
      }
    }
  }
  QSymVec flag_f{Basis::M, {}};
  for (const auto& [a, k] : fvec[0])
    if (comp_size(a) == l) flag_f.add(a, k);
  QSymVec flag_h = m_to_l(flag_f);

  // ab-index: word over {a,b} of length l-1, b at the subset positions.
  int nn = l - 1;
  std::map<std::string, Int> ab;
  for (const auto& [a, k] : flag_h.coeff) {
    Subset s = composition_to_subset(a);
    std::string word(nn, 'a');
    for (int pos : s) word[pos - 1] = 'b';
    ab[word] += k;
  }

  auto words = cd_words_of_degree(nn);
  std::vector<std::string> monomials;
  {
    std::string cur(nn, 'a');
    for (unsigned mask = 0; mask < (1u << nn); ++mask) {
      for (int i = 0; i < nn; ++i) cur[i] = (mask & (1u << i)) ? 'b' : 'a';
      monomials.push_back(cur);
    }
  }
  std::vector<std::vector<Rat>> mat(monomials.size(), std::vector<Rat>(words.size()));
  std::vector<Rat> rhs(monomials.size());
  for (size_t c = 0; c < words.size(); ++c) {
    auto exp = expand_word(words[c]);
    for (size_t r = 0; r < monomials.size(); ++r) {
      auto it = exp.find(monomials[r]);
      mat[r][c] = (it == exp.end()) ? Rat(0) : Rat(it->second);
    }
  }
  for (size_t r = 0; r < monomials.size(); ++r) {
    auto it = ab.find(monomials[r]);
    rhs[r] = (it == ab.end()) ? Rat(0) : Rat(it->second);
  }
  auto x = solve_exact(std::move(mat), std::move(rhs));
  CdPoly out;
  for (size_t c = 0; c < words.size(); ++c) {
    Int val = rat_to_int(x[c]);
    if (val != 0) out[words[c]] = val;
  }
  return out;
}

}  // namespace bcd
