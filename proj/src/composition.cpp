#include "bcd/composition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace bcd {

int comp_size(const Composition& a) { return std::accumulate(a.begin(), a.end(), 0); }

Composition comp_reversed(const Composition& a) {
  Composition r(a.rbegin(), a.rend());
  return r;
}

Composition subset_to_composition(const Subset& s, int n) {
  Composition a;
  int prev = 0;
  for (int x : s) {
    if (x <= prev || x >= n) throw std::out_of_range("subset element out of range");
    a.push_back(x - prev);
    prev = x;
  }
  if (n > 0) a.push_back(n - prev);
  return a;
}

Subset composition_to_subset(const Composition& a) {
  Subset s;
  int acc = 0;
  for (size_t i = 0; i + 1 < a.size(); ++i) {
    acc += a[i];
    s.push_back(acc);
  }
  return s;
}

bool refines(const Composition& a, const Composition& b) {
  if (comp_size(a) != comp_size(b)) return false;
  size_t i = 0;
  for (int part : b) {
    int acc = 0;
    while (acc < part && i < a.size()) acc += a[i++];
    if (acc != part) return false;
  }
  return i == a.size();
}

std::vector<Composition> compositions_of(int n) {
  std::vector<Composition> out;
  if (n == 0) {
    out.push_back({});
    return out;
  }
  for (int first = 1; first <= n; ++first)
    for (const auto& rest : compositions_of(n - first)) {
      Composition a{first};
      a.insert(a.end(), rest.begin(), rest.end());
      out.push_back(std::move(a));
    }
  return out;
}

std::vector<Composition> refinements(const Composition& b) {
  std::vector<Composition> out{{}};
  for (int part : b) {
    std::vector<Composition> next;
    for (const auto& split : compositions_of(part))
      for (const auto& head : out) {
        Composition a = head;
        a.insert(a.end(), split.begin(), split.end());
        next.push_back(std::move(a));
      }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string comp_str(const Composition& a) {
  std::ostringstream out;
  out << '(';
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) out << ',';
    out << a[i];
  }
  out << ')';
  return out.str();
}

int cd_degree(const CdWord& w) {
  int n = 0;
  for (char ch : w) n += (ch == 'd') ? 2 : 1;
  return n;
}

int cd_dcount(const CdWord& w) {
  return static_cast<int>(std::count(w.begin(), w.end(), 'd'));
}

int cd_head(const CdWord& w) {
  int h = 0;
  while (h < static_cast<int>(w.size()) && w[h] == 'c') ++h;
  return h;
}

std::vector<int> cd_blocks(const CdWord& w) {
  std::vector<int> blocks{0};
  for (char ch : w) {
    if (ch == 'c')
      ++blocks.back();
    else
      blocks.push_back(0);
  }
  return blocks;
}

std::vector<CdWord> cd_words_of_degree(int n) {
  std::vector<CdWord> out;
  if (n < 0) return out;
  if (n == 0) {
    out.push_back("");
    return out;
  }
  for (const auto& rest : cd_words_of_degree(n - 1)) out.push_back("c" + rest);
  if (n >= 2)
    for (const auto& rest : cd_words_of_degree(n - 2)) out.push_back("d" + rest);
  std::sort(out.begin(), out.end());
  return out;
}

bool CdLess::operator()(const CdWord& a, const CdWord& b) const {
  int da = cd_degree(a), db = cd_degree(b);
  if (da != db) return da < db;
  return a < b;
}

}  // namespace bcd
