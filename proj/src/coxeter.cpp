#include "bcd/coxeter.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>

namespace bcd {

CoxeterSystem::CoxeterSystem(std::vector<int> degrees) : deg_(std::move(degrees)) {
  if (deg_.empty()) throw std::invalid_argument("empty system");
  for (int n : deg_)
    if (n < 1) throw std::invalid_argument("factor degree must be >= 1");
}

CoxeterSystem CoxeterSystem::parse(const std::string& name) {
  std::vector<int> deg;
  if (!name.empty() && name.back() == 'x') throw ParseError("bad group name: " + name);
  std::stringstream ss(name);
  std::string part;
  while (std::getline(ss, part, 'x')) {
    if (part.size() < 2 || part[0] != 'S') throw ParseError("bad group name: " + name);
    try {
      size_t pos = 0;
      int n = std::stoi(part.substr(1), &pos);
      if (pos + 1 != part.size() || n < 1) throw ParseError("bad group name: " + name);
      deg.push_back(n);
    } catch (const std::logic_error&) {
      throw ParseError("bad group name: " + name);
    }
  }
  if (deg.empty()) throw ParseError("bad group name: " + name);
  return CoxeterSystem(std::move(deg));
}

int CoxeterSystem::generator_count() const {
  int g = 0;
  for (int n : deg_) g += n - 1;
  return g;
}

std::string CoxeterSystem::name() const {
  std::ostringstream out;
  for (size_t i = 0; i < deg_.size(); ++i) {
    if (i) out << 'x';
    out << 'S' << deg_[i];
  }
  return out.str();
}

Element::Element(std::vector<std::vector<int>> windows) : w_(std::move(windows)) {
  for (const auto& win : w_) {
    std::vector<char> seen(win.size() + 1, 0);
    for (int x : win) {
      if (x < 1 || x > static_cast<int>(win.size()) || seen[x])
        throw std::invalid_argument("window is not a permutation");
      seen[x] = 1;
    }
  }
}

Element Element::identity(const CoxeterSystem& sys) {
  std::vector<std::vector<int>> w;
  for (int n : sys.degrees()) {
    std::vector<int> win(n);
    std::iota(win.begin(), win.end(), 1);
    w.push_back(std::move(win));
  }
  return Element(std::move(w));
}

Element Element::parse(const CoxeterSystem& sys, const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, '|')) parts.push_back(part);
  if (static_cast<int>(parts.size()) != sys.factors())
    throw ParseError("expected " + std::to_string(sys.factors()) + " factor(s): " + text);
  std::vector<std::vector<int>> w;
  for (int f = 0; f < sys.factors(); ++f) {
    int n = sys.degrees()[f];
    std::vector<int> win;
    const std::string& p = parts[f];
    if (p.find(',') != std::string::npos) {
      std::stringstream fs(p);
      std::string tok;
      while (std::getline(fs, tok, ',')) {
        try {
          win.push_back(std::stoi(tok));
        } catch (const std::logic_error&) {
          throw ParseError("bad element: " + text);
        }
      }
    } else {
      for (char ch : p) {
        if (ch < '1' || ch > '9') throw ParseError("bad element: " + text);
        win.push_back(ch - '0');
      }
    }
    if (static_cast<int>(win.size()) != n) throw ParseError("bad element: " + text);
    w.push_back(std::move(win));
  }
  try {
    return Element(std::move(w));
  } catch (const std::invalid_argument&) {
    throw ParseError("bad element: " + text);
  }
}

std::string Element::text() const {
  std::ostringstream out;
  for (size_t f = 0; f < w_.size(); ++f) {
    if (f) out << '|';
    if (w_[f].size() <= 9) {
      for (int x : w_[f]) out << x;
    } else {
      for (size_t i = 0; i < w_[f].size(); ++i) {
        if (i) out << ',';
        out << w_[f][i];
      }
    }
  }
  return out.str();
}

int Element::length() const {
  int inv = 0;
  for (const auto& win : w_)
    for (size_t i = 0; i < win.size(); ++i)
      for (size_t j = i + 1; j < win.size(); ++j)
        if (win[i] > win[j]) ++inv;
  return inv;
}

std::vector<std::pair<int, int>> Element::right_descents() const {
  std::vector<std::pair<int, int>> d;
  for (size_t f = 0; f < w_.size(); ++f)
    for (size_t i = 0; i + 1 < w_[f].size(); ++i)
      if (w_[f][i] > w_[f][i + 1]) d.emplace_back(static_cast<int>(f), static_cast<int>(i + 1));
  return d;
}

bool Element::has_right_descent(int factor, int pos) const {
  return w_[factor][pos - 1] > w_[factor][pos];
}

Element Element::right_mult_simple(int factor, int pos) const {
  Element r = *this;
  std::swap(r.w_[factor][pos - 1], r.w_[factor][pos]);
  return r;
}

Element Element::inverse() const {
  Element r = *this;
  for (size_t f = 0; f < w_.size(); ++f)
    for (size_t i = 0; i < w_[f].size(); ++i) r.w_[f][w_[f][i] - 1] = static_cast<int>(i + 1);
  return r;
}

Element Element::operator*(const Element& y) const {
  if (w_.size() != y.w_.size()) throw std::invalid_argument("system mismatch");
  Element r = y;
  for (size_t f = 0; f < w_.size(); ++f) {
    if (w_[f].size() != y.w_[f].size()) throw std::invalid_argument("system mismatch");
    for (size_t i = 0; i < w_[f].size(); ++i) r.w_[f][i] = w_[f][y.w_[f][i] - 1];
  }
  return r;
}

ReflectionOrdering parse_ordering(const std::string& s) {
  if (s == "lex") return ReflectionOrdering::lex;
  if (s == "revlex") return ReflectionOrdering::revlex;
  throw ParseError("bad ordering: " + s);
}

int compare_reflections(const Reflection& a, const Reflection& b, ReflectionOrdering ord) {
  int base = a == b ? 0 : (a < b ? -1 : 1);
  return ord == ReflectionOrdering::lex ? base : -base;
}

std::vector<Reflection> reflections(const CoxeterSystem& sys) {
  std::vector<Reflection> t;
  for (int f = 0; f < sys.factors(); ++f)
    for (int i = 1; i <= sys.degrees()[f]; ++i)
      for (int j = i + 1; j <= sys.degrees()[f]; ++j) t.push_back({f, i, j});
  return t;
}

Element reflection_element(const CoxeterSystem& sys, const Reflection& t) {
  Element e = Element::identity(sys);
  auto w = e.windows();
  std::swap(w[t.factor][t.i - 1], w[t.factor][t.j - 1]);
  return Element(std::move(w));
}

std::optional<Reflection> edge_label(const Element& x, const Element& y) {
  if (x.length() >= y.length()) return std::nullopt;
  Element t = y * x.inverse();
  Reflection r;
  bool found = false;
  const auto& w = t.windows();
  for (size_t f = 0; f < w.size(); ++f) {
    int moved_i = 0, moved_j = 0;
    for (size_t i = 0; i < w[f].size(); ++i) {
      if (w[f][i] != static_cast<int>(i + 1)) {
        if (!moved_i)
          moved_i = static_cast<int>(i + 1);
        else if (!moved_j)
          moved_j = static_cast<int>(i + 1);
        else
          return std::nullopt;  // more than two displaced letters
      }
    }
    if (moved_i) {
      if (found) return std::nullopt;  // nontrivial in two factors
      if (!moved_j || w[f][moved_i - 1] != moved_j || w[f][moved_j - 1] != moved_i)
        return std::nullopt;
      r = {static_cast<int>(f), moved_i, moved_j};
      found = true;
    }
  }
  if (!found) return std::nullopt;
  return r;
}

namespace {

// Ehresmann dominance on one window: x <= y iff for every prefix length p
// and rank r, |{i <= p : x(i) >= r}| <= same for y.  Equivalent sorted-prefix
// form below.
bool window_leq(const std::vector<int>& x, const std::vector<int>& y) {
  size_t n = x.size();
  std::vector<int> xs, ys;
  xs.reserve(n);
  ys.reserve(n);
  for (size_t p = 0; p + 1 < n; ++p) {
    xs.insert(std::upper_bound(xs.begin(), xs.end(), x[p]), x[p]);
    ys.insert(std::upper_bound(ys.begin(), ys.end(), y[p]), y[p]);
    for (size_t i = 0; i <= p; ++i)
      if (xs[i] > ys[i]) return false;
  }
  return true;
}

}  // namespace

bool bruhat_leq(const Element& x, const Element& y) {
  if (x.factors() != y.factors()) throw std::invalid_argument("system mismatch");
  for (int f = 0; f < x.factors(); ++f)
    if (!window_leq(x.windows()[f], y.windows()[f])) return false;
  return true;
}

bool canonical_less(const Element& a, const Element& b) {
  int la = a.length(), lb = b.length();
  if (la != lb) return la < lb;
  return a.windows() < b.windows();
}

std::vector<Element> all_elements(const CoxeterSystem& sys) {
  std::vector<std::vector<std::vector<int>>> factor_perms;
  for (int n : sys.degrees()) {
    std::vector<int> win(n);
    std::iota(win.begin(), win.end(), 1);
    std::vector<std::vector<int>> perms;
    do {
      perms.push_back(win);
    } while (std::next_permutation(win.begin(), win.end()));
    factor_perms.push_back(std::move(perms));
  }
  std::vector<Element> out;
  std::vector<size_t> idx(factor_perms.size(), 0);
  while (true) {
    std::vector<std::vector<int>> w;
    for (size_t f = 0; f < idx.size(); ++f) w.push_back(factor_perms[f][idx[f]]);
    out.emplace_back(std::move(w));
    size_t f = idx.size();
    while (f > 0) {
      --f;
      if (++idx[f] < factor_perms[f].size()) break;
      idx[f] = 0;
      if (f == 0) {
        std::sort(out.begin(), out.end(), canonical_less);
        return out;
      }
    }
  }
}

std::vector<Element> interval_elements(const Element& u, const Element& v) {
  if (!bruhat_leq(u, v)) throw NotComparable(u.text() + " is not below " + v.text());
  std::vector<int> deg;
  for (const auto& win : u.windows()) deg.push_back(static_cast<int>(win.size()));
  CoxeterSystem sys(deg);
  int lu = u.length(), lv = v.length();
  std::vector<Element> out;
  for (const auto& x : all_elements(sys)) {
    int lx = x.length();
    if (lx < lu || lx > lv) continue;
    if (bruhat_leq(u, x) && bruhat_leq(x, v)) out.push_back(x);
  }
  return out;  // all_elements is already canonically sorted
}

}  // namespace bcd
