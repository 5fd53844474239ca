#include "bcd/poly.hpp"

#include <cassert>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace bcd {

IntPoly::IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { normalize(); }

void IntPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::monomial(int deg, Int coeff) {
  IntPoly p;
  if (coeff != 0) {
    p.c_.assign(deg + 1, 0);
    p.c_[deg] = std::move(coeff);
  }
  return p;
}

Int IntPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[i];
}

void IntPoly::set_coeff(int i, Int value) {
  assert(i >= 0);
  if (i >= static_cast<int>(c_.size())) {
    if (value == 0) return;
    c_.resize(i + 1, 0);
  }
  c_[i] = std::move(value);
  normalize();
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  IntPoly r;
  r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < r.c_.size(); ++i) {
    if (i < c_.size()) r.c_[i] += c_[i];
    if (i < o.c_.size()) r.c_[i] += o.c_[i];
  }
  r.normalize();
  return r;
}

IntPoly IntPoly::operator-(const IntPoly& o) const { return *this + (-o); }

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
  if (is_zero() || o.is_zero()) return zero();
  IntPoly r;
  r.c_.assign(c_.size() + o.c_.size() - 1, 0);
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
  r.normalize();
  return r;
}

IntPoly IntPoly::scaled(const Int& k) const {
  IntPoly r = *this;
  for (auto& x : r.c_) x *= k;
  r.normalize();
  return r;
}

IntPoly IntPoly::reversed(int n) const {
  assert(n >= degree());
  IntPoly r;
  if (is_zero()) return r;
  r.c_.assign(n + 1, 0);
  for (size_t i = 0; i < c_.size(); ++i) r.c_[n - i] = c_[i];
  r.normalize();
  return r;
}

IntPoly IntPoly::truncated(int maxdeg) const {
  IntPoly r;
  if (maxdeg < 0) return r;
  r.c_.assign(c_.begin(), c_.begin() + std::min<size_t>(c_.size(), maxdeg + 1));
  r.normalize();
  return r;
}

IntPoly IntPoly::at_neg_q() const {
  IntPoly r = *this;
  for (size_t i = 1; i < r.c_.size(); i += 2) r.c_[i] = -r.c_[i];
  return r;
}

Int IntPoly::eval(const Int& x) const {
  Int r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

namespace {

void append_term(std::ostringstream& out, const Int& coeff, int exp, const char* var,
                 bool first) {
  Int a = coeff;
  if (first) {
    if (a < 0) {
      out << '-';
      a = -a;
    }
  } else {
    out << (a < 0 ? '-' : '+');
    if (a < 0) a = -a;
  }
  if (a != 1 || exp == 0) out << a.str();
  if (exp != 0) {
    out << var;
    if (exp != 1) out << '^' << exp;
  }
}

}  // namespace

std::string IntPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    if (c_[i] == 0) continue;
    append_term(out, c_[i], i, "q", first);
    first = false;
  }
  return out.str();
}

IntPoly IntPoly::parse(const std::string& s) {
  IntPoly p;
  size_t i = 0;
  auto fail = [&]() { throw std::invalid_argument("bad polynomial: " + s); };
  if (s.empty()) fail();
  if (s == "0") return p;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      if (s[i] == '-') sign = -1;
      ++i;
    } else if (i > 0) {
      fail();
    }
    Int coeff = 1;
    bool saw_digits = false;
    std::string digits;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) digits += s[i++];
    if (!digits.empty()) {
      coeff = Int(digits);
      saw_digits = true;
    }
    int exp = 0;
    if (i < s.size() && s[i] == 'q') {
      ++i;
      exp = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::string e;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) e += s[i++];
        if (e.empty()) fail();
        exp = std::stoi(e);
      }
    } else if (!saw_digits) {
      fail();
    }
    p.set_coeff(exp, p.coeff(exp) + sign * coeff);
  }
  return p;
}

// ---- HalfLaurent ----

void HalfLaurent::trim() {
  for (auto it = c_.begin(); it != c_.end();)
    it = (it->second == 0) ? c_.erase(it) : std::next(it);
}

HalfLaurent HalfLaurent::t_power(int e, Int coeff) {
  HalfLaurent h;
  if (coeff != 0) h.c_[e] = std::move(coeff);
  return h;
}

HalfLaurent HalfLaurent::from_poly_q(const IntPoly& p) {
  HalfLaurent h;
  for (int i = 0; i <= p.degree(); ++i)
    if (p.coeff(i) != 0) h.c_[2 * i] = p.coeff(i);
  return h;
}

HalfLaurent HalfLaurent::from_poly_neg_q(const IntPoly& p, int shift) {
  HalfLaurent h;
  for (int i = 0; i <= p.degree(); ++i) {
    Int a = p.coeff(i);
    if (i % 2) a = -a;
    if (a != 0) h.c_[2 * i + shift] = a;
  }
  return h;
}

HalfLaurent HalfLaurent::from_poly_inv_q(const IntPoly& p, int shift) {
  HalfLaurent h;
  for (int i = 0; i <= p.degree(); ++i)
    if (p.coeff(i) != 0) h.c_[-2 * i + shift] = p.coeff(i);
  return h;
}

Int HalfLaurent::coeff(int e) const {
  auto it = c_.find(e);
  return it == c_.end() ? Int(0) : it->second;
}

int HalfLaurent::min_exp() const {
  assert(!c_.empty());
  return c_.begin()->first;
}

int HalfLaurent::max_exp() const {
  assert(!c_.empty());
  return c_.rbegin()->first;
}

HalfLaurent HalfLaurent::operator+(const HalfLaurent& o) const {
  HalfLaurent r = *this;
  for (const auto& [e, a] : o.c_) r.c_[e] += a;
  r.trim();
  return r;
}

HalfLaurent HalfLaurent::operator-(const HalfLaurent& o) const {
  HalfLaurent r = *this;
  for (const auto& [e, a] : o.c_) r.c_[e] -= a;
  r.trim();
  return r;
}

HalfLaurent HalfLaurent::operator*(const HalfLaurent& o) const {
  HalfLaurent r;
  for (const auto& [e1, a1] : c_)
    for (const auto& [e2, a2] : o.c_) r.c_[e1 + e2] += a1 * a2;
  r.trim();
  return r;
}

HalfLaurent HalfLaurent::scaled(const Int& k) const {
  HalfLaurent r;
  if (k == 0) return r;
  for (const auto& [e, a] : c_) r.c_[e] = a * k;
  return r;
}

HalfLaurent HalfLaurent::shifted(int e) const {
  HalfLaurent r;
  for (const auto& [e1, a] : c_) r.c_[e1 + e] = a;
  return r;
}

IntPoly HalfLaurent::to_poly_q() const {
  IntPoly p;
  for (const auto& [e, a] : c_) {
    if (e < 0 || e % 2 != 0)
      throw std::domain_error("HalfLaurent has odd or negative t-exponents");
    p.set_coeff(e / 2, a);
  }
  return p;
}

std::string HalfLaurent::str() const {
  if (c_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    append_term(out, it->second, it->first, "t", first);
    first = false;
  }
  return out.str();
}

}  // namespace bcd
