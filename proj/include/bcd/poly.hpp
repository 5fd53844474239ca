#pragma once

#include <map>
#include <string>
#include <vector>

#include "bcd/bigint.hpp"

namespace bcd {

// Dense integer polynomial in q with arbitrary-precision coefficients.
// The zero polynomial has degree() == -1.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Int> coeffs);

  static IntPoly zero() { return IntPoly(); }
  static IntPoly one() { return monomial(0); }
  static IntPoly monomial(int deg, Int coeff = 1);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Int coeff(int i) const;
  void set_coeff(int i, Int value);

  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator*(const IntPoly& o) const;
  IntPoly operator-() const;
  IntPoly scaled(const Int& k) const;
  bool operator==(const IntPoly& o) const { return c_ == o.c_; }

  // q^n * p(1/q); requires n >= degree().
  IntPoly reversed(int n) const;
  // Keeps monomials of degree <= maxdeg (the truncation operator D_j with
  // maxdeg = floor(j)); negative maxdeg gives zero.
  IntPoly truncated(int maxdeg) const;
  // p(-q).
  IntPoly at_neg_q() const;
  Int eval(const Int& x) const;

  // Canonical text, descending exponents: "q^5+2q^3+q", "0", "q^2-q+1".
  std::string str() const;
  static IntPoly parse(const std::string& s);

 private:
  void normalize();
  std::vector<Int> c_;
};

// Exact Laurent polynomial in t where t^2 = q; carries half-integer powers
// of q as integer powers of t.
class HalfLaurent {
 public:
  HalfLaurent() = default;

  static HalfLaurent t_power(int e, Int coeff = 1);
  // p(q) with q = t^2.
  static HalfLaurent from_poly_q(const IntPoly& p);
  // p(-q) with q = t^2, multiplied by t^shift.
  static HalfLaurent from_poly_neg_q(const IntPoly& p, int shift = 0);
  // p(1/q) with q = t^2, multiplied by t^shift.
  static HalfLaurent from_poly_inv_q(const IntPoly& p, int shift = 0);

  bool is_zero() const { return c_.empty(); }
  Int coeff(int e) const;
  int min_exp() const;  // requires nonzero
  int max_exp() const;  // requires nonzero

  HalfLaurent operator+(const HalfLaurent& o) const;
  HalfLaurent operator-(const HalfLaurent& o) const;
  HalfLaurent operator*(const HalfLaurent& o) const;
  HalfLaurent scaled(const Int& k) const;
  HalfLaurent shifted(int e) const;  // times t^e
  bool operator==(const HalfLaurent& o) const { return c_ == o.c_; }

  // Back to a polynomial in q; requires all exponents even and nonnegative.
  IntPoly to_poly_q() const;

  std::string str() const;  // e.g. "t^3-2t^-1"

 private:
  std::map<int, Int> c_;
  void trim();
};

}  // namespace bcd
