#pragma once

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bcd {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotComparable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A symmetric group S_n or an ordered direct product of such, identified by
// the factor degrees: {4} is S4, {2,3} is S2xS3.
class CoxeterSystem {
 public:
  explicit CoxeterSystem(std::vector<int> degrees);
  static CoxeterSystem parse(const std::string& name);  // "S4", "S2xS3"

  const std::vector<int>& degrees() const { return deg_; }
  int factors() const { return static_cast<int>(deg_.size()); }
  int generator_count() const;
  std::string name() const;
  bool operator==(const CoxeterSystem& o) const { return deg_ == o.deg_; }

 private:
  std::vector<int> deg_;
};

// Group element in one-line notation, one window per factor.
class Element {
 public:
  Element() = default;
  explicit Element(std::vector<std::vector<int>> windows);

  static Element identity(const CoxeterSystem& sys);
  static Element parse(const CoxeterSystem& sys, const std::string& text);

  const std::vector<std::vector<int>>& windows() const { return w_; }
  int factors() const { return static_cast<int>(w_.size()); }
  std::string text() const;

  int length() const;  // inversion count, summed over factors
  // Right descents as (factor, position) pairs, position 1-based.
  std::vector<std::pair<int, int>> right_descents() const;
  bool has_right_descent(int factor, int pos) const;
  // Right multiplication by the simple generator s_{factor,pos}: swaps
  // window entries pos, pos+1.
  Element right_mult_simple(int factor, int pos) const;

  Element inverse() const;
  // (x*y)(i) = x(y(i)), per factor.
  Element operator*(const Element& y) const;
  bool operator==(const Element& o) const { return w_ == o.w_; }
  auto operator<=>(const Element& o) const { return w_ <=> o.w_; }

 private:
  std::vector<std::vector<int>> w_;
};

// The transposition (i,j), i < j, inside one factor.
struct Reflection {
  int factor = 0;
  int i = 0;
  int j = 0;
  bool operator==(const Reflection&) const = default;
  auto operator<=>(const Reflection&) const = default;
};

enum class ReflectionOrdering { lex, revlex };
ReflectionOrdering parse_ordering(const std::string& s);

// Total order on reflections: factor-major, then (i,j) lexicographic; the
// revlex mode is the exact reverse.  Returns <0, 0, >0.
int compare_reflections(const Reflection& a, const Reflection& b, ReflectionOrdering ord);

std::vector<Reflection> reflections(const CoxeterSystem& sys);
Element reflection_element(const CoxeterSystem& sys, const Reflection& t);

// yx^{-1} when it is a reflection and l(x) < l(y).
std::optional<Reflection> edge_label(const Element& x, const Element& y);

// Bruhat order via the sorted-prefix dominance criterion, componentwise for
// products.
bool bruhat_leq(const Element& x, const Element& y);

// All x with u <= x <= v, sorted by length then window-lexicographic.
// Throws NotComparable if u is not below v.
std::vector<Element> interval_elements(const Element& u, const Element& v);

// All elements of the group, in the same canonical order.
std::vector<Element> all_elements(const CoxeterSystem& sys);

// Canonical order used for enumeration output: length first, then windows.
bool canonical_less(const Element& a, const Element& b);

}  // namespace bcd
