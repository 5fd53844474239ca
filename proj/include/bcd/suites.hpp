#pragma once

#include "bcd/klcd.hpp"

namespace bcd {

struct SuiteReport {
  int intervals = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

struct SuiteOptions {
  ReflectionOrdering ord = ReflectionOrdering::lex;
  // concatenation identity checked for |alpha beta| up to this bound
  int concat_bound = 6;
  // phi injectivity checked for path lengths up to this bound
  int phi_length_cap = 5;
  size_t max_failures = 20;
};

// All ordered pairs u <= v (u < v when strict) in canonical order.
std::vector<std::pair<Element, Element>> comparable_pairs(const CoxeterSystem& sys,
                                                          bool strict);
// Seeded sample of distinct comparable pairs u < v, deterministic.
std::vector<std::pair<Element, Element>> sample_pairs(const CoxeterSystem& sys, int count,
                                                      unsigned long long seed);

// Cross-checks of every computed quantity against its independent routes.
SuiteReport identity_suite(KlContext& ctx,
                           const std::vector<std::pair<Element, Element>>& pairs,
                           const SuiteOptions& opt);

// Flip pairing, its involution and label laws, and the injection bound.
SuiteReport flip_suite(KlContext& ctx,
                       const std::vector<std::pair<Element, Element>>& pairs,
                       const SuiteOptions& opt);

// Multiplicativity of R, P and the path expansion over direct products.
SuiteReport product_suite(KlContext& ctx, const CoxeterSystem& sys,
                          const SuiteOptions& opt);

// M-basis product expansion (overlapping shuffle) of two compositions.
std::map<Composition, Int> quasi_shuffle(const Composition& a, const Composition& b);

}  // namespace bcd
