#pragma once

#include <string>
#include <unordered_map>

#include "bcd/coxeter.hpp"
#include "bcd/poly.hpp"

namespace bcd {

struct InternalInconsistency : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// R-, Rtilde- and Kazhdan-Lusztig polynomials by the defining recursions,
// memoized per context.  A context is single-threaded; workers each own one
// and results are identical across contexts.
class KlContext {
 public:
  const IntPoly& r_polynomial(const Element& u, const Element& v);
  // Unique Rtilde with R_{u,v}(q) = q^{l/2} Rtilde(q^{1/2} - q^{-1/2});
  // computed by exact triangular solve, residual checked.
  const IntPoly& r_tilde(const Element& u, const Element& v);
  const IntPoly& kl_polynomial(const Element& u, const Element& v);

 private:
  static std::string key(const Element& u, const Element& v);
  std::unordered_map<std::string, IntPoly> r_cache_;
  std::unordered_map<std::string, IntPoly> rt_cache_;
  std::unordered_map<std::string, IntPoly> p_cache_;
  IntPoly r_impl(const Element& u, const Element& v);
  IntPoly p_impl(const Element& u, const Element& v);
};

}  // namespace bcd
