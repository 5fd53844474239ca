// End-to-end acceptance checks.  Each criterion prints a single pass/fail
// line; the process exits nonzero if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "bcd/suites.hpp"

using namespace bcd;

namespace {

int failures = 0;

void criterion(int num, const std::string& name, double time_limit_s,
               const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  double secs = 0;
  try {
    auto t0 = std::chrono::steady_clock::now();
    ok = body(detail);
    secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (time_limit_s > 0 && secs > time_limit_s) {
      ok = false;
      detail += " [exceeded " + std::to_string(time_limit_s) + "s]";
    }
  } catch (const std::exception& e) {
    detail += std::string(" [exception: ") + e.what() + "]";
  }
  std::printf("criterion %d (%s): %s (%.2fs)%s\n", num, name.c_str(),
              ok ? "pass" : "FAIL", secs, detail.empty() ? "" : detail.c_str());
  if (!ok) ++failures;
}

Element el(const char* sys, const char* text) {
  return Element::parse(CoxeterSystem::parse(sys), text);
}

bool expect(bool cond, const char* what, std::string& detail) {
  if (!cond) detail += std::string(" [") + what + "]";
  return cond;
}

}  // namespace

int main() {
  KlContext ctx;
  SuiteOptions opt;
  auto s4_pairs = comparable_pairs(CoxeterSystem::parse("S4"), false);
  auto s5_pairs = sample_pairs(CoxeterSystem::parse("S5"), 200, 7);

  criterion(1, "reference interval in S4 reproduced exactly", 5.0, [&](std::string& d) {
    Element u = el("S4", "1234"), v = el("S4", "4231");
    PathStats st = b_stats(u, v, ReflectionOrdering::lex);
    bool ok = expect(st.total_paths() == 73, "73 paths", d);
    std::map<Composition, Int> table{
        {{5}, 1},          {{1, 1, 1, 1, 1}, 1}, {{1}, 1},          {{3}, 2},
        {{2, 1}, 2},       {{1, 2}, 2},          {{1, 1, 1}, 2},    {{1, 4}, 2},
        {{2, 1, 1, 1}, 2}, {{4, 1}, 3},          {{3, 1, 1}, 3},    {{1, 1, 3}, 3},
        {{1, 1, 1, 2}, 3}, {{2, 3}, 4},          {{1, 2, 1, 1}, 4}, {{3, 2}, 5},
        {{1, 1, 2, 1}, 5}, {{1, 3, 1}, 6},       {{2, 1, 2}, 6},    {{2, 2, 1}, 8},
        {{1, 2, 2}, 8}};
    ok &= expect(st.b == table, "b table", d);
    ok &= expect(cd_str(complete_cd_index_from_stats(st, 5)) ==
                     "c^4+dc^2+2cdc+2c^2d+2d^2+2c^2+1",
                 "cd-index", d);
    ok &= expect(ctx.r_tilde(u, v).str() == "q^5+2q^3+q", "Rtilde", d);
    ok &= expect(ctx.kl_polynomial(u, v).str() == "q+1", "P", d);
    return ok;
  });

  criterion(2, "length-5 pair with equal top parts, unequal cd-indices", 60.0,
            [&](std::string& d) {
    CdPoly p1 = complete_cd_index(el("S5", "12435"), el("S5", "53142"),
                                  ReflectionOrdering::lex);
    CdPoly p2 = complete_cd_index(el("S5", "31254"), el("S5", "53421"),
                                  ReflectionOrdering::lex);
    CdPoly e1{{"ccccc", 1}, {"cdcc", 6}, {"ccdc", 6}, {"dccc", 3}, {"cccd", 3},
              {"cdd", 7},   {"ddc", 7},  {"dcd", 6},  {"ccc", 1},  {"dc", 2},
              {"cd", 2}};
    CdPoly e2 = e1;
    e2["ccc"] = 2;
    e2["dc"] = 4;
    e2["cd"] = 4;
    bool ok = expect(p1 == e1, "first display", d);
    ok &= expect(p2 == e2, "second display", d);
    ok &= expect(ctx.kl_polynomial(el("S5", "12435"), el("S5", "53142")) ==
                     IntPoly::one(),
                 "P = 1", d);
    ok &= expect(ctx.kl_polynomial(el("S5", "31254"), el("S5", "53421")).str() == "q+1",
                 "P = q+1", d);
    auto top = [](const CdPoly& p, int deg) {
      CdPoly t;
      for (const auto& [w, c] : p)
        if (cd_degree(w) == deg) t[w] = c;
      return t;
    };
    ok &= expect(top(p1, 4) == top(p2, 4) && !(p1 == p2), "same top, different full", d);
    return ok;
  });

  criterion(3, "identity suite, all of S4 and a seeded S5 sample", 600.0,
            [&](std::string& d) {
    auto r1 = identity_suite(ctx, s4_pairs, opt);
    auto r2 = identity_suite(ctx, s5_pairs, opt);
    for (const auto& f : r1.failures) d += " [" + f + "]";
    for (const auto& f : r2.failures) d += " [" + f + "]";
    return r1.ok() && r2.ok();
  });

  criterion(4, "flip pairing and path-count bound suite", 0, [&](std::string& d) {
    auto r1 = flip_suite(ctx, comparable_pairs(CoxeterSystem::parse("S4"), true), opt);
    auto r2 = flip_suite(ctx, s5_pairs, opt);
    for (const auto& f : r1.failures) d += " [" + f + "]";
    for (const auto& f : r2.failures) d += " [" + f + "]";
    return r1.ok() && r2.ok();
  });

  criterion(5, "nonnegativity scan reports zero violations", 0, [&](std::string& d) {
    bool ok = true;
    auto scan = [&](const std::vector<std::pair<Element, Element>>& pairs) {
      for (const auto& [u, v] : pairs) {
        ScanRecord r = scan_interval(ctx, u, v, ReflectionOrdering::lex);
        if (!(r.nonneg_cd() && r.nonneg_a() && r.chaininject_ok && r.p1_check_ok)) {
          ok = false;
          d += " [" + r.u + "," + r.v + "]";
        }
      }
    };
    scan(s4_pairs);
    scan(s5_pairs);
    return ok;
  });

  criterion(6, "direct-product multiplicativity on S2xS3", 0, [&](std::string& d) {
    auto r = product_suite(ctx, CoxeterSystem::parse("S2xS3"), opt);
    for (const auto& f : r.failures) d += " [" + f + "]";
    return r.ok() && r.intervals > 0;
  });

  criterion(7, "small-basis fixtures", 0, [&](std::string& d) {
    bool ok = expect(ballot(4).at_neg_q().str() == "2q^2-3q+1", "B4(-q)", d);
    ok &= expect(ballot(2).at_neg_q().str() == "-q+1", "B2(-q)", d);
    ok &= expect(catalan(0) == 1 && catalan(1) == 1 && catalan(2) == 2 && catalan(3) == 5,
                 "Catalan", d);
    for (int n = 0; n <= 6; ++n)
      for (const auto& w : cd_words_of_degree(n))
        ok &= expect(xi_w(w) == K_map(theta_in_L(w)), "closed form vs K(Theta)", d);
    return ok;
  });

  if (failures == 0) std::printf("all criteria passed\n");
  return failures == 0 ? 0 : 1;
}
