#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <string>

#include "bcd/brupaths.hpp"

using namespace bcd;

namespace {

Element el(const char* sys, const char* text) {
  return Element::parse(CoxeterSystem::parse(sys), text);
}

BruhatPath mk_path(const char* sys, std::initializer_list<const char*> verts) {
  BruhatPath p;
  auto s = CoxeterSystem::parse(sys);
  for (const char* t : verts) p.verts.push_back(Element::parse(s, t));
  return p;
}

}  // namespace

TEST_CASE("interval graph") {
  auto s3 = CoxeterSystem::parse("S3");
  auto g = bruhat_graph(el("S3", "123"), el("S3", "321"));
  CHECK(g.elems.size() == 6);
  CHECK(g.index_of(el("S3", "123")) == 0);
  CHECK(g.index_of(el("S4", "1234")) == -1);
  int edges = 0;
  for (const auto& adj : g.up) edges += static_cast<int>(adj.size());
  // full S3 Bruhat graph: one edge per (x, reflection) raising pair
  CHECK(edges == 9);
  for (size_t i = 0; i < g.elems.size(); ++i)
    for (const auto& [j, t] : g.up[i]) {
      CHECK(g.elems[j].length() > g.elems[i].length());
      CHECK(reflection_element(s3, t) * g.elems[i] == g.elems[j]);
    }
}

TEST_CASE("descent compositions of labeled paths") {
  // 123 -> 213 -> 231 -> 321 has labels (1,2),(1,3),(2,3): increasing
  BruhatPath p1 = mk_path("S3", {"123", "213", "231", "321"});
  CHECK(descent_composition(p1, ReflectionOrdering::lex) == Composition{3});
  // 123 -> 132 -> 231 -> 321 has labels (2,3),(1,2),(2,3): descent at 1
  BruhatPath p2 = mk_path("S3", {"123", "132", "231", "321"});
  CHECK(descent_composition(p2, ReflectionOrdering::lex) == Composition{1, 2});
  BruhatPath triv = mk_path("S3", {"123"});
  CHECK(descent_composition(triv, ReflectionOrdering::lex) == Composition{});
}

TEST_CASE("path statistics on [1234, 4231]") {
  PathStats st = b_stats(el("S4", "1234"), el("S4", "4231"), ReflectionOrdering::lex);
  CHECK(st.total_paths() == 73);
  CHECK(st.paths_of_length(1) == 1);
  CHECK(st.paths_of_length(3) == 8);
  CHECK(st.paths_of_length(5) == 64);
  std::map<Composition, Int> expect{
      {{5}, 1},      {{1, 1, 1, 1, 1}, 1}, {{1}, 1},          {{3}, 2},
      {{2, 1}, 2},   {{1, 2}, 2},          {{1, 1, 1}, 2},    {{1, 4}, 2},
      {{2, 1, 1, 1}, 2}, {{4, 1}, 3},      {{3, 1, 1}, 3},    {{1, 1, 3}, 3},
      {{1, 1, 1, 2}, 3}, {{2, 3}, 4},      {{1, 2, 1, 1}, 4}, {{3, 2}, 5},
      {{1, 1, 2, 1}, 5}, {{1, 3, 1}, 6},   {{2, 1, 2}, 6},    {{2, 2, 1}, 8},
      {{1, 2, 2}, 8}};
  CHECK(st.b == expect);
  CHECK(st.b_at({5}) == 1);
  CHECK(st.b_at({4}) == 0);
}

TEST_CASE("trivial interval has an empty tally") {
  PathStats st = b_stats(el("S3", "123"), el("S3", "123"), ReflectionOrdering::lex);
  CHECK(st.b.empty());
  CHECK(st.total_paths() == 0);
  CHECK(st.b_at({}) == 0);
}

TEST_CASE("c counts agree across the three routes") {
  KlContext ctx;
  Element u = el("S4", "1234"), v = el("S4", "4231");
  PathStats st = b_stats(u, v, ReflectionOrdering::lex);
  for (int k = 1; k <= 5; ++k)
    for (const auto& a : compositions_of(k)) {
      Int c = c_from_b(st, a);
      CHECK(c == c_by_paths(u, v, a, ReflectionOrdering::lex));
      CHECK(c == c_via_chains(ctx, u, v, a));
    }
  CHECK(c_from_b(st, {2, 3}) == 4 + 1);  // b_23 + b_5
  CHECK(c_from_b(st, {1, 2, 2}) == 8 + 2 + 5 + 1);  // b_122 + b_12 + b_32 + b_5
}

TEST_CASE("chain tables match the direct chain formula") {
  KlContext ctx;
  Element u = el("S4", "1234"), v = el("S4", "4321");
  auto elems = interval_elements(u, v);
  auto from = chain_c_from(ctx, elems);
  auto to = chain_c_to(ctx, elems);
  REQUIRE(from.size() == elems.size());
  REQUIRE(to.size() == elems.size());
  for (size_t i = 0; i < elems.size(); ++i) {
    for (const auto& [a, c] : from[i]) CHECK(c == c_via_chains(ctx, elems[i], v, a));
    for (const auto& [a, c] : to[i]) CHECK(c == c_via_chains(ctx, u, elems[i], a));
  }
  QSymVec ft = f_tilde_via_chains(ctx, u, v);
  PathStats st = b_stats(u, v, ReflectionOrdering::lex);
  for (const auto& [a, c] : ft.coeff) CHECK(c == c_from_b(st, a));
}

TEST_CASE("length-2 flips") {
  Element u = el("S3", "123"), v = el("S3", "231");
  auto paths = length2_paths(u, v, ReflectionOrdering::lex);
  REQUIRE(paths.size() == 2);
  // ascending route through 213, descending through 132
  CHECK(paths[0].verts[1] == el("S3", "213"));
  CHECK(paths[1].verts[1] == el("S3", "132"));
  BruhatPath f = flip2(paths[0], ReflectionOrdering::lex);
  CHECK(f.verts[1] == el("S3", "132"));
  BruhatPath ff = flip2(f, ReflectionOrdering::lex);
  CHECK(ff.verts[1] == paths[0].verts[1]);
}

TEST_CASE("flip at an interior position moves the descent") {
  Element u = el("S4", "1234"), v = el("S4", "4231");
  for (const auto& p : increasing_paths(u, v, 3, ReflectionOrdering::lex)) {
    BruhatPath f = flip_at(p, 1, ReflectionOrdering::lex);
    CHECK(f.verts.front() == p.verts.front());
    CHECK(f.verts.back() == p.verts.back());
    auto dc = descent_composition(f, ReflectionOrdering::lex);
    CHECK(dc == Composition{1, 2});
    // within the flipped segment the first label goes up, the second down
    auto lp = p.labels();
    auto lf = f.labels();
    CHECK(compare_reflections(lf[0], lp[0], ReflectionOrdering::lex) > 0);
    CHECK(compare_reflections(lf[1], lp[1], ReflectionOrdering::lex) < 0);
    CHECK(lf[2] == lp[2]);
  }
}

TEST_CASE("phi injection") {
  KlContext ctx;
  Element u = el("S4", "1234"), v = el("S4", "4231");
  auto inc = increasing_paths(u, v, 3, ReflectionOrdering::lex);
  CHECK(Int(inc.size()) == ctx.r_tilde(u, v).coeff(3));
  std::set<std::string> seen;
  for (const auto& p : inc)
    for (const Subset& s : std::vector<Subset>{{}, {1}, {2}, {1, 2}}) {
      BruhatPath img = phi_injection(p, s, ReflectionOrdering::lex);
      std::string key;
      for (const auto& x : img.verts) key += x.text() + "/";
      CHECK(seen.insert(key).second);
    }
}
