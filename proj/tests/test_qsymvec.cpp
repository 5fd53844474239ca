#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bcd/qsymvec.hpp"

using namespace bcd;

TEST_CASE("vector basics") {
  QSymVec v{Basis::L, {}};
  v.add({2, 1}, 3);
  v.add({2, 1}, -3);
  CHECK(v.coeff.empty());
  v.add({1}, 2);
  v.add({3}, 5);
  CHECK(v.at({1}) == 2);
  CHECK(v.at({2}) == 0);
  CHECK(v.component(3).coeff.size() == 1);
  CHECK(v.component(1).at({1}) == 2);
  QSymVec w{Basis::M, {}};
  CHECK_THROWS(v.plus(w));
  CHECK(v.scaled(2).at({3}) == 10);
}

TEST_CASE("basis conversions invert each other") {
  CHECK(l_to_m(QSymVec{Basis::L, {{{2}, 1}}}).at({1, 1}) == 1);
  CHECK(l_to_m(QSymVec{Basis::L, {{{2}, 1}}}).at({2}) == 1);
  CHECK(m_to_l(QSymVec{Basis::M, {{{2}, 1}}}).at({1, 1}) == -1);

  std::mt19937 gen(11);
  QSymVec v{Basis::L, {}};
  for (int n = 1; n <= 5; ++n)
    for (const auto& a : compositions_of(n))
      v.add(a, static_cast<int>(gen() % 19) - 9);
  QSymVec round = m_to_l(l_to_m(v));
  v.trim();
  CHECK(round == v);
  QSymVec m{Basis::M, v.coeff};
  QSymVec round2 = l_to_m(m_to_l(m));
  CHECK(round2.coeff == m.coeff);
}

TEST_CASE("peak functions, small cases") {
  // degree-0 word
  QSymVec t0 = theta_in_L("");
  CHECK(t0.coeff.size() == 1);
  CHECK(t0.at({1}) == 1);
  // single c: both subsets of [1] qualify
  QSymVec tc = theta_in_L("c");
  CHECK(tc.at({2}) == 1);
  CHECK(tc.at({1, 1}) == 1);
  CHECK(tc.coeff.size() == 2);
  // single d: the subset and its complement must both meet {1,2}
  QSymVec td = theta_in_L("d");
  CHECK(td.at({1, 2}) == 1);
  CHECK(td.at({2, 1}) == 1);
  CHECK(td.coeff.size() == 2);
  QSymVec tdm = theta_in_M("d");
  CHECK(tdm.at({1, 2}) == 1);
  CHECK(tdm.at({2, 1}) == 1);
  CHECK(tdm.at({1, 1, 1}) == 2);
  CHECK(tdm.coeff.size() == 3);
}

TEST_CASE("peak function basis views agree") {
  for (int n = 0; n <= 6; ++n)
    for (const auto& w : cd_words_of_degree(n))
      CHECK(l_to_m(theta_in_L(w)) == theta_in_M(w));
}
