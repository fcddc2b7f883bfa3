#include "doctest.h"

#include "aksch/tableaux.hpp"
#include "oracles.hpp"

using namespace aksch;

TEST_CASE("count_standard examples") {
  CHECK(count_standard(Multipartition::from_parts({{}, {}, {1, 1, 1, 1}})) == 1);
  CHECK(count_standard(Multipartition::from_parts({{2, 1}})) == 2);
  CHECK(count_standard(Multipartition::from_parts({{1}, {1}})) == 2);
  CHECK(count_standard(Multipartition::from_parts({{}, {}})) == 1);
}

TEST_CASE("count_standard agrees with corner removal") {
  for (int r = 1; r <= 3; ++r)
    for (int n = 0; n <= 6; ++n)
      for (const auto& lam : enumerate_multipartitions(n, r))
        REQUIRE(static_cast<long>(count_standard(lam)) == oracle::count_standard(lam.to_parts()));
}

TEST_CASE("Hecke dimension is r^n n!") {
  CHECK(dim_hecke(0, 2) == 1);
  CHECK(dim_hecke(2, 2) == 8);
  CHECK(dim_hecke(3, 2) == 48);
  for (int r = 1; r <= 3; ++r)
    for (int n = 0; n <= 5; ++n) {
      std::uint64_t expect = 1;
      for (int i = 0; i < n; ++i) expect *= static_cast<std::uint64_t>(r);
      for (int i = 2; i <= n; ++i) expect *= static_cast<std::uint64_t>(i);
      CHECK(dim_hecke(n, r) == expect);
    }
}

TEST_CASE("enumerate_semistandard examples") {
  const auto row = Multipartition::from_parts({{2}});
  const auto ts = enumerate_semistandard(row, MultiComposition({{1, 1}}));
  REQUIRE(ts.size() == 1);
  CHECK(ts[0].entries().at({1, 1, 1}) == Entry{1, 1});
  CHECK(ts[0].entries().at({1, 2, 1}) == Entry{2, 1});

  // the superstandard tableau: type equal to the shape
  const auto lam = Multipartition::from_parts({{2, 1}, {1}});
  CHECK(enumerate_semistandard(lam, MultiComposition({{2, 1}, {1, 0}})).size() == 1);

  // ((1),(1)) against every type with one node in each component, m = (2,2)
  const auto split = Multipartition::from_parts({{1}, {1}});
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      std::vector<int> c1(2, 0), c2(2, 0);
      c1[a] = 1;
      c2[b] = 1;
      CHECK(enumerate_semistandard(split, MultiComposition({c1, c2})).size() == 1);
    }
}

TEST_CASE("enumerate_semistandard tableaux satisfy the rules and the type") {
  const std::vector<int> m{2, 2};
  for (const auto& lam : enumerate_multipartitions(3, 2))
    for (const auto& type : enumerate_types(3, 2, m)) {
      const auto ts = enumerate_semistandard(lam, type);
      std::set<std::map<Node, Entry>> seen;
      for (const auto& t : ts) {
        REQUIRE(t.type(m) == type);
        REQUIRE(seen.insert(t.entries()).second);
        for (const auto& [x, e] : t.entries()) {
          REQUIRE(e.c >= x.comp);
          if (auto it = t.entries().find({x.row, x.col + 1, x.comp}); it != t.entries().end()) REQUIRE(e <= it->second);
          if (auto it = t.entries().find({x.row + 1, x.col, x.comp}); it != t.entries().end()) REQUIRE(e < it->second);
        }
      }
      // brute-force count for this type
      auto want = oracle::count_semistandard(lam.to_parts(), m, [&](const auto& mult) {
        for (int c = 1; c <= 2; ++c)
          for (int a = 1; a <= 2; ++a) {
            auto it = mult.find({c, a});
            const int have = it == mult.end() ? 0 : it->second;
            if (have != type.components()[static_cast<std::size_t>(c - 1)][static_cast<std::size_t>(a - 1)]) return false;
          }
        return true;
      });
      REQUIRE(static_cast<long>(ts.size()) == want);
    }
}

TEST_CASE("type omega counts standard tableaux") {
  for (int r = 1; r <= 3; ++r)
    for (int n = 0; n <= 4; ++n) {
      std::vector<std::vector<int>> omega(static_cast<std::size_t>(r), std::vector<int>(static_cast<std::size_t>(std::max(n, 1)), 0));
      for (int a = 0; a < n; ++a) omega.back()[static_cast<std::size_t>(a)] = 1;
      const MultiComposition w(omega);
      for (const auto& lam : enumerate_multipartitions(n, r))
        REQUIRE(enumerate_semistandard(lam, w).size() == count_standard(lam));
    }
}

TEST_CASE("count_semistandard agrees with brute force") {
  for (int r = 1; r <= 3; ++r)
    for (int n = 0; n <= 3; ++n) {
      const auto m = default_bounds(n, r);
      for (const auto& lam : enumerate_multipartitions(n, r))
        REQUIRE(static_cast<long>(count_semistandard(lam, m)) == oracle::count_semistandard(lam.to_parts(), m));
    }
}

TEST_CASE("Schur dimensions") {
  const std::vector<int> one{1};
  CHECK(dim_schur(1, 1, one) == 1);
  const std::vector<int> two{2};
  CHECK(dim_schur(2, 1, two) == 10);
  // frozen fixture: Schur algebra with n = 2, r = 2, m = (2,2)
  const std::vector<int> twotwo{2, 2};
  long brute = 0;
  for (const auto& lam : enumerate_multipartitions(2, 2)) {
    const long c = oracle::count_semistandard(lam.to_parts(), twotwo);
    brute += c * c;
  }
  CHECK(static_cast<long>(dim_schur(2, 2, twotwo)) == brute);
  // shape counts 10, 6, 8, 3, 1
  CHECK(dim_schur(2, 2, twotwo) == 210);
  CHECK(dim_schur(2, 2) == dim_schur(2, 2, twotwo));
}

TEST_CASE("Schur dimension is monotone in each bound") {
  for (int n = 1; n <= 3; ++n)
    for (int a = 1; a <= 3; ++a)
      for (int b = 1; b <= 3; ++b) {
        const std::vector<int> m{a, b}, ma{a + 1, b}, mb{a, b + 1};
        const auto base = dim_schur(n, 2, m);
        CHECK(dim_schur(n, 2, ma) >= base);
        CHECK(dim_schur(n, 2, mb) >= base);
      }
}
