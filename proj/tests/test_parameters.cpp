#include "doctest.h"

#include <algorithm>

#include "aksch/errors.hpp"
#include "aksch/parameters.hpp"
#include "oracles.hpp"

using namespace aksch;

namespace {

ParameterSet ps(long e, std::vector<long> f) { return ParameterSet::root_of_unity(e, std::move(f)); }

// Calls fn(f) for every f in {0..e-1}^r.
template <class F>
void for_each_exponents(int e, int r, F&& fn) {
  std::vector<long> f(static_cast<std::size_t>(r), 0);
  for (;;) {
    fn(f);
    int k = 0;
    while (k < r && ++f[static_cast<std::size_t>(k)] == e) f[static_cast<std::size_t>(k++)] = 0;
    if (k == r) return;
  }
}

// Finite-type thresholds recomputed from the gap definitions, brute force
// over the wrapped sequence.
ExtendedInt min_finite_bound(const ParameterSet& p) {
  const int r = p.r();
  std::vector<long> s = p.f();
  std::sort(s.begin(), s.end());
  const long e = p.e().value();
  std::vector<long> w;
  for (int rep = 0; rep < 3; ++rep)
    for (long v : s) w.push_back(v + rep * e);
  long f1 = 1L << 40, f2 = 1L << 40, g = 1L << 40;
  for (int i = 0; i < r; ++i) {
    f1 = std::min(f1, w[i + 1] - w[i]);
    f2 = std::min(f2, w[i + 2] - w[i]);
  }
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (i != j) g = std::min(g, (w[i + 1] - w[i]) + (w[j + 1] - w[j]));
  if (r == 2) return std::min(e, 2 * f1 + 4);
  return std::min({2 * f1 + 4, f2 + 1, g + 2});
}

}  // namespace

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(ps(1, {0}), InvalidArgument);
  CHECK_THROWS_AS(ps(5, {5}), InvalidArgument);
  CHECK_THROWS_AS(ps(5, {-1}), InvalidArgument);
  CHECK_THROWS_AS(ParameterSet::root_of_unity(6, {0}, 3), InvalidArgument);  // 3 | 6
  CHECK_THROWS_AS(ParameterSet::root_of_unity(6, {0}, 4), InvalidArgument);  // not prime
  CHECK_NOTHROW(ParameterSet::root_of_unity(6, {0}, 5));
  CHECK_NOTHROW(ParameterSet::root_of_unity(ExtendedInt::infinity(), {0, 17}));
  CHECK_THROWS_AS(ParameterSet::root_of_unity(ExtendedInt::infinity(), {-2}), InvalidArgument);
  CHECK_THROWS_AS(ParameterSet::q_one(0), InvalidArgument);
}

TEST_CASE("spread invariants") {
  auto s = spread_invariants(ps(6, {0, 1, 3}));
  CHECK(s.f_plus1 == 1);
  CHECK(s.f_plus2 == 3);
  CHECK(s.g_min == 3);
  CHECK(s.gaps == std::vector<ExtendedInt>{1, 2, 3});

  s = spread_invariants(ps(16, {0, 2, 8, 10}));
  CHECK(s.f_plus1 == 2);
  CHECK(s.f_plus2 == 8);
  CHECK(s.g_min == 4);
  CHECK(s.gaps == std::vector<ExtendedInt>{2, 6, 2, 6});

  s = spread_invariants(ParameterSet::root_of_unity(ExtendedInt::infinity(), {0, 0}));
  CHECK(s.f_plus1 == 0);
  CHECK(s.f_plus2.is_infinite());
  CHECK(s.g_min.is_infinite());

  // gaps always sum to e
  for (int e = 2; e <= 7; ++e)
    for (int r = 1; r <= 3; ++r)
      for_each_exponents(e, r, [&](const std::vector<long>& f) {
        const auto inv = spread_invariants(ps(e, f));
        long sum = 0;
        for (const auto& g : inv.gaps) sum += g.value();
        REQUIRE(sum == e);
      });
}

TEST_CASE("semisimplicity criterion") {
  CHECK(is_semisimple(2, ps(5, {0, 3})));
  CHECK_FALSE(is_semisimple(5, ps(6, {0, 1, 3})));
  CHECK_FALSE(is_semisimple(4, ps(4, {0})));
  CHECK(is_semisimple(0, ParameterSet::q_one(3)));
  CHECK(is_semisimple(4, ParameterSet::q_one(1)));
  CHECK_FALSE(is_semisimple(5, ParameterSet::q_one(1, 5)));
  CHECK_FALSE(is_semisimple(1, ParameterSet::q_one(2)));

  // against the numerically evaluated product
  for (int e = 2; e <= 8; ++e)
    for (int r = 1; r <= 3; ++r)
      for_each_exponents(e, r, [&](const std::vector<long>& f) {
        const auto p = ps(e, f);
        for (int n = 0; n <= 7; ++n) REQUIRE(is_semisimple(n, p) == oracle::semisimple_product(n, p));
      });
  for (long d = 0; d <= 6; ++d) {
    const auto p = ParameterSet::root_of_unity(ExtendedInt::infinity(), {0, d});
    for (int n = 0; n <= 8; ++n) REQUIRE(is_semisimple(n, p) == oracle::semisimple_product(n, p));
  }
}

TEST_CASE("classify examples") {
  CHECK(classify(5, ps(6, {0, 1, 3})).kind == VerdictKind::Infinite);
  CHECK(classify(7, ps(16, {0, 2, 8, 10})).kind == VerdictKind::Infinite);
  const auto v = classify(2, ps(5, {0, 1}));
  CHECK(v.kind == VerdictKind::Finite);
  CHECK(v.e == ExtendedInt(5));
  CHECK(v.two_f1_plus4 == ExtendedInt(6));
  CHECK_FALSE(v.f2_plus1.has_value());
  CHECK(classify(6, ps(3, {0})).kind == VerdictKind::Wild);
  CHECK(classify(3, ParameterSet::q_one(1)).kind == VerdictKind::OutOfScope);
  CHECK(classify(0, ParameterSet::q_one(2)).kind == VerdictKind::Semisimple);
  CHECK(classify(3, ParameterSet::root_of_unity(ExtendedInt::infinity(), {0, 10})).kind == VerdictKind::Semisimple);
  CHECK(classify(3, ParameterSet::root_of_unity(ExtendedInt::infinity(), {0, 1})).kind == VerdictKind::Finite);
}

TEST_CASE("r = 1 and q = 1 laws") {
  for (int e = 2; e <= 5; ++e)
    for (int n = 1; n <= 12; ++n) {
      const auto k = classify(n, ps(e, {0})).kind;
      CHECK((k == VerdictKind::Semisimple) == (n < e));
      CHECK(is_finite_type(k) == (n < 2 * e));
      CHECK((k == VerdictKind::Wild) == (n >= 2 * e));
    }
  for (int r = 2; r <= 3; ++r)
    for (int n = 1; n <= 4; ++n) {
      const auto v = classify(n, ParameterSet::q_one(r));
      CHECK(is_finite_type(v.kind) == (n == 1));
      if (n >= 3) CHECK(v.kind == VerdictKind::Wild);
      if (n == 2) {
        CHECK(v.kind == VerdictKind::Infinite);
        CHECK(v.note.find("tame or wild not determined") != std::string::npos);
      }
    }
}

TEST_CASE("classification grid properties") {
  for (int e = 2; e <= 8; ++e)
    for (int r = 1; r <= 3; ++r)
      for_each_exponents(e, r, [&](const std::vector<long>& f) {
        const auto p = ps(e, f);
        for (int n = 0; n <= 6; ++n) {
          const Verdict v = classify(n, p);
          // shift and permutation invariance
          for (long s = 1; s < e; ++s) {
            std::vector<long> g;
            for (long x : f) g.push_back((x + s) % e);
            REQUIRE(classify(n, ps(e, g)).kind == v.kind);
          }
          std::vector<long> perm = f;
          std::sort(perm.begin(), perm.end());
          do {
            REQUIRE(classify(n, ps(e, perm)).kind == v.kind);
          } while (std::next_permutation(perm.begin(), perm.end()));

          if (v.kind == VerdictKind::Semisimple) REQUIRE(is_semisimple(n, p));
          if (is_semisimple(n, p) && r >= 2) REQUIRE(v.kind == VerdictKind::Semisimple);
          if (r >= 2) {
            REQUIRE(is_finite_type(v.kind) == (ExtendedInt(n) < min_finite_bound(p)));
            if (v.kind == VerdictKind::Wild) FAIL("wildness is only asserted for r = 1 or q = 1");
          }
          if (r >= 3 && is_finite_type(v.kind)) REQUIRE(n < e);
          if (n >= 1 && is_finite_type(v.kind)) REQUIRE(is_finite_type(classify(n - 1, p).kind));
        }
      });
  // the r = 2 bound on a wider n range
  for (int e = 2; e <= 8; ++e)
    for_each_exponents(e, 2, [&](const std::vector<long>& f) {
      const auto p = ps(e, f);
      for (int n = 0; n <= 10; ++n) REQUIRE(is_finite_type(classify(n, p).kind) == (ExtendedInt(n) < min_finite_bound(p)));
    });
}

TEST_CASE("multi-orbit classification") {
  const auto o4 = ps(4, {0});
  const auto o2 = ps(2, {0});
  CHECK(classify_multi_orbit(3, {o4, o4}).kind == VerdictKind::Finite);
  CHECK(classify_multi_orbit(3, {o4, o4}).note == "every orbit semisimple at n");
  CHECK(classify_multi_orbit(4, {o2, o2}).kind == VerdictKind::Infinite);
  CHECK(classify_multi_orbit(8, {o4, o4}).kind == VerdictKind::Infinite);  // 4 + 4 <= 8
  CHECK(classify_multi_orbit(7, {o4, o4}).kind == VerdictKind::Finite);
  CHECK(classify_multi_orbit(6, {ps(3, {0}), ps(3, {0})}).kind == VerdictKind::Infinite);
  CHECK_THROWS_AS(classify_multi_orbit(2, {}), InvalidArgument);
  CHECK_THROWS_AS(classify_multi_orbit(2, {ps(4, {0}), ps(5, {0})}), InvalidArgument);

  // a single orbit is classify
  for (int e = 2; e <= 6; ++e)
    for (int r = 1; r <= 3; ++r)
      for_each_exponents(e, r, [&](const std::vector<long>& f) {
        const auto p = ps(e, f);
        for (int n = 0; n <= 6; ++n) REQUIRE(classify_multi_orbit(n, {p}).kind == classify(n, p).kind);
      });

  // pairs of orbits against the combination rule, thresholds from the
  // numerical product
  auto threshold = [](int n, const ParameterSet& p) {
    for (int k = 1; k <= n; ++k)
      if (!oracle::semisimple_product(k, p)) return k;
    return n + 1;
  };
  for (int e = 2; e <= 5; ++e)
    for (int r1 = 1; r1 <= 2; ++r1)
      for (int r2 = 1; r2 <= 2; ++r2)
        for_each_exponents(e, r1, [&](const std::vector<long>& f1) {
          for_each_exponents(e, r2, [&](const std::vector<long>& f2) {
            const auto p1 = ps(e, f1), p2 = ps(e, f2);
            for (int n = 0; n <= 8; ++n) {
              const bool finite = is_finite_type(classify(n, p1).kind) && is_finite_type(classify(n, p2).kind) &&
                                  threshold(n, p1) + threshold(n, p2) > n;
              const auto k = classify_multi_orbit(n, {p1, p2}).kind;
              REQUIRE(k == (finite ? VerdictKind::Finite : VerdictKind::Infinite));
            }
          });
        });
}

TEST_CASE("semisimplicity threshold") {
  CHECK(semisimplicity_threshold(10, ps(4, {0})) == 4);
  CHECK(semisimplicity_threshold(3, ps(4, {0})) == 4);
  CHECK(semisimplicity_threshold(10, ps(6, {0, 1, 3})) == 2);
}
