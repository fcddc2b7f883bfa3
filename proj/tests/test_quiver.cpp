#include "doctest.h"

#include <algorithm>
#include <cstdint>
#include <map>

#include "aksch/jantzen.hpp"
#include "aksch/quiver.hpp"

using namespace aksch;

namespace {

// A_m rebuilt as a quotient of the path algebra: paths of length <= 4 over
// F_P, the relation ideal spanned by p * rho * q, and membership decided by
// row reduction. The relations are homogeneous, so degree <= 4 suffices once
// the quotient has no degree 3 part.
constexpr std::int64_t P = 1000000007;

struct PathAlgebraQuotient {
  int m;
  std::vector<PathWord> paths;           // all paths of length <= 4
  std::map<PathWord, std::size_t> slot;  // path -> coordinate
  std::vector<std::vector<std::int64_t>> echelon;  // reduced rows
  std::vector<std::size_t> pivots;

  explicit PathAlgebraQuotient(int m_) : m(m_) {
    for (int v = 1; v <= m; ++v) add({v, {}});
    std::vector<PathWord> frontier;
    for (int v = 1; v <= m; ++v) frontier.push_back({v, {}});
    for (int len = 1; len <= 4; ++len) {
      std::vector<PathWord> next;
      for (const auto& w : frontier)
        for (const Arrow& a : arrows_from(w.target())) {
          PathWord x = w;
          x.vertex = w.source();
          x.arrows.push_back(a);
          add(x);
          next.push_back(x);
        }
      frontier = next;
    }
    using Rel = std::vector<std::pair<std::int64_t, std::vector<Arrow>>>;
    std::vector<Rel> rels;
    const Arrow::Kind A = Arrow::Alpha, B = Arrow::Beta;
    if (m >= 2) rels.push_back({{1, {{B, m - 1}, {A, m - 1}}}});
    for (int i = 1; i + 1 <= m - 1; ++i) {
      rels.push_back({{1, {{A, i}, {A, i + 1}}}});
      rels.push_back({{1, {{B, i + 1}, {B, i}}}});
      rels.push_back({{1, {{B, i}, {A, i}}}, {P - 1, {{A, i + 1}, {B, i + 1}}}});
    }
    for (const auto& rho : rels) {
      const int s = rho.front().second.front().source(), t = rho.front().second.back().target();
      for (const auto& pre : paths) {
        if (pre.target() != s) continue;
        for (const auto& post : paths) {
          if (post.source() != t) continue;
          if (pre.arrows.size() + 2 + post.arrows.size() > 4) continue;
          std::vector<std::int64_t> v(paths.size(), 0);
          for (const auto& [c, mid] : rho) {
            PathWord w{pre.source(), pre.arrows};
            w.arrows.insert(w.arrows.end(), mid.begin(), mid.end());
            w.arrows.insert(w.arrows.end(), post.arrows.begin(), post.arrows.end());
            v[slot.at(canon(w))] = (v[slot.at(canon(w))] + c) % P;
          }
          insert(std::move(v));
        }
      }
    }
  }

  std::vector<Arrow> arrows_from(int v) const {
    std::vector<Arrow> out;
    if (v < m) out.push_back({Arrow::Alpha, v});
    if (v > 1) out.push_back({Arrow::Beta, v - 1});
    return out;
  }
  static PathWord canon(PathWord w) {
    w.vertex = w.source();
    return w;
  }
  void add(const PathWord& w) {
    slot[canon(w)] = paths.size();
    paths.push_back(w);
  }
  static std::int64_t inv(std::int64_t a) {
    std::int64_t r = 1, e = P - 2;
    for (a %= P; e; e >>= 1, a = a * a % P)
      if (e & 1) r = r * a % P;
    return r;
  }
  // Reduces v against the echelon rows; returns the remainder.
  std::vector<std::int64_t> reduce(std::vector<std::int64_t> v) const {
    for (std::size_t k = 0; k < echelon.size(); ++k) {
      const std::int64_t c = v[pivots[k]];
      if (!c) continue;
      for (std::size_t j = 0; j < v.size(); ++j) v[j] = ((v[j] - c * echelon[k][j]) % P + P) % P;
    }
    return v;
  }
  void insert(std::vector<std::int64_t> v) {
    v = reduce(std::move(v));
    auto it = std::find_if(v.begin(), v.end(), [](std::int64_t x) { return x != 0; });
    if (it == v.end()) return;
    const std::size_t piv = static_cast<std::size_t>(it - v.begin());
    const std::int64_t s = inv(v[piv]);
    for (auto& x : v) x = x * s % P;
    for (auto& row : echelon)
      if (const std::int64_t c = row[piv]) {
        for (std::size_t j = 0; j < v.size(); ++j) row[j] = ((row[j] - c * v[j]) % P + P) % P;
      }
    echelon.push_back(std::move(v));
    pivots.push_back(piv);
  }
  std::size_t quotient_dim() const { return paths.size() - echelon.size(); }

  std::vector<std::int64_t> vec(const std::optional<PathWord>& w, std::int64_t c = 1) const {
    std::vector<std::int64_t> v(paths.size(), 0);
    if (w) v[slot.at(canon(*w))] = (c % P + P) % P;
    return v;
  }
  // Traversal-order concatenation: x then y.
  std::optional<PathWord> concat(const PathWord& x, const PathWord& y) const {
    if (x.target() != y.source()) return std::nullopt;
    PathWord w{x.source(), x.arrows};
    w.arrows.insert(w.arrows.end(), y.arrows.begin(), y.arrows.end());
    if (w.arrows.size() > 4) return std::nullopt;  // lies in the ideal anyway
    return w;
  }
  bool equal_mod_ideal(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) const {
    std::vector<std::int64_t> d(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) d[j] = ((a[j] - b[j]) % P + P) % P;
    d = reduce(d);
    return std::all_of(d.begin(), d.end(), [](std::int64_t x) { return x == 0; });
  }
  // dim of paths j -> i of degree k in the quotient
  long graded_dim(int source, int target, std::size_t degree) const {
    std::vector<std::size_t> idx;
    for (std::size_t j = 0; j < paths.size(); ++j)
      if (paths[j].source() == source && paths[j].target() == target && paths[j].arrows.size() == degree) idx.push_back(j);
    // the ideal is graded and splits by endpoints, so count pivots in idx
    long pivs = 0;
    for (std::size_t k = 0; k < pivots.size(); ++k)
      if (std::find(idx.begin(), idx.end(), pivots[k]) != idx.end()) ++pivs;
    return static_cast<long>(idx.size()) - pivs;
  }
};

}  // namespace

TEST_CASE("A_m dimensions and names") {
  CHECK(AmAlgebra(1).dim() == 1);
  CHECK(AmAlgebra(2).dim() == 5);
  CHECK(AmAlgebra(5).dim() == 17);
  const AmAlgebra a(2);
  std::vector<std::string> names;
  for (int i = 0; i < a.dim(); ++i) names.push_back(a.name(i));
  CHECK(names == std::vector<std::string>{"e1", "e2", "a1", "b1", "l1"});
  CHECK(a.path_string(4) == "b1a1");
  CHECK(AmAlgebra(4).critical_pairs_checked() > 0);
  CHECK_THROWS(AmAlgebra(0));
}

TEST_CASE("A_m matches the path algebra quotient") {
  for (int m = 1; m <= 6; ++m) {
    CAPTURE(m);
    const AmAlgebra A(m);
    const PathAlgebraQuotient Q(m);
    REQUIRE(A.dim() == 4 * m - 3);
    REQUIRE(Q.quotient_dim() == static_cast<std::size_t>(4 * m - 3));
    // basis words are independent modulo the ideal
    PathAlgebraQuotient span = Q;
    const std::size_t before = span.echelon.size();
    for (const auto& w : A.basis()) span.insert(span.vec(w));
    REQUIRE(span.echelon.size() - before == static_cast<std::size_t>(A.dim()));
    // structure constants
    for (int a = 0; a < A.dim(); ++a)
      for (int b = 0; b < A.dim(); ++b) {
        const Product pr = A.multiply(a, b);
        const auto lhs = Q.vec(Q.concat(A.basis()[static_cast<std::size_t>(b)], A.basis()[static_cast<std::size_t>(a)]));
        const auto rhs = pr.index ? Q.vec(A.basis()[static_cast<std::size_t>(*pr.index)], pr.sign) : Q.vec(std::nullopt);
        REQUIRE(Q.equal_mod_ideal(lhs, rhs));
      }
  }
}

TEST_CASE("A_m is associative with identity sum e_1 + ... + e_m") {
  for (int m = 1; m <= 6; ++m) {
    const AmAlgebra A(m);
    auto mul = [&](std::pair<int, int> x, int c) -> std::pair<int, int> {  // (index or -1, sign)
      if (x.first < 0) return {-1, 0};
      const Product p = A.multiply(x.first, c);
      return p.index ? std::pair<int, int>{*p.index, x.second * p.sign} : std::pair<int, int>{-1, 0};
    };
    auto lmul = [&](int a, std::pair<int, int> y) -> std::pair<int, int> {
      if (y.first < 0) return {-1, 0};
      const Product p = A.multiply(a, y.first);
      return p.index ? std::pair<int, int>{*p.index, y.second * p.sign} : std::pair<int, int>{-1, 0};
    };
    for (int a = 0; a < A.dim(); ++a)
      for (int b = 0; b < A.dim(); ++b)
        for (int c = 0; c < A.dim(); ++c) REQUIRE(mul(lmul(a, {b, 1}), c) == lmul(a, mul({b, 1}, c)));
    // idempotents act as identity on the matching side
    for (int x = 0; x < A.dim(); ++x) {
      const auto& w = A.basis()[static_cast<std::size_t>(x)];
      for (int v = 0; v < m; ++v) {
        const Product left = A.multiply(v, x), right = A.multiply(x, v);
        REQUIRE(left.index.has_value() == (w.target() == v + 1));
        REQUIRE(right.index.has_value() == (w.source() == v + 1));
        if (left.index) REQUIRE(*left.index == x);
        if (right.index) REQUIRE(*right.index == x);
      }
    }
  }
}

TEST_CASE("A_m relations") {
  const AmAlgebra A(4);
  const Arrow::Kind a = Arrow::Alpha, b = Arrow::Beta;
  CHECK_FALSE(A.reduce({4, {{b, 3}, {a, 3}}}).has_value());
  CHECK_FALSE(A.reduce({1, {{a, 1}, {a, 2}}}).has_value());
  CHECK_FALSE(A.reduce({3, {{b, 2}, {b, 1}}}).has_value());
  CHECK(A.reduce({2, {{b, 1}, {a, 1}}}) == A.reduce({2, {{a, 2}, {b, 2}}}));
  CHECK(A.reduce({1, {{a, 1}, {b, 1}}}).has_value());
  CHECK(A.index_of({1, {{a, 1}, {a, 2}}}) == -1);
}

TEST_CASE("Cartan matrix is transpose(D) D for the bidiagonal D") {
  for (int m = 1; m <= 8; ++m) {
    const AmAlgebra A(m);
    const auto C = A.cartan();
    const auto D = bidiagonal_decomposition_matrix(m);
    REQUIRE(C == cartan_from_decomposition(D));
    const PathAlgebraQuotient Q(std::min(m, 6));
    if (m <= 6)
      for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j) {
          long dim = 0;
          for (std::size_t k = 0; k <= 4; ++k) dim += Q.graded_dim(j, i, k);
          REQUIRE(C[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] == dim);
        }
  }
}

TEST_CASE("Hom dimensions") {
  for (int m = 1; m <= 6; ++m) {
    const auto H = AmAlgebra(m).hom_dimensions();
    for (int i = 1; i <= m; ++i)
      for (int j = 1; j <= m; ++j) {
        long want = 0;
        if (std::abs(i - j) == 1 || (i == j && i == m)) want = 1;
        else if (i == j) want = 2;
        REQUIRE(H[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] == want);
      }
  }
}

TEST_CASE("radical series of the projectives") {
  auto sizes = [](const std::vector<std::vector<int>>& layers) {
    std::vector<std::size_t> s;
    for (const auto& l : layers) s.push_back(l.size());
    return s;
  };
  const AmAlgebra two(2);
  CHECK(sizes(two.projective_radical_series(1)) == std::vector<std::size_t>{1, 1, 1});
  CHECK(sizes(two.projective_radical_series(2)) == std::vector<std::size_t>{1, 1});
  const AmAlgebra three(3);
  CHECK(sizes(three.projective_radical_series(2)) == std::vector<std::size_t>{1, 2, 1});
  auto mid = three.projective_radical_series(2);
  std::sort(mid[1].begin(), mid[1].end());
  CHECK(mid == std::vector<std::vector<int>>{{2}, {1, 3}, {2}});

  for (int m = 1; m <= 6; ++m) {
    const AmAlgebra A(m);
    const PathAlgebraQuotient Q(m);
    for (int i = 1; i <= m; ++i) {
      auto layers = A.projective_radical_series(i);
      REQUIRE(!layers.empty());
      REQUIRE(layers.front() == std::vector<int>{i});
      REQUIRE(layers.back().size() == 1);  // simple socle
      // graded pieces of e_i A from the quotient
      for (std::size_t k = 0; k < layers.size(); ++k) {
        std::vector<int> want;
        for (int j = 1; j <= m; ++j)
          for (long c = Q.graded_dim(j, i, k); c > 0; --c) want.push_back(j);
        std::sort(layers[k].begin(), layers[k].end());
        REQUIRE(layers[k] == want);
      }
      for (int j = 1; j <= m; ++j) REQUIRE(Q.graded_dim(j, i, layers.size()) == 0);
    }
  }
}
