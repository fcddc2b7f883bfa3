#pragma once

// Standard and semistandard tableaux of multipartition shape, and the
// dimensions of the Hecke and cyclotomic Schur algebras as sums of squared
// cell-basis counts.
//
// A semistandard entry is a pair (a, c) with 1 <= a <= m_c and c a component
// index. Pairs are ordered by c first, then a. Rows weakly increase, columns
// strictly increase, and a node in component k only carries entries with
// c >= k. The type of a tableau counts how often each pair occurs.

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <vector>

#include "aksch/combinatorics.hpp"

namespace aksch {

struct Entry {
  int a = 1;
  int c = 1;
  friend auto operator<=>(const Entry& x, const Entry& y) {
    if (auto cmp = x.c <=> y.c; cmp != 0) return cmp;
    return x.a <=> y.a;
  }
  friend bool operator==(const Entry&, const Entry&) = default;
};

class SemistandardTableau {
 public:
  SemistandardTableau(Multipartition shape, std::map<Node, Entry> entries);

  const Multipartition& shape() const { return shape_; }
  const std::map<Node, Entry>& entries() const { return entries_; }
  // Type with m_k slots in component k.
  MultiComposition type(std::span<const int> m) const;

  friend bool operator==(const SemistandardTableau&, const SemistandardTableau&) = default;

 private:
  Multipartition shape_;
  std::map<Node, Entry> entries_;
};

// |Std(lambda)| via the hook length formula and the multinomial over component
// sizes. Throws std::overflow_error past 64 bits.
std::uint64_t count_standard(const Multipartition& lambda);

std::vector<SemistandardTableau> enumerate_semistandard(const Multipartition& lambda,
                                                        const MultiComposition& type);

// |T0(lambda)|: semistandard tableaux of shape lambda over every type with
// slot counts m.
std::uint64_t count_semistandard(const Multipartition& lambda, std::span<const int> m);

// Counts tableaux whose entries fall into buckets with prescribed totals:
// bucket_of(entry) in [0, budgets.size()) and exactly budgets[b] entries land
// in bucket b. This covers both fixed-type and graded counts.
std::uint64_t count_semistandard_bucketed(const Multipartition& lambda, std::span<const int> m,
                                          const std::function<int(const Entry&)>& bucket_of,
                                          std::span<const int> budgets);

// Visits every semistandard tableau of shape lambda whose entries satisfy the
// bucket budgets (see above).
void for_each_semistandard(const Multipartition& lambda, std::span<const int> m,
                           const std::function<int(const Entry&)>& bucket_of,
                           std::span<const int> budgets,
                           const std::function<void(const SemistandardTableau&)>& visit);

std::uint64_t dim_hecke(int n, int r);
// Default m = (n, ..., n) when m is empty.
std::uint64_t dim_schur(int n, int r, std::span<const int> m = {});

// The smallest length bounds satisfying m_k >= n.
std::vector<int> default_bounds(int n, int r);

}  // namespace aksch
