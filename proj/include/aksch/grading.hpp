#pragma once

// Grouping the r components into g consecutive levels p = (r_1, ..., r_g)
// gives alpha_p(mu) = (|mu^[1]|, ..., |mu^[g]|), where mu^[k] collects the
// components of level k. Semistandard tableaux split by the alpha_p value of
// their type; the quotient attached to a weight eps has dimension
// prod_k dim S(n_k, r_k, m^[k]).

#include <cstdint>
#include <span>
#include <vector>

#include "aksch/combinatorics.hpp"
#include "aksch/tableaux.hpp"

namespace aksch {

class LevelComposition {
 public:
  explicit LevelComposition(std::vector<int> sizes);

  int g() const { return static_cast<int>(sizes_.size()); }
  int r() const;
  const std::vector<int>& sizes() const { return sizes_; }
  int offset(int k) const;       // components before level k (1-based level)
  int level_of(int comp) const;  // 1-based component -> 1-based level

 private:
  std::vector<int> sizes_;
};

std::vector<int> alpha_p(const Multipartition& mu, const LevelComposition& p);
std::vector<int> alpha_p(const MultiComposition& mu, const LevelComposition& p);

// All weak compositions of n into g parts, lexicographically decreasing.
std::vector<std::vector<int>> weight_vectors(int n, int g);

struct TableauSplit {
  std::vector<SemistandardTableau> plus;     // type weight equal to alpha_p(lambda)
  std::vector<SemistandardTableau> epsilon;  // type weight equal to eps
  std::uint64_t minus_count = 0;             // |T0(lambda)| - |plus|
};

// Throws std::logic_error if the epsilon set is neither the plus set (when
// alpha_p(lambda) = eps) nor disjoint from it (otherwise).
TableauSplit split_tableaux(const Multipartition& lambda, const LevelComposition& p,
                            std::span<const int> eps, std::span<const int> m);

std::uint64_t count_weighted(const Multipartition& lambda, const LevelComposition& p,
                             std::span<const int> eps, std::span<const int> m);

struct GradedDimReport {
  std::vector<int> eps;
  std::uint64_t lhs = 0;
  std::uint64_t rhs = 0;
  std::vector<std::uint64_t> factors;
  bool pass = false;
};

// sum over lambda with alpha_p(lambda) = eps of |T+(lambda)|^2 against
// prod_k dim_schur(n_k, r_k, m^[k]).
GradedDimReport graded_dim_check(int n, std::span<const int> m, const LevelComposition& p,
                                 std::span<const int> eps);

}  // namespace aksch
