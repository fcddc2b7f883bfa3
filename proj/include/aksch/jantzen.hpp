#pragma once

// Jantzen coefficients over the modular system R = F[t]_(t):
//   q^ = q (1 + t^{c0})   (or q^ = q without q-deformation)
//   Q^_k = q^{f_k} + t^{c_k}   (or q^{f_k} for a PURE component)
//   res_R(i, j, k) = q^^{j-i} Q^_k
//
//   J(lambda, mu) = sum over x in [lambda], y in [mu] with
//                   [lambda] \ r_x = [mu] \ r_y  of
//                   (-1)^{leg(r_x) + leg(r_y)} * val_t(res_R(foot x) - res_R(foot y))
// when lambda strictly dominates mu, and 0 otherwise.

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "aksch/blocks.hpp"
#include "aksch/combinatorics.hpp"
#include "aksch/parameters.hpp"
#include "aksch/tseries.hpp"

namespace aksch {

struct ModularConfig {
  // One entry per component; nullopt marks a PURE component (no t-term).
  std::vector<std::optional<int>> deform;
  std::optional<int> q_deform;    // c0
  std::optional<int> truncation;  // default derived from n

  // c_k = 2k, no q-deformation.
  static ModularConfig standard(int r);

  // 4 * max(c_k, c0, 1) * (n + 1) unless set explicitly.
  int truncation_for(int n) const;
  // Throws InvalidArgument on repeated deformation exponents, c0 not above
  // every c_k, or exponents that do not fit below the truncation order.
  void validate(int r, int n) const;
};

// Valuation of a - b; nullopt (degenerate) when the difference vanishes below
// the truncation order.
std::optional<int> valuation(const TSeries& a, const TSeries& b);

struct RimHookPair {
  Node x;
  Node y;
  int sign = 1;
  int valuation = 0;
};

class JantzenEngine {
 public:
  // Validates the configuration and that the algebra over the fraction field
  // is semisimple (RegimeError otherwise).
  JantzenEngine(int n, ParameterSet params, ModularConfig cfg);

  int n() const { return n_; }
  const ParameterSet& params() const { return params_; }
  const ModularConfig& config() const { return cfg_; }
  int truncation() const { return truncation_; }

  // res_R(x) expanded to the truncation order. `order` may lower the
  // precision; asking for more than the truncation order throws.
  TSeries residue_series(const Node& x, std::optional<int> order = std::nullopt) const;

  // Contributing pairs (empty unless lambda strictly dominates mu). Throws
  // DegenerateError if a pair's residues are not separated.
  std::vector<RimHookPair> contributions(const Multipartition& lambda, const Multipartition& mu) const;
  long coefficient(const Multipartition& lambda, const Multipartition& mu) const;

 private:
  TSeries q_hat_power(long d, int order) const;
  TSeries big_q_hat(int k, int order) const;
  void check_semisimple_over_fraction_field() const;

  int n_;
  ParameterSet params_;
  ModularConfig cfg_;
  int truncation_;
  std::shared_ptr<const CoefficientRing> ring_;
};

long jantzen_coefficient(const Multipartition& lambda, const Multipartition& mu,
                         const ParameterSet& p, const ModularConfig& cfg);

// Members in a linear extension of dominance (smallest first) and the dense
// matrix J[i][j] = J(ordering[i], ordering[j]).
struct JantzenTable {
  std::vector<Multipartition> ordering;
  std::vector<std::vector<long>> J;
};

std::vector<Multipartition> dominance_sorted(std::vector<Multipartition> members);
JantzenTable jantzen_table(const Block& b, const JantzenEngine& engine);

// (J(lambda, mu)) for mu in the block, keyed by mu; zero entries omitted.
std::map<Multipartition, long> sum_formula(const Multipartition& lambda, const Block& b,
                                           const JantzenEngine& engine);

struct DecompositionResult {
  JantzenTable table;
  std::vector<std::vector<long>> D;  // rows: cell modules, columns: simples
  std::vector<std::vector<long>> C;  // transpose(D) * D
};

std::vector<std::vector<long>> bidiagonal_decomposition_matrix(int m);
std::vector<std::vector<long>> cartan_from_decomposition(const std::vector<std::vector<long>>& D);

// Finite regime only (RegimeError otherwise). Dominance must be total on the
// block and the Jantzen table must match the bidiagonal matrix: J[i][i-1] > 0,
// nothing above the diagonal, and the sum formula sum_j J[i][j] [W_j] must be a
// positive multiple of the single simple L_{i-1}.
DecompositionResult decomposition_matrix(const Block& b, const JantzenEngine& engine);

}  // namespace aksch
