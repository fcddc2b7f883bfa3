#include "aksch/jantzen.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "aksch/errors.hpp"

namespace aksch {

// ------------------------------------------------------------ ModularConfig

ModularConfig ModularConfig::standard(int r) {
  ModularConfig cfg;
  for (int k = 1; k <= r; ++k) cfg.deform.emplace_back(2 * k);
  return cfg;
}

int ModularConfig::truncation_for(int n) const {
  if (truncation) return *truncation;
  int top = 1;
  for (const auto& c : deform)
    if (c) top = std::max(top, *c);
  if (q_deform) top = std::max(top, *q_deform);
  return 4 * top * (n + 1);
}

void ModularConfig::validate(int r, int n) const {
  if (static_cast<int>(deform.size()) != r)
    throw InvalidArgument("deformation exponents: expected " + std::to_string(r) + " entries, got " +
                          std::to_string(deform.size()));
  std::set<int> seen;
  int top = 0;
  for (const auto& c : deform) {
    if (!c) continue;
    if (*c < 1) throw InvalidArgument("deformation exponents must be positive");
    if (!seen.insert(*c).second) throw InvalidArgument("deformation exponents must be pairwise distinct");
    top = std::max(top, *c);
  }
  if (q_deform) {
    if (*q_deform < 1) throw InvalidArgument("q-deformation exponent must be positive");
    if (*q_deform <= top) throw InvalidArgument("q-deformation exponent must exceed every deformation exponent");
  }
  if (truncation && *truncation < 1) throw InvalidArgument("truncation order must be positive");
  const int trunc = truncation_for(n);
  if (top >= trunc || (q_deform && *q_deform >= trunc))
    throw InvalidArgument("deformation exponents must lie below the truncation order");
}

std::optional<int> valuation(const TSeries& a, const TSeries& b) { return (a - b).order(); }

// ------------------------------------------------------------ JantzenEngine

JantzenEngine::JantzenEngine(int n, ParameterSet params, ModularConfig cfg)
    : n_(n), params_(std::move(params)), cfg_(std::move(cfg)) {
  if (n_ < 0) throw InvalidArgument("n must be non-negative");
  if (params_.q_is_one()) throw InvalidArgument("Jantzen coefficients need q != 1");
  cfg_.validate(params_.r(), n_);
  truncation_ = cfg_.truncation_for(n_);
  ring_ = std::make_shared<const CoefficientRing>(params_.e(), params_.char_p());
  check_semisimple_over_fraction_field();
}

TSeries JantzenEngine::q_hat_power(long d, int order) const {
  if (!cfg_.q_deform) return TSeries::constant(ring_, order, 1, d);
  // q^d (1 + t^{c0})^d, d of either sign
  TSeries out(ring_, order);
  const long c0 = *cfg_.q_deform;
  for (long s = 0; s * c0 < order; ++s) {
    const long b = generalized_binomial(d, s);
    if (b != 0) out = out + TSeries::term(ring_, order, b, d, static_cast<int>(s * c0));
  }
  return out;
}

TSeries JantzenEngine::big_q_hat(int k, int order) const {
  TSeries out = TSeries::constant(ring_, order, 1, params_.f(k));
  const auto& c = cfg_.deform.at(static_cast<std::size_t>(k - 1));
  if (c) out = out + TSeries::term(ring_, order, 1, 0, *c);
  return out;
}

TSeries JantzenEngine::residue_series(const Node& x, std::optional<int> order) const {
  const int ord = order.value_or(truncation_);
  if (ord > truncation_)
    throw InvalidArgument("requested order " + std::to_string(ord) + " exceeds the truncation order " +
                          std::to_string(truncation_));
  if (ord < 1) throw InvalidArgument("order must be positive");
  if (x.comp < 1 || x.comp > params_.r()) throw InvalidArgument("node component out of range");
  return q_hat_power(x.col - x.row, ord) * big_q_hat(x.comp, ord);
}

// The generic fiber must be semisimple for the sum formula to apply: every
// factor of the semisimplicity product, evaluated at q^ and Q^_k, has to be a
// nonzero series.
void JantzenEngine::check_semisimple_over_fraction_field() const {
  if (!cfg_.q_deform && params_.e().is_finite() && n_ >= params_.e().value())
    throw RegimeError("modular system requires n < e or q-deformation");
  const int T = truncation_;
  TSeries partial(ring_, T);  // [i]_{q^}
  for (int i = 1; i <= n_; ++i) {
    partial = partial + q_hat_power(i - 1, T);
    if (partial.is_zero())
      throw RegimeError("modular system not semisimple over the fraction field: [" + std::to_string(i) +
                        "] vanishes");
  }
  for (int k = 1; k <= params_.r(); ++k)
    for (int l = k + 1; l <= params_.r(); ++l)
      for (int a = -n_ + 1; a < n_; ++a) {
        const TSeries diff = q_hat_power(a, T) * big_q_hat(k, T) - big_q_hat(l, T);
        if (diff.is_zero())
          throw RegimeError("modular system not semisimple over the fraction field: q^" + std::to_string(a) +
                            " Q_" + std::to_string(k) + " = Q_" + std::to_string(l) +
                            "; deform one of these components");
      }
}

std::vector<RimHookPair> JantzenEngine::contributions(const Multipartition& lambda,
                                                      const Multipartition& mu) const {
  if (lambda.r() != params_.r() || mu.r() != params_.r())
    throw InvalidArgument("multipartitions and parameters disagree on r");
  if (lambda.size() != mu.size()) throw InvalidArgument("multipartitions differ in size");
  if (lambda.size() > n_) throw InvalidArgument("multipartition larger than the engine's n");
  std::vector<RimHookPair> out;
  if (!dominates(lambda, mu)) return out;

  std::vector<std::pair<Multipartition, RimHook>> mu_hooks;
  for (const auto& y : mu.nodes()) {
    RimHook h = rim_hook(mu, y);
    mu_hooks.emplace_back(remove_rim_hook(mu, h), std::move(h));
  }
  for (const auto& x : lambda.nodes()) {
    const RimHook hx = rim_hook(lambda, x);
    const Multipartition rest = remove_rim_hook(lambda, hx);
    for (const auto& [rest_mu, hy] : mu_hooks) {
      if (rest_mu != rest) continue;
      if (hx.size() != hy.size()) throw std::logic_error("matched rim hooks differ in size");
      const auto v = valuation(residue_series(hx.foot), residue_series(hy.foot));
      if (!v)
        throw DegenerateError("modular system degenerate; enable q-deformation (c0) or report");
      RimHookPair pr;
      pr.x = hx.foot;
      pr.y = hy.foot;
      pr.sign = ((hx.leg_length + hy.leg_length) % 2 == 0) ? 1 : -1;
      pr.valuation = *v;
      out.push_back(pr);
    }
  }
  return out;
}

long JantzenEngine::coefficient(const Multipartition& lambda, const Multipartition& mu) const {
  long total = 0;
  for (const auto& pr : contributions(lambda, mu)) total += pr.sign * static_cast<long>(pr.valuation);
  return total;
}

long jantzen_coefficient(const Multipartition& lambda, const Multipartition& mu, const ParameterSet& p,
                         const ModularConfig& cfg) {
  return JantzenEngine(lambda.size(), p, cfg).coefficient(lambda, mu);
}

// --------------------------------------------------------------- tables

namespace {

// Prefix sums over a fixed number of rows per component. If a strictly
// dominates b then key(a) > key(b) lexicographically, so sorting by the key
// is a linear extension of dominance.
std::vector<int> prefix_key(const Multipartition& mu, int width) {
  std::vector<int> key;
  int acc = 0;
  for (const auto& part : mu.components())
    for (int i = 1; i <= width; ++i) {
      acc += part.row(i);
      key.push_back(acc);
    }
  return key;
}

}  // namespace

std::vector<Multipartition> dominance_sorted(std::vector<Multipartition> members) {
  int width = 0;
  for (const auto& mu : members)
    for (const auto& part : mu.components()) width = std::max(width, part.length());
  std::stable_sort(members.begin(), members.end(), [width](const auto& a, const auto& b) {
    return prefix_key(a, width) < prefix_key(b, width);
  });
  return members;
}

JantzenTable jantzen_table(const Block& b, const JantzenEngine& engine) {
  JantzenTable t;
  t.ordering = dominance_sorted(b.members);
  const std::size_t m = t.ordering.size();
  t.J.assign(m, std::vector<long>(m, 0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (i != j) t.J[i][j] = engine.coefficient(t.ordering[i], t.ordering[j]);
  return t;
}

std::map<Multipartition, long> sum_formula(const Multipartition& lambda, const Block& b,
                                           const JantzenEngine& engine) {
  if (std::find(b.members.begin(), b.members.end(), lambda) == b.members.end())
    throw InvalidArgument("multipartition is not in the block");
  std::map<Multipartition, long> out;
  for (const auto& mu : b.members) {
    if (mu == lambda) continue;
    const long v = engine.coefficient(lambda, mu);
    if (v != 0) out[mu] = v;
  }
  return out;
}

std::vector<std::vector<long>> bidiagonal_decomposition_matrix(int m) {
  std::vector<std::vector<long>> D(static_cast<std::size_t>(m), std::vector<long>(static_cast<std::size_t>(m), 0));
  for (int i = 0; i < m; ++i) {
    D[i][i] = 1;
    if (i > 0) D[i][i - 1] = 1;
  }
  return D;
}

std::vector<std::vector<long>> cartan_from_decomposition(const std::vector<std::vector<long>>& D) {
  const std::size_t rows = D.size();
  const std::size_t cols = rows ? D.front().size() : 0;
  std::vector<std::vector<long>> C(cols, std::vector<long>(cols, 0));
  for (std::size_t a = 0; a < cols; ++a)
    for (std::size_t b = 0; b < cols; ++b)
      for (std::size_t k = 0; k < rows; ++k) C[a][b] += D[k][a] * D[k][b];
  return C;
}

DecompositionResult decomposition_matrix(const Block& b, const JantzenEngine& engine) {
  if (b.members.empty()) throw InvalidArgument("empty block");
  const int n = b.members.front().size();
  const Verdict v = classify(n, engine.params());
  if (!is_finite_type(v.kind))
    throw RegimeError("decomposition matrices are only determined in the finite regime (verdict " +
                      to_string(v.kind) + ")");

  DecompositionResult res;
  res.table = jantzen_table(b, engine);
  const auto& ord = res.table.ordering;
  const std::size_t m = ord.size();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (dominance(ord[j], ord[i]) != Dominance::Greater)
        throw RegimeError("dominance is not total on the block: " + to_string(ord[i]) + " vs " +
                          to_string(ord[j]));

  res.D = bidiagonal_decomposition_matrix(static_cast<int>(m));
  res.C = cartan_from_decomposition(res.D);

  const auto& J = res.table.J;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j)
      if (J[i][j] != 0) throw std::logic_error("Jantzen validation: nonzero entry above the diagonal");
    if (i == 0) continue;
    if (J[i][i - 1] <= 0)
      throw std::logic_error("Jantzen validation: J[" + std::to_string(i) + "][" + std::to_string(i - 1) +
                             "] is not positive");
    // sum_j J[i][j] D[j] must be c * e_{i-1} with c > 0
    std::vector<long> combo(m, 0);
    for (std::size_t j = 0; j < i; ++j)
      for (std::size_t k = 0; k < m; ++k) combo[k] += J[i][j] * res.D[j][k];
    for (std::size_t k = 0; k < m; ++k) {
      const bool ok = (k == i - 1) ? combo[k] > 0 : combo[k] == 0;
      if (!ok)
        throw std::logic_error("Jantzen validation: sum formula of row " + std::to_string(i) +
                               " is not a positive multiple of one simple");
    }
  }
  return res;
}

}  // namespace aksch
