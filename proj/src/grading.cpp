#include "aksch/grading.hpp"

#include <numeric>
#include <set>
#include <stdexcept>

#include "aksch/errors.hpp"

namespace aksch {

LevelComposition::LevelComposition(std::vector<int> sizes) : sizes_(std::move(sizes)) {
  if (sizes_.empty()) throw InvalidArgument("level composition needs at least one level");
  for (int s : sizes_)
    if (s < 1) throw InvalidArgument("level sizes must be positive");
}

int LevelComposition::r() const { return std::accumulate(sizes_.begin(), sizes_.end(), 0); }

int LevelComposition::offset(int k) const {
  if (k < 1 || k > g()) throw InvalidArgument("level out of range");
  return std::accumulate(sizes_.begin(), sizes_.begin() + (k - 1), 0);
}

int LevelComposition::level_of(int comp) const {
  int acc = 0;
  for (int k = 0; k < g(); ++k) {
    acc += sizes_[static_cast<std::size_t>(k)];
    if (comp <= acc) return k + 1;
  }
  throw InvalidArgument("component out of range for the level composition");
}

namespace {

std::vector<int> weights_from_sizes(const std::vector<int>& comp_sizes, const LevelComposition& p) {
  if (static_cast<int>(comp_sizes.size()) != p.r())
    throw InvalidArgument("component count does not match the level composition");
  std::vector<int> w(static_cast<std::size_t>(p.g()), 0);
  for (std::size_t c = 0; c < comp_sizes.size(); ++c)
    w[static_cast<std::size_t>(p.level_of(static_cast<int>(c) + 1) - 1)] += comp_sizes[c];
  return w;
}

void check_eps(std::span<const int> eps, const LevelComposition& p, int n) {
  if (static_cast<int>(eps.size()) != p.g()) throw InvalidArgument("weight vector must have g entries");
  long total = 0;
  for (int v : eps) {
    if (v < 0) throw InvalidArgument("weight vector entries must be non-negative");
    total += v;
  }
  if (total != n) throw InvalidArgument("weight vector must sum to n");
}

}  // namespace

std::vector<int> alpha_p(const Multipartition& mu, const LevelComposition& p) {
  std::vector<int> sizes;
  for (const auto& part : mu.components()) sizes.push_back(part.size());
  return weights_from_sizes(sizes, p);
}

std::vector<int> alpha_p(const MultiComposition& mu, const LevelComposition& p) {
  std::vector<int> sizes;
  for (const auto& comp : mu.components()) sizes.push_back(std::accumulate(comp.begin(), comp.end(), 0));
  return weights_from_sizes(sizes, p);
}

std::vector<std::vector<int>> weight_vectors(int n, int g) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int left, int slots) -> void {
    if (slots == 1) {
      cur.push_back(left);
      out.push_back(cur);
      cur.pop_back();
      return;
    }
    for (int v = left; v >= 0; --v) {
      cur.push_back(v);
      self(self, left - v, slots - 1);
      cur.pop_back();
    }
  };
  if (g >= 1) rec(rec, n, g);
  return out;
}

std::uint64_t count_weighted(const Multipartition& lambda, const LevelComposition& p,
                             std::span<const int> eps, std::span<const int> m) {
  check_eps(eps, p, lambda.size());
  if (lambda.r() != p.r()) throw InvalidArgument("component count does not match the level composition");
  return count_semistandard_bucketed(lambda, m, [&](const Entry& e) { return p.level_of(e.c) - 1; }, eps);
}

TableauSplit split_tableaux(const Multipartition& lambda, const LevelComposition& p,
                            std::span<const int> eps, std::span<const int> m) {
  check_eps(eps, p, lambda.size());
  if (lambda.r() != p.r()) throw InvalidArgument("component count does not match the level composition");
  auto level = [&](const Entry& e) { return p.level_of(e.c) - 1; };
  const std::vector<int> own = alpha_p(lambda, p);

  TableauSplit out;
  for_each_semistandard(lambda, m, level, own, [&](const SemistandardTableau& t) { out.plus.push_back(t); });
  for_each_semistandard(lambda, m, level, eps, [&](const SemistandardTableau& t) { out.epsilon.push_back(t); });
  out.minus_count = count_semistandard(lambda, m) - out.plus.size();

  const bool same = std::equal(own.begin(), own.end(), eps.begin(), eps.end());
  if (same) {
    if (out.epsilon != out.plus) throw std::logic_error("split_tableaux: epsilon set differs from the plus set");
  } else {
    for (const auto& t : out.epsilon)
      if (alpha_p(t.type(m), p) == own)
        throw std::logic_error("split_tableaux: epsilon tableau lies in the plus set");
  }
  return out;
}

GradedDimReport graded_dim_check(int n, std::span<const int> m, const LevelComposition& p,
                                 std::span<const int> eps) {
  check_eps(eps, p, n);
  if (static_cast<int>(m.size()) != p.r()) throw InvalidArgument("m must have r entries");
  GradedDimReport rep;
  rep.eps.assign(eps.begin(), eps.end());
  for (const auto& lambda : enumerate_multipartitions(n, p.r())) {
    if (alpha_p(lambda, p) != rep.eps) continue;
    const std::uint64_t c = count_weighted(lambda, p, eps, m);
    rep.lhs += c * c;
  }
  rep.rhs = 1;
  for (int k = 1; k <= p.g(); ++k) {
    const auto slice = m.subspan(static_cast<std::size_t>(p.offset(k)),
                                 static_cast<std::size_t>(p.sizes()[static_cast<std::size_t>(k - 1)]));
    const std::uint64_t f = dim_schur(eps[static_cast<std::size_t>(k - 1)], static_cast<int>(slice.size()), slice);
    rep.factors.push_back(f);
    rep.rhs *= f;
  }
  rep.pass = rep.lhs == rep.rhs;
  return rep;
}

}  // namespace aksch
