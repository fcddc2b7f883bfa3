#include "aksch/tableaux.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "aksch/errors.hpp"

namespace aksch {

SemistandardTableau::SemistandardTableau(Multipartition shape, std::map<Node, Entry> entries)
    : shape_(std::move(shape)), entries_(std::move(entries)) {}

MultiComposition SemistandardTableau::type(std::span<const int> m) const {
  if (static_cast<int>(m.size()) != shape_.r()) throw InvalidArgument("type: m must have r entries");
  std::vector<std::vector<int>> comps;
  for (int mk : m) comps.emplace_back(static_cast<std::size_t>(mk), 0);
  for (const auto& [node, entry] : entries_) {
    auto& comp = comps.at(static_cast<std::size_t>(entry.c - 1));
    comp.at(static_cast<std::size_t>(entry.a - 1)) += 1;
  }
  return MultiComposition(std::move(comps));
}

namespace {

using u128 = unsigned __int128;

std::uint64_t narrow(u128 v) {
  if (v > std::numeric_limits<std::uint64_t>::max())
    throw std::overflow_error("tableau count exceeds 64 bits");
  return static_cast<std::uint64_t>(v);
}

u128 checked_mul(u128 a, u128 b) {
  if (a != 0 && b > std::numeric_limits<u128>::max() / a)
    throw std::overflow_error("tableau count overflow");
  return a * b;
}

// n! / prod(hooks), dividing as we go to stay small.
u128 standard_count_single(const Partition& p) {
  const int n = p.size();
  std::vector<int> hooks;
  for (int i = 1; i <= p.length(); ++i)
    for (int j = 1; j <= p.row(i); ++j) hooks.push_back(p.hook_length(i, j));
  u128 num = 1;
  for (int k = 2; k <= n; ++k) num = checked_mul(num, static_cast<u128>(k));
  u128 den = 1;
  for (int h : hooks) den = checked_mul(den, static_cast<u128>(h));
  return num / den;
}

struct Filler {
  const Multipartition& shape;
  std::vector<Node> nodes;
  std::vector<Entry> letters;   // ordered alphabet
  std::vector<int> first_letter_for_comp;  // index of first letter with c >= k
  std::vector<int> bucket;      // per letter
  std::vector<int> budget;
  std::vector<int> assigned;    // letter index per node
  std::map<Node, std::size_t> index_of;

  Filler(const Multipartition& lambda, std::span<const int> m,
         const std::function<int(const Entry&)>& bucket_of, std::span<const int> budgets)
      : shape(lambda), nodes(lambda.nodes()), budget(budgets.begin(), budgets.end()) {
    if (static_cast<int>(m.size()) != lambda.r())
      throw InvalidArgument("semistandard: m must have r entries");
    for (int c = 1; c <= lambda.r(); ++c) {
      first_letter_for_comp.push_back(static_cast<int>(letters.size()));
      for (int a = 1; a <= m[static_cast<std::size_t>(c - 1)]; ++a) letters.push_back({a, c});
    }
    for (const auto& e : letters) {
      const int b = bucket_of(e);
      if (b >= static_cast<int>(budget.size())) throw InvalidArgument("bucket index out of range");
      bucket.push_back(b);  // negative: letter forbidden
    }
    for (std::size_t i = 0; i < nodes.size(); ++i) index_of[nodes[i]] = i;
    assigned.assign(nodes.size(), -1);
  }

  bool feasible() const {
    long total = 0;
    for (int b : budget) {
      if (b < 0) return false;
      total += b;
    }
    return total == static_cast<long>(nodes.size());
  }

  template <class Leaf>
  void run(std::size_t pos, Leaf&& leaf) {
    if (pos == nodes.size()) {
      leaf();
      return;
    }
    const Node& x = nodes[pos];
    int lo = first_letter_for_comp[static_cast<std::size_t>(x.comp - 1)];
    if (x.col > 1) lo = std::max(lo, assigned[index_of.at({x.row, x.col - 1, x.comp})]);
    if (x.row > 1) lo = std::max(lo, assigned[index_of.at({x.row - 1, x.col, x.comp})] + 1);
    for (int l = lo; l < static_cast<int>(letters.size()); ++l) {
      const int b = bucket[static_cast<std::size_t>(l)];
      if (b < 0 || budget[static_cast<std::size_t>(b)] == 0) continue;
      --budget[static_cast<std::size_t>(b)];
      assigned[pos] = l;
      run(pos + 1, leaf);
      ++budget[static_cast<std::size_t>(b)];
    }
    assigned[pos] = -1;
  }
};

}  // namespace

std::uint64_t count_standard(const Multipartition& lambda) {
  u128 total = 1;
  int placed = 0;
  for (const auto& p : lambda.components()) {
    // multinomial built incrementally: C(placed + |p|, |p|)
    u128 binom = 1;
    for (int i = 1; i <= p.size(); ++i) {
      binom = checked_mul(binom, static_cast<u128>(placed + i));
      binom /= static_cast<u128>(i);
    }
    placed += p.size();
    total = checked_mul(total, checked_mul(binom, standard_count_single(p)));
  }
  return narrow(total);
}

void for_each_semistandard(const Multipartition& lambda, std::span<const int> m,
                           const std::function<int(const Entry&)>& bucket_of,
                           std::span<const int> budgets,
                           const std::function<void(const SemistandardTableau&)>& visit) {
  Filler f(lambda, m, bucket_of, budgets);
  if (!f.feasible()) return;
  f.run(0, [&] {
    std::map<Node, Entry> entries;
    for (std::size_t i = 0; i < f.nodes.size(); ++i)
      entries.emplace(f.nodes[i], f.letters[static_cast<std::size_t>(f.assigned[i])]);
    visit(SemistandardTableau(lambda, std::move(entries)));
  });
}

std::uint64_t count_semistandard_bucketed(const Multipartition& lambda, std::span<const int> m,
                                          const std::function<int(const Entry&)>& bucket_of,
                                          std::span<const int> budgets) {
  Filler f(lambda, m, bucket_of, budgets);
  if (!f.feasible()) return 0;
  std::uint64_t count = 0;
  f.run(0, [&] { ++count; });
  return count;
}

std::vector<SemistandardTableau> enumerate_semistandard(const Multipartition& lambda,
                                                        const MultiComposition& type) {
  if (type.r() != lambda.r()) throw InvalidArgument("semistandard: component counts differ");
  if (type.size() != lambda.size()) throw InvalidArgument("semistandard: sizes differ");
  const std::vector<int> m = type.bounds();
  std::vector<int> offsets;
  std::vector<int> budgets;
  for (const auto& comp : type.components()) {
    offsets.push_back(static_cast<int>(budgets.size()));
    budgets.insert(budgets.end(), comp.begin(), comp.end());
  }
  auto bucket_of = [&](const Entry& e) {
    return offsets[static_cast<std::size_t>(e.c - 1)] + e.a - 1;
  };
  std::vector<SemistandardTableau> out;
  for_each_semistandard(lambda, m, bucket_of, budgets,
                        [&](const SemistandardTableau& t) { out.push_back(t); });
  return out;
}

std::uint64_t count_semistandard(const Multipartition& lambda, std::span<const int> m) {
  const int n = lambda.size();
  const std::vector<int> budgets{n};
  return count_semistandard_bucketed(lambda, m, [](const Entry&) { return 0; }, budgets);
}

std::vector<int> default_bounds(int n, int r) {
  return std::vector<int>(static_cast<std::size_t>(r), std::max(n, 1));
}

std::uint64_t dim_hecke(int n, int r) {
  u128 total = 0;
  for (const auto& lambda : enumerate_multipartitions(n, r)) {
    const u128 c = count_standard(lambda);
    total += checked_mul(c, c);
  }
  return narrow(total);
}

std::uint64_t dim_schur(int n, int r, std::span<const int> m) {
  std::vector<int> bounds = m.empty() ? default_bounds(n, r) : std::vector<int>(m.begin(), m.end());
  if (static_cast<int>(bounds.size()) != r) throw InvalidArgument("dim_schur: m must have r entries");
  u128 total = 0;
  for (const auto& lambda : enumerate_multipartitions(n, r)) {
    const u128 c = count_semistandard(lambda, bounds);
    total += checked_mul(c, c);
  }
  return narrow(total);
}

}  // namespace aksch
