#include "aksch/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "aksch/errors.hpp"

namespace aksch {

std::string to_string(const Node& x) {
  std::ostringstream os;
  os << '(' << x.row << ',' << x.col << ',' << x.comp << ')';
  return os.str();
}

// ---------------------------------------------------------------- Partition

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw InvalidArgument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw InvalidArgument("partition parts must be weakly decreasing");
  }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::row(int i) const {
  if (i < 1 || i > length()) return 0;
  return parts_[static_cast<std::size_t>(i - 1)];
}

int Partition::column(int j) const {
  if (j < 1) return 0;
  int c = 0;
  for (int p : parts_) {
    if (p < j) break;
    ++c;
  }
  return c;
}

std::string to_string(const Partition& p) {
  if (p.empty()) return "-";
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < p.parts().size(); ++i) os << (i ? "," : "") << p.parts()[i];
  os << ')';
  return os.str();
}

// ----------------------------------------------------------- Multipartition

Multipartition::Multipartition(std::vector<Partition> components)
    : components_(std::move(components)) {
  if (components_.empty()) throw InvalidArgument("a multipartition needs at least one component");
}

Multipartition Multipartition::from_parts(const std::vector<std::vector<int>>& parts) {
  std::vector<Partition> comps;
  comps.reserve(parts.size());
  for (const auto& p : parts) comps.emplace_back(p);
  return Multipartition(std::move(comps));
}

int Multipartition::size() const {
  int s = 0;
  for (const auto& p : components_) s += p.size();
  return s;
}

const Partition& Multipartition::component(int k) const {
  if (k < 1 || k > r()) throw InvalidArgument("component index out of range");
  return components_[static_cast<std::size_t>(k - 1)];
}

bool Multipartition::contains(const Node& x) const {
  if (x.comp < 1 || x.comp > r()) return false;
  return component(x.comp).contains(x.row, x.col);
}

std::vector<Node> Multipartition::nodes() const {
  std::vector<Node> out;
  for (int k = 1; k <= r(); ++k) {
    const auto& p = component(k);
    for (int i = 1; i <= p.length(); ++i)
      for (int j = 1; j <= p.row(i); ++j) out.push_back({i, j, k});
  }
  return out;
}

std::vector<std::vector<int>> Multipartition::to_parts() const {
  std::vector<std::vector<int>> out;
  for (const auto& p : components_) out.push_back(p.parts());
  return out;
}

std::string to_string(const Multipartition& mu) {
  std::string s = "(";
  for (int k = 1; k <= mu.r(); ++k) {
    if (k > 1) s += ',';
    s += to_string(mu.component(k));
  }
  return s + ")";
}

// --------------------------------------------------------- MultiComposition

MultiComposition::MultiComposition(std::vector<std::vector<int>> components)
    : components_(std::move(components)) {
  if (components_.empty()) throw InvalidArgument("an r-composition needs at least one component");
  for (const auto& c : components_)
    for (int v : c)
      if (v < 0) throw InvalidArgument("composition entries must be non-negative");
}

int MultiComposition::size() const {
  int s = 0;
  for (const auto& c : components_) s += std::accumulate(c.begin(), c.end(), 0);
  return s;
}

std::vector<int> MultiComposition::bounds() const {
  std::vector<int> m;
  for (const auto& c : components_) m.push_back(static_cast<int>(c.size()));
  return m;
}

MultiComposition MultiComposition::from_multipartition(const Multipartition& mu,
                                                       std::span<const int> bounds) {
  if (static_cast<int>(bounds.size()) != mu.r())
    throw InvalidArgument("bounds must have one entry per component");
  std::vector<std::vector<int>> comps;
  for (int k = 1; k <= mu.r(); ++k) {
    const auto& parts = mu.component(k).parts();
    const int m = bounds[static_cast<std::size_t>(k - 1)];
    if (static_cast<int>(parts.size()) > m)
      throw InvalidArgument("component longer than its length bound");
    std::vector<int> c(parts.begin(), parts.end());
    c.resize(static_cast<std::size_t>(m), 0);
    comps.push_back(std::move(c));
  }
  return MultiComposition(std::move(comps));
}

std::string to_string(const MultiComposition& mu) {
  std::string s = "(";
  for (std::size_t k = 0; k < mu.components().size(); ++k) {
    if (k) s += ',';
    s += '(';
    const auto& c = mu.components()[k];
    for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
    s += ')';
  }
  return s + ")";
}

// -------------------------------------------------------------- enumeration

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

// Weak compositions of n into exactly `slots` parts, lexicographically decreasing.
void compositions_rec(int remaining, int slots, std::vector<int>& cur,
                      std::vector<std::vector<int>>& out) {
  if (slots == 0) {
    if (remaining == 0) out.push_back(cur);
    return;
  }
  if (slots == 1) {
    cur.push_back(remaining);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int v = remaining; v >= 0; --v) {
    cur.push_back(v);
    compositions_rec(remaining - v, slots - 1, cur, out);
    cur.pop_back();
  }
}

// Distributes n over r components (most mass first) and takes the product of
// per-component lists, earlier components varying slowest.
template <class Item, class PerSize>
void product_rec(int k, int r, int remaining, PerSize&& per_size, std::vector<Item>& cur,
                 std::vector<std::vector<Item>>& out) {
  if (k == r - 1) {
    for (const auto& item : per_size(k, remaining)) {
      cur.push_back(item);
      out.push_back(cur);
      cur.pop_back();
    }
    return;
  }
  for (int s = remaining; s >= 0; --s) {
    for (const auto& item : per_size(k, s)) {
      cur.push_back(item);
      product_rec(k + 1, r, remaining - s, per_size, cur, out);
      cur.pop_back();
    }
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw InvalidArgument("n must be non-negative");
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

std::vector<Multipartition> enumerate_multipartitions(int n, int r) {
  if (n < 0) throw InvalidArgument("n must be non-negative");
  if (r < 1) throw InvalidArgument("r must be at least 1");
  std::vector<std::vector<Partition>> by_size;
  for (int s = 0; s <= n; ++s) by_size.push_back(enumerate_partitions(s));
  auto per_size = [&](int, int s) -> const std::vector<Partition>& {
    return by_size[static_cast<std::size_t>(s)];
  };
  std::vector<std::vector<Partition>> tuples;
  std::vector<Partition> cur;
  product_rec<Partition>(0, r, n, per_size, cur, tuples);
  std::vector<Multipartition> out;
  out.reserve(tuples.size());
  for (auto& t : tuples) out.emplace_back(std::move(t));
  return out;
}

std::vector<MultiComposition> enumerate_types(int n, int r, std::span<const int> m) {
  if (n < 0) throw InvalidArgument("n must be non-negative");
  if (r < 1) throw InvalidArgument("r must be at least 1");
  if (static_cast<int>(m.size()) != r) throw InvalidArgument("m must have r entries");
  for (int mk : m)
    if (mk < 1) throw InvalidArgument("length bounds m_k must be positive");
  // cache[k][s]: compositions of s into m[k] slots
  std::vector<std::vector<std::vector<std::vector<int>>>> cache(static_cast<std::size_t>(r));
  for (int k = 0; k < r; ++k) {
    for (int s = 0; s <= n; ++s) {
      std::vector<std::vector<int>> comps;
      std::vector<int> cur;
      compositions_rec(s, m[static_cast<std::size_t>(k)], cur, comps);
      cache[static_cast<std::size_t>(k)].push_back(std::move(comps));
    }
  }
  auto per_size = [&](int k, int s) -> const std::vector<std::vector<int>>& {
    return cache[static_cast<std::size_t>(k)][static_cast<std::size_t>(s)];
  };
  std::vector<std::vector<std::vector<int>>> tuples;
  std::vector<std::vector<int>> cur;
  product_rec<std::vector<int>>(0, r, n, per_size, cur, tuples);
  std::vector<MultiComposition> out;
  out.reserve(tuples.size());
  for (auto& t : tuples) out.emplace_back(std::move(t));
  return out;
}

// ---------------------------------------------------------------- dominance

std::string to_string(Dominance d) {
  switch (d) {
    case Dominance::Greater: return "greater";
    case Dominance::Less: return "less";
    case Dominance::Equal: return "equal";
    case Dominance::Incomparable: return "incomparable";
  }
  return "?";
}

namespace {

Dominance compare_prefix_sums(const std::vector<std::vector<int>>& a,
                              const std::vector<std::vector<int>>& b, std::size_t width) {
  bool ge = true, le = true;
  long base_a = 0, base_b = 0;
  for (std::size_t l = 0; l < a.size(); ++l) {
    long sa = base_a, sb = base_b;
    for (std::size_t k = 0; k < width; ++k) {
      sa += k < a[l].size() ? a[l][k] : 0;
      sb += k < b[l].size() ? b[l][k] : 0;
      if (sa < sb) ge = false;
      if (sa > sb) le = false;
    }
    base_a = sa;
    base_b = sb;
  }
  if (ge && le) return Dominance::Equal;
  if (ge) return Dominance::Greater;
  if (le) return Dominance::Less;
  return Dominance::Incomparable;
}

}  // namespace

Dominance dominance(const Multipartition& a, const Multipartition& b) {
  if (a.r() != b.r()) throw InvalidArgument("dominance: component counts differ");
  if (a.size() != b.size()) throw InvalidArgument("dominance: sizes differ");
  std::size_t width = 1;
  for (const auto* mu : {&a, &b})
    for (const auto& p : mu->components())
      width = std::max(width, static_cast<std::size_t>(p.length()));
  return compare_prefix_sums(a.to_parts(), b.to_parts(), width);
}

Dominance dominance(const MultiComposition& a, const MultiComposition& b) {
  if (a.bounds() != b.bounds()) throw InvalidArgument("dominance: shapes differ");
  if (a.size() != b.size()) throw InvalidArgument("dominance: sizes differ");
  std::size_t width = 1;
  for (int m : a.bounds()) width = std::max(width, static_cast<std::size_t>(m));
  return compare_prefix_sums(a.components(), b.components(), width);
}

// ---------------------------------------------------------------- rim hooks

RimHook rim_hook(const Multipartition& lambda, const Node& x) {
  if (!lambda.contains(x)) throw InvalidArgument("rim_hook: node " + to_string(x) + " outside diagram");
  const Partition& p = lambda.component(x.comp);
  RimHook h;
  for (int a = x.row; a <= p.length(); ++a) {
    for (int b = x.col; b <= p.row(a); ++b) {
      if (!p.contains(a + 1, b + 1)) h.nodes.push_back({a, b, x.comp});
    }
  }
  std::sort(h.nodes.begin(), h.nodes.end());
  const int bottom = p.column(x.col);
  h.leg_length = bottom - x.row;
  h.foot = {bottom, x.col, x.comp};
  return h;
}

Multipartition remove_rim_hook(const Multipartition& lambda, const RimHook& h) {
  if (h.nodes.empty()) throw InvalidArgument("remove_rim_hook: empty hook");
  int top = h.nodes.front().row;
  for (const auto& y : h.nodes) top = std::min(top, y.row);
  const Node corner{top, h.foot.col, h.foot.comp};
  if (!lambda.contains(corner) || rim_hook(lambda, corner) != h)
    throw InvalidArgument("remove_rim_hook: not a rim hook of the multipartition");

  std::vector<Partition> comps = lambda.components();
  std::vector<int> rows = comps[static_cast<std::size_t>(h.foot.comp - 1)].parts();
  for (const auto& y : h.nodes) --rows[static_cast<std::size_t>(y.row - 1)];
  while (!rows.empty() && rows.back() == 0) rows.pop_back();
  comps[static_cast<std::size_t>(h.foot.comp - 1)] = Partition(std::move(rows));
  return Multipartition(std::move(comps));
}

}  // namespace aksch
