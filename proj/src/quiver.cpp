#include "aksch/quiver.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

#include "aksch/errors.hpp"

namespace aksch {

namespace {

Arrow alpha(int i) { return {Arrow::Alpha, i}; }
Arrow beta(int i) { return {Arrow::Beta, i}; }

bool composable(const std::vector<Arrow>& w) {
  for (std::size_t k = 0; k + 1 < w.size(); ++k)
    if (w[k].target() != w[k + 1].source()) return false;
  return true;
}

bool occurs_at(const std::vector<Arrow>& w, const std::vector<Arrow>& pat, std::size_t pos) {
  if (pos + pat.size() > w.size()) return false;
  return std::equal(pat.begin(), pat.end(), w.begin() + static_cast<std::ptrdiff_t>(pos));
}

}  // namespace

AmAlgebra::AmAlgebra(int m) : m_(m) {
  if (m < 1) throw InvalidArgument("A_m needs m >= 1");
  if (m >= 2) rules_.push_back({{beta(m - 1), alpha(m - 1)}, std::nullopt});
  for (int i = 1; i + 1 <= m - 1; ++i) {
    rules_.push_back({{alpha(i), alpha(i + 1)}, std::nullopt});
    rules_.push_back({{beta(i + 1), beta(i)}, std::nullopt});
    rules_.push_back({{beta(i), alpha(i)}, std::vector<Arrow>{alpha(i + 1), beta(i + 1)}});
  }
  check_confluence();

  // Irreducible words, grown one arrow at a time from the arrows themselves.
  for (int v = 1; v <= m; ++v) basis_.push_back({v, {}});
  std::vector<Arrow> arrows;
  for (int i = 1; i < m; ++i) arrows.push_back(alpha(i));
  for (int i = 1; i < m; ++i) arrows.push_back(beta(i));
  std::deque<std::vector<Arrow>> frontier;
  for (const auto& a : arrows) frontier.push_back({a});
  std::set<std::vector<Arrow>> seen;
  std::vector<std::vector<Arrow>> paths;
  while (!frontier.empty()) {
    auto w = std::move(frontier.front());
    frontier.pop_front();
    if (!seen.insert(w).second) continue;
    bool irreducible = true;
    for (std::size_t r = 0; r < rules_.size() && irreducible; ++r)
      for (std::size_t pos = 0; pos < w.size(); ++pos)
        if (occurs_at(w, rules_[r].lhs, pos)) {
          irreducible = false;
          break;
        }
    if (!irreducible) continue;
    paths.push_back(w);
    for (const auto& a : arrows)
      if (a.source() == w.back().target()) {
        auto longer = w;
        longer.push_back(a);
        frontier.push_back(std::move(longer));
      }
  }
  // idempotents, alphas, betas, loops
  std::sort(paths.begin(), paths.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  for (auto& w : paths) basis_.push_back({w.front().source(), std::move(w)});

  const int d = dim();
  table_.assign(d, std::vector<Product>(d));
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      const PathWord& x = basis_[a];
      const PathWord& y = basis_[b];
      if (y.target() != x.source()) continue;
      PathWord w;
      w.vertex = y.source();
      w.arrows = y.arrows;
      w.arrows.insert(w.arrows.end(), x.arrows.begin(), x.arrows.end());
      if (auto nf = reduce(w)) {
        const int idx = index_of(*nf);
        if (idx < 0) throw std::logic_error("A_m: reduced word is not a basis element");
        table_[a][b].index = idx;
      }
    }
}

std::optional<std::vector<Arrow>> AmAlgebra::rewrite_once(const std::vector<Arrow>& w, std::size_t rule,
                                                          std::size_t pos) const {
  const Rule& r = rules_[rule];
  if (!r.rhs) return std::nullopt;
  std::vector<Arrow> out(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
  out.insert(out.end(), r.rhs->begin(), r.rhs->end());
  out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(pos + r.lhs.size()), w.end());
  return out;
}

// Leftmost-first rewriting. Terminates: the only nonzero rule raises an
// arrow index and indices are bounded by m.
std::optional<std::vector<Arrow>> AmAlgebra::normal_form(std::vector<Arrow> w) const {
  for (;;) {
    bool changed = false;
    for (std::size_t pos = 0; pos < w.size() && !changed; ++pos)
      for (std::size_t r = 0; r < rules_.size(); ++r)
        if (occurs_at(w, rules_[r].lhs, pos)) {
          auto next = rewrite_once(w, r, pos);
          if (!next) return std::nullopt;
          w = std::move(*next);
          changed = true;
          break;
        }
    if (!changed) return w;
  }
}

// Every overlap of two left-hand sides must resolve to the same normal form
// whichever rule fires first.
void AmAlgebra::check_confluence() {
  for (std::size_t r1 = 0; r1 < rules_.size(); ++r1)
    for (std::size_t r2 = 0; r2 < rules_.size(); ++r2) {
      const auto& l1 = rules_[r1].lhs;
      const auto& l2 = rules_[r2].lhs;
      for (std::size_t k = 1; k < l1.size() && k < l2.size() + 1; ++k) {
        // suffix of l1 of length k equals prefix of l2
        if (k > l2.size() || !std::equal(l1.end() - static_cast<std::ptrdiff_t>(k), l1.end(), l2.begin()))
          continue;
        std::vector<Arrow> w = l1;
        w.insert(w.end(), l2.begin() + static_cast<std::ptrdiff_t>(k), l2.end());
        if (!composable(w)) continue;
        ++critical_pairs_;
        auto via1 = rewrite_once(w, r1, 0);
        auto via2 = rewrite_once(w, r2, l1.size() - k);
        auto nf1 = via1 ? normal_form(*via1) : std::nullopt;
        auto nf2 = via2 ? normal_form(*via2) : std::nullopt;
        if (nf1 != nf2) throw std::logic_error("A_m rewriting system is not confluent");
      }
    }
}

std::optional<PathWord> AmAlgebra::reduce(const PathWord& w) const {
  if (!composable(w.arrows)) return std::nullopt;
  if (w.arrows.empty()) return w;
  auto nf = normal_form(w.arrows);
  if (!nf) return std::nullopt;
  return PathWord{nf->front().source(), std::move(*nf)};
}

int AmAlgebra::index_of(const PathWord& w) const {
  for (int i = 0; i < dim(); ++i) {
    const PathWord& b = basis_[i];
    if (b.arrows == w.arrows && (!b.arrows.empty() || b.vertex == w.vertex)) return i;
  }
  return -1;
}

std::string AmAlgebra::name(int idx) const {
  const PathWord& w = basis_.at(idx);
  if (w.is_idempotent()) return "e" + std::to_string(w.vertex);
  if (w.arrows.size() == 1)
    return std::string(w.arrows[0].kind == Arrow::Alpha ? "a" : "b") + std::to_string(w.arrows[0].index);
  if (w.arrows.size() == 2 && w.source() == w.target()) return "l" + std::to_string(w.source());
  return path_string(idx);
}

std::string AmAlgebra::path_string(int idx) const {
  const PathWord& w = basis_.at(idx);
  if (w.is_idempotent()) return "e" + std::to_string(w.vertex);
  std::string s;
  for (auto it = w.arrows.rbegin(); it != w.arrows.rend(); ++it)
    s += std::string(it->kind == Arrow::Alpha ? "a" : "b") + std::to_string(it->index);
  return s;
}

std::vector<std::vector<long>> AmAlgebra::cartan() const {
  std::vector<std::vector<long>> C(m_, std::vector<long>(m_, 0));
  for (const auto& w : basis_) ++C[w.target() - 1][w.source() - 1];
  return C;
}

std::vector<std::vector<long>> AmAlgebra::hom_dimensions() const {
  const auto C = cartan();
  std::vector<std::vector<long>> H(m_, std::vector<long>(m_, 0));
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < m_; ++j) H[i][j] = C[j][i];
  return H;
}

std::vector<std::vector<int>> AmAlgebra::projective_radical_series(int i) const {
  if (i < 1 || i > m_) throw InvalidArgument("vertex out of range");
  // rad^k as a set of basis indices; products of basis elements are signed
  // basis elements or zero, so spans stay coordinate subspaces.
  std::set<int> rad;
  for (int b = 0; b < dim(); ++b)
    if (!basis_[b].is_idempotent()) rad.insert(b);
  std::vector<std::set<int>> powers{{}, rad};
  for (int b = 0; b < dim(); ++b) powers[0].insert(b);
  while (!powers.back().empty()) {
    std::set<int> next;
    for (int x : powers.back())
      for (int y : rad)
        if (auto p = table_[x][y].index) next.insert(*p);
    powers.push_back(std::move(next));
  }
  // e_i A rad^k: basis elements of rad^k ending at i
  std::vector<std::vector<int>> layers;
  for (std::size_t k = 0; k + 1 < powers.size(); ++k) {
    std::vector<int> layer;
    for (int b : powers[k])
      if (basis_[b].target() == i && !powers[k + 1].count(b)) layer.push_back(basis_[b].source());
    std::sort(layer.begin(), layer.end());
    if (layer.empty()) break;
    layers.push_back(std::move(layer));
  }
  return layers;
}

}  // namespace aksch
