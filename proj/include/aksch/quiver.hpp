#pragma once

// The bounded quiver algebra A_m on the line 1 - 2 - ... - m, with arrows
// alpha_i : i -> i+1 and beta_i : i+1 -> i, modulo
//   alpha_{m-1} beta_{m-1} = 0,  alpha_{i+1} alpha_i = 0,  beta_i beta_{i+1} = 0,
//   alpha_i beta_i = beta_{i+1} alpha_{i+1}   (1 <= i <= m-2).
//
// Composition is right to left: alpha_{i+1} alpha_i is the path i -> i+1 -> i+2.
// Words are stored in traversal order (first arrow first), so the relation
// alpha_i beta_i = beta_{i+1} alpha_{i+1} becomes the rewriting rule
//   [beta_i, alpha_i] -> [alpha_{i+1}, beta_{i+1}].
// Normal forms of the loops are [alpha_v, beta_v] = beta_v alpha_v at vertices
// 1..m-1; the loop at m is zero.

#include <optional>
#include <string>
#include <vector>

namespace aksch {

struct Arrow {
  enum Kind { Alpha, Beta } kind = Alpha;
  int index = 1;

  int source() const { return kind == Alpha ? index : index + 1; }
  int target() const { return kind == Alpha ? index + 1 : index; }
  friend auto operator<=>(const Arrow&, const Arrow&) = default;
};

// An idempotent (empty word at `vertex`) or a nonempty path.
struct PathWord {
  int vertex = 1;             // meaningful for idempotents
  std::vector<Arrow> arrows;  // traversal order

  bool is_idempotent() const { return arrows.empty(); }
  int source() const { return arrows.empty() ? vertex : arrows.front().source(); }
  int target() const { return arrows.empty() ? vertex : arrows.back().target(); }
  friend auto operator<=>(const PathWord&, const PathWord&) = default;
};

struct Product {
  std::optional<int> index;  // basis index; nullopt for zero
  int sign = 1;
};

class AmAlgebra {
 public:
  // Builds the normal-form basis and multiplication table. Throws
  // std::logic_error if the rewriting system fails its critical-pair check.
  explicit AmAlgebra(int m);

  int m() const { return m_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<PathWord>& basis() const { return basis_; }
  std::string name(int idx) const;      // e1, a1, b1, l1
  std::string path_string(int idx) const;  // right-to-left product, e.g. b1a1

  // a * b: the path b followed by a.
  Product multiply(int a, int b) const { return table_[a][b]; }
  const std::vector<std::vector<Product>>& table() const { return table_; }

  // Normal form of an arbitrary traversal-order word (nullopt if zero).
  std::optional<PathWord> reduce(const PathWord& w) const;
  int index_of(const PathWord& w) const;  // -1 if not a basis word

  // C[i][j] = dim e_i A e_j (1-based vertices stored 0-based).
  std::vector<std::vector<long>> cartan() const;
  // dim Hom(P_i, P_j) = dim e_j A e_i.
  std::vector<std::vector<long>> hom_dimensions() const;
  // Radical layers of the right module e_i A: layer k lists, with
  // multiplicity, the composition factors of P rad^k / P rad^{k+1}.
  std::vector<std::vector<int>> projective_radical_series(int i) const;

  // Number of critical pairs checked at construction.
  int critical_pairs_checked() const { return critical_pairs_; }

 private:
  struct Rule {
    std::vector<Arrow> lhs;
    std::optional<std::vector<Arrow>> rhs;  // nullopt: rewrite to zero
  };

  std::optional<std::vector<Arrow>> rewrite_once(const std::vector<Arrow>& w, std::size_t rule,
                                                 std::size_t pos) const;
  std::optional<std::vector<Arrow>> normal_form(std::vector<Arrow> w) const;
  void check_confluence();

  int m_;
  std::vector<Rule> rules_;
  std::vector<PathWord> basis_;
  std::vector<std::vector<Product>> table_;
  int critical_pairs_ = 0;
};

}  // namespace aksch
