#pragma once

// Partitions, r-compositions ("types"), multipartitions, nodes and rim hooks.
//
// Nodes are 1-based (row, column, component). The canonical enumeration order
// puts the most mass in the earliest component first and lists partitions of
// a fixed size in lexicographically decreasing order, e.g. for n = 2, r = 2:
//   ((2),-) ((1,1),-) ((1),(1)) (-,(2)) (-,(1,1))

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace aksch {

struct Node {
  int row = 1;
  int col = 1;
  int comp = 1;

  int content() const { return col - row; }
  friend auto operator<=>(const Node&, const Node&) = default;
};

std::string to_string(const Node& x);

class Partition {
 public:
  Partition() = default;
  // Throws InvalidArgument unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const;
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  // Row length for a 1-based row; 0 past the last row.
  int row(int i) const;
  // Column length for a 1-based column.
  int column(int j) const;
  bool contains(int i, int j) const { return i >= 1 && j >= 1 && j <= row(i); }

  int arm(int i, int j) const { return row(i) - j; }
  int leg(int i, int j) const { return column(j) - i; }
  int hook_length(int i, int j) const { return arm(i, j) + leg(i, j) + 1; }

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

class Multipartition {
 public:
  Multipartition() = default;
  explicit Multipartition(std::vector<Partition> components);
  // Convenience: nested part lists, e.g. {{2,1},{}}.
  static Multipartition from_parts(const std::vector<std::vector<int>>& parts);

  int r() const { return static_cast<int>(components_.size()); }
  int size() const;
  const std::vector<Partition>& components() const { return components_; }
  const Partition& component(int k) const;  // 1-based

  bool contains(const Node& x) const;
  // All nodes in component, row, column order.
  std::vector<Node> nodes() const;
  std::vector<std::vector<int>> to_parts() const;

  friend auto operator<=>(const Multipartition&, const Multipartition&) = default;

 private:
  std::vector<Partition> components_;
};

std::string to_string(const Partition& p);
// Renders "((2,1),-)" style.
std::string to_string(const Multipartition& mu);

// An r-composition with a fixed number of slots per component: component k is
// a vector of exactly m_k non-negative integers.
class MultiComposition {
 public:
  MultiComposition() = default;
  explicit MultiComposition(std::vector<std::vector<int>> components);

  int r() const { return static_cast<int>(components_.size()); }
  int size() const;
  const std::vector<std::vector<int>>& components() const { return components_; }
  std::vector<int> bounds() const;

  // Multipartition padded with zeros to the given slot counts. Throws if a
  // component is longer than its bound.
  static MultiComposition from_multipartition(const Multipartition& mu,
                                              std::span<const int> bounds);

  friend auto operator<=>(const MultiComposition&, const MultiComposition&) = default;

 private:
  std::vector<std::vector<int>> components_;
};

std::string to_string(const MultiComposition& mu);

// Partitions of n in lexicographically decreasing order.
std::vector<Partition> enumerate_partitions(int n);
std::vector<Multipartition> enumerate_multipartitions(int n, int r);
// All r-compositions of n with component k having exactly m[k] slots.
std::vector<MultiComposition> enumerate_types(int n, int r, std::span<const int> m);

enum class Dominance { Greater, Less, Equal, Incomparable };
std::string to_string(Dominance d);

Dominance dominance(const Multipartition& a, const Multipartition& b);
Dominance dominance(const MultiComposition& a, const MultiComposition& b);
inline bool dominates(const Multipartition& a, const Multipartition& b) {
  return dominance(a, b) == Dominance::Greater;
}

struct RimHook {
  std::vector<Node> nodes;  // sorted
  int leg_length = 0;
  Node foot;

  int size() const { return static_cast<int>(nodes.size()); }
  friend bool operator==(const RimHook&, const RimHook&) = default;
};

// The rim hook of x: nodes (a,b,k) of [lambda] with a >= i, b >= j and
// (a+1,b+1,k) not in [lambda]. Its foot is the leftmost node of its lowest row.
RimHook rim_hook(const Multipartition& lambda, const Node& x);
// Diagram [lambda] minus the hook. Throws unless h is a rim hook of lambda.
Multipartition remove_rim_hook(const Multipartition& lambda, const RimHook& h);

}  // namespace aksch
