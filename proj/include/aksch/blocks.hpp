#pragma once

// Residues and the residue-content block decomposition of the r-partitions of n.

#include <set>
#include <vector>

#include "aksch/combinatorics.hpp"
#include "aksch/parameters.hpp"

namespace aksch {

// j - i + f_k reduced into [0, e); the plain integer when e is infinite; f_k
// when q = 1.
long residue(const Node& x, const ParameterSet& p);

// Sorted residue multiset of all nodes.
std::vector<long> residue_content(const Multipartition& lambda, const ParameterSet& p);

struct Block {
  std::vector<long> content;            // sorted multiset
  std::vector<Multipartition> members;  // canonical enumeration order
  std::set<int> varying;                // 1-based components where members differ

  std::set<long> residue_set() const { return {content.begin(), content.end()}; }
};

std::set<int> varying_components(const std::vector<Multipartition>& members);
inline std::set<int> varying_components(const Block& b) { return varying_components(b.members); }

// Blocks ordered by their sorted content.
std::vector<Block> block_partition(int n, const ParameterSet& p);

// The block of (n, p) with the given residue multiset (any order). Throws
// InvalidArgument when no such block exists.
Block find_block(int n, const ParameterSet& p, std::vector<long> content);

struct MoritaReduction {
  int i = 0;  // 1-based, i < j
  int j = 0;
  int reduced_n = 0;
  ParameterSet reduced_params;
  Block reduced_block;
  // projection[t] = (lambda^(i), lambda^(j)) of b.members[t]
  std::vector<Multipartition> projection;
};

// Reduces a block of a finite-type r >= 3 instance to the two-parameter block
// containing the projections onto its two varying components. Throws
// RegimeError outside the finite regime, std::logic_error if the projections
// do not land in a single block.
MoritaReduction morita_reduction(const Block& b, const ParameterSet& p);

}  // namespace aksch
