#include "aksch/blocks.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "aksch/errors.hpp"

namespace aksch {

long residue(const Node& x, const ParameterSet& p) {
  if (x.comp < 1 || x.comp > p.r()) throw InvalidArgument("residue: component out of range");
  if (p.q_is_one()) return p.f(x.comp);
  const long raw = static_cast<long>(x.content()) + p.f(x.comp);
  if (p.e().is_infinite()) return raw;
  const long e = p.e().value();
  return ((raw % e) + e) % e;
}

std::vector<long> residue_content(const Multipartition& lambda, const ParameterSet& p) {
  if (lambda.r() != p.r()) throw InvalidArgument("multipartition and parameters disagree on r");
  std::vector<long> c;
  for (const auto& x : lambda.nodes()) c.push_back(residue(x, p));
  std::sort(c.begin(), c.end());
  return c;
}

std::set<int> varying_components(const std::vector<Multipartition>& members) {
  std::set<int> out;
  if (members.empty()) return out;
  for (int k = 1; k <= members.front().r(); ++k)
    for (const auto& mu : members)
      if (mu.component(k) != members.front().component(k)) {
        out.insert(k);
        break;
      }
  return out;
}

std::vector<Block> block_partition(int n, const ParameterSet& p) {
  std::map<std::vector<long>, std::vector<Multipartition>> classes;
  for (auto& lambda : enumerate_multipartitions(n, p.r()))
    classes[residue_content(lambda, p)].push_back(std::move(lambda));
  std::vector<Block> out;
  out.reserve(classes.size());
  for (auto& [content, members] : classes) {
    Block b;
    b.content = content;
    b.members = std::move(members);
    b.varying = varying_components(b.members);
    out.push_back(std::move(b));
  }
  return out;
}

Block find_block(int n, const ParameterSet& p, std::vector<long> content) {
  std::sort(content.begin(), content.end());
  for (auto& b : block_partition(n, p))
    if (b.content == content) return b;
  throw InvalidArgument("no block with the requested residue content");
}

MoritaReduction morita_reduction(const Block& b, const ParameterSet& p) {
  if (b.members.empty()) throw InvalidArgument("morita_reduction: empty block");
  if (p.r() < 3) throw InvalidArgument("morita_reduction needs r >= 3");
  const int n = b.members.front().size();
  const Verdict v = classify(n, p);
  if (!is_finite_type(v.kind))
    throw RegimeError("morita_reduction: parameters are not in the finite regime (" +
                      to_string(v.kind) + ")");

  std::set<int> vary = varying_components(b);
  if (vary.size() > 2)
    throw std::logic_error("morita_reduction: block varies in more than two components");
  for (int k = 1; vary.size() < 2; ++k) vary.insert(k);

  MoritaReduction red;
  red.i = *vary.begin();
  red.j = *std::next(vary.begin());
  const Multipartition& first = b.members.front();
  red.reduced_n = first.component(red.i).size() + first.component(red.j).size();
  red.reduced_params = ParameterSet::root_of_unity(p.e(), {p.f(red.i), p.f(red.j)}, p.char_p());

  for (const auto& lambda : b.members)
    red.projection.emplace_back(std::vector<Partition>{lambda.component(red.i), lambda.component(red.j)});

  const std::vector<long> content = residue_content(red.projection.front(), red.reduced_params);
  for (const auto& mu : red.projection) {
    if (mu.size() != red.reduced_n || residue_content(mu, red.reduced_params) != content)
      throw std::logic_error("morita_reduction: projections span several reduced blocks");
  }
  red.reduced_block = find_block(red.reduced_n, red.reduced_params, content);
  return red;
}

}  // namespace aksch
