#include "aksch/serialize.hpp"

#include "aksch/errors.hpp"

namespace aksch {

json to_json(const ExtendedInt& x) {
  if (x.is_infinite()) return "inf";
  return x.value();
}

json to_json(const Multipartition& mu) { return mu.to_parts(); }

json to_json(const MultiComposition& mu) { return mu.components(); }

json to_json(const ParameterSet& p) {
  json j;
  j["r"] = p.r();
  j["char"] = p.char_p();
  j["qIsOne"] = p.q_is_one();
  if (p.q_is_one()) {
    j["e"] = nullptr;
    j["f"] = nullptr;
  } else {
    j["e"] = to_json(p.e());
    j["f"] = p.f();
  }
  return j;
}

json to_json(const SpreadInvariants& s) {
  json j;
  auto list = [](const std::vector<ExtendedInt>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(to_json(x));
    return a;
  };
  j["fSorted"] = list(s.f_sorted);
  j["gaps"] = list(s.gaps);
  j["fPlus1"] = to_json(s.f_plus1);
  j["fPlus2"] = to_json(s.f_plus2);
  j["gMin"] = to_json(s.g_min);
  return j;
}

json to_json(const Verdict& v) {
  auto opt = [](const std::optional<ExtendedInt>& x) -> json { return x ? to_json(*x) : json(nullptr); };
  json j;
  j["kind"] = to_string(v.kind);
  j["bounds"] = {{"e", opt(v.e)},
                 {"twoF1plus4", opt(v.two_f1_plus4)},
                 {"f2plus1", opt(v.f2_plus1)},
                 {"gplus2", opt(v.g_plus2)}};
  j["note"] = v.note;
  return j;
}

json to_json(const Block& b) {
  json members = json::array();
  for (const auto& mu : b.members) members.push_back(to_json(mu));
  return {{"content", b.content}, {"members", members}, {"varying", b.varying}};
}

json to_json(const MoritaReduction& red) {
  json proj = json::array();
  for (const auto& mu : red.projection) proj.push_back(to_json(mu));
  return {{"i", red.i},
          {"j", red.j},
          {"n", red.reduced_n},
          {"params", to_json(red.reduced_params)},
          {"reducedBlock", to_json(red.reduced_block)},
          {"projection", proj}};
}

json to_json(const ModularConfig& cfg, int n) {
  json deform = json::array();
  for (const auto& c : cfg.deform) deform.push_back(c ? json(*c) : json("pure"));
  return {{"deformExponents", deform},
          {"qDeformExponent", cfg.q_deform ? json(*cfg.q_deform) : json(nullptr)},
          {"truncation", cfg.truncation_for(n)}};
}

json to_json(const JantzenTable& t) {
  json ord = json::array();
  for (const auto& mu : t.ordering) ord.push_back(to_json(mu));
  return {{"ordering", ord}, {"J", t.J}};
}

json to_json(const DecompositionResult& d) {
  json j = to_json(d.table);
  j["D"] = d.D;
  j["C"] = d.C;
  return j;
}

json to_json(const SemistandardTableau& t) {
  json cells = json::array();
  for (const auto& [x, e] : t.entries()) cells.push_back({{"node", {x.row, x.col, x.comp}}, {"entry", {e.a, e.c}}});
  return {{"shape", to_json(t.shape())}, {"cells", cells}};
}

json to_json(const AmAlgebra& a) {
  json basis = json::array();
  for (int i = 0; i < a.dim(); ++i) {
    const auto& w = a.basis()[static_cast<std::size_t>(i)];
    basis.push_back({{"name", a.name(i)}, {"path", a.path_string(i)}, {"source", w.source()}, {"target", w.target()}});
  }
  json table = json::array();
  for (int x = 0; x < a.dim(); ++x) {
    json row = json::array();
    for (int y = 0; y < a.dim(); ++y) {
      const Product p = a.multiply(x, y);
      if (!p.index) row.push_back("0");
      else row.push_back((p.sign < 0 ? "-" : "") + a.name(*p.index));
    }
    table.push_back(row);
  }
  json radical = json::array();
  for (int v = 1; v <= a.m(); ++v) radical.push_back(a.projective_radical_series(v));
  return {{"m", a.m()},
          {"dim", a.dim()},
          {"basis", basis},
          {"multiplication", table},
          {"cartan", a.cartan()},
          {"homDimensions", a.hom_dimensions()},
          {"radicalSeries", radical},
          {"criticalPairs", a.critical_pairs_checked()}};
}

json to_json(const GradedDimReport& rep) {
  return {{"epsilon", rep.eps}, {"lhs", rep.lhs}, {"rhs", rep.rhs}, {"factors", rep.factors}, {"pass", rep.pass}};
}

Multipartition multipartition_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw InvalidArgument("multipartition must be a non-empty array of arrays");
  std::vector<std::vector<int>> parts;
  for (const auto& comp : j) {
    if (!comp.is_array()) throw InvalidArgument("multipartition components must be arrays");
    std::vector<int> row;
    for (const auto& v : comp) {
      if (!v.is_number_integer()) throw InvalidArgument("partition parts must be integers");
      row.push_back(v.get<int>());
    }
    parts.push_back(std::move(row));
  }
  return Multipartition::from_parts(parts);
}

}  // namespace aksch
