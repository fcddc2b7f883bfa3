#pragma once

// Recomputes the two infinite-type example blocks (n=5, e=6, f=(0,1,3) and
// n=7, e=16, f=(0,2,8,10)) and the one-parameter comparison, item by item.

#include <string>
#include <vector>

#include "aksch/combinatorics.hpp"
#include "aksch/serialize.hpp"

namespace aksch {

enum class ItemStatus { Pass, Fail, Flagged };
std::string to_string(ItemStatus s);

struct ReportItem {
  std::string id;
  ItemStatus status = ItemStatus::Fail;
  json detail;
};

struct ExampleFixture {
  std::string name;
  int n = 0;
  ParameterSet params;
  std::vector<Multipartition> chain;  // lambda_0 .. lambda_k
};

ExampleFixture s3_fixture();
ExampleFixture g_fixture();

std::vector<ReportItem> worked_examples_report();
json to_json(const std::vector<ReportItem>& items);

}  // namespace aksch
