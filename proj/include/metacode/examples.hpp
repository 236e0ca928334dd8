#pragma once

#include <string>
#include <vector>

#include "metacode/code.hpp"
#include "metacode/units.hpp"

namespace metacode {

// A worked code: the idempotent (or generator) whose left ideal is the code.
struct ExampleCode {
  std::string id;
  std::string group;
  u64 q = 0;
  std::string construction;
  Alg generator;
  Side side = Side::Left;
  // set for conjugated idempotents: the unit used and its unconjugated partner
  bool has_unit = false;
  UnitElement unit;
  std::string base_id;
};

// ids of the worked examples, in a fixed order
std::vector<std::string> example_ids();
ExampleCode build_example(const std::string& id);

// the pci of the pair (H, K) given by words, label k; throws when the pair
// yields no pci for that k
Alg pci_of(const Group& G, const Field& F, const std::vector<std::string>& h, const std::vector<std::string>& k,
           u64 label = 1);

}  // namespace metacode
