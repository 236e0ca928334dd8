#pragma once

#include <string>
#include <vector>

#include "metacode/code.hpp"

namespace metacode {

// One measured code against its dimension formula and distance window.
struct AuditRow {
  std::string group;
  u64 q = 0;
  std::string kind;  // "(G,K)", "e_2^n", "e_p^n", "e^beta"
  std::string pair;
  u64 label = 0;     // k
  u64 beta = 0;
  CodeBounds bounds;
  u64 k = 0;
  Distance d;
  bool dim_ok = false;
  bool basis_ok = true;
  // contained: [d_lo, d_hi] inside the window; violated: disjoint from it
  bool window_ok = false;
  bool window_violated = false;
  bool ok() const { return dim_ok && basis_ok && window_ok; }
  std::string describe() const;
};

// (G,K)-type pcis, e_{2^n,k}, e_{p^n,k} and e^beta codes of G over F that
// with a known dimension formula
std::vector<AuditRow> audit_codes(const Group& G, const Field& F, const std::vector<ShodaPair>& catalog,
                                  const DistanceOptions& opt = {});

}  // namespace metacode
