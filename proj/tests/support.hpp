#pragma once

#include <string>
#include <vector>

#include "metacode/idem.hpp"

namespace support {

using namespace metacode;

inline Field fq(u64 q) {
  auto [p, e] = prime_power(q);
  return Field::make(p, static_cast<unsigned>(e));
}

struct Case {
  std::string group;
  u64 q;
};

// the idempotent test matrix
inline const std::vector<Case>& matrix() {
  static const std::vector<Case> m{
      {"D:16", 3},  {"D:16", 5},  {"D:16", 7},   {"Q:16", 3},  {"SD:16", 3}, {"SD:16", 5},
      {"OM:2^4", 3}, {"G27", 2},  {"G27", 5},    {"D:14", 3},  {"D:14", 5},  {"G39", 2},
      {"G39", 5},   {"G57", 2},   {"G20", 3},    {"D:12", 5},  {"C2xQ8", 3},
  };
  return m;
}

// catalog minus the pairs that fail the verifier
inline std::vector<ShodaPair> good_catalog(const Group& G) {
  std::vector<ShodaPair> out;
  for (auto& p : ssp_catalog(G))
    if (verify_ssp(G, p, 1000000).ok) out.push_back(p);
  return out;
}

struct SuiteResult {
  std::size_t count = 0;
  std::size_t not_idempotent = 0, not_central = 0, not_orthogonal = 0;
  bool sums_to_one = false;
  u64 dimension = 0;
  bool ok(u64 order) const {
    return count && !not_idempotent && !not_central && !not_orthogonal && sums_to_one && dimension == order;
  }
};

inline SuiteResult check_pcis(const Group& G, const Field& F, const std::vector<ShodaPair>& cat) {
  SuiteResult r;
  auto es = all_pcis(G, F, cat);
  r.count = es.size();
  Alg sum(G, F);
  for (std::size_t x = 0; x < es.size(); ++x) {
    const Alg& e = es[x].value;
    sum += e;
    if (!e.is_idempotent()) ++r.not_idempotent;
    if (!e.is_central()) ++r.not_central;
    for (std::size_t y = x + 1; y < es.size(); ++y)
      if (!(e * es[y].value).is_zero()) ++r.not_orthogonal;
  }
  r.sums_to_one = sum == Alg::one(G, F);
  r.dimension = census_dimension(count_pcis(G, F, cat));
  return r;
}

}  // namespace support
