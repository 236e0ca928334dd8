#include "metacode/audit.hpp"

#include <sstream>

#include "metacode/error.hpp"
#include "metacode/units.hpp"

namespace metacode {

std::string AuditRow::describe() const {
  std::ostringstream os;
  os << group << "/F" << q << " " << kind << " " << pair << " k=" << label;
  if (kind == "e^beta") os << " beta=" << beta;
  os << ": [" << d.witness.size() << "," << k << ",";
  if (d.exact())
    os << d.d_hi;
  else
    os << d.d_lo << ".." << d.d_hi;
  os << "] vs " << bounds.source << " dim " << bounds.dim << ", " << bounds.d_min << " <= d <= " << bounds.d_max;
  if (!ok()) os << (dim_ok ? "" : " DIM") << (basis_ok ? "" : " BASIS") << (window_ok ? "" : " WINDOW");
  return os.str();
}

namespace {

void judge(AuditRow& r) {
  r.dim_ok = r.k == r.bounds.dim;
  r.basis_ok = r.bounds.basis_ok;
  r.window_ok = r.d.d_lo >= r.bounds.d_min && r.d.d_hi <= r.bounds.d_max;
  r.window_violated = r.d.d_hi < r.bounds.d_min || r.d.d_lo > r.bounds.d_max;
}

bool split_shape(const Group& G) {
  if (G.is_product() || G.s() != 0 || G.M() == 1) return false;
  auto [p1, m] = prime_power(G.N());
  auto [p2, l] = prime_power(G.M());
  return p1 && p2 && p1 != p2 && mult_order(G.r(), G.N()) == G.M();
}

}  // namespace

std::vector<AuditRow> audit_codes(const Group& G, const Field& F, const std::vector<ShodaPair>& catalog,
                                  const DistanceOptions& opt) {
  std::vector<AuditRow> out;
  const Subgroup W = whole(G);
  const int table = [&] {
    if (G.is_product() || G.s() != 0) return 0;
    auto [p, n] = prime_power(G.N());
    if (!p || G.M() != p || n < 2 || G.r() != 1 + G.N() / p) return 0;
    return p == 2 ? (n >= 3 ? 2 : 0) : 3;
  }();
  const bool split = split_shape(G);
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    const ShodaPair& p = catalog[i];
    auto od = cosets_and_orbits(G, F, p);
    const bool a_one = !G.is_product() && p.H == subgroup_closure(G, {G.a()}) && p.K.order() == 1;
    for (u64 k : od.reps) {
      Alg e = pci(G, F, p, od, k);
      auto base = [&](const std::string& kind) {
        AuditRow r;
        r.group = G.name();
        r.q = F.q();
        r.kind = kind;
        r.pair = p.label();
        r.label = k;
        return r;
      };
      if (p.H == W) {
        AuditRow r = base("(G,K)");
        r.bounds = theorem21_bounds(G, F, p.K, e);
        auto c = ideal_to_code(e, Side::TwoSided);
        r.k = c.k;
        r.d = min_distance(c, opt);
        judge(r);
        if (r.bounds.d_exact) r.window_ok = r.window_ok && r.d.exact();
        out.push_back(std::move(r));
        continue;
      }
      if (a_one && (table == 2 || table == 3)) {
        AuditRow r = base(table == 2 ? "e_2^n" : "e_p^n");
        r.bounds = table == 2 ? ordinary_2group_params(G, F) : ordinary_pgroup_params(G, F);
        auto c = ideal_to_code(e, Side::TwoSided);
        r.k = c.k;
        r.d = min_distance(c, opt);
        judge(r);
        out.push_back(std::move(r));
        continue;
      }
      if (split && p.H == subgroup_closure(G, {G.a()})) {
        auto [p1, m] = prime_power(G.N());
        const int j1 = m - vp(p.K.order(), p1);
        for (u64 beta = 1; beta < G.M(); ++beta) {
          AuditRow r = base("e^beta");
          r.beta = beta;
          r.bounds = theorem61_params(G, F, j1, beta);
          auto c = ideal_to_code(e * hat(G, F, b_power_subgroup(G, beta)), Side::Left);
          r.k = c.k;
          r.d = min_distance(c, opt);
          judge(r);
          out.push_back(std::move(r));
        }
      }
    }
  }
  return out;
}

}  // namespace metacode
