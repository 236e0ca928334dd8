#include "metacode/idem.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "metacode/error.hpp"

namespace metacode {

void require_semisimple(const Group& G, const Field& F) {
  if (G.order() % F.p() == 0)
    throw Error(ErrorKind::NotCoprime,
                "|G| = " + std::to_string(G.order()) + " is divisible by the characteristic " + std::to_string(F.p()));
}

OrbitData cosets_and_orbits(const Group& G, const Field& F, const ShodaPair& p) {
  OrbitData od;
  const Subgroup &H = p.H, &K = p.K;
  od.m = H.order() / K.order();
  od.G_index = G.order() / H.order();
  auto g = cyclic_quotient_generator(G, H, K);
  if (!g) throw Error(ErrorKind::QuotientNotCyclic, "H/K is not cyclic for " + p.label());
  od.gen = *g;
  od.exp_of.assign(G.order(), -1);
  Idx x = 0;
  for (u64 i = 0; i < od.m; ++i, x = G.mul(x, od.gen))
    for (Idx k : K.elems) od.exp_of[G.mul(x, k)] = static_cast<int>(i);

  const u64 m = od.m, q = F.q() % m;
  od.o = m == 1 ? 1 : mult_order(q, m);
  std::vector<char> seen(m, 0);
  for (u64 k = 0; k < m; ++k) {
    if (seen[k] || std::gcd(k, m) != 1) continue;
    if (m == 1 && k != 0) continue;
    std::vector<u64> c;
    for (u64 t = k; !seen[t]; t = mulmod(t, q, m)) {
      seen[t] = 1;
      c.push_back(t);
    }
    std::sort(c.begin(), c.end());
    od.cosets.push_back(std::move(c));
  }
  if (m == 1 && od.cosets.empty()) od.cosets.push_back({0});

  // action of N_G(H) ∩ N_G(K) on H/K
  auto NH = normalizer(G, H), NK = normalizer(G, K);
  std::set<u64> units;
  u64 stab = 0;
  for (Idx y : NH.elems) {
    if (!NK.contains(y)) continue;
    int u = od.exp_of[G.conj(od.gen, y)];
    if (u < 0) throw Error(ErrorKind::NotNormal, "conjugate of the generator left H");
    units.insert(static_cast<u64>(u));
    if (m == 1 || in_cyclic_subgroup(static_cast<u64>(u), q, m)) ++stab;
  }
  od.action_units.assign(units.begin(), units.end());
  od.E_index = stab / H.order();

  std::vector<int> coset_of(m, -1);
  for (std::size_t c = 0; c < od.cosets.size(); ++c)
    for (u64 t : od.cosets[c]) coset_of[t] = static_cast<int>(c);
  std::vector<char> done(od.cosets.size(), 0);
  for (std::size_t c = 0; c < od.cosets.size(); ++c) {
    if (done[c]) continue;
    std::set<u64> orb;
    for (u64 u : od.action_units) {
      u64 t = m == 1 ? 0 : mulmod(od.cosets[c][0], u, m);
      int cc = coset_of[t];
      if (!done[cc]) {
        done[cc] = 1;
        orb.insert(od.cosets[cc].begin(), od.cosets[cc].end());
      }
    }
    done[c] = 1;
    orb.insert(od.cosets[c].begin(), od.cosets[c].end());
    od.orbits.emplace_back(orb.begin(), orb.end());
    od.reps.push_back(*orb.begin());
  }
  return od;
}

Alg epsilon(const Group& G, const Field& F, const ShodaPair& p, const OrbitData& od, u64 k) {
  require_semisimple(G, F);
  const u64 m = od.m;
  std::vector<Elem> T = m == 1 ? std::vector<Elem>{1} : root_trace_table(F, m);
  Elem inv_h = F.inv(F.from_int(static_cast<i64>(p.H.order() % F.p())));
  Alg e(G, F);
  for (Idx h : p.H.elems) {
    int i = od.exp_of[h];
    // h in gen^i K pairs with the term gen^-i' for i' = -i
    u64 t = mulmod(k % m, (m - static_cast<u64>(i) % m) % m, m);
    if (T[t]) e.set(h, F.mul(T[t], inv_h));
  }
  return e;
}

Alg epsilon(const Group& G, const Field& F, const ShodaPair& p, u64 k) {
  return epsilon(G, F, p, cosets_and_orbits(G, F, p), k);
}

Alg pci(const Group& G, const Field& F, const ShodaPair& p, const OrbitData& od, u64 k) {
  Alg eps = epsilon(G, F, p, od, k);
  if (od.G_index == 1) return eps;
  std::vector<char> covered(G.order(), 0);
  std::set<std::vector<Elem>> seen;
  Alg sum(G, F);
  for (Idx x = 0; x < G.order(); ++x) {
    if (covered[x]) continue;
    for (Idx h : p.H.elems) covered[G.mul(h, x)] = 1;
    Alg c = eps.conj(x);
    if (seen.insert(c.coeffs()).second) sum += c;
  }
  return sum;
}

Alg pci(const Group& G, const Field& F, const ShodaPair& p, u64 k) {
  return pci(G, F, p, cosets_and_orbits(G, F, p), k);
}

std::vector<Idempotent> all_pcis(const Group& G, const Field& F, const std::vector<ShodaPair>& catalog) {
  require_semisimple(G, F);
  std::vector<Idempotent> out;
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    auto od = cosets_and_orbits(G, F, catalog[i]);
    for (u64 k : od.reps) {
      Idempotent e;
      e.value = pci(G, F, catalog[i], od, k);
      e.pair_index = i;
      e.pair_label = catalog[i].label();
      e.k = k;
      e.matrix_size = od.G_index;
      e.field_degree = od.field_degree();
      out.push_back(std::move(e));
    }
  }
  return out;
}

std::vector<CensusRow> count_pcis(const Group& G, const Field& F, const std::vector<ShodaPair>& catalog) {
  require_semisimple(G, F);
  std::vector<CensusRow> rows;
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    auto od = cosets_and_orbits(G, F, catalog[i]);
    rows.push_back({i, catalog[i].label(), od.reps.size(), od.G_index, od.field_degree()});
  }
  return rows;
}

u64 census_dimension(const std::vector<CensusRow>& rows) {
  u64 s = 0;
  for (auto& r : rows) s += r.count * r.matrix_size * r.matrix_size * r.field_degree;
  return s;
}

std::pair<Alg, Alg> left_idempotents(const Alg& e, const Subgroup& B) {
  Alg bh = hat(e.group(), e.field(), B);
  Alg first = e * bh;
  return {first, e - first};
}

}  // namespace metacode
