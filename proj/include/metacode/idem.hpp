#pragma once

#include <string>
#include <utility>
#include <vector>

#include "metacode/algebra.hpp"
#include "metacode/shoda.hpp"

namespace metacode {

// q-cyclotomic cosets of the generators of Irr(H/K) and their orbits under
// conjugation by N_G(H) ∩ N_G(K).
struct OrbitData {
  u64 m = 1;     // [H:K]
  Idx gen = 0;   // generates H/K
  u64 o = 1;     // o_m(q)
  std::vector<int> exp_of;                  // h in gen^i K -> i, else -1
  std::vector<std::vector<u64>> cosets;     // sorted members, ordered by least member
  std::vector<std::vector<u64>> orbits;     // sorted members of each orbit
  std::vector<u64> reps;                    // least member of each orbit
  std::vector<u64> action_units;            // x^-1 gen x = gen^u mod K, x in N
  u64 E_index = 1;                          // [E_G(H/K) : H]
  u64 G_index = 1;                          // [G:H]
  // Wedderburn component M_{[G:H]}(F_{q^(o/[E:H])})
  u64 field_degree() const { return o / E_index; }
  u64 component_dim() const { return G_index * G_index * field_degree(); }
};

OrbitData cosets_and_orbits(const Group& G, const Field& F, const ShodaPair& p);

// (1/[H:K]) K^ sum_i tr(xi^(k i)) gen^-i, xi the fixed primitive [H:K]-th root
Alg epsilon(const Group& G, const Field& F, const ShodaPair& p, const OrbitData& od, u64 k);
Alg epsilon(const Group& G, const Field& F, const ShodaPair& p, u64 k);
// sum of the distinct G-conjugates of epsilon
Alg pci(const Group& G, const Field& F, const ShodaPair& p, const OrbitData& od, u64 k);
Alg pci(const Group& G, const Field& F, const ShodaPair& p, u64 k);

struct Idempotent {
  Alg value;
  std::size_t pair_index = 0;  // into the catalog
  std::string pair_label;
  u64 k = 0;
  bool central = true;
  u64 matrix_size = 1;
  u64 field_degree = 1;
};

// every pci of F_q G from the catalog, in catalog order then by k
std::vector<Idempotent> all_pcis(const Group& G, const Field& F, const std::vector<ShodaPair>& catalog);

struct CensusRow {
  std::size_t pair_index;
  std::string pair_label;
  u64 count;         // number of orbits = number of pcis
  u64 matrix_size;   // [G:H]
  u64 field_degree;  // o/[E:H]
};
std::vector<CensusRow> count_pcis(const Group& G, const Field& F, const std::vector<ShodaPair>& catalog);
// sum of count * matrix_size^2 * field_degree
u64 census_dimension(const std::vector<CensusRow>& rows);

// {e B^, e (1 - B^)}
std::pair<Alg, Alg> left_idempotents(const Alg& e, const Subgroup& B);

// throws NotCoprime when gcd(|G|, q) != 1
void require_semisimple(const Group& G, const Field& F);

}  // namespace metacode
