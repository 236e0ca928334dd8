#pragma once

#include <string>
#include <vector>

#include "metacode/group.hpp"

namespace metacode {

struct ShodaPair {
  Subgroup H, K;
  std::string family;
  std::string h_name, k_name;  // "G", "1" or "<a^2,b>"
  std::string label() const { return "(" + h_name + "," + k_name + ")"; }
};

// Subgroup generated by words; "G" is the whole group, "1" the trivial one.
Subgroup subgroup_of(const Group& G, const std::vector<std::string>& words);
ShodaPair ssp_pair(const Group& G, const std::vector<std::string>& h, const std::vector<std::string>& k,
                   const std::string& family);

// <a,b | a^(p1^m) = b^(p2^l) = 1, b^-1 a b = a^r>, faithful action
std::vector<ShodaPair> ssp_generic_split(const Group& G);
// D, Q, SD of order 2^(n+1)
std::vector<ShodaPair> ssp_2group(const Group& G);
// ordinary metacyclic G_(2^(n+1)), r = 1 + 2^(n-1)
std::vector<ShodaPair> ssp_ordinary_metacyclic_2(const Group& G);
// ordinary metacyclic G_(p^(n+1)), p odd
std::vector<ShodaPair> ssp_ordinary_metacyclic_p(const Group& G);
// the four metacyclic groups of order p^5; G must come from Group::named("P5:<family>:<p>")
std::vector<ShodaPair> ssp_p5(const Group& G, int family);
std::vector<ShodaPair> ssp_dihedral_any(const Group& G);
std::vector<ShodaPair> ssp_quaternion_any(const Group& G);
std::vector<ShodaPair> ssp_cyclic(const Group& G);
std::vector<ShodaPair> ssp_c2xq8(const Group& G);
// componentwise products on P = G1 x G2
std::vector<ShodaPair> ssp_product(const Group& P, const std::vector<ShodaPair>& s1,
                                   const std::vector<ShodaPair>& s2);
// picks the catalog from the group's name or shape; throws NotGenericFamily
std::vector<ShodaPair> ssp_catalog(const Group& G);

struct SspCheck {
  bool ok = true;
  std::string reason;
};
// exhaustive check; throws TooLarge when |G| > bound
SspCheck verify_ssp(const Group& G, const ShodaPair& p, u64 bound = 10000);

}  // namespace metacode
