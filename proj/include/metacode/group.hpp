#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "metacode/numtheory.hpp"

namespace metacode {

// Group elements are referred to by index. Metacyclic: a^i b^j has index
// i*M + j. Products: idx1*|G2| + idx2. The identity is always 0.
using Idx = std::uint32_t;

struct GroupData;

// <a, b | a^N = 1, b^M = a^s, b^-1 a b = a^r>, or a direct product of two groups.
class Group {
 public:
  Group() = default;
  static Group metacyclic(u64 N, u64 M, u64 r, u64 s, std::string name = "");
  // require_coprime = false admits products like C2 x Q8
  static Group product(const Group& g1, const Group& g2, bool require_coprime = true);
  // D:<2n>, Q:<4m>, SD:<2^k>, OM:<p>^<n+1>, C:<n>, G20, G27, G39, G57,
  // P5:<family>:<p>, EX54, EX54S, C2xQ8
  static Group named(const std::string& spec);

  u64 order() const;
  const std::string& name() const;
  bool is_product() const;
  const Group& left() const;
  const Group& right() const;

  Idx mul(Idx x, Idx y) const;
  Idx inv(Idx x) const;
  Idx pow(Idx x, i64 n) const;
  // x^-1 g x
  Idx conj(Idx g, Idx x) const { return mul(inv(x), mul(g, x)); }
  u64 elem_order(Idx x) const;
  std::vector<Idx> generators() const;

  // metacyclic only
  u64 N() const;
  u64 M() const;
  u64 r() const;
  u64 s() const;
  // the product a^i b^j, any integers
  Idx ab(i64 i, i64 j) const;
  Idx a() const { return ab(1, 0); }
  Idx b() const { return ab(0, 1); }
  // normal form exponents (i, j)
  std::pair<u64, u64> exponents(Idx x) const;

  // products only
  Idx pair(Idx x1, Idx x2) const;
  Idx first(Idx x) const;
  Idx second(Idx x) const;

  std::string word(Idx x) const;
  // "1", "a^2b", "ab^-1a", "(a^2,b)" for products
  Idx parse_word(const std::string& w) const;

  bool same(const Group& o) const { return d_ == o.d_; }
  const void* id() const { return d_.get(); }
  bool valid() const { return d_ != nullptr; }

 private:
  std::shared_ptr<const GroupData> d_;
};

struct Subgroup {
  std::vector<Idx> gens;
  std::vector<Idx> elems;  // sorted
  std::vector<char> member;
  bool normal = false;
  bool cyclic = false;
  Idx cyclic_gen = 0;

  u64 order() const { return elems.size(); }
  bool contains(Idx x) const { return member[x] != 0; }
  bool operator==(const Subgroup& o) const { return elems == o.elems; }
};

// The group written as <a, b | a^N, b^M = a^s, b^-1 a b = a^r> with explicit
// index maps; products of metacyclic groups of coprime order qualify.
struct MetacyclicView {
  u64 N = 1, M = 1, r = 1, s = 0;
  std::vector<Idx> to_group;    // view index i*M + j -> group index
  std::vector<Idx> from_group;  // inverse
};
// cached per group; nullptr when the group has no such presentation
std::shared_ptr<const MetacyclicView> metacyclic_view(const Group& G);

Subgroup subgroup_closure(const Group& G, const std::vector<Idx>& gens);
Subgroup whole(const Group& G);
Subgroup trivial(const Group& G);
bool is_subset(const Subgroup& A, const Subgroup& B);
// <A, B>
Subgroup join(const Group& G, const Subgroup& A, const Subgroup& B);
// H1 x H2 inside a product group
Subgroup product_subgroup(const Group& P, const Subgroup& H1, const Subgroup& H2);

// a generator of H/K, K normal in H; nullopt when H/K is not cyclic. Throws NotNormal.
std::optional<Idx> cyclic_quotient_generator(const Group& G, const Subgroup& H, const Subgroup& K);
std::optional<Idx> quotient_is_cyclic(const Group& G, const Subgroup& K);
Subgroup normalizer(const Group& G, const Subgroup& H);
Subgroup center(const Group& G);
// K normal in H
bool normal_in(const Group& G, const Subgroup& K, const Subgroup& H);

}  // namespace metacode
