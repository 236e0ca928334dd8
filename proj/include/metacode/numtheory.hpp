#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace metacode {

using u64 = std::uint64_t;
using i64 = std::int64_t;

bool is_prime(u64 n);
// prime factorization as (prime, exponent), ascending
std::vector<std::pair<u64, int>> factorize(u64 n);
std::vector<u64> divisors(u64 n);
u64 euler_phi(u64 n);
u64 mulmod(u64 a, u64 b, u64 m);
u64 powmod(u64 b, u64 e, u64 m);
u64 ipow(u64 b, unsigned e);
// p-adic valuation
int vp(u64 n, u64 p);
i64 mod(i64 a, i64 m);
// inverse of a mod m, throws NotCoprime
u64 invmod(i64 a, u64 m);
// least o >= 1 with q^o = 1 mod m; throws NotCoprime
u64 mult_order(u64 q, u64 m);
// is x in the cyclic subgroup <q> of (Z/m)^*
bool in_cyclic_subgroup(u64 x, u64 q, u64 m);
// if n = p^k with k >= 1 returns (p, k), else (0, 0)
std::pair<u64, int> prime_power(u64 n);

}  // namespace metacode
