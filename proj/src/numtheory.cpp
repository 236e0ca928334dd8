#include "metacode/numtheory.hpp"

#include <algorithm>
#include <numeric>

#include "metacode/error.hpp"

namespace metacode {

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::EvenQ: return "EvenQ";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::NotCoprimeOrders: return "NotCoprimeOrders";
    case ErrorKind::InconsistentPresentation: return "InconsistentPresentation";
    case ErrorKind::NotGenericFamily: return "NotGenericFamily";
    case ErrorKind::BadFamilyIndex: return "BadFamilyIndex";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::RegimeMismatch: return "RegimeMismatch";
    case ErrorKind::BadParameters: return "BadParameters";
    case ErrorKind::WrongCharacteristic: return "WrongCharacteristic";
    case ErrorKind::QuotientNotCyclic: return "QuotientNotCyclic";
    case ErrorKind::ZeroCode: return "ZeroCode";
    case ErrorKind::SchemaError: return "SchemaError";
    case ErrorKind::Usage: return "Usage";
  }
  return "Error";
}

u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}

u64 powmod(u64 b, u64 e, u64 m) {
  if (m == 1) return 0;
  u64 r = 1;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

u64 ipow(u64 b, unsigned e) {
  u64 r = 1;
  while (e--) r *= b;
  return r;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // deterministic bases for 64-bit
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool comp = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        comp = false;
        break;
      }
    }
    if (comp) return false;
  }
  return true;
}

std::vector<std::pair<u64, int>> factorize(u64 n) {
  // trial division is enough: everything factored here is a group order or a small modulus
  std::vector<std::pair<u64, int>> f;
  for (u64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p) continue;
    int k = 0;
    while (n % p == 0) {
      n /= p;
      ++k;
    }
    f.emplace_back(p, k);
  }
  if (n > 1) f.emplace_back(n, 1);
  return f;
}

std::vector<u64> divisors(u64 n) {
  std::vector<u64> d{1};
  for (auto [p, k] : factorize(n)) {
    std::size_t cur = d.size();
    u64 pk = 1;
    for (int i = 1; i <= k; ++i) {
      pk *= p;
      for (std::size_t t = 0; t < cur; ++t) d.push_back(d[t] * pk);
    }
  }
  std::sort(d.begin(), d.end());
  return d;
}

u64 euler_phi(u64 n) {
  u64 r = n;
  for (auto [p, k] : factorize(n)) r = r / p * (p - 1);
  return r;
}

int vp(u64 n, u64 p) {
  if (n == 0) return 1 << 20;
  int k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  return k;
}

i64 mod(i64 a, i64 m) {
  i64 r = a % m;
  return r < 0 ? r + m : r;
}

u64 invmod(i64 a, u64 m) {
  if (m == 1) return 0;
  i64 t = 0, nt = 1, r = static_cast<i64>(m), nr = mod(a, static_cast<i64>(m));
  while (nr) {
    i64 qq = r / nr;
    t -= qq * nt;
    std::swap(t, nt);
    r -= qq * nr;
    std::swap(r, nr);
  }
  if (r != 1) throw Error(ErrorKind::NotCoprime, "no inverse of " + std::to_string(a) + " mod " + std::to_string(m));
  return static_cast<u64>(mod(t, static_cast<i64>(m)));
}

u64 mult_order(u64 q, u64 m) {
  if (m == 0 || std::gcd(q, m) != 1) {
    throw Error(ErrorKind::NotCoprime, "gcd(" + std::to_string(q) + ", " + std::to_string(m) + ") != 1");
  }
  if (m == 1) return 1;
  u64 o = euler_phi(m);
  for (auto [p, k] : factorize(o)) {
    for (int i = 0; i < k && o % p == 0 && powmod(q, o / p, m) == 1; ++i) o /= p;
  }
  return o;
}

bool in_cyclic_subgroup(u64 x, u64 q, u64 m) {
  x %= m;
  q %= m;
  u64 y = 1 % m;
  u64 o = mult_order(q, m);
  for (u64 i = 0; i < o; ++i) {
    if (y == x) return true;
    y = mulmod(y, q, m);
  }
  return false;
}

std::pair<u64, int> prime_power(u64 n) {
  auto f = factorize(n);
  if (f.size() != 1) return {0, 0};
  return f[0];
}

}  // namespace metacode
