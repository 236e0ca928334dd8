#include "metacode/units.hpp"

#include <numeric>

#include "metacode/error.hpp"

namespace metacode {

const char* to_string(UnitKind k) {
  switch (k) {
    case UnitKind::Bicyclic: return "bicyclic";
    case UnitKind::Bass: return "bass";
    case UnitKind::Alternating: return "alternating";
    case UnitKind::Geometric: return "geometric";
    case UnitKind::Constructed: return "constructed";
  }
  return "?";
}

Alg geometric_sum(const Group& G, const Field& F, Idx g, u64 k) {
  Alg s(G, F);
  Idx x = 0;
  for (u64 i = 0; i < k; ++i) {
    s.add_at(x, 1);
    x = G.mul(x, g);
  }
  return s;
}

Alg tilde(const Group& G, const Field& F, Idx h) { return geometric_sum(G, F, h, G.elem_order(h)); }

namespace {

Alg power(const Alg& x, u64 m) {
  Alg r = Alg::one(x.group(), x.field());
  Alg b = x;
  while (m) {
    if (m & 1) r = r * b;
    m >>= 1;
    if (m) b = b * b;
  }
  return r;
}

// (1 - k^m)/n reduced mod p; k^m = 1 mod n is assumed
Elem bass_coefficient(const Field& F, u64 k, u64 m, u64 n) {
  unsigned __int128 mod = static_cast<unsigned __int128>(n) * F.p();
  unsigned __int128 t = 1, b = k % mod;
  for (u64 e = m; e; e >>= 1) {
    if (e & 1) t = t * b % mod;
    b = b * b % mod;
  }
  unsigned __int128 diff = (1 + mod - t) % mod;  // (1 - k^m) mod np
  return F.from_int(static_cast<i64>(diff / n % F.p()));
}

Alg bass_value(const Group& G, const Field& F, Idx x, u64 k, u64 m) {
  u64 n = G.elem_order(x);
  Alg u = power(geometric_sum(G, F, x, k), m);
  return u + tilde(G, F, x).scaled(bass_coefficient(F, k, m, n));
}

}  // namespace

UnitElement bicyclic(const Group& G, const Field& F, Idx g, Idx h, bool mirrored) {
  Alg one = Alg::one(G, F);
  Alg one_minus_h = one - Alg::basis(G, F, h);
  Alg gb = Alg::basis(G, F, g);
  Alg th = tilde(G, F, h);
  Alg n = mirrored ? th * gb * one_minus_h : one_minus_h * gb * th;
  UnitElement u;
  u.value = one + n;
  u.inverse = one - n;
  u.identity = one;
  u.kind = UnitKind::Bicyclic;
  u.description = std::string(mirrored ? "b(h~,g)" : "b(g,h~)") + " g=" + G.word(g) + " h=" + G.word(h);
  return u;
}

UnitElement bass(const Group& G, const Field& F, Idx x, u64 k, u64 m) {
  u64 n = G.elem_order(x);
  if (k == 0 || m == 0 || std::gcd(k, n) != 1 || powmod(k % n, m, n) != 1 % n)
    throw Error(ErrorKind::BadParameters, "need gcd(k, n) = 1 and k^m = 1 mod n (k=" + std::to_string(k) +
                                              " m=" + std::to_string(m) + " n=" + std::to_string(n) + ")");
  u64 l = n == 1 ? 1 : invmod(static_cast<i64>(k), n);
  UnitElement u;
  u.value = bass_value(G, F, x, k, m);
  u.inverse = bass_value(G, F, G.pow(x, static_cast<i64>(k)), l, m);
  u.identity = Alg::one(G, F);
  u.kind = UnitKind::Bass;
  u.description = "u_{" + std::to_string(k) + "," + std::to_string(m) + "}(" + G.word(x) + ")";
  return u;
}

UnitElement geometric(const Group& G, const Field& F, Idx g, u64 k) {
  u64 n = G.elem_order(g);
  if (k == 0 || std::gcd(k, n) != 1 || k % F.p() == 0)
    throw Error(ErrorKind::BadParameters, "need gcd(k, |g|) = 1 and k invertible in F_q");
  u64 k1 = n == 1 ? 1 : invmod(static_cast<i64>(k), n);
  u64 c = (k * k1 - 1) / n;
  UnitElement u;
  u.value = geometric_sum(G, F, g, k);
  Elem coef = F.div(F.from_int(static_cast<i64>(c % F.p())), F.from_int(static_cast<i64>(k % F.p())));
  u.inverse = geometric_sum(G, F, G.pow(g, static_cast<i64>(k)), k1) - tilde(G, F, g).scaled(coef);
  u.identity = Alg::one(G, F);
  u.kind = UnitKind::Geometric;
  u.description = "u_" + std::to_string(k) + "(" + G.word(g) + ")";
  return u;
}

UnitElement alternating(const Group& G, const Field& F, Idx g, u64 k) {
  if (F.p() != 2) throw Error(ErrorKind::WrongCharacteristic, "alternating units need q even");
  u64 n = G.elem_order(g);
  auto [p, mexp] = prime_power(n);
  if (p == 0 || p == 2)
    throw Error(ErrorKind::BadParameters, "|g| = " + std::to_string(n) + " is not an odd prime power");
  if (k == 0 || k >= p || std::gcd(k, 2 * n) != 1)
    throw Error(ErrorKind::BadParameters, "need k < p and gcd(k, 2|g|) = 1");
  u64 k1 = invmod(static_cast<i64>(k), n);
  UnitElement u;
  u.value = geometric_sum(G, F, g, k);
  u.inverse = geometric_sum(G, F, G.pow(g, static_cast<i64>(k)), k1);
  if (k1 % 2 == 0) u.inverse += tilde(G, F, g);
  u.identity = Alg::one(G, F);
  u.kind = UnitKind::Alternating;
  u.description = "u_" + std::to_string(k) + "(" + G.word(g) + ")";
  return u;
}

UnitElement constructed_unit(const Alg& e, Elem s, u64 k, const Subgroup& B) {
  const Group& G = e.group();
  const Field& F = e.field();
  u64 oa = G.elem_order(G.a());
  if (s == 0) throw Error(ErrorKind::BadParameters, "s must be nonzero");
  if (k < 1 || k >= oa) throw Error(ErrorKind::BadParameters, "k must lie in [1, |a| - 1]");
  Alg Bh = hat(G, F, B);
  Alg n = (Bh * Alg::basis(G, F, G.pow(G.a(), static_cast<i64>(k)), s) * (Alg::one(G, F) - Bh)) * e;
  UnitElement u;
  u.value = e + n;
  u.inverse = e - n;
  u.identity = e;
  u.kind = UnitKind::Constructed;
  u.description = "e + s B^ a^" + std::to_string(k) + " (1 - B^) e";
  return u;
}

Subgroup b_power_subgroup(const Group& G, u64 beta) {
  return subgroup_closure(G, {G.pow(G.b(), static_cast<i64>(beta))});
}

Alg conjugate_idempotent(const Alg& e, const Subgroup& B, const UnitElement& u, Conjugation c) {
  Alg eb = e * hat(e.group(), e.field(), B);
  if (c == Conjugation::UnitFirst) return u.value * eb * u.inverse;
  return u.inverse * eb * u.value;
}

bool verify_unit(const UnitElement& u) {
  return u.value * u.inverse == u.identity && u.inverse * u.value == u.identity;
}

}  // namespace metacode
