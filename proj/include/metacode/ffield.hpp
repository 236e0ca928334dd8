#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "metacode/numtheory.hpp"

namespace metacode {

// Element of GF(p^e) encoded as sum c_i p^i over its polynomial-basis coordinates.
using Elem = std::uint32_t;

struct FieldData;

// GF(p^e). Cheap to copy; the tables are shared and immutable.
class Field {
 public:
  Field() = default;
  static Field make(u64 p, unsigned e);

  u64 p() const;
  unsigned e() const;
  u64 q() const;
  // monic, low-to-high, length e+1; prime fields use x
  const std::vector<Elem>& modulus() const;

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, u64 n) const;
  Elem from_int(i64 v) const;
  // coordinates over GF(p), low-to-high
  std::vector<Elem> coords(Elem a) const;

  bool operator==(const Field& o) const;
  bool valid() const { return d_ != nullptr; }

 private:
  std::shared_ptr<const FieldData> d_;
};

struct FieldData {
  u64 p = 0;
  unsigned e = 0;
  u64 q = 0;
  std::vector<Elem> modulus;
  // e > 1 only
  std::vector<Elem> exp, log, addt, negt;
  bool have_addt = false;
};

inline u64 Field::p() const { return d_->p; }
inline unsigned Field::e() const { return d_->e; }
inline u64 Field::q() const { return d_->q; }
inline const std::vector<Elem>& Field::modulus() const { return d_->modulus; }

inline Elem Field::add(Elem a, Elem b) const {
  const FieldData& d = *d_;
  if (d.e == 1) {
    u64 s = static_cast<u64>(a) + b;
    return static_cast<Elem>(s >= d.p ? s - d.p : s);
  }
  if (d.have_addt) return d.addt[static_cast<std::size_t>(a) * d.q + b];
  Elem r = 0, pw = 1;
  while (a || b) {
    Elem x = static_cast<Elem>((a % d.p + b % d.p) % d.p);
    r += x * pw;
    pw *= static_cast<Elem>(d.p);
    a /= static_cast<Elem>(d.p);
    b /= static_cast<Elem>(d.p);
  }
  return r;
}

inline Elem Field::neg(Elem a) const {
  const FieldData& d = *d_;
  if (a == 0) return 0;
  if (d.e == 1) return static_cast<Elem>(d.p - a);
  return d.negt[a];
}

inline Elem Field::sub(Elem a, Elem b) const {
  if (d_->e == 1) return a >= b ? a - b : static_cast<Elem>(a + d_->p - b);
  return add(a, neg(b));
}

inline Elem Field::mul(Elem a, Elem b) const {
  const FieldData& d = *d_;
  if (d.e == 1) return static_cast<Elem>(static_cast<u64>(a) * b % d.p);
  if (a == 0 || b == 0) return 0;
  return d.exp[d.log[a] + d.log[b]];
}

// Polynomials over a Field, low-to-high, trimmed (no trailing zeros; zero poly is empty).
using Poly = std::vector<Elem>;

namespace poly {
void trim(Poly& a);
int deg(const Poly& a);
Poly add(const Field& F, const Poly& a, const Poly& b);
Poly sub(const Field& F, const Poly& a, const Poly& b);
Poly mul(const Field& F, const Poly& a, const Poly& b);
Poly scale(const Field& F, const Poly& a, Elem c);
void divmod(const Field& F, const Poly& a, const Poly& b, Poly& quo, Poly& rem);
Poly mod(const Field& F, const Poly& a, const Poly& b);
Poly monic(const Field& F, const Poly& a);
Poly gcd(const Field& F, Poly a, Poly b);
Poly mulmod(const Field& F, const Poly& a, const Poly& b, const Poly& m);
Poly powmod(const Field& F, const Poly& a, u64 n, const Poly& m);
// f(x^k)
Poly compose_power(const Poly& f, u64 k);
bool is_irreducible(const Field& F, const Poly& f);
// least monic irreducible of degree d; coefficients compared low-degree-first
Poly least_irreducible(const Field& F, unsigned d);
// lexicographic low-degree-first comparison of equal-length coefficient lists
bool lex_less(const Poly& a, const Poly& b);
// Phi_m over the prime field of F
Poly cyclotomic(const Field& F, u64 m);
// all irreducible factors of a squarefree f whose factors all have degree d
std::vector<Poly> equal_degree_factors(const Field& F, const Poly& f, unsigned d);
// one of them, chosen deterministically (seeded splits, lower-degree side kept)
Poly equal_degree_factor(const Field& F, const Poly& f, unsigned d);
}  // namespace poly

struct ExtData;

// GF(q^o) = GF(q)[x]/(f) where f is the minimal polynomial of the chosen
// primitive m-th root xi, so xi = x.
class ExtField {
 public:
  using Vec = std::vector<Elem>;

  ExtField() = default;
  static ExtField for_root(const Field& base, u64 m);

  const Field& base() const;
  u64 m() const;
  unsigned o() const;
  const Poly& modulus() const;
  Vec xi() const;
  Vec one() const;
  Vec zero() const;
  Vec from_base(Elem c) const;
  Vec add(const Vec& a, const Vec& b) const;
  Vec mul(const Vec& a, const Vec& b) const;
  Vec pow(const Vec& a, u64 n) const;
  // a^q
  Vec frobenius(const Vec& a) const;
  bool is_one(const Vec& a) const;
  // relative trace via the power sums of the roots of f
  Elem trace(const Vec& a) const;
  // sum_{j<o} a^{q^j}, computed by repeated Frobenius
  Elem trace_by_frobenius(const Vec& a) const;
  // T[t] = tr(xi^t) for 0 <= t < len
  std::vector<Elem> root_traces(u64 len) const;

 private:
  std::shared_ptr<const ExtData> d_;
};

struct ExtData {
  Field base;
  u64 m = 1;
  unsigned o = 1;
  Poly f;                        // monic, degree o
  std::vector<unsigned> f_nz;    // indices i < o with f_i != 0
  std::vector<Elem> psum;        // tr(x^i), i < o
  // f(x) = core(x^stride) with stride maximal
  u64 stride = 1;
  Poly core;
  std::vector<unsigned> core_nz;
};

ExtField extension_for_root(const Field& base, u64 m);
Elem rel_trace(const ExtField& ext, const ExtField::Vec& x);

// T[t] = tr(xi_m^t), t < m, for the deterministic xi_m of extension_for_root.
std::vector<Elem> root_trace_table(const Field& base, u64 m);

// q = +-1 + 2^i0 c with c odd, i0 >= 2; sign = +1 or -1. Throws EvenQ.
struct TwoAdic {
  int i0;
  int sign;
};
TwoAdic two_adic(u64 q);
// i0 of an odd prime p: p-adic valuation of q^{o_p(q)} - 1
int odd_i0(u64 q, u64 p);

bool trace_vanishes_2power(u64 q, int i);
bool trace_vanishes_two_odd_primes(u64 q, u64 p1, u64 p2, int j1, int j2, i64 k);
bool trace_vanishes_2p(u64 q, u64 p, int j1, int j2, i64 k);

}  // namespace metacode
