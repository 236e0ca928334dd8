#include "metacode/ffield.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <tuple>

#include "metacode/error.hpp"

namespace metacode {

namespace {

// slow arithmetic on coordinate vectors, only used to build the tables
std::vector<Elem> to_digits(u64 c, u64 p, unsigned e) {
  std::vector<Elem> v(e);
  for (unsigned i = 0; i < e; ++i) {
    v[i] = static_cast<Elem>(c % p);
    c /= p;
  }
  return v;
}

Elem from_digits(const std::vector<Elem>& v, u64 p) {
  Elem c = 0;
  for (std::size_t i = v.size(); i-- > 0;) c = static_cast<Elem>(c * p + v[i]);
  return c;
}

std::vector<Elem> slow_mul(const std::vector<Elem>& a, const std::vector<Elem>& b,
                           const std::vector<Elem>& mod, u64 p) {
  unsigned e = static_cast<unsigned>(a.size());
  std::vector<u64> r(2 * e - 1, 0);
  for (unsigned i = 0; i < e; ++i)
    for (unsigned j = 0; j < e; ++j) r[i + j] = (r[i + j] + static_cast<u64>(a[i]) * b[j]) % p;
  for (unsigned i = 2 * e - 2; i >= e; --i) {
    u64 c = r[i];
    if (!c) continue;
    for (unsigned j = 0; j < e; ++j) r[i - e + j] = (r[i - e + j] + (p - c) * mod[j]) % p;
    r[i] = 0;
  }
  std::vector<Elem> out(e);
  for (unsigned i = 0; i < e; ++i) out[i] = static_cast<Elem>(r[i]);
  return out;
}

std::mutex g_cache_mu;

}  // namespace

Field Field::make(u64 p, unsigned e) {
  if (!is_prime(p)) throw Error(ErrorKind::NonPrimeCharacteristic, std::to_string(p) + " is not prime");
  if (e == 0) throw Error(ErrorKind::BadParameters, "extension degree must be >= 1");
  static std::map<std::pair<u64, unsigned>, Field> cache;
  {
    std::lock_guard<std::mutex> lk(g_cache_mu);
    auto it = cache.find({p, e});
    if (it != cache.end()) return it->second;
  }
  auto d = std::make_shared<FieldData>();
  d->p = p;
  d->e = e;
  if (e == 1) {
    if (p >= (1ull << 31)) throw Error(ErrorKind::BadParameters, "prime too large");
    d->q = p;
    d->modulus = {0, 1};
  } else {
    u64 q = ipow(p, e);
    if (q > (1ull << 22)) throw Error(ErrorKind::BadParameters, "field too large for table arithmetic");
    d->q = q;
    Field fp = make(p, 1);
    d->modulus = poly::least_irreducible(fp, e);
    std::vector<Elem> mod(d->modulus.begin(), d->modulus.begin() + e);
    // any generator works for the tables; take the least code
    auto order_is_full = [&](u64 c) {
      auto g = to_digits(c, p, e);
      for (auto [l, k] : factorize(q - 1)) {
        (void)k;
        u64 n = (q - 1) / l;
        std::vector<Elem> r = to_digits(1, p, e), b = g;
        while (n) {
          if (n & 1) r = slow_mul(r, b, mod, p);
          b = slow_mul(b, b, mod, p);
          n >>= 1;
        }
        if (from_digits(r, p) == 1) return false;
      }
      return true;
    };
    u64 g = 2;
    while (!order_is_full(g)) ++g;
    d->exp.assign(2 * (q - 1), 0);
    d->log.assign(q, 0);
    auto gd = to_digits(g, p, e);
    std::vector<Elem> cur = to_digits(1, p, e);
    for (u64 i = 0; i < q - 1; ++i) {
      Elem c = from_digits(cur, p);
      d->exp[i] = d->exp[i + q - 1] = c;
      d->log[c] = static_cast<Elem>(i);
      cur = slow_mul(cur, gd, mod, p);
    }
    d->negt.resize(q);
    for (u64 a = 0; a < q; ++a) {
      auto da = to_digits(a, p, e);
      for (auto& c : da) c = static_cast<Elem>((p - c) % p);
      d->negt[a] = from_digits(da, p);
    }
    if (q <= 1024) {
      d->addt.resize(q * q);
      for (u64 a = 0; a < q; ++a) {
        auto da = to_digits(a, p, e);
        for (u64 b = 0; b < q; ++b) {
          auto db = to_digits(b, p, e);
          std::vector<Elem> s(e);
          for (unsigned i = 0; i < e; ++i) s[i] = static_cast<Elem>((da[i] + db[i]) % p);
          d->addt[a * q + b] = from_digits(s, p);
        }
      }
      d->have_addt = true;
    }
  }
  Field f;
  f.d_ = d;
  std::lock_guard<std::mutex> lk(g_cache_mu);
  cache.emplace(std::make_pair(p, e), f);
  return f;
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw Error(ErrorKind::BadParameters, "inverse of zero");
  const FieldData& d = *d_;
  if (d.e == 1) return static_cast<Elem>(invmod(a, d.p));
  return d.exp[(d.q - 1 - d.log[a]) % (d.q - 1)];
}

Elem Field::pow(Elem a, u64 n) const {
  const FieldData& d = *d_;
  if (n == 0) return 1;
  if (a == 0) return 0;
  if (d.e == 1) return static_cast<Elem>(powmod(a, n, d.p));
  return d.exp[mulmod(d.log[a], n % (d.q - 1), d.q - 1)];
}

Elem Field::from_int(i64 v) const { return static_cast<Elem>(mod(v, static_cast<i64>(d_->p))); }

std::vector<Elem> Field::coords(Elem a) const { return to_digits(a, d_->p, d_->e); }

bool Field::operator==(const Field& o) const {
  return d_ == o.d_ || (d_ && o.d_ && d_->p == o.d_->p && d_->e == o.d_->e);
}

// ---------------------------------------------------------------- polynomials

namespace poly {

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const Poly& a) { return static_cast<int>(a.size()) - 1; }

Poly add(const Field& F, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    Elem x = i < a.size() ? a[i] : 0, y = i < b.size() ? b[i] : 0;
    r[i] = F.add(x, y);
  }
  trim(r);
  return r;
}

Poly sub(const Field& F, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    Elem x = i < a.size() ? a[i] : 0, y = i < b.size() ? b[i] : 0;
    r[i] = F.sub(x, y);
  }
  trim(r);
  return r;
}

Poly scale(const Field& F, const Poly& a, Elem c) {
  Poly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.mul(a[i], c);
  trim(r);
  return r;
}

Poly mul(const Field& F, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  if (F.e() == 1) {
    u64 p = F.p();
    std::vector<u64> acc(r.size(), 0);
    if (p < (1u << 16)) {
      // products < 2^32, so at least 2^32 of them fit before reducing
      for (std::size_t i = 0; i < a.size(); ++i) {
        u64 x = a[i];
        if (!x) continue;
        u64* dst = acc.data() + i;
        for (std::size_t j = 0; j < b.size(); ++j) dst[j] += x * b[j];
      }
    } else {
      for (std::size_t i = 0; i < a.size(); ++i) {
        u64 x = a[i];
        if (!x) continue;
        for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] = (acc[i + j] + x * b[j]) % p;
      }
    }
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = static_cast<Elem>(acc[i] % p);
  } else {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!a[i]) continue;
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    }
  }
  trim(r);
  return r;
}

void divmod(const Field& F, const Poly& a, const Poly& b, Poly& quo, Poly& rem) {
  if (b.empty()) throw Error(ErrorKind::BadParameters, "division by zero polynomial");
  rem = a;
  trim(rem);
  int db = deg(b);
  if (deg(rem) < db) {
    quo.clear();
    return;
  }
  quo.assign(rem.size() - b.size() + 1, 0);
  Elem li = F.inv(b.back());
  // rows of -b, skipping zeros
  std::vector<std::pair<int, Elem>> nb;
  for (int j = 0; j < db; ++j)
    if (b[j]) nb.emplace_back(j, F.neg(b[j]));
  for (int i = deg(rem); i >= db; --i) {
    Elem c = rem[i];
    if (!c) continue;
    c = F.mul(c, li);
    quo[i - db] = c;
    rem[i] = 0;
    Elem* base = rem.data() + (i - db);
    for (auto [j, bj] : nb) base[j] = F.add(base[j], F.mul(c, bj));
  }
  trim(rem);
  trim(quo);
}

Poly mod(const Field& F, const Poly& a, const Poly& b) {
  if (F.e() == 1 && F.p() < (1u << 16) && !b.empty() && b.back() == 1) {
    // lazy reduction: every addend is < p^2 < 2^32, so no overflow below 2^32 terms
    int db = deg(b);
    if (deg(a) < db) {
      Poly r(a);
      trim(r);
      return r;
    }
    u64 p = F.p();
    std::vector<std::pair<int, u64>> nz;
    for (int j = 0; j < db; ++j)
      if (b[j]) nz.emplace_back(j, b[j]);
    std::vector<u64> r(a.begin(), a.end());
    for (int i = deg(a); i >= db; --i) {
      u64 c = r[i] % p;
      if (!c) continue;
      u64 nc = p - c;
      u64* base = r.data() + (i - db);
      for (auto [j, bj] : nz) base[j] += nc * bj;
    }
    Poly out(db);
    for (int i = 0; i < db; ++i) out[i] = static_cast<Elem>(r[i] % p);
    trim(out);
    return out;
  }
  Poly q, r;
  divmod(F, a, b, q, r);
  return r;
}

Poly monic(const Field& F, const Poly& a) {
  if (a.empty()) return a;
  return scale(F, a, F.inv(a.back()));
}

Poly gcd(const Field& F, Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = mod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(F, a);
}

Poly mulmod(const Field& F, const Poly& a, const Poly& b, const Poly& m) { return mod(F, mul(F, a, b), m); }

Poly powmod(const Field& F, const Poly& a, u64 n, const Poly& m) {
  Poly r = mod(F, Poly{1}, m), b = mod(F, a, m);
  while (n) {
    if (n & 1) r = mulmod(F, r, b, m);
    n >>= 1;
    if (n) b = mulmod(F, b, b, m);
  }
  return r;
}

Poly compose_power(const Poly& f, u64 k) {
  if (f.empty()) return f;
  Poly r((f.size() - 1) * k + 1, 0);
  for (std::size_t i = 0; i < f.size(); ++i) r[i * k] = f[i];
  return r;
}

bool is_irreducible(const Field& F, const Poly& f) {
  int d = deg(f);
  if (d <= 0) return false;
  if (d == 1) return true;
  Poly x{0, 1};
  Poly h = x;
  for (int i = 1; i <= d / 2; ++i) {
    h = powmod(F, h, F.q(), f);
    Poly g = gcd(F, f, sub(F, h, x));
    if (deg(g) > 0) return false;
  }
  return true;
}

bool lex_less(const Poly& a, const Poly& b) {
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return a.size() < b.size();
}

Poly least_irreducible(const Field& F, unsigned d) {
  if (d == 1) return {0, 1};
  u64 q = F.q();
  // digits c_0..c_{d-1}; c_0 is the most significant for the order
  Poly c(d + 1, 0);
  c[d] = 1;
  c[0] = 1;
  for (;;) {
    if (is_irreducible(F, c)) return c;
    int i = static_cast<int>(d) - 1;
    while (i >= 0) {
      if (++c[i] < q) break;
      c[i] = 0;
      --i;
    }
    if (i < 0) throw Error(ErrorKind::BadParameters, "no irreducible found");
    if (c[0] == 0) c[0] = 1;
  }
}

Poly cyclotomic(const Field& F, u64 m) {
  // Phi_m = prod_{d | m} (x^d - 1)^{mu(m/d)}
  auto mu = [](u64 n) {
    int s = 1;
    for (auto [p, k] : factorize(n)) {
      (void)p;
      if (k > 1) return 0;
      s = -s;
    }
    return s;
  };
  Poly P{1};
  std::vector<u64> dens;
  for (u64 d : divisors(m)) {
    int u = mu(m / d);
    if (u == 1) {
      Poly r(P.size() + d, 0);
      for (std::size_t i = 0; i < P.size(); ++i) {
        r[i + d] = F.add(r[i + d], P[i]);
        r[i] = F.sub(r[i], P[i]);
      }
      P = std::move(r);
    } else if (u == -1) {
      dens.push_back(d);
    }
  }
  for (u64 d : dens) {
    // P = Q (x^d - 1): P_i = Q_{i-d} - Q_i
    std::size_t qs = P.size() - d;
    Poly Q(qs, 0);
    for (std::size_t i = 0; i < qs; ++i) {
      Elem prev = i >= d ? Q[i - d] : 0;
      Q[i] = F.sub(prev, P[i]);
    }
    P = std::move(Q);
  }
  trim(P);
  return P;
}

namespace {

// h -> h^q on F[x]/(f), as the linear map with rows x^(iq) mod f
class Frobenius {
 public:
  Frobenius(const Field& F, const Poly& f) : F_(F), n_(deg(f)) {
    Poly X = powmod(F, Poly{0, 1}, F.q(), f);
    rows_.reserve(n_);
    Poly r{1};
    for (int i = 0; i < n_; ++i) {
      rows_.push_back(r);
      rows_.back().resize(n_, 0);
      if (i + 1 < n_) r = mulmod(F, r, X, f);
    }
  }

  Poly apply(const Poly& h) const {
    if (F_.e() == 1 && F_.p() < (1u << 16)) {
      u64 p = F_.p();
      std::vector<u64> acc(n_, 0);
      for (std::size_t i = 0; i < h.size(); ++i) {
        u64 c = h[i];
        if (!c) continue;
        const Elem* row = rows_[i].data();
        for (int j = 0; j < n_; ++j) acc[j] += c * row[j];
      }
      Poly out(n_);
      for (int j = 0; j < n_; ++j) out[j] = static_cast<Elem>(acc[j] % p);
      trim(out);
      return out;
    }
    Poly out(n_, 0);
    for (std::size_t i = 0; i < h.size(); ++i) {
      if (!h[i]) continue;
      const Elem* row = rows_[i].data();
      for (int j = 0; j < n_; ++j)
        if (row[j]) out[j] = F_.add(out[j], F_.mul(h[i], row[j]));
    }
    trim(out);
    return out;
  }

 private:
  Field F_;
  int n_;
  std::vector<Poly> rows_;
};

// a proper factor of f, which is squarefree with all factors of degree d.
// Splits on t = sum_{j<d} h^(q^j), which lands in GF(q) on every component.
Poly split_once(const Field& F, const Poly& f, unsigned d, std::mt19937_64& rng) {
  int n = deg(f);
  u64 q = F.q();
  Frobenius frob(F, f);
  std::uniform_int_distribution<u64> dist(0, q - 1);
  for (;;) {
    Poly h(n);
    for (auto& c : h) c = static_cast<Elem>(dist(rng));
    trim(h);
    if (deg(h) < 1) continue;
    Poly t = h, c = h;
    for (unsigned j = 1; j < d; ++j) {
      c = frob.apply(c);
      t = add(F, t, c);
    }
    Poly g;
    if (q % 2 == 1) {
      g = sub(F, powmod(F, t, (q - 1) / 2, f), Poly{1});
    } else {
      // absolute trace down to GF(2)
      Poly s = t, c2 = t;
      for (unsigned i = 1; i < F.e(); ++i) {
        c2 = mulmod(F, c2, c2, f);
        s = add(F, s, c2);
      }
      g = s;
    }
    Poly u = gcd(F, f, g);
    if (deg(u) > 0 && deg(u) < n) return u;
  }
}

void edf_rec(const Field& F, const Poly& f, unsigned d, std::mt19937_64& rng, std::vector<Poly>& out) {
  if (deg(f) <= static_cast<int>(d)) {
    out.push_back(monic(F, f));
    return;
  }
  Poly u = split_once(F, f, d, rng), qq, rr;
  divmod(F, f, u, qq, rr);
  edf_rec(F, u, d, rng, out);
  edf_rec(F, qq, d, rng, out);
}

}  // namespace

Poly equal_degree_factor(const Field& F, const Poly& f, unsigned d) {
  std::mt19937_64 rng(0x6d65746163u + static_cast<u64>(deg(f)) * 131 + d);
  Poly cur = monic(F, f);
  // keep the lower-degree side of each split; ties go to the lex-smaller side
  while (deg(cur) > static_cast<int>(d)) {
    Poly u = split_once(F, cur, d, rng), qq, rr;
    divmod(F, cur, u, qq, rr);
    u = monic(F, u);
    qq = monic(F, qq);
    if (deg(u) < deg(qq) || (deg(u) == deg(qq) && lex_less(u, qq)))
      cur = std::move(u);
    else
      cur = std::move(qq);
  }
  return cur;
}

std::vector<Poly> equal_degree_factors(const Field& F, const Poly& f, unsigned d) {
  std::mt19937_64 rng(0x6d65746163u + static_cast<u64>(deg(f)) * 131 + d);
  std::vector<Poly> out;
  edf_rec(F, monic(F, f), d, rng, out);
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

}  // namespace poly

// ---------------------------------------------------------------- extensions

namespace {

// minimal polynomial of the deterministic primitive m-th root.
// Squarefree m: an irreducible factor of Phi_m. Otherwise m = p*m' with
// p | m': an irreducible factor of g(x^p), g the polynomial for m'.
// The factor is the one equal_degree_factor settles on.
Poly root_poly(const Field& F, u64 m) {
  if (m == 1) return {F.neg(1), 1};
  u64 o = mult_order(F.q() % m, m);
  // peel a step where the degree grows by p if there is one, so that any
  // real factoring happens low in the tower where degrees are small
  u64 step = 0;
  for (auto [p, k] : factorize(m)) {
    if (k < 2) continue;
    if (!step) step = p;
    if (mult_order(F.q() % (m / p), m / p) * p == o) {
      step = p;
      break;
    }
  }
  if (step) {
    Poly h = poly::compose_power(root_poly(F, m / step), step);
    if (poly::deg(h) == static_cast<int>(o)) return h;
    return poly::equal_degree_factor(F, h, static_cast<unsigned>(o));
  }
  Poly phi = poly::cyclotomic(F, m);
  if (poly::deg(phi) == static_cast<int>(o)) return phi;
  return poly::equal_degree_factor(F, phi, static_cast<unsigned>(o));
}

ExtField::Vec reduce(const ExtData& d, std::vector<Elem> a) {
  const Field& F = d.base;
  unsigned o = d.o;
  for (std::size_t i = a.size(); i-- > o;) {
    Elem c = a[i];
    if (!c) continue;
    // x^o = -sum f_j x^j
    for (unsigned j : d.f_nz) a[i - o + j] = F.sub(a[i - o + j], F.mul(c, d.f[j]));
    a[i] = 0;
  }
  a.resize(o, 0);
  return a;
}

// Newton's identities on a monic g of degree o, then the linear recurrence
std::vector<Elem> newton_sums(const Field& F, const Poly& g, const std::vector<unsigned>& nz, u64 len) {
  u64 o = static_cast<u64>(poly::deg(g));
  std::vector<Elem> s(len, 0);
  if (len == 0) return s;
  s[0] = F.from_int(static_cast<i64>(o % F.p()));
  for (u64 t = 1; t < len; ++t) {
    Elem acc = 0;
    if (t <= o) acc = F.mul(F.from_int(static_cast<i64>(t % F.p())), g[o - t]);
    for (unsigned j : nz) {
      if (t + j < o + 1) continue;
      acc = F.add(acc, F.mul(g[j], s[t + j - o]));
    }
    s[t] = F.neg(acc);
  }
  return s;
}

// f = g(x^P): the roots come in full cosets of the P-th roots of unity, so
// s_t(f) = P s_{t/P}(g) when P | t and 0 otherwise
std::vector<Elem> power_sums(const ExtData& d, u64 len) {
  const Field& F = d.base;
  u64 P = d.stride;
  auto core = newton_sums(F, d.core, d.core_nz, (len + P - 1) / P);
  if (P == 1) return core;
  std::vector<Elem> s(len, 0);
  Elem Pm = F.from_int(static_cast<i64>(P % F.p()));
  for (u64 t = 0; t < len; t += P) s[t] = F.mul(Pm, core[t / P]);
  return s;
}

}  // namespace

ExtField ExtField::for_root(const Field& base, u64 m) {
  if (m == 0 || std::gcd(base.q(), m) != 1) {
    throw Error(ErrorKind::NotCoprime, "gcd(q, m) != 1 for q=" + std::to_string(base.q()) + " m=" + std::to_string(m));
  }
  static std::map<std::tuple<u64, unsigned, u64>, ExtField> cache;
  auto key = std::make_tuple(base.p(), base.e(), m);
  {
    std::lock_guard<std::mutex> lk(g_cache_mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto d = std::make_shared<ExtData>();
  d->base = base;
  d->m = m;
  d->f = root_poly(base, m);
  d->o = static_cast<unsigned>(poly::deg(d->f));
  u64 P = d->o;
  for (unsigned i = 0; i < d->o; ++i)
    if (d->f[i]) {
      d->f_nz.push_back(i);
      P = std::gcd(P, static_cast<u64>(i));
    }
  d->stride = P;
  for (unsigned i = 0; i <= d->o; i += static_cast<unsigned>(P)) d->core.push_back(d->f[i]);
  for (unsigned i = 0; i + 1 < d->core.size(); ++i)
    if (d->core[i]) d->core_nz.push_back(i);
  d->psum = power_sums(*d, d->o);
  ExtField E;
  E.d_ = d;
  std::lock_guard<std::mutex> lk(g_cache_mu);
  cache.emplace(key, E);
  return E;
}

const Field& ExtField::base() const { return d_->base; }
u64 ExtField::m() const { return d_->m; }
unsigned ExtField::o() const { return d_->o; }
const Poly& ExtField::modulus() const { return d_->f; }

ExtField::Vec ExtField::zero() const { return Vec(d_->o, 0); }
ExtField::Vec ExtField::one() const { return from_base(1); }
ExtField::Vec ExtField::from_base(Elem c) const {
  Vec v(d_->o, 0);
  v[0] = c;
  return v;
}

ExtField::Vec ExtField::xi() const {
  if (d_->o == 1) return from_base(d_->base.neg(d_->f[0]));
  Vec v(d_->o, 0);
  v[1] = 1;
  return v;
}

ExtField::Vec ExtField::add(const Vec& a, const Vec& b) const {
  Vec r(d_->o);
  for (unsigned i = 0; i < d_->o; ++i) r[i] = d_->base.add(a[i], b[i]);
  return r;
}

ExtField::Vec ExtField::mul(const Vec& a, const Vec& b) const {
  Poly pa(a), pb(b);
  poly::trim(pa);
  poly::trim(pb);
  Poly r = poly::mul(d_->base, pa, pb);
  return reduce(*d_, std::move(r));
}

ExtField::Vec ExtField::pow(const Vec& a, u64 n) const {
  Vec r = one(), b = a;
  while (n) {
    if (n & 1) r = mul(r, b);
    n >>= 1;
    if (n) b = mul(b, b);
  }
  return r;
}

ExtField::Vec ExtField::frobenius(const Vec& a) const { return pow(a, d_->base.q()); }

bool ExtField::is_one(const Vec& a) const {
  if (a.empty() || a[0] != 1) return false;
  for (std::size_t i = 1; i < a.size(); ++i)
    if (a[i]) return false;
  return true;
}

Elem ExtField::trace(const Vec& a) const {
  const Field& F = d_->base;
  Elem s = 0;
  for (unsigned i = 0; i < d_->o; ++i)
    if (a[i]) s = F.add(s, F.mul(a[i], d_->psum[i]));
  return s;
}

Elem ExtField::trace_by_frobenius(const Vec& a) const {
  Vec s = zero(), c = a;
  for (unsigned j = 0; j < d_->o; ++j) {
    s = add(s, c);
    if (j + 1 < d_->o) c = frobenius(c);
  }
  for (unsigned i = 1; i < d_->o; ++i)
    if (s[i]) throw Error(ErrorKind::BadParameters, "trace left the base field");
  return s[0];
}

std::vector<Elem> ExtField::root_traces(u64 len) const {
  if (d_->o == 1) {
    // xi is the constant -f_0
    const Field& F = d_->base;
    Elem z = F.neg(d_->f[0]);
    std::vector<Elem> t(len);
    Elem c = 1;
    for (u64 i = 0; i < len; ++i) {
      t[i] = c;
      c = F.mul(c, z);
    }
    return t;
  }
  return power_sums(*d_, len);
}

ExtField extension_for_root(const Field& base, u64 m) { return ExtField::for_root(base, m); }

Elem rel_trace(const ExtField& ext, const ExtField::Vec& x) { return ext.trace(x); }

std::vector<Elem> root_trace_table(const Field& base, u64 m) { return ExtField::for_root(base, m).root_traces(m); }

// ---------------------------------------------------------------- trace predicates

TwoAdic two_adic(u64 q) {
  if (q % 2 == 0) throw Error(ErrorKind::EvenQ, "q = " + std::to_string(q) + " is even");
  if (q % 4 == 1) return {vp(q - 1, 2), 1};
  return {vp(q + 1, 2), -1};
}

int odd_i0(u64 q, u64 p) {
  if (q % p == 0) throw Error(ErrorKind::NotCoprime, "p divides q");
  u64 o = mult_order(q % p, p);
  // work mod a p-power that fits comfortably in 64 bits
  u64 pk = p;
  int K = 1;
  while (pk <= (1ull << 40) / p) {
    pk *= p;
    ++K;
  }
  u64 x = powmod(q % pk, o, pk);
  u64 y = (x + pk - 1) % pk;
  if (y == 0) return K;
  return vp(y, p);
}

bool trace_vanishes_2power(u64 q, int i) {
  TwoAdic t = two_adic(q);
  if (i < 1) throw Error(ErrorKind::BadParameters, "i must be >= 1");
  if (t.sign == 1) return i > t.i0;
  return i > t.i0 || i == 2;
}

bool trace_vanishes_two_odd_primes(u64 q, u64 p1, u64 p2, int j1, int j2, i64 k) {
  if (!is_prime(p1) || !is_prime(p2) || p1 == 2 || p2 == 2 || p1 >= p2) {
    throw Error(ErrorKind::BadParameters, "need odd primes p1 < p2");
  }
  if (j1 < 1 || j2 < 1) throw Error(ErrorKind::BadParameters, "j1, j2 must be >= 1");
  if (std::gcd(q, p1 * p2) != 1) throw Error(ErrorKind::NotCoprime, "gcd(q, p1 p2) != 1");
  if ((p2 - 1) % p1 == 0) throw Error(ErrorKind::HypothesisViolated, "p1 divides p2 - 1");
  u64 n = ipow(p1, j1) * ipow(p2, j2);
  if (std::gcd(static_cast<u64>(mod(k, static_cast<i64>(n))), n) != 1) {
    throw Error(ErrorKind::NotCoprime, "k not a unit");
  }
  return j1 > odd_i0(q, p1) || j2 > odd_i0(q, p2);
}

bool trace_vanishes_2p(u64 q, u64 p, int j1, int j2, i64 k) {
  if (!is_prime(p) || p == 2) throw Error(ErrorKind::BadParameters, "p must be an odd prime");
  if (j1 < 1 || j2 < 1) throw Error(ErrorKind::BadParameters, "j1, j2 must be >= 1");
  TwoAdic t = two_adic(q);
  if (q % p == 0) throw Error(ErrorKind::NotCoprime, "p divides q");
  u64 n = ipow(2, j1) * ipow(p, j2);
  if (std::gcd(static_cast<u64>(mod(k, static_cast<i64>(n))), n) != 1) {
    throw Error(ErrorKind::NotCoprime, "k not a unit");
  }
  return j2 > odd_i0(q, p) || j1 > t.i0 || (j1 == 2 && t.sign == -1);
}

}  // namespace metacode
