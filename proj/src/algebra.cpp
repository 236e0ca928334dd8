#include "metacode/algebra.hpp"

#include <algorithm>

#include "metacode/error.hpp"

namespace metacode {

Alg::Alg(const Group& G, const Field& F) : G_(G), F_(F), c_(G.order(), 0) {}

Alg Alg::one(const Group& G, const Field& F) { return basis(G, F, 0, 1); }

Alg Alg::basis(const Group& G, const Field& F, Idx g, Elem c) {
  Alg a(G, F);
  a.c_[g] = c;
  return a;
}

Alg Alg::operator+(const Alg& o) const {
  Alg r = *this;
  r += o;
  return r;
}

Alg& Alg::operator+=(const Alg& o) {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (o.c_[i]) c_[i] = F_.add(c_[i], o.c_[i]);
  return *this;
}

Alg Alg::operator-(const Alg& o) const {
  Alg r = *this;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (o.c_[i]) r.c_[i] = F_.sub(r.c_[i], o.c_[i]);
  return r;
}

Alg Alg::scaled(Elem c) const {
  Alg r = *this;
  for (auto& x : r.c_)
    if (x) x = F_.mul(x, c);
  return r;
}

Alg Alg::left(Idx g) const {
  Alg r(G_, F_);
  for (Idx h = 0; h < c_.size(); ++h)
    if (c_[h]) r.c_[G_.mul(g, h)] = c_[h];
  return r;
}

Alg Alg::right(Idx g) const {
  Alg r(G_, F_);
  for (Idx h = 0; h < c_.size(); ++h)
    if (c_[h]) r.c_[G_.mul(h, g)] = c_[h];
  return r;
}

Alg Alg::conj(Idx x) const {
  Alg r(G_, F_);
  Idx xi = G_.inv(x);
  for (Idx h = 0; h < c_.size(); ++h)
    if (c_[h]) r.c_[G_.mul(xi, G_.mul(h, x))] = c_[h];
  return r;
}

u64 Alg::weight() const {
  u64 w = 0;
  for (Elem x : c_) w += x != 0;
  return w;
}

bool Alg::is_zero() const {
  for (Elem x : c_)
    if (x) return false;
  return true;
}

std::vector<std::pair<Idx, Elem>> Alg::sparse() const {
  std::vector<std::pair<Idx, Elem>> s;
  for (Idx i = 0; i < c_.size(); ++i)
    if (c_[i]) s.emplace_back(i, c_[i]);
  return s;
}

bool Alg::is_central() const {
  for (Idx g : G_.generators())
    if (left(g) != right(g)) return false;
  return true;
}

namespace {

// F_2 product through a metacyclic view: each b-fibre is a bitset over the
// exponent of a, and multiplying by a^i is a cyclic rotation.
std::vector<Elem> mul_f2_view(const MetacyclicView& v, const std::vector<Elem>& x, const std::vector<Elem>& y) {
  const u64 N = v.N, M = v.M, W = (N + 63) / 64;
  std::vector<std::vector<u64>> xb(M);  // set exponents of a per fibre
  std::vector<std::vector<u64>> yb(M);
  std::vector<std::vector<u64>> acc(M, std::vector<u64>(W, 0));
  for (Idx g = 0; g < x.size(); ++g) {
    Idx t = v.from_group[g];
    if (x[g]) xb[t % M].push_back(t / M);
    if (y[g]) yb[t % M].push_back(t / M);
  }
  u64 ri = N > 1 ? invmod(static_cast<i64>(v.r), N) : 0;
  std::vector<u64> rho(M);
  u64 c = 1 % N;
  for (u64 j = 0; j < M; ++j, c = mulmod(c, ri, N)) rho[j] = c;
  std::vector<u64> D(2 * W + 2);
  for (u64 j = 0; j < M; ++j) {
    if (xb[j].empty()) continue;
    for (u64 k = 0; k < M; ++k) {
      if (yb[k].empty()) continue;
      std::fill(D.begin(), D.end(), 0);
      for (u64 i2 : yb[k]) {
        u64 t = mulmod(i2, rho[j], N);
        D[t >> 6] ^= 1ull << (t & 63);
        D[(t + N) >> 6] ^= 1ull << ((t + N) & 63);
      }
      u64 l = j + k, extra = 0;
      if (l >= M) {
        l -= M;
        extra = v.s;
      }
      u64* out = acc[l].data();
      for (u64 i1 : xb[j]) {
        u64 sh = (i1 + extra) % N;
        u64 st = N - sh;
        u64 wo = st >> 6, bo = st & 63;
        const u64* src = D.data() + wo;
        if (bo == 0) {
          for (u64 w = 0; w < W; ++w) out[w] ^= src[w];
        } else {
          for (u64 w = 0; w < W; ++w) out[w] ^= (src[w] >> bo) | (src[w + 1] << (64 - bo));
        }
      }
    }
  }
  std::vector<Elem> r(x.size(), 0);
  for (u64 l = 0; l < M; ++l)
    for (u64 u = 0; u < N; ++u)
      if ((acc[l][u >> 6] >> (u & 63)) & 1) r[v.to_group[u * M + l]] = 1;
  return r;
}

}  // namespace

Alg Alg::operator*(const Alg& o) const {
  Alg r(G_, F_);
  auto sx = sparse(), sy = o.sparse();
  if (sx.empty() || sy.empty()) return r;
  double work = static_cast<double>(sx.size()) * static_cast<double>(sy.size());
  if (F_.q() == 2 && work > 1e6) {
    if (auto v = metacyclic_view(G_)) {
      r.c_ = mul_f2_view(*v, c_, o.c_);
      return r;
    }
  }
  if (F_.e() == 1 && F_.p() < (1u << 16)) {
    // lazy reduction: fold the accumulator before it can overflow
    const u64 p = F_.p(), pp = (p - 1) * (p - 1) + 1;
    const u64 rows_per_fold = std::max<u64>(1, (1ull << 62) / (pp * sy.size()));
    std::vector<u64> acc(c_.size(), 0);
    u64 rows = 0;
    for (auto [g, a] : sx) {
      for (auto [h, b] : sy) acc[G_.mul(g, h)] += static_cast<u64>(a) * b;
      if (++rows == rows_per_fold) {
        for (auto& z : acc) z %= p;
        rows = 0;
      }
    }
    for (std::size_t i = 0; i < acc.size(); ++i) r.c_[i] = static_cast<Elem>(acc[i] % F_.p());
    return r;
  }
  for (auto [g, a] : sx)
    for (auto [h, b] : sy) r.add_at(G_.mul(g, h), F_.mul(a, b));
  return r;
}

Alg hat(const Group& G, const Field& F, const Subgroup& H) {
  if (H.order() % F.p() == 0)
    throw Error(ErrorKind::NotCoprime, "|H| = " + std::to_string(H.order()) + " is divisible by the characteristic");
  Elem c = F.inv(F.from_int(static_cast<i64>(H.order())));
  Alg a(G, F);
  for (Idx h : H.elems) a.set(h, c);
  return a;
}

}  // namespace metacode
