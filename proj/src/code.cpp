#include "metacode/code.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <map>
#include <numeric>
#include <sstream>
#include <thread>

#include "metacode/error.hpp"

namespace metacode {

// ---------------------------------------------------------------- linear algebra

namespace {

// Incremental echelon basis; rows are normalized to a leading 1.
struct Echelon {
  Field F;
  u64 n;
  std::vector<std::vector<Elem>> rows;
  std::vector<u64> pivots;
  std::vector<long> row_of;  // pivot column -> row, or -1

  Echelon(const Field& f, u64 len) : F(f), n(len), row_of(len, -1) {}

  void axpy(std::vector<Elem>& v, Elem c, const std::vector<Elem>& r) const {
    if (F.p() == 2 && F.e() == 1) {
      for (u64 x = 0; x < n; ++x) v[x] ^= r[x];
      return;
    }
    if (F.e() == 1) {
      const u64 p = F.p();
      for (u64 x = 0; x < n; ++x)
        if (r[x]) v[x] = static_cast<Elem>((v[x] + static_cast<u64>(c) * r[x]) % p);
      return;
    }
    for (u64 x = 0; x < n; ++x)
      if (r[x]) v[x] = F.add(v[x], F.mul(c, r[x]));
  }

  // reduces v; returns true and stores it when independent
  bool insert(std::vector<Elem> v) {
    if (rows.size() == n) return false;
    for (u64 x = 0; x < n; ++x) {
      if (!v[x]) continue;
      long r = row_of[x];
      if (r < 0) {
        Elem inv = F.inv(v[x]);
        if (inv != 1)
          for (u64 y = x; y < n; ++y)
            if (v[y]) v[y] = F.mul(v[y], inv);
        row_of[x] = static_cast<long>(rows.size());
        pivots.push_back(x);
        rows.push_back(std::move(v));
        return true;
      }
      axpy(v, F.neg(v[x]), rows[r]);
    }
    return false;
  }

  // back substitution, then rows sorted by pivot
  void reduce() {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      u64 c = pivots[i];
      for (std::size_t j = 0; j < rows.size(); ++j)
        if (j != i && rows[j][c]) axpy(rows[j], F.neg(rows[j][c]), rows[i]);
    }
    std::vector<std::size_t> ord(rows.size());
    std::iota(ord.begin(), ord.end(), 0);
    std::sort(ord.begin(), ord.end(), [&](auto a, auto b) { return pivots[a] < pivots[b]; });
    std::vector<std::vector<Elem>> r2;
    std::vector<u64> p2;
    for (auto i : ord) {
      r2.push_back(std::move(rows[i]));
      p2.push_back(pivots[i]);
    }
    rows = std::move(r2);
    pivots = std::move(p2);
  }
};

}  // namespace

LinearCode span_code(const Field& F, u64 n, const std::vector<std::vector<Elem>>& vectors) {
  Echelon E(F, n);
  for (auto& v : vectors) E.insert(v);
  E.reduce();
  LinearCode c;
  c.F = F;
  c.n = n;
  c.k = E.rows.size();
  c.rows = std::move(E.rows);
  c.pivots = std::move(E.pivots);
  return c;
}

u64 rank_of(const Field& F, u64 n, const std::vector<std::vector<Elem>>& vectors) {
  Echelon E(F, n);
  for (auto& v : vectors) E.insert(v);
  return E.rows.size();
}

LinearCode ideal_to_code(const Alg& e, Side side, const std::string& provenance) {
  const Group& G = e.group();
  const Field& F = e.field();
  const u64 n = G.order();
  Echelon E(F, n);
  bool two = side == Side::TwoSided && !e.is_central();
  for (Idx g = 0; g < n && E.rows.size() < n; ++g) {
    Alg ge = e.left(g);
    if (!two) {
      E.insert(ge.coeffs());
      continue;
    }
    for (Idx h = 0; h < n && E.rows.size() < n; ++h) E.insert(ge.right(h).coeffs());
  }
  E.reduce();
  LinearCode c;
  c.F = F;
  c.n = n;
  c.k = E.rows.size();
  c.rows = std::move(E.rows);
  c.pivots = std::move(E.pivots);
  c.provenance = provenance;
  c.side = side;
  return c;
}

// ---------------------------------------------------------------- distance

unsigned default_threads() {
  if (const char* s = std::getenv("METACODE_THREADS")) {
    int v = std::atoi(s);
    if (v > 0) return static_cast<unsigned>(v);
  }
  unsigned h = std::thread::hardware_concurrency();
  return h ? h : 1;
}

namespace {

// Codewords as P planes of L bytes: plane t holds the t-th GF(p) coordinate
// of every position. Addition is bytewise mod p; weight counts positions with
// a nonzero byte in some plane.
struct Packed {
  u64 n = 0, L = 0;
  unsigned P = 1;
  std::uint8_t p = 2;
  std::size_t size() const { return static_cast<std::size_t>(P) * L; }
};

using Bytes = std::vector<std::uint8_t>;

Packed layout(const Field& F, u64 n) {
  Packed k;
  k.n = n;
  k.L = (n + 31) / 32 * 32;
  k.P = F.e();
  k.p = static_cast<std::uint8_t>(F.p());
  return k;
}

Bytes pack(const Packed& K, const Field& F, const std::vector<Elem>& v) {
  Bytes b(K.size(), 0);
  for (u64 x = 0; x < K.n; ++x) {
    if (!v[x]) continue;
    if (K.P == 1) {
      b[x] = static_cast<std::uint8_t>(v[x]);
      continue;
    }
    auto cs = F.coords(v[x]);
    for (unsigned t = 0; t < K.P && t < cs.size(); ++t) b[t * K.L + x] = static_cast<std::uint8_t>(cs[t]);
  }
  return b;
}

std::vector<Elem> unpack(const Packed& K, const Field& F, const Bytes& b) {
  std::vector<Elem> v(K.n, 0);
  for (u64 x = 0; x < K.n; ++x) {
    Elem e = 0, pw = 1;
    for (unsigned t = 0; t < K.P; ++t) {
      e += b[t * K.L + x] * pw;
      pw *= static_cast<Elem>(F.p());
    }
    v[x] = e;
  }
  (void)F;
  return v;
}

inline void add_into(std::uint8_t* __restrict c, const std::uint8_t* __restrict r, std::size_t len,
                     std::uint8_t p) {
  for (std::size_t x = 0; x < len; ++x) {
    std::uint8_t v = static_cast<std::uint8_t>(c[x] + r[x]);
    c[x] = v >= p ? static_cast<std::uint8_t>(v - p) : v;
  }
}

inline unsigned weight_of(const Packed& K, const std::uint8_t* c) {
  unsigned w = 0;
  if (K.P == 1) {
    for (std::size_t x = 0; x < K.L; ++x) w += c[x] != 0;
    return w;
  }
  for (std::size_t x = 0; x < K.L; ++x) {
    std::uint8_t o = 0;
    for (unsigned t = 0; t < K.P; ++t) o |= c[t * K.L + x];
    w += o != 0;
  }
  return w;
}

// prime field, one plane: add and count in one pass
inline unsigned add_weight1(std::uint8_t* __restrict c, const std::uint8_t* __restrict r, std::size_t L,
                            std::uint8_t p) {
  unsigned w = 0;
  for (std::size_t x = 0; x < L; ++x) {
    std::uint8_t v = static_cast<std::uint8_t>(c[x] + r[x]);
    v = v >= p ? static_cast<std::uint8_t>(v - p) : v;
    c[x] = v;
    w += v != 0;
  }
  return w;
}

struct Best {
  unsigned w = ~0u;
  std::size_t item = ~std::size_t(0);
  Bytes word;
};

// GF(p)-generators of the code: alpha^t * row_i, ordered by (i, t)
std::vector<Bytes> expanded_generators(const Packed& K, const LinearCode& c) {
  const Field& F = c.F;
  std::vector<Bytes> gens;
  for (u64 i = 0; i < c.k; ++i) {
    for (unsigned t = 0; t < K.P; ++t) {
      Elem alpha = static_cast<Elem>(ipow(F.p(), t));
      std::vector<Elem> v(c.n);
      for (u64 x = 0; x < c.n; ++x) v[x] = c.rows[i][x] ? F.mul(alpha, c.rows[i][x]) : 0;
      gens.push_back(pack(K, F, v));
    }
  }
  return gens;
}

// Work item: top message row `top` with coefficient 1, the `fixed` expanded
// digits just below it set to `prefix`, the remaining `free` digits run
// through a p-ary Gray code.
struct Item {
  u64 top;
  u64 free;
  u64 fixed;
  u64 prefix;
};

void run_item(const Packed& K, const std::vector<Bytes>& gens, const Item& it, std::size_t id, Best& best) {
  const std::uint8_t p = K.p;
  const std::size_t len = K.size();
  Bytes c = gens[it.top];
  u64 pre = it.prefix;
  for (u64 d = 0; d < it.fixed; ++d) {
    u64 digit = pre % p;
    pre /= p;
    for (u64 t = 0; t < digit; ++t) add_into(c.data(), gens[it.free + d].data(), len, p);
  }
  auto consider = [&](unsigned w) {
    if (w < best.w || (w == best.w && id < best.item)) {
      best.w = w;
      best.item = id;
      best.word = c;
    }
  };
  consider(weight_of(K, c.data()));
  if (it.free == 0) return;
  u64 total = 1;
  for (u64 d = 0; d < it.free; ++d) total *= p;
  // step t changes digit v_p(t) by +1
  for (u64 t = 1; t < total; ++t) {
    u64 x = t, d = 0;
    while (x % p == 0) {
      x /= p;
      ++d;
    }
    unsigned w;
    if (K.P == 1)
      w = add_weight1(c.data(), gens[d].data(), K.L, p);
    else {
      add_into(c.data(), gens[d].data(), len, p);
      w = weight_of(K, c.data());
    }
    if (w < best.w) {
      best.w = w;
      best.item = id;
      best.word = c;
    }
  }
}

Distance exhaustive(const LinearCode& code, unsigned threads) {
  Packed K = layout(code.F, code.n);
  auto gens = expanded_generators(K, code);
  const u64 p = K.p;
  // split large blocks so that items carry at most ~p^14 words
  std::vector<Item> items;
  for (u64 top = 0; top < code.k; ++top) {
    u64 lower = top * K.P;
    u64 fixed = lower > 14 ? std::min<u64>(lower - 14, 6) : 0;
    u64 count = ipow(p, static_cast<unsigned>(fixed));
    for (u64 pre = 0; pre < count; ++pre) items.push_back({top * K.P, lower - fixed, fixed, pre});
  }
  std::atomic<std::size_t> next{0};
  unsigned nt = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(items.size())));
  std::vector<Best> bests(nt);
  auto worker = [&](unsigned id) {
    for (std::size_t i; (i = next.fetch_add(1)) < items.size();) run_item(K, gens, items[i], i, bests[id]);
  };
  if (nt == 1)
    worker(0);
  else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nt; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }
  Best b;
  for (auto& x : bests)
    if (x.w < b.w || (x.w == b.w && x.item < b.item)) b = x;
  Distance d;
  d.d_lo = d.d_hi = b.w;
  d.witness = unpack(K, code.F, b.word);
  d.exhaustive = true;
  return d;
}

// Disjoint information sets, each with a generator matrix systematic on it.
struct InfoSet {
  std::vector<u64> cols;
  std::vector<std::vector<Elem>> rows;  // k x n, identity on cols
};

std::vector<InfoSet> disjoint_information_sets(const LinearCode& c) {
  std::vector<InfoSet> out;
  std::vector<char> used(c.n, 0);
  for (;;) {
    std::vector<u64> free;
    for (u64 x = 0; x < c.n; ++x)
      if (!used[x]) free.push_back(x);
    if (free.size() < c.k) break;
    // eliminate with pivots restricted to free columns, in order
    auto rows = c.rows;
    const Field& F = c.F;
    std::vector<u64> piv;
    std::size_t r = 0;
    for (u64 col : free) {
      if (r == c.k) break;
      std::size_t s = r;
      while (s < c.k && rows[s][col] == 0) ++s;
      if (s == c.k) continue;
      std::swap(rows[r], rows[s]);
      Elem inv = F.inv(rows[r][col]);
      for (auto& v : rows[r]) v = F.mul(v, inv);
      for (std::size_t t = 0; t < c.k; ++t) {
        if (t == r || rows[t][col] == 0) continue;
        Elem f = F.neg(rows[t][col]);
        for (u64 x = 0; x < c.n; ++x)
          if (rows[r][x]) rows[t][x] = F.add(rows[t][x], F.mul(f, rows[r][x]));
      }
      piv.push_back(col);
      ++r;
    }
    if (r < c.k) break;
    for (u64 col : piv) used[col] = 1;
    out.push_back({piv, rows});
  }
  return out;
}

double binom(u64 n, u64 k) {
  double r = 1;
  for (u64 i = 0; i < k; ++i) r = r * static_cast<double>(n - i) / static_cast<double>(i + 1);
  return r;
}

// all messages of weight exactly w (first nonzero coefficient 1), codewords
// built incrementally
void enumerate_weight(const Packed& K, const std::vector<std::vector<Bytes>>& mult, u64 k, u64 w, Best& best,
                      std::size_t tag) {
  const std::size_t len = K.size();
  const u64 q1 = mult[0].size();
  std::vector<Bytes> stack(w + 1, Bytes(len, 0));
  std::vector<u64> pos(w);
  // recursive over positions and coefficients
  auto rec = [&](auto&& self, u64 depth, u64 start) -> void {
    if (depth == w) {
      unsigned wt = weight_of(K, stack[depth].data());
      if (wt < best.w) {
        best.w = wt;
        best.item = tag;
        best.word = stack[depth];
      }
      return;
    }
    for (u64 i = start; i + (w - depth) <= k; ++i) {
      u64 cmax = depth == 0 ? 1 : q1;
      for (u64 s = 0; s < cmax; ++s) {
        stack[depth + 1] = stack[depth];
        add_into(stack[depth + 1].data(), mult[i][s].data(), len, K.p);
        self(self, depth + 1, i + 1);
      }
    }
  };
  rec(rec, 0, 0);
}

Distance interval(const LinearCode& code, double budget) {
  const Field& F = code.F;
  Packed K = layout(F, code.n);
  auto sets = disjoint_information_sets(code);
  const u64 r = sets.size();
  const u64 q1 = F.q() - 1;
  // mult[set][row][s] = (s+1-th nonzero scalar) * row, packed
  std::vector<std::vector<std::vector<Bytes>>> mult(r);
  std::vector<Elem> scalars;
  for (Elem s = 1; s < F.q(); ++s) scalars.push_back(s);
  for (u64 j = 0; j < r; ++j) {
    mult[j].resize(code.k);
    for (u64 i = 0; i < code.k; ++i)
      for (Elem s : scalars) {
        std::vector<Elem> v(code.n);
        for (u64 x = 0; x < code.n; ++x) v[x] = sets[j].rows[i][x] ? F.mul(s, sets[j].rows[i][x]) : 0;
        mult[j][i].push_back(pack(K, F, v));
      }
  }
  Best best;
  // rows of the echelon form are codewords too
  for (u64 i = 0; i < code.k; ++i) {
    Bytes b = pack(K, F, code.rows[i]);
    unsigned w = weight_of(K, b.data());
    if (w < best.w) {
      best.w = w;
      best.word = b;
    }
  }
  u64 lo = 1;
  double spent = 0;
  for (u64 w = 1; w <= code.k && lo < best.w; ++w) {
    double cost = static_cast<double>(r) * binom(code.k, w) * std::pow(static_cast<double>(q1), w - 1);
    if (spent + cost > budget) break;
    spent += cost;
    for (u64 j = 0; j < r; ++j) enumerate_weight(K, mult[j], code.k, w, best, j);
    lo = std::max<u64>(lo, r * (w + 1));
    if (w == code.k) lo = best.w;  // every message seen
  }
  Distance d;
  d.d_hi = best.w;
  d.d_lo = std::min<u64>(lo, best.w);
  d.witness = unpack(K, F, best.word);
  d.exhaustive = false;
  return d;
}

}  // namespace

Distance min_distance(const LinearCode& c, const DistanceOptions& opt) {
  if (c.k == 0) throw Error(ErrorKind::ZeroCode, "the code is zero-dimensional");
  double words = std::pow(static_cast<double>(c.F.q()), static_cast<double>(c.k));
  if (!opt.force_interval && words <= opt.budget)
    return exhaustive(c, opt.threads ? opt.threads : default_threads());
  return interval(c, std::max(opt.budget, 1e6));
}

// ---------------------------------------------------------------- dimension and distance bounds

CodeBounds theorem21_bounds(const Group& G, const Field& F, const Subgroup& K, const Alg& e) {
  auto g = quotient_is_cyclic(G, K);
  if (!g) throw Error(ErrorKind::QuotientNotCyclic, "G/K is not cyclic");
  CodeBounds b;
  b.source = "(G,K) bound";
  const u64 idx = G.order() / K.order();
  b.dim = idx == 1 ? 1 : mult_order(F.q() % idx, idx);
  b.d_max = e.weight();
  if (idx == 1) {
    b.d_min = G.order();
    b.d_exact = true;
  } else {
    b.d_min = 2 * K.order();
    auto [p, j] = prime_power(idx);
    if (p > 2 && b.dim == euler_phi(idx)) {
      b.d_max = b.d_min;
      b.d_exact = true;
    }
  }
  // {e, e g, ..., e g^(o-1)}
  std::vector<std::vector<Elem>> basis;
  Alg x = e;
  for (u64 i = 0; i < b.dim; ++i) {
    basis.push_back(x.coeffs());
    x = x.right(*g);
  }
  b.basis_ok = rank_of(F, G.order(), basis) == b.dim;
  return b;
}

namespace {

struct SplitShape {
  u64 p1, m, p2, l;
};

SplitShape split_shape(const Group& G) {
  if (G.is_product() || G.s() != 0) throw Error(ErrorKind::BadParameters, "need a split metacyclic group");
  auto [p1, m] = prime_power(G.N());
  auto [p2, l] = prime_power(G.M());
  if (!p1 || !p2 || p1 == p2 || mult_order(G.r(), G.N()) != G.M())
    throw Error(ErrorKind::BadParameters, "need C_(p1^m) x| C_(p2^l) with faithful action");
  return {p1, static_cast<u64>(m), p2, static_cast<u64>(l)};
}

int i0_of(u64 q, u64 p) { return p == 2 ? two_adic(q).i0 : odd_i0(q, p); }

}  // namespace

CodeBounds theorem61_params(const Group& G, const Field& F, int j1, u64 beta) {
  auto s = split_shape(G);
  const u64 q = F.q();
  const u64 pj = ipow(s.p1, static_cast<unsigned>(j1));
  const u64 p2l = ipow(s.p2, static_cast<unsigned>(s.l));
  const u64 o = mult_order(q % pj, pj);
  const int lambda = vp(std::gcd(beta, p2l), s.p2);
  u64 omega0 = 1;
  while (!in_cyclic_subgroup(powmod(G.r() % pj, omega0, pj), q % pj, pj)) ++omega0;
  int lambda0 = vp(std::gcd(omega0, p2l), s.p2);
  CodeBounds b;
  b.source = "e^beta bound";
  b.dim = o * ipow(s.p2, static_cast<unsigned>(lambda + lambda0));
  const u64 fib = ipow(s.p2, static_cast<unsigned>(s.l - lambda));
  const int i0 = i0_of(q, s.p1);
  b.d_min = 2 * ipow(s.p1, static_cast<unsigned>(s.m - j1)) * fib;
  if (j1 <= i0)
    b.d_max = ipow(s.p1, static_cast<unsigned>(s.m)) * fib;
  else
    b.d_max = ipow(s.p1, static_cast<unsigned>(s.m - j1 + i0)) * fib;
  return b;
}

CodeBounds ordinary_2group_params(const Group& G, const Field& F) {
  auto [two, n1] = prime_power(G.order());
  const u64 N = G.N();
  if (two != 2 || G.M() != 2 || G.s() != 0 || G.r() != 1 + N / 2 || N < 8)
    throw Error(ErrorKind::RegimeMismatch, "need the ordinary metacyclic 2-group");
  const int n = n1 - 1;
  const u64 q = F.q();
  const u64 o = mult_order(q % N, N);
  const bool in = in_cyclic_subgroup(1 + N / 2, q % N, N);
  CodeBounds b;
  b.source = "e_2^n bound";
  b.dim = (in ? 2 : 4) * o;
  b.d_min = 2;
  auto t = two_adic(q);
  const u64 P = u64(1) << t.i0;
  if (t.sign == 1) {
    b.d_max = P;
  } else if (in) {
    if (n == 2) {
      b.d_max = 2;
      b.d_exact = true;
    } else if (n == t.i0)
      b.d_max = P;
    else if (t.i0 < n)
      b.d_max = P - 2;
    else
      b.d_max = G.order();  // no row for i0 > n
  } else {
    if (n == t.i0 && n > 2)
      b.d_max = P / 2;
    else if (t.i0 < n)
      b.d_max = P - 2;
    else
      b.d_max = G.order();
  }
  return b;
}

CodeBounds ordinary_pgroup_params(const Group& G, const Field& F) {
  auto [p, n1] = prime_power(G.order());
  const u64 N = G.N();
  if (p == 0 || p == 2 || G.M() != p || G.s() != 0 || G.r() != 1 + N / p || N < p * p)
    throw Error(ErrorKind::RegimeMismatch, "need the ordinary metacyclic p-group");
  const int n = n1 - 1;
  const u64 q = F.q();
  const u64 o = mult_order(q % N, N);
  const u64 w = 1 + N / p;
  u64 omega0 = 1;
  while (!in_cyclic_subgroup(powmod(w, omega0, N), q % N, N)) ++omega0;
  CodeBounds b;
  b.source = "e_p^n bound";
  b.dim = p * o * std::gcd(omega0, p);
  b.d_min = 2;
  const int i0 = odd_i0(q, p);
  b.d_max = n <= i0 ? ipow(p, static_cast<unsigned>(n)) : ipow(p, static_cast<unsigned>(i0));
  return b;
}

// ---------------------------------------------------------------- Wedderburn

std::vector<std::pair<std::pair<u64, u64>, u64>> WedderburnReport::multiset() const {
  std::map<std::pair<u64, u64>, u64> m;
  for (auto& c : components) m[{c.matrix_size, c.field_degree}] += c.count;
  return {m.begin(), m.end()};
}

WedderburnReport wedderburn_report(const Group& G, const Field& F, const std::vector<ShodaPair>& catalog) {
  WedderburnReport r;
  r.group = G.name();
  r.q = F.q();
  auto rows = count_pcis(G, F, catalog);
  for (auto& row : rows) r.components.push_back({row.pair_label, row.pair_index, row.count, row.matrix_size, row.field_degree});
  r.total_dimension = census_dimension(rows);
  return r;
}

WedderburnReport wedderburn_report(const Group& G, const Field& F) {
  auto cat = ssp_catalog(G);
  if (G.order() <= 10000) {
    std::vector<ShodaPair> good;
    for (auto& p : cat)
      if (verify_ssp(G, p).ok) good.push_back(p);
    cat = std::move(good);
  }
  return wedderburn_report(G, F, cat);
}

bool algebra_isomorphic(const Group& G1, const Group& G2, const Field& F) {
  if (G1.order() != G2.order()) return false;
  return wedderburn_report(G1, F).multiset() == wedderburn_report(G2, F).multiset();
}

// ---------------------------------------------------------------- generator matrices

namespace {

char digit_char(Elem d) { return static_cast<char>(d < 10 ? '0' + d : 'a' + (d - 10)); }

Elem char_digit(char c) {
  if (c >= '0' && c <= '9') return static_cast<Elem>(c - '0');
  if (c >= 'a' && c <= 'z') return static_cast<Elem>(c - 'a' + 10);
  throw Error(ErrorKind::SchemaError, std::string("bad digit '") + c + "'");
}

}  // namespace

std::string emit_genmat(const LinearCode& c) {
  std::ostringstream os;
  const Field& F = c.F;
  os << F.q() << ' ' << c.n << ' ' << c.k << '\n';
  for (auto& row : c.rows) {
    for (u64 x = 0; x < c.n; ++x) {
      if (F.e() == 1 && F.p() <= 36) {
        os << digit_char(row[x]);
        continue;
      }
      if (x) os << ' ';
      if (F.e() == 1) {
        os << row[x];
        continue;
      }
      auto cs = F.coords(row[x]);
      cs.resize(F.e(), 0);
      for (unsigned t = 0; t < F.e(); ++t) os << (t ? "," : "") << cs[t];
    }
    os << '\n';
  }
  return os.str();
}

LinearCode parse_genmat(const std::string& text) {
  std::istringstream is(text);
  u64 q = 0, n = 0, k = 0;
  if (!(is >> q >> n >> k)) throw Error(ErrorKind::SchemaError, "missing 'q n k' header");
  auto [p, e] = prime_power(q);
  if (!p) throw Error(ErrorKind::SchemaError, "q is not a prime power");
  Field F = Field::make(p, static_cast<unsigned>(e));
  std::string line;
  std::getline(is, line);
  std::vector<std::vector<Elem>> rows;
  while (rows.size() < k && std::getline(is, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::vector<Elem> row;
    if (e == 1 && p <= 36) {
      for (char ch : line)
        if (ch != ' ' && ch != '\r') row.push_back(char_digit(ch));
    } else {
      std::istringstream ls(line);
      std::string tok;
      while (ls >> tok) {
        Elem v = 0, pw = 1;
        std::istringstream ts(tok);
        std::string part;
        while (std::getline(ts, part, ',')) {
          if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
            throw Error(ErrorKind::SchemaError, "bad entry '" + tok + "'");
          v += static_cast<Elem>(std::stoul(part)) * pw;
          pw *= static_cast<Elem>(p);
        }
        row.push_back(v);
      }
    }
    if (row.size() != n) throw Error(ErrorKind::SchemaError, "row length differs from n");
    for (Elem v : row)
      if (v >= q) throw Error(ErrorKind::SchemaError, "entry outside GF(q)");
    rows.push_back(std::move(row));
  }
  if (rows.size() != k) throw Error(ErrorKind::SchemaError, "fewer rows than k");
  LinearCode c = span_code(F, n, rows);
  if (c.k != k) throw Error(ErrorKind::SchemaError, "rows are dependent");
  return c;
}

}  // namespace metacode
