#include "metacode/group.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <mutex>
#include <numeric>

#include "metacode/error.hpp"

namespace metacode {

struct GroupData {
  std::string name;
  u64 order = 1;
  bool product = false;
  // metacyclic
  u64 N = 1, M = 1, r = 1, s = 0;
  std::vector<u64> rinv_pow;  // r^-j mod N, j < M
  std::vector<Idx> table, inv_table;
  // product
  Group g1, g2;
  std::vector<std::pair<u64, int>> order_factors;
};

namespace {

constexpr u64 kTableLimit = 2048;

Idx mc_index(const GroupData& d, u64 i, u64 j) { return static_cast<Idx>(i * d.M + j); }

Idx mc_mul(const GroupData& d, Idx x, Idx y) {
  u64 i1 = x / d.M, j1 = x % d.M, i2 = y / d.M, j2 = y % d.M;
  // b^j1 a^i2 = a^(i2 r^-j1) b^j1
  u64 i = (i1 + mulmod(i2, d.rinv_pow[j1], d.N)) % d.N;
  u64 j = j1 + j2;
  if (j >= d.M) {
    j -= d.M;
    i = (i + d.s) % d.N;
  }
  return mc_index(d, i, j);
}

Idx mc_inv(const GroupData& d, Idx x) {
  u64 i = x / d.M, j = x % d.M;
  Idx ainv = mc_index(d, (d.N - i % d.N) % d.N, 0);
  if (j == 0) return ainv;
  // b^-j = a^-s b^(M-j)
  Idx binv = mc_index(d, (d.N - d.s % d.N) % d.N, d.M - j);
  return mc_mul(d, binv, ainv);
}

std::string pow_word(char c, u64 e) {
  if (e == 0) return "";
  if (e == 1) return std::string(1, c);
  return std::string(1, c) + "^" + std::to_string(e);
}

}  // namespace

Group Group::metacyclic(u64 N, u64 M, u64 r, u64 s, std::string name) {
  if (N == 0 || M == 0) throw Error(ErrorKind::InconsistentPresentation, "N and M must be positive");
  if (N * M > (1ull << 31)) throw Error(ErrorKind::TooLarge, "group order too large");
  r %= N;
  s %= N;
  if (N > 1 && std::gcd(r, N) != 1) throw Error(ErrorKind::InconsistentPresentation, "r not a unit mod N");
  if (N > 1 && powmod(r, M, N) != 1 % N)
    throw Error(ErrorKind::InconsistentPresentation, "r^M != 1 mod N");
  if (mulmod(s, (r + N - 1) % N, N) != 0)
    throw Error(ErrorKind::InconsistentPresentation, "s(r-1) != 0 mod N");
  auto d = std::make_shared<GroupData>();
  d->name = name.empty() ? "<" + std::to_string(N) + "," + std::to_string(M) + "," + std::to_string(r) + "," +
                               std::to_string(s) + ">"
                         : name;
  d->N = N;
  d->M = M;
  d->r = r;
  d->s = s;
  d->order = N * M;
  u64 ri = N > 1 ? invmod(static_cast<i64>(r), N) : 0;
  d->rinv_pow.resize(M);
  u64 c = 1 % N;
  for (u64 j = 0; j < M; ++j) {
    d->rinv_pow[j] = c;
    c = mulmod(c, ri, N);
  }
  d->order_factors = factorize(d->order);
  if (d->order <= kTableLimit) {
    u64 n = d->order;
    d->table.resize(n * n);
    d->inv_table.resize(n);
    for (Idx x = 0; x < n; ++x) {
      for (Idx y = 0; y < n; ++y) d->table[x * n + y] = mc_mul(*d, x, y);
      d->inv_table[x] = mc_inv(*d, x);
    }
  }
  Group g;
  g.d_ = d;
  return g;
}

Group Group::product(const Group& g1, const Group& g2, bool require_coprime) {
  if (require_coprime && std::gcd(g1.order(), g2.order()) != 1) {
    throw Error(ErrorKind::NotCoprimeOrders,
                "gcd(" + std::to_string(g1.order()) + ", " + std::to_string(g2.order()) + ") != 1");
  }
  auto d = std::make_shared<GroupData>();
  d->product = true;
  d->g1 = g1;
  d->g2 = g2;
  d->order = g1.order() * g2.order();
  d->name = "(" + g1.name() + ")x(" + g2.name() + ")";
  d->order_factors = factorize(d->order);
  Group g;
  g.d_ = d;
  return g;
}

namespace {

u64 parse_u64(const std::string& s, const std::string& spec) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw Error(ErrorKind::SchemaError, "bad group name " + spec);
  return std::stoull(s);
}

u64 invR(u64 R, u64 N) { return invmod(static_cast<i64>(R), N); }

}  // namespace

Group Group::named(const std::string& spec) {
  auto colon = spec.find(':');
  std::string fam = spec.substr(0, colon);
  std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (fam == "C") {
    u64 n = parse_u64(arg, spec);
    return metacyclic(n, 1, 1, 0, spec);
  }
  if (fam == "D") {
    u64 n = parse_u64(arg, spec);
    if (n < 4 || n % 2) throw Error(ErrorKind::SchemaError, "D:<2n> needs an even order >= 4");
    return metacyclic(n / 2, 2, n / 2 - 1, 0, spec);
  }
  if (fam == "Q") {
    u64 n = parse_u64(arg, spec);
    if (n < 8 || n % 4) throw Error(ErrorKind::SchemaError, "Q:<4m> needs order 4m, m >= 2");
    u64 m = n / 4;
    return metacyclic(2 * m, 2, 2 * m - 1, m, spec);
  }
  if (fam == "SD") {
    u64 n = parse_u64(arg, spec);
    auto [p, k] = prime_power(n);
    if (p != 2 || k < 4) throw Error(ErrorKind::SchemaError, "SD:<2^k> needs k >= 4");
    u64 N = n / 2;
    return metacyclic(N, 2, N / 2 - 1, 0, spec);
  }
  if (fam == "OM") {
    u64 p, e;
    auto caret = arg.find('^');
    if (caret != std::string::npos) {
      p = parse_u64(arg.substr(0, caret), spec);
      e = parse_u64(arg.substr(caret + 1), spec);
    } else {
      auto pk = prime_power(parse_u64(arg, spec));
      p = pk.first;
      e = static_cast<u64>(pk.second);
    }
    if (!is_prime(p) || e < 3) throw Error(ErrorKind::SchemaError, "OM:<p>^<n+1> needs n >= 2");
    u64 N = ipow(p, static_cast<unsigned>(e - 1));
    return metacyclic(N, p, 1 + N / p, 0, spec);
  }
  if (fam == "G20") return metacyclic(5, 4, 2, 0, spec);
  if (fam == "G27") return named("OM:3^3");
  if (fam == "G39") return metacyclic(13, 3, 9, 0, spec);
  if (fam == "G57") return metacyclic(19, 3, 7, 0, spec);
  if (fam == "P5") {
    auto c2 = arg.find(':');
    if (c2 == std::string::npos) throw Error(ErrorKind::SchemaError, "P5:<family>:<p>");
    u64 fi = parse_u64(arg.substr(0, c2), spec), p = parse_u64(arg.substr(c2 + 1), spec);
    if (!is_prime(p) || p == 2) throw Error(ErrorKind::SchemaError, "P5 needs an odd prime");
    u64 p2 = p * p, p3 = p2 * p, p4 = p3 * p;
    // the presentations use b a b^-1 = a^R; we store r = R^-1
    switch (fi) {
      case 1: return metacyclic(p2, p3, invR(p + 1, p2), 0, spec);
      case 2: return metacyclic(p3, p2, invR(p + 1, p3), p2, spec);
      case 3: return metacyclic(p3, p2, invR(p2 + 1, p3), p2, spec);
      case 4: return metacyclic(p4, p, invR(p3 + 1, p4), p, spec);
      default: throw Error(ErrorKind::BadFamilyIndex, "family must be 1..4");
    }
  }
  if (fam == "EX54" || fam == "EX54S") {
    u64 N1 = fam == "EX54" ? 343 : 7;
    Group g1 = metacyclic(N1, 3, invR(18 % N1, N1), 0, "G1");
    Group g2 = metacyclic(11, 5, invR(4, 11), 0, "G2");
    return product(g1, g2);
  }
  if (fam == "C2xQ8") return product(named("C:2"), named("Q:8"), false);
  throw Error(ErrorKind::SchemaError, "unknown group name " + spec);
}

u64 Group::order() const { return d_->order; }
const std::string& Group::name() const { return d_->name; }
bool Group::is_product() const { return d_->product; }
const Group& Group::left() const { return d_->g1; }
const Group& Group::right() const { return d_->g2; }

Idx Group::mul(Idx x, Idx y) const {
  const GroupData& d = *d_;
  if (d.product) {
    u64 n2 = d.g2.order();
    return static_cast<Idx>(d.g1.mul(static_cast<Idx>(x / n2), static_cast<Idx>(y / n2)) * n2 +
                            d.g2.mul(static_cast<Idx>(x % n2), static_cast<Idx>(y % n2)));
  }
  if (!d.table.empty()) return d.table[static_cast<std::size_t>(x) * d.order + y];
  return mc_mul(d, x, y);
}

Idx Group::inv(Idx x) const {
  const GroupData& d = *d_;
  if (d.product) {
    u64 n2 = d.g2.order();
    return static_cast<Idx>(d.g1.inv(static_cast<Idx>(x / n2)) * n2 + d.g2.inv(static_cast<Idx>(x % n2)));
  }
  if (!d.inv_table.empty()) return d.inv_table[x];
  return mc_inv(d, x);
}

Idx Group::pow(Idx x, i64 n) const {
  if (n < 0) {
    x = inv(x);
    n = -n;
  }
  Idx r = 0, b = x;
  while (n) {
    if (n & 1) r = mul(r, b);
    n >>= 1;
    if (n) b = mul(b, b);
  }
  return r;
}

u64 Group::elem_order(Idx x) const {
  u64 o = d_->order;
  for (auto [l, k] : d_->order_factors) {
    (void)k;
    while (o % l == 0 && pow(x, static_cast<i64>(o / l)) == 0) o /= l;
  }
  return o;
}

std::vector<Idx> Group::generators() const {
  const GroupData& d = *d_;
  std::vector<Idx> g;
  if (d.product) {
    for (Idx x : d.g1.generators()) g.push_back(pair(x, 0));
    for (Idx y : d.g2.generators()) g.push_back(pair(0, y));
    return g;
  }
  if (d.N > 1) g.push_back(a());
  if (d.M > 1) g.push_back(b());
  return g;
}

u64 Group::N() const { return d_->N; }
u64 Group::M() const { return d_->M; }
u64 Group::r() const { return d_->r; }
u64 Group::s() const { return d_->s; }

Idx Group::ab(i64 i, i64 j) const {
  if (d_->product) throw Error(ErrorKind::BadParameters, "a^i b^j on a product group");
  Idx a1 = mc_index(*d_, 1 % d_->N, 0);
  Idx b1 = d_->M > 1 ? mc_index(*d_, 0, 1) : mc_index(*d_, d_->s % d_->N, 0);
  return mul(pow(a1, i), pow(b1, j));
}

std::pair<u64, u64> Group::exponents(Idx x) const { return {x / d_->M, x % d_->M}; }

Idx Group::pair(Idx x1, Idx x2) const { return static_cast<Idx>(x1 * d_->g2.order() + x2); }
Idx Group::first(Idx x) const { return static_cast<Idx>(x / d_->g2.order()); }
Idx Group::second(Idx x) const { return static_cast<Idx>(x % d_->g2.order()); }

std::string Group::word(Idx x) const {
  if (d_->product) return "(" + d_->g1.word(first(x)) + "," + d_->g2.word(second(x)) + ")";
  auto [i, j] = exponents(x);
  std::string w = pow_word('a', i) + pow_word('b', j);
  return w.empty() ? "1" : w;
}

Idx Group::parse_word(const std::string& w0) const {
  std::string w;
  for (char c : w0)
    if (!std::isspace(static_cast<unsigned char>(c))) w += c;
  if (d_->product) {
    if (w.size() < 5 || w.front() != '(' || w.back() != ')')
      throw Error(ErrorKind::SchemaError, "product words look like (w1,w2): " + w0);
    // split at the top-level comma
    int depth = 0;
    for (std::size_t k = 1; k + 1 < w.size(); ++k) {
      if (w[k] == '(') ++depth;
      if (w[k] == ')') --depth;
      if (w[k] == ',' && depth == 0)
        return pair(d_->g1.parse_word(w.substr(1, k - 1)), d_->g2.parse_word(w.substr(k + 1, w.size() - k - 2)));
    }
    throw Error(ErrorKind::SchemaError, "bad product word " + w0);
  }
  if (w.empty() || w == "1" || w == "e") return 0;
  Idx x = 0;
  std::size_t k = 0;
  while (k < w.size()) {
    char c = w[k++];
    if (c != 'a' && c != 'b') throw Error(ErrorKind::SchemaError, "bad word " + w0);
    i64 e = 1;
    if (k < w.size() && w[k] == '^') {
      ++k;
      std::size_t st = k;
      if (k < w.size() && w[k] == '-') ++k;
      while (k < w.size() && std::isdigit(static_cast<unsigned char>(w[k]))) ++k;
      if (k == st || (k == st + 1 && w[st] == '-')) throw Error(ErrorKind::SchemaError, "bad exponent in " + w0);
      e = std::stoll(w.substr(st, k - st));
    }
    x = mul(x, c == 'a' ? ab(e, 0) : ab(0, e));
  }
  return x;
}

// ---------------------------------------------------------------- subgroups

namespace {

Subgroup finish(const Group& G, std::vector<Idx> gens, std::vector<char> member) {
  Subgroup H;
  H.gens = std::move(gens);
  H.member = std::move(member);
  for (Idx x = 0; x < H.member.size(); ++x)
    if (H.member[x]) H.elems.push_back(x);
  H.normal = true;
  auto gg = G.generators();
  for (Idx x : gg) {
    for (Idx h : H.gens)
      if (!H.member[G.conj(h, x)]) {
        H.normal = false;
        break;
      }
    if (!H.normal) break;
  }
  u64 n = H.order();
  H.cyclic = false;
  if (n == 1) {
    H.cyclic = true;
    H.cyclic_gen = 0;
  } else {
    auto fac = factorize(n);
    for (Idx h : H.elems) {
      bool full = true;
      for (auto [l, k] : fac) {
        (void)k;
        if (G.pow(h, static_cast<i64>(n / l)) == 0) {
          full = false;
          break;
        }
      }
      if (full) {
        H.cyclic = true;
        H.cyclic_gen = h;
        break;
      }
    }
  }
  return H;
}

}  // namespace

Subgroup subgroup_closure(const Group& G, const std::vector<Idx>& gens0) {
  std::vector<Idx> gens;
  for (Idx g : gens0)
    if (g != 0 && std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(g);
  std::vector<char> member(G.order(), 0);
  std::deque<Idx> todo{0};
  member[0] = 1;
  while (!todo.empty()) {
    Idx x = todo.front();
    todo.pop_front();
    for (Idx g : gens) {
      Idx y = G.mul(x, g);
      if (!member[y]) {
        member[y] = 1;
        todo.push_back(y);
      }
    }
  }
  return finish(G, gens0.empty() ? std::vector<Idx>{} : gens, std::move(member));
}

Subgroup whole(const Group& G) { return subgroup_closure(G, G.generators()); }
Subgroup trivial(const Group& G) { return subgroup_closure(G, {}); }

bool is_subset(const Subgroup& A, const Subgroup& B) {
  for (Idx x : A.elems)
    if (!B.contains(x)) return false;
  return true;
}

Subgroup join(const Group& G, const Subgroup& A, const Subgroup& B) {
  std::vector<Idx> g = A.gens;
  g.insert(g.end(), B.gens.begin(), B.gens.end());
  return subgroup_closure(G, g);
}

Subgroup product_subgroup(const Group& P, const Subgroup& H1, const Subgroup& H2) {
  std::vector<Idx> g;
  for (Idx x : H1.gens) g.push_back(P.pair(x, 0));
  for (Idx y : H2.gens) g.push_back(P.pair(0, y));
  return subgroup_closure(P, g);
}

bool normal_in(const Group& G, const Subgroup& K, const Subgroup& H) {
  for (Idx h : H.gens)
    for (Idx k : K.gens)
      if (!K.contains(G.conj(k, h))) return false;
  return true;
}

std::optional<Idx> cyclic_quotient_generator(const Group& G, const Subgroup& H, const Subgroup& K) {
  if (!is_subset(K, H) || !normal_in(G, K, H)) throw Error(ErrorKind::NotNormal, "K is not normal in H");
  u64 idx = H.order() / K.order();
  if (idx == 1) return Idx{0};
  auto fac = factorize(idx);
  for (Idx h : H.elems) {
    if (K.contains(h)) continue;
    bool full = true;
    for (auto [l, k] : fac) {
      (void)k;
      if (K.contains(G.pow(h, static_cast<i64>(idx / l)))) {
        full = false;
        break;
      }
    }
    if (full) return h;
  }
  return std::nullopt;
}

std::optional<Idx> quotient_is_cyclic(const Group& G, const Subgroup& K) {
  if (!K.normal) throw Error(ErrorKind::NotNormal, "K is not normal in G");
  return cyclic_quotient_generator(G, whole(G), K);
}

Subgroup normalizer(const Group& G, const Subgroup& H) {
  std::vector<char> member(G.order(), 0);
  std::vector<Idx> gens;
  for (Idx x = 0; x < G.order(); ++x) {
    bool ok = true;
    for (Idx h : H.gens)
      if (!H.contains(G.conj(h, x))) {
        ok = false;
        break;
      }
    if (ok) {
      member[x] = 1;
      gens.push_back(x);
    }
  }
  Subgroup N = finish(G, {}, std::move(member));
  N.gens = std::move(gens);
  return N;
}

Subgroup center(const Group& G) {
  auto gg = G.generators();
  std::vector<char> member(G.order(), 0);
  std::vector<Idx> gens;
  for (Idx x = 0; x < G.order(); ++x) {
    bool ok = true;
    for (Idx g : gg)
      if (G.mul(x, g) != G.mul(g, x)) {
        ok = false;
        break;
      }
    if (ok) {
      member[x] = 1;
      gens.push_back(x);
    }
  }
  Subgroup Z = finish(G, {}, std::move(member));
  Z.gens = std::move(gens);
  return Z;
}

}  // namespace metacode

namespace metacode {

namespace {

std::shared_ptr<MetacyclicView> build_view(const Group& G) {
  auto v = std::make_shared<MetacyclicView>();
  u64 n = G.order();
  if (!G.is_product()) {
    v->N = G.N();
    v->M = G.M();
    v->r = G.r();
    v->s = G.s();
    v->to_group.resize(n);
    std::iota(v->to_group.begin(), v->to_group.end(), 0);
    v->from_group = v->to_group;
    return v;
  }
  auto l = metacyclic_view(G.left()), r = metacyclic_view(G.right());
  if (!l || !r || std::gcd(G.left().order(), G.right().order()) != 1) return nullptr;
  auto gen_a = [](const MetacyclicView& w) { return w.N > 1 ? w.to_group[w.M] : Idx{0}; };
  auto gen_b = [](const MetacyclicView& w) { return w.M > 1 ? w.to_group[1] : Idx{0}; };
  Idx a = G.pair(gen_a(*l), gen_a(*r));
  Idx b = G.pair(gen_b(*l), gen_b(*r));
  u64 N = G.elem_order(a);
  if (n % N) return nullptr;
  u64 M = n / N;
  std::vector<i64> loga(n, -1);
  Idx x = 0;
  for (u64 i = 0; i < N; ++i, x = G.mul(x, a)) loga[x] = static_cast<i64>(i);
  i64 rr = loga[G.conj(a, b)], ss = loga[G.pow(b, static_cast<i64>(M))];
  if (rr < 0 || ss < 0) return nullptr;
  v->N = N;
  v->M = M;
  v->r = static_cast<u64>(rr);
  v->s = static_cast<u64>(ss);
  v->to_group.assign(n, 0);
  v->from_group.assign(n, static_cast<Idx>(n));
  Idx bj = 0;
  for (u64 j = 0; j < M; ++j, bj = G.mul(bj, b)) {
    Idx ai = 0;
    for (u64 i = 0; i < N; ++i, ai = G.mul(ai, a)) {
      Idx g = G.mul(ai, bj);
      if (v->from_group[g] != n) return nullptr;
      v->from_group[g] = static_cast<Idx>(i * M + j);
      v->to_group[i * M + j] = g;
    }
  }
  return v;
}

}  // namespace

std::shared_ptr<const MetacyclicView> metacyclic_view(const Group& G) {
  static std::mutex mu;
  static std::map<const void*, std::pair<Group, std::shared_ptr<const MetacyclicView>>> cache;
  {
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find(G.id());
    if (it != cache.end()) return it->second.second;
  }
  auto v = build_view(G);
  std::lock_guard<std::mutex> lk(mu);
  cache[G.id()] = {G, v};
  return v;
}

}  // namespace metacode
