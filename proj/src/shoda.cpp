#include "metacode/shoda.hpp"

#include <numeric>

#include "metacode/error.hpp"

namespace metacode {

namespace {

std::string pw(const char* g, u64 e) {
  if (e == 0) return "";
  if (e == 1) return g;
  return std::string(g) + "^" + std::to_string(e);
}

std::string apow(u64 e) { return e == 0 ? "1" : pw("a", e); }

std::string sub_name(const std::vector<std::string>& words) {
  if (words.size() == 1 && (words[0] == "G" || words[0] == "1")) return words[0];
  std::string s = "<";
  for (std::size_t i = 0; i < words.size(); ++i) s += (i ? "," : "") + words[i];
  return s + ">";
}

ShodaPair named_pair(const Group& G, const std::vector<std::string>& h, const std::vector<std::string>& k,
                     const std::string& family, std::string hn, std::string kn) {
  ShodaPair p;
  p.H = subgroup_of(G, h);
  p.K = subgroup_of(G, k);
  p.family = family;
  p.h_name = std::move(hn);
  p.k_name = std::move(kn);
  return p;
}

void require_metacyclic(const Group& G) {
  if (G.is_product()) throw Error(ErrorKind::NotGenericFamily, G.name() + " is a direct product");
}

// n = 2^k with k >= 1, else 0
int log2_exact(u64 n) {
  auto [p, k] = prime_power(n);
  return p == 2 ? k : 0;
}

}  // namespace

Subgroup subgroup_of(const Group& G, const std::vector<std::string>& words) {
  if (words.size() == 1 && words[0] == "G") return whole(G);
  std::vector<Idx> g;
  for (auto& w : words) g.push_back(G.parse_word(w));
  return subgroup_closure(G, g);
}

ShodaPair ssp_pair(const Group& G, const std::vector<std::string>& h, const std::vector<std::string>& k,
                   const std::string& family) {
  return named_pair(G, h, k, family, sub_name(h), sub_name(k));
}

std::vector<ShodaPair> ssp_generic_split(const Group& G) {
  require_metacyclic(G);
  auto [p1, m] = prime_power(G.N());
  auto [p2, l] = prime_power(G.M());
  if (!p1 || !p2 || p1 == p2 || G.s() != 0 || mult_order(G.r(), G.N()) != G.M())
    throw Error(ErrorKind::NotGenericFamily, G.name() + " is not C_(p1^m) x| C_(p2^l) with faithful action");
  const std::string fam = "generic";
  std::vector<ShodaPair> out{ssp_pair(G, {"G"}, {"G"}, fam)};
  for (int j = 1; j <= l; ++j) {
    u64 e = ipow(p2, static_cast<unsigned>(j));
    if (e == G.M())
      out.push_back(ssp_pair(G, {"G"}, {"a"}, fam));
    else
      out.push_back(ssp_pair(G, {"G"}, {"a", pw("b", e)}, fam));
  }
  for (int j = 1; j <= m; ++j) out.push_back(ssp_pair(G, {"a"}, {apow(ipow(p1, static_cast<unsigned>(j)) % G.N())}, fam));
  return out;
}

std::vector<ShodaPair> ssp_2group(const Group& G) {
  require_metacyclic(G);
  int n = log2_exact(G.N());
  if (n < 2 || G.M() != 2) throw Error(ErrorKind::NotGenericFamily, G.name() + " is not a 2-group of order 2^(n+1)");
  const std::string fam = "2group";
  std::vector<ShodaPair> out{ssp_pair(G, {"G"}, {"G"}, fam), ssp_pair(G, {"G"}, {"a"}, fam),
                             ssp_pair(G, {"G"}, {"a^2", "b"}, fam), ssp_pair(G, {"G"}, {"a^2", "ab"}, fam)};
  for (int j = 2; j <= n; ++j) out.push_back(ssp_pair(G, {"a"}, {apow((1ull << j) % G.N())}, fam));
  return out;
}

std::vector<ShodaPair> ssp_ordinary_metacyclic_2(const Group& G) {
  require_metacyclic(G);
  int n = log2_exact(G.N());
  if (n < 3 || G.M() != 2 || G.s() != 0 || G.r() != 1 + G.N() / 2)
    throw Error(ErrorKind::NotGenericFamily, G.name() + " is not G_(2^(n+1)), n >= 3");
  const std::string fam = "om2";
  std::vector<ShodaPair> out{ssp_pair(G, {"G"}, {"G"}, fam), ssp_pair(G, {"G"}, {"a"}, fam),
                             ssp_pair(G, {"G"}, {"a^2", "b"}, fam), ssp_pair(G, {"G"}, {"a^2", "ab"}, fam)};
  for (int j = 2; j <= n - 1; ++j) {
    out.push_back(ssp_pair(G, {"G"}, {apow(1ull << j), "b"}, fam));
    out.push_back(ssp_pair(G, {"G"}, {apow(1ull << (j - 1)) + "b"}, fam));
  }
  out.push_back(ssp_pair(G, {"a"}, {"1"}, fam));
  return out;
}

std::vector<ShodaPair> ssp_ordinary_metacyclic_p(const Group& G) {
  require_metacyclic(G);
  u64 p = G.M();
  auto [pp, n] = prime_power(G.N());
  if (!is_prime(p) || p == 2 || pp != p || n < 2 || G.s() != 0 || G.r() != 1 + G.N() / p)
    throw Error(ErrorKind::NotGenericFamily, G.name() + " is not G_(p^(n+1)), p odd");
  const std::string fam = "omp";
  std::vector<ShodaPair> out{ssp_pair(G, {"G"}, {"G"}, fam), ssp_pair(G, {"G"}, {"a"}, fam)};
  for (int j = 1; j <= n - 1; ++j) {
    u64 pj = ipow(p, static_cast<unsigned>(j)), pj1 = pj / p;
    for (u64 i = 0; i < p; ++i) out.push_back(ssp_pair(G, {"G"}, {apow(pj), pw("a", i * pj1) + "b"}, fam));
  }
  out.push_back(ssp_pair(G, {"a"}, {"1"}, fam));
  return out;
}

std::vector<ShodaPair> ssp_p5(const Group& G, int family) {
  if (family < 1 || family > 4) throw Error(ErrorKind::BadFamilyIndex, "family must be 1..4");
  require_metacyclic(G);
  u64 p = 0;
  {
    auto [q, k] = prime_power(G.order());
    if (q == 0 || k != 5 || q == 2) throw Error(ErrorKind::NotGenericFamily, G.name() + " does not have order p^5");
    p = q;
  }
  const std::string fam = "p5:" + std::to_string(family);
  const u64 p2 = p * p;
  auto P = [&](const std::vector<std::string>& h, const std::vector<std::string>& k) { return ssp_pair(G, h, k, fam); };
  auto b = [](i64 e) { return e == 1 ? std::string("b") : "b^" + std::to_string(e); };
  auto a = [](i64 e) { return e == 1 ? std::string("a") : "a^" + std::to_string(e); };
  std::vector<ShodaPair> out;
  switch (family) {
    case 1:
      for (u64 i = 0; i <= 2; ++i) out.push_back(P({"G"}, {"a", b(static_cast<i64>(ipow(p, static_cast<unsigned>(i))))}));
      for (u64 i = 0; i < p; ++i) out.push_back(P({"G"}, {a(i) + "b", a(p)}));
      for (u64 i = 0; i < p; ++i) out.push_back(P({"G"}, {"a" + b(i * p), a(p)}));
      for (u64 i = 1; i < p; ++i) out.push_back(P({"G"}, {"a" + b(-static_cast<i64>(i * p2)), a(p)}));
      for (u64 i = 1; i < p; ++i) out.push_back(P({"a^2b", b(p)}, {a(i * p) + b(p2)}));
      for (u64 i = 0; i < p; ++i)
        if (i != 2) out.push_back(P({"a^2b", b(p)}, {a(i * p) + b(p), b(p2)}));
      out.push_back(P({"a^2b", b(p)}, {a(2 * p + 2) + b(1 - 2 * static_cast<i64>(p)), b(p2)}));
      break;
    case 2:
      for (u64 i = 0; i <= 2; ++i) out.push_back(P({"G"}, {"a", b(static_cast<i64>(ipow(p, static_cast<unsigned>(i))))}));
      for (u64 k = 0; k < p; ++k) out.push_back(P({"G"}, {a(k) + "b", a(p)}));
      for (u64 k = 1; k < p; ++k) out.push_back(P({"G"}, {"a" + b(k * p), a(p)}));
      for (u64 k = 0; k < p; ++k) out.push_back(P({"a^-1b", a(p)}, {a(k * p) + b(p), b(p2)}));
      out.push_back(P({"a^-1b", b(p)}, {"a^-1" + b(1 - 2 * static_cast<i64>(p)), b(p2)}));
      out.push_back(P({"a" + b(p2 - p)}, {"1"}));
      break;
    case 3:
      for (u64 k = 0; k < p2; ++k) out.push_back(P({"G"}, {a(k) + "b", b(p2)}));
      for (u64 k = 1; k < p; ++k) out.push_back(P({"G"}, {"a" + b(k * p), b(p2)}));
      for (u64 k = 0; k < p; ++k) out.push_back(P({"G"}, {a(k) + "b", a(p)}));
      for (u64 i = 0; i <= 2; ++i) out.push_back(P({"G"}, {"a", b(static_cast<i64>(ipow(p, static_cast<unsigned>(i))))}));
      for (u64 k = 0; k < p; ++k) out.push_back(P({"a", b(p)}, {a(p * (p - 1)) + b(p * (p * k + 1))}));
      break;
    case 4:
      for (u64 i = 0; i <= 3; ++i) out.push_back(P({"G"}, {"ab^-1", b(static_cast<i64>(ipow(p, static_cast<unsigned>(i))))}));
      out.push_back(P({"G"}, {"b"}));
      out.push_back(P({a(p), "a^-1b^2"}, {"1"}));
      for (u64 k = 1; k < p; ++k)
        for (u64 i = 0; i <= 2; ++i) out.push_back(P({"G"}, {"a" + b(static_cast<i64>(k * ipow(p, static_cast<unsigned>(i))) - 1)}));
      break;
  }
  // a^0 renders as "a^0"; normalize names like "a^0b" for readability
  for (auto& sp : out)
    for (auto* s : {&sp.h_name, &sp.k_name}) {
      std::string& t = *s;
      for (std::size_t pos; (pos = t.find("a^0")) != std::string::npos;) t.erase(pos, 3);
      for (std::size_t pos; (pos = t.find("b^0")) != std::string::npos;) t.erase(pos, 3);
    }
  return out;
}

std::vector<ShodaPair> ssp_dihedral_any(const Group& G) {
  require_metacyclic(G);
  u64 n = G.N();
  if (G.M() != 2 || G.s() != 0 || G.r() != n - 1 || n < 3)
    throw Error(ErrorKind::NotGenericFamily, G.name() + " is not dihedral");
  const std::string fam = "dihedral";
  std::vector<ShodaPair> out{ssp_pair(G, {"G"}, {"G"}, fam), ssp_pair(G, {"G"}, {"a"}, fam)};
  if (n % 2 == 0) {
    out.push_back(ssp_pair(G, {"G"}, {"a^2", "b"}, fam));
    out.push_back(ssp_pair(G, {"G"}, {"a^2", "ab"}, fam));
  }
  for (u64 v : divisors(n))
    if (n % 2 ? v != 1 : v > 2) out.push_back(ssp_pair(G, {"a"}, {apow(v % n)}, fam));
  return out;
}

std::vector<ShodaPair> ssp_quaternion_any(const Group& G) {
  require_metacyclic(G);
  u64 n = G.N();
  if (G.M() != 2 || n % 2 || n < 4 || G.r() != n - 1 || G.s() != n / 2)
    throw Error(ErrorKind::NotGenericFamily, G.name() + " is not generalized quaternion");
  u64 m = n / 2;
  const std::string fam = "quaternion";
  std::vector<ShodaPair> out{ssp_pair(G, {"G"}, {"G"}, fam), ssp_pair(G, {"G"}, {"a"}, fam)};
  if (m % 2) {
    out.push_back(ssp_pair(G, {"G"}, {"a^2"}, fam));
  } else {
    out.push_back(ssp_pair(G, {"G"}, {"a^2", "b"}, fam));
    out.push_back(ssp_pair(G, {"G"}, {"a^2", "ab"}, fam));
  }
  for (u64 v : divisors(n))
    if (v > 2) out.push_back(ssp_pair(G, {"a"}, {apow(v % n)}, fam));
  return out;
}

std::vector<ShodaPair> ssp_cyclic(const Group& G) {
  require_metacyclic(G);
  if (G.M() != 1) throw Error(ErrorKind::NotGenericFamily, G.name() + " is not cyclic on a");
  std::vector<ShodaPair> out;
  for (u64 v : divisors(G.N())) {
    if (v == G.N())
      out.push_back(ssp_pair(G, {"G"}, {"1"}, "cyclic"));
    else
      out.push_back(ssp_pair(G, {"G"}, {v == 1 ? "G" : apow(v)}, "cyclic"));
  }
  return out;
}

std::vector<ShodaPair> ssp_c2xq8(const Group& G) {
  if (!G.is_product() || G.left().order() != 2 || G.right().name() != "Q:8")
    throw Error(ErrorKind::NotGenericFamily, G.name() + " is not C2 x Q8");
  // a, b generate Q8 and c generates C2
  const std::string fam = "c2xq8";
  auto P = [&](std::vector<std::string> h, std::vector<std::string> k, std::string hn, std::string kn) {
    return named_pair(G, h, k, fam, hn, kn);
  };
  return {
      P({"G"}, {"G"}, "G", "G"),
      P({"G"}, {"(1,a)", "(1,b)"}, "G", "<a,b>"),
      P({"G"}, {"(1,a)", "(a,1)"}, "G", "<a,c>"),
      P({"G"}, {"(1,a)", "(a,b)"}, "G", "<a,bc>"),
      P({"G"}, {"(1,a^2)", "(1,b)", "(a,1)"}, "G", "<a^2,b,c>"),
      P({"G"}, {"(1,a^2)", "(1,ab)", "(a,1)"}, "G", "<a^2,ab,c>"),
      P({"G"}, {"(1,a^2)", "(1,b)", "(a,a)"}, "G", "<a^2,b,ac>"),
      P({"G"}, {"(1,a^2)", "(1,ab)", "(a,a)"}, "G", "<a^2,ab,ac>"),
      P({"(1,a)", "(a,1)"}, {"(a,1)"}, "<a,c>", "<c>"),
      P({"(1,a)", "(a,1)"}, {"(a,a^2)"}, "<a,c>", "<a^2c>"),
  };
}

std::vector<ShodaPair> ssp_product(const Group& P, const std::vector<ShodaPair>& s1,
                                   const std::vector<ShodaPair>& s2) {
  if (!P.is_product()) throw Error(ErrorKind::NotGenericFamily, P.name() + " is not a direct product");
  auto cross = [](const std::string& x, const std::string& y) {
    if (x == "G" && y == "G") return std::string("G");
    if (x == "1" && y == "1") return std::string("1");
    return x + "x" + y;
  };
  std::vector<ShodaPair> out;
  for (auto& x : s1)
    for (auto& y : s2) {
      ShodaPair p;
      p.H = product_subgroup(P, x.H, y.H);
      p.K = product_subgroup(P, x.K, y.K);
      p.family = x.family + "x" + y.family;
      p.h_name = cross(x.h_name, y.h_name);
      p.k_name = cross(x.k_name, y.k_name);
      out.push_back(std::move(p));
    }
  return out;
}

std::vector<ShodaPair> ssp_catalog(const Group& G) {
  if (G.is_product()) {
    if (G.name() == "C2xQ8" || (G.left().order() == 2 && G.right().name() == "Q:8")) return ssp_c2xq8(G);
    return ssp_product(G, ssp_catalog(G.left()), ssp_catalog(G.right()));
  }
  const std::string& nm = G.name();
  auto starts = [&](const char* pre) { return nm.rfind(pre, 0) == 0; };
  if (starts("P5:")) return ssp_p5(G, nm[3] - '0');
  if (G.M() == 1) return ssp_cyclic(G);
  u64 N = G.N();
  bool two = log2_exact(N) >= 2 && G.M() == 2;
  if (starts("SD:") || (two && G.s() == 0 && G.r() == N / 2 - 1 && N >= 8)) return ssp_2group(G);
  if (starts("OM:") || G.s() == 0) {
    if (two && N >= 8 && G.r() == 1 + N / 2) return ssp_ordinary_metacyclic_2(G);
    auto [pp, n] = prime_power(N);
    if (pp && pp == G.M() && pp != 2 && n >= 2 && G.r() == 1 + N / pp) return ssp_ordinary_metacyclic_p(G);
  }
  if (G.M() == 2 && G.s() == 0 && G.r() == N - 1) return N >= 4 && log2_exact(N) ? ssp_2group(G) : ssp_dihedral_any(G);
  if (G.M() == 2 && N % 2 == 0 && G.r() == N - 1 && G.s() == N / 2)
    return log2_exact(N) >= 2 ? ssp_2group(G) : ssp_quaternion_any(G);
  return ssp_generic_split(G);
}

SspCheck verify_ssp(const Group& G, const ShodaPair& p, u64 bound) {
  if (G.order() > bound)
    throw Error(ErrorKind::TooLarge, "|G| = " + std::to_string(G.order()) + " exceeds " + std::to_string(bound));
  const Subgroup &H = p.H, &K = p.K;
  if (!is_subset(K, H)) return {false, "K is not contained in H"};
  if (!H.normal) return {false, "H is not normal in G"};
  if (!normal_in(G, K, H)) return {false, "K is not normal in H"};
  auto g = cyclic_quotient_generator(G, H, K);
  if (!g) return {false, "H/K is not cyclic"};
  // H/K is maximal abelian in N_G(K)/K iff nothing outside H centralizes H/K
  auto NK = normalizer(G, K);
  for (Idx x : NK.elems) {
    if (H.contains(x)) continue;
    Idx comm = G.mul(G.mul(G.inv(x), G.inv(*g)), G.mul(x, *g));
    if (K.contains(comm)) return {false, "H/K is not maximal abelian in N_G(K)/K (" + G.word(x) + ")"};
  }
  return {};
}

}  // namespace metacode
