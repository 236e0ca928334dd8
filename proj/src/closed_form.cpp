#include "metacode/closed_form.hpp"

#include "metacode/error.hpp"
#include "metacode/idem.hpp"

namespace metacode {

namespace {

[[noreturn]] void mismatch(const std::string& what) { throw Error(ErrorKind::RegimeMismatch, what); }

// One trace sum (1/den) Khat sum_{i' < range} c_i' g^-(i' estep), with
// c_i' = sum_t tr(xi_m^(t k i' cstep)). Zero coefficients are skipped.
struct TraceSum {
  const Subgroup* K = nullptr;  // nullptr: no hat factor
  Idx g = 0;
  u64 m = 1;
  u64 range = 1, cstep = 1, estep = 1;
  std::vector<u64> twists{1};
  u64 den = 1;
};

Alg build(const Group& G, const Field& F, const TraceSum& s, u64 k) {
  auto T = s.m == 1 ? std::vector<Elem>{1} : root_trace_table(F, s.m);
  Elem scale = F.inv(F.from_int(static_cast<i64>(s.den % F.p())));
  Alg sum(G, F);
  Idx ginv = G.inv(s.g);
  for (u64 i = 0; i < s.range; ++i) {
    Elem c = 0;
    for (u64 t : s.twists) c = F.add(c, T[mulmod(mulmod(t % s.m, k % s.m, s.m), mulmod(i, s.cstep, s.m), s.m)]);
    if (c == 0) continue;
    sum.add_at(G.pow(ginv, static_cast<i64>(i * s.estep)), F.mul(c, scale));
  }
  if (!s.K) return sum;
  return hat(G, F, *s.K) * sum;
}

bool pow2(u64 n, int& e) {
  auto [p, k] = prime_power(n);
  e = k;
  return p == 2;
}

Subgroup sub(const Group& G, std::initializer_list<std::string> w) { return subgroup_of(G, std::vector<std::string>(w)); }

std::string apow(u64 e) { return e == 0 ? "1" : "a^" + std::to_string(e); }

// -1 in <q> mod m
bool minus_one_in(u64 q, u64 m) { return in_cyclic_subgroup(m - 1, q % m, m); }

ClosedForm hat_rows(const Group& G, const Field& F, const ShodaPair& p, const std::string& table,
                    const std::vector<std::pair<Subgroup, std::string>>& quotients) {
  // (G,G) -> G^, (G,K) with [G:K] = 2 -> K^ - G^
  Alg Gh = hat(G, F, whole(G));
  if (p.H.order() != G.order()) mismatch("not a hat row");
  if (p.K.order() == G.order()) return {Gh, table, "e1"};
  for (std::size_t i = 0; i < quotients.size(); ++i)
    if (p.K == quotients[i].first) return {hat(G, F, p.K) - Gh, table, quotients[i].second};
  mismatch("not a hat row");
}

// dihedral 2-groups
ClosedForm dihedral(const Group& G, const Field& F, const ShodaPair& p, u64 k, Reading rd) {
  int n;
  pow2(G.N(), n);
  const u64 q = F.q();
  TwoAdic t;
  try {
    t = two_adic(q);
  } catch (const Error&) {
    mismatch("dihedral closed forms need odd q");
  }
  if (p.H.order() == G.order())
    return hat_rows(G, F, p, "1", {{sub(G, {"a"}), "e2"}, {sub(G, {"a^2", "b"}), "e3"}, {sub(G, {"a^2", "ab"}), "e4"}});
  if (!(p.H == sub(G, {"a"}))) mismatch("pair outside the dihedral closed forms");
  int j = 0;
  for (int jj = 2; jj <= n; ++jj)
    if (p.K == sub(G, {apow((u64{1} << jj) % G.N())})) j = jj;
  if (!j) mismatch("pair outside the dihedral closed forms");
  const u64 m = u64{1} << j;
  const int i0 = t.i0;
  const bool has_m1 = minus_one_in(q, m);
  std::string row = "e_2^j:j=" + std::to_string(j);
  if (t.sign == -1 && j == 2) {
    Alg a2 = hat(G, F, sub(G, {"a^2"})), a4 = hat(G, F, sub(G, {apow(4 % G.N())}));
    return {rd == Reading::Printed ? a2 - a4 : a4 - a2, "1", row + ":hat-difference"};
  }
  TraceSum s;
  s.K = &p.K;
  s.g = G.a();
  s.m = m;
  s.den = m;
  // merged two-trace form: printed only in the q = -1 branch
  bool merged = !has_m1 && (t.sign == -1 || rd == Reading::Amended);
  if (merged) s.twists = {1, m - 1};
  bool trunc = j > i0;
  if (trunc && rd == Reading::Amended && !merged && t.sign == -1) {
    // a single trace of a primitive 2^(i0+1)-th root does not vanish
    s.range = j > i0 + 1 ? u64{1} << (i0 + 1) : m;
    s.cstep = s.estep = m / s.range;
  } else if (trunc) {
    s.range = u64{1} << i0;
    s.cstep = s.estep = u64{1} << (j - i0);
  } else {
    s.range = m;
  }
  row += merged ? ":merged" : ":single";
  if (s.range < m) row += "-truncated";
  return {build(G, F, s, k), "1", row};
}

// ordinary metacyclic 2-groups
ClosedForm ordinary2(const Group& G, const Field& F, const ShodaPair& p, u64 k, Reading rd) {
  int n;
  pow2(G.N(), n);
  const u64 q = F.q();
  TwoAdic t;
  try {
    t = two_adic(q);
  } catch (const Error&) {
    mismatch("2-group closed forms need odd q");
  }
  const int i0 = t.i0;
  const u64 N = G.N();
  if (p.H.order() == G.order()) {
    if (p.K.order() == G.order() || p.K == sub(G, {"a"}) || p.K == sub(G, {"a^2", "b"}) ||
        p.K == sub(G, {"a^2", "ab"}))
      return hat_rows(G, F, p, "2", {{sub(G, {"a"}), "e2"}, {sub(G, {"a^2", "b"}), "e3"}, {sub(G, {"a^2", "ab"}), "e4"}});
    int j = 0;
    bool with_b = false;
    for (int jj = 2; jj <= n - 1; ++jj) {
      if (p.K == sub(G, {apow(u64{1} << jj), "b"})) j = jj, with_b = true;
      if (p.K == sub(G, {apow(u64{1} << (jj - 1)) + "b"})) j = jj, with_b = false;
    }
    if (!j) mismatch("pair outside the 2-group closed forms");
    const u64 m = u64{1} << j;
    std::string row = std::string("e_2^j:j=") + std::to_string(j) + (with_b ? ":K=<a^2^j,b>" : ":K=<a^2^(j-1)b>");
    if (t.sign == -1 && j == 2) {
      Alg v(G, F);
      if (rd == Reading::Printed) {
        v = with_b ? hat(G, F, sub(G, {"a^2", "b"})) - hat(G, F, sub(G, {apow(4 % N), "b"}))
                   : hat(G, F, sub(G, {apow(4 % N) + "b"})) - hat(G, F, sub(G, {"a^2b"}));
      } else {
        v = hat(G, F, p.K) - hat(G, F, join(G, p.K, sub(G, {"a^2"})));
      }
      return {v, "2", row + ":hat-difference"};
    }
    TraceSum s;
    s.K = &p.K;
    s.g = G.a();
    s.m = m;
    s.den = m;
    if (j > i0 && !(rd == Reading::Amended && t.sign == -1)) {
      s.range = u64{1} << i0;
      s.cstep = s.estep = m / s.range;
      row += ":truncated";
    } else if (j > i0 + 1) {
      s.range = u64{1} << (i0 + 1);
      s.cstep = s.estep = m / s.range;
      row += ":truncated";
    } else {
      s.range = m;
    }
    return {build(G, F, s, k), "2", row};
  }
  if (!(p.H == sub(G, {"a"})) || p.K.order() != 1) mismatch("pair outside the 2-group closed forms");
  const u64 m = N, w = 1 + N / 2;
  const bool in = in_cyclic_subgroup(w, q % m, m);
  std::string row = std::string("e_2^n:") + (in ? "in" : "notin");
  TraceSum s;
  s.g = G.a();
  s.m = m;
  s.den = m;
  // the printed table merges the two conjugates only in the q = -1 branch
  bool merged = !in && (t.sign == -1 || rd == Reading::Amended);
  if (merged) s.twists = {1, w};
  if (n < i0) {
    if (rd == Reading::Printed) mismatch("no 2-group closed form for i0 > n");
    s.range = m;
  } else if (n == i0) {
    s.range = m;
  } else if (rd == Reading::Amended && t.sign == -1 && !merged) {
    s.range = n > i0 + 1 ? u64{1} << (i0 + 1) : m;
    s.cstep = s.estep = m / s.range;
  } else {
    s.range = u64{1} << i0;
    s.cstep = s.estep = m / s.range;
  }
  row += merged ? ":merged" : ":single";
  if (s.range < m) row += "-truncated";
  return {build(G, F, s, k), "2", row};
}

// ordinary metacyclic p-groups, p odd
ClosedForm ordinary_p(const Group& G, const Field& F, const ShodaPair& p, u64 k, Reading rd) {
  auto [pp, n] = prime_power(G.N());
  const u64 q = F.q();
  if (q % pp == 0) mismatch("p divides q");
  const int i0 = odd_i0(q, pp);
  if (p.H.order() == G.order()) {
    if (p.K.order() == G.order()) return {hat(G, F, p.K), "3", "e0"};
    TraceSum s;
    s.K = &p.K;
    if (p.K == sub(G, {"a"})) {
      s.g = G.b();
      s.m = s.range = s.den = pp;
      return {build(G, F, s, k), "3", "e_1,k"};
    }
    for (int j = 1; j <= n - 1; ++j)
      for (u64 i = 0; i < pp; ++i) {
        u64 pj = ipow(pp, static_cast<unsigned>(j)), pj1 = pj / pp;
        std::string bw = (i * pj1 % G.N() == 0 ? std::string() : apow(i * pj1 % G.N())) + "b";
        if (!(p.K == sub(G, {apow(pj % G.N()), bw}))) continue;
        s.g = G.a();
        s.m = s.den = pj;
        std::string row = "e_(i,j),k:i=" + std::to_string(i) + ":j=" + std::to_string(j);
        if (j <= i0) {
          s.range = pj;
        } else {
          s.range = ipow(pp, static_cast<unsigned>(i0));
          s.estep = pj / s.range;
          s.cstep = rd == Reading::Printed ? 1 : s.estep;
          row += ":truncated";
        }
        return {build(G, F, s, k), "3", row};
      }
    mismatch("pair outside the p-group closed forms");
  }
  if (!(p.H == sub(G, {"a"})) || p.K.order() != 1) mismatch("pair outside the p-group closed forms");
  const u64 m = G.N(), w = 1 + m / pp;
  u64 omega0 = 1;
  for (u64 x = w % m; !in_cyclic_subgroup(x, q % m, m); x = mulmod(x, w, m)) ++omega0;
  TraceSum s;
  s.g = G.a();
  s.m = m;
  s.den = m;
  s.twists.clear();
  for (u64 t = 0, x = 1; t < omega0; ++t, x = mulmod(x, w, m)) s.twists.push_back(x);
  std::string row = "e_p^n,k:omega0=" + std::to_string(omega0);
  if (n < i0) {
    if (rd == Reading::Printed) mismatch("no p-group closed form for i0 > n");
    s.range = m;
  } else if (n == i0) {
    s.range = m;
  } else {
    s.range = ipow(pp, static_cast<unsigned>(i0));
    s.estep = m / s.range;
    s.cstep = rd == Reading::Printed ? 1 : s.estep;
    row += ":truncated";
  }
  return {build(G, F, s, k), "3", row};
}

bool is_ex54(const Group& G) {
  if (!G.is_product()) return false;
  const Group &L = G.left(), &R = G.right();
  if (L.is_product() || R.is_product()) return false;
  auto [p1, e1] = prime_power(L.N());
  return p1 == 7 && L.M() == 3 && L.s() == 0 && L.r() == invmod(18 % static_cast<i64>(L.N()), L.N()) &&
         R.N() == 11 && R.M() == 5 && R.r() == invmod(4, 11) && R.s() == 0;
}

// the order 56595 product, printed only
ClosedForm ex54(const Group& G, const Field& F, const ShodaPair& p, u64 k) {
  if (F.q() != 2) mismatch("order 56595 closed forms are over F_2");
  const Group &G1 = G.left(), &G2 = G.right();
  auto [p7, J] = prime_power(G1.N());
  (void)p7;
  auto S1 = [&](std::initializer_list<std::string> w) { return sub(G1, w); };
  auto S2 = [&](std::initializer_list<std::string> w) { return sub(G2, w); };
  auto P = [&](const Subgroup& A, const Subgroup& B) { return product_subgroup(G, A, B); };
  Subgroup A1 = S1({"a"}), A2 = S2({"a"}), W1 = whole(G1), W2 = whole(G2), T1 = trivial(G1), T2 = trivial(G2);
  Idx b1 = G.parse_word("(b,1)"), b2 = G.parse_word("(1,b)");
  auto mk = [&](const Subgroup& Kh, bool with_hat, Idx g, u64 m, u64 range, u64 step, u64 den, const std::string& row) {
    TraceSum s;
    s.K = with_hat ? &Kh : nullptr;
    s.g = g;
    s.m = m;
    s.range = range;
    s.estep = step;
    s.cstep = step;
    s.den = den;
    Alg v = build(G, F, s, k);
    return ClosedForm{v, "4", row};
  };
  const Subgroup &H = p.H, &K = p.K;
  Subgroup Gw = whole(G);
  if (H == Gw) {
    if (K == Gw) return {hat(G, F, Gw), "4", "e0"};
    if (K == P(A1, W2)) return mk(K, true, b1, 3, 3, 1, 3, "e1");
    if (K == P(W1, A2)) return mk(K, true, b2, 5, 5, 1, 5, "e2");
    if (K == P(A1, A2)) return mk(K, true, G.mul(b1, b2), 15, 15, 1, 15, "e3");
  }
  for (int j = 1; j <= J; ++j) {
    u64 pj = ipow(7, static_cast<unsigned>(j)), pj1 = pj / 7;
    Subgroup Aj = S1({apow(pj % G1.N())});
    Idx a1 = G.parse_word("(a,1)"), a2 = G.parse_word("(1,a)");
    std::string js = ":j=" + std::to_string(j);
    if (H == P(A1, W2) && K == P(Aj, W2)) return mk(K, true, a1, pj, 7, pj1, pj, "e4" + js);
    if (H == P(A1, W2) && K == P(Aj, A2)) {
      // printed: tr(xi_(5 7^j)^(7^(j-1) k i)) (a1,b2)^(-i 7^(j-1)), i < 7, over 7^j
      TraceSum s;
      s.K = &K;
      s.g = G.mul(a1, b2);
      s.m = 5 * pj;
      s.range = 7;
      s.cstep = s.estep = pj1;
      s.den = pj;
      Alg v = build(G, F, s, k);
      return {v, "4", "e5" + js};
    }
    if (H == P(A1, A2) && K == P(Aj, T2)) {
      TraceSum s;
      s.K = &K;
      s.g = G.mul(a1, a2);
      s.m = 11 * pj;
      s.range = 7;
      s.cstep = s.estep = pj1;
      s.den = 11 * pj;
      Alg v = build(G, F, s, k);
      return {v, "4", "e8" + js};
    }
  }
  Idx a2 = G.parse_word("(1,a)");
  if (H == P(W1, A2) && K == P(W1, T2)) return mk(K, true, a2, 11, 11, 1, 11, "e6");
  if (H == P(W1, A2) && K == P(A1, T2)) return mk(K, false, G.mul(b1, a2), 33, 33, 1, 33, "e7");
  mismatch("pair outside the order 56595 closed forms");
}

}  // namespace

int closed_form_table(const Group& G) {
  if (is_ex54(G)) return 4;
  if (G.is_product() || G.s() != 0) return 0;
  auto [p, n] = prime_power(G.N());
  if (!p || G.M() != p) return 0;
  if (p == 2 && n >= 3 && G.r() == G.N() - 1) return 1;
  if (p == 2 && n >= 3 && G.r() == 1 + G.N() / 2) return 2;
  if (p != 2 && n >= 2 && G.r() == 1 + G.N() / p) return 3;
  return 0;
}

ClosedForm pci_table_closed_form(const Group& G, const Field& F, const ShodaPair& p, u64 k, Reading rd) {
  require_semisimple(G, F);
  switch (closed_form_table(G)) {
    case 1: return dihedral(G, F, p, k, rd);
    case 2: return ordinary2(G, F, p, k, rd);
    case 3: return ordinary_p(G, F, p, k, rd);
    case 4: return ex54(G, F, p, k);
    default: mismatch(G.name() + " is not covered by the tables");
  }
}

}  // namespace metacode
