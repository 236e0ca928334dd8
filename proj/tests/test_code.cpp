#include <map>
#include <random>

#include "doctest.h"
#include "metacode/audit.hpp"
#include "metacode/code.hpp"
#include "metacode/error.hpp"
#include "metacode/examples.hpp"
#include "oracles/naive.hpp"
#include "support.hpp"

using namespace metacode;
using oracle::brute_distance;
using oracle::naive_rank;
using support::fq;

namespace {

using Multiset = std::vector<std::pair<std::pair<u64, u64>, u64>>;

Multiset as_multiset(const std::map<std::pair<u64, u64>, u64>& m) { return {m.begin(), m.end()}; }

std::vector<std::vector<Elem>> random_rows(std::mt19937_64& rng, u64 p, u64 k, u64 n) {
  std::vector<std::vector<Elem>> rows(k, std::vector<Elem>(n));
  for (auto& r : rows)
    for (auto& v : r) v = static_cast<Elem>(rng() % p);
  return rows;
}

bool in_code(const LinearCode& c, const std::vector<Elem>& v) {
  auto rows = c.rows;
  rows.push_back(v);
  return rank_of(c.F, c.n, rows) == c.k;
}

u64 weight(const std::vector<Elem>& v) {
  u64 w = 0;
  for (Elem x : v) w += x != 0;
  return w;
}

}  // namespace

TEST_SUITE("code") {

TEST_CASE("ideal_to_code extremes") {
  auto G = Group::named("G39");
  auto F = fq(2);
  auto id = ideal_to_code(Alg::one(G, F));
  CHECK(id.n == 39);
  CHECK(id.k == 39);
  CHECK(min_distance(id).d_hi == 1);
  auto all = ideal_to_code(hat(G, F, whole(G)));
  CHECK(all.k == 1);
  CHECK(min_distance(all).d_hi == 39);
  // e_13: the two-sided ideal of everything but the trivial and the order-3 characters
  auto ex = build_example("f2-g39-central");
  auto c = ideal_to_code(ex.generator);
  CHECK(c.k == 36);
  CHECK(min_distance(c).d_hi == 2);
}

TEST_CASE("rank against plain elimination") {
  std::mt19937_64 rng(7);
  for (u64 p : {2, 3, 5, 7, 13}) {
    for (int t = 0; t < 20; ++t) {
      u64 k = 1 + rng() % 8, n = 1 + rng() % 12;
      auto rows = random_rows(rng, p, k, n);
      if (t % 3 == 0 && k > 1) rows[k - 1] = rows[0];
      CHECK(rank_of(fq(p), n, rows) == naive_rank(rows, p));
    }
  }
  auto G = Group::named("D:14");
  auto F = fq(3);
  for (auto& e : all_pcis(G, F, ssp_catalog(G))) {
    std::vector<std::vector<Elem>> rows;
    for (Idx g = 0; g < G.order(); ++g) rows.push_back(e.value.left(g).coeffs());
    CHECK(ideal_to_code(e.value).k == naive_rank(rows, 3));
  }
}

TEST_CASE("minimum distance against brute force") {
  std::mt19937_64 rng(11);
  for (u64 p : {2, 3, 5, 7}) {
    for (int t = 0; t < 12; ++t) {
      u64 k = 1 + rng() % (p == 2 ? 10 : p == 3 ? 6 : 4), n = k + rng() % 14;
      auto rows = random_rows(rng, p, k, n);
      auto c = span_code(fq(p), n, rows);
      if (c.k == 0) continue;
      auto d = min_distance(c);
      CHECK(d.exact());
      CHECK(d.exhaustive);
      CHECK(d.d_hi == brute_distance(c.rows, p));
    }
  }
  // ideal codes
  auto G = Group::named("G27");
  for (auto& e : all_pcis(G, fq(2), ssp_catalog(G))) {
    auto c = ideal_to_code(e.value);
    if (c.k > 12) continue;
    CHECK(min_distance(c).d_hi == brute_distance(c.rows, 2));
  }
}

TEST_CASE("interval mode brackets the exact distance") {
  std::mt19937_64 rng(3);
  for (u64 p : {2, 3, 5}) {
    for (int t = 0; t < 8; ++t) {
      u64 k = 2 + rng() % (p == 2 ? 12 : p == 3 ? 7 : 5), n = 2 * k + rng() % 20;
      auto c = span_code(fq(p), n, random_rows(rng, p, k, n));
      auto ex = min_distance(c);
      DistanceOptions o;
      o.force_interval = true;
      auto iv = min_distance(c, o);
      CHECK(iv.d_lo <= ex.d_hi);
      CHECK(iv.d_hi >= ex.d_hi);
      CHECK(iv.exact());  // budget is ample here
      o.budget = 50;
      auto tight = min_distance(c, o);
      CHECK(tight.d_lo <= ex.d_hi);
      CHECK(tight.d_hi >= ex.d_hi);
    }
  }
  // GF(4)
  auto G = Group::named("G39");
  auto F4 = fq(4);
  int seen = 0;
  for (auto& e : all_pcis(G, F4, ssp_catalog(G))) {
    auto c = ideal_to_code(e.value);
    if (c.k > 10) continue;
    ++seen;
    auto ex = min_distance(c);
    DistanceOptions o;
    o.force_interval = true;
    auto iv = min_distance(c, o);
    CHECK(iv.d_lo <= ex.d_hi);
    CHECK(iv.d_hi >= ex.d_hi);
    CHECK(in_code(c, iv.witness));
    CHECK(weight(iv.witness) == iv.d_hi);
  }
  CHECK(seen > 0);
}

TEST_CASE("threads and witnesses") {
  auto x = build_example("f2-g39");
  auto c = ideal_to_code(x.generator);
  DistanceOptions one, four;
  one.threads = 1;
  four.threads = 4;
  auto d1 = min_distance(c, one), d4 = min_distance(c, four);
  CHECK(d1.d_hi == d4.d_hi);
  CHECK(d1.witness == d4.witness);
  CHECK(weight(d1.witness) == d1.d_hi);
  CHECK(in_code(c, d1.witness));
  LinearCode zero = span_code(fq(3), 5, {});
  CHECK_THROWS_AS(min_distance(zero), Error);
}

TEST_CASE("dimension and distance audits over the matrix") {
  for (auto& cs : support::matrix()) {
    auto G = Group::named(cs.group);
    auto F = fq(cs.q);
    CAPTURE(cs.group);
    CAPTURE(cs.q);
    auto rows = audit_codes(G, F, support::good_catalog(G));
    CHECK_FALSE(rows.empty());
    for (auto& r : rows) {
      CAPTURE(r.describe());
      CHECK(r.ok());
    }
  }
  auto G = Group::named("G27");
  auto rows = audit_codes(G, fq(2), ssp_catalog(G));
  bool found = false;
  for (auto& r : rows)
    if (r.kind == "(G,K)" && r.pair == "(G,<a>)") {
      found = true;
      CHECK(r.k == 2);
      CHECK(r.d.d_hi == 18);
      CHECK(r.d.exact());
    }
  CHECK(found);
}

TEST_CASE("ordinary metacyclic dimension formulas") {
  auto G16 = Group::named("OM:2^4");
  for (u64 q : {3, 5, 7}) {
    auto rows = audit_codes(G16, fq(q), ssp_catalog(G16));
    int n = 0;
    for (auto& r : rows)
      if (r.kind == "e_2^n") {
        ++n;
        CHECK(r.dim_ok);
        CHECK(r.window_ok);
      }
    CHECK(n > 0);
  }
  auto G27 = Group::named("G27");
  for (u64 q : {2, 5}) {
    auto rows = audit_codes(G27, fq(q), ssp_catalog(G27));
    int n = 0;
    for (auto& r : rows)
      if (r.kind == "e_p^n") {
        ++n;
        CHECK(r.dim_ok);
        CHECK(r.window_ok);
      }
    CHECK(n > 0);
  }
  CHECK_THROWS_AS(ordinary_2group_params(Group::named("D:16"), fq(3)), Error);
}

TEST_CASE("rank of every pci is the Wedderburn component dimension") {
  for (auto& cs : support::matrix()) {
    auto G = Group::named(cs.group);
    auto F = fq(cs.q);
    CAPTURE(cs.group);
    for (auto& e : all_pcis(G, F, support::good_catalog(G)))
      CHECK(ideal_to_code(e.value).k == e.matrix_size * e.matrix_size * e.field_degree);
  }
}

TEST_CASE("Wedderburn reports") {
  for (auto& cs : support::matrix()) {
    auto G = Group::named(cs.group);
    CAPTURE(cs.group);
    CHECK(wedderburn_report(G, fq(cs.q)).total_dimension == G.order());
  }
  // D16: four linear characters; the degree-2 characters have field Q(sqrt 2)
  // except the one through D8
  auto D16 = Group::named("D:16");
  for (u64 q : {3, 5, 7}) {
    bool sqrt2 = false;
    for (u64 x = 1; x < q; ++x) sqrt2 = sqrt2 || x * x % q == 2;
    std::map<std::pair<u64, u64>, u64> want{{{1, 1}, 4}};
    if (sqrt2)
      want[{2, 1}] = 3;
    else
      want[{2, 1}] = 1, want[{2, 2}] = 1;
    CHECK(wedderburn_report(D16, fq(q)).multiset() == as_multiset(want));
  }
  // order 27, exponent 9: nine linear characters and two of degree 3 with
  // character field Q(zeta_3)
  auto G27 = Group::named("G27");
  for (u64 q : {2, 5, 7}) {
    u64 o = mult_order(q, 3);
    std::map<std::pair<u64, u64>, u64> want{{{1, 1}, 1}};
    want[{1, o}] += 8 / o;
    want[{3, o}] += 2 / o;
    CAPTURE(q);
    CHECK(wedderburn_report(G27, fq(q)).multiset() == as_multiset(want));
  }
}

TEST_CASE("isomorphism of group algebras") {
  auto D = Group::named("D:16"), SD = Group::named("SD:16"), Q = Group::named("Q:16");
  CHECK_FALSE(algebra_isomorphic(D, SD, fq(7)));
  CHECK_FALSE(algebra_isomorphic(D, SD, fq(3)));
  CHECK(algebra_isomorphic(D, SD, fq(5)));
  for (u64 q : {3, 5, 7}) CHECK(algebra_isomorphic(D, Q, fq(q)));
  CHECK_FALSE(algebra_isomorphic(D, Group::named("D:14"), fq(3)));
}

TEST_CASE("generator matrix text") {
  auto c = span_code(fq(2), 4, {{1, 1, 1, 1}});
  CHECK(emit_genmat(c) == "2 4 1\n1111\n");
  auto x = build_example("f5-d12");
  auto code = ideal_to_code(x.generator);
  auto back = parse_genmat(emit_genmat(code));
  CHECK(back.rows == code.rows);
  CHECK(back.k == 3);
  CHECK(min_distance(back).d_hi == 8);
  // extension field
  auto G = Group::named("G39");
  auto F4 = fq(4);
  auto e = all_pcis(G, F4, ssp_catalog(G)).back().value;
  auto c4 = ideal_to_code(e);
  auto text = emit_genmat(c4);
  CHECK(text.find(',') != std::string::npos);
  CHECK(parse_genmat(text).rows == c4.rows);
  // large prime
  auto c101 = span_code(fq(101), 3, {{100, 1, 57}});
  CHECK(parse_genmat(emit_genmat(c101)).rows == c101.rows);
  CHECK_THROWS_AS(parse_genmat(""), Error);
  CHECK_THROWS_AS(parse_genmat("6 4 1\n1111\n"), Error);
  CHECK_THROWS_AS(parse_genmat("2 4 1\n111\n"), Error);
  CHECK_THROWS_AS(parse_genmat("2 4 1\n1121\n"), Error);
  CHECK_THROWS_AS(parse_genmat("2 4 2\n1111\n"), Error);
  CHECK_THROWS_AS(parse_genmat("2 4 2\n1111\n1111\n"), Error);
  CHECK_THROWS_AS(parse_genmat("4 2 1\n1,x 0\n"), Error);
}

TEST_CASE("left and two-sided codes agree for central idempotents") {
  auto G = Group::named("D:12");
  auto F = fq(5);
  for (auto& e : all_pcis(G, F, ssp_catalog(G))) {
    auto l = ideal_to_code(e.value, Side::Left), t = ideal_to_code(e.value, Side::TwoSided);
    CHECK(l.rows == t.rows);
  }
  // non-central: the two-sided ideal is the whole component
  auto x = build_example("f3-d14-beta");
  CHECK(ideal_to_code(x.generator, Side::Left).k == 6);
  CHECK(ideal_to_code(x.generator, Side::TwoSided).k == 12);
}

TEST_CASE("worked example parameters") {
  struct Want {
    const char* id;
    u64 n, k, d;
  };
  const Want want[] = {
      {"f2-g27", 27, 2, 18},        {"f3-d8", 8, 3, 4},          {"f3-c2xq8", 16, 10, 4},
      {"f5-d12", 12, 3, 8},         {"f3-d14-beta", 14, 6, 4},   {"f3-d14-constructed", 14, 6, 6},
      {"f5-d14-beta", 14, 6, 4},    {"f5-d14-constructed", 14, 6, 7}, {"f2-g39-central", 39, 36, 2},
      {"f2-g39-beta", 39, 12, 6},   {"f2-g39-constructed", 39, 12, 10}, {"f2-g39", 39, 12, 12},
      {"f5-g39-beta", 39, 12, 6},   {"f5-g39-constructed", 39, 12, 17}, {"f2-g57-beta", 57, 18, 6},
      {"f2-g57-constructed", 57, 18, 14}, {"f2-g57", 57, 18, 14}, {"f3-g20-beta", 20, 4, 8},
      {"f3-g20", 20, 4, 12},
  };
  CHECK(example_ids().size() == std::size(want));
  for (auto& w : want) {
    CAPTURE(std::string(w.id));
    auto c = ideal_to_code(build_example(w.id).generator);
    CHECK(c.n == w.n);
    CHECK(c.k == w.k);
    auto d = min_distance(c);
    CHECK(d.exact());
    CHECK(d.d_hi == w.d);
  }
}

}  // TEST_SUITE
