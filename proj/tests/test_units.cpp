#include "doctest.h"
#include "metacode/code.hpp"
#include "metacode/error.hpp"
#include "metacode/examples.hpp"
#include "metacode/units.hpp"
#include "oracles/naive.hpp"
#include "support.hpp"

using namespace metacode;
using oracle::naive_mul;
using support::fq;

namespace {

bool inverse_by_convolution(const UnitElement& u) {
  return naive_mul(u.value, u.inverse) == u.identity && naive_mul(u.inverse, u.value) == u.identity;
}

u64 dist(const Alg& e) { return min_distance(ideal_to_code(e)).d_hi; }

}  // namespace

TEST_SUITE("units") {

TEST_CASE("bicyclic") {
  auto G = Group::named("D:8");
  auto F = fq(3);
  auto one = bicyclic(G, F, G.b(), 0);
  CHECK(one.value == Alg::one(G, F));
  // g = b, h = a: a~ is central so the unit collapses to 1
  CHECK(inverse_by_convolution(bicyclic(G, F, G.b(), G.a())));
  CHECK(bicyclic(G, F, G.b(), G.a()).value == Alg::one(G, F));
  for (bool mirrored : {false, true}) {
    auto u = bicyclic(G, F, G.a(), G.b(), mirrored);
    CHECK(inverse_by_convolution(u));
    Alg n = u.value - Alg::one(G, F);
    CHECK_FALSE(n.is_zero());
    CHECK(naive_mul(n, n).is_zero());
  }
  // every pair in a non-abelian group of order 20
  auto H = Group::named("G20");
  for (Idx g = 0; g < H.order(); g += 3)
    for (Idx h = 0; h < H.order(); h += 7) CHECK(verify_unit(bicyclic(H, F, g, h)));
}

TEST_CASE("bass") {
  auto G = Group::named("G20");
  auto F = fq(3);
  CHECK(bass(G, F, G.a(), 1, 1).value == Alg::one(G, F));
  auto u = bass(G, F, G.a(), 2, 4);
  CHECK(inverse_by_convolution(u));
  // inverse is u_{3,4}(a^2)
  CHECK(u.inverse == bass(G, F, G.pow(G.a(), 2), 3, 4).value);
  CHECK_THROWS_AS(bass(G, F, G.a(), 2, 3), Error);
  CHECK_THROWS_AS(bass(G, F, G.a(), 5, 1), Error);
  // k^m large: (1 - k^m)/n is reduced mod p without overflow
  auto G57 = Group::named("G57");
  auto F2 = fq(2);
  for (u64 k : {2, 3, 5, 7}) {
    u64 m = mult_order(k, 19);
    CHECK(inverse_by_convolution(bass(G57, F2, G57.a(), k, m)));
    CHECK(verify_unit(bass(G57, F2, G57.a(), k, 3 * m)));
  }
  // an element of order 3
  CHECK(verify_unit(bass(G57, F2, G57.b(), 2, 2)));
}

TEST_CASE("alternating") {
  auto G39 = Group::named("G39");
  auto F2 = fq(2);
  CHECK(alternating(G39, F2, G39.a(), 1).value == Alg::one(G39, F2));
  auto u = alternating(G39, F2, G39.a(), 3);
  CHECK(u.value == geometric_sum(G39, F2, G39.a(), 3));
  CHECK(u.inverse == geometric_sum(G39, F2, G39.pow(G39.a(), 3), 9));
  CHECK(inverse_by_convolution(u));
  int even_k1 = 0;
  for (auto name : {"D:14", "G39", "G57"}) {
    auto G = Group::named(name);
    u64 p = G.elem_order(G.a());
    for (u64 k = 1; k < p; k += 2) {
      auto v = alternating(G, F2, G.a(), k);
      CHECK(inverse_by_convolution(v));
      even_k1 += invmod(static_cast<i64>(k), p) % 2 == 0;
    }
  }
  CHECK(even_k1 > 0);
  CHECK_THROWS_AS(alternating(G39, fq(5), G39.a(), 3), Error);
  CHECK_THROWS_AS(alternating(G39, F2, G39.a(), 2), Error);
  CHECK_THROWS_AS(alternating(G39, F2, G39.a(), 15), Error);
  auto C15 = Group::named("C:15");
  CHECK_THROWS_AS(alternating(C15, F2, C15.a(), 1), Error);
}

TEST_CASE("geometric units") {
  auto G = Group::named("G20");
  auto F = fq(3);
  auto u = geometric(G, F, G.a(), 2);
  CHECK(u.value == Alg::one(G, F) + Alg::basis(G, F, G.a()));
  CHECK(inverse_by_convolution(u));
  for (u64 k : {1, 2, 4, 7, 8}) CHECK(verify_unit(geometric(G, F, G.a(), k)));
  CHECK_THROWS_AS(geometric(G, F, G.a(), 3), Error);  // 3 = 0 in F_3
  // matches the alternating parity rule in characteristic 2
  auto H = Group::named("G57");
  for (u64 k : {3, 5, 7, 11}) {
    auto x = geometric(H, fq(2), H.a(), k);
    CHECK(x.inverse == alternating(H, fq(2), H.a(), k).inverse);
  }
}

TEST_CASE("constructed unit") {
  for (u64 q : {3, 5}) {
    auto G = Group::named("D:14");
    auto F = fq(q);
    Alg e = pci_of(G, F, {"a"}, {"1"});
    auto B = b_power_subgroup(G, 1);
    auto u = constructed_unit(e, 1, 1, B);
    CHECK(inverse_by_convolution(u));
    CHECK(u.identity == e);
    for (u64 k = 1; k < 7; ++k)
      for (Elem s = 1; s < q; ++s) CHECK(verify_unit(constructed_unit(e, s, k, B)));
    CHECK_THROWS_AS(constructed_unit(e, 0, 1, B), Error);
    CHECK_THROWS_AS(constructed_unit(e, 1, 7, B), Error);
    // G^ absorbs the middle term
    Alg g = hat(G, F, whole(G));
    CHECK(constructed_unit(g, 1, 1, B).value == g);
  }
}

TEST_CASE("conjugated idempotents") {
  auto G = Group::named("D:14");
  auto F = fq(3);
  Alg e = pci_of(G, F, {"a"}, {"1"});
  auto B = b_power_subgroup(G, 1);
  Alg Bh = hat(G, F, B);
  auto trivial_unit = bicyclic(G, F, G.b(), 0);
  CHECK(conjugate_idempotent(e, B, trivial_unit) == e * Bh);
  // the printed form e(B^ + B^ a (1 - B^))
  Alg printed = e * (Bh + Bh * Alg::basis(G, F, G.a()) * (Alg::one(G, F) - Bh));
  CHECK(conjugate_idempotent(e, B, constructed_unit(e, 1, 1, B)) == printed);
  // the other conjugate realises it with s = -1
  CHECK(conjugate_idempotent(e, B, constructed_unit(e, F.neg(1), 1, B), Conjugation::UnitFirst) == printed);
  CHECK(b_power_subgroup(G, 2).order() == 1);
}

TEST_CASE("idempotency, rank and distance of the worked unit codes") {
  int checked = 0;
  for (auto& id : example_ids()) {
    auto x = build_example(id);
    if (!x.has_unit) continue;
    ++checked;
    auto base = build_example(x.base_id);
    CAPTURE(id);
    CHECK(verify_unit(x.unit));
    CHECK(x.generator.is_idempotent());
    CHECK_FALSE(x.generator.is_central());
    CHECK(ideal_to_code(x.generator).k == ideal_to_code(base.generator).k);
    CHECK(dist(base.generator) <= dist(x.generator));
  }
  CHECK(checked == 8);
}

TEST_CASE("worked unit examples") {
  auto G39 = build_example("f2-g39");
  auto c = ideal_to_code(G39.generator);
  CHECK(c.k == 12);
  CHECK(min_distance(c).d_hi == 12);
  CHECK(dist(build_example("f3-g20").generator) == 12);
  CHECK(dist(build_example("f2-g39-constructed").generator) == 10);
  // G57: 14 with u^-1 e B^ u, 16 with u e B^ u^-1
  auto g57 = build_example("f2-g57");
  CHECK(dist(g57.generator) == 14);
  auto G = Group::named("G57");
  Alg e = pci_of(G, fq(2), {"a"}, {"1"});
  CHECK(dist(conjugate_idempotent(e, b_power_subgroup(G, 1), g57.unit, Conjugation::UnitFirst)) == 16);
}

}  // TEST_SUITE
