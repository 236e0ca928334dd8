#include <random>

#include "doctest.h"
#include "metacode/error.hpp"
#include "metacode/ffield.hpp"

using namespace metacode;

namespace {

// order of x modulo the defining polynomial, by stepping x^t
u64 root_order(const ExtField& E) {
  auto x = E.xi();
  auto cur = x;
  for (u64 t = 1; t <= E.m() + 1; ++t) {
    if (E.is_one(cur)) return t;
    cur = E.mul(cur, x);
  }
  return 0;
}

ExtField::Vec random_vec(const ExtField& E, std::mt19937_64& rng) {
  std::uniform_int_distribution<u64> d(0, E.base().q() - 1);
  ExtField::Vec v(E.o());
  for (auto& c : v) c = static_cast<Elem>(d(rng));
  return v;
}

}  // namespace

TEST_SUITE("ffield") {

TEST_CASE("prime fields use modulus x") {
  auto F = Field::make(3, 1);
  CHECK(F.q() == 3);
  CHECK(F.modulus() == Poly{0, 1});
  CHECK(Field::make(2, 1).q() == 2);
  CHECK_THROWS_AS(Field::make(6, 1), Error);
}

TEST_CASE("GF(9) modulus is the least irreducible quadratic") {
  // brute force: c0 most significant, first monic x^2 + c1 x + c0 with no root
  u64 best0 = 0, best1 = 0;
  bool found = false;
  for (u64 c0 = 0; c0 < 3 && !found; ++c0)
    for (u64 c1 = 0; c1 < 3 && !found; ++c1) {
      bool root = false;
      for (u64 x = 0; x < 3; ++x) root |= (x * x + c1 * x + c0) % 3 == 0;
      if (!root) {
        best0 = c0;
        best1 = c1;
        found = true;
      }
    }
  auto F = Field::make(3, 2);
  CHECK(F.modulus() == Poly{static_cast<Elem>(best0), static_cast<Elem>(best1), 1});
  CHECK(Field::make(3, 2).modulus() == F.modulus());
}

TEST_CASE("field axioms on small tables") {
  for (auto [p, e] : std::vector<std::pair<u64, unsigned>>{{2, 3}, {3, 2}, {5, 2}, {2, 5}, {7, 1}}) {
    auto F = Field::make(p, e);
    u64 q = F.q();
    for (Elem a = 0; a < q; ++a) {
      CHECK(F.add(a, F.neg(a)) == 0);
      if (a) CHECK(F.mul(a, F.inv(a)) == 1);
      for (Elem b = 0; b < q; b += 3) {
        CHECK(F.add(a, b) == F.add(b, a));
        CHECK(F.mul(a, b) == F.mul(b, a));
        Elem c = static_cast<Elem>((a + 2 * b + 1) % q);
        CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
      }
    }
  }
}

TEST_CASE("mult_order") {
  CHECK(mult_order(2, 7) == 3);
  CHECK(mult_order(5, 13) == 4);
  CHECK(mult_order(11, 1) == 1);
  CHECK_THROWS_AS(mult_order(3, 6), Error);
}

TEST_CASE("extension examples") {
  auto E = ExtField::for_root(Field::make(2, 1), 7);
  CHECK(E.o() == 3);
  CHECK(root_order(E) == 7);
  // xi + xi^2 + xi^4 expanded in the polynomial basis
  auto x = E.xi();
  auto s = E.add(E.add(x, E.pow(x, 2)), E.pow(x, 4));
  for (unsigned i = 1; i < E.o(); ++i) CHECK(s[i] == 0);
  CHECK(E.trace(x) == s[0]);

  auto E1 = ExtField::for_root(Field::make(5, 1), 1);
  CHECK(E1.o() == 1);
  CHECK(E1.is_one(E1.xi()));
  CHECK(E1.trace(E1.one()) == 1);

  auto E4 = ExtField::for_root(Field::make(3, 1), 4);
  CHECK(E4.o() == 2);
  CHECK(root_order(E4) == 4);
  CHECK(E4.trace(E4.one()) == 2);
  CHECK(E4.trace(E4.zero()) == 0);
  CHECK_THROWS_AS(ExtField::for_root(Field::make(3, 1), 6), Error);
}

TEST_CASE("xi has exact order m for m <= 512") {
  for (auto [p, e] : std::vector<std::pair<u64, unsigned>>{{2, 1}, {3, 1}, {5, 1}, {7, 1}, {3, 2}}) {
    auto F = Field::make(p, e);
    for (u64 m = 1; m <= 512; ++m) {
      if (m % p == 0) continue;
      auto E = ExtField::for_root(F, m);
      CHECK(E.o() == mult_order(F.q() % m, m));
      INFO("q=" << F.q() << " m=" << m);
      CHECK(root_order(E) == m);
    }
  }
}

TEST_CASE("trace is linear, Frobenius invariant and matches the Frobenius sum") {
  std::mt19937_64 rng(7);
  for (auto [p, e, m] : std::vector<std::tuple<u64, unsigned, u64>>{
           {2, 1, 7}, {2, 1, 63}, {3, 1, 13}, {3, 2, 20}, {5, 1, 31}, {7, 1, 57}, {2, 2, 85}, {5, 1, 12}}) {
    auto F = Field::make(p, e);
    auto E = ExtField::for_root(F, m);
    for (int it = 0; it < 20; ++it) {
      auto x = random_vec(E, rng), y = random_vec(E, rng);
      Elem a = static_cast<Elem>(rng() % F.q()), b = static_cast<Elem>(rng() % F.q());
      auto ax = x, by = y;
      for (auto& c : ax) c = F.mul(c, a);
      for (auto& c : by) c = F.mul(c, b);
      CHECK(E.trace(E.add(ax, by)) == F.add(F.mul(a, E.trace(x)), F.mul(b, E.trace(y))));
      CHECK(E.trace(E.frobenius(x)) == E.trace(x));
      CHECK(E.trace(x) == E.trace_by_frobenius(x));
    }
    auto T = E.root_traces(m);
    auto x = E.xi();
    for (u64 t = 0; t < m; t += 1 + m / 9) CHECK(T[t] == E.trace_by_frobenius(E.pow(x, t)));
  }
}

TEST_CASE("two-adic decomposition") {
  CHECK(two_adic(5).i0 == 2);
  CHECK(two_adic(5).sign == 1);
  CHECK(two_adic(3).i0 == 2);
  CHECK(two_adic(3).sign == -1);
  CHECK(two_adic(7).i0 == 3);
  CHECK_THROWS_AS(two_adic(4), Error);
  CHECK(odd_i0(2, 7) == 1);
  CHECK(odd_i0(8, 3) == 2);
}

TEST_CASE("2-power trace predicate examples") {
  CHECK(trace_vanishes_2power(5, 3));
  CHECK(trace_vanishes_2power(3, 2));
  CHECK_FALSE(trace_vanishes_2power(7, 3));
  auto E = ExtField::for_root(Field::make(7, 1), 8);
  CHECK(E.trace(E.xi()) != 0);
  CHECK_THROWS_AS(trace_vanishes_2power(8, 3), Error);
}

TEST_CASE("2-power trace predicate against direct traces") {
  // q = 1 mod 4 agrees everywhere. For q = -1 mod 4 the orbit of xi at
  // i = i0 + 1 is {xi, -xi^-1}, whose sum is nonzero, so the predicate is
  // wrong exactly there.
  for (u64 q = 3; q <= 100; q += 2) {
    auto pp = prime_power(q);
    if (!pp.first) continue;
    auto F = Field::make(pp.first, static_cast<unsigned>(pp.second));
    TwoAdic t = two_adic(q);
    for (int i = 1; i <= 10; ++i) {
      auto T = ExtField::for_root(F, 1ull << i).root_traces(2);
      bool direct = T[1] == 0;
      INFO("q=" << q << " i=" << i);
      if (t.sign == -1 && i == t.i0 + 1) {
        CHECK(trace_vanishes_2power(q, i));
        CHECK_FALSE(direct);
      } else {
        CHECK(trace_vanishes_2power(q, i) == direct);
      }
    }
  }
}

TEST_CASE("two odd primes: hypotheses") {
  CHECK_THROWS_AS(trace_vanishes_two_odd_primes(2, 3, 7, 1, 1, 1), Error);
  CHECK_THROWS_AS(trace_vanishes_two_odd_primes(2, 5, 11, 1, 1, 1), Error);
  CHECK_THROWS_AS(trace_vanishes_two_odd_primes(5, 5, 7, 1, 1, 1), Error);
  CHECK(trace_vanishes_two_odd_primes(2, 5, 7, 1, 1, 1) == trace_vanishes_two_odd_primes(2, 5, 7, 1, 1, 3));
}

}  // TEST_SUITE
