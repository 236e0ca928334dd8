#include <random>

#include "doctest.h"
#include "metacode/error.hpp"
#include "metacode/group.hpp"

using namespace metacode;

namespace {

Subgroup sub(const Group& G, std::initializer_list<const char*> words) {
  std::vector<Idx> g;
  for (auto w : words) g.push_back(G.parse_word(w));
  return subgroup_closure(G, g);
}

}  // namespace

TEST_SUITE("group") {

TEST_CASE("D8 multiplication") {
  auto D = Group::named("D:8");
  CHECK(D.order() == 8);
  CHECK(D.mul(D.ab(1, 1), D.ab(1, 0)) == D.ab(0, 1));
  CHECK(D.conj(D.a(), D.b()) == D.ab(3, 0));
  for (Idx g = 0; g < 8; ++g) {
    CHECK(D.mul(0, g) == g);
    CHECK(D.conj(g, 0) == g);
  }
}

TEST_CASE("Q16 folds b^2 to a^4") {
  auto Q = Group::named("Q:16");
  CHECK(Q.N() == 8);
  CHECK(Q.mul(Q.b(), Q.b()) == Q.ab(4, 0));
  CHECK(Q.elem_order(Q.b()) == 4);
  CHECK(center(Q) == sub(Q, {"a^4"}));
}

TEST_CASE("words round trip") {
  for (auto name : {"D:12", "Q:16", "G39", "C2xQ8", "P5:2:3"}) {
    auto G = Group::named(name);
    for (Idx g = 0; g < G.order(); ++g) CHECK(G.parse_word(G.word(g)) == g);
  }
  auto D = Group::named("D:8");
  CHECK(D.parse_word("ba") == D.parse_word("a^3b"));
  CHECK(D.parse_word("a^-1") == D.ab(3, 0));
  CHECK_THROWS_AS(D.parse_word("c"), Error);
}

TEST_CASE("closures") {
  auto D = Group::named("D:8");
  auto T = subgroup_closure(D, {0});
  CHECK(T.order() == 1);
  CHECK(T.cyclic);
  auto H = sub(D, {"a^2", "b"});
  CHECK(H.order() == 4);
  CHECK(H.normal);
  CHECK_FALSE(H.cyclic);
  auto B = sub(D, {"b"});
  CHECK(B.order() == 2);
  CHECK_FALSE(B.normal);
  CHECK(normalizer(D, B) == sub(D, {"a^2", "b"}));

  auto G = Group::named("G39");
  auto A = sub(G, {"a"});
  CHECK(A.order() == 13);
  CHECK(A.normal);
  CHECK(A.cyclic);
  CHECK(center(G).order() == 1);
}

TEST_CASE("quotients") {
  auto D = Group::named("D:8");
  auto all = whole(D);
  CHECK(quotient_is_cyclic(D, all) == Idx{0});
  auto g = quotient_is_cyclic(D, sub(D, {"a"}));
  REQUIRE(g);
  CHECK(*g == D.b());
  CHECK_FALSE(quotient_is_cyclic(D, trivial(D)));
  CHECK_THROWS_AS(quotient_is_cyclic(D, sub(D, {"b"})), Error);
  // <a^2> is central, D8 / <a^2> is C2 x C2
  CHECK_FALSE(quotient_is_cyclic(D, sub(D, {"a^2"})));
}

TEST_CASE("associativity and inverses on random triples") {
  std::mt19937_64 rng(1);
  for (auto name : {"D:16", "Q:32", "SD:32", "OM:2^5", "G57", "P5:1:3", "P5:2:3", "P5:3:3", "P5:4:3", "EX54S",
                    "C2xQ8", "EX54"}) {
    auto G = Group::named(name);
    std::uniform_int_distribution<Idx> d(0, static_cast<Idx>(G.order() - 1));
    for (int it = 0; it < 300; ++it) {
      Idx x = d(rng), y = d(rng), z = d(rng);
      CHECK(G.mul(G.mul(x, y), z) == G.mul(x, G.mul(y, z)));
      CHECK(G.mul(x, G.inv(x)) == 0);
      CHECK(G.mul(G.inv(x), x) == 0);
    }
  }
}

TEST_CASE("presentation validation") {
  CHECK_THROWS_AS(Group::metacyclic(4, 2, 2, 0), Error);
  CHECK_THROWS_AS(Group::metacyclic(7, 3, 3, 0), Error);  // 3^3 = 6 mod 7
  CHECK_THROWS_AS(Group::metacyclic(8, 2, 7, 1), Error);  // s(r-1) != 0
  CHECK_NOTHROW(Group::metacyclic(8, 2, 7, 4));
  CHECK_THROWS_AS(Group::named("X:3"), Error);
  CHECK_THROWS_AS(Group::named("P5:5:3"), Error);
}

TEST_CASE("2-group families have order 2^(n+1)") {
  for (int n = 3; n <= 5; ++n) {
    u64 ord = 1ull << (n + 1);
    auto k = std::to_string(ord);
    for (auto fam : {"D:", "Q:", "SD:", "OM:"}) {
      auto G = Group::named(fam + k);
      CHECK(G.order() == ord);
      CHECK(whole(G).order() == ord);
    }
  }
}

TEST_CASE("products") {
  auto P = Group::named("EX54");
  CHECK(P.order() == 56595);
  CHECK(P.left().order() == 1029);
  CHECK(P.right().order() == 55);
  CHECK_THROWS_AS(Group::product(Group::named("C:2"), Group::named("Q:8")), Error);
  auto C = Group::named("C2xQ8");
  CHECK(C.order() == 16);
  CHECK(center(C).order() == 4);
  auto D = Group::named("D:8");
  auto T = Group::product(D, Group::named("C:1"));
  CHECK(T.order() == 8);
  for (Idx x = 0; x < 8; ++x)
    for (Idx y = 0; y < 8; ++y) CHECK(T.mul(T.pair(x, 0), T.pair(y, 0)) == T.pair(D.mul(x, y), 0));
  auto H = product_subgroup(P, sub(P.left(), {"a"}), trivial(P.right()));
  CHECK(H.order() == 343);
  CHECK(H.normal);
}

}  // TEST_SUITE
