#include <algorithm>

#include "doctest.h"
#include "metacode/error.hpp"
#include "metacode/shoda.hpp"

using namespace metacode;

namespace {

std::vector<std::string> failing(const Group& G, const std::vector<ShodaPair>& c) {
  std::vector<std::string> bad;
  for (auto& p : c)
    if (!verify_ssp(G, p).ok) bad.push_back(p.label());
  return bad;
}

bool has(const std::vector<ShodaPair>& c, const std::string& label) {
  return std::any_of(c.begin(), c.end(), [&](const ShodaPair& p) { return p.label() == label; });
}

}  // namespace

TEST_SUITE("shoda") {

TEST_CASE("generic split family") {
  auto G = Group::named("G39");
  auto c = ssp_generic_split(G);
  CHECK(c.size() == 3);
  CHECK(failing(G, c).empty());
  auto D = Group::named("D:14");
  CHECK(ssp_generic_split(D).size() == 3);
  CHECK(failing(D, ssp_generic_split(D)).empty());
  auto G20 = Group::named("G20");
  CHECK(ssp_generic_split(G20).size() == 4);
  CHECK(failing(G20, ssp_generic_split(G20)).empty());
  CHECK_THROWS_AS(ssp_generic_split(Group::named("D:16")), Error);
  // unfaithful action: r = 1
  CHECK_THROWS_AS(ssp_generic_split(Group::metacyclic(7, 3, 1, 0)), Error);
}

TEST_CASE("D, Q, SD of order 16") {
  for (auto name : {"D:16", "Q:16", "SD:16"}) {
    auto G = Group::named(name);
    auto c = ssp_2group(G);
    CHECK(c.size() == 6);
    CHECK(failing(G, c).empty());
    CHECK(has(c, "(<a>,<a^4>)"));
    CHECK(has(c, "(<a>,1)"));
  }
  auto G = Group::named("D:32");
  CHECK(ssp_2group(G).size() == 7);
}

TEST_CASE("ordinary metacyclic 2-group") {
  auto G = Group::named("OM:2^4");
  auto c = ssp_ordinary_metacyclic_2(G);
  CHECK(c.size() == 7);
  CHECK(std::count_if(c.begin(), c.end(), [](const ShodaPair& p) { return p.label() == "(<a>,1)"; }) == 1);
  CHECK(failing(G, c).empty());
  auto G5 = Group::named("OM:2^6");
  CHECK(ssp_ordinary_metacyclic_2(G5).size() == 4 + 2 * 3 + 1);
  CHECK(failing(G5, ssp_ordinary_metacyclic_2(G5)).empty());
}

TEST_CASE("ordinary metacyclic p-group") {
  auto G = Group::named("OM:3^3");
  auto c = ssp_ordinary_metacyclic_p(G);
  CHECK(c.size() == 6);
  CHECK(c.back().K.order() == 1);
  CHECK(failing(G, c).empty());
  auto G5 = Group::named("OM:5^3");
  CHECK(ssp_ordinary_metacyclic_p(G5).size() == 2 + 5 + 1);
  CHECK(failing(G5, ssp_ordinary_metacyclic_p(G5)).empty());
  auto G34 = Group::named("OM:3^4");
  CHECK(ssp_ordinary_metacyclic_p(G34).size() == 2 + 6 + 1);
  CHECK(failing(G34, ssp_ordinary_metacyclic_p(G34)).empty());
}

TEST_CASE("order p^5 families at p = 3") {
  const u64 p = 3;
  CHECK(ssp_p5(Group::named("P5:1:3"), 1).size() == 3 + p + p + (p - 1) + (p - 1) + (p - 1) + 1);
  CHECK(ssp_p5(Group::named("P5:4:3"), 4).size() == 4 + 1 + 1 + 3 * (p - 1));
  auto G3 = Group::named("P5:3:3");
  auto c3 = ssp_p5(G3, 3);
  // (<a,b^p>, <a^(p(p-1)) b^(p(pk+1))>), k = 0..p-1
  CHECK(has(c3, "(<a,b^3>,<a^6b^3>)"));
  CHECK(has(c3, "(<a,b^3>,<a^6b^21>)"));
  for (int f : {1, 3, 4}) {
    auto G = Group::named("P5:" + std::to_string(f) + ":3");
    CHECK(failing(G, ssp_p5(G, f)).empty());
  }
  // the k = p-1 member of one G2 family does not have a cyclic quotient
  auto G2 = Group::named("P5:2:3");
  CHECK(failing(G2, ssp_p5(G2, 2)) == std::vector<std::string>{"(<a^-1b,a^3>,<a^6b^3,b^9>)"});
  CHECK_THROWS_AS(ssp_p5(G2, 5), Error);
}

TEST_CASE("dihedral and quaternion of any order") {
  auto D14 = Group::named("D:14");
  CHECK(ssp_dihedral_any(D14).size() == 3);
  auto D12 = Group::named("D:12");
  auto c12 = ssp_dihedral_any(D12);
  CHECK(c12.size() == 6);
  CHECK(failing(D12, c12).empty());
  auto Q20 = Group::named("Q:20");
  auto q20 = ssp_quaternion_any(Q20);
  CHECK(q20.size() == 5);
  CHECK(has(q20, "(G,<a^2>)"));
  CHECK(failing(Q20, q20).empty());
  auto Q24 = Group::named("Q:24");
  CHECK(failing(Q24, ssp_quaternion_any(Q24)).empty());
  CHECK(failing(Group::named("D:30"), ssp_dihedral_any(Group::named("D:30"))).empty());
}

TEST_CASE("products") {
  auto big = ssp_catalog(Group::named("EX54"));
  CHECK(big.size() == 15);
  CHECK(has(big, "(<a>x<a>,<a^7>x1)"));
  CHECK(has(big, "(<a>x<a>,<a^343>x1)") == false);
  auto P = Group::named("EX54S");
  auto c = ssp_catalog(P);
  CHECK(c.size() == 9);
  CHECK(failing(P, c).empty());
  CHECK(has(c, "(G,G)"));
  CHECK(has(c, "(<a>x<a>,1)"));

  auto D = Group::named("D:14");
  auto T = Group::product(D, Group::named("C:1"));
  auto ct = ssp_catalog(T);
  CHECK(ct.size() == ssp_catalog(D).size());
  CHECK(failing(T, ct).empty());

  auto C = Group::named("C2xQ8");
  auto cc = ssp_catalog(C);
  CHECK(cc.size() == 10);
  CHECK(failing(C, cc).empty());

  CHECK_THROWS_AS(verify_ssp(Group::named("EX54"), ssp_catalog(Group::named("EX54"))[0]), Error);
}

TEST_CASE("verify_ssp") {
  auto D = Group::named("D:8");
  CHECK(verify_ssp(D, ssp_pair(D, {"G"}, {"G"}, "")).ok);
  CHECK(verify_ssp(D, ssp_pair(D, {"a"}, {"1"}, "")).ok);
  auto r = verify_ssp(D, ssp_pair(D, {"b"}, {"1"}, ""));
  CHECK_FALSE(r.ok);
  CHECK(r.reason == "H is not normal in G");
  // D8 itself is not cyclic
  CHECK_FALSE(verify_ssp(D, ssp_pair(D, {"G"}, {"1"}, "")).ok);
  // (<a>,<a^2>) has cyclic quotient but is not maximal abelian: G/<a^2> is abelian
  CHECK_FALSE(verify_ssp(D, ssp_pair(D, {"a"}, {"a^2"}, "")).ok);
}

TEST_CASE("catalog dispatch") {
  CHECK(ssp_catalog(Group::named("C:6")).size() == 4);
  CHECK(ssp_catalog(Group::metacyclic(7, 2, 6, 0)).size() == 3);
  CHECK(ssp_catalog(Group::metacyclic(8, 2, 7, 4)).size() == 6);
  CHECK(ssp_catalog(Group::named("G27"))[0].family == "omp");
}

}  // TEST_SUITE
