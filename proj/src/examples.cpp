#include "metacode/examples.hpp"

#include "metacode/error.hpp"

namespace metacode {

namespace {

Field field_of(u64 q) {
  auto [p, e] = prime_power(q);
  return Field::make(p, static_cast<unsigned>(e));
}

ExampleCode plain(const std::string& id, const std::string& group, u64 q, const std::string& what, Alg gen) {
  ExampleCode x;
  x.id = id;
  x.group = group;
  x.q = q;
  x.construction = what;
  x.generator = std::move(gen);
  return x;
}

// e <b>^ and its conjugates for the order-p1 pci e_{p1,1} of a split group
ExampleCode noncentral(const std::string& id, const std::string& group, u64 q, const std::string& variant) {
  Group G = Group::named(group);
  Field F = field_of(q);
  Alg e = pci_of(G, F, {"a"}, {"1"});
  Subgroup B = b_power_subgroup(G, 1);
  if (variant == "central") return plain(id, group, q, "e_C(G,<a>,1)", e);
  if (variant == "beta") return plain(id, group, q, "e_C(G,<a>,1) <b>^", e * hat(G, F, B));
  ExampleCode x;
  x.id = id;
  x.group = group;
  x.q = q;
  x.has_unit = true;
  const std::string tail = "-constructed";
  x.base_id = (variant == "constructed" ? id.substr(0, id.size() - tail.size()) : id) + "-beta";
  if (variant == "constructed") {
    x.unit = constructed_unit(e, 1, 1, B);
    x.construction = "u^-1 e <b>^ u, u = e + <b>^ a (1 - <b>^) e";
  } else if (variant == "alternating") {
    x.unit = alternating(G, F, G.a(), 3);
    x.construction = "u^-1 e <b>^ u, u = 1 + a + a^2";
  } else if (variant == "geometric") {
    x.unit = geometric(G, F, G.a(), 2);
    x.construction = "u^-1 e <b>^ u, u = 1 + a";
  } else {
    throw Error(ErrorKind::BadParameters, "unknown variant " + variant);
  }
  x.generator = conjugate_idempotent(e, B, x.unit);
  return x;
}

}  // namespace

Alg pci_of(const Group& G, const Field& F, const std::vector<std::string>& h, const std::vector<std::string>& k,
           u64 label) {
  return pci(G, F, ssp_pair(G, h, k, ""), label);
}

std::vector<std::string> example_ids() {
  return {"f2-g27",          "f3-d8",           "f3-c2xq8",       "f5-d12",         "f3-d14-beta",
          "f3-d14-constructed", "f5-d14-beta",  "f5-d14-constructed", "f2-g39-central", "f2-g39-beta",
          "f2-g39-constructed", "f2-g39",       "f5-g39-beta",    "f5-g39-constructed", "f2-g57-beta",
          "f2-g57-constructed", "f2-g57",       "f3-g20-beta",    "f3-g20"};
}

ExampleCode build_example(const std::string& id) {
  if (id == "f2-g27") {
    Group G = Group::named("G27");
    Field F = field_of(2);
    return plain(id, "G27", 2, "e_C(G,G,<a>)", pci_of(G, F, {"G"}, {"a"}));
  }
  if (id == "f3-d8") {
    Group G = Group::named("D:8");
    Field F = field_of(3);
    Alg e = hat(G, F, whole(G));
    Alg gen = (Alg::one(G, F) - e) * hat(G, F, subgroup_of(G, {"b"}));
    return plain(id, "D:8", 3, "(1 - G^) <b>^", gen);
  }
  if (id == "f3-c2xq8") {
    Group G = Group::named("C2xQ8");
    Field F = field_of(3);
    Alg e1 = hat(G, F, whole(G));
    Alg e2 = pci_of(G, F, {"G"}, {"(1,a)", "(1,b)"});
    Alg e3 = pci_of(G, F, {"(1,a)", "(a,1)"}, {"(a,1)"});
    return plain(id, "C2xQ8", 3, "1 - (G^ + e_C(G,G,<a,b>) + e_C(G,<a,c>,<c>))", Alg::one(G, F) - (e1 + e2 + e3));
  }
  if (id == "f5-d12") {
    Group G = Group::named("D:12");
    Field F = field_of(5);
    Alg e1 = pci_of(G, F, {"G"}, {"a^2", "ab"});
    Alg e2 = pci_of(G, F, {"a"}, {"1"});
    Alg gen = e1 + hat(G, F, subgroup_of(G, {"b"})) * e2;
    return plain(id, "D:12", 5, "e_C(G,G,<a^2,ab>) + <b>^ e_C(G,<a>,1)", gen);
  }
  struct Row {
    const char* id;
    const char* group;
    u64 q;
    const char* variant;
  };
  static const Row rows[] = {
      {"f3-d14-beta", "D:14", 3, "beta"},         {"f3-d14-constructed", "D:14", 3, "constructed"},
      {"f5-d14-beta", "D:14", 5, "beta"},         {"f5-d14-constructed", "D:14", 5, "constructed"},
      {"f2-g39-central", "G39", 2, "central"},    {"f2-g39-beta", "G39", 2, "beta"},
      {"f2-g39-constructed", "G39", 2, "constructed"}, {"f2-g39", "G39", 2, "alternating"},
      {"f5-g39-beta", "G39", 5, "beta"},          {"f5-g39-constructed", "G39", 5, "constructed"},
      {"f2-g57-beta", "G57", 2, "beta"},          {"f2-g57-constructed", "G57", 2, "constructed"},
      {"f2-g57", "G57", 2, "alternating"},        {"f3-g20-beta", "G20", 3, "beta"},
      {"f3-g20", "G20", 3, "geometric"},
  };
  for (auto& r : rows)
    if (id == r.id) return noncentral(r.id, r.group, r.q, r.variant);
  throw Error(ErrorKind::BadParameters, "unknown example " + id);
}

}  // namespace metacode
