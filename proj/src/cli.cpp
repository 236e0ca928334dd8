#include "metacode/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "metacode/code.hpp"
#include "metacode/error.hpp"
#include "metacode/examples.hpp"
#include "metacode/units.hpp"
#include "metacode/verify.hpp"

namespace metacode {

using Json = nlohmann::ordered_json;

namespace {

Group group_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw Error(ErrorKind::SchemaError, "group spec must be an object");
  try {
    if (j.contains("named")) return Group::named(j.at("named").get<std::string>());
    if (j.contains("product")) {
      const auto& parts = j.at("product");
      if (!parts.is_array() || parts.size() != 2) throw Error(ErrorKind::SchemaError, "product needs two specs");
      return Group::product(group_from_json(parts[0]), group_from_json(parts[1]), j.value("coprime", true));
    }
    for (auto key : {"N", "M", "r"})
      if (!j.contains(key)) throw Error(ErrorKind::SchemaError, std::string("missing \"") + key + "\"");
    for (auto& [key, v] : j.items()) {
      static const std::set<std::string> known{"N", "M", "r", "s", "name"};
      if (!known.count(key)) throw Error(ErrorKind::SchemaError, "unknown key \"" + key + "\"");
      if (key != "name" && !v.is_number_unsigned()) throw Error(ErrorKind::SchemaError, "\"" + key + "\" must be a non-negative integer");
    }
    return Group::metacyclic(j.at("N").get<u64>(), j.at("M").get<u64>(), j.at("r").get<u64>(), j.value("s", u64(0)),
                             j.value("name", std::string()));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::SchemaError, e.what());
  }
}

Field field_for(u64 q) {
  auto [p, e] = prime_power(q);
  if (!p) throw Error(ErrorKind::BadParameters, std::to_string(q) + " is not a prime power");
  return Field::make(p, static_cast<unsigned>(e));
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep))
    if (!cur.empty()) out.push_back(cur);
  return out;
}

std::vector<ShodaPair> usable_catalog(const Group& G) {
  auto cat = ssp_catalog(G);
  if (G.order() > 10000) return cat;  // verify_ssp refuses these
  std::vector<ShodaPair> out;
  for (auto& p : cat)
    if (verify_ssp(G, p).ok) out.push_back(p);
  return out;
}

Json subgroup_json(const Group& G, const Subgroup& H) {
  Json gens = Json::array();
  for (Idx g : H.gens) gens.push_back(G.word(g));
  return Json{{"order", H.order()}, {"generators", gens}};
}

Json coeff_json(const Field& F, Elem c) {
  auto cs = F.coords(c);
  cs.resize(F.e(), 0);
  return Json(cs);
}

Json terms_json(const Alg& x) {
  const Group& G = x.group();
  Json out = Json::array();
  for (auto [g, c] : x.sparse()) {
    Json t{{"element", G.word(g)}};
    if (!G.is_product()) {
      auto [i, j] = G.exponents(g);
      t["i"] = i;
      t["j"] = j;
    }
    t["coeff"] = coeff_json(x.field(), c);
    out.push_back(t);
  }
  return out;
}

// "i j c" per term for metacyclic groups, "word c" for products
std::string terms_text(const Alg& x) {
  std::ostringstream os;
  const Group& G = x.group();
  for (auto [g, c] : x.sparse()) {
    auto cs = x.field().coords(c);
    cs.resize(x.field().e(), 0);
    std::string coeff;
    for (std::size_t t = 0; t < cs.size(); ++t) coeff += (t ? "," : "") + std::to_string(cs[t]);
    if (G.is_product()) {
      os << G.word(g) << ' ' << coeff << '\n';
    } else {
      auto [i, j] = G.exponents(g);
      os << i << ' ' << j << ' ' << coeff << '\n';
    }
  }
  return os.str();
}

u64 conjugacy_classes(const Group& G) {
  std::vector<char> seen(G.order(), 0);
  auto gens = G.generators();
  u64 classes = 0;
  std::vector<Idx> stack;
  for (Idx x = 0; x < G.order(); ++x) {
    if (seen[x]) continue;
    ++classes;
    seen[x] = 1;
    stack.push_back(x);
    while (!stack.empty()) {
      Idx y = stack.back();
      stack.pop_back();
      for (Idx g : gens) {
        Idx z = G.conj(y, g);
        if (!seen[z]) {
          seen[z] = 1;
          stack.push_back(z);
        }
      }
    }
  }
  return classes;
}

struct GroupOpts {
  std::string spec, named;
  void add(CLI::App* c) {
    auto* s = c->add_option("--spec", spec, "group spec JSON file");
    auto* n = c->add_option("--named", named, "named group, e.g. D:14, G39, OM:2^4");
    s->excludes(n);
  }
  Group load() const {
    if (!spec.empty()) return load_spec(spec);
    if (!named.empty()) return Group::named(named);
    throw Error(ErrorKind::Usage, "one of --spec or --named is required");
  }
};

struct DistOpts {
  double budget = 3e8;
  unsigned threads = 0;
  bool force_interval = false;
  u64 seed = 1;
  void add(CLI::App* c) {
    c->add_option("--budget", budget, "codeword budget (>= 1e6)");
    c->add_option("--threads", threads, "worker threads (default METACODE_THREADS or all cores)");
    c->add_flag("--force-interval", force_interval, "skip exhaustive enumeration");
    c->add_option("--seed", seed, "seed for randomized steps");
  }
  DistanceOptions get() const {
    if (budget < 1e6) throw Error(ErrorKind::BadParameters, "--budget must be at least 1e6");
    DistanceOptions o;
    o.budget = budget;
    o.threads = threads;
    o.force_interval = force_interval;
    o.seed = seed;
    return o;
  }
};

std::map<std::string, std::string> parse_kv(const std::string& s) {
  std::map<std::string, std::string> kv;
  for (auto& part : split(s, ',')) {
    auto eq = part.find('=');
    if (eq == std::string::npos) throw Error(ErrorKind::Usage, "expected key=value in '" + part + "'");
    kv[part.substr(0, eq)] = part.substr(eq + 1);
  }
  return kv;
}

u64 to_u64(const std::string& s, const std::string& what) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw Error(ErrorKind::Usage, what + " must be a non-negative integer, got '" + s + "'");
  return std::stoull(s);
}

struct UnitParams {
  std::string kind, g = "a", h = "b";
  u64 k = 1, m = 1, s = 1;
  bool mirrored = false;
};

UnitElement make_unit(const Group& G, const Field& F, const UnitParams& u, const Alg* e, const Subgroup* B) {
  if (u.kind == "bicyclic") return bicyclic(G, F, G.parse_word(u.g), G.parse_word(u.h), u.mirrored);
  if (u.kind == "bass") return bass(G, F, G.parse_word(u.g), u.k, u.m);
  if (u.kind == "alt" || u.kind == "alternating") return alternating(G, F, G.parse_word(u.g), u.k);
  if (u.kind == "geometric") return geometric(G, F, G.parse_word(u.g), u.k);
  if (u.kind == "constructed") {
    if (!e || !B) throw Error(ErrorKind::Usage, "constructed units need a pci and a subgroup B");
    return constructed_unit(*e, F.from_int(static_cast<i64>(u.s)), u.k, *B);
  }
  throw Error(ErrorKind::Usage, "unknown unit kind '" + u.kind + "'");
}

// "alt:k=3", "constructed:s=1,k=1", "bicyclic:g=a,h=b"
UnitParams parse_unit_spec(const std::string& spec) {
  UnitParams u;
  auto colon = spec.find(':');
  u.kind = spec.substr(0, colon);
  if (colon != std::string::npos)
    for (auto& [k, v] : parse_kv(spec.substr(colon + 1))) {
      if (k == "g" || k == "x") u.g = v;
      else if (k == "h") u.h = v;
      else if (k == "k") u.k = to_u64(v, "k");
      else if (k == "m") u.m = to_u64(v, "m");
      else if (k == "s") u.s = to_u64(v, "s");
      else if (k == "mirrored") u.mirrored = v == "1" || v == "true";
      else throw Error(ErrorKind::Usage, "unknown unit parameter '" + k + "'");
    }
  return u;
}

Json distance_json(const LinearCode& c, const Distance& d) {
  return Json{{"n", c.n},
              {"k", c.k},
              {"d_lo", d.d_lo},
              {"d_hi", d.d_hi},
              {"exact", d.exact()},
              {"exhaustive", d.exhaustive},
              {"witness_weight", d.d_hi},
              {"provenance", c.provenance}};
}

void write_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

// state shared by the subcommand handlers
struct Cli {
  Cli(std::ostream& o, std::ostream& e) : out(o), err(e) {}
  std::ostream& out;
  std::ostream& err;
  bool json = false;

  GroupOpts group;
  u64 q = 0;
  DistOpts dist;

  // field
  u64 fp = 0;
  unsigned fe = 1;
  bool show_modulus = false;
  // ssp
  bool do_verify = false;
  // pci
  bool left = false, elements = false;
  // code
  std::string example, left_words, unit_spec, out_path, conjugation = "inverse-first";
  long pci_index = -1;
  u64 beta = 0;
  bool two_sided = false;
  // unit
  UnitParams unit;
  // algebra
  GroupOpts group2;
  // verify
  std::vector<std::string> only;
  std::vector<int> only_criteria;

  Field checked_field(const Group& G) const {
    if (q == 0) throw Error(ErrorKind::Usage, "--q is required");
    Field F = field_for(q);
    require_semisimple(G, F);
    return F;
  }

  int field_cmd() {
    Field F = Field::make(fp, fe);
    if (json) {
      write_json(out, Json{{"p", F.p()}, {"e", F.e()}, {"q", F.q()}, {"modulus", F.modulus()}});
      return kExitOk;
    }
    if (show_modulus) {
      for (std::size_t i = 0; i < F.modulus().size(); ++i) out << (i ? " " : "") << F.modulus()[i];
      out << '\n';
    } else {
      out << "GF(" << F.q() << ") = GF(" << F.p() << ")[x]/(f), f of degree " << F.e() << '\n';
    }
    return kExitOk;
  }

  int group_info() {
    Group G = group.load();
    Subgroup Z = center(G);
    Json j{{"name", G.name()}, {"order", G.order()}};
    if (G.is_product()) {
      j["product"] = Json::array({G.left().name(), G.right().name()});
    } else {
      j["presentation"] = Json{{"N", G.N()}, {"M", G.M()}, {"r", G.r()}, {"s", G.s()}};
    }
    Json gens = Json::array();
    for (Idx g : G.generators()) gens.push_back(G.word(g));
    j["generators"] = gens;
    j["abelian"] = Z.order() == G.order();
    j["center"] = subgroup_json(G, Z);
    j["conjugacy_classes"] = conjugacy_classes(G);
    if (json) {
      write_json(out, j);
      return kExitOk;
    }
    out << G.name() << ": order " << G.order() << '\n';
    if (!G.is_product())
      out << "presentation <a,b | a^" << G.N() << ", b^" << G.M() << " = a^" << G.s() << ", b^-1 a b = a^" << G.r()
          << ">\n";
    out << "center: order " << Z.order() << (Z.order() == 1 ? " (trivial)" : "") << '\n';
    out << "conjugacy classes: " << j["conjugacy_classes"].get<u64>() << '\n';
    return kExitOk;
  }

  int ssp_list() {
    Group G = group.load();
    Json arr = Json::array();
    std::size_t i = 0;
    for (auto& p : ssp_catalog(G)) {
      Json x{{"index", i++}, {"label", p.label()}, {"family", p.family}, {"H", subgroup_json(G, p.H)},
             {"K", subgroup_json(G, p.K)}};
      if (do_verify) {
        auto chk = verify_ssp(G, p, 1000000);
        x["verified"] = chk.ok;
        if (!chk.ok) x["reason"] = chk.reason;
      }
      arr.push_back(x);
    }
    if (json) {
      write_json(out, arr);
      return kExitOk;
    }
    for (auto& x : arr) {
      out << x["index"].get<std::size_t>() << ' ' << x["label"].get<std::string>();
      if (x.contains("verified")) out << (x["verified"].get<bool>() ? "  ok" : "  FAILS: " + x["reason"].get<std::string>());
      out << '\n';
    }
    return kExitOk;
  }

  int pci_list() {
    Group G = group.load();
    Field F = checked_field(G);
    auto es = all_pcis(G, F, usable_catalog(G));
    Json arr = Json::array();
    const bool can_left = !G.is_product() && G.M() > 1;
    for (std::size_t i = 0; i < es.size(); ++i) {
      const auto& e = es[i];
      Json x{{"index", i},
             {"pair", e.pair_label},
             {"k", e.k},
             {"support", e.value.sparse().size()},
             {"weight", e.value.weight()},
             {"central", e.value.is_central()},
             {"matrix_size", e.matrix_size},
             {"field_degree", e.field_degree},
             {"provenance", "e_C(G," + e.pair_label.substr(1, e.pair_label.size() - 2) + ") k=" + std::to_string(e.k)}};
      if (left && can_left) {
        auto [l1, l2] = left_idempotents(e.value, b_power_subgroup(G, 1));
        x["left"] = Json::array({Json{{"form", "e <b>^"}, {"weight", l1.weight()}, {"zero", l1.is_zero()}},
                                 Json{{"form", "e (1 - <b>^)"}, {"weight", l2.weight()}, {"zero", l2.is_zero()}}});
      }
      if (elements) x["terms"] = terms_json(e.value);
      arr.push_back(x);
    }
    if (json) {
      write_json(out, arr);
      return kExitOk;
    }
    for (std::size_t i = 0; i < es.size(); ++i) {
      const auto& x = arr[i];
      out << i << ' ' << es[i].pair_label << " k=" << es[i].k << " support " << x["support"].get<u64>() << " weight "
          << x["weight"].get<u64>() << " M_" << es[i].matrix_size << "(F_q^" << es[i].field_degree << ")\n";
      if (x.contains("left"))
        for (auto& l : x["left"]) out << "  " << l["form"].get<std::string>() << " weight " << l["weight"].get<u64>() << '\n';
      if (elements) out << terms_text(es[i].value);
    }
    return kExitOk;
  }

  // the generator the code options describe
  Alg code_generator(const Group& G, const Field& F, std::string& provenance) {
    auto es = all_pcis(G, F, usable_catalog(G));
    if (pci_index < 0 || static_cast<std::size_t>(pci_index) >= es.size())
      throw Error(ErrorKind::Usage, "--pci must be in [0, " + std::to_string(es.size()) + ")");
    const auto& e = es[pci_index];
    provenance = "e_C " + e.pair_label + " k=" + std::to_string(e.k);
    std::optional<Subgroup> B;
    if (beta) {
      if (G.is_product()) throw Error(ErrorKind::Usage, "--beta needs a metacyclic group");
      B = b_power_subgroup(G, beta);
      provenance += " <b^" + std::to_string(beta) + ">^";
    } else if (!left_words.empty()) {
      B = subgroup_of(G, split(left_words, ','));
      provenance += " <" + left_words + ">^";
    }
    if (!unit_spec.empty()) {
      if (!B) throw Error(ErrorKind::Usage, "--unit needs --beta or --left");
      auto up = parse_unit_spec(unit_spec);
      auto u = make_unit(G, F, up, &e.value, &*B);
      auto c = conjugation == "unit-first" ? Conjugation::UnitFirst : Conjugation::InverseFirst;
      if (conjugation != "unit-first" && conjugation != "inverse-first")
        throw Error(ErrorKind::Usage, "--conjugation must be inverse-first or unit-first");
      provenance += " conjugated by " + u.description;
      return conjugate_idempotent(e.value, *B, u, c);
    }
    if (B) return e.value * hat(G, F, *B);
    return e.value;
  }

  LinearCode build_code() {
    if (!example.empty()) {
      auto x = build_example(example);
      Side side = two_sided ? Side::TwoSided : x.side;
      return ideal_to_code(x.generator, side, "example " + example + ": " + x.construction);
    }
    Group G = group.load();
    Field F = checked_field(G);
    std::string prov;
    Alg gen = code_generator(G, F, prov);
    return ideal_to_code(gen, two_sided ? Side::TwoSided : Side::Left, prov);
  }

  int code_build() {
    auto c = build_code();
    auto d = min_distance(c, dist.get());
    Json j = distance_json(c, d);
    if (json) {
      write_json(out, j);
      return kExitOk;
    }
    out << "[" << c.n << "," << c.k << ",";
    if (d.exact())
      out << d.d_hi;
    else
      out << d.d_lo << ".." << d.d_hi;
    out << "] over GF(" << c.F.q() << ") " << (d.exhaustive ? "exhaustive" : "interval") << "  " << c.provenance << '\n';
    return kExitOk;
  }

  int code_genmat() {
    auto c = build_code();
    std::string text = emit_genmat(c);
    if (!out_path.empty()) {
      std::ofstream f(out_path);
      if (!f) throw Error(ErrorKind::Usage, "cannot write " + out_path);
      f << text;
      if (json) write_json(out, Json{{"n", c.n}, {"k", c.k}, {"q", c.F.q()}, {"path", out_path}});
      return kExitOk;
    }
    if (json)
      write_json(out, Json{{"n", c.n}, {"k", c.k}, {"q", c.F.q()}, {"genmat", text}});
    else
      out << text;
    return kExitOk;
  }

  int unit_cmd() {
    Group G = group.load();
    Field F = checked_field(G);
    std::optional<Alg> e;
    std::optional<Subgroup> B;
    if (unit.kind == "constructed") {
      auto es = all_pcis(G, F, usable_catalog(G));
      if (pci_index < 0 || static_cast<std::size_t>(pci_index) >= es.size())
        throw Error(ErrorKind::Usage, "--pci must be in [0, " + std::to_string(es.size()) + ")");
      e = es[pci_index].value;
      B = b_power_subgroup(G, beta ? beta : 1);
    }
    auto u = make_unit(G, F, unit, e ? &*e : nullptr, B ? &*B : nullptr);
    bool ok = verify_unit(u);
    if (json) {
      Json j{{"kind", to_string(u.kind)},         {"description", u.description}, {"verified", ok},
             {"support", u.value.sparse().size()}, {"inverse_support", u.inverse.sparse().size()}};
      if (elements) {
        j["value"] = terms_json(u.value);
        j["inverse"] = terms_json(u.inverse);
      }
      write_json(out, j);
    } else {
      out << to_string(u.kind) << ": " << u.description << '\n'
          << "value * inverse = identity: " << (ok ? "yes" : "NO") << '\n';
      if (elements) out << "value\n" << terms_text(u.value) << "inverse\n" << terms_text(u.inverse);
    }
    return ok ? kExitOk : kExitClaimFailed;
  }

  Json report_json(const WedderburnReport& r) {
    Json comps = Json::array();
    for (auto& c : r.components)
      comps.push_back(Json{{"pair", c.pair}, {"count", c.count}, {"matrix_size", c.matrix_size}, {"field_degree", c.field_degree}});
    return Json{{"group", r.group}, {"q", r.q}, {"total_dimension", r.total_dimension}, {"components", comps}};
  }

  int wedderburn() {
    Group G = group.load();
    Field F = checked_field(G);
    auto r = wedderburn_report(G, F);
    if (json) {
      write_json(out, report_json(r));
      return kExitOk;
    }
    out << "F_" << r.q << " " << r.group << " =";
    bool first = true;
    for (auto& [c, n] : r.multiset()) {
      out << (first ? " " : " + ") << n << " M_" << c.first << "(F_" << r.q << "^" << c.second << ")";
      first = false;
    }
    out << "\ndimension " << r.total_dimension << '\n';
    return kExitOk;
  }

  int isocheck() {
    Group G1 = group.load(), G2 = group2.load();
    Field F = checked_field(G1);
    require_semisimple(G2, F);
    bool iso = algebra_isomorphic(G1, G2, F);
    if (json) {
      write_json(out, Json{{"group1", G1.name()}, {"group2", G2.name()}, {"q", F.q()}, {"isomorphic", iso}});
    } else {
      out << "F_" << F.q() << " " << G1.name() << (iso ? " == " : " != ") << "F_" << F.q() << " " << G2.name() << '\n';
    }
    return kExitOk;
  }

  int verify_examples_cmd() {
    std::vector<std::string> ids;
    for (auto& o : only)
      for (auto& s : split(o, ',')) ids.push_back(s);
    auto res = verify_examples(ids, dist.get());
    int failed = 0;
    Json arr = Json::array();
    for (auto& r : res) {
      const bool audit = r.expected.kind == "audit";
      failed += !r.pass && !audit;
      std::string status = r.pass ? "PASS" : audit ? "AUDIT" : "FAIL";
      Json x{{"id", r.expected.id}, {"status", status}, {"group", r.expected.group}, {"q", r.expected.q},
             {"expected", Json{{"n", r.expected.n}, {"k", r.expected.k}, {"d", r.expected.d}}},
             {"measured", Json{{"n", r.n}, {"k", r.k}, {"d_lo", r.d.d_lo}, {"d_hi", r.d.d_hi}}},
             {"seconds", r.seconds}};
      if (!r.note.empty()) x["note"] = r.note;
      arr.push_back(x);
      if (!json) {
        out << std::left << std::setw(6) << status << std::setw(20) << r.expected.id << "[" << r.n << "," << r.k << ",";
        if (r.d.exact())
          out << r.d.d_hi;
        else
          out << r.d.d_lo << ".." << r.d.d_hi;
        out << "]";
        if (!r.pass) out << " expected [" << r.expected.n << "," << r.expected.k << "," << r.expected.d << "]";
        if (!r.note.empty()) out << "  (" << r.note << ")";
        out << '\n';
      }
    }
    if (json) write_json(out, Json{{"results", arr}, {"failed", failed}});
    return failed ? kExitClaimFailed : kExitOk;
  }

  int verify_criteria_cmd() {
    int failed = 0;
    Json arr = Json::array();
    DistanceOptions o = dist.get();
    for (int id = 1; id <= criterion_count(); ++id) {
      if (!only_criteria.empty() && std::find(only_criteria.begin(), only_criteria.end(), id) == only_criteria.end())
        continue;
      auto r = run_criterion(id, o);
      failed += !r.pass;
      arr.push_back(Json{{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"summary", r.summary}, {"details", r.details},
                         {"seconds", r.seconds}});
      if (!json) {
        out << (r.pass ? "PASS" : "FAIL") << " criterion " << id << " (" << r.name << "): " << r.summary << '\n';
        for (auto& d : r.details) out << "    " << d << '\n';
      }
    }
    if (json) write_json(out, Json{{"criteria", arr}, {"failed", failed}});
    return failed ? kExitClaimFailed : kExitOk;
  }
};

}  // namespace

Group group_from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::SchemaError, e.what());
  }
  return group_from_json(j);
}

Group load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::SchemaError, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return group_from_json_text(ss.str());
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Cli cli(out, err);
  CLI::App app{"metacode: group codes over metacyclic groups"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_flag("--json", cli.json, "machine-readable output");

  auto* field = app.add_subcommand("field", "finite field tables");
  field->add_option("--p", cli.fp, "characteristic")->required();
  field->add_option("--e", cli.fe, "extension degree");
  field->add_flag("--show-modulus", cli.show_modulus, "print the modulus low-to-high");

  auto* group = app.add_subcommand("group", "group data");
  group->require_subcommand(1);
  auto* ginfo = group->add_subcommand("info", "order, center, presentation");
  cli.group.add(ginfo);

  auto* ssp = app.add_subcommand("ssp", "strong Shoda pairs");
  ssp->require_subcommand(1);
  auto* slist = ssp->add_subcommand("list", "catalog of pairs");
  cli.group.add(slist);
  slist->add_flag("--verify", cli.do_verify, "check every pair exhaustively");

  auto* pci = app.add_subcommand("pci", "primitive central idempotents");
  pci->require_subcommand(1);
  auto* plist = pci->add_subcommand("list", "all pcis of F_q G");
  cli.group.add(plist);
  plist->add_option("--q", cli.q, "field size")->required();
  plist->add_flag("--left", cli.left, "also report e <b>^ and e (1 - <b>^)");
  plist->add_flag("--elements", cli.elements, "print the sparse coefficients");

  auto* code = app.add_subcommand("code", "group codes");
  code->require_subcommand(1);
  auto add_code_opts = [&](CLI::App* c) {
    cli.group.add(c);
    c->add_option("--q", cli.q, "field size");
    c->add_option("--pci", cli.pci_index, "index into 'pci list'");
    c->add_option("--example", cli.example, "a worked example id (see 'verify examples')");
    c->add_option("--beta", cli.beta, "left code of e <b^beta>^");
    c->add_option("--left", cli.left_words, "left code of e B^, B given by generator words");
    c->add_option("--unit", cli.unit_spec, "conjugate by a unit, e.g. alt:k=3, constructed:s=1,k=1");
    c->add_option("--conjugation", cli.conjugation, "inverse-first (u^-1 x u, default) or unit-first");
    c->add_flag("--two-sided", cli.two_sided, "two-sided ideal instead of the left ideal");
  };
  auto* cbuild = code->add_subcommand("build", "parameters [n,k,d]");
  add_code_opts(cbuild);
  cli.dist.add(cbuild);
  auto* cgen = code->add_subcommand("genmat", "generator matrix text");
  add_code_opts(cgen);
  cgen->add_option("--out", cli.out_path, "write to a file");

  auto* unit = app.add_subcommand("unit", "unit constructions");
  unit->set_help_flag("--help", "print this help and exit");  // frees --h
  cli.group.add(unit);
  unit->add_option("--q", cli.q, "field size")->required();
  unit->add_option("--kind", cli.unit.kind, "bicyclic, bass, alt, geometric or constructed")->required();
  unit->add_option("--g", cli.unit.g, "element word (g, or x for bass)");
  unit->add_option("--h", cli.unit.h, "second element word (bicyclic)");
  unit->add_option("--k", cli.unit.k, "k");
  unit->add_option("--m", cli.unit.m, "m (bass)");
  unit->add_option("--s", cli.unit.s, "s (constructed)");
  unit->add_flag("--mirrored", cli.unit.mirrored, "b(h~, g) instead of b(g, h~)");
  unit->add_option("--pci", cli.pci_index, "pci index (constructed)");
  unit->add_option("--beta", cli.beta, "B = <b^beta> (constructed, default 1)");
  unit->add_flag("--elements", cli.elements, "print value and inverse");

  auto* alg = app.add_subcommand("algebra", "Wedderburn decomposition");
  alg->require_subcommand(1);
  auto* wed = alg->add_subcommand("wedderburn", "components of F_q G");
  cli.group.add(wed);
  wed->add_option("--q", cli.q, "field size")->required();
  auto* iso = alg->add_subcommand("isocheck", "compare F_q G1 and F_q G2");
  iso->add_option("--spec1", cli.group.spec, "first group spec");
  iso->add_option("--named1", cli.group.named, "first named group");
  iso->add_option("--spec2", cli.group2.spec, "second group spec");
  iso->add_option("--named2", cli.group2.named, "second named group");
  iso->add_option("--q", cli.q, "field size")->required();

  auto* verify = app.add_subcommand("verify", "reproduce the worked examples and acceptance checks");
  verify->require_subcommand(1);
  auto* vex = verify->add_subcommand("examples", "example codes against data/examples.json");
  vex->add_option("--only", cli.only, "example ids (comma separated)");
  cli.dist.add(vex);
  auto* vcrit = verify->add_subcommand("criteria", "all acceptance criteria");
  vcrit->add_option("--only", cli.only_criteria, "criterion numbers");
  cli.dist.add(vcrit);

  // CLI11 reports a bad subcommand name only as "a subcommand is required"
  {
    CLI::App* cur = &app;
    for (auto& a : args) {
      if (a.empty() || a[0] == '-') continue;
      if (cur->get_subcommands([](CLI::App*) { return true; }).empty()) break;
      CLI::App* next = nullptr;
      try {
        next = cur->get_subcommand(a);
      } catch (const CLI::OptionNotFound&) {
        err << "error: unknown subcommand '" << a << "'\n";
        return kExitInvalid;
      }
      cur = next;
    }
  }

  std::vector<const char*> argv{"metacode"};
  for (auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }

  try {
    if (*field) return cli.field_cmd();
    if (*ginfo) return cli.group_info();
    if (*slist) return cli.ssp_list();
    if (*plist) return cli.pci_list();
    if (*cbuild) return cli.code_build();
    if (*cgen) return cli.code_genmat();
    if (*unit) return cli.unit_cmd();
    if (*wed) return cli.wedderburn();
    if (*iso) return cli.isocheck();
    if (*vex) return cli.verify_examples_cmd();
    if (*vcrit) return cli.verify_criteria_cmd();
  } catch (const Error& e) {
    if (cli.json)
      write_json(err, Json{{"error", to_string(e.kind())}, {"message", e.what()}});
    else
      err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  err << app.help();
  return kExitInvalid;
}

}  // namespace metacode
