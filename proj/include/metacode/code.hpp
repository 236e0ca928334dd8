#pragma once

#include <optional>
#include <string>
#include <vector>

#include "metacode/idem.hpp"
#include "metacode/shoda.hpp"

namespace metacode {

enum class Side { Left, TwoSided };

struct LinearCode {
  Field F;
  u64 n = 0;
  u64 k = 0;
  std::vector<std::vector<Elem>> rows;  // reduced row echelon form, k x n
  std::vector<u64> pivots;
  std::string provenance;
  Side side = Side::Left;
};

// Row-reduced span of vectors over F.
LinearCode span_code(const Field& F, u64 n, const std::vector<std::vector<Elem>>& vectors);
// rank of a list of vectors
u64 rank_of(const Field& F, u64 n, const std::vector<std::vector<Elem>>& vectors);

// span of {g e} (left) or {g e h} (two-sided; equal to the left span for central e)
LinearCode ideal_to_code(const Alg& e, Side side = Side::Left, const std::string& provenance = "");

struct DistanceOptions {
  double budget = 3e8;     // codewords; exhaustive enumeration when q^k fits
  unsigned threads = 0;    // 0: METACODE_THREADS or hardware concurrency
  bool force_interval = false;
  u64 seed = 1;
};

struct Distance {
  u64 d_lo = 0, d_hi = 0;
  std::vector<Elem> witness;  // a codeword of weight d_hi
  bool exhaustive = false;
  bool exact() const { return d_lo == d_hi; }
};

// Throws ZeroCode when k = 0.
Distance min_distance(const LinearCode& c, const DistanceOptions& opt = {});

unsigned default_threads();

struct CodeBounds {
  std::string source;
  u64 dim = 0;
  u64 d_min = 0, d_max = 0;
  bool d_exact = false;      // the window collapses to one value
  bool basis_ok = true;      // the {g e} basis check, when applicable
};

// (G, K)-type pci e = e_C(G, G, K): dim o_{|G/K|}(q), 2|K| <= d <= wt(e),
// and d = 2|K| when |G/K| = p^j, p odd, o = phi(p^j). Throws QuotientNotCyclic.
CodeBounds theorem21_bounds(const Group& G, const Field& F, const Subgroup& K, const Alg& e);

// Code of e_{p1^j1,k1} <b^beta>^ on <a, b | a^(p1^m) = b^(p2^l) = 1, b^-1 a b = a^r>.
// lambda = v_p2(gcd(beta, p2^l)), lambda0 = v_p2(gcd(omega0, p2^l)) with
// omega0 least such that r^omega0 is in <q> mod p1^j1.
CodeBounds theorem61_params(const Group& G, const Field& F, int j1, u64 beta);

// e_{2^n,k} on the ordinary metacyclic 2-group (dimension for the
// residue of q and the distance window)
CodeBounds ordinary_2group_params(const Group& G, const Field& F);
// e_{p^n,k} on the ordinary metacyclic p-group
CodeBounds ordinary_pgroup_params(const Group& G, const Field& F);

struct WedderburnComponent {
  std::string pair;
  std::size_t pair_index = 0;
  u64 count = 0;
  u64 matrix_size = 1;
  u64 field_degree = 1;
};
struct WedderburnReport {
  std::string group;
  u64 q = 0;
  std::vector<WedderburnComponent> components;
  u64 total_dimension = 0;
  // (matrix size, field degree) -> multiplicity, sorted
  std::vector<std::pair<std::pair<u64, u64>, u64>> multiset() const;
};

WedderburnReport wedderburn_report(const Group& G, const Field& F, const std::vector<ShodaPair>& catalog);
WedderburnReport wedderburn_report(const Group& G, const Field& F);

bool algebra_isomorphic(const Group& G1, const Group& G2, const Field& F);

// "q n k" then k rows; prime fields write digits (base 36 beyond 9),
// extension fields comma-separated coordinate tuples separated by spaces
std::string emit_genmat(const LinearCode& c);
LinearCode parse_genmat(const std::string& text);

}  // namespace metacode
