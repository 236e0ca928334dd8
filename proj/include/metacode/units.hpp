#pragma once

#include <string>

#include "metacode/algebra.hpp"

namespace metacode {

enum class UnitKind { Bicyclic, Bass, Alternating, Geometric, Constructed };
const char* to_string(UnitKind k);

// A unit together with its inverse. `identity` is 1, or the component
// identity e for units of F_q G e.
struct UnitElement {
  Alg value, inverse, identity;
  UnitKind kind = UnitKind::Bicyclic;
  std::string description;
};

// h~ = 1 + h + ... + h^(|h|-1)
Alg tilde(const Group& G, const Field& F, Idx h);
// 1 + h + ... + h^(k-1)
Alg geometric_sum(const Group& G, const Field& F, Idx g, u64 k);

// b(g, h~) = 1 + (1 - h) g h~; mirrored gives b(h~, g) = 1 + h~ g (1 - h)
UnitElement bicyclic(const Group& G, const Field& F, Idx g, Idx h, bool mirrored = false);
// u_{k,m}(x) = (1 + ... + x^(k-1))^m + ((1 - k^m)/n) x~, inverse u_{l,m}(x^k).
// BadParameters unless gcd(k, n) = 1 and k^m = 1 mod n.
UnitElement bass(const Group& G, const Field& F, Idx x, u64 k, u64 m);
// u_k(g) over characteristic 2 with the parity rule for the inverse.
// WrongCharacteristic unless q is even; BadParameters unless |g| = p^m odd,
// gcd(k, 2|g|) = 1 and k < p.
UnitElement alternating(const Group& G, const Field& F, Idx g, u64 k);
// u_k(g) in any characteristic: u_k(g) u_{k1}(g^k) = 1 + c g~ where
// k k1 = 1 + c |g|, so the inverse is u_{k1}(g^k) - (c/k) g~. Needs k and
// |g| invertible in F_q.
UnitElement geometric(const Group& G, const Field& F, Idx g, u64 k);
// e + s B^ a^k (1 - B^) e, inverse e - s B^ a^k (1 - B^) e; a unit of F_q G e
// for central e. BadParameters if s = 0 or k is outside [1, |a| - 1].
UnitElement constructed_unit(const Alg& e, Elem s, u64 k, const Subgroup& B);

// e^(beta u) = u^-1 e B^ u with B = <b^beta>. UnitFirst gives u e B^ u^-1,
// the other conjugate.
enum class Conjugation { InverseFirst, UnitFirst };
Alg conjugate_idempotent(const Alg& e, const Subgroup& B, const UnitElement& u,
                         Conjugation c = Conjugation::InverseFirst);
// <b^beta> of a metacyclic group
Subgroup b_power_subgroup(const Group& G, u64 beta);

// value * inverse == inverse * value == identity
bool verify_unit(const UnitElement& u);

}  // namespace metacode
