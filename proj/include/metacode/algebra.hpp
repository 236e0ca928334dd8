#pragma once

#include <string>
#include <utility>
#include <vector>

#include "metacode/ffield.hpp"
#include "metacode/group.hpp"

namespace metacode {

// Element of the group algebra F_q G, stored densely by group index.
class Alg {
 public:
  Alg() = default;
  Alg(const Group& G, const Field& F);  // zero
  static Alg one(const Group& G, const Field& F);
  static Alg basis(const Group& G, const Field& F, Idx g, Elem c = 1);

  const Group& group() const { return G_; }
  const Field& field() const { return F_; }
  u64 size() const { return c_.size(); }
  Elem operator[](Idx g) const { return c_[g]; }
  void set(Idx g, Elem c) { c_[g] = c; }
  void add_at(Idx g, Elem c) { c_[g] = F_.add(c_[g], c); }
  const std::vector<Elem>& coeffs() const { return c_; }

  Alg operator+(const Alg& o) const;
  Alg operator-(const Alg& o) const;
  Alg operator*(const Alg& o) const;
  Alg& operator+=(const Alg& o);
  Alg scaled(Elem c) const;
  // g * this, this * g, x^-1 this x
  Alg left(Idx g) const;
  Alg right(Idx g) const;
  Alg conj(Idx x) const;

  u64 weight() const;
  bool is_zero() const;
  bool operator==(const Alg& o) const { return c_ == o.c_; }
  bool operator!=(const Alg& o) const { return c_ != o.c_; }
  std::vector<std::pair<Idx, Elem>> sparse() const;
  // commutes with every generator of G
  bool is_central() const;
  bool is_idempotent() const { return (*this) * (*this) == *this; }

 private:
  Group G_;
  Field F_;
  std::vector<Elem> c_;
};

// (1/|H|) sum of H; throws NotCoprime when p divides |H|
Alg hat(const Group& G, const Field& F, const Subgroup& H);

}  // namespace metacode
