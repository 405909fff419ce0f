#pragma once

// Finite groups as multiplication tables, homomorphisms as element maps and
// left coset spaces. Every local group, local homomorphism and coset space in
// the rest of the library is one of these.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cogkit/error.hpp"

namespace cogkit {

using Elem = std::uint32_t;
using Permutation = std::vector<std::uint32_t>;

inline constexpr std::size_t kDefaultClosureCap = 10000;

class FiniteGroup {
 public:
  /// Validates a Cayley table: closure, identity, inverses and all order^3
  /// associativity triples. Throws Error with the witnessing element(s).
  static FiniteGroup from_cayley_table(const std::vector<std::vector<Elem>>& table, Elem identity,
                                       std::string label = {});

  /// Closure of `gens` under composition, (p*q)(x) = p(q(x)). Elements are
  /// numbered in breadth-first discovery order starting from the identity.
  static FiniteGroup from_permutation_generators(std::size_t degree,
                                                 const std::vector<Permutation>& gens,
                                                 std::size_t cap = kDefaultClosureCap,
                                                 std::string label = {});

  std::size_t order() const { return order_; }
  Elem identity() const { return identity_; }
  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  Elem mul(Elem x, Elem y) const { return mult_[x * order_ + y]; }
  Elem inv(Elem x) const { return inv_[x]; }
  Elem conj(Elem g, Elem h) const { return mul(mul(g, h), inv(g)); }  // g h g^-1
  Elem pow(Elem x, long long k) const;
  std::size_t element_order(Elem x) const;
  bool contains(Elem x) const { return x < order_; }
  bool is_abelian() const;

  std::vector<std::vector<Elem>> table() const;

  /// Present only for groups built from permutation generators.
  bool has_permutations() const { return !perms_.empty(); }
  const Permutation& permutation(Elem x) const { return perms_.at(x); }
  std::optional<Elem> find_permutation(const Permutation& p) const;

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.order_ == b.order_ && a.identity_ == b.identity_ && a.mult_ == b.mult_;
  }

 private:
  FiniteGroup() = default;

  std::size_t order_ = 0;
  std::vector<Elem> mult_;
  Elem identity_ = 0;
  std::vector<Elem> inv_;
  std::string label_;
  std::vector<Permutation> perms_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

GroupPtr make_group(FiniteGroup g);

struct GroupHom {
  GroupPtr source;
  GroupPtr target;
  std::vector<Elem> image;

  Elem operator()(Elem x) const { return image[x]; }

  /// Builds and validates; throws NotAHomomorphism / IndexOutOfRange.
  static GroupHom make(GroupPtr source, GroupPtr target, std::vector<Elem> image);
  static GroupHom identity(const GroupPtr& g);
  /// Sends every element to the identity of `target`.
  static GroupHom trivial(const GroupPtr& source, const GroupPtr& target);

  /// Empty report when image is a homomorphism whose image is subgroup-closed.
  Report check() const;
};

/// Inner automorphism h -> g h g^-1.
GroupHom ad(Elem g, const GroupPtr& group);

/// f o g (apply g first). Requires g.target == f.source.
GroupHom compose_homs(const GroupHom& f, const GroupHom& g);
bool is_injective(const GroupHom& f);
/// Sorted image set.
std::vector<Elem> hom_image(const GroupHom& f);
bool same_map(const GroupHom& f, const GroupHom& g);

/// Left cosets gH of a subgroup H.
struct CosetSpace {
  GroupPtr ambient;
  std::vector<Elem> subgroup;     // sorted
  std::vector<Elem> reps;         // least element of each coset, ascending
  std::vector<std::uint32_t> index_of;  // element -> coset id

  std::size_t size() const { return reps.size(); }
  std::uint32_t coset_of(Elem x) const { return index_of[x]; }
};

/// Throws NotASubgroup (with a violating pair) unless `subgroup_elements` is a subgroup.
CosetSpace cosets(const GroupPtr& group, std::span<const Elem> subgroup_elements);

/// Empty optional when `elements` is a subgroup, else a witness description.
std::optional<std::string> subgroup_violation(const FiniteGroup& g, std::span<const Elem> elements);

/// Subgroup generated by `gens`, sorted.
std::vector<Elem> subgroup_closure(const FiniteGroup& g, std::span<const Elem> gens);

/// Sub-group carried as its own table, together with its inclusion.
struct Subgroup {
  GroupPtr group;
  GroupHom inclusion;
};
Subgroup make_subgroup(const GroupPtr& ambient, std::span<const Elem> elements, std::string label = {});

/// Invariant factors of G/[G,G]: torsion coefficients d1 | d2 | ... (> 1).
std::vector<long long> abelian_invariants(const FiniteGroup& g);

// Catalog.
GroupPtr trivial_group();
GroupPtr cyclic_group(std::size_t n);
/// Dihedral group of order 2n.
GroupPtr dihedral_group(std::size_t n);
GroupPtr symmetric_group(std::size_t n);
GroupPtr quaternion_group();
/// Relabels elements by the bijection `perm` (old index -> new index).
GroupPtr relabel_group(const FiniteGroup& g, const std::vector<Elem>& perm);

}  // namespace cogkit
