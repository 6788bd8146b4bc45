#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace fusioncell {

// Elements of a FiniteGroup are dense indices 0..order-1.
using Elem = std::uint32_t;

// Concrete realization of an element (permutation images, matrix entries,
// coordinates in a product). Groups built from a closure keep their keys.
using Key = std::vector<std::uint32_t>;

struct KeyHash {
  std::size_t operator()(const Key& key) const noexcept;
};

struct Caps {
  std::size_t max_order = std::size_t{1} << 16;  // group constructions
  std::size_t max_enumeration = 2048;            // all_subgroups, enumerate_homs
  std::size_t dense_table_limit = 4096;          // materialized multiplication table
};

class FiniteGroup {
 public:
  using Compose = std::function<Key(const Key&, const Key&)>;

  // Trivial group.
  FiniteGroup();

  // Elements are taken in the given order; keys[0] need not be the identity.
  // Throws InvalidSpec if the keys are not closed under compose.
  static FiniteGroup from_elements(std::vector<Key> keys, const Key& identity, Compose compose,
                                   std::string label, const Caps& caps = {},
                                   std::optional<unsigned> prime_hint = std::nullopt);

  // Breadth-first closure from the identity, generators applied on the right in
  // the given order. Throws OrderCapExceeded past caps.max_order.
  static FiniteGroup closure(std::span<const Key> generators, const Key& identity,
                             Compose compose, std::string label, const Caps& caps = {},
                             std::optional<unsigned> prime_hint = std::nullopt);

  // Explicit multiplication table, row-major; validated as a group.
  static FiniteGroup from_table(const std::vector<std::vector<Elem>>& table, std::string label,
                                std::optional<unsigned> prime_hint = std::nullopt);

  std::size_t order() const;
  Elem identity() const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem pow(Elem a, std::int64_t e) const;
  // g x g^-1
  Elem conj(Elem g, Elem x) const;
  // x^-1 y^-1 x y
  Elem commutator(Elem x, Elem y) const;
  std::uint64_t element_order(Elem a) const;

  const std::string& label() const;
  std::optional<unsigned> prime_hint() const;
  FiniteGroup relabeled(std::string label, std::optional<unsigned> prime_hint) const;

  bool has_keys() const;
  const Key& key(Elem a) const;
  std::optional<Elem> find(const Key& key) const;

  // Generators used to enumerate the group (empty for table input).
  const std::vector<Elem>& generators() const;

  bool has_dense_table() const;
  bool is_abelian() const;
  bool is_p_group(unsigned p) const;

  // Same underlying object.
  bool same_as(const FiniteGroup& other) const { return d_ == other.d_; }

  // Structural equality: same order, identity and multiplication.
  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b);

 private:
  struct Data;
  explicit FiniteGroup(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  void check(Elem a) const;

  std::shared_ptr<const Data> d_;
};

// Element subset of a parent group, closed under the group operations. The
// sorted member list is canonical.
class Subgroup {
 public:
  Subgroup() = default;
  // Members must be strictly sorted and closed; use subgroup_generated to build
  // from arbitrary generators.
  Subgroup(FiniteGroup parent, std::vector<Elem> sorted_members);

  static Subgroup trivial(const FiniteGroup& g);
  static Subgroup whole(const FiniteGroup& g);

  const FiniteGroup& parent() const { return parent_; }
  const std::vector<Elem>& members() const { return members_; }
  std::size_t order() const { return members_.size(); }
  bool contains(Elem x) const;
  std::optional<std::size_t> position(Elem x) const;
  bool is_subgroup_of(const Subgroup& other) const;
  bool is_trivial() const { return members_.size() <= 1; }

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.members_ == b.members_; }
  // Canonical order: by order, then lexicographic member list.
  friend bool operator<(const Subgroup& a, const Subgroup& b);

 private:
  FiniteGroup parent_;
  std::vector<Elem> members_;
};

// Verifies the subset claim for a subgroup against its parent; throws
// InvalidInput when it is not a subgroup.
void validate_subgroup(const Subgroup& h);

// Homomorphism from a subgroup into a group, stored element by element and
// aligned with domain().members().
class GroupHom {
 public:
  GroupHom() = default;

  // Exhaustive homomorphism check. Throws InvalidInput.
  static GroupHom make(Subgroup domain, FiniteGroup codomain, std::vector<Elem> images);
  static GroupHom unchecked(Subgroup domain, FiniteGroup codomain, std::vector<Elem> images);

  const Subgroup& domain() const { return domain_; }
  const FiniteGroup& codomain() const { return codomain_; }
  const std::vector<Elem>& images() const { return images_; }

  Elem operator()(Elem x) const;
  Subgroup image() const;
  bool injective() const;

  friend bool operator==(const GroupHom& a, const GroupHom& b) {
    return a.domain_ == b.domain_ && a.images_ == b.images_;
  }

 private:
  GroupHom(Subgroup domain, FiniteGroup codomain, std::vector<Elem> images)
      : domain_(std::move(domain)), codomain_(std::move(codomain)), images_(std::move(images)) {}

  Subgroup domain_;
  FiniteGroup codomain_;
  std::vector<Elem> images_;
};

struct AxiomReport {
  bool ok = true;
  std::string failure;
};

// Identity and inverse exhaustively; associativity exhaustively up to order 512
// and on `samples` random triples above.
AxiomReport verify_group_axioms(const FiniteGroup& g, std::uint64_t seed = 1,
                                std::size_t samples = 100000);

}  // namespace fusioncell
