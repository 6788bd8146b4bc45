#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fusioncell/group.hpp"

namespace fusioncell {

struct GroupSpec;

// Permutations of {0..degree-1} as image arrays; products act left to right,
// (x*y)[i] = y[x[i]].
struct PermSpec {
  std::size_t degree = 0;
  std::vector<std::vector<std::uint32_t>> generators;
};

struct TableSpec {
  std::vector<std::vector<Elem>> table;
};

// base ⋊ Z/actor_order where the actor generator a acts by a b a^-1 = action[b].
struct SemidirectSpec {
  std::shared_ptr<const GroupSpec> base;
  std::uint32_t actor_order = 1;
  std::vector<Elem> action;
};

// Invertible dim x dim matrices over GF(2^k), entries in the polynomial basis.
struct MatrixSpec {
  unsigned degree = 1;
  std::uint32_t modulus = 0;  // 0 = default primitive polynomial
  std::size_t dim = 0;
  std::vector<std::vector<std::vector<std::uint32_t>>> generators;
};

// Z/n1 x Z/n2 x ... with coordinate-vector elements.
struct AbelianSpec {
  std::vector<std::uint32_t> invariants;
};

struct GroupSpec {
  std::variant<PermSpec, TableSpec, SemidirectSpec, MatrixSpec, AbelianSpec> kind;
  std::string label;
  std::optional<unsigned> prime_hint;
};

// Throws InvalidSpec or OrderCapExceeded.
FiniteGroup build_group(const GroupSpec& spec, const Caps& caps = {});

// Semidirect product of an already built base; `action` is the automorphism
// induced by the actor generator.
FiniteGroup build_semidirect(const FiniteGroup& base, std::uint32_t actor_order,
                             const std::vector<Elem>& action, std::string label,
                             const Caps& caps = {});

GroupSpec cyclic_spec(std::uint32_t n);
GroupSpec abelian_spec(std::vector<std::uint32_t> invariants);
GroupSpec symmetric_spec(std::size_t n);
GroupSpec alternating_spec(std::size_t n);
GroupSpec dihedral_spec(std::size_t order);

// Position in the base group of the semidirect element (b, i), when the
// group was produced by build_semidirect.
Elem semidirect_element(const FiniteGroup& g, Elem base_elem, std::uint32_t actor_power);

}  // namespace fusioncell
