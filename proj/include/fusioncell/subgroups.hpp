#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fusioncell/group.hpp"

namespace fusioncell {

Subgroup subgroup_generated(const FiniteGroup& g, std::span<const Elem> gens);
// <h, extra>
Subgroup join(const Subgroup& h, std::span<const Elem> extra);
Subgroup join(const Subgroup& a, const Subgroup& b);
Subgroup intersection(const Subgroup& a, const Subgroup& b);
Subgroup cyclic_subgroup(const FiniteGroup& g, Elem x);

// Greedy generating set; each generator at least doubles the running subgroup.
std::vector<Elem> small_generating_set(const Subgroup& h);

// Every subgroup of g, canonically sorted. Throws OrderCapExceeded when
// |g| > caps.max_enumeration.
std::vector<Subgroup> all_subgroups(const FiniteGroup& g, const Caps& caps = {});
std::vector<Subgroup> cyclic_subgroups(const FiniteGroup& g);

Subgroup center(const FiniteGroup& g);
// The following throw SubgroupMismatch when h lives in another group.
Subgroup centralizer(const FiniteGroup& g, const Subgroup& h);
Subgroup normalizer(const FiniteGroup& g, const Subgroup& h);
Subgroup conjugate(const FiniteGroup& g, Elem x, const Subgroup& h);
bool is_normal(const FiniteGroup& g, const Subgroup& h);
bool is_abelian(const Subgroup& h);

Subgroup commutator_subgroup(const FiniteGroup& g);
// [g,g] g^p
Subgroup frattini_p(const FiniteGroup& g, unsigned p);

// Normalizer climbing from the least element of order p.
Subgroup sylow_subgroup(const FiniteGroup& g, unsigned p);

std::uint64_t exponent(const FiniteGroup& g);
std::uint64_t p_part(std::uint64_t n, unsigned p);
bool is_prime(std::uint64_t n);

// A subgroup presented as a group of its own; element i is h.members()[i].
struct Embedded {
  FiniteGroup group;
  std::vector<Elem> to_parent;
};
Embedded as_group(const Subgroup& h, std::string label, const Caps& caps = {});

// g/k for k normal in g. Cosets are ordered by their least member;
// projection[x] is the coset of x.
struct Quotient {
  FiniteGroup group;
  std::vector<Elem> projection;
};
Quotient quotient(const FiniteGroup& g, const Subgroup& k, const Caps& caps = {});

void require_parent(const FiniteGroup& g, const Subgroup& h);

}  // namespace fusioncell
