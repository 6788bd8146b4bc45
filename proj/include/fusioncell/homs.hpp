#pragma once

#include <optional>
#include <span>
#include <vector>

#include "fusioncell/group.hpp"

namespace fusioncell {

// Minimal generating set: a basis of the Frattini quotient when g is a
// p-group, otherwise a greedy generating set.
std::vector<Elem> minimal_generating_set(const FiniteGroup& g);

// Extends generator images to a map on all of `domain` by walking the Cayley
// graph; returns nullopt unless every edge x -> x*g is respected, which is
// exactly the homomorphism condition. Result is indexed by domain element.
std::optional<std::vector<Elem>> extend_from_generators(const FiniteGroup& domain,
                                                        std::span<const Elem> gens,
                                                        std::span<const Elem> images,
                                                        const FiniteGroup& codomain);

// All homomorphisms p -> s (not only injective ones), ordered by image table.
// Throws OrderCapExceeded when either order exceeds caps.max_enumeration.
std::vector<GroupHom> enumerate_homs(const FiniteGroup& p, const FiniteGroup& s,
                                     const Caps& caps = {});

}  // namespace fusioncell
