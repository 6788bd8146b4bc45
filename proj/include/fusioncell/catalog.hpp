#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fusioncell/build.hpp"
#include "fusioncell/cellularity.hpp"
#include "fusioncell/group.hpp"

namespace fusioncell {

// The 3-group B(3,r;0,gamma,0) of order 3^r with generators s, s_1..s_{r-1}:
//   s_i = [s_{i-1}, s]           2 <= i <= r-1
//   [s_1, s_i] = 1               2 <= i <= r-1
//   s_1^3 s_2^3 s_3 = s_{r-1}^gamma
//   s_i^3 s_{i+1}^3 s_{i+2} = 1  2 <= i <= r-1, with s_j = 1 for j >= r
//   s^3 = 1
// Commutators are [x,y] = x^-1 y^-1 x y.
struct B3rGroup {
  FiniteGroup group;
  unsigned r = 0;
  unsigned gamma = 0;
  Elem s = 0;
  std::vector<Elem> s_i;  // s_i[i] for 1 <= i <= r-1; s_i[0] is the identity
  Subgroup N;             // <s, s_2>
  // Cyclic factor orders of <s_1, ..., s_{r-1}>, the first generated by s_1
  // and the second by s_2 whenever <s_1, s_2> is the whole of it.
  std::vector<std::uint32_t> base_orders;
};

// Semidirect spec (Z/3^a x Z/3^b x ...) ⋊ Z/3 whose action is derived from the
// relations; shared by build_b3r and the CLI shorthand.
GroupSpec b3r_spec(unsigned r, unsigned gamma, unsigned max_r = 8);

// Throws InvalidInput for r < 4 or gamma > 2, OrderCapExceeded for r > max_r,
// RelationCheckFailed if the constructed group violates a relation.
B3rGroup build_b3r(unsigned r, unsigned gamma, unsigned max_r = 8, const Caps& caps = {});

// Every relation family, plus |S| = 3^r and S = <s, s_1>.
std::vector<std::string> b3r_relation_failures(const B3rGroup& g);

struct OrderCensus {
  unsigned r = 0;
  unsigned gamma = 0;
  unsigned l = 0;
  bool exists_outside_N = false;
  std::optional<Elem> witness;  // least x in S \ N with x^(3^l) = 1
};

OrderCensus order_census(const B3rGroup& g, unsigned l);

// Verdict for an exotic fusion system over B(3,r;0,gamma,0). Uses two external
// facts, flagged in the report: N is strongly F-closed, and N is the only proper
// strongly F-closed candidate containing s.
CellularityReport exotic_cellularity_verdict(const B3rGroup& g, unsigned l);

// With seeds of 2-power order acting on s_1 as s_1 s_2^f or s_1^-1 s_2^f and
// preserving N, checks <N, x^-1 alpha(x)> = S. Throws ExternalDataRequired
// without a valid seed.
bool exotic_pi1_check(const B3rGroup& g, std::span<const GroupHom> seeds);

// Automorphism of S from images of s and s_1, or nullopt if they do not extend.
std::optional<GroupHom> b3r_automorphism(const B3rGroup& g, Elem image_s, Elem image_s1);

// Automorphisms of order 2 preserving N with alpha(s_1) in s_1 <s_2>
// (eta_shape) or in s_1^-1 <s_2>, found by search over images of s and s_1.
std::vector<GroupHom> b3r_shaped_involutions(const B3rGroup& g, bool eta_shape);

GroupSpec wreath_spec(unsigned p, unsigned n, unsigned q);
// Z/p^n wr Z/q
FiniteGroup build_wreath(unsigned p, unsigned n, unsigned q, const Caps& caps = {});
// Base (Z/p^n)^q inside the wreath product.
Subgroup wreath_base(const FiniteGroup& w);

// Sz(8) in its 4-dimensional representation over GF(8) = GF(2)[x]/(x^3+x+1),
// generated by S(1,0), S(0,1), a diagonal element and the antidiagonal
// involution.
GroupSpec suzuki8_spec();
FiniteGroup build_suzuki_8(const Caps& caps = {});

}  // namespace fusioncell
