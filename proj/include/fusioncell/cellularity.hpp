#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fusioncell/fusion.hpp"
#include "fusioncell/group.hpp"
#include "fusioncell/subgroups.hpp"

namespace fusioncell {

enum class Tristate { False, True, Unknown };
std::string to_string(Tristate t);

struct CellularityReport {
  bool cellular = false;
  Subgroup closure;
  bool closure_abelian = false;
  Tristate closure_normal_in_F = Tristate::Unknown;
  std::uint64_t quotient_order = 1;
  std::vector<std::string> citations;
  // Facts taken as given rather than computed (axiomatized systems).
  std::vector<std::string> axiomatized_inputs;
  std::string verdict_text;
};

// Smallest strongly F-closed subgroup containing `seed`: iterate
// K -> <K, phi(x) : x in K, phi in Hom_F(<x>, S)> until it stabilizes.
Subgroup strong_closure(const FusionSystem& f, const Subgroup& seed);

// Subgroup of S generated by f(P) over every homomorphism f: P -> S.
Subgroup hom_image_span(const FiniteGroup& s, const FiniteGroup& p, const Caps& caps = {});

// Cl_F(P).
Subgroup cl_closure(const FusionSystem& f, const FiniteGroup& p, const Caps& caps = {});

CellularityReport is_BP_cellular(const FusionSystem& f, const FiniteGroup& p, const Caps& caps = {});

// <x in S : x^(p^m) = 1>
Subgroup omega_subgroup(const FiniteGroup& s, unsigned p, unsigned m);

// Least m >= 1 with Cl_F(Z/p^m) = S.
unsigned min_cellularity_exponent(const FusionSystem& f);

struct HyperfocalResult {
  Subgroup hyperfocal;
  Quotient pi1;
};

HyperfocalResult hyperfocal(const FusionSystem& f);

// K normal in F: K normal in S, strongly closed, and every phi in Hom_F(P,Q)
// extends to Hom_F(PK,QK) preserving K. Abelian strongly closed subgroups are
// normal without a search.
Tristate is_normal_in_F(const FusionSystem& f, const Subgroup& k);

struct InvarianceViolation {
  Subgroup domain;
  std::vector<Elem> map;
  std::size_t image_meet = 0;   // |phi(P) ∩ K|
  std::size_t domain_meet = 0;  // |P ∩ K|
  std::size_t double_cosets = 0;
  std::size_t expected_double_cosets = 0;
};

struct FusionInvarianceCertificate {
  Subgroup k;
  std::size_t checked_pairs = 0;
  std::vector<InvarianceViolation> violations;
  std::size_t rho_target_degree = 0;
  // rho[s] is the permutation of S/K induced by left multiplication with s.
  std::vector<std::vector<Elem>> rho;
  bool rho_kernel_is_k = false;
};

// Throws InvalidInput when K is not strongly F-closed.
FusionInvarianceCertificate fusion_invariance_certificate(const FusionSystem& f, const Subgroup& k);

}  // namespace fusioncell
