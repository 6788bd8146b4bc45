#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "fusioncell/group.hpp"
#include "fusioncell/subgroups.hpp"

namespace fusioncell {

enum class Provenance { GroupInduced, Generated, Axiomatized };

// Which subgroups of S carry materialized morphism sets.
//   Full:   every subgroup.
//   Cyclic: cyclic subgroups only; enough for strong closure and Cl_F.
//   None:   axiomatized systems with no morphism tables.
enum class Coverage { Full, Cyclic, None };

std::string to_string(Provenance p);
std::string to_string(Coverage c);

// A fusion system over a finite p-group S. Morphisms out of each object P are
// stored as injective maps P -> S, one image per member of P; Hom_F(P,Q) is
// the subset landing in Q. Immutable after construction.
class FusionSystem {
 public:
  // Maps per object index, each aligned with subgroups()[i].members().
  using MapTable = std::vector<std::vector<std::vector<Elem>>>;

  FusionSystem(FiniteGroup s, unsigned p, Coverage coverage, Provenance provenance,
               std::string note, std::vector<Subgroup> objects, MapTable morphisms,
               std::vector<Subgroup> declared_strongly_closed = {});

  const FiniteGroup& S() const { return s_; }
  unsigned p() const { return p_; }
  Coverage coverage() const { return coverage_; }
  Provenance provenance() const { return provenance_; }
  const std::string& note() const { return note_; }

  const std::vector<Subgroup>& objects() const { return objects_; }
  std::optional<std::size_t> index_of(const Subgroup& h) const;
  // Throws ExternalDataRequired when h carries no morphism data.
  std::size_t require_index(const Subgroup& h) const;
  // Index of <x>, if materialized.
  std::optional<std::size_t> cyclic_index(Elem x) const;

  const std::vector<std::vector<Elem>>& maps(std::size_t object) const {
    return morphisms_[object];
  }
  const MapTable& map_table() const { return morphisms_; }
  std::size_t morphism_count() const;

  std::vector<GroupHom> hom(const Subgroup& p, const Subgroup& q) const;
  std::vector<GroupHom> hom_to_S(const Subgroup& p) const;

  const std::vector<Subgroup>& declared_strongly_closed() const { return declared_; }

  friend bool operator==(const FusionSystem& a, const FusionSystem& b);

 private:
  FiniteGroup s_;
  unsigned p_;
  Coverage coverage_;
  Provenance provenance_;
  std::string note_;
  std::vector<Subgroup> objects_;
  MapTable morphisms_;
  std::vector<Subgroup> declared_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::size_t> cyclic_of_;  // per element, npos when absent
};

// F_S(G) with S the deterministic Sylow p-subgroup, re-presented as a group of
// its own; the embedding into G is recorded in the note.
FusionSystem fusion_from_group(const FiniteGroup& g, unsigned p, Coverage coverage = Coverage::Full,
                               const Caps& caps = {});

// Smallest fusion system over s containing the seeds. Seeds must be injective
// maps from subgroups of s into s.
FusionSystem fusion_generated(const FiniteGroup& s, unsigned p, std::span<const GroupHom> seeds,
                              const Caps& caps = {});

// No morphism tables; only the declared strongly closed subgroups are known.
FusionSystem fusion_axiomatized(const FiniteGroup& s, unsigned p,
                                std::vector<Subgroup> strongly_closed);

struct SaturationWitness {
  std::string axiom;  // "s.1" or "s.2"
  Subgroup subgroup;
  std::string detail;
};

struct SaturationReport {
  bool saturated = true;
  std::vector<SaturationWitness> witnesses;
};

SaturationReport is_saturated(const FusionSystem& f);

// Cyclic-subgroup test: phi(x) in K for all x in K and phi in Hom_F(<x>, S).
bool is_strongly_closed(const FusionSystem& f, const Subgroup& k);
// Same predicate over every object contained in K; needs full coverage.
bool is_strongly_closed_full(const FusionSystem& f, const Subgroup& k);

std::vector<Subgroup> strongly_closed_subgroups(const FusionSystem& f, const Caps& caps = {});

// rho: S -> S' total.
bool is_fusion_preserving(const GroupHom& rho, const FusionSystem& f, const FusionSystem& fp);

// Hom_F(P,P) under composition, (a*b)(x) = a(b(x)). Elements keep their map
// tables as keys.
FiniteGroup aut_F(const FusionSystem& f, const Subgroup& p);
// Aut_F(P)/Inn(P) with the projection from aut_F's elements.
Quotient out_F(const FusionSystem& f, const Subgroup& p);

// Structural checks for tests and the CLI: inner morphisms present, every map
// injective and a homomorphism, closure under restriction, composition and
// inversion. Returns a description of the first failure, empty when sound.
std::string check_fusion_invariants(const FusionSystem& f);

}  // namespace fusioncell
