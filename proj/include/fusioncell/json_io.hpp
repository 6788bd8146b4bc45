#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "fusioncell/build.hpp"
#include "fusioncell/cellularity.hpp"
#include "fusioncell/fusion.hpp"

namespace fusioncell {

using Json = nlohmann::json;

// Group specs
//   {"kind":"perm","degree":n,"generators":[[...]]}
//   {"kind":"table","table":[[...]]}
//   {"kind":"semidirect","base":<spec>,"actor":n,"action":[...]}
//   {"kind":"matrix","field":{"char":2,"deg":k,"modulus":m},"dim":d,"generators":[...]}
//   {"kind":"abelian","invariants":[...]}
// with optional "label" and "p". A JSON string is read as a shorthand:
//   cyclic:n  elem-abelian:p^k  abelian:n1,n2,..  sym:n  alt:n  dihedral:2n
//   b3r:r,gamma  wreath:p,n,q  sz8
GroupSpec parse_group_spec(const Json& j);
GroupSpec expand_shorthand(std::string_view text);
Json to_json(const GroupSpec& spec);

// Multiplication table of g; OrderCapExceeded above the dense limit.
GroupSpec table_spec_of(const FiniteGroup& g, const Caps& caps = {});

enum class FusionKind { GroupInduced, Generated, Axiomatized, Tables };

// An injective map from the subgroup generated by `domain` into S. `images`
// is either aligned with the sorted domain (full table) or with `domain`
// itself (images of generators), as flagged by `on_generators`.
struct SeedSpec {
  std::vector<Elem> domain;
  std::vector<Elem> images;
  bool on_generators = false;
};

struct FusionSpec {
  FusionKind kind = FusionKind::GroupInduced;
  GroupSpec group;  // ambient group, or S itself
  unsigned p = 0;
  Coverage coverage = Coverage::Full;
  std::vector<SeedSpec> seeds;
  std::vector<std::vector<Elem>> strongly_closed;
  // Tables only.
  Provenance provenance = Provenance::GroupInduced;
  std::string note;
  std::vector<std::vector<Elem>> objects;
  FusionSystem::MapTable maps;
};

// {"kind":"group-induced","ambient":<group>,"p":3[,"coverage":"cyclic"]}
// {"kind":"generated","S":<group>,"p":2,"seeds":[{"domain":[...],"map":{...}|[...]}]}
// {"kind":"axiomatized","S":<group>,"p":3,"strongly_closed":[[...]]}
// {"kind":"tables", ...} as written by to_json(FusionSystem)
// A string "<group shorthand>@p" is a group-induced system.
FusionSpec parse_fusion_spec(const Json& j);
Json to_json(const FusionSpec& spec);
FusionSystem build_fusion(const FusionSpec& spec, const Caps& caps = {});

// Full morphism tables; S is stored as a multiplication table.
Json to_json(const FusionSystem& f, const Caps& caps = {});

Json to_json(const Subgroup& h);
// Member list or generator list; the result is the generated subgroup, and
// an explicit member list must already be closed.
Subgroup parse_subgroup(const FiniteGroup& g, const Json& j, bool as_generators = false);

Json to_json(const CellularityReport& r);

// Parses text as JSON, reporting failures as ErrorKind::Parse.
Json parse_json_text(std::string_view text);

}  // namespace fusioncell
