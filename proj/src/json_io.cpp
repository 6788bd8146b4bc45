#include "fusioncell/json_io.hpp"

#include <algorithm>
#include <charconv>
#include <set>

#include "fusioncell/catalog.hpp"
#include "fusioncell/errors.hpp"
#include "fusioncell/homs.hpp"
#include "fusioncell/subgroups.hpp"

namespace fusioncell {

namespace {

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) {
    fail(ErrorKind::Parse, std::string("missing field \"") + name + "\"");
  }
  return j.at(name);
}

template <class T>
T get_as(const Json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::Parse, std::string(what) + ": " + e.what());
  }
}

std::vector<std::uint32_t> parse_uint_list(std::string_view s, char sep) {
  std::vector<std::uint32_t> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const auto end = std::min(s.find(sep, start), s.size());
    const auto piece = s.substr(start, end - start);
    std::uint32_t v = 0;
    const auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), v);
    if (piece.empty() || ec != std::errc{} || ptr != piece.data() + piece.size()) {
      fail(ErrorKind::Parse, "bad integer \"" + std::string(piece) + "\" in shorthand");
    }
    out.push_back(v);
    start = end + 1;
  }
  return out;
}

std::vector<std::uint32_t> expect_args(std::string_view name, std::string_view args,
                                       std::size_t count, char sep = ',') {
  auto v = parse_uint_list(args, sep);
  if (v.size() != count) {
    fail(ErrorKind::Parse, std::string(name) + " takes " + std::to_string(count) + " argument(s)");
  }
  return v;
}

Coverage parse_coverage(const std::string& s) {
  if (s == "full") return Coverage::Full;
  if (s == "cyclic") return Coverage::Cyclic;
  if (s == "none") return Coverage::None;
  fail(ErrorKind::Parse, "unknown coverage \"" + s + "\"");
}

Provenance parse_provenance(const std::string& s) {
  if (s == "group-induced") return Provenance::GroupInduced;
  if (s == "generated") return Provenance::Generated;
  if (s == "axiomatized") return Provenance::Axiomatized;
  fail(ErrorKind::Parse, "unknown provenance \"" + s + "\"");
}

unsigned parse_prime(const Json& j) {
  const auto p = get_as<unsigned>(field(j, "p"), "p");
  if (!is_prime(p)) fail(ErrorKind::InvalidSpec, "p = " + std::to_string(p) + " is not prime");
  return p;
}

}  // namespace

Json parse_json_text(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorKind::Parse, e.what());
  }
}

GroupSpec expand_shorthand(std::string_view text) {
  const auto colon = text.find(':');
  const auto name = text.substr(0, colon);
  const auto args = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  if (name == "sz8") return suzuki8_spec();
  if (colon == std::string_view::npos) fail(ErrorKind::Parse, "unknown group shorthand \"" + std::string(text) + "\"");
  if (name == "cyclic") {
    const auto n = expect_args(name, args, 1)[0];
    if (n == 0) fail(ErrorKind::InvalidSpec, "cyclic:0");
    return cyclic_spec(n);
  }
  if (name == "elem-abelian") {
    const auto pk = expect_args(name, args, 2, '^');
    if (!is_prime(pk[0])) fail(ErrorKind::InvalidSpec, "elem-abelian needs a prime");
    auto spec = abelian_spec(std::vector<std::uint32_t>(pk[1], pk[0]));
    spec.label = "(Z/" + std::to_string(pk[0]) + ")^" + std::to_string(pk[1]);
    spec.prime_hint = pk[0];
    return spec;
  }
  if (name == "abelian") return abelian_spec(parse_uint_list(args, ','));
  if (name == "sym") return symmetric_spec(expect_args(name, args, 1)[0]);
  if (name == "alt") return alternating_spec(expect_args(name, args, 1)[0]);
  if (name == "dihedral") return dihedral_spec(expect_args(name, args, 1)[0]);
  if (name == "b3r") {
    const auto v = expect_args(name, args, 2);
    return b3r_spec(v[0], v[1]);
  }
  if (name == "wreath") {
    const auto v = expect_args(name, args, 3);
    return wreath_spec(v[0], v[1], v[2]);
  }
  fail(ErrorKind::Parse, "unknown group shorthand \"" + std::string(name) + "\"");
}

GroupSpec parse_group_spec(const Json& j) {
  if (j.is_string()) return expand_shorthand(j.get<std::string>());
  if (!j.is_object()) fail(ErrorKind::Parse, "group spec must be an object or a shorthand string");
  const auto kind = get_as<std::string>(field(j, "kind"), "kind");
  GroupSpec spec;
  if (kind == "perm") {
    PermSpec s;
    s.degree = get_as<std::size_t>(field(j, "degree"), "degree");
    s.generators = get_as<std::vector<std::vector<std::uint32_t>>>(field(j, "generators"), "generators");
    spec.kind = std::move(s);
  } else if (kind == "table") {
    spec.kind = TableSpec{get_as<std::vector<std::vector<Elem>>>(field(j, "table"), "table")};
  } else if (kind == "semidirect") {
    SemidirectSpec s;
    s.base = std::make_shared<GroupSpec>(parse_group_spec(field(j, "base")));
    s.actor_order = get_as<std::uint32_t>(field(j, "actor"), "actor");
    s.action = get_as<std::vector<Elem>>(field(j, "action"), "action");
    spec.kind = std::move(s);
  } else if (kind == "matrix") {
    MatrixSpec s;
    const auto& f = field(j, "field");
    if (get_as<unsigned>(field(f, "char"), "field.char") != 2) {
      fail(ErrorKind::InvalidSpec, "only characteristic 2 matrix groups are supported");
    }
    s.degree = get_as<unsigned>(field(f, "deg"), "field.deg");
    s.modulus = f.contains("modulus") ? get_as<std::uint32_t>(f.at("modulus"), "field.modulus") : 0;
    s.dim = get_as<std::size_t>(field(j, "dim"), "dim");
    s.generators =
        get_as<std::vector<std::vector<std::vector<std::uint32_t>>>>(field(j, "generators"), "generators");
    spec.kind = std::move(s);
  } else if (kind == "abelian") {
    spec.kind = AbelianSpec{get_as<std::vector<std::uint32_t>>(field(j, "invariants"), "invariants")};
  } else {
    fail(ErrorKind::Parse, "unknown group kind \"" + kind + "\"");
  }
  if (j.contains("label")) spec.label = get_as<std::string>(j.at("label"), "label");
  if (j.contains("p")) spec.prime_hint = get_as<unsigned>(j.at("p"), "p");
  return spec;
}

Json to_json(const GroupSpec& spec) {
  Json j = std::visit(
      [](const auto& s) -> Json {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, PermSpec>) {
          return {{"kind", "perm"}, {"degree", s.degree}, {"generators", s.generators}};
        } else if constexpr (std::is_same_v<T, TableSpec>) {
          return {{"kind", "table"}, {"table", s.table}};
        } else if constexpr (std::is_same_v<T, SemidirectSpec>) {
          if (!s.base) fail(ErrorKind::InvalidSpec, "semidirect product without a base");
          return {{"kind", "semidirect"}, {"base", to_json(*s.base)}, {"actor", s.actor_order},
                  {"action", s.action}};
        } else if constexpr (std::is_same_v<T, MatrixSpec>) {
          return {{"kind", "matrix"},
                  {"field", {{"char", 2}, {"deg", s.degree}, {"modulus", s.modulus}}},
                  {"dim", s.dim},
                  {"generators", s.generators}};
        } else {
          return {{"kind", "abelian"}, {"invariants", s.invariants}};
        }
      },
      spec.kind);
  if (!spec.label.empty()) j["label"] = spec.label;
  if (spec.prime_hint) j["p"] = *spec.prime_hint;
  return j;
}

GroupSpec table_spec_of(const FiniteGroup& g, const Caps& caps) {
  if (g.order() > caps.dense_table_limit) {
    fail(ErrorKind::OrderCapExceeded, "group of order " + std::to_string(g.order()) +
                                          " is too large to serialize as a table");
  }
  const auto n = static_cast<Elem>(g.order());
  std::vector<std::vector<Elem>> table(n, std::vector<Elem>(n));
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) table[x][y] = g.mul(x, y);
  return GroupSpec{TableSpec{std::move(table)}, g.label(), g.prime_hint()};
}

Json to_json(const Subgroup& h) { return Json(h.members()); }

Subgroup parse_subgroup(const FiniteGroup& g, const Json& j, bool as_generators) {
  auto elems = get_as<std::vector<Elem>>(j, "subgroup");
  for (auto x : elems) {
    if (x >= g.order()) fail(ErrorKind::InvalidInput, "element " + std::to_string(x) + " out of range");
  }
  auto h = subgroup_generated(g, elems);
  if (!as_generators) {
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    if (elems != h.members()) fail(ErrorKind::InvalidInput, "member list is not a subgroup");
  }
  return h;
}

FusionSpec parse_fusion_spec(const Json& j) {
  FusionSpec spec;
  if (j.is_string()) {
    const auto text = j.get<std::string>();
    const auto at = text.rfind('@');
    if (at == std::string::npos) fail(ErrorKind::Parse, "fusion shorthand must be <group>@p");
    spec.group = expand_shorthand(text.substr(0, at));
    const auto p = parse_uint_list(std::string_view(text).substr(at + 1), ',');
    if (p.size() != 1 || !is_prime(p[0])) fail(ErrorKind::InvalidSpec, "bad prime in \"" + text + "\"");
    spec.p = p[0];
    return spec;
  }
  const auto kind = get_as<std::string>(field(j, "kind"), "kind");
  spec.p = parse_prime(j);
  if (kind == "group-induced") {
    spec.kind = FusionKind::GroupInduced;
    spec.group = parse_group_spec(field(j, "ambient"));
    if (j.contains("coverage")) spec.coverage = parse_coverage(get_as<std::string>(j.at("coverage"), "coverage"));
  } else if (kind == "generated") {
    spec.kind = FusionKind::Generated;
    spec.group = parse_group_spec(field(j, "S"));
    for (const auto& s : get_as<std::vector<Json>>(field(j, "seeds"), "seeds")) {
      SeedSpec seed;
      seed.domain = get_as<std::vector<Elem>>(field(s, "domain"), "seed domain");
      const auto& m = field(s, "map");
      if (m.is_array()) {
        seed.images = get_as<std::vector<Elem>>(m, "seed map");
      } else if (m.is_object()) {
        seed.on_generators = true;
        std::vector<std::pair<Elem, Elem>> pairs;
        for (const auto& [k, v] : m.items()) {
          pairs.emplace_back(parse_uint_list(k, ',').at(0), get_as<Elem>(v, "seed map value"));
        }
        std::sort(pairs.begin(), pairs.end());
        seed.domain.clear();
        for (const auto& [x, y] : pairs) {
          seed.domain.push_back(x);
          seed.images.push_back(y);
        }
        const auto listed = get_as<std::vector<Elem>>(field(s, "domain"), "seed domain");
        for (auto x : listed) {
          if (std::find(seed.domain.begin(), seed.domain.end(), x) == seed.domain.end()) {
            fail(ErrorKind::InvalidInput, "seed map has no image for domain element " + std::to_string(x));
          }
        }
      } else {
        fail(ErrorKind::Parse, "seed map must be an object or an array");
      }
      spec.seeds.push_back(std::move(seed));
    }
  } else if (kind == "axiomatized") {
    spec.kind = FusionKind::Axiomatized;
    spec.group = parse_group_spec(field(j, "S"));
    spec.coverage = Coverage::None;
    spec.strongly_closed =
        get_as<std::vector<std::vector<Elem>>>(field(j, "strongly_closed"), "strongly_closed");
  } else if (kind == "tables") {
    spec.kind = FusionKind::Tables;
    spec.group = parse_group_spec(field(j, "S"));
    spec.coverage = parse_coverage(get_as<std::string>(field(j, "coverage"), "coverage"));
    spec.provenance = parse_provenance(get_as<std::string>(field(j, "provenance"), "provenance"));
    spec.note = j.contains("note") ? get_as<std::string>(j.at("note"), "note") : "";
    spec.objects = get_as<std::vector<std::vector<Elem>>>(field(j, "objects"), "objects");
    spec.maps = get_as<FusionSystem::MapTable>(field(j, "maps"), "maps");
    if (j.contains("strongly_closed")) {
      spec.strongly_closed =
          get_as<std::vector<std::vector<Elem>>>(j.at("strongly_closed"), "strongly_closed");
    }
  } else {
    fail(ErrorKind::Parse, "unknown fusion kind \"" + kind + "\"");
  }
  return spec;
}

Json to_json(const FusionSpec& spec) {
  Json j;
  switch (spec.kind) {
    case FusionKind::GroupInduced:
      j = {{"kind", "group-induced"}, {"ambient", to_json(spec.group)}, {"p", spec.p}};
      if (spec.coverage != Coverage::Full) j["coverage"] = to_string(spec.coverage);
      return j;
    case FusionKind::Generated: {
      Json seeds = Json::array();
      for (const auto& s : spec.seeds) {
        Json m;
        if (s.on_generators) {
          m = Json::object();
          for (std::size_t i = 0; i < s.domain.size(); ++i) m[std::to_string(s.domain[i])] = s.images[i];
        } else {
          m = s.images;
        }
        seeds.push_back({{"domain", s.domain}, {"map", m}});
      }
      return {{"kind", "generated"}, {"S", to_json(spec.group)}, {"p", spec.p}, {"seeds", seeds}};
    }
    case FusionKind::Axiomatized:
      return {{"kind", "axiomatized"},
              {"S", to_json(spec.group)},
              {"p", spec.p},
              {"strongly_closed", spec.strongly_closed}};
    case FusionKind::Tables:
      j = {{"kind", "tables"},
           {"S", to_json(spec.group)},
           {"p", spec.p},
           {"coverage", to_string(spec.coverage)},
           {"provenance", to_string(spec.provenance)},
           {"note", spec.note},
           {"objects", spec.objects},
           {"maps", spec.maps}};
      if (!spec.strongly_closed.empty()) j["strongly_closed"] = spec.strongly_closed;
      return j;
  }
  return j;
}

FusionSystem build_fusion(const FusionSpec& spec, const Caps& caps) {
  const auto g = build_group(spec.group, caps);
  switch (spec.kind) {
    case FusionKind::GroupInduced:
      return fusion_from_group(g, spec.p, spec.coverage, caps);
    case FusionKind::Generated: {
      if (!g.is_p_group(spec.p)) fail(ErrorKind::InvalidSpec, g.label() + " is not a p-group");
      std::vector<GroupHom> seeds;
      for (const auto& s : spec.seeds) {
        for (auto x : s.domain)
          if (x >= g.order()) fail(ErrorKind::InvalidInput, "seed element out of range");
        for (auto y : s.images)
          if (y >= g.order()) fail(ErrorKind::InvalidInput, "seed image out of range");
        std::vector<Elem> images;
        Subgroup dom = subgroup_generated(g, s.domain);
        if (s.on_generators) {
          auto full = extend_from_generators(g, s.domain, s.images, g);
          if (!full) fail(ErrorKind::InvalidInput, "seed does not extend to a homomorphism");
          for (auto x : dom.members()) images.push_back((*full)[x]);
        } else {
          if (s.domain != dom.members()) {
            fail(ErrorKind::InvalidInput, "seed domain must list the subgroup's sorted members");
          }
          images = s.images;
        }
        auto hom = GroupHom::make(dom, g, std::move(images));
        if (!hom.injective()) fail(ErrorKind::InvalidInput, "seed is not injective");
        seeds.push_back(std::move(hom));
      }
      return fusion_generated(g, spec.p, seeds, caps);
    }
    case FusionKind::Axiomatized: {
      if (!g.is_p_group(spec.p)) fail(ErrorKind::InvalidSpec, g.label() + " is not a p-group");
      std::vector<Subgroup> ks;
      for (const auto& k : spec.strongly_closed) ks.push_back(parse_subgroup(g, Json(k)));
      return fusion_axiomatized(g, spec.p, std::move(ks));
    }
    case FusionKind::Tables: {
      if (!g.is_p_group(spec.p)) fail(ErrorKind::InvalidSpec, g.label() + " is not a p-group");
      const auto s = g.relabeled(g.label(), spec.p);
      std::vector<Subgroup> objects;
      for (const auto& o : spec.objects) objects.push_back(parse_subgroup(s, Json(o)));
      if (spec.maps.size() != objects.size()) fail(ErrorKind::InvalidSpec, "maps and objects differ in length");
      for (std::size_t i = 0; i < objects.size(); ++i) {
        for (const auto& m : spec.maps[i]) {
          if (m.size() != objects[i].order()) fail(ErrorKind::InvalidSpec, "map length != object order");
          for (auto y : m)
            if (y >= s.order()) fail(ErrorKind::InvalidSpec, "map image out of range");
        }
      }
      std::vector<Subgroup> declared;
      for (const auto& k : spec.strongly_closed) declared.push_back(parse_subgroup(s, Json(k)));
      FusionSystem f(s, spec.p, spec.coverage, spec.provenance, spec.note, std::move(objects), spec.maps,
                     std::move(declared));
      if (spec.coverage != Coverage::None) {
        if (auto bad = check_fusion_invariants(f); !bad.empty()) fail(ErrorKind::InvalidSpec, bad);
      }
      return f;
    }
  }
  fail(ErrorKind::InvalidSpec, "unknown fusion kind");
}

Json to_json(const FusionSystem& f, const Caps& caps) {
  FusionSpec spec;
  spec.kind = FusionKind::Tables;
  spec.group = table_spec_of(f.S(), caps);
  spec.p = f.p();
  spec.coverage = f.coverage();
  spec.provenance = f.provenance();
  spec.note = f.note();
  for (const auto& o : f.objects()) spec.objects.push_back(o.members());
  spec.maps = f.map_table();
  for (const auto& k : f.declared_strongly_closed()) spec.strongly_closed.push_back(k.members());
  return to_json(spec);
}

Json to_json(const CellularityReport& r) {
  Json j = {{"cellular", r.cellular},
            {"closure", to_json(r.closure)},
            {"closure_order", r.closure.order()},
            {"abelian", r.closure_abelian},
            {"quotient_order", r.quotient_order},
            {"citations", r.citations}};
  switch (r.closure_normal_in_F) {
    case Tristate::True: j["normal_in_F"] = true; break;
    case Tristate::False: j["normal_in_F"] = false; break;
    case Tristate::Unknown: j["normal_in_F"] = "unknown"; break;
  }
  if (!r.axiomatized_inputs.empty()) j["axiomatized_inputs"] = r.axiomatized_inputs;
  j["verdict"] = r.verdict_text;
  return j;
}

}  // namespace fusioncell
