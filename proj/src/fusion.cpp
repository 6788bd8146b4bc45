#include "fusioncell/fusion.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_set>

#include "fusioncell/errors.hpp"

namespace fusioncell {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

std::string members_key(const std::vector<Elem>& v) {
  return std::string(reinterpret_cast<const char*>(v.data()), v.size() * sizeof(Elem));
}

std::vector<Elem> sorted_copy(std::vector<Elem> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// pos[x] = index of x in members, -1 if absent.
std::vector<std::int32_t> positions(const Subgroup& h, std::size_t n) {
  std::vector<std::int32_t> pos(n, -1);
  for (std::size_t i = 0; i < h.order(); ++i) pos[h.members()[i]] = static_cast<std::int32_t>(i);
  return pos;
}

void sort_unique(std::vector<std::vector<Elem>>& maps) {
  std::sort(maps.begin(), maps.end());
  maps.erase(std::unique(maps.begin(), maps.end()), maps.end());
}

bool has_map(const std::vector<std::vector<Elem>>& maps, const std::vector<Elem>& m) {
  return std::binary_search(maps.begin(), maps.end(), m);
}

void require_coverage(const FusionSystem& f, Coverage needed, const std::string& op) {
  if (f.coverage() == Coverage::Full) return;
  if (needed == Coverage::Cyclic && f.coverage() == Coverage::Cyclic) return;
  fail(ErrorKind::ExternalDataRequired,
       op + " needs " + to_string(needed) + " morphism data; fusion system has " +
           to_string(f.coverage()) + " coverage (" + to_string(f.provenance()) + ")");
}

std::vector<Elem> restrict_map(const Subgroup& from, const std::vector<Elem>& map,
                               const Subgroup& to) {
  std::vector<Elem> out;
  out.reserve(to.order());
  for (auto x : to.members()) out.push_back(map[*from.position(x)]);
  return out;
}

}  // namespace

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::GroupInduced: return "group-induced";
    case Provenance::Generated: return "generated";
    case Provenance::Axiomatized: return "axiomatized";
  }
  return "unknown";
}

std::string to_string(Coverage c) {
  switch (c) {
    case Coverage::Full: return "full";
    case Coverage::Cyclic: return "cyclic";
    case Coverage::None: return "none";
  }
  return "unknown";
}

FusionSystem::FusionSystem(FiniteGroup s, unsigned p, Coverage coverage, Provenance provenance,
                           std::string note, std::vector<Subgroup> objects, MapTable morphisms,
                           std::vector<Subgroup> declared)
    : s_(std::move(s)),
      p_(p),
      coverage_(coverage),
      provenance_(provenance),
      note_(std::move(note)) {
  if (objects.size() != morphisms.size()) {
    fail(ErrorKind::InvalidInput, "morphism table does not match the object list");
  }
  if (!s_.is_p_group(p)) fail(ErrorKind::InvalidInput, s_.label() + " is not a p-group");
  std::vector<std::size_t> order(objects.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return objects[a] < objects[b]; });
  for (auto i : order) {
    if (!objects[i].parent().same_as(s_)) {
      fail(ErrorKind::SubgroupMismatch, "fusion object is not a subgroup of S");
    }
    auto& maps = morphisms[i];
    for (const auto& m : maps) {
      if (m.size() != objects[i].order()) fail(ErrorKind::InvalidInput, "morphism is not total");
      for (auto y : m)
        if (y >= s_.order()) fail(ErrorKind::InvalidInput, "morphism image out of range");
    }
    sort_unique(maps);
    if (!index_.emplace(members_key(objects[i].members()), objects_.size()).second) {
      fail(ErrorKind::InvalidInput, "duplicate fusion object");
    }
    objects_.push_back(std::move(objects[i]));
    morphisms_.push_back(std::move(maps));
  }
  for (auto& k : declared) {
    if (!k.parent().same_as(s_)) fail(ErrorKind::SubgroupMismatch, "declared subgroup not in S");
  }
  std::sort(declared.begin(), declared.end());
  declared_ = std::move(declared);
  cyclic_of_.assign(s_.order(), kNone);
  if (!objects_.empty()) {
    for (Elem x = 0; x < s_.order(); ++x) {
      if (auto idx = index_of(cyclic_subgroup(s_, x))) cyclic_of_[x] = *idx;
    }
  }
}

std::optional<std::size_t> FusionSystem::index_of(const Subgroup& h) const {
  auto it = index_.find(members_key(h.members()));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t FusionSystem::require_index(const Subgroup& h) const {
  if (!h.parent().same_as(s_)) fail(ErrorKind::SubgroupMismatch, "subgroup is not in S");
  auto idx = index_of(h);
  if (!idx) {
    fail(ErrorKind::ExternalDataRequired,
         "no morphism data for a subgroup of order " + std::to_string(h.order()) + " (coverage " +
             to_string(coverage_) + ")");
  }
  return *idx;
}

std::optional<std::size_t> FusionSystem::cyclic_index(Elem x) const {
  if (x >= cyclic_of_.size() || cyclic_of_[x] == kNone) return std::nullopt;
  return cyclic_of_[x];
}

std::size_t FusionSystem::morphism_count() const {
  std::size_t n = 0;
  for (const auto& m : morphisms_) n += m.size();
  return n;
}

std::vector<GroupHom> FusionSystem::hom(const Subgroup& p, const Subgroup& q) const {
  const auto i = require_index(p);
  if (!q.parent().same_as(s_)) fail(ErrorKind::SubgroupMismatch, "codomain is not in S");
  std::vector<GroupHom> out;
  for (const auto& m : morphisms_[i]) {
    if (std::all_of(m.begin(), m.end(), [&](Elem y) { return q.contains(y); })) {
      out.push_back(GroupHom::unchecked(objects_[i], s_, m));
    }
  }
  return out;
}

std::vector<GroupHom> FusionSystem::hom_to_S(const Subgroup& p) const {
  return hom(p, Subgroup::whole(s_));
}

bool operator==(const FusionSystem& a, const FusionSystem& b) {
  return a.p_ == b.p_ && a.coverage_ == b.coverage_ && a.provenance_ == b.provenance_ &&
         a.note_ == b.note_ && a.s_ == b.s_ && a.objects_ == b.objects_ &&
         a.morphisms_ == b.morphisms_ && a.declared_ == b.declared_;
}

FusionSystem fusion_from_group(const FiniteGroup& g, unsigned p, Coverage coverage,
                               const Caps& caps) {
  if (coverage == Coverage::None) fail(ErrorKind::InvalidInput, "group-induced systems carry data");
  const auto syl = sylow_subgroup(g, p);
  auto emb = as_group(syl, "Syl_" + std::to_string(p) + "(" + g.label() + ")", caps);
  const FiniteGroup s = emb.group.relabeled(emb.group.label(), p);
  const auto& to_parent = emb.to_parent;
  std::vector<Elem> to_s(g.order(), ~Elem{0});
  for (Elem i = 0; i < to_parent.size(); ++i) to_s[to_parent[i]] = i;

  // Subgroups of the re-presented S must refer to the relabeled group.
  std::vector<Subgroup> objects;
  for (auto& h : coverage == Coverage::Full ? all_subgroups(s, caps) : cyclic_subgroups(s)) {
    objects.emplace_back(s, h.members());
  }
  FusionSystem::MapTable maps(objects.size());
  for (std::size_t i = 0; i < objects.size(); ++i) {
    const auto& obj = objects[i];
    std::vector<Elem> gens_g;
    for (auto x : small_generating_set(obj)) gens_g.push_back(to_parent[x]);
    std::set<std::vector<Elem>> seen;
    std::vector<Elem> img(gens_g.size());
    for (Elem x = 0; x < g.order(); ++x) {
      bool inside = true;
      for (std::size_t k = 0; k < gens_g.size() && inside; ++k) {
        img[k] = to_s[g.conj(x, gens_g[k])];
        inside = img[k] != ~Elem{0};
      }
      if (!inside || !seen.insert(img).second) continue;
      std::vector<Elem> full;
      full.reserve(obj.order());
      for (auto m : obj.members()) full.push_back(to_s[g.conj(x, to_parent[m])]);
      maps[i].push_back(std::move(full));
    }
  }
  std::string note = "ambient " + g.label() + " (order " + std::to_string(g.order()) + ")";
  return FusionSystem(s, p, coverage, Provenance::GroupInduced, std::move(note), std::move(objects),
                      std::move(maps));
}

FusionSystem fusion_generated(const FiniteGroup& s, unsigned p, std::span<const GroupHom> seeds,
                              const Caps& caps) {
  const auto objects = all_subgroups(s, caps);
  const std::size_t n_obj = objects.size();
  std::unordered_map<std::string, std::size_t> index;
  std::vector<std::vector<std::int32_t>> pos;
  for (std::size_t i = 0; i < n_obj; ++i) {
    index.emplace(members_key(objects[i].members()), i);
    pos.push_back(positions(objects[i], s.order()));
  }
  std::vector<std::vector<std::size_t>> proper_subs(n_obj);
  for (std::size_t i = 0; i < n_obj; ++i)
    for (std::size_t j = 0; j < n_obj; ++j)
      if (j != i && objects[j].order() < objects[i].order() &&
          objects[j].is_subgroup_of(objects[i])) {
        proper_subs[i].push_back(j);
      }

  FusionSystem::MapTable maps(n_obj);
  std::vector<std::vector<std::size_t>> image_of(n_obj);
  std::vector<std::unordered_set<std::string>> seen(n_obj);
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> by_image(n_obj);
  std::vector<std::pair<std::size_t, std::size_t>> work;

  auto add = [&](std::size_t obj, std::vector<Elem> m) {
    if (!seen[obj].insert(members_key(m)).second) return;
    const auto img = index.at(members_key(sorted_copy(m)));
    maps[obj].push_back(std::move(m));
    image_of[obj].push_back(img);
    by_image[img].emplace_back(obj, maps[obj].size() - 1);
    work.emplace_back(obj, maps[obj].size() - 1);
  };

  for (std::size_t i = 0; i < n_obj; ++i) {
    for (Elem g = 0; g < s.order(); ++g) {
      std::vector<Elem> m;
      for (auto x : objects[i].members()) m.push_back(s.conj(g, x));
      add(i, std::move(m));
    }
  }
  for (const auto& seed : seeds) {
    if (!seed.domain().parent().same_as(s) || !seed.codomain().same_as(s)) {
      fail(ErrorKind::SubgroupMismatch, "seed morphism does not live in S");
    }
    auto checked = GroupHom::make(seed.domain(), s, seed.images());
    if (!checked.injective()) fail(ErrorKind::InvalidInput, "seed morphism is not injective");
    auto it = index.find(members_key(seed.domain().members()));
    if (it == index.end()) fail(ErrorKind::InvalidInput, "seed domain is not a subgroup of S");
    add(it->second, seed.images());
  }

  while (!work.empty()) {
    const auto [i, k] = work.back();
    work.pop_back();
    const std::vector<Elem> phi = maps[i][k];
    const std::size_t j = image_of[i][k];
    const auto& dom = objects[i].members();

    std::vector<Elem> inv(phi.size());
    for (std::size_t a = 0; a < phi.size(); ++a) inv[pos[j][phi[a]]] = dom[a];
    add(j, std::move(inv));

    for (auto r : proper_subs[i]) add(r, restrict_map(objects[i], phi, objects[r]));

    for (std::size_t t = 0; t < maps[j].size(); ++t) {
      std::vector<Elem> c(phi.size());
      for (std::size_t a = 0; a < phi.size(); ++a) c[a] = maps[j][t][pos[j][phi[a]]];
      add(i, std::move(c));
    }
    for (std::size_t t = 0; t < by_image[i].size(); ++t) {
      const auto [i2, k2] = by_image[i][t];
      std::vector<Elem> c(maps[i2][k2].size());
      for (std::size_t a = 0; a < c.size(); ++a) c[a] = phi[pos[i][maps[i2][k2][a]]];
      add(i2, std::move(c));
    }
  }
  std::string note = std::to_string(seeds.size()) + " seed morphism(s)";
  return FusionSystem(s, p, Coverage::Full, Provenance::Generated, std::move(note), objects,
                      std::move(maps));
}

FusionSystem fusion_axiomatized(const FiniteGroup& s, unsigned p,
                                std::vector<Subgroup> strongly_closed) {
  for (const auto& k : strongly_closed) {
    require_parent(s, k);
    validate_subgroup(k);
  }
  return FusionSystem(s, p, Coverage::None, Provenance::Axiomatized,
                      std::to_string(strongly_closed.size()) + " declared strongly closed subgroup(s)",
                      {}, {}, std::move(strongly_closed));
}

SaturationReport is_saturated(const FusionSystem& f) {
  require_coverage(f, Coverage::Full, "saturation check");
  const auto& s = f.S();
  const auto& objs = f.objects();
  const std::size_t n = objs.size();
  std::vector<std::size_t> norm(n), cent(n), zorder(n);
  for (std::size_t i = 0; i < n; ++i) {
    norm[i] = normalizer(s, objs[i]).order();
    cent[i] = centralizer(s, objs[i]).order();
    zorder[i] = intersection(objs[i], centralizer(s, objs[i])).order();
  }
  auto image_index = [&](const std::vector<Elem>& m) {
    return *f.index_of(Subgroup(s, sorted_copy(m)));
  };
  std::vector<bool> fully_normalized(n, true), fully_centralized(n, true);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& m : f.maps(i)) {
      const auto j = image_index(m);
      if (norm[j] > norm[i]) fully_normalized[i] = false;
      if (cent[j] > cent[i]) fully_centralized[i] = false;
    }
  }

  SaturationReport report;
  for (std::size_t i = 0; i < n; ++i) {
    if (!fully_normalized[i]) continue;
    if (!fully_centralized[i]) {
      report.witnesses.push_back({"s.1", objs[i], "fully normalized but not fully centralized"});
      continue;
    }
    std::size_t aut_f = 0;
    for (const auto& m : f.maps(i))
      if (image_index(m) == i) ++aut_f;
    const std::size_t inn = objs[i].order() / zorder[i];
    const std::size_t out_f = aut_f / inn;
    const std::size_t out_s = norm[i] / cent[i] / inn;
    if (out_s != p_part(out_f, f.p())) {
      report.witnesses.push_back(
          {"s.1", objs[i],
           "|Out_S(P)| = " + std::to_string(out_s) + " is not the p-part of |Out_F(P)| = " +
               std::to_string(out_f)});
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    const auto& p_sub = objs[i];
    const auto n_p = normalizer(s, p_sub);
    for (const auto& phi : f.maps(i)) {
      const auto j = image_index(phi);
      if (!fully_centralized[j]) continue;
      const auto& img = objs[j];
      // Aut_S(phi(P)) as map tables on img.
      std::set<std::vector<Elem>> aut_s;
      const auto n_img = normalizer(s, img);
      for (auto h : n_img.members()) {
        std::vector<Elem> c;
        for (auto y : img.members()) c.push_back(s.conj(h, y));
        aut_s.insert(std::move(c));
      }
      std::vector<Elem> phi_inv(s.order(), 0);
      for (std::size_t a = 0; a < phi.size(); ++a) phi_inv[phi[a]] = p_sub.members()[a];
      std::vector<Elem> n_phi;
      for (auto g : n_p.members()) {
        std::vector<Elem> c;
        for (auto y : img.members()) c.push_back(phi[*p_sub.position(s.conj(g, phi_inv[y]))]);
        if (aut_s.contains(c)) n_phi.push_back(g);
      }
      const Subgroup n_sub(s, std::move(n_phi));
      const auto ni = f.index_of(n_sub);
      bool extended = false;
      if (ni) {
        for (const auto& psi : f.maps(*ni)) {
          if (restrict_map(n_sub, psi, p_sub) == phi) {
            extended = true;
            break;
          }
        }
      }
      if (!extended) {
        report.witnesses.push_back(
            {"s.2", p_sub,
             "morphism onto a fully centralized subgroup of order " + std::to_string(img.order()) +
                 " has no extension to N_phi of order " + std::to_string(n_sub.order())});
      }
    }
  }
  report.saturated = report.witnesses.empty();
  return report;
}

bool is_strongly_closed(const FusionSystem& f, const Subgroup& k) {
  require_parent(f.S(), k);
  if (f.coverage() == Coverage::None) {
    if (std::find(f.declared_strongly_closed().begin(), f.declared_strongly_closed().end(), k) !=
            f.declared_strongly_closed().end() ||
        k.order() == f.S().order() || k.is_trivial()) {
      return true;
    }
    fail(ErrorKind::ExternalDataRequired, "strong closure of an undeclared subgroup");
  }
  std::vector<char> done(f.objects().size(), 0);
  for (auto x : k.members()) {
    const auto idx = f.cyclic_index(x);
    if (!idx) fail(ErrorKind::ExternalDataRequired, "cyclic subgroup without morphism data");
    if (done[*idx]) continue;
    done[*idx] = 1;
    for (const auto& m : f.maps(*idx))
      for (auto y : m)
        if (!k.contains(y)) return false;
  }
  return true;
}

bool is_strongly_closed_full(const FusionSystem& f, const Subgroup& k) {
  require_parent(f.S(), k);
  require_coverage(f, Coverage::Full, "full strong-closure check");
  for (std::size_t i = 0; i < f.objects().size(); ++i) {
    if (!f.objects()[i].is_subgroup_of(k)) continue;
    for (const auto& m : f.maps(i))
      for (auto y : m)
        if (!k.contains(y)) return false;
  }
  return true;
}

std::vector<Subgroup> strongly_closed_subgroups(const FusionSystem& f, const Caps& caps) {
  if (f.coverage() == Coverage::None) {
    fail(ErrorKind::ExternalDataRequired, "cannot enumerate strongly closed subgroups without morphisms");
  }
  std::vector<Subgroup> out;
  for (auto& h : all_subgroups(f.S(), caps))
    if (is_strongly_closed(f, h)) out.push_back(std::move(h));
  std::sort(out.begin(), out.end());
  for (std::size_t a = 0; a < out.size(); ++a)
    for (std::size_t b = a + 1; b < out.size(); ++b) {
      const auto meet = intersection(out[a], out[b]);
      if (!std::binary_search(out.begin(), out.end(), meet)) {
        fail(ErrorKind::InvariantViolation, "strongly closed subgroups not closed under intersection");
      }
    }
  return out;
}

bool is_fusion_preserving(const GroupHom& rho, const FusionSystem& f, const FusionSystem& fp) {
  if (!rho.domain().parent().same_as(f.S()) || rho.domain().order() != f.S().order() ||
      !rho.codomain().same_as(fp.S())) {
    fail(ErrorKind::SubgroupMismatch, "rho must be a total map S -> S'");
  }
  require_coverage(f, Coverage::Full, "fusion-preservation check");
  require_coverage(fp, Coverage::Full, "fusion-preservation check");
  const auto& sp = fp.S();
  for (std::size_t i = 0; i < f.objects().size(); ++i) {
    const auto& obj = f.objects()[i];
    std::vector<Elem> rho_p;
    for (auto x : obj.members()) rho_p.push_back(rho(x));
    const Subgroup target(sp, [&] {
      auto v = rho_p;
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
      return v;
    }());
    const auto ti = fp.require_index(target);
    for (const auto& phi : f.maps(i)) {
      constexpr Elem kUnset = ~Elem{0};
      std::vector<Elem> want(target.order(), kUnset);
      bool consistent = true;
      for (std::size_t a = 0; a < obj.order() && consistent; ++a) {
        const auto slot = *target.position(rho_p[a]);
        const Elem v = rho(phi[a]);
        if (want[slot] == kUnset) want[slot] = v;
        consistent = want[slot] == v;
      }
      if (!consistent || !has_map(fp.maps(ti), want)) return false;
    }
  }
  return true;
}

FiniteGroup aut_F(const FusionSystem& f, const Subgroup& p) {
  const auto i = f.require_index(p);
  const auto pos = positions(p, f.S().order());
  std::vector<Key> keys;
  for (const auto& m : f.maps(i)) {
    if (sorted_copy(m) == p.members()) keys.emplace_back(m.begin(), m.end());
  }
  auto compose = [pos](const Key& a, const Key& b) {
    Key r(b.size());
    for (std::size_t x = 0; x < b.size(); ++x) r[x] = a[pos[b[x]]];
    return r;
  };
  Key id(p.members().begin(), p.members().end());
  return FiniteGroup::from_elements(std::move(keys), id, compose, "Aut_F(P)");
}

Quotient out_F(const FusionSystem& f, const Subgroup& p) {
  const auto a = aut_F(f, p);
  const auto& s = f.S();
  std::vector<Elem> inner;
  for (auto x : p.members()) {
    Key c;
    for (auto y : p.members()) c.push_back(s.conj(x, y));
    auto e = a.find(c);
    if (!e) fail(ErrorKind::InvariantViolation, "inner automorphism missing from Aut_F(P)");
    inner.push_back(*e);
  }
  return quotient(a, subgroup_generated(a, inner));
}

std::string check_fusion_invariants(const FusionSystem& f) {
  if (f.coverage() == Coverage::None) return {};
  const auto& s = f.S();
  const auto& objs = f.objects();
  for (std::size_t i = 0; i < objs.size(); ++i) {
    const auto& obj = objs[i];
    const auto tag = " (object of order " + std::to_string(obj.order()) + ")";
    for (Elem g = 0; g < s.order(); ++g) {
      std::vector<Elem> c;
      for (auto x : obj.members()) c.push_back(s.conj(g, x));
      if (!has_map(f.maps(i), c)) return "missing inner morphism" + tag;
    }
    for (const auto& m : f.maps(i)) {
      auto img = sorted_copy(m);
      if (std::adjacent_find(img.begin(), img.end()) != img.end()) return "non-injective map" + tag;
      for (std::size_t a = 0; a < obj.order(); ++a)
        for (std::size_t b = 0; b < obj.order(); ++b) {
          const auto ab = *obj.position(s.mul(obj.members()[a], obj.members()[b]));
          if (m[ab] != s.mul(m[a], m[b])) return "map is not a homomorphism" + tag;
        }
      const Subgroup image(s, img);
      const auto j = f.index_of(image);
      if (!j) return "image is not an object" + tag;
      std::vector<Elem> inv(obj.order());
      for (std::size_t a = 0; a < obj.order(); ++a) inv[*image.position(m[a])] = obj.members()[a];
      if (!has_map(f.maps(*j), inv)) return "inverse missing" + tag;
      for (const auto& psi : f.maps(*j)) {
        std::vector<Elem> c;
        for (auto y : m) c.push_back(psi[*image.position(y)]);
        if (!has_map(f.maps(i), c)) return "composite missing" + tag;
      }
      for (std::size_t r = 0; r < objs.size(); ++r) {
        if (r == i || !objs[r].is_subgroup_of(obj)) continue;
        if (!has_map(f.maps(r), restrict_map(obj, m, objs[r]))) return "restriction missing" + tag;
      }
    }
  }
  return {};
}

}  // namespace fusioncell
