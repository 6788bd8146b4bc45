#include <doctest.h>

#include <set>

#include "corpus.hpp"
#include "fusioncell/build.hpp"
#include "fusioncell/catalog.hpp"
#include "fusioncell/cellularity.hpp"
#include "fusioncell/errors.hpp"
#include "fusioncell/fusion.hpp"
#include "fusioncell/subgroups.hpp"
#include "oracles.hpp"

using namespace fusioncell;

namespace {

// Sylow members in G, which are S's elements in order.
std::vector<Elem> sylow_in(const FiniteGroup& g, unsigned p) { return sylow_subgroup(g, p).members(); }

// The automorphism of S induced by conjugation with x in G.
std::vector<Elem> conjugation_on_sylow(const FiniteGroup& g, const std::vector<Elem>& syl, Elem x) {
  std::vector<Elem> out;
  for (auto y : syl) {
    const auto z = g.conj(x, y);
    out.push_back(static_cast<Elem>(std::lower_bound(syl.begin(), syl.end(), z) - syl.begin()));
  }
  return out;
}

bool has_map(const FusionSystem& f, const Subgroup& p, const std::vector<Elem>& map) {
  const auto i = f.index_of(p);
  if (!i) return false;
  const auto& maps = f.maps(*i);
  return std::find(maps.begin(), maps.end(), map) != maps.end();
}

}  // namespace

TEST_CASE("group-induced fusion") {
  const auto s3 = build_group(symmetric_spec(3));
  const auto f = fusion_from_group(s3, 3);
  CHECK(f.S().order() == 3);
  CHECK(f.provenance() == Provenance::GroupInduced);
  const auto whole = Subgroup::whole(f.S());
  const auto syl = sylow_subgroup(s3, 3);
  CHECK(aut_F(f, whole).order() == normalizer(s3, syl).order() / centralizer(s3, syl).order());
  CHECK(aut_F(f, whole).order() == 2);
  CHECK(out_F(f, whole).group.order() == 2);

  // F_S(S) has only inner maps
  const auto d8 = build_group(dihedral_spec(8));
  const auto fs = fusion_from_group(d8, 2);
  const auto& s = fs.S();
  for (std::size_t i = 0; i < fs.objects().size(); ++i) {
    const auto& p = fs.objects()[i];
    std::set<std::vector<Elem>> inner;
    for (Elem g = 0; g < s.order(); ++g) {
      std::vector<Elem> m;
      for (auto x : p.members()) m.push_back(s.conj(g, x));
      inner.insert(m);
    }
    CHECK(std::set<std::vector<Elem>>(fs.maps(i).begin(), fs.maps(i).end()) == inner);
  }
  CHECK(out_F(fs, Subgroup::whole(s)).group.order() == 1);
}

TEST_CASE("wreath fusion contains the coordinate swap") {
  const auto w = build_wreath(3, 2, 2);
  const auto f = fusion_from_group(w, 3);
  const auto syl = sylow_in(w, 3);
  const auto swap = semidirect_element(w, 0, 1);
  const auto map = conjugation_on_sylow(w, syl, swap);
  CHECK(has_map(f, Subgroup::whole(f.S()), map));
  bool nontrivial = false;
  for (Elem i = 0; i < map.size(); ++i) nontrivial = nontrivial || map[i] != i;
  CHECK(nontrivial);
}

TEST_CASE("generated fusion") {
  const auto v = build_group(abelian_spec({2, 2}));
  const auto empty = fusion_generated(v, 2, {});
  const auto inner = fusion_from_group(v, 2);
  CHECK(empty.objects() == inner.objects());
  CHECK(empty.map_table() == inner.map_table());

  // one order-3 automorphism of V gives the A4 fusion
  const auto a4 = fusion_from_group(build_group(alternating_spec(4)), 2);
  const auto& s = a4.S();
  const auto whole = Subgroup::whole(s);
  std::vector<GroupHom> seed;
  for (const auto& m : a4.maps(*a4.index_of(whole))) {
    auto h = GroupHom::make(whole, s, m);
    bool order3 = true;
    for (Elem x = 0; x < s.order(); ++x) order3 = order3 && m[m[m[x]]] == x;
    if (order3 && m != whole.members()) {
      seed.push_back(h);
      break;
    }
  }
  REQUIRE(seed.size() == 1);
  const auto gen = fusion_generated(s, 2, seed);
  CHECK(gen.objects() == a4.objects());
  CHECK(gen.map_table() == a4.map_table());

  // every restriction of a seed is present
  for (const auto& p : all_subgroups(s)) {
    std::vector<Elem> r;
    for (auto x : p.members()) r.push_back(seed[0](x));
    CHECK(has_map(gen, p, r));
  }
}

TEST_CASE("fusion systems satisfy the morphism closure invariants") {
  for (const auto& e : corpus::small_ambients()) {
    CAPTURE(e.name);
    const auto f = fusion_from_group(build_group(e.spec), e.p);
    CHECK(check_fusion_invariants(f).empty());
  }
  CHECK(check_fusion_invariants(fusion_from_group(build_wreath(3, 2, 2), 3)).empty());
}

TEST_CASE("saturation") {
  for (const auto& e : corpus::small_ambients()) {
    CAPTURE(e.name);
    const auto r = is_saturated(fusion_from_group(build_group(e.spec), e.p));
    CHECK(r.saturated);
    CHECK(r.witnesses.empty());
  }
  const auto r = is_saturated(fusion_from_group(build_wreath(3, 2, 2), 3));
  CHECK(r.saturated);

  // swapping the coordinates of (Z/2)^2 and nothing else
  const auto v = build_group(abelian_spec({2, 2}));
  std::vector<Elem> swap(4);
  for (Elem x = 0; x < 4; ++x) swap[x] = *v.find(Key{v.key(x)[1], v.key(x)[0]});
  const std::vector<GroupHom> seeds{GroupHom::make(Subgroup::whole(v), v, swap)};
  const auto broken = fusion_generated(v, 2, seeds);
  const auto report = is_saturated(broken);
  CHECK(!report.saturated);
  REQUIRE(!report.witnesses.empty());
  CHECK(report.witnesses.front().axiom == "s.1");
  CHECK(report.witnesses.front().subgroup.order() == 4);

  // a map between two distinct involutions with no automorphism of V behind it
  const auto a = *v.find(Key{1, 0});
  const auto b = *v.find(Key{0, 1});
  const Subgroup pa(v, {v.identity(), a});
  const std::vector<GroupHom> fuse{GroupHom::make(pa, v, {v.identity(), b})};
  const auto bad = is_saturated(fusion_generated(v, 2, fuse));
  CHECK(!bad.saturated);
  bool s2 = false;
  for (const auto& w : bad.witnesses) s2 = s2 || w.axiom == "s.2";
  CHECK(s2);

  CHECK_THROWS_AS(is_saturated(fusion_from_group(build_group(symmetric_spec(4)), 2, Coverage::Cyclic)), Error);
}

TEST_CASE("strong closure") {
  const auto d8 = build_group(dihedral_spec(8));
  const auto fs = fusion_from_group(d8, 2);
  for (const auto& k : all_subgroups(fs.S())) CHECK(is_strongly_closed(fs, k) == is_normal(fs.S(), k));

  const auto f = fusion_from_group(build_wreath(3, 2, 2), 3);
  CHECK(is_strongly_closed(f, omega_subgroup(f.S(), 3, 1)));

  const auto s4 = fusion_from_group(build_group(symmetric_spec(4)), 2);
  CHECK(center(s4.S()).order() == 2);
  CHECK(!is_strongly_closed(s4, center(s4.S())));

  const auto s3 = build_group(symmetric_spec(3));
  CHECK_THROWS_AS(is_strongly_closed(s4, Subgroup::whole(s3)), Error);
}

TEST_CASE("strongly closed subgroup lists") {
  const auto s3 = fusion_from_group(build_group(symmetric_spec(3)), 3);
  CHECK(strongly_closed_subgroups(s3).size() == 2);

  const auto d8 = build_group(dihedral_spec(8));
  const auto fs = fusion_from_group(d8, 2);
  std::vector<Subgroup> normal;
  for (const auto& k : all_subgroups(fs.S()))
    if (is_normal(fs.S(), k)) normal.push_back(k);
  auto closed = strongly_closed_subgroups(fs);
  std::sort(closed.begin(), closed.end());
  std::sort(normal.begin(), normal.end());
  CHECK(closed == normal);

  const auto w = fusion_from_group(build_wreath(3, 2, 2), 3);
  const auto list = strongly_closed_subgroups(w);
  auto has_order = [&](std::size_t n, bool exp3) {
    for (const auto& k : list) {
      bool ok = k.order() == n;
      for (auto x : k.members()) ok = ok && (!exp3 || w.S().element_order(x) <= 3);
      if (ok) return true;
    }
    return false;
  };
  CHECK(list.front().is_trivial());
  CHECK(list.back().order() == 81);
  CHECK(has_order(9, true));
}

TEST_CASE("cyclic and full strong closure predicates agree") {
  for (const auto& e : corpus::small_ambients()) {
    CAPTURE(e.name);
    const auto f = fusion_from_group(build_group(e.spec), e.p);
    for (const auto& k : f.objects()) {
      const bool cyclic = is_strongly_closed(f, k);
      CHECK(cyclic == is_strongly_closed_full(f, k));
      CHECK(cyclic == oracle::strongly_closed(f, k.members()));
    }
    // intersections of strongly closed subgroups stay strongly closed
    const auto list = strongly_closed_subgroups(f);
    for (const auto& a : list)
      for (const auto& b : list) CHECK(is_strongly_closed(f, intersection(a, b)));
  }
}

TEST_CASE("fusion preserving maps") {
  const auto a4 = fusion_from_group(build_group(alternating_spec(4)), 2);
  const auto& v = a4.S();
  const auto id = GroupHom::make(Subgroup::whole(v), v, Subgroup::whole(v).members());
  CHECK(is_fusion_preserving(id, a4, a4));
  const auto inner = fusion_generated(v, 2, {});
  CHECK(!is_fusion_preserving(id, a4, inner));
  CHECK(is_fusion_preserving(id, inner, a4));

  // S -> S/Omega_1 for the wreath product, against the quotient group's fusion
  const auto w = build_wreath(3, 2, 2);
  const auto f = fusion_from_group(w, 3);
  const auto syl = sylow_in(w, 3);
  std::vector<Elem> cubes;
  for (auto x : syl)
    if (w.element_order(x) <= 3) cubes.push_back(x);
  const auto k = subgroup_generated(w, cubes);
  REQUIRE(k.order() == 9);
  REQUIRE(is_normal(w, k));
  const auto q = quotient(w, k);
  const auto fq = fusion_from_group(q.group, 3);
  const auto qsyl = sylow_subgroup(q.group, 3).members();
  std::vector<Elem> rho;
  for (auto x : syl) {
    const auto y = q.projection[x];
    rho.push_back(static_cast<Elem>(std::lower_bound(qsyl.begin(), qsyl.end(), y) - qsyl.begin()));
  }
  const auto rh = GroupHom::make(Subgroup::whole(f.S()), fq.S(), rho);
  CHECK(is_fusion_preserving(rh, f, fq));
}

TEST_CASE("automorphism groups in fusion systems") {
  const auto a4 = fusion_from_group(build_group(alternating_spec(4)), 2);
  const auto v = Subgroup::whole(a4.S());
  const auto aut = aut_F(a4, v);
  CHECK(aut.order() == 3);
  CHECK(aut.is_abelian());
  CHECK(out_F(a4, v).group.order() == 3);

  const auto s4 = fusion_from_group(build_group(symmetric_spec(4)), 2);
  CHECK(out_F(s4, Subgroup::whole(s4.S())).group.order() == 1);
}

TEST_CASE("axiomatized fusion needs external data") {
  const auto b = build_b3r(5, 1);
  const auto f = fusion_axiomatized(b.group, 3, {b.N});
  CHECK(f.coverage() == Coverage::None);
  CHECK(is_strongly_closed(f, b.N));
  CHECK(is_strongly_closed(f, Subgroup::whole(b.group)));
  try {
    is_strongly_closed(f, center(b.group));
    FAIL("expected ExternalDataRequired");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ExternalDataRequired);
  }
  CHECK_THROWS_AS(is_saturated(f), Error);
}
