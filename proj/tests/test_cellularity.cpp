#include <doctest.h>

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

FiniteGroup cyclic(std::uint32_t n) { return build_group(cyclic_spec(n)); }

std::vector<Elem> to_sylow_indices(const std::vector<Elem>& syl, const std::vector<Elem>& in_g) {
  std::vector<Elem> out;
  for (auto x : in_g) {
    const auto it = std::lower_bound(syl.begin(), syl.end(), x);
    if (it != syl.end() && *it == x) out.push_back(static_cast<Elem>(it - syl.begin()));
  }
  return out;
}

}  // namespace

TEST_CASE("Sym(3) at 3 is cellular for every cyclic 3-group") {
  const auto f = fusion_from_group(build_group(symmetric_spec(3)), 3);
  for (std::uint32_t n : {3u, 9u, 27u}) {
    CAPTURE(n);
    const auto r = is_BP_cellular(f, cyclic(n));
    CHECK(r.cellular);
    CHECK(r.closure.order() == 3);
    CHECK(r.closure_abelian);
    CHECK(r.quotient_order == 1);
  }
  CHECK(min_cellularity_exponent(f) == 1);
}

TEST_CASE("wreath product cellularity depends on the exponent") {
  const auto f = fusion_from_group(build_wreath(3, 2, 2), 3);
  const auto r1 = is_BP_cellular(f, cyclic(3));
  CHECK(!r1.cellular);
  CHECK(r1.closure.order() == 9);
  CHECK(r1.closure == omega_subgroup(f.S(), 3, 1));
  CHECK(r1.closure_abelian);
  CHECK(r1.closure_normal_in_F == Tristate::True);
  CHECK(r1.quotient_order == 9);
  CHECK(!r1.citations.empty());

  const auto r2 = is_BP_cellular(f, cyclic(9));
  CHECK(r2.cellular);
  CHECK(r2.closure.order() == 81);
  CHECK(min_cellularity_exponent(f) == 2);

  // Z/3 x Z/3 maps onto Omega_1 as well
  CHECK(cl_closure(f, build_group(abelian_spec({3, 3}))).order() == 9);
}

TEST_CASE("closure agrees with the brute-force intersection") {
  for (const auto& e : corpus::small_ambients()) {
    const auto g = build_group(e.spec);
    REQUIRE(g.order() <= 64);
    const auto f = fusion_from_group(g, e.p);
    const auto pp = e.p * e.p;
    for (const auto& p : {cyclic(e.p), cyclic(pp), build_group(abelian_spec({e.p, e.p}))}) {
      CAPTURE(e.name);
      CAPTURE(p.order());
      CHECK(cl_closure(f, p).members() == oracle::closure(f, p));
    }
  }
}

TEST_CASE("closure properties") {
  for (const auto& e : corpus::small_ambients()) {
    CAPTURE(e.name);
    const auto f = fusion_from_group(build_group(e.spec), e.p);
    const auto& s = f.S();
    const auto c1 = cl_closure(f, cyclic(e.p));
    const auto c2 = cl_closure(f, cyclic(e.p * e.p));
    CHECK(is_strongly_closed(f, c1));
    CHECK(c1.is_subgroup_of(c2));
    // trivial P gives the trivial subgroup
    CHECK(cl_closure(f, FiniteGroup()).is_trivial());
    // Cl_F(Z/p^m) is the strong closure of Omega_{p^m}(S)
    for (unsigned m = 1; m <= 2; ++m) {
      const auto om = omega_subgroup(s, e.p, m);
      std::uint32_t pm = m == 1 ? e.p : e.p * e.p;
      CHECK(cl_closure(f, cyclic(pm)) == strong_closure(f, om));
    }
    // hom images span Omega_1 for cyclic P of order p
    CHECK(hom_image_span(s, cyclic(e.p)) == omega_subgroup(s, e.p, 1));
  }
}

TEST_CASE("minimal cellularity exponent") {
  CHECK(min_cellularity_exponent(fusion_from_group(cyclic(9), 3)) == 2);
  CHECK(min_cellularity_exponent(fusion_from_group(build_group(dihedral_spec(8)), 2)) == 1);
  CHECK(min_cellularity_exponent(fusion_from_group(build_group(corpus::quaternion8()), 2)) == 2);
}

TEST_CASE("hyperfocal subgroup against the group") {
  for (const auto& e : corpus::small_ambients()) {
    CAPTURE(e.name);
    const auto g = build_group(e.spec);
    const auto f = fusion_from_group(g, e.p);
    const auto syl = sylow_subgroup(g, e.p).members();
    std::vector<std::vector<Elem>> subs;
    for (const auto& q : all_subgroups(f.S())) {
      std::vector<Elem> m;
      for (auto x : q.members()) m.push_back(syl[x]);
      subs.push_back(std::move(m));
    }
    const auto h = hyperfocal(f);
    CHECK(h.hyperfocal.members() == to_sylow_indices(syl, oracle::hyperfocal_in_group(g, e.p, subs)));
    CHECK(h.hyperfocal.members() == to_sylow_indices(syl, oracle::s_meet_op(g, e.p, syl)));
    CHECK(h.pi1.group.order() * h.hyperfocal.order() == f.S().order());
  }
}

TEST_CASE("fundamental group examples") {
  const auto d8 = build_group(dihedral_spec(8));
  const auto fs = fusion_from_group(d8, 2);
  CHECK(hyperfocal(fs).hyperfocal.is_trivial());
  CHECK(hyperfocal(fs).pi1.group.order() == 8);

  CHECK(hyperfocal(fusion_from_group(build_group(symmetric_spec(3)), 3)).pi1.group.order() == 1);

  const auto w = build_wreath(3, 2, 2);
  const auto fw = fusion_from_group(w, 3);
  const auto h = hyperfocal(fw);
  const auto syl = sylow_subgroup(w, 3).members();
  CHECK(h.pi1.group.order() == 9);
  CHECK(h.hyperfocal.members() == to_sylow_indices(syl, oracle::s_meet_op(w, 3, syl)));
  CHECK(h.pi1.group.is_abelian());
}

TEST_CASE("normality in the fusion system") {
  const auto s4 = fusion_from_group(build_group(symmetric_spec(4)), 2);
  std::vector<Elem> v;
  for (const auto& k : strongly_closed_subgroups(s4))
    if (k.order() == 4 && is_abelian(k)) v = k.members();
  REQUIRE(v.size() == 4);
  CHECK(is_normal_in_F(s4, Subgroup(s4.S(), v)) == Tristate::True);
  CHECK(is_normal_in_F(s4, center(s4.S())) == Tristate::False);

  const auto f = fusion_from_group(build_group(corpus::s3_times_z3()), 3);
  for (const auto& k : strongly_closed_subgroups(f))
    if (is_abelian(k)) CHECK(is_normal_in_F(f, k) == Tristate::True);

  const auto a4 = fusion_from_group(build_group(alternating_spec(4)), 2);
  CHECK(is_normal_in_F(a4, Subgroup::whole(a4.S())) == Tristate::True);

  const auto d8 = fusion_from_group(build_group(dihedral_spec(8)), 2);
  CHECK(is_normal_in_F(d8, Subgroup::whole(d8.S())) == Tristate::True);
}

TEST_CASE("fusion invariance certificate") {
  std::size_t rejected = 0;
  for (const auto& e : corpus::small_ambients()) {
    CAPTURE(e.name);
    const auto f = fusion_from_group(build_group(e.spec), e.p);
    for (const auto& k : all_subgroups(f.S())) {
      if (is_strongly_closed(f, k)) {
        const auto c = fusion_invariance_certificate(f, k);
        CHECK(c.violations.empty());
        CHECK(c.checked_pairs > 0);
        CHECK(c.rho_target_degree == f.S().order() / k.order());
        CHECK(c.rho_kernel_is_k);
      } else {
        try {
          fusion_invariance_certificate(f, k);
          FAIL("expected rejection");
        } catch (const Error& err) {
          CHECK(err.kind() == ErrorKind::InvalidInput);
          ++rejected;
        }
      }
    }
  }
  CHECK(rejected > 0);

  const auto w = fusion_from_group(build_wreath(3, 2, 2), 3);
  const auto c = fusion_invariance_certificate(w, omega_subgroup(w.S(), 3, 1));
  CHECK(c.violations.empty());
  CHECK(c.rho_target_degree == 9);
  CHECK(c.rho_kernel_is_k);
}

TEST_CASE("exotic verdict carries its external inputs") {
  const auto b = build_b3r(5, 1);
  const auto v1 = exotic_cellularity_verdict(b, 1);
  CHECK(!v1.cellular);
  CHECK(v1.closure == b.N);
  CHECK(!v1.axiomatized_inputs.empty());
  const auto v2 = exotic_cellularity_verdict(b, 2);
  CHECK(v2.cellular);
  CHECK(v2.closure.order() == 243);
}
