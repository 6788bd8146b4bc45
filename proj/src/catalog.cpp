#include "fusioncell/catalog.hpp"

#include <map>
#include <set>

#include "fusioncell/errors.hpp"
#include "fusioncell/gf2k.hpp"
#include "fusioncell/homs.hpp"
#include "fusioncell/subgroups.hpp"

namespace fusioncell {

namespace {

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// The module <s_1, s_2> written as Z[t]/(t^(r-1)) modulo the Z[t]-span of
// 3 + 3t + t^2 - gamma t^(r-2), where t acts as x -> [x, s]. The relator span
// is triangular with diagonal 3, so every class has a unique representative
// with coefficients in {0,1,2}.
class B3rModule {
 public:
  using Vec = std::vector<std::int64_t>;

  B3rModule(unsigned r, unsigned gamma) : d_(r - 1) {
    for (std::size_t k = 0; k < d_; ++k) {
      Vec f(d_, 0);
      auto put = [&](std::size_t at, std::int64_t c) {
        if (at < d_) f[at] += c;
      };
      put(k, 3);
      put(k + 1, 3);
      put(k + 2, 1);
      put(k + r - 2, -static_cast<std::int64_t>(gamma));
      relators_.push_back(std::move(f));
    }
  }

  std::size_t dim() const { return d_; }

  Vec unit(std::size_t i) const {
    Vec v(d_, 0);
    v[i] = 1;
    return v;
  }

  Vec reduce(Vec v) const {
    for (std::size_t k = 0; k < d_; ++k) {
      const auto q = floor_div(v[k], 3);
      if (q == 0) continue;
      for (std::size_t j = k; j < d_; ++j) v[j] -= q * relators_[k][j];
    }
    return v;
  }

  Vec add(const Vec& a, const Vec& b, std::int64_t cb = 1) const {
    Vec v(d_);
    for (std::size_t i = 0; i < d_; ++i) v[i] = a[i] + cb * b[i];
    return reduce(std::move(v));
  }

  // x -> s^-1 x s = (1 + t) x
  Vec sigma(const Vec& a) const {
    Vec v = a;
    for (std::size_t i = 0; i + 1 < d_; ++i) v[i + 1] += a[i];
    return reduce(std::move(v));
  }

  std::uint32_t order_of(const Vec& a) const {
    const Vec zero(d_, 0);
    Vec v = reduce(a);
    std::uint32_t n = 1;
    for (Vec cur = v; cur != zero; cur = add(cur, v)) ++n;
    return n;
  }

 private:
  std::size_t d_;
  std::vector<Vec> relators_;
};

}  // namespace

GroupSpec b3r_spec(unsigned r, unsigned gamma, unsigned max_r) {
  if (r < 4) fail(ErrorKind::InvalidInput, "B(3,r;0,gamma,0) needs r >= 4");
  if (gamma > 2) fail(ErrorKind::InvalidInput, "gamma must be 0, 1 or 2");
  if (r > max_r) {
    fail(ErrorKind::OrderCapExceeded, "r = " + std::to_string(r) + " exceeds cap " + std::to_string(max_r));
  }
  using Vec = B3rModule::Vec;
  const B3rModule mod(r, gamma);
  const std::size_t d = mod.dim();
  const Vec zero(d, 0);

  // Cyclic decomposition of the module, trying s_1, t s_1, t^2 s_1, ... first
  // and then every canonical vector.
  std::vector<Vec> candidates;
  for (std::size_t i = 0; i < d; ++i) candidates.push_back(mod.unit(i));
  for (std::uint64_t n = 1; n < ipow(3, static_cast<unsigned>(d)); ++n) {
    Vec v(d);
    for (std::size_t i = 0, m = n; i < d; ++i, m /= 3) v[i] = static_cast<std::int64_t>(m % 3);
    candidates.push_back(std::move(v));
  }
  const std::uint64_t module_order = ipow(3, r - 1);
  std::vector<Vec> basis;
  std::vector<std::uint32_t> orders;
  std::set<Vec> span{zero};
  for (const auto& y : candidates) {
    if (span.size() == module_order) break;
    const auto o = mod.order_of(y);
    bool independent = true;
    Vec m = y;
    for (std::uint32_t j = 1; j < o && independent; ++j, m = mod.add(m, y)) independent = !span.count(m);
    if (!independent) continue;
    std::set<Vec> grown;
    for (const auto& a : span) {
      Vec c = a;
      for (std::uint32_t j = 0; j < o; ++j, c = mod.add(c, y)) grown.insert(c);
    }
    span = std::move(grown);
    basis.push_back(y);
    orders.push_back(o);
  }
  if (span.size() != module_order) {
    fail(ErrorKind::RelationCheckFailed, "no cyclic decomposition of <s_1, ..., s_{r-1}>");
  }

  std::map<Vec, Key> coords;
  for (const auto& v : span) coords.emplace(v, Key{});
  {
    std::vector<std::uint32_t> c(basis.size(), 0);
    while (true) {
      Vec v(d, 0);
      for (std::size_t b = 0; b < basis.size(); ++b)
        for (std::size_t i = 0; i < d; ++i) v[i] += c[b] * basis[b][i];
      coords[mod.reduce(std::move(v))] = Key(c.begin(), c.end());
      std::size_t b = 0;
      while (b < c.size() && ++c[b] == orders[b]) c[b++] = 0;
      if (b == c.size()) break;
    }
  }

  auto base_spec = std::make_shared<GroupSpec>(abelian_spec(orders));
  const auto base = build_group(*base_spec);
  std::vector<Elem> action(base.order());
  for (Elem e = 0; e < base.order(); ++e) {
    const auto& key = base.key(e);
    Vec v(d, 0);
    for (std::size_t b = 0; b < basis.size(); ++b)
      for (std::size_t i = 0; i < d; ++i) v[i] += key[b] * basis[b][i];
    // a x a^-1 = action(x) with a = s, so action = sigma^-1 = sigma^2.
    const auto image = mod.sigma(mod.sigma(mod.reduce(std::move(v))));
    action[e] = *base.find(coords.at(image));
  }
  GroupSpec spec;
  spec.kind = SemidirectSpec{base_spec, 3, std::move(action)};
  spec.label = "B(3," + std::to_string(r) + ";0," + std::to_string(gamma) + ",0)";
  spec.prime_hint = 3;
  return spec;
}

std::vector<std::string> b3r_relation_failures(const B3rGroup& b) {
  const auto& g = b.group;
  const unsigned r = b.r;
  const Elem e = g.identity();
  auto s_at = [&](unsigned j) { return j >= r ? e : b.s_i[j]; };
  auto cube = [&](Elem x) { return g.pow(x, 3); };
  std::vector<std::string> fails;
  if (g.order() != ipow(3, r)) fails.push_back("|S| != 3^r");
  for (unsigned i = 2; i < r; ++i) {
    if (s_at(i) != g.commutator(s_at(i - 1), b.s)) {
      fails.push_back("s_" + std::to_string(i) + " != [s_" + std::to_string(i - 1) + ", s]");
    }
    if (g.commutator(s_at(1), s_at(i)) != e) fails.push_back("[s_1, s_" + std::to_string(i) + "] != 1");
  }
  if (g.mul(g.mul(cube(s_at(1)), cube(s_at(2))), s_at(3)) != g.pow(s_at(r - 1), b.gamma)) {
    fails.push_back("s_1^3 s_2^3 s_3 != s_{r-1}^gamma");
  }
  for (unsigned i = 2; i < r; ++i) {
    if (g.mul(g.mul(cube(s_at(i)), cube(s_at(i + 1))), s_at(i + 2)) != e) {
      fails.push_back("s_" + std::to_string(i) + "^3 s_" + std::to_string(i + 1) + "^3 s_" +
                      std::to_string(i + 2) + " != 1");
    }
  }
  if (cube(b.s) != e) fails.push_back("s^3 != 1");
  if (s_at(r - 1) == e) fails.push_back("s_{r-1} is trivial");
  const std::vector<Elem> gens{b.s, s_at(1)};
  if (subgroup_generated(g, gens).order() != g.order()) fails.push_back("S != <s, s_1>");
  return fails;
}

B3rGroup build_b3r(unsigned r, unsigned gamma, unsigned max_r, const Caps& caps) {
  const auto spec = b3r_spec(r, gamma, max_r);
  B3rGroup b;
  b.r = r;
  b.gamma = gamma;
  b.group = build_group(spec, caps);
  const auto& semi = std::get<SemidirectSpec>(spec.kind);
  const auto base = build_group(*semi.base);
  const auto& inv = std::get<AbelianSpec>(semi.base->kind).invariants;
  b.base_orders = inv;
  b.s = semidirect_element(b.group, base.identity(), 1);
  b.s_i.assign(r, b.group.identity());
  Key unit(inv.size(), 0);
  unit[0] = 1;
  b.s_i[1] = semidirect_element(b.group, *base.find(unit), 0);
  for (unsigned i = 2; i < r; ++i) b.s_i[i] = b.group.commutator(b.s_i[i - 1], b.s);
  const std::vector<Elem> n_gens{b.s, b.s_i[2]};
  b.N = subgroup_generated(b.group, n_gens);
  if (auto fails = b3r_relation_failures(b); !fails.empty()) {
    fail(ErrorKind::RelationCheckFailed, spec.label + ": " + fails.front());
  }
  return b;
}

OrderCensus order_census(const B3rGroup& b, unsigned l) {
  OrderCensus c{b.r, b.gamma, l, false, std::nullopt};
  const auto& g = b.group;
  const auto exp = static_cast<std::int64_t>(ipow(3, l));
  for (Elem x = 0; x < g.order(); ++x) {
    if (b.N.contains(x)) continue;
    if (g.pow(x, exp) == g.identity()) {
      c.exists_outside_N = true;
      c.witness = x;
      break;
    }
  }
  return c;
}

CellularityReport exotic_cellularity_verdict(const B3rGroup& b, unsigned l) {
  const auto census = order_census(b, l);
  CellularityReport r;
  r.axiomatized_inputs = {
      "N = <s, s_2> is strongly F-closed (external automorphism tables)",
      "a proper strongly F-closed subgroup containing s equals N (external structure lemma)",
  };
  r.citations.push_back("criterion: BF is BP-cellular iff S = Cl_F(P)");
  r.citations.push_back("Cl_F(Z/3^l) = S iff some x in S \\ N has x^(3^l) = 1");
  r.cellular = census.exists_outside_N;
  r.closure = r.cellular ? Subgroup::whole(b.group) : b.N;
  r.closure_abelian = is_abelian(r.closure);
  r.quotient_order = b.group.order() / r.closure.order();
  r.closure_normal_in_F = r.cellular ? Tristate::True : Tristate::Unknown;
  const std::string pname = "BZ/" + std::to_string(ipow(3, l));
  if (r.cellular) {
    r.verdict_text = "BF is " + pname + "-cellular: x = element " + std::to_string(*census.witness) +
                     " lies outside N with x^(3^" + std::to_string(l) + ") = 1";
  } else {
    r.verdict_text = "BF is not " + pname + "-cellular: Cl_F(Z/3^" + std::to_string(l) +
                     ") = N = <s, s_2> of index 3";
  }
  return r;
}

std::optional<GroupHom> b3r_automorphism(const B3rGroup& b, Elem image_s, Elem image_s1) {
  const auto& g = b.group;
  const std::vector<Elem> gens{b.s, b.s_i[1]};
  const std::vector<Elem> imgs{image_s, image_s1};
  auto map = extend_from_generators(g, gens, imgs, g);
  if (!map) return std::nullopt;
  std::vector<char> hit(g.order(), 0);
  for (auto y : *map) {
    if (hit[y]) return std::nullopt;
    hit[y] = 1;
  }
  return GroupHom::unchecked(Subgroup::whole(g), g, std::move(*map));
}

std::vector<GroupHom> b3r_shaped_involutions(const B3rGroup& b, bool eta_shape) {
  const auto& g = b.group;
  const Elem s1 = b.s_i[1];
  const Elem base = eta_shape ? s1 : g.inv(s1);
  std::vector<GroupHom> out;
  const auto s2_group = cyclic_subgroup(g, b.s_i[2]);
  for (auto z : s2_group.members()) {
    const Elem image_s1 = g.mul(base, z);
    for (Elem image_s = 0; image_s < g.order(); ++image_s) {
      if (g.element_order(image_s) != 3 || !b.N.contains(image_s)) continue;
      auto alpha = b3r_automorphism(b, image_s, image_s1);
      if (!alpha) continue;
      const auto& m = alpha->images();
      bool involution = false;
      for (Elem x = 0; x < g.order(); ++x) {
        if (m[m[x]] != x) {
          involution = false;
          break;
        }
        involution = involution || m[x] != x;
      }
      if (involution) out.push_back(std::move(*alpha));
    }
  }
  return out;
}

bool exotic_pi1_check(const B3rGroup& b, std::span<const GroupHom> seeds) {
  const auto& g = b.group;
  const auto s2_group = cyclic_subgroup(g, b.s_i[2]);
  const Elem s1 = b.s_i[1];
  std::vector<Elem> comms;
  std::size_t valid = 0;
  for (const auto& alpha : seeds) {
    if (!alpha.domain().parent().same_as(g) || alpha.domain().order() != g.order() ||
        !alpha.codomain().same_as(g)) {
      continue;
    }
    const auto& m = alpha.images();
    bool hom = true;
    for (Elem x = 0; x < g.order() && hom; ++x)
      for (auto y : std::vector<Elem>{b.s, s1})
        if (m[g.mul(x, y)] != g.mul(m[x], m[y])) {
          hom = false;
          break;
        }
    if (!hom || !alpha.injective()) continue;
    std::uint64_t order = 1;
    for (auto cur = m; ; ++order) {
      bool id = true;
      for (Elem x = 0; x < g.order() && id; ++x) id = cur[x] == x;
      if (id) break;
      for (auto& y : cur) y = m[y];
    }
    if (order < 2 || (order & (order - 1)) != 0) continue;
    const Elem a1 = m[s1];
    const bool eta_shape = s2_group.contains(g.mul(g.inv(s1), a1));
    const bool omega_shape = s2_group.contains(g.mul(s1, a1));
    if (!eta_shape && !omega_shape) continue;
    if (!std::all_of(b.N.members().begin(), b.N.members().end(), [&](Elem x) { return b.N.contains(m[x]); })) {
      continue;
    }
    ++valid;
    for (Elem x = 0; x < g.order(); ++x) comms.push_back(g.mul(g.inv(x), m[x]));
  }
  if (valid == 0) {
    fail(ErrorKind::ExternalDataRequired,
         "need an automorphism of 2-power order acting on s_1 as s_1 s_2^f or s_1^-1 s_2^f");
  }
  return join(b.N, comms).order() == g.order();
}

GroupSpec wreath_spec(unsigned p, unsigned n, unsigned q) {
  if (!is_prime(p) || !is_prime(q)) fail(ErrorKind::InvalidInput, "wreath product needs primes p, q");
  const auto pn = static_cast<std::uint32_t>(ipow(p, n));
  auto base_spec = std::make_shared<GroupSpec>(abelian_spec(std::vector<std::uint32_t>(q, pn)));
  const auto base = build_group(*base_spec);
  std::vector<Elem> action(base.order());
  for (Elem e = 0; e < base.order(); ++e) {
    const auto& k = base.key(e);
    Key rotated(q);
    for (unsigned i = 0; i < q; ++i) rotated[(i + 1) % q] = k[i];
    action[e] = *base.find(rotated);
  }
  GroupSpec spec;
  spec.kind = SemidirectSpec{base_spec, q, std::move(action)};
  spec.label = "Z/" + std::to_string(pn) + " wr Z/" + std::to_string(q);
  return spec;
}

FiniteGroup build_wreath(unsigned p, unsigned n, unsigned q, const Caps& caps) {
  return build_group(wreath_spec(p, n, q), caps);
}

Subgroup wreath_base(const FiniteGroup& w) {
  std::vector<Elem> members;
  for (Elem x = 0; x < w.order(); ++x)
    if (w.key(x).at(1) == 0) members.push_back(x);
  return Subgroup(w, std::move(members));
}

GroupSpec suzuki8_spec() {
  const GF2k f(3, 0xB);
  auto theta = [&](std::uint32_t x) { return f.pow(x, 4); };
  auto sab = [&](std::uint32_t a, std::uint32_t b) {
    const auto a2 = f.mul(a, a);
    return std::vector<std::vector<std::uint32_t>>{
        {1, 0, 0, 0},
        {a, 1, 0, 0},
        {b, theta(a), 1, 0},
        {f.mul(a2, theta(a)) ^ f.mul(a, b) ^ theta(b), f.mul(a, theta(a)) ^ b, a, 1},
    };
  };
  const std::uint32_t lambda = 2;  // x, a primitive element
  const auto li = f.inv(lambda);
  const std::vector<std::vector<std::uint32_t>> diag{
      {f.pow(lambda, 3), 0, 0, 0},
      {0, f.pow(lambda, 2), 0, 0},
      {0, 0, f.pow(li, 2), 0},
      {0, 0, 0, f.pow(li, 3)},
  };
  const std::vector<std::vector<std::uint32_t>> weyl{
      {0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}};
  MatrixSpec m;
  m.degree = 3;
  m.modulus = 0xB;
  m.dim = 4;
  m.generators = {sab(1, 0), sab(0, 1), diag, weyl};
  return GroupSpec{m, "Sz(8)", std::nullopt};
}

FiniteGroup build_suzuki_8(const Caps& caps) { return build_group(suzuki8_spec(), caps); }

}  // namespace fusioncell
