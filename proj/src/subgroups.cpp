#include "fusioncell/subgroups.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "fusioncell/errors.hpp"

namespace fusioncell {

namespace {

std::vector<Elem> sorted(std::vector<Elem> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Closure of the union of `seed` (already a subgroup, as a member list) and
// `extra`, by adding whole left cosets of the seed.
std::vector<Elem> coset_closure(const FiniteGroup& g, const std::vector<Elem>& seed,
                                std::span<const Elem> extra) {
  std::vector<char> mark(g.order(), 0);
  std::vector<Elem> out;
  out.reserve(seed.size());
  for (auto x : seed) {
    mark[x] = 1;
    out.push_back(x);
  }
  for (std::size_t head = 0; head < out.size(); ++head) {
    const Elem y = out[head];
    for (auto e : extra) {
      const Elem z = g.mul(y, e);
      if (mark[z]) continue;
      for (auto h : seed) {
        const Elem w = g.mul(z, h);
        mark[w] = 1;
        out.push_back(w);
      }
    }
  }
  return out;
}

std::vector<Elem> group_gens(const FiniteGroup& g) {
  if (!g.generators().empty()) return g.generators();
  return small_generating_set(Subgroup::whole(g));
}

struct VecHash {
  std::size_t operator()(const std::vector<Elem>& v) const noexcept {
    std::size_t seed = v.size();
    for (auto x : v) seed ^= x + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
    return seed;
  }
};

Subgroup normal_closure(const FiniteGroup& g, std::vector<Elem> seeds) {
  auto k = subgroup_generated(g, seeds);
  const auto gens = group_gens(g);
  bool grew = true;
  while (grew) {
    grew = false;
    for (auto x : small_generating_set(k)) {
      for (auto s : gens) {
        const Elem c = g.conj(s, x);
        if (!k.contains(c)) {
          k = join(k, std::span<const Elem>(&c, 1));
          grew = true;
        }
      }
    }
  }
  return k;
}

}  // namespace

void require_parent(const FiniteGroup& g, const Subgroup& h) {
  if (!h.parent().same_as(g)) {
    fail(ErrorKind::SubgroupMismatch, "subgroup of " + h.parent().label() + " used in " + g.label());
  }
}

Subgroup subgroup_generated(const FiniteGroup& g, std::span<const Elem> gens) {
  for (auto x : gens) {
    if (x >= g.order()) fail(ErrorKind::InvalidInput, "generator out of range");
  }
  return Subgroup(g, sorted(coset_closure(g, {g.identity()}, gens)));
}

Subgroup join(const Subgroup& h, std::span<const Elem> extra) {
  std::vector<Elem> fresh;
  for (auto x : extra)
    if (!h.contains(x)) fresh.push_back(x);
  if (fresh.empty()) return h;
  // The seed must be closed under right multiplication by itself, which it is.
  return Subgroup(h.parent(), sorted(coset_closure(h.parent(), h.members(), fresh)));
}

Subgroup join(const Subgroup& a, const Subgroup& b) {
  require_parent(a.parent(), b);
  if (b.is_subgroup_of(a)) return a;
  return join(a, small_generating_set(b));
}

Subgroup intersection(const Subgroup& a, const Subgroup& b) {
  require_parent(a.parent(), b);
  std::vector<Elem> out;
  std::set_intersection(a.members().begin(), a.members().end(), b.members().begin(),
                        b.members().end(), std::back_inserter(out));
  return Subgroup(a.parent(), std::move(out));
}

Subgroup cyclic_subgroup(const FiniteGroup& g, Elem x) {
  std::vector<Elem> out{g.identity()};
  for (Elem y = x; y != g.identity(); y = g.mul(y, x)) out.push_back(y);
  return Subgroup(g, sorted(std::move(out)));
}

std::vector<Elem> small_generating_set(const Subgroup& h) {
  const auto& g = h.parent();
  std::vector<Elem> gens;
  std::vector<Elem> cur{g.identity()};
  std::vector<char> in(g.order(), 0);
  in[g.identity()] = 1;
  for (auto x : h.members()) {
    if (in[x]) continue;
    gens.push_back(x);
    cur = coset_closure(g, cur, std::span<const Elem>(&x, 1));
    for (auto y : cur) in[y] = 1;
    if (cur.size() == h.order()) break;
  }
  return gens;
}

std::vector<Subgroup> cyclic_subgroups(const FiniteGroup& g) {
  std::unordered_set<std::vector<Elem>, VecHash> seen;
  std::vector<Subgroup> out;
  for (Elem x = 0; x < g.order(); ++x) {
    auto c = cyclic_subgroup(g, x);
    if (seen.insert(c.members()).second) out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& g, const Caps& caps) {
  if (g.order() > caps.max_enumeration) {
    fail(ErrorKind::OrderCapExceeded, "subgroup enumeration of a group of order " +
                                          std::to_string(g.order()) + " exceeds cap " +
                                          std::to_string(caps.max_enumeration));
  }
  const auto cyclic = cyclic_subgroups(g);
  // One generator per cyclic subgroup.
  std::vector<Elem> cyc_gens;
  for (const auto& c : cyclic) {
    for (auto x : c.members()) {
      if (g.element_order(x) == c.order()) {
        cyc_gens.push_back(x);
        break;
      }
    }
  }
  std::unordered_set<std::vector<Elem>, VecHash> seen;
  std::vector<Subgroup> out;
  std::vector<std::size_t> work;
  for (const auto& c : cyclic) {
    seen.insert(c.members());
    out.push_back(c);
    work.push_back(out.size() - 1);
  }
  while (!work.empty()) {
    const Subgroup h = out[work.back()];
    work.pop_back();
    for (auto x : cyc_gens) {
      if (h.contains(x)) continue;
      auto k = join(h, std::span<const Elem>(&x, 1));
      if (seen.insert(k.members()).second) {
        out.push_back(std::move(k));
        work.push_back(out.size() - 1);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Subgroup center(const FiniteGroup& g) { return centralizer(g, Subgroup::whole(g)); }

Subgroup centralizer(const FiniteGroup& g, const Subgroup& h) {
  require_parent(g, h);
  const auto gens = h.order() == g.order() ? group_gens(g) : small_generating_set(h);
  std::vector<Elem> out;
  for (Elem x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (auto y : gens) {
      if (g.mul(x, y) != g.mul(y, x)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(x);
  }
  return Subgroup(g, std::move(out));
}

Subgroup normalizer(const FiniteGroup& g, const Subgroup& h) {
  require_parent(g, h);
  const auto gens = small_generating_set(h);
  std::vector<Elem> out;
  for (Elem x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (auto y : gens) {
      if (!h.contains(g.conj(x, y))) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(x);
  }
  return Subgroup(g, std::move(out));
}

Subgroup conjugate(const FiniteGroup& g, Elem x, const Subgroup& h) {
  require_parent(g, h);
  std::vector<Elem> out;
  out.reserve(h.order());
  for (auto y : h.members()) out.push_back(g.conj(x, y));
  return Subgroup(g, sorted(std::move(out)));
}

bool is_normal(const FiniteGroup& g, const Subgroup& h) {
  require_parent(g, h);
  const auto hg = small_generating_set(h);
  for (auto s : group_gens(g))
    for (auto y : hg)
      if (!h.contains(g.conj(s, y))) return false;
  return true;
}

bool is_abelian(const Subgroup& h) {
  const auto& g = h.parent();
  const auto gens = small_generating_set(h);
  for (auto a : gens)
    for (auto b : gens)
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

Subgroup commutator_subgroup(const FiniteGroup& g) {
  const auto gens = group_gens(g);
  std::vector<Elem> seeds;
  for (auto a : gens)
    for (auto b : gens) seeds.push_back(g.commutator(a, b));
  return normal_closure(g, std::move(seeds));
}

Subgroup frattini_p(const FiniteGroup& g, unsigned p) {
  const auto gens = group_gens(g);
  std::vector<Elem> seeds;
  for (auto a : gens) {
    seeds.push_back(g.pow(a, p));
    for (auto b : gens) seeds.push_back(g.commutator(a, b));
  }
  return normal_closure(g, std::move(seeds));
}

std::uint64_t p_part(std::uint64_t n, unsigned p) {
  std::uint64_t r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Subgroup sylow_subgroup(const FiniteGroup& g, unsigned p) {
  if (!is_prime(p)) fail(ErrorKind::InvalidInput, std::to_string(p) + " is not prime");
  const auto target = p_part(g.order(), p);
  if (target == 1) return Subgroup::trivial(g);
  Elem start = g.identity();
  for (Elem x = 0; x < g.order(); ++x) {
    if (g.element_order(x) == p) {
      start = x;
      break;
    }
  }
  Subgroup s = cyclic_subgroup(g, start);
  while (s.order() < target) {
    const auto n = normalizer(g, s);
    bool grown = false;
    for (auto y : n.members()) {
      if (s.contains(y) || !s.contains(g.pow(y, p))) continue;
      s = join(s, std::span<const Elem>(&y, 1));
      grown = true;
      break;
    }
    if (!grown) fail(ErrorKind::InvariantViolation, "normalizer climbing stalled");
  }
  return s;
}

std::uint64_t exponent(const FiniteGroup& g) {
  std::uint64_t e = 1;
  for (Elem x = 0; x < g.order(); ++x) e = std::lcm(e, g.element_order(x));
  return e;
}

Embedded as_group(const Subgroup& h, std::string label, const Caps& caps) {
  const auto& parent = h.parent();
  std::vector<Key> keys;
  keys.reserve(h.order());
  for (auto x : h.members()) keys.push_back(Key{x});
  auto compose = [parent](const Key& a, const Key& b) { return Key{parent.mul(a[0], b[0])}; };
  std::optional<unsigned> prime = parent.prime_hint();
  auto group = FiniteGroup::from_elements(std::move(keys), Key{parent.identity()}, compose,
                                          std::move(label), caps, prime);
  return Embedded{std::move(group), h.members()};
}

Quotient quotient(const FiniteGroup& g, const Subgroup& k, const Caps& caps) {
  require_parent(g, k);
  if (!is_normal(g, k)) fail(ErrorKind::InvalidInput, "quotient by a non-normal subgroup");
  constexpr Elem kUnset = ~Elem{0};
  std::vector<Elem> rep(g.order(), kUnset);
  std::vector<Elem> coset_of(g.order(), kUnset);
  std::vector<Key> keys;
  for (Elem x = 0; x < g.order(); ++x) {
    if (rep[x] != kUnset) continue;
    const auto idx = static_cast<Elem>(keys.size());
    keys.push_back(Key{x});
    for (auto y : k.members()) {
      const Elem z = g.mul(x, y);
      rep[z] = x;
      coset_of[z] = idx;
    }
  }
  auto compose = [g, rep](const Key& a, const Key& b) { return Key{rep[g.mul(a[0], b[0])]}; };
  auto group = FiniteGroup::from_elements(std::move(keys), Key{rep[g.identity()]}, compose,
                                          g.label() + "/K", caps, g.prime_hint());
  return Quotient{std::move(group), std::move(coset_of)};
}

}  // namespace fusioncell
