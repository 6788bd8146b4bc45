#include "fusioncell/homs.hpp"

#include <algorithm>

#include "fusioncell/errors.hpp"
#include "fusioncell/subgroups.hpp"

namespace fusioncell {

namespace {

std::optional<unsigned> prime_of_p_group(const FiniteGroup& g) {
  if (g.order() == 1) return std::nullopt;
  std::size_t n = g.order();
  for (unsigned p = 2; p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    return n == 1 ? std::optional<unsigned>(p) : std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

std::vector<Elem> minimal_generating_set(const FiniteGroup& g) {
  const auto p = prime_of_p_group(g);
  if (!p) return small_generating_set(Subgroup::whole(g));
  Subgroup cur = frattini_p(g, *p);
  std::vector<Elem> gens;
  for (Elem x = 0; x < g.order() && cur.order() < g.order(); ++x) {
    if (cur.contains(x)) continue;
    gens.push_back(x);
    cur = join(cur, std::span<const Elem>(&x, 1));
  }
  return gens;
}

std::optional<std::vector<Elem>> extend_from_generators(const FiniteGroup& domain,
                                                        std::span<const Elem> gens,
                                                        std::span<const Elem> images,
                                                        const FiniteGroup& codomain) {
  constexpr Elem kUnset = ~Elem{0};
  std::vector<Elem> map(domain.order(), kUnset);
  std::vector<Elem> queue{domain.identity()};
  map[domain.identity()] = codomain.identity();
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Elem x = queue[head];
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const Elem y = domain.mul(x, gens[i]);
      const Elem v = codomain.mul(map[x], images[i]);
      if (map[y] == kUnset) {
        map[y] = v;
        queue.push_back(y);
      } else if (map[y] != v) {
        return std::nullopt;
      }
    }
  }
  if (queue.size() != domain.order()) return std::nullopt;
  return map;
}

std::vector<GroupHom> enumerate_homs(const FiniteGroup& p, const FiniteGroup& s, const Caps& caps) {
  if (p.order() > caps.max_enumeration || s.order() > caps.max_enumeration) {
    fail(ErrorKind::OrderCapExceeded, "homomorphism enumeration exceeds cap");
  }
  const auto gens = minimal_generating_set(p);
  std::vector<std::vector<Elem>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const auto n = p.element_order(gens[i]);
    for (Elem y = 0; y < s.order(); ++y)
      if (n % s.element_order(y) == 0) candidates[i].push_back(y);
  }
  std::vector<std::vector<Elem>> maps;
  std::vector<Elem> images(gens.size());
  auto rec = [&](auto&& self, std::size_t depth) -> void {
    if (depth == gens.size()) {
      if (auto m = extend_from_generators(p, gens, images, s)) maps.push_back(std::move(*m));
      return;
    }
    for (auto y : candidates[depth]) {
      images[depth] = y;
      self(self, depth + 1);
    }
  };
  rec(rec, 0);
  std::sort(maps.begin(), maps.end());
  std::vector<GroupHom> out;
  out.reserve(maps.size());
  const auto domain = Subgroup::whole(p);
  for (auto& m : maps) out.push_back(GroupHom::unchecked(domain, s, std::move(m)));
  return out;
}

}  // namespace fusioncell
