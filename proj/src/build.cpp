#include "fusioncell/build.hpp"

#include <algorithm>
#include <numeric>

#include "fusioncell/errors.hpp"
#include "fusioncell/gf2k.hpp"

namespace fusioncell {

namespace {

FiniteGroup build_perm(const PermSpec& spec, const std::string& label, const Caps& caps,
                       std::optional<unsigned> prime) {
  if (spec.degree == 0) fail(ErrorKind::InvalidSpec, "permutation degree must be positive");
  std::vector<Key> gens;
  for (const auto& g : spec.generators) {
    if (g.size() != spec.degree) fail(ErrorKind::InvalidSpec, "generator length != degree");
    std::vector<bool> hit(spec.degree, false);
    for (auto v : g) {
      if (v >= spec.degree || hit[v]) fail(ErrorKind::InvalidSpec, "generator is not a bijection");
      hit[v] = true;
    }
    gens.emplace_back(g.begin(), g.end());
  }
  Key id(spec.degree);
  std::iota(id.begin(), id.end(), 0u);
  auto compose = [](const Key& x, const Key& y) {
    Key r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = y[x[i]];
    return r;
  };
  return FiniteGroup::closure(gens, id, compose, label.empty() ? "perm" : label, caps, prime);
}

FiniteGroup build_abelian(const AbelianSpec& spec, const std::string& label, const Caps& caps,
                          std::optional<unsigned> prime) {
  std::vector<std::uint32_t> inv = spec.invariants;
  std::uint64_t total = 1;
  for (auto n : inv) {
    if (n == 0) fail(ErrorKind::InvalidSpec, "cyclic factor of order 0");
    total *= n;
    if (total > caps.max_order) fail(ErrorKind::OrderCapExceeded, "abelian group exceeds cap");
  }
  std::vector<Key> gens;
  for (std::size_t i = 0; i < inv.size(); ++i) {
    if (inv[i] == 1) continue;
    Key g(inv.size(), 0);
    g[i] = 1;
    gens.push_back(std::move(g));
  }
  auto compose = [inv](const Key& x, const Key& y) {
    Key r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = (x[i] + y[i]) % inv[i];
    return r;
  };
  std::string name = label;
  if (name.empty()) {
    for (auto n : inv) name += (name.empty() ? "Z/" : " x Z/") + std::to_string(n);
    if (name.empty()) name = "1";
  }
  return FiniteGroup::closure(gens, Key(inv.size(), 0), compose, name, caps, prime);
}

FiniteGroup build_matrix(const MatrixSpec& spec, const std::string& label, const Caps& caps,
                         std::optional<unsigned> prime) {
  auto field = std::make_shared<GF2k>(spec.degree, spec.modulus);
  const std::size_t d = spec.dim;
  if (d == 0) fail(ErrorKind::InvalidSpec, "matrix dimension must be positive");
  auto compose = [field, d](const Key& x, const Key& y) {
    Key r(d * d, 0);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t k = 0; k < d; ++k) {
        const auto a = x[i * d + k];
        if (a == 0) continue;
        for (std::size_t j = 0; j < d; ++j) r[i * d + j] ^= field->mul(a, y[k * d + j]);
      }
    return r;
  };
  // Invertibility by Gaussian elimination.
  auto invertible = [&](Key m) {
    for (std::size_t c = 0; c < d; ++c) {
      std::size_t piv = c;
      while (piv < d && m[piv * d + c] == 0) ++piv;
      if (piv == d) return false;
      for (std::size_t j = 0; j < d; ++j) std::swap(m[c * d + j], m[piv * d + j]);
      const auto s = field->inv(m[c * d + c]);
      for (std::size_t j = 0; j < d; ++j) m[c * d + j] = field->mul(m[c * d + j], s);
      for (std::size_t r = 0; r < d; ++r) {
        if (r == c || m[r * d + c] == 0) continue;
        const auto f = m[r * d + c];
        for (std::size_t j = 0; j < d; ++j) m[r * d + j] ^= field->mul(f, m[c * d + j]);
      }
    }
    return true;
  };
  std::vector<Key> gens;
  for (const auto& g : spec.generators) {
    if (g.size() != d) fail(ErrorKind::InvalidSpec, "matrix has wrong number of rows");
    Key flat;
    for (const auto& row : g) {
      if (row.size() != d) fail(ErrorKind::InvalidSpec, "matrix row has wrong length");
      for (auto v : row) {
        if (v >= field->size()) fail(ErrorKind::InvalidSpec, "matrix entry outside the field");
        flat.push_back(v);
      }
    }
    if (!invertible(flat)) fail(ErrorKind::InvalidSpec, "generator matrix is singular");
    gens.push_back(std::move(flat));
  }
  Key id(d * d, 0);
  for (std::size_t i = 0; i < d; ++i) id[i * d + i] = 1;
  return FiniteGroup::closure(gens, id, compose, label.empty() ? "matrix" : label, caps, prime);
}

}  // namespace

FiniteGroup build_semidirect(const FiniteGroup& base, std::uint32_t actor_order,
                             const std::vector<Elem>& action, std::string label, const Caps& caps) {
  const auto n = static_cast<Elem>(base.order());
  if (actor_order == 0) fail(ErrorKind::InvalidSpec, "actor order must be positive");
  if (action.size() != n) fail(ErrorKind::InvalidSpec, "action must map every base element");
  std::vector<bool> hit(n, false);
  for (auto v : action) {
    if (v >= n || hit[v]) fail(ErrorKind::InvalidSpec, "action is not a bijection");
    hit[v] = true;
  }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (action[base.mul(a, b)] != base.mul(action[a], action[b])) {
        fail(ErrorKind::InvalidSpec, "action is not an automorphism");
      }
  // powers[i][b] = action^i(b)
  std::vector<std::vector<Elem>> powers(actor_order, std::vector<Elem>(n));
  for (Elem b = 0; b < n; ++b) powers[0][b] = b;
  for (std::uint32_t i = 1; i < actor_order; ++i)
    for (Elem b = 0; b < n; ++b) powers[i][b] = action[powers[i - 1][b]];
  for (Elem b = 0; b < n; ++b) {
    if (action[powers[actor_order - 1][b]] != b) {
      fail(ErrorKind::InvalidSpec, "action order does not divide the actor order");
    }
  }
  auto compose = [base, powers, actor_order](const Key& x, const Key& y) {
    return Key{base.mul(x[0], powers[x[1]][y[0]]), (x[1] + y[1]) % actor_order};
  };
  std::vector<Key> gens;
  auto base_gens = base.generators();
  if (base_gens.empty()) {
    for (Elem b = 0; b < n; ++b)
      if (b != base.identity()) base_gens.push_back(b);
  }
  for (auto b : base_gens) gens.push_back(Key{b, 0});
  if (actor_order > 1) gens.push_back(Key{base.identity(), 1});
  return FiniteGroup::closure(gens, Key{base.identity(), 0}, compose, std::move(label), caps);
}

Elem semidirect_element(const FiniteGroup& g, Elem base_elem, std::uint32_t actor_power) {
  auto e = g.find(Key{base_elem, actor_power});
  if (!e) fail(ErrorKind::InvalidInput, "not a semidirect product element");
  return *e;
}

FiniteGroup build_group(const GroupSpec& spec, const Caps& caps) {
  const auto& label = spec.label;
  const auto prime = spec.prime_hint;
  return std::visit(
      [&](const auto& s) -> FiniteGroup {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, PermSpec>) {
          return build_perm(s, label, caps, prime);
        } else if constexpr (std::is_same_v<T, TableSpec>) {
          if (s.table.size() > caps.max_order) fail(ErrorKind::OrderCapExceeded, "table exceeds cap");
          return FiniteGroup::from_table(s.table, label.empty() ? "table" : label, prime);
        } else if constexpr (std::is_same_v<T, SemidirectSpec>) {
          if (!s.base) fail(ErrorKind::InvalidSpec, "semidirect product without a base");
          auto base = build_group(*s.base, caps);
          auto g = build_semidirect(base, s.actor_order, s.action,
                                    label.empty() ? "(" + base.label() + ") : Z/" +
                                                        std::to_string(s.actor_order)
                                                  : label,
                                    caps);
          return prime ? g.relabeled(g.label(), prime) : g;
        } else if constexpr (std::is_same_v<T, MatrixSpec>) {
          return build_matrix(s, label, caps, prime);
        } else {
          return build_abelian(s, label, caps, prime);
        }
      },
      spec.kind);
}

GroupSpec cyclic_spec(std::uint32_t n) {
  return GroupSpec{AbelianSpec{{n}}, "Z/" + std::to_string(n), std::nullopt};
}

GroupSpec abelian_spec(std::vector<std::uint32_t> invariants) {
  return GroupSpec{AbelianSpec{std::move(invariants)}, "", std::nullopt};
}

GroupSpec symmetric_spec(std::size_t n) {
  PermSpec p{n, {}};
  if (n >= 2) {
    std::vector<std::uint32_t> t(n), c(n);
    std::iota(t.begin(), t.end(), 0u);
    std::swap(t[0], t[1]);
    for (std::size_t i = 0; i < n; ++i) c[i] = static_cast<std::uint32_t>((i + 1) % n);
    p.generators = {t, c};
  }
  return GroupSpec{p, "Sym(" + std::to_string(n) + ")", std::nullopt};
}

GroupSpec alternating_spec(std::size_t n) {
  PermSpec p{n, {}};
  for (std::size_t i = 0; i + 2 < n; ++i) {
    std::vector<std::uint32_t> c(n);
    std::iota(c.begin(), c.end(), 0u);
    c[i] = static_cast<std::uint32_t>(i + 1);
    c[i + 1] = static_cast<std::uint32_t>(i + 2);
    c[i + 2] = static_cast<std::uint32_t>(i);
    p.generators.push_back(c);
  }
  return GroupSpec{p, "Alt(" + std::to_string(n) + ")", std::nullopt};
}

GroupSpec dihedral_spec(std::size_t order) {
  if (order < 2 || order % 2 != 0) fail(ErrorKind::InvalidSpec, "dihedral order must be even");
  const std::size_t n = order / 2;
  if (n < 3) {
    // D2 = Z/2, D4 = Z/2 x Z/2
    return GroupSpec{AbelianSpec{n == 1 ? std::vector<std::uint32_t>{2}
                                        : std::vector<std::uint32_t>{2, 2}},
                     "D" + std::to_string(order), std::nullopt};
  }
  std::vector<std::uint32_t> rot(n), ref(n);
  for (std::size_t i = 0; i < n; ++i) {
    rot[i] = static_cast<std::uint32_t>((i + 1) % n);
    ref[i] = static_cast<std::uint32_t>((n - i) % n);
  }
  return GroupSpec{PermSpec{n, {rot, ref}}, "D" + std::to_string(order), std::nullopt};
}

}  // namespace fusioncell
