#include "fusioncell/group.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <unordered_map>

#include "fusioncell/errors.hpp"

namespace fusioncell {

std::size_t KeyHash::operator()(const Key& key) const noexcept {
  std::size_t seed = key.size();
  for (auto v : key) {
    seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
  }
  return seed;
}

struct FiniteGroup::Data {
  std::size_t order = 1;
  Elem identity = 0;
  std::string label;
  std::optional<unsigned> prime_hint;
  // Row-major; empty when the group is above the dense limit.
  std::vector<std::uint16_t> table;
  std::vector<Elem> inverse;
  std::vector<std::uint64_t> orders;
  std::vector<Key> keys;
  std::unordered_map<Key, Elem, KeyHash> index;
  Compose compose;
  std::vector<Elem> generators;

  Elem mul(Elem a, Elem b) const {
    if (!table.empty()) return table[static_cast<std::size_t>(a) * order + b];
    auto it = index.find(compose(keys[a], keys[b]));
    if (it == index.end()) fail(ErrorKind::InvariantViolation, "product left the element set");
    return it->second;
  }

  void finish_orders() {
    inverse.assign(order, 0);
    orders.assign(order, 1);
    for (Elem x = 0; x < order; ++x) {
      Elem prev = identity;
      Elem y = x;
      std::uint64_t k = 1;
      while (y != identity) {
        prev = y;
        y = mul(y, x);
        ++k;
        if (k > order + 1) fail(ErrorKind::InvalidSpec, "element of infinite order");
      }
      orders[x] = k;
      inverse[x] = (x == identity) ? identity : prev;
    }
  }
};

FiniteGroup::FiniteGroup() {
  auto d = std::make_shared<Data>();
  d->label = "1";
  d->keys = {Key{}};
  d->index.emplace(Key{}, 0);
  d->compose = [](const Key&, const Key&) { return Key{}; };
  d->table = {0};
  d->inverse = {0};
  d->orders = {1};
  d_ = std::move(d);
}

FiniteGroup FiniteGroup::from_elements(std::vector<Key> keys, const Key& identity, Compose compose,
                                       std::string label, const Caps& caps,
                                       std::optional<unsigned> prime_hint) {
  if (keys.size() > caps.max_order) {
    fail(ErrorKind::OrderCapExceeded,
         "group of order " + std::to_string(keys.size()) + " exceeds cap " +
             std::to_string(caps.max_order));
  }
  auto d = std::make_shared<Data>();
  d->order = keys.size();
  d->label = std::move(label);
  d->prime_hint = prime_hint;
  d->compose = std::move(compose);
  d->index.reserve(keys.size());
  for (Elem i = 0; i < keys.size(); ++i) {
    if (!d->index.emplace(keys[i], i).second) fail(ErrorKind::InvalidSpec, "duplicate element");
  }
  d->keys = std::move(keys);
  auto id = d->index.find(identity);
  if (id == d->index.end()) fail(ErrorKind::InvalidSpec, "identity missing from element set");
  d->identity = id->second;

  if (d->order <= caps.dense_table_limit) {
    const auto n = d->order;
    d->table.resize(n * n);
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        auto it = d->index.find(d->compose(d->keys[a], d->keys[b]));
        if (it == d->index.end()) fail(ErrorKind::InvalidSpec, "element set is not closed");
        d->table[static_cast<std::size_t>(a) * n + b] = static_cast<std::uint16_t>(it->second);
      }
    }
  }
  d->finish_orders();
  return FiniteGroup(std::move(d));
}

FiniteGroup FiniteGroup::closure(std::span<const Key> generators, const Key& identity,
                                 Compose compose, std::string label, const Caps& caps,
                                 std::optional<unsigned> prime_hint) {
  std::vector<Key> keys{identity};
  std::unordered_map<Key, Elem, KeyHash> seen{{identity, 0}};
  for (std::size_t head = 0; head < keys.size(); ++head) {
    for (const auto& g : generators) {
      Key y = compose(keys[head], g);
      if (seen.contains(y)) continue;
      if (keys.size() >= caps.max_order) {
        fail(ErrorKind::OrderCapExceeded,
             "closure of " + label + " exceeds order cap " + std::to_string(caps.max_order));
      }
      seen.emplace(y, static_cast<Elem>(keys.size()));
      keys.push_back(std::move(y));
    }
  }
  auto group = from_elements(std::move(keys), identity, std::move(compose), std::move(label), caps,
                             prime_hint);
  auto d = std::const_pointer_cast<Data>(group.d_);
  for (const auto& g : generators) d->generators.push_back(d->index.at(g));
  return group;
}

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<Elem>>& table, std::string label,
                                    std::optional<unsigned> prime_hint) {
  const std::size_t n = table.size();
  if (n == 0) fail(ErrorKind::InvalidSpec, "empty multiplication table");
  if (n > 65535) fail(ErrorKind::OrderCapExceeded, "table too large");
  for (const auto& row : table) {
    if (row.size() != n) fail(ErrorKind::InvalidSpec, "table is not square");
    std::vector<bool> hit(n, false);
    for (auto v : row) {
      if (v >= n || hit[v]) fail(ErrorKind::InvalidSpec, "table row is not a permutation");
      hit[v] = true;
    }
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<bool> hit(n, false);
    for (std::size_t r = 0; r < n; ++r) {
      if (hit[table[r][c]]) fail(ErrorKind::InvalidSpec, "table column is not a permutation");
      hit[table[r][c]] = true;
    }
  }
  std::optional<Elem> identity;
  for (Elem e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (Elem x = 0; x < n && ok; ++x) ok = table[e][x] == x && table[x][e] == x;
    if (ok) identity = e;
  }
  if (!identity) fail(ErrorKind::InvalidSpec, "table has no identity");

  auto d = std::make_shared<Data>();
  d->order = n;
  d->identity = *identity;
  d->label = std::move(label);
  d->prime_hint = prime_hint;
  d->table.resize(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) d->table[r * n + c] = static_cast<std::uint16_t>(table[r][c]);
  }
  d->finish_orders();
  FiniteGroup g(std::move(d));
  auto axioms = verify_group_axioms(g);
  if (!axioms.ok) fail(ErrorKind::InvalidSpec, "table is not a group: " + axioms.failure);
  return g;
}

void FiniteGroup::check(Elem a) const {
  if (a >= d_->order) {
    fail(ErrorKind::InvalidInput,
         "element " + std::to_string(a) + " out of range for group of order " +
             std::to_string(d_->order));
  }
}

std::size_t FiniteGroup::order() const { return d_->order; }
Elem FiniteGroup::identity() const { return d_->identity; }

Elem FiniteGroup::mul(Elem a, Elem b) const { return d_->mul(a, b); }

Elem FiniteGroup::inv(Elem a) const { return d_->inverse[a]; }

Elem FiniteGroup::pow(Elem a, std::int64_t e) const {
  check(a);
  const auto n = static_cast<std::int64_t>(d_->orders[a]);
  e %= n;
  if (e < 0) e += n;
  Elem result = d_->identity;
  Elem base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Elem FiniteGroup::conj(Elem g, Elem x) const { return mul(mul(g, x), inv(g)); }

Elem FiniteGroup::commutator(Elem x, Elem y) const {
  return mul(mul(inv(x), inv(y)), mul(x, y));
}

std::uint64_t FiniteGroup::element_order(Elem a) const {
  check(a);
  return d_->orders[a];
}

const std::string& FiniteGroup::label() const { return d_->label; }
std::optional<unsigned> FiniteGroup::prime_hint() const { return d_->prime_hint; }

FiniteGroup FiniteGroup::relabeled(std::string label, std::optional<unsigned> prime_hint) const {
  auto d = std::make_shared<Data>(*d_);
  d->label = std::move(label);
  d->prime_hint = prime_hint;
  return FiniteGroup(std::move(d));
}

bool FiniteGroup::has_keys() const { return !d_->keys.empty(); }

const Key& FiniteGroup::key(Elem a) const {
  check(a);
  if (d_->keys.empty()) fail(ErrorKind::InvalidInput, "group has no element realization");
  return d_->keys[a];
}

std::optional<Elem> FiniteGroup::find(const Key& key) const {
  auto it = d_->index.find(key);
  if (it == d_->index.end()) return std::nullopt;
  return it->second;
}

const std::vector<Elem>& FiniteGroup::generators() const { return d_->generators; }

bool FiniteGroup::has_dense_table() const { return !d_->table.empty(); }

bool FiniteGroup::is_abelian() const {
  const auto n = static_cast<Elem>(order());
  const auto& gens = d_->generators;
  if (!gens.empty()) {
    for (auto a : gens)
      for (auto b : gens)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = a + 1; b < n; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

bool FiniteGroup::is_p_group(unsigned p) const {
  std::size_t n = order();
  while (n % p == 0) n /= p;
  return n == 1;
}

bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
  if (a.same_as(b)) return true;
  if (a.order() != b.order() || a.identity() != b.identity()) return false;
  const auto n = static_cast<Elem>(a.order());
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (a.mul(x, y) != b.mul(x, y)) return false;
  return true;
}

Subgroup::Subgroup(FiniteGroup parent, std::vector<Elem> sorted_members)
    : parent_(std::move(parent)), members_(std::move(sorted_members)) {}

Subgroup Subgroup::trivial(const FiniteGroup& g) { return Subgroup(g, {g.identity()}); }

Subgroup Subgroup::whole(const FiniteGroup& g) {
  std::vector<Elem> all(g.order());
  for (Elem i = 0; i < all.size(); ++i) all[i] = i;
  return Subgroup(g, std::move(all));
}

bool Subgroup::contains(Elem x) const {
  return std::binary_search(members_.begin(), members_.end(), x);
}

std::optional<std::size_t> Subgroup::position(Elem x) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), x);
  if (it == members_.end() || *it != x) return std::nullopt;
  return static_cast<std::size_t>(it - members_.begin());
}

bool Subgroup::is_subgroup_of(const Subgroup& other) const {
  return std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                       members_.end());
}

bool operator<(const Subgroup& a, const Subgroup& b) {
  if (a.members_.size() != b.members_.size()) return a.members_.size() < b.members_.size();
  return a.members_ < b.members_;
}

void validate_subgroup(const Subgroup& h) {
  const auto& g = h.parent();
  const auto& m = h.members();
  if (m.empty() || !std::is_sorted(m.begin(), m.end()) ||
      std::adjacent_find(m.begin(), m.end()) != m.end()) {
    fail(ErrorKind::InvalidInput, "member list must be non-empty and strictly sorted");
  }
  if (m.back() >= g.order()) fail(ErrorKind::InvalidInput, "member out of range");
  if (!h.contains(g.identity())) fail(ErrorKind::InvalidInput, "subset misses the identity");
  if (g.order() % m.size() != 0) fail(ErrorKind::InvalidInput, "order does not divide parent order");
  for (auto x : m) {
    if (!h.contains(g.inv(x))) fail(ErrorKind::InvalidInput, "subset not closed under inverses");
    for (auto y : m) {
      if (!h.contains(g.mul(x, y))) fail(ErrorKind::InvalidInput, "subset not closed under products");
    }
  }
}

GroupHom GroupHom::make(Subgroup domain, FiniteGroup codomain, std::vector<Elem> images) {
  const auto& m = domain.members();
  if (images.size() != m.size()) fail(ErrorKind::InvalidInput, "map is not total on the domain");
  for (auto y : images) {
    if (y >= codomain.order()) fail(ErrorKind::InvalidInput, "map image out of range");
  }
  const auto& g = domain.parent();
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      auto pos = domain.position(g.mul(m[i], m[j]));
      if (!pos) fail(ErrorKind::InvalidInput, "domain is not a subgroup");
      if (images[*pos] != codomain.mul(images[i], images[j])) {
        fail(ErrorKind::InvalidInput, "map is not a homomorphism");
      }
    }
  }
  return GroupHom(std::move(domain), std::move(codomain), std::move(images));
}

GroupHom GroupHom::unchecked(Subgroup domain, FiniteGroup codomain, std::vector<Elem> images) {
  return GroupHom(std::move(domain), std::move(codomain), std::move(images));
}

Elem GroupHom::operator()(Elem x) const {
  auto pos = domain_.position(x);
  if (!pos) fail(ErrorKind::InvalidInput, "element outside homomorphism domain");
  return images_[*pos];
}

Subgroup GroupHom::image() const {
  std::vector<Elem> img = images_;
  std::sort(img.begin(), img.end());
  img.erase(std::unique(img.begin(), img.end()), img.end());
  return Subgroup(codomain_, std::move(img));
}

bool GroupHom::injective() const { return image().order() == domain_.order(); }

AxiomReport verify_group_axioms(const FiniteGroup& g, std::uint64_t seed, std::size_t samples) {
  const auto n = static_cast<Elem>(g.order());
  const Elem e = g.identity();
  for (Elem x = 0; x < n; ++x) {
    if (g.mul(e, x) != x || g.mul(x, e) != x) return {false, "identity fails at " + std::to_string(x)};
    if (g.mul(x, g.inv(x)) != e || g.mul(g.inv(x), x) != e) {
      return {false, "inverse fails at " + std::to_string(x)};
    }
  }
  auto assoc = [&](Elem a, Elem b, Elem c) { return g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)); };
  if (n <= 512) {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        for (Elem c = 0; c < n; ++c)
          if (!assoc(a, b, c)) return {false, "associativity fails"};
    return {};
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Elem> pick(0, n - 1);
  for (std::size_t i = 0; i < samples; ++i) {
    if (!assoc(pick(rng), pick(rng), pick(rng))) return {false, "associativity fails"};
  }
  return {};
}

}  // namespace fusioncell
