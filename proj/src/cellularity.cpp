#include "fusioncell/cellularity.hpp"

#include <algorithm>
#include <set>

#include "fusioncell/errors.hpp"
#include "fusioncell/homs.hpp"

namespace fusioncell {

namespace {

bool is_cyclic(const FiniteGroup& g) {
  for (Elem x = 0; x < g.order(); ++x)
    if (g.element_order(x) == g.order()) return true;
  return false;
}

std::vector<Elem> sorted_copy(std::vector<Elem> v) {
  std::sort(v.begin(), v.end());
  return v;
}

void require_morphisms(const FusionSystem& f, const std::string& op) {
  if (f.coverage() == Coverage::None) {
    fail(ErrorKind::ExternalDataRequired,
         op + " needs morphism tables; the fusion system is " + to_string(f.provenance()));
  }
}

void require_full(const FusionSystem& f, const std::string& op) {
  if (f.coverage() != Coverage::Full) {
    fail(ErrorKind::ExternalDataRequired,
         op + " needs morphisms on every subgroup; coverage is " + to_string(f.coverage()));
  }
}

}  // namespace

std::string to_string(Tristate t) {
  switch (t) {
    case Tristate::False: return "false";
    case Tristate::True: return "true";
    case Tristate::Unknown: return "unknown";
  }
  return "unknown";
}

Subgroup strong_closure(const FusionSystem& f, const Subgroup& seed) {
  require_parent(f.S(), seed);
  require_morphisms(f, "Cl_F");
  Subgroup k = seed;
  while (true) {
    std::vector<char> done(f.objects().size(), 0);
    std::vector<Elem> fresh;
    for (auto x : k.members()) {
      const auto idx = f.cyclic_index(x);
      if (!idx) fail(ErrorKind::ExternalDataRequired, "cyclic subgroup without morphism data");
      if (done[*idx]) continue;
      done[*idx] = 1;
      for (const auto& m : f.maps(*idx))
        for (auto y : m)
          if (!k.contains(y)) fresh.push_back(y);
    }
    if (fresh.empty()) return k;
    k = join(k, fresh);
  }
}

Subgroup hom_image_span(const FiniteGroup& s, const FiniteGroup& p, const Caps& caps) {
  if (is_cyclic(p)) {
    std::vector<Elem> gens;
    for (Elem y = 0; y < s.order(); ++y)
      if (p.order() % s.element_order(y) == 0) gens.push_back(y);
    return subgroup_generated(s, gens);
  }
  std::vector<Elem> gens;
  for (const auto& h : enumerate_homs(p, s, caps))
    for (auto y : h.images()) gens.push_back(y);
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return subgroup_generated(s, gens);
}

Subgroup cl_closure(const FusionSystem& f, const FiniteGroup& p, const Caps& caps) {
  require_morphisms(f, "Cl_F");
  return strong_closure(f, hom_image_span(f.S(), p, caps));
}

CellularityReport is_BP_cellular(const FusionSystem& f, const FiniteGroup& p, const Caps& caps) {
  CellularityReport r;
  r.closure = cl_closure(f, p, caps);
  const auto s_order = f.S().order();
  r.cellular = r.closure.order() == s_order;
  r.closure_abelian = is_abelian(r.closure);
  r.quotient_order = s_order / r.closure.order();
  r.closure_normal_in_F = r.cellular ? Tristate::True : is_normal_in_F(f, r.closure);
  r.citations.push_back("criterion: BF is BP-cellular iff S = Cl_F(P)");
  if (r.cellular) {
    r.verdict_text = "BF is B" + p.label() + "-cellular: Cl_F(P) = S (order " +
                     std::to_string(s_order) + ")";
    return r;
  }
  if (r.closure_abelian) {
    r.citations.push_back("abelian strongly F-closed subgroups are normal in F");
  }
  r.verdict_text = "BF is not B" + p.label() + "-cellular: Cl_F(P) has order " +
                   std::to_string(r.closure.order()) + " and index " +
                   std::to_string(r.quotient_order) + " in S";
  if (r.closure_normal_in_F == Tristate::True) {
    r.citations.push_back(
        "Cl_F(P) normal in F: CW_BP(BF) is the homotopy fibre of BF -> B(F/Cl_F(P))");
    r.verdict_text += "; CW_BP(BF) is the homotopy fibre of BF -> B(F/K) with |S/K| = " +
                      std::to_string(r.quotient_order);
  }
  return r;
}

Subgroup omega_subgroup(const FiniteGroup& s, unsigned p, unsigned m) {
  if (!s.is_p_group(p)) fail(ErrorKind::InvalidInput, s.label() + " is not a p-group");
  std::uint64_t pm = 1;
  for (unsigned i = 0; i < m; ++i) pm *= p;
  std::vector<Elem> gens;
  for (Elem x = 0; x < s.order(); ++x)
    if (pm % s.element_order(x) == 0) gens.push_back(x);
  return subgroup_generated(s, gens);
}

unsigned min_cellularity_exponent(const FusionSystem& f) {
  require_morphisms(f, "m0");
  const auto& s = f.S();
  for (unsigned m = 1;; ++m) {
    if (strong_closure(f, omega_subgroup(s, f.p(), m)).order() == s.order()) return m;
    if (m > 64) fail(ErrorKind::InvariantViolation, "exponent search did not terminate");
  }
}

HyperfocalResult hyperfocal(const FusionSystem& f) {
  require_full(f, "hyperfocal subgroup");
  const auto& s = f.S();
  std::vector<char> mark(s.order(), 0);
  std::vector<Elem> gens;
  for (std::size_t i = 0; i < f.objects().size(); ++i) {
    const auto& q = f.objects()[i];
    std::vector<std::int32_t> pos(s.order(), -1);
    for (std::size_t a = 0; a < q.order(); ++a) pos[q.members()[a]] = static_cast<std::int32_t>(a);
    auto compose = [&](const std::vector<Elem>& a, const std::vector<Elem>& b) {
      std::vector<Elem> r(b.size());
      for (std::size_t x = 0; x < b.size(); ++x) r[x] = a[pos[b[x]]];
      return r;
    };
    const std::vector<Elem>& id = q.members();
    std::vector<std::vector<Elem>> coprime;
    for (const auto& m : f.maps(i)) {
      if (sorted_copy(m) != q.members()) continue;
      std::uint64_t order = 1;
      for (auto cur = m; cur != id; cur = compose(m, cur)) ++order;
      if (order % f.p() != 0) coprime.push_back(m);
    }
    if (coprime.size() <= 1) continue;  // only the identity
    // O^p(Aut_F(Q)) as the closure of its p'-elements.
    std::set<std::vector<Elem>> opa{id};
    std::vector<std::vector<Elem>> queue{id};
    for (std::size_t h = 0; h < queue.size(); ++h) {
      for (const auto& g : coprime) {
        auto c = compose(queue[h], g);
        if (opa.insert(c).second) queue.push_back(std::move(c));
      }
    }
    for (const auto& beta : opa) {
      for (std::size_t a = 0; a < q.order(); ++a) {
        const Elem c = s.mul(s.inv(q.members()[a]), beta[a]);
        if (!mark[c]) {
          mark[c] = 1;
          gens.push_back(c);
        }
      }
    }
  }
  auto hyp = subgroup_generated(s, gens);
  if (!is_normal(s, hyp)) fail(ErrorKind::InvariantViolation, "hyperfocal subgroup is not normal");
  auto pi1 = quotient(s, hyp);
  return HyperfocalResult{std::move(hyp), std::move(pi1)};
}

Tristate is_normal_in_F(const FusionSystem& f, const Subgroup& k) {
  const auto& s = f.S();
  require_parent(s, k);
  if (k.order() == s.order()) return Tristate::True;
  if (!is_normal(s, k)) return Tristate::False;
  if (f.coverage() == Coverage::None) {
    const auto& d = f.declared_strongly_closed();
    const bool declared = std::find(d.begin(), d.end(), k) != d.end() || k.is_trivial();
    return declared && is_abelian(k) ? Tristate::True : Tristate::Unknown;
  }
  if (!is_strongly_closed(f, k)) return Tristate::False;
  if (is_abelian(k)) return Tristate::True;
  if (f.coverage() != Coverage::Full) return Tristate::Unknown;
  for (std::size_t i = 0; i < f.objects().size(); ++i) {
    const auto& p = f.objects()[i];
    const auto pk = join(p, k);
    const auto pki = f.require_index(pk);
    for (const auto& phi : f.maps(i)) {
      bool found = false;
      for (const auto& psi : f.maps(pki)) {
        bool agrees = true;
        for (std::size_t a = 0; a < p.order() && agrees; ++a)
          agrees = psi[*pk.position(p.members()[a])] == phi[a];
        for (auto x : k.members()) {
          if (!agrees) break;
          agrees = k.contains(psi[*pk.position(x)]);
        }
        if (agrees) {
          found = true;
          break;
        }
      }
      if (!found) return Tristate::False;
    }
  }
  return Tristate::True;
}

FusionInvarianceCertificate fusion_invariance_certificate(const FusionSystem& f,
                                                          const Subgroup& k) {
  const auto& s = f.S();
  require_parent(s, k);
  require_full(f, "fusion-invariance certificate");
  if (!is_strongly_closed(f, k)) {
    fail(ErrorKind::InvalidInput, "K is not strongly F-closed");
  }
  FusionInvarianceCertificate cert;
  cert.k = k;
  const auto q = quotient(s, k);
  const auto& pi = q.projection;
  const auto n_cosets = q.group.order();
  cert.rho_target_degree = n_cosets;

  for (std::size_t i = 0; i < f.objects().size(); ++i) {
    const auto& p = f.objects()[i];
    const auto domain_meet = intersection(p, k).order();
    const auto expected = s.order() * domain_meet / (p.order() * k.order());
    for (const auto& phi : f.maps(i)) {
      ++cert.checked_pairs;
      std::size_t image_meet = 0;
      for (auto y : phi) image_meet += k.contains(y) ? 1 : 0;
      // Orbits of phi(P) on S/K.
      std::vector<char> seen(n_cosets, 0);
      std::size_t orbits = 0;
      for (Elem c = 0; c < n_cosets; ++c) {
        if (seen[c]) continue;
        ++orbits;
        for (auto y : phi) seen[q.group.mul(pi[y], c)] = 1;
      }
      if (image_meet != domain_meet || orbits != expected) {
        cert.violations.push_back({p, phi, image_meet, domain_meet, orbits, expected});
      }
    }
  }

  cert.rho.resize(s.order());
  std::vector<Elem> kernel;
  for (Elem x = 0; x < s.order(); ++x) {
    auto& perm = cert.rho[x];
    perm.resize(n_cosets);
    bool trivial = true;
    for (Elem c = 0; c < n_cosets; ++c) {
      perm[c] = q.group.mul(pi[x], c);
      trivial = trivial && perm[c] == c;
    }
    if (trivial) kernel.push_back(x);
  }
  cert.rho_kernel_is_k = kernel == k.members();
  return cert;
}

}  // namespace fusioncell
