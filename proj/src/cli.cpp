#include "fusioncell/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <memory>
#include <sstream>
#include <vector>

#include "fusioncell/cache.hpp"
#include "fusioncell/catalog.hpp"
#include "fusioncell/cellularity.hpp"
#include "fusioncell/errors.hpp"
#include "fusioncell/fusion.hpp"
#include "fusioncell/json_io.hpp"
#include "fusioncell/subgroups.hpp"

namespace fusioncell::cli {

namespace {

struct Options {
  bool json = false;
  std::optional<std::string> cache_dir;
  std::size_t cap = Caps{}.max_order;
  std::size_t enum_cap = Caps{}.max_enumeration;
  std::string seed_file;

  std::string group;
  std::string fusion;
  std::string P;
  std::string K;
  unsigned p = 0;
  unsigned m = 1;

  unsigned r = 4;
  unsigned gamma = 0;
  unsigned l = 1;
  bool census = false;
  bool verdict = false;
  std::string shaped;
  unsigned wp = 3, wn = 2, wq = 2;

  Caps caps() const {
    Caps c;
    c.max_order = cap;
    c.max_enumeration = enum_cap;
    return c;
  }
};

Json input_json(const std::string& arg) {
  const auto text = read_input(arg);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (text[first] == '{' || text[first] == '[' || text[first] == '"')) {
    return parse_json_text(text);
  }
  return Json(text.substr(first == std::string::npos ? 0 : first));
}

GroupSpec group_arg(const std::string& arg, const char* what) {
  if (arg.empty()) fail(ErrorKind::Parse, std::string("missing ") + what);
  return parse_group_spec(input_json(arg));
}

std::string elems(const std::vector<Elem>& v) {
  std::ostringstream s;
  s << '[';
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i];
  s << ']';
  return s.str();
}

class Runner {
 public:
  Runner(const Options& o, std::ostream& out, std::ostream& err) : o_(o), out_(out), err_(err) {
    if (auto dir = Cache::resolve_dir(o.cache_dir)) cache_ = std::make_unique<Cache>(*dir);
  }

  FusionSystem fusion() {
    if (o_.fusion.empty()) fail(ErrorKind::Parse, "missing --fusion");
    const auto spec = parse_fusion_spec(input_json(o_.fusion));
    err_ << "building fusion system over " << (spec.kind == FusionKind::GroupInduced ? "Sylow of " : "")
         << build_label(spec.group) << "\n";
    return load_or_build_fusion(spec, o_.caps(), cache_.get(), err_);
  }

  FiniteGroup group_P() { return build_group(group_arg(o_.P, "--P"), o_.caps()); }

  void emit(const Json& j) { out_ << j.dump() << "\n"; }

  int group() {
    const auto spec = group_arg(o_.group, "group spec");
    const auto g = build_group(spec, o_.caps());
    const auto z = center(g);
    if (o_.json) {
      emit({{"spec", to_json(spec)},
            {"label", g.label()},
            {"order", g.order()},
            {"exponent", exponent(g)},
            {"abelian", g.is_abelian()},
            {"center_order", z.order()}});
      return 0;
    }
    out_ << "group     " << g.label() << "\n"
         << "order     " << g.order() << "\n"
         << "exponent  " << exponent(g) << "\n"
         << "abelian   " << (g.is_abelian() ? "yes" : "no") << "\n"
         << "|Z(G)|    " << z.order() << "\n";
    return 0;
  }

  int subgroups() {
    const auto g = build_group(group_arg(o_.group, "group spec"), o_.caps());
    err_ << "enumerating subgroups of " << g.label() << " (order " << g.order() << ")\n";
    const auto subs = all_subgroups(g, o_.caps());
    if (o_.json) {
      Json list = Json::array();
      for (const auto& h : subs) list.push_back(to_json(h));
      emit({{"count", subs.size()}, {"subgroups", list}});
      return 0;
    }
    out_ << subs.size() << " subgroups\n";
    out_ << std::setw(6) << "order" << "  normal  members\n";
    for (const auto& h : subs) {
      out_ << std::setw(6) << h.order() << "  " << std::setw(6) << (is_normal(g, h) ? "yes" : "no") << "  "
           << elems(h.members()) << "\n";
    }
    return 0;
  }

  int fusion_cmd() {
    const auto f = fusion();
    if (o_.json) {
      emit(to_json(f, o_.caps()));
      return 0;
    }
    out_ << "S           " << f.S().label() << " (order " << f.S().order() << ")\n"
         << "p           " << f.p() << "\n"
         << "provenance  " << to_string(f.provenance()) << "\n"
         << "coverage    " << to_string(f.coverage()) << "\n"
         << "note        " << f.note() << "\n"
         << "objects     " << f.objects().size() << "\n"
         << "morphisms   " << f.morphism_count() << "\n";
    return 0;
  }

  int saturated() {
    const auto f = fusion();
    const auto rep = is_saturated(f);
    if (o_.json) {
      Json w = Json::array();
      for (const auto& x : rep.witnesses) {
        w.push_back({{"axiom", x.axiom}, {"subgroup", to_json(x.subgroup)}, {"detail", x.detail}});
      }
      emit({{"saturated", rep.saturated}, {"witnesses", w}});
      return 0;
    }
    out_ << "saturated: " << (rep.saturated ? "yes" : "no") << "\n";
    for (const auto& x : rep.witnesses) {
      out_ << "  (" << x.axiom << ") " << elems(x.subgroup.members()) << ": " << x.detail << "\n";
    }
    return 0;
  }

  int closure() {
    const auto f = fusion();
    const auto p = group_P();
    const auto k = cl_closure(f, p, o_.caps());
    if (o_.json) {
      emit({{"closure", to_json(k)}, {"order", k.order()}, {"abelian", is_abelian(k)},
            {"is_S", k.order() == f.S().order()}});
      return 0;
    }
    out_ << "Cl_F(" << p.label() << ") has order " << k.order() << " in S of order " << f.S().order()
         << (k.order() == f.S().order() ? " (= S)" : "") << "\n"
         << "members " << elems(k.members()) << "\n";
    return 0;
  }

  int cellular() {
    const auto f = fusion();
    const auto rep = is_BP_cellular(f, group_P(), o_.caps());
    return report(rep);
  }

  int report(const CellularityReport& rep) {
    if (o_.json) {
      emit(to_json(rep));
      return 0;
    }
    out_ << rep.verdict_text << "\n"
         << "closure order   " << rep.closure.order() << "\n"
         << "abelian         " << (rep.closure_abelian ? "yes" : "no") << "\n"
         << "normal in F     " << to_string(rep.closure_normal_in_F) << "\n"
         << "|S/Cl_F(P)|     " << rep.quotient_order << "\n";
    for (const auto& c : rep.citations) out_ << "  - " << c << "\n";
    for (const auto& a : rep.axiomatized_inputs) out_ << "  assumed: " << a << "\n";
    return 0;
  }

  int omega() {
    const auto g = build_group(group_arg(o_.group, "group spec"), o_.caps());
    unsigned p = o_.p ? o_.p : g.prime_hint().value_or(0);
    if (!p) fail(ErrorKind::Parse, "missing --p");
    const auto h = omega_subgroup(g, p, o_.m);
    if (o_.json) {
      emit({{"omega", to_json(h)}, {"order", h.order()}, {"p", p}, {"m", o_.m}});
      return 0;
    }
    out_ << "Omega_" << p << "^" << o_.m << " has order " << h.order() << "\n"
         << "members " << elems(h.members()) << "\n";
    return 0;
  }

  int m0() {
    const auto f = fusion();
    const auto m = min_cellularity_exponent(f);
    if (o_.json) {
      emit({{"m0", m}, {"p", f.p()}});
      return 0;
    }
    out_ << "m0 = " << m << ": BF is BZ/" << f.p() << "^m-cellular exactly for m >= " << m << "\n";
    return 0;
  }

  int hyperfocal_cmd(bool pi1_only) {
    const auto f = fusion();
    const auto h = hyperfocal(f);
    const auto& q = h.pi1.group;
    if (o_.json) {
      if (pi1_only) {
        emit({{"order", q.order()}, {"abelian", q.is_abelian()}, {"hyperfocal_order", h.hyperfocal.order()}});
      } else {
        emit({{"hyperfocal", to_json(h.hyperfocal)}, {"order", h.hyperfocal.order()}, {"pi1_order", q.order()}});
      }
      return 0;
    }
    out_ << "hyperfocal subgroup order " << h.hyperfocal.order() << "\n"
         << "pi_1(BF) = S/hyperfocal, order " << q.order() << (q.is_abelian() ? ", abelian" : "") << "\n";
    if (!pi1_only) out_ << "members " << elems(h.hyperfocal.members()) << "\n";
    return 0;
  }

  int certificate() {
    const auto f = fusion();
    if (o_.K.empty()) fail(ErrorKind::Parse, "missing --K");
    const auto k = parse_subgroup(f.S(), input_json(o_.K), true);
    const auto cert = fusion_invariance_certificate(f, k);
    if (o_.json) {
      Json v = Json::array();
      for (const auto& x : cert.violations) {
        v.push_back({{"domain", to_json(x.domain)},
                     {"map", x.map},
                     {"image_meet", x.image_meet},
                     {"domain_meet", x.domain_meet},
                     {"double_cosets", x.double_cosets},
                     {"expected_double_cosets", x.expected_double_cosets}});
      }
      emit({{"K", to_json(cert.k)},
            {"degree", cert.rho_target_degree},
            {"checked_pairs", cert.checked_pairs},
            {"violations", v},
            {"rho_kernel_is_K", cert.rho_kernel_is_k}});
      return 0;
    }
    out_ << "K of order " << cert.k.order() << ", rho: S -> Sym(" << cert.rho_target_degree << ")\n"
         << "checked " << cert.checked_pairs << " morphisms, " << cert.violations.size() << " violation(s)\n"
         << "ker rho = K: " << (cert.rho_kernel_is_k ? "yes" : "no") << "\n";
    return 0;
  }

  int full_report() {
    const auto f = fusion();
    const auto p = group_P();
    Json j = {{"S_order", f.S().order()},
              {"p", f.p()},
              {"provenance", to_string(f.provenance())},
              {"coverage", to_string(f.coverage())}};
    if (f.coverage() == Coverage::Full) {
      err_ << "checking saturation\n";
      j["saturated"] = is_saturated(f).saturated;
    }
    const auto rep = is_BP_cellular(f, p, o_.caps());
    j["cellular"] = to_json(rep);
    if (f.coverage() != Coverage::None) j["m0"] = min_cellularity_exponent(f);
    if (f.coverage() == Coverage::Full) j["pi1_order"] = hyperfocal(f).pi1.group.order();
    if (o_.json) {
      emit(j);
      return 0;
    }
    out_ << "fusion system over S of order " << f.S().order() << " at p = " << f.p() << " ("
         << to_string(f.provenance()) << ", " << to_string(f.coverage()) << " coverage)\n";
    if (j.contains("saturated")) out_ << "saturated: " << (j["saturated"].get<bool>() ? "yes" : "no") << "\n";
    if (j.contains("m0")) out_ << "m0 = " << j["m0"].get<unsigned>() << "\n";
    if (j.contains("pi1_order")) out_ << "|pi_1(BF)| = " << j["pi1_order"].get<std::size_t>() << "\n";
    return report(rep);
  }

  int catalog_b3r() {
    err_ << "building B(3," << o_.r << ";0," << o_.gamma << ",0)\n";
    const auto b = build_b3r(o_.r, o_.gamma, 8, o_.caps());
    if (o_.census) {
      const auto c = order_census(b, o_.l);
      if (o_.json) {
        Json j = {{"r", c.r}, {"gamma", c.gamma}, {"l", c.l}, {"exists_outside_N", c.exists_outside_N}};
        j["witness"] = c.witness ? Json(*c.witness) : Json(nullptr);
        emit(j);
        return 0;
      }
      out_ << "x in S \\ N with x^(3^" << c.l << ") = 1: "
           << (c.exists_outside_N ? "element " + std::to_string(*c.witness) : std::string("none")) << "\n";
      return 0;
    }
    if (o_.verdict) return report(exotic_cellularity_verdict(b, o_.l));
    if (!o_.shaped.empty()) {
      if (o_.shaped != "eta" && o_.shaped != "omega") fail(ErrorKind::Parse, "--shaped takes eta or omega");
      const auto found = b3r_shaped_involutions(b, o_.shaped == "eta");
      Json seeds = Json::array();
      for (const auto& a : found) seeds.push_back({{"s", a(b.s)}, {"s1", a(b.s_i[1])}});
      if (o_.json) {
        emit({{"seeds", seeds}});
      } else {
        out_ << found.size() << " " << o_.shaped << "-shaped involution(s)\n";
        for (const auto& s : seeds) out_ << "  s -> " << s["s"] << ", s1 -> " << s["s1"] << "\n";
      }
      return 0;
    }
    Json named = {{"s", b.s}};
    for (unsigned i = 1; i < b.r; ++i) named["s" + std::to_string(i)] = b.s_i[i];
    if (o_.json) {
      emit({{"r", b.r},
            {"gamma", b.gamma},
            {"order", b.group.order()},
            {"base_orders", b.base_orders},
            {"named", named},
            {"N", to_json(b.N)}});
      return 0;
    }
    out_ << b.group.label() << " of order " << b.group.order() << "\n<s_1, ..., s_" << b.r - 1 << "> =";
    for (std::size_t i = 0; i < b.base_orders.size(); ++i) out_ << (i ? " x" : "") << " Z/" << b.base_orders[i];
    out_ << "\nnamed elements " << named.dump() << "\n|N| = " << b.N.order() << "\n";
    return 0;
  }

  int catalog_pi1() {
    const auto b = build_b3r(o_.r, o_.gamma, 8, o_.caps());
    std::vector<GroupHom> seeds;
    if (!o_.seed_file.empty()) {
      auto j = input_json(o_.seed_file);
      if (j.is_object() && j.contains("seeds")) j = j["seeds"];
      if (!j.is_array()) fail(ErrorKind::Parse, "seed file must hold a list of seeds");
      for (const auto& s : j) {
        if (s.contains("map")) {
          auto m = s["map"].get<std::vector<Elem>>();
          if (m.size() != b.group.order()) fail(ErrorKind::InvalidInput, "seed map has the wrong length");
          for (auto y : m)
            if (y >= b.group.order()) fail(ErrorKind::InvalidInput, "seed image out of range");
          seeds.push_back(GroupHom::unchecked(Subgroup::whole(b.group), b.group, std::move(m)));
        } else {
          const auto is = s.at("s").get<Elem>();
          const auto is1 = s.at("s1").get<Elem>();
          if (is >= b.group.order() || is1 >= b.group.order()) fail(ErrorKind::InvalidInput, "seed image out of range");
          auto a = b3r_automorphism(b, is, is1);
          if (!a) fail(ErrorKind::InvalidInput, "seed images do not extend to an automorphism");
          seeds.push_back(std::move(*a));
        }
      }
    }
    const bool ok = exotic_pi1_check(b, seeds);
    if (o_.json) {
      emit({{"r", b.r}, {"gamma", b.gamma}, {"generates_S", ok}, {"pi1_trivial", ok}});
      return 0;
    }
    out_ << "<N, x^-1 alpha(x)> " << (ok ? "= S: pi_1(BF) is trivial" : "!= S") << "\n";
    return 0;
  }

  int catalog_wreath() {
    const auto w = build_wreath(o_.wp, o_.wn, o_.wq, o_.caps());
    const auto syl = sylow_subgroup(w, o_.wp);
    const auto base = wreath_base(w);
    if (o_.json) {
      emit({{"label", w.label()},
            {"order", w.order()},
            {"sylow_order", syl.order()},
            {"sylow_is_base", syl == base}});
      return 0;
    }
    out_ << w.label() << " of order " << w.order() << "\nSylow " << o_.wp << "-subgroup of order " << syl.order()
         << (syl == base ? " (the base)" : "") << "\n";
    return 0;
  }

  int catalog_sz8() {
    err_ << "building Sz(8)\n";
    const auto g = build_suzuki_8(o_.caps());
    const auto syl = sylow_subgroup(g, 2);
    std::vector<Elem> inv;
    for (auto x : syl.members())
      if (g.element_order(x) == 2) inv.push_back(x);
    const auto span = subgroup_generated(g, inv);
    if (o_.json) {
      emit({{"order", g.order()},
            {"sylow_order", syl.order()},
            {"involutions", inv.size()},
            {"involutions_generate_order", span.order()},
            {"involutions_elementary_abelian", is_abelian(span) && exponent_of(span) == 2}});
      return 0;
    }
    out_ << "Sz(8) of order " << g.order() << "\nSylow 2-subgroup of order " << syl.order() << "\n"
         << inv.size() << " involutions generating a subgroup of order " << span.order() << "\n";
    return 0;
  }

 private:
  static std::string build_label(const GroupSpec& g) { return g.label.empty() ? "group" : g.label; }

  static std::uint64_t exponent_of(const Subgroup& h) {
    std::uint64_t e = 1;
    for (auto x : h.members()) e = std::lcm(e, h.parent().element_order(x));
    return e;
  }

  const Options& o_;
  std::ostream& out_;
  std::ostream& err_;
  std::unique_ptr<Cache> cache_;
};

}  // namespace

std::string read_input(const std::string& arg) {
  std::error_code ec;
  if (!arg.empty() && arg.front() != '{' && arg.front() != '[' && std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream in(arg, std::ios::binary);
    if (!in) fail(ErrorKind::Parse, "cannot read " + arg);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
  return arg;
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Decide BP-cellularity of classifying spaces of fusion systems", "fusioncell"};
  app.require_subcommand(1);
  app.add_flag("--json", o.json, "Emit JSON");
  app.add_option("--cache-dir", o.cache_dir, "Cache directory (FUSIONCELL_CACHE overrides)");
  app.add_option("--cap", o.cap, "Largest group order to construct");
  app.add_option("--enum-cap", o.enum_cap, "Largest order for subgroup and hom enumeration");
  app.add_option("--seed-file", o.seed_file, "Automorphism seeds for catalog pi1");
  app.fallthrough();

  auto with_fusion = [&](CLI::App* c) { c->add_option("--fusion", o.fusion, "Fusion spec: file, JSON or group@p")->required(); };
  auto with_P = [&](CLI::App* c) { c->add_option("--P", o.P, "Group P: file, JSON or shorthand")->required(); };

  auto* group = app.add_subcommand("group", "Build a group and summarize it");
  group->add_option("spec", o.group, "Group spec: file, JSON or shorthand")->required();
  auto* subs = app.add_subcommand("subgroups", "List all subgroups");
  subs->add_option("spec", o.group, "Group spec")->required();
  auto* fusion = app.add_subcommand("fusion", "Build a fusion system");
  with_fusion(fusion);
  auto* sat = app.add_subcommand("saturated", "Check the saturation axioms");
  with_fusion(sat);
  auto* closure = app.add_subcommand("closure", "Compute Cl_F(P)");
  with_fusion(closure);
  with_P(closure);
  auto* cellular = app.add_subcommand("cellular", "Decide BP-cellularity");
  with_fusion(cellular);
  with_P(cellular);
  auto* omega = app.add_subcommand("omega", "Subgroup generated by elements of order dividing p^m");
  omega->add_option("spec", o.group, "Group spec")->required();
  omega->add_option("--p", o.p, "Prime");
  omega->add_option("--m", o.m, "Exponent")->check(CLI::PositiveNumber);
  auto* m0 = app.add_subcommand("m0", "Least m with Cl_F(Z/p^m) = S");
  with_fusion(m0);
  auto* hyp = app.add_subcommand("hyperfocal", "Hyperfocal subgroup");
  with_fusion(hyp);
  auto* pi1 = app.add_subcommand("pi1", "Fundamental group S/hyperfocal");
  with_fusion(pi1);
  auto* cert = app.add_subcommand("certificate", "Fusion-invariance certificate for K");
  with_fusion(cert);
  cert->add_option("--K", o.K, "Generators of K as a JSON list")->required();
  auto* rep = app.add_subcommand("report", "Saturation, cellularity and pi_1 in one report");
  with_fusion(rep);
  with_P(rep);

  auto* catalog = app.add_subcommand("catalog", "Worked examples");
  catalog->require_subcommand(1);
  auto* b3r = catalog->add_subcommand("b3r", "The 3-groups B(3,r;0,gamma,0)");
  auto* cpi1 = catalog->add_subcommand("pi1", "Hyperfocal check for exotic systems over B(3,r;0,gamma,0)");
  for (auto* c : {b3r, cpi1}) {
    c->add_option("--r", o.r, "r >= 4")->required();
    c->add_option("--gamma", o.gamma, "0, 1 or 2")->required();
  }
  b3r->add_flag("--census", o.census, "Order census outside N");
  b3r->add_flag("--verdict", o.verdict, "Cellularity verdict for an exotic system");
  b3r->add_option("--l", o.l, "Exponent l of P = Z/3^l")->check(CLI::PositiveNumber);
  b3r->add_option("--shaped", o.shaped, "List eta- or omega-shaped involutions");
  auto* wreath = catalog->add_subcommand("wreath", "Z/p^n wr Z/q");
  wreath->add_option("--p", o.wp)->required();
  wreath->add_option("--n", o.wn)->required();
  wreath->add_option("--q", o.wq)->required();
  auto* sz8 = catalog->add_subcommand("sz8", "The Suzuki group Sz(8)");

  std::vector<std::string> argv_store{"fusioncell"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    Runner run(o, out, err);
    if (*group) return run.group();
    if (*subs) return run.subgroups();
    if (*fusion) return run.fusion_cmd();
    if (*sat) return run.saturated();
    if (*closure) return run.closure();
    if (*cellular) return run.cellular();
    if (*omega) return run.omega();
    if (*m0) return run.m0();
    if (*hyp) return run.hyperfocal_cmd(false);
    if (*pi1) return run.hyperfocal_cmd(true);
    if (*cert) return run.certificate();
    if (*rep) return run.full_report();
    if (*b3r) return run.catalog_b3r();
    if (*cpi1) return run.catalog_pi1();
    if (*wreath) return run.catalog_wreath();
    if (*sz8) return run.catalog_sz8();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const nlohmann::json::exception& e) {
    err << "error: ParseError: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: internal: " << e.what() << "\n";
    return 5;
  }
  return 2;
}

}  // namespace fusioncell::cli
