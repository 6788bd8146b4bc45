#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "corpus.hpp"
#include "fusioncell/cache.hpp"
#include "fusioncell/cli.hpp"
#include "fusioncell/errors.hpp"
#include "fusioncell/json_io.hpp"

using namespace fusioncell;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli_run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() / ("fusioncell-test-" + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

}  // namespace

TEST_CASE("group specs round-trip") {
  for (const auto& e : corpus::small_ambients()) {
    CAPTURE(e.name);
    const auto j = to_json(e.spec);
    const auto back = parse_group_spec(parse_json_text(j.dump()));
    CHECK(to_json(back) == j);
    CHECK(build_group(back) == build_group(e.spec));
  }
  const auto g = build_group(symmetric_spec(4));
  CHECK(build_group(table_spec_of(g)) == g);
  CHECK(build_group(parse_group_spec(Json("b3r:4,2"))).order() == 81);
  CHECK(build_group(parse_group_spec(Json("elem-abelian:2^3"))).order() == 8);
  CHECK(build_group(parse_group_spec(Json("abelian:3,9"))).order() == 27);
  CHECK_THROWS_AS(parse_group_spec(Json("nonsense:4")), Error);
}

TEST_CASE("fusion systems round-trip") {
  for (const auto& e : corpus::small_ambients()) {
    CAPTURE(e.name);
    FusionSpec spec;
    spec.group = e.spec;
    spec.p = e.p;
    const auto f = build_fusion(spec);
    const auto j = to_json(f);
    const auto back = build_fusion(parse_fusion_spec(parse_json_text(j.dump())));
    CHECK(back == f);
    CHECK(to_json(back) == j);
    CHECK(to_json(parse_fusion_spec(to_json(spec))) == to_json(spec));
  }
}

TEST_CASE("generated fusion from JSON seeds") {
  const auto j = parse_json_text(R"({"kind":"generated","S":"abelian:2,2","p":2,
    "seeds":[{"domain":[1,2],"map":{"1":2,"2":1}}]})");
  const auto f = build_fusion(parse_fusion_spec(j));
  CHECK(f.provenance() == Provenance::Generated);
  CHECK(f.morphism_count() > 5);

  // a tables spec with a non-injective map is rejected
  auto t = to_json(f);
  t["maps"].back().push_back(Json::array({0, 0, 0, 0}));
  CHECK_THROWS_AS(build_fusion(parse_fusion_spec(t)), Error);
}

TEST_CASE("cache keys") {
  const Json spec = to_json(cyclic_spec(9));
  Caps a;
  Caps b;
  b.max_enumeration = 100;
  CHECK(Cache::key_for("fusion", spec, a) == Cache::key_for("fusion", spec, a));
  CHECK(Cache::key_for("fusion", spec, a) != Cache::key_for("fusion", spec, b));
  CHECK(Cache::key_for("fusion", spec, a) != Cache::key_for("group", spec, a));
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("cache hits are byte-identical") {
  TempDir dir;
  const std::vector<std::string> args{"--json", "--cache-dir", dir.path.string(), "cellular",
                                      "--fusion", "wreath:3,2,2@3", "--P", "cyclic:3"};
  const auto cold = cli_run(args);
  REQUIRE(cold.code == 0);
  CHECK(cold.err.find("cache store") != std::string::npos);
  const auto warm = cli_run(args);
  CHECK(warm.code == 0);
  CHECK(warm.err.find("cache hit") != std::string::npos);
  CHECK(warm.out == cold.out);

  const auto uncached = cli_run({"--json", "cellular", "--fusion", "wreath:3,2,2@3", "--P", "cyclic:3"});
  CHECK(uncached.out == cold.out);

  // a different cap is a different entry
  auto capped = args;
  capped.insert(capped.begin(), {"--enum-cap", "4000"});
  const auto other = cli_run(capped);
  CHECK(other.err.find("cache store") != std::string::npos);
  CHECK(other.out == cold.out);

  const auto report = parse_json_text(cold.out);
  CHECK(report["cellular"] == false);
  CHECK(report["closure_order"] == 9);
}

TEST_CASE("environment overrides the cache flag") {
  TempDir env_dir;
  TempDir flag_dir;
  ::setenv("FUSIONCELL_CACHE", env_dir.path.c_str(), 1);
  const auto r = cli_run({"--json", "--cache-dir", flag_dir.path.string(), "saturated", "--fusion", "sym:4@2"});
  ::unsetenv("FUSIONCELL_CACHE");
  CHECK(r.code == 0);
  CHECK(!fs::is_empty(env_dir.path));
  CHECK(fs::is_empty(flag_dir.path));
}

TEST_CASE("cli results") {
  auto json_of = [](std::vector<std::string> args) {
    args.insert(args.begin(), "--json");
    const auto r = cli_run(args);
    REQUIRE(r.code == 0);
    return parse_json_text(r.out);
  };
  CHECK(json_of({"saturated", "--fusion", "sym:4@2"})["saturated"] == true);
  CHECK(json_of({"m0", "--fusion", "sym:3@3"})["m0"] == 1);
  CHECK(json_of({"m0", "--fusion", "wreath:3,2,2@3"})["m0"] == 2);
  CHECK(json_of({"pi1", "--fusion", "wreath:3,2,2@3"})["order"] == 9);
  CHECK(json_of({"catalog", "b3r", "--r", "5", "--gamma", "1", "--census", "--l", "1"})["exists_outside_N"] == false);
  CHECK(json_of({"catalog", "b3r", "--r", "5", "--gamma", "0", "--census", "--l", "1"})["exists_outside_N"] == true);
  CHECK(json_of({"catalog", "wreath", "--p", "3", "--n", "2", "--q", "2"})["sylow_is_base"] == true);
  const auto b = json_of({"catalog", "b3r", "--r", "4", "--gamma", "0"});
  CHECK(b["order"] == 81);
  CHECK(b["named"].contains("s1"));

  const auto trivial = R"({"kind":"generated","S":"cyclic:4","p":2,"seeds":[]})";
  const auto c = json_of({"closure", "--fusion", trivial, "--P", "cyclic:4"});
  CHECK(c["order"] == 4);

  const auto cert = json_of({"certificate", "--fusion", "wreath:3,2,2@3", "--K", "[6,9]"});
  CHECK(cert["violations"].empty());
  CHECK(cert["degree"] == 9);

  TempDir dir;
  const auto spec = dir.path / "d8.json";
  std::ofstream(spec) << to_json(dihedral_spec(8)).dump();
  CHECK(json_of({"group", spec.string()})["order"] == 8);
}

TEST_CASE("exit codes") {
  CHECK(cli_run({"group", R"({"kind":"perm","degree":3,"generators":[[0,0,1]]})"}).code == 2);
  CHECK(cli_run({"group", "{not json"}).code == 2);
  CHECK(cli_run({"frobnicate"}).code == 2);
  CHECK(cli_run({"group", "cyclic:100000"}).code == 3);
  CHECK(cli_run({"catalog", "pi1", "--r", "5", "--gamma", "1"}).code == 4);
  CHECK(cli_run({"--help"}).code == 0);
  const auto r = cli_run({"certificate", "--fusion", "sym:4@2", "--K", "[1]"});
  CHECK(r.code != 0);
  CHECK(!r.err.empty());
}
