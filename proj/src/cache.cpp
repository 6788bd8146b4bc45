#include "fusioncell/cache.hpp"

#include <openssl/evp.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <sstream>
#include <unistd.h>

#include "fusioncell/errors.hpp"

namespace fusioncell {

std::string sha256_hex(std::string_view data) {
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), data.data(), data.size()) != 1 ||
      EVP_DigestFinal_ex(ctx.get(), digest.data(), &len) != 1) {
    fail(ErrorKind::InvariantViolation, "sha256 failed");
  }
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned i = 0; i < len; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 0xF]);
  }
  return out;
}

Cache::Cache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::optional<std::filesystem::path> Cache::resolve_dir(const std::optional<std::string>& flag) {
  if (const char* env = std::getenv("FUSIONCELL_CACHE"); env && *env) return std::filesystem::path(env);
  if (flag && !flag->empty()) return std::filesystem::path(*flag);
  return std::nullopt;
}

std::string Cache::key_for(std::string_view kind, const Json& spec, const Caps& caps) {
  const Json material = {{"kind", kind},
                         {"spec", spec},
                         {"caps",
                          {{"max_order", caps.max_order},
                           {"max_enumeration", caps.max_enumeration},
                           {"dense_table_limit", caps.dense_table_limit}}},
                         {"format", 1}};
  return sha256_hex(material.dump());
}

std::filesystem::path Cache::path_for(const std::string& key) const { return dir_ / (key + ".json"); }

std::optional<Json> Cache::load(const std::string& key) const {
  std::ifstream in(path_for(key), std::ios::binary);
  if (!in) return std::nullopt;
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return Json::parse(buf.str());
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;  // torn or foreign file: treat as a miss
  }
}

void Cache::store(const std::string& key, const Json& value) const {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) fail(ErrorKind::InvalidInput, "cannot create cache directory " + dir_.string());
  const auto target = path_for(key);
  auto tmp = target;
  tmp += ".tmp" + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) fail(ErrorKind::InvalidInput, "cannot write cache file " + tmp.string());
    out << value.dump();
  }
  std::filesystem::rename(tmp, target, ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

FusionSystem load_or_build_fusion(const FusionSpec& spec, const Caps& caps, const Cache* cache,
                                  std::ostream& log) {
  if (!cache || spec.kind == FusionKind::Tables) return build_fusion(spec, caps);
  const auto key = Cache::key_for("fusion", to_json(spec), caps);
  if (auto hit = cache->load(key)) {
    try {
      auto f = build_fusion(parse_fusion_spec(*hit), caps);
      log << "cache hit " << key.substr(0, 12) << "\n";
      return f;
    } catch (const Error&) {
      log << "cache entry " << key.substr(0, 12) << " unreadable, rebuilding\n";
    }
  }
  auto f = build_fusion(spec, caps);
  if (f.S().order() <= caps.dense_table_limit) {
    cache->store(key, to_json(f, caps));
    log << "cache store " << key.substr(0, 12) << "\n";
  }
  return f;
}

}  // namespace fusioncell
