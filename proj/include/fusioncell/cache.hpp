#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "fusioncell/json_io.hpp"

namespace fusioncell {

std::string sha256_hex(std::string_view data);

// On-disk store of computed objects keyed by a hash of what produced them.
class Cache {
 public:
  explicit Cache(std::filesystem::path dir);

  // FUSIONCELL_CACHE wins over the flag; nullopt disables caching.
  static std::optional<std::filesystem::path> resolve_dir(const std::optional<std::string>& flag);

  // Hash of the kind tag, the expanded spec and every cap.
  static std::string key_for(std::string_view kind, const Json& spec, const Caps& caps);

  std::optional<Json> load(const std::string& key) const;
  void store(const std::string& key, const Json& value) const;

  const std::filesystem::path& dir() const { return dir_; }

 private:
  std::filesystem::path path_for(const std::string& key) const;
  std::filesystem::path dir_;
};

// Builds the fusion system, going through the cache when one is given. Cache
// traffic is reported on `log`.
FusionSystem load_or_build_fusion(const FusionSpec& spec, const Caps& caps, const Cache* cache,
                                  std::ostream& log);

}  // namespace fusioncell
