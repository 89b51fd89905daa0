#pragma once

#include <optional>
#include <string>

namespace cubiclf {

// Text cache keyed by name, one file per key under the cache directory.
// Entries carry a version tag and an FNV-1a checksum of the payload;
// corrupt or version-mismatched entries read as missing. Writes go through
// a lock file and an atomic rename.
void set_cache_dir(const std::string& dir);
std::string cache_dir();  // $CACHE_DIR, else ./cache

std::optional<std::string> cache_load(const std::string& key);
void cache_store(const std::string& key, const std::string& payload);

}  // namespace cubiclf
