#include "cubiclf/cache.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>

namespace cubiclf {

namespace {

const char* kVersionTag = "cubiclf-cache-v1";

std::mutex g_mu;
std::string g_dir;

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", (unsigned long long)v);
    return buf;
}

std::filesystem::path key_path(const std::string& key) {
    return std::filesystem::path(cache_dir()) / (key + ".cache");
}

}  // namespace

void set_cache_dir(const std::string& dir) {
    std::lock_guard<std::mutex> lock(g_mu);
    g_dir = dir;
}

std::string cache_dir() {
    {
        std::lock_guard<std::mutex> lock(g_mu);
        if (!g_dir.empty()) return g_dir;
    }
    if (const char* env = std::getenv("CACHE_DIR")) return env;
    return "cache";
}

std::optional<std::string> cache_load(const std::string& key) {
    std::ifstream in(key_path(key), std::ios::binary);
    if (!in) return std::nullopt;
    std::string header;
    if (!std::getline(in, header)) return std::nullopt;
    std::stringstream rest;
    rest << in.rdbuf();
    std::string payload = rest.str();
    std::string expect = std::string("# ") + kVersionTag + " fnv1a=" + hex64(fnv1a(payload));
    if (header != expect) return std::nullopt;  // corrupt or stale: recompute
    return payload;
}

void cache_store(const std::string& key, const std::string& payload) {
    namespace fs = std::filesystem;
    fs::create_directories(cache_dir());
    fs::path target = key_path(key);
    fs::path lockp = target;
    lockp += ".lock";
    int lfd = ::open(lockp.c_str(), O_CREAT | O_RDWR, 0644);
    if (lfd >= 0) ::flock(lfd, LOCK_EX);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out << "# " << kVersionTag << " fnv1a=" << hex64(fnv1a(payload)) << "\n" << payload;
    }
    fs::rename(tmp, target);
    if (lfd >= 0) {
        ::flock(lfd, LOCK_UN);
        ::close(lfd);
    }
}

}  // namespace cubiclf
