#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "cubiclf/cache.hpp"

using namespace cubiclf;

TEST_CASE("store and load round trip") {
    std::string dir = "/tmp/cubiclf-cache-unit";
    std::filesystem::remove_all(dir);
    set_cache_dir(dir);
    CHECK_FALSE(cache_load("alpha").has_value());
    cache_store("alpha", "line1\nline2");
    auto got = cache_load("alpha");
    REQUIRE(got.has_value());
    CHECK(*got == "line1\nline2");
    // overwrite
    cache_store("alpha", "other");
    CHECK(*cache_load("alpha") == "other");
}

TEST_CASE("corruption is detected by the checksum") {
    std::string dir = "/tmp/cubiclf-cache-unit2";
    std::filesystem::remove_all(dir);
    set_cache_dir(dir);
    cache_store("beta", "payload");
    // flip a byte in the payload
    auto path = std::filesystem::path(dir) / "beta.cache";
    std::fstream f(path, std::ios::in | std::ios::out | std::ios::binary);
    f.seekp(-1, std::ios::end);
    f.put('X');
    f.close();
    CHECK_FALSE(cache_load("beta").has_value());  // recompute instead of silent reuse
}

TEST_CASE("version tag mismatch reads as missing") {
    std::string dir = "/tmp/cubiclf-cache-unit3";
    std::filesystem::remove_all(dir);
    set_cache_dir(dir);
    std::filesystem::create_directories(dir);
    std::ofstream out(std::filesystem::path(dir) / "gamma.cache");
    out << "# some-other-tool-v9 fnv1a=0000000000000000\npayload";
    out.close();
    CHECK_FALSE(cache_load("gamma").has_value());
}
