#include "chromsh/cache.hpp"

#include <array>
#include <fstream>
#include <random>
#include <sstream>

#include <openssl/evp.h>

#include "chromsh/error.hpp"

namespace chromsh {

std::string sha256_hex(const std::string& bytes) {
    std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
    unsigned int length = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest.data(), &length, EVP_sha256(), nullptr) != 1) {
        throw Error("SHA-256 failed");
    }
    static constexpr char hex[] = "0123456789abcdef";
    std::string out;
    for (unsigned int k = 0; k < length; ++k) {
        out += hex[digest[k] >> 4];
        out += hex[digest[k] & 0xF];
    }
    return out;
}

ResultCache::ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec || !std::filesystem::is_directory(dir_)) throw InputError("cache directory " + dir_.string() + " is unusable");
}

std::string ResultCache::key(const std::string& command, const std::string& canonical_input) {
    return sha256_hex(std::string(kEngineVersion) + '\n' + command + '\n' + canonical_input);
}

std::optional<std::string> ResultCache::get(const std::string& key) const {
    std::ifstream in(path_for(key), std::ios::binary);
    if (!in) return std::nullopt;
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void ResultCache::put(const std::string& key, const std::string& value) const {
    std::random_device rd;
    const auto tmp = dir_ / (key + ".tmp" + std::to_string(rd()));
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot write cache file " + tmp.string());
        out << value;
        if (!out.flush()) throw Error("cannot write cache file " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path_for(key), ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw Error("cannot publish cache file for " + key);
    }
}

}  // namespace chromsh
