#pragma once

// On-disk result cache keyed by a SHA-256 content hash.

#include <filesystem>
#include <optional>
#include <string>

namespace chromsh {

inline constexpr const char* kEngineVersion = "chromsh-1";

/// Lowercase hex SHA-256 of the bytes.
std::string sha256_hex(const std::string& bytes);

class ResultCache {
public:
    /// Creates the directory if needed; throws InputError if it is unusable.
    explicit ResultCache(std::filesystem::path dir);

    const std::filesystem::path& dir() const { return dir_; }

    /// Key for a command applied to a canonical input serialization.
    static std::string key(const std::string& command, const std::string& canonical_input);

    std::optional<std::string> get(const std::string& key) const;
    /// Writes to a temporary file and renames it into place.
    void put(const std::string& key, const std::string& value) const;

private:
    std::filesystem::path path_for(const std::string& key) const { return dir_ / (key + ".json"); }

    std::filesystem::path dir_;
};

}  // namespace chromsh
