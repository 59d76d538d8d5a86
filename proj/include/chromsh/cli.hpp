#pragma once

// Command dispatch behind the chromsh executable.

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "chromsh/graph.hpp"
#include "chromsh/repn.hpp"

namespace chromsh {

enum class Command { Csf, Homology, Les, Verify, ScanC6, Selftest };
enum class OutputFormat { Text, Json };

inline constexpr int kDefaultMaxEdges = 8;
inline constexpr const char* kCacheDirVariable = "CHROMSH_CACHE_DIR";

struct RunConfig {
    Command command = Command::Selftest;
    std::vector<std::filesystem::path> inputs;
    int max_points = kDefaultMaxPoints;
    int max_edges = kDefaultMaxEdges;
    /// Required to raise either bound above its default.
    bool allow_large = false;
    OutputFormat format = OutputFormat::Text;
    /// Overrides the CHROMSH_CACHE_DIR variable; caching is off when neither
    /// is set or no_cache is true.
    std::optional<std::filesystem::path> cache_dir;
    bool no_cache = false;
    int threads = 1;
    EdgeIndex edge = 0;
    /// csf: compare with the coloring oracle in 1..oracle_colors variables.
    int oracle_colors = 0;
    int scan_max_vertices = 4;
};

enum ExitStatus : int { kExitOk = 0, kExitCheckFailed = 1, kExitUsage = 2 };

/// Runs one command. Results go to out, diagnostics to err.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace chromsh
