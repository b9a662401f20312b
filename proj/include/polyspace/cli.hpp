#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace polyspace::cli {

enum class OutputFormat { PlainText, Json, Csv };

OutputFormat parse_format(std::string_view text);

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

inline constexpr std::uint64_t kDefaultSeed = 42;

/// Runs one command line (without the program name). Subcommands: betti,
/// chambers, volume, sample, experiment, report. Returns 0 on success, 1 on
/// domain or I/O errors, 2 on usage errors.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace polyspace::cli
