#pragma once

// Internal helpers shared by the JSON-backed loaders.

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace obi::detail {

using json = nlohmann::json;

/// Whole-file read; throws IoError.
std::string read_file(const std::filesystem::path& path);

/// Writes to `path.tmp` then renames over `path`; throws IoError.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

/// Splits on LF, dropping a trailing CR from each line. A final empty
/// segment after the last newline is not reported.
std::vector<std::string_view> split_lines(std::string_view content);

std::string trim(std::string_view s);
std::string to_lower(std::string_view s);

} // namespace obi::detail
