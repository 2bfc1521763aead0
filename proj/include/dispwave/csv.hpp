#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace dispwave {
namespace io {

// %.17g rendering, enough digits to round-trip a double exactly.
std::string fmt17(double x);

// Writes via a temporary file in the same directory, then renames.
void atomic_write_text(const std::filesystem::path& path, const std::string& text);

// One-line header, then rows of %.17g columns.
void write_csv(const std::filesystem::path& path, const std::string& header,
               const std::vector<std::vector<double>>& columns);

}  // namespace io
}  // namespace dispwave
