#pragma once

#include <filesystem>

#include "dispwave/config.hpp"

namespace dispwave {
namespace io {

// Subcommand drivers.  Each returns a process exit code: 0 on success;
// the caller maps ConfigError to 2 and solver failures to 3.
void cmd_eigen(const ExperimentConfig& cfg, const std::filesystem::path& out_dir);
void cmd_propagate(const ExperimentConfig& cfg, const std::filesystem::path& out_dir);
void cmd_lorentz(const ExperimentConfig& cfg, const std::filesystem::path& out_dir);
void cmd_validate(const ExperimentConfig& cfg, const std::filesystem::path& out_dir);

}  // namespace io
}  // namespace dispwave
