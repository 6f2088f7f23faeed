#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"

namespace euler2c::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitCollision = 2;

struct CommandContext {
    std::filesystem::path out_dir;
    double margin = 0.05;
    bool margin_from_flag = false; // an explicit --margin beats the config value
};

int run_simulate(const nlohmann::json& cfg, const CommandContext& ctx);
int run_portrait(const nlohmann::json& cfg, const CommandContext& ctx);
int run_secular(const nlohmann::json& cfg, const CommandContext& ctx);
int run_risk(const nlohmann::json& cfg, const CommandContext& ctx);

/// Loads the config document; a top-level array is a sweep and each entry is
/// dispatched into its own subdirectory, data-parallel up to EULER2C_THREADS.
int run_command(const std::string& command, const std::string& config_path,
                const CommandContext& ctx);

} // namespace euler2c::cli
