#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

namespace gbs::cli {

/// Exit codes shared by every command.
enum ExitCode : int {
  kPass = 0,
  kError = 1,
  kVerificationFailed = 2,
  kNonFaithful = 3,
};

struct RunConfig {
  std::string graph;
  std::string config;
  std::string system;
  std::string mode = "cstar";
  std::string variant = "cstar";
  unsigned max_power = 10;
  std::uint64_t seed = 20240611;
  /// Random step functions probed by the reproduce scenarios.
  unsigned spot_checks = 16;
  bool pretty = false;
};

struct CommandResult {
  nlohmann::json report;
  int exit_code = kPass;
};

CommandResult cmd_analyze(const RunConfig& rc);
/// Rotation system when a config is given, otherwise the affine system.
CommandResult cmd_build(const RunConfig& rc);
/// From a system dump, or from graph (+ config).
CommandResult cmd_verify(const RunConfig& rc);
CommandResult cmd_faithful(const RunConfig& rc);
CommandResult cmd_converse(const RunConfig& rc);
CommandResult cmd_reproduce(const RunConfig& rc, std::string_view scenario);

/// Dispatches by name and turns gbs::Error into error JSON with exit 1.
CommandResult run(std::string_view command, const RunConfig& rc, std::string_view scenario = {});

std::string render(const CommandResult& result, bool pretty);

}  // namespace gbs::cli
