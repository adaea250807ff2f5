#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "glmn/config.hpp"
#include "glmn/context.hpp"

namespace glmn {

struct RunOptions {
  std::optional<std::uint64_t> seed;  // overrides "seed" in the document
};

struct Outcome {
  config::json report;
  bool pass = false;
};

const std::vector<std::string>& command_names();

// Runs one subcommand on a parsed document. Input problems throw Error.
Outcome run_command(Context& ctx, const std::string& command, const config::json& doc, const RunOptions& opts);

// Line-oriented rendering of a report.
std::string render_text(const config::json& report);

}  // namespace glmn
