#pragma once

// optcyc command line: build, dual, verify, table, decode, field-info.
//
// Every command assembles one ordered JSON document and renders it as text
// (key=value lines), JSON, or CSV, so the three formats carry the same
// numbers. Exit codes: 0 ok, 1 claim failure, 2 usage/config error,
// 3 internal cross-check mismatch.

#include "json.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace optcyc::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int { kOk = 0, kClaimFailure = 1, kUsage = 2, kMismatch = 3 };

enum class Format { Text, Json, Csv };

struct RunConfig {
  std::string command;
  std::optional<std::uint64_t> q;
  std::optional<std::uint32_t> p;
  std::optional<std::uint32_t> m;
  std::optional<std::string> base_modulus;
  std::optional<std::string> top_modulus;
  Format format = Format::Text;
  std::vector<std::string> claims;
  std::vector<std::string> q_list;
  std::optional<std::uint64_t> demo;
  std::uint64_t seed = 1;
  std::uint64_t max_enumeration = 100'000'000;
  std::uint32_t max_q = 256;
  std::vector<std::string> frames;
};

struct Result {
  int exit_code = kOk;
  std::string out;
  std::string err;
};

/// Parses args (without the program name) and runs the command.
Result run(const std::vector<std::string>& args);
/// Runs an already parsed configuration.
Result execute(const RunConfig& config);

/// The JSON document behind a successful command; throws optcyc::Error.
Json report(const RunConfig& config, int& exit_code);

std::string render_text(const Json& doc);
std::string render_csv(const std::string& command, const Json& doc);

}  // namespace optcyc::cli
