#pragma once

// Configuration, serialization and the subcommands behind the `cvue` tool.
// Every command is a pure function of its RunConfig; the same config and seed
// give byte-identical output.

#include <cstdint>
#include <string>

#include "json.hpp"

#include "cvue/adversary.hpp"
#include "cvue/bounds.hpp"
#include "cvue/channel.hpp"
#include "cvue/codec.hpp"
#include "cvue/protocol.hpp"

namespace cvue {

enum class OutputFormat { csv, json };

struct RunConfig {
  ProtocolParams protocol = make_params(892, 1000, 35, 0.4, 3.4);
  ChannelParams channel;
  CodecScheme codec = CodecScheme::oracle;
  std::uint64_t seed = 1;
  std::uint64_t trials = 1000;
  std::uint64_t modes = 100000;  // ebcheck sample count
  std::string figure = "fig1";   // fig1, fig2a, fig2b, fig4 or report
  FigureGrid grid = default_grid(FigureId::fig1);
  bool grid_overridden = false;
  AttackStrategy strategy;
  std::string out = "-";
  OutputFormat format = OutputFormat::csv;

  /// Re-validates every module invariant; throws std::invalid_argument.
  void validate() const;
};

/// Missing keys keep their defaults. Unknown keys are rejected.
RunConfig config_from_json(const nlohmann::json& j);
nlohmann::json config_to_json(const RunConfig& config);
/// FNV-1a 64 of the canonical config JSON, as 16 hex digits.
std::string config_hash(const RunConfig& config);

nlohmann::json key_to_json(const QecmKey& key, const ProtocolParams& params);
/// Parses a key file; `params` receives the embedded parameters.
QecmKey key_from_json(const nlohmann::json& j, ProtocolParams& params);

/// Shortest round-trip decimal form.
std::string format_number(double value);

std::string cmd_keygen(const RunConfig& config);
std::string cmd_roundtrip(const RunConfig& config);
std::string cmd_bounds(const RunConfig& config);
std::string cmd_attack(const RunConfig& config);
std::string cmd_ebcheck(const RunConfig& config);

/// Entry point of the command-line tool; returns the process exit code.
int run_cli(int argc, char** argv);

}  // namespace cvue
