#pragma once

#include "qdga/calculus.hpp"
#include "qdga/format.hpp"
#include "qdga/ideal.hpp"
#include "qdga/reduce.hpp"
#include "qdga/xi.hpp"

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <memory>
#include <string>
#include <vector>

namespace qdga {

/// Session settings, read from a JSON document:
///
///   {
///     "n": 2,
///     "preset": "commutative" | "scalar-twist" | "constant",   (optional)
///     "twist": "q",                                             (scalar-twist only)
///     "xi_entries": [[["x1", "0"], ["0", "x1"]], ...],          xi_entries[i][k][j] = xi_k^{ij}
///     "bounds": {"grade_bound": -1, "word_bound": -1, "max_steps": 100000, "size_cap": 200000},
///     "format": "text" | "latex" | "json",
///     "seed": 12345,
///     "letter_order": "ascending" | "descending"
///   }
///
/// Either a preset or the full n x n x n entry table must be present; the
/// preset wins when both are given.
struct SessionConfig {
  std::size_t n = 2;
  std::string preset;
  std::string twist = "q";
  std::vector<std::vector<std::vector<std::string>>> xi_entries;
  Bounds bounds;
  std::size_t max_steps = 100000;
  OutputFormat format = OutputFormat::Text;
  std::uint64_t seed = 20061;
  LetterOrder letter_order = LetterOrder::Ascending;
};

/// Throws ConfigError on malformed documents.
SessionConfig config_from_json(const nlohmann::json& doc);
SessionConfig load_config(const std::filesystem::path& path);
SessionConfig preset_config(const std::string& preset, std::size_t n = 2);
nlohmann::json to_json(const SessionConfig& cfg);

std::shared_ptr<const XiHomomorphism> build_xi(const SessionConfig& cfg);

/// The immutable contexts built from a configuration, shared by all commands.
struct Session {
  SessionConfig config;
  std::shared_ptr<const XiHomomorphism> xi;
  std::shared_ptr<const Calculus> calculus;
  std::shared_ptr<const Ideal> ideal;

  std::string preset_label() const { return config.preset.empty() ? "custom" : config.preset; }
};

Session make_session(const SessionConfig& cfg);

const std::vector<std::string>& preset_names();

}  // namespace qdga
