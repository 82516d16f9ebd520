#pragma once

#include <filesystem>
#include <string_view>

#include "haneat/experiment.hpp"

namespace haneat {

/// Applies a flat JSON object of ExperimentSpec/EvolutionConfig fields.
/// Unknown keys and ill-typed values raise ConfigError.
void apply_config(ExperimentSpec& spec, std::string_view json_text);

ExperimentSpec load_config(const std::filesystem::path& path);

/// The effective configuration as a flat JSON object (round-trips through apply_config).
std::string dump_config(const ExperimentSpec& spec);

}  // namespace haneat
