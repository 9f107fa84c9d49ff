#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "consensus_lab/weighted_digraph.hpp"

namespace consensus_lab::cli {

enum ExitCode : int { kOk = 0, kUsageError = 1, kVerificationFailure = 2 };

/// Entry point behind the `consensus_lab` executable. `args` excludes the
/// program name. Subcommands: simulate, connectivity, counterexample, matrix,
/// probe. `--config <file>` supplies key=value defaults that explicit flags
/// override.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// The `matrix` report: decimal rows, then rational rows when every weight
/// has a denominator <= 10^6 and the exact arithmetic fits in 64 bits.
std::string matrix_report(const WeightedDigraph& g);

/// Comma- or whitespace-separated decimals. Throws std::invalid_argument.
std::vector<double> parse_number_list(std::string_view text);

/// Seed from CONSENSUS_LAB_SEED, or 0 when unset. Throws std::invalid_argument
/// when it is set but not an unsigned integer.
std::uint64_t default_seed();

}  // namespace consensus_lab::cli
