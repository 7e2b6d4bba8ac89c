#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "catcrypt/experiments.hpp"

namespace catcrypt::cli {

// Runs one command line. `args` excludes the program name. Returns the
// process exit status: 0 on success, nonzero on usage or runtime errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// "16,32,64" or ranges "16..256". A size range selects the members of the
// default grid that fall inside it; a round range expands to every integer.
[[nodiscard]] std::vector<std::size_t> parse_size_list(std::string_view text);
[[nodiscard]] std::vector<unsigned> parse_round_list(std::string_view text);
[[nodiscard]] std::vector<double> parse_percent_list(std::string_view text);

// Accepts decimal or 0x-prefixed hex.
[[nodiscard]] std::uint64_t parse_seed(std::string_view text);

// Fixed 4-decimal cell; infinity prints as "inf".
[[nodiscard]] std::string format_cell(double v);

[[nodiscard]] std::string avalanche_csv(const std::vector<AvalancheCell>& cells);
[[nodiscard]] std::string uniformity_csv(const std::vector<UniformityCell>& cells);
[[nodiscard]] std::string errorprop_csv(const std::vector<ErrorPropCell>& rows);
[[nodiscard]] std::string keyspace_csv(const std::vector<KeyspaceReport>& reports);

}  // namespace catcrypt::cli
