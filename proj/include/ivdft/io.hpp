#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ivdft/amplitude.hpp"
#include "ivdft/interval.hpp"

namespace ivdft {

/// Column layout of an input CSV.
enum class Schema {
  lo_hi,            // lo,hi
  value_halfwidth,  // value,halfwidth
  value,            // value, with one global precision
};

std::optional<Schema> parse_schema(std::string_view name);
std::string_view to_string(Schema s);

/// Parses CSV text. A first row that does not parse as numbers is taken as a
/// header; blank lines are skipped. `precision` is required by Schema::value
/// and rejected by the other schemas. Errors name the offending line.
IntervalSignal parse_signal(std::string_view text, Schema schema,
                            std::optional<double> precision = std::nullopt);
IntervalSignal ingest(const std::filesystem::path& path, Schema schema,
                      std::optional<double> precision = std::nullopt);

/// Run metadata echoed into JSON outputs.
struct RunInfo {
  std::uint64_t seed = 0;
  MinimumRule rule = MinimumRule::exact;
};

inline constexpr std::string_view kToolVersion = "1.0.0";

std::string spectrum_csv(const BoundedSpectrum& spectrum);
nlohmann::json spectrum_json(const BoundedSpectrum& spectrum, const RunInfo& info);

std::string comparison_csv(const std::vector<ComparisonRow>& rows);
nlohmann::json comparison_json(const std::vector<ComparisonRow>& rows, std::size_t length,
                               const RunInfo& info);

/// Lower and upper amplitude curves against k as a standalone SVG document.
std::string spectrum_svg(const std::vector<const BoundedSpectrum*>& spectra,
                         std::string_view title);

}  // namespace ivdft
