#pragma once

#include "expurg/channel.hpp"
#include "expurg/curves.hpp"
#include "expurg/errors.hpp"

#include <json.hpp>

#include <iosfwd>
#include <optional>
#include <string>

namespace expurg {

// File/parse-level failure (missing file, malformed JSON); validation
// failures keep their expurg::Error types.
struct FileError : Error {
  using Error::Error;
};

struct ChannelSpec {
  Channel channel;
  std::optional<InputDistribution> q;  // the optional "input" array
};

// Channel spec file: {"transition": [[...], ...], "input": [...]}.
ChannelSpec parse_channel_spec(const nlohmann::json& j);
ChannelSpec load_channel_spec(const std::string& path);

struct ExportOptions {
  bool reproducible = false;  // suppress the timestamp header / field
  bool bits = false;          // convert rates and exponents by ln 2 on output
};

// Formats a double with 12 significant digits; infinities print as "inf".
std::string format_number(double v);

// Parses what format_number wrote; both CSV and JSON go through this pair so
// the two emissions of one run carry bit-identical values.
double parse_number(const std::string& s);

// CSV with header R,value,rho_star,s_star,phase. A leading "# generated"
// comment line is present unless reproducible.
void write_curve_csv(std::ostream& os, const ExponentCurve& curve,
                     const ExportOptions& opts = {});

// JSON mirror with curve metadata (kind, R1, zero_rate_value, ...).
nlohmann::json curve_to_json(const ExponentCurve& curve,
                             const ExportOptions& opts = {});

}  // namespace expurg
