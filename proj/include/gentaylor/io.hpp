#pragma once

#include <string>
#include <vector>

namespace gt {

/// Parse an inclusive grid spec "start:stop:count" into count evenly spaced
/// points. count must be a positive integer; a single point needs count 1.
/// Throws InputError on malformed specs.
std::vector<double> parse_grid(const std::string& spec);

/// Shortest decimal form that round-trips a double (17 significant digits).
std::string format_double(double value);

/// Write a CSV table: header row then one row per entry, LF line endings,
/// floats at full precision. path "-" targets standard output; real files
/// are written to a temporary name first and renamed into place.
void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows);

}  // namespace gt
