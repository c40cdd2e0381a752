#include "gentaylor/io.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <iostream>
#include <sstream>

#include "gentaylor/errors.hpp"

namespace gt {
namespace {

double parse_real(const std::string& text, const std::string& spec) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size() || !std::isfinite(v)) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw InputError("grid spec '" + spec + "': '" + text + "' is not a finite number");
  }
}

void stream_csv(std::ostream& out, const std::vector<std::string>& header,
                const std::vector<std::vector<double>>& rows) {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i > 0) out << ',';
    out << header[i];
  }
  out << '\n';
  for (const std::vector<double>& row : rows) {
    if (row.size() != header.size()) {
      throw ArgumentError("CSV row width does not match the header");
    }
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out << ',';
      out << format_double(row[i]);
    }
    out << '\n';
  }
}

}  // namespace

std::vector<double> parse_grid(const std::string& spec) {
  const std::size_t first = spec.find(':');
  const std::size_t second = (first == std::string::npos)
                                 ? std::string::npos
                                 : spec.find(':', first + 1);
  if (second == std::string::npos || spec.find(':', second + 1) != std::string::npos) {
    throw InputError("grid spec '" + spec + "' must look like start:stop:count");
  }
  const double start = parse_real(spec.substr(0, first), spec);
  const double stop = parse_real(spec.substr(first + 1, second - first - 1), spec);

  const std::string count_text = spec.substr(second + 1);
  long count = 0;
  try {
    std::size_t used = 0;
    count = std::stol(count_text, &used);
    if (used != count_text.size()) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw InputError("grid spec '" + spec + "': '" + count_text +
                     "' is not an integer count");
  }
  if (count < 1 || count > 1000000) {
    throw InputError("grid spec '" + spec + "': count must be in 1..1000000");
  }

  std::vector<double> points(static_cast<std::size_t>(count));
  if (count == 1) {
    points[0] = start;
  } else {
    const double h = (stop - start) / static_cast<double>(count - 1);
    for (long i = 0; i < count; ++i) {
      points[static_cast<std::size_t>(i)] = start + static_cast<double>(i) * h;
    }
    points.back() = stop;  // land on the endpoint exactly
  }
  return points;
}

std::string format_double(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows) {
  if (path.empty() || path == "-") {
    stream_csv(std::cout, header, rows);
    std::cout.flush();
    return;
  }
  const std::string tmp = path + ".tmp~";
  try {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw InputError("cannot open '" + tmp + "' for writing");
    }
    stream_csv(out, header, rows);
    out.flush();
    if (!out) {
      throw InputError("write to '" + tmp + "' failed");
    }
  } catch (...) {
    std::remove(tmp.c_str());
    throw;
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    const std::string why = std::strerror(errno);
    std::remove(tmp.c_str());
    throw InputError("cannot move output into '" + path + "': " + why);
  }
}

}  // namespace gt
