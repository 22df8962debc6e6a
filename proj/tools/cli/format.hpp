#pragma once

#include <complex>
#include <string>

namespace qfock::cli {

/// %.15g, with -0 printed as 0.
std::string format_real(double v);
/// %.17g (round-trip), with -0 printed as 0. Used for artifacts.
std::string format_full(double v);
/// a+bi / a-bi.
std::string format_complex(std::complex<double> z);
/// Parses "a", "bi", "a+bi", "a-bi" (b may be omitted: "1+i").
/// Throws std::invalid_argument.
std::complex<double> parse_complex(const std::string& text);
/// Parses "x,y". Throws std::invalid_argument.
std::pair<double, double> parse_pair(const std::string& text);
/// Quotes a CSV field when it contains a comma, quote or newline.
std::string csv_field(const std::string& s);

}  // namespace qfock::cli
