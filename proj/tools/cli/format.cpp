#include "format.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace qfock::cli {
namespace {

double parse_double(const std::string& s, const std::string& whole) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse number in '" + whole + "'");
  }
  if (used != s.size()) throw std::invalid_argument("trailing characters in '" + whole + "'");
  return v;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::string format_real(double v) {
  if (v == 0.0) v = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

std::string format_full(double v) {
  if (v == 0.0) v = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_complex(std::complex<double> z) {
  return format_real(z.real()) + (z.imag() < 0.0 ? "-" : "+") + format_real(std::abs(z.imag())) + "i";
}

std::complex<double> parse_complex(const std::string& raw) {
  const std::string s = trim(raw);
  if (s.empty()) throw std::invalid_argument("empty complex literal");
  if (s.back() != 'i') return {parse_double(s, raw), 0.0};
  const std::string body = s.substr(0, s.size() - 1);
  // The split is the last sign that is not leading and not an exponent sign.
  std::size_t split = std::string::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  const std::string re = split == std::string::npos ? "" : body.substr(0, split);
  std::string im = split == std::string::npos ? body : body.substr(split);
  if (im.empty() || im == "+") im = "1";
  if (im == "-") im = "-1";
  return {re.empty() ? 0.0 : parse_double(re, raw), parse_double(im, raw)};
}

std::pair<double, double> parse_pair(const std::string& raw) {
  const auto comma = raw.find(',');
  if (comma == std::string::npos) throw std::invalid_argument("expected x,y but got '" + raw + "'");
  return {parse_double(trim(raw.substr(0, comma)), raw), parse_double(trim(raw.substr(comma + 1)), raw)};
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace qfock::cli
