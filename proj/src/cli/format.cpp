#include "cl12/cli/format.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace cl12::cli {

double round12(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  const double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;
}

std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", round12(x));
  return buf;
}

std::string format_multivector(const Multivector& a) {
  double largest = 0.0;
  for (std::size_t t = 0; t < 8; ++t) largest = std::max(largest, std::abs(a[t]));

  std::string out;
  for (std::size_t t = 0; t < 8; ++t) {
    const double c = round12(a[t]);
    if (c == 0.0 || std::abs(c) <= 1e-12 * largest) continue;
    const std::string mag = format_number(std::abs(c));
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    if (t == 0)
      out += mag;
    else if (mag == "1")
      out += "e" + std::to_string(t);
    else
      out += mag + " e" + std::to_string(t);
  }
  return out.empty() ? "0" : out;
}

std::string format_complex(std::complex<double> z) {
  const double scale = 1e-12 * (1.0 + std::abs(z));
  const double re = std::abs(z.real()) <= scale ? 0.0 : round12(z.real());
  const double im = std::abs(z.imag()) <= scale ? 0.0 : round12(z.imag());

  auto imag_part = [](double v) {
    const std::string mag = format_number(std::abs(v));
    return (mag == "1" ? std::string() : mag) + "i";
  };
  if (im == 0.0) return format_number(re);
  if (re == 0.0) return (im < 0 ? "-" : "") + imag_part(im);
  return format_number(re) + (im < 0 ? "-" : "+") + imag_part(im);
}

std::string format_matrix(const Mat8& m) {
  std::size_t width = 1;
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) width = std::max(width, format_number(m(i, j)).size());
  std::ostringstream os;
  for (std::size_t i = 0; i < 8; ++i) {
    for (std::size_t j = 0; j < 8; ++j) {
      const std::string s = format_number(m(i, j));
      os << (j ? " " : "") << std::string(width - s.size(), ' ') << s;
    }
    os << '\n';
  }
  return os.str();
}

nlohmann::json multivector_json(const Multivector& a) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (std::size_t t = 0; t < 8; ++t) coeffs.push_back(round12(a[t]));
  const Functionals f = functionals(a);
  return {{"coeffs", coeffs}, {"N", round12(f.N)}, {"T", round12(f.T)}, {"P", round12(f.P)}};
}

}  // namespace cl12::cli
