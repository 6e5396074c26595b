#include "vilenkin/csv.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace vilenkin {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_vector_csv(std::ostream& out, const Eigen::VectorXcd& v,
                      const std::string& index_name) {
  out << index_name << ",real,imag\n";
  for (Eigen::Index i = 0; i < v.size(); ++i)
    out << i << ',' << format_double(v(i).real()) << ',' << format_double(v(i).imag())
        << '\n';
}

Eigen::VectorXcd read_vector_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("csv: empty input");
  std::vector<std::complex<double>> vals;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::stringstream ss(line);
    std::string idx, re, im;
    if (!std::getline(ss, idx, ',') || !std::getline(ss, re, ',') || !std::getline(ss, im))
      throw std::runtime_error("csv: malformed row: " + line);
    vals.emplace_back(std::stod(re), std::stod(im));
  }
  Eigen::VectorXcd v(static_cast<Eigen::Index>(vals.size()));
  for (std::size_t i = 0; i < vals.size(); ++i) v(static_cast<Eigen::Index>(i)) = vals[i];
  return v;
}

void write_grid_csv(std::ostream& out, const GridFunction& f) {
  write_vector_csv(out, f.values, "cell");
}

void write_spectrum_csv(std::ostream& out, const Spectrum& s) {
  write_vector_csv(out, s.coeffs, "index");
}

GridFunction read_grid_csv(std::istream& in, const GroupSpec& spec) {
  return GridFunction(spec, read_vector_csv(in));
}

Spectrum read_spectrum_csv(std::istream& in, const GroupSpec& spec) {
  return Spectrum(spec, read_vector_csv(in));
}

}  // namespace vilenkin
