#pragma once

#include <iosfwd>
#include <string>

#include "vilenkin/grid.hpp"

namespace vilenkin {

/// Rows "index,real,imag" under a one-line header; values printed with 17
/// significant digits so identical data round-trips byte-identically.
void write_vector_csv(std::ostream& out, const Eigen::VectorXcd& v,
                      const std::string& index_name);
Eigen::VectorXcd read_vector_csv(std::istream& in);

void write_grid_csv(std::ostream& out, const GridFunction& f);
void write_spectrum_csv(std::ostream& out, const Spectrum& s);
GridFunction read_grid_csv(std::istream& in, const GroupSpec& spec);
Spectrum read_spectrum_csv(std::istream& in, const GroupSpec& spec);

std::string format_double(double v);

}  // namespace vilenkin
