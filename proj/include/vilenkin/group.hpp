#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vilenkin/bigint.hpp"

namespace vilenkin {

/// A finite model of a bounded product group of cyclic components: the radix
/// sequence m_0..m_{N-1} (each >= 2) and the truncation depth N.
///
/// Everything downstream treats functions as constant on the depth-N cells,
/// so all integrals are exact finite sums.
struct GroupSpec {
  std::vector<std::uint32_t> radices;

  explicit GroupSpec(std::vector<std::uint32_t> m);

  std::size_t depth() const { return radices.size(); }

  /// Constant-radix-2 group of the given depth (Walsh-Paley setting).
  static GroupSpec walsh(std::size_t depth);

  /// Parses "walsh(8)" or "radices=[2,3,2],depth=3".  When depth exceeds the
  /// list length the radix list repeats cyclically.
  static GroupSpec parse(const std::string& text);

  std::string to_string() const;
  bool operator==(const GroupSpec& rhs) const { return radices == rhs.radices; }
};

/// Mixed-radix place values M_0 = 1, M_{k+1} = m_k M_k (N+1 entries).
struct BaseSizes {
  std::vector<std::uint64_t> M;

  std::uint64_t total() const { return M.back(); }
};

/// Throws std::overflow_error if M_N exceeds 64 bits.
BaseSizes base_sizes(const GroupSpec& spec);

/// Place values as big integers, for depths where 64 bits overflow.
std::vector<BigUInt> base_sizes_big(const GroupSpec& spec, std::size_t upto);

/// A group element: one digit per coordinate, digit j strictly below m_j.
struct Point {
  std::vector<std::uint32_t> digits;
};

Point zero_point(const GroupSpec& spec);
void check_point(const Point& x, const GroupSpec& spec);

/// An index n < M_N together with its mixed-radix digit expansion
/// n = sum_j n_j M_j.
struct Idx {
  std::uint64_t value = 0;
  std::vector<std::uint32_t> digits;
};

/// Digit decomposition; throws std::out_of_range for n >= M_N.
Idx digits_of(std::uint64_t n, const GroupSpec& spec);

/// Inverse of digits_of on valid digit vectors.
std::uint64_t value_of_digits(const std::vector<std::uint32_t>& digits, const GroupSpec& spec);

/// The set of points agreeing with a fixed prefix of length `rank`;
/// measure exactly 1/M_rank.
struct Cylinder {
  std::size_t rank = 0;
  std::vector<std::uint32_t> base;
};

Cylinder cylinder_of(const Point& x, std::size_t rank, const GroupSpec& spec);
Rational cylinder_measure(const Cylinder& c, const GroupSpec& spec);
bool cylinder_contains(const Cylinder& c, const Point& x);

/// Coordinatewise addition mod m_j (the group law).
Point group_add(const Point& x, const Point& y, const GroupSpec& spec);
Point group_neg(const Point& x, const GroupSpec& spec);

/// Dense-grid cell layout: cells are depth-N cylinders in digit-lexicographic
/// order with coordinate 0 most significant, so every rank-n cylinder is a
/// contiguous block of M_N / M_n cells.
struct CellLayout {
  BaseSizes bases;
  std::vector<std::uint64_t> strides;  // strides[j] = M_N / M_{j+1}

  std::uint64_t size() const { return bases.total(); }
};

CellLayout cell_layout(const GroupSpec& spec);
std::uint64_t cell_of_point(const Point& x, const CellLayout& layout);
Point point_of_cell(std::uint64_t cell, const GroupSpec& spec, const CellLayout& layout);

}  // namespace vilenkin
