#include "vilenkin/group.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace vilenkin {

GroupSpec::GroupSpec(std::vector<std::uint32_t> m) : radices(std::move(m)) {
  if (radices.empty()) throw std::invalid_argument("GroupSpec: empty radix sequence");
  for (auto r : radices)
    if (r < 2) throw std::invalid_argument("GroupSpec: every radix must be >= 2");
}

GroupSpec GroupSpec::walsh(std::size_t depth) {
  return GroupSpec(std::vector<std::uint32_t>(depth, 2));
}

namespace {

std::string strip_spaces(const std::string& s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

}  // namespace

GroupSpec GroupSpec::parse(const std::string& text) {
  const std::string s = strip_spaces(text);
  if (s.rfind("walsh(", 0) == 0 && s.back() == ')') {
    std::size_t depth = std::stoul(s.substr(6, s.size() - 7));
    if (depth == 0) throw std::invalid_argument("group spec: walsh depth must be positive");
    return walsh(depth);
  }
  auto open = s.find("radices=[");
  auto close = s.find(']');
  if (open == std::string::npos || close == std::string::npos || close < open)
    throw std::invalid_argument("group spec: expected walsh(N) or radices=[...],depth=N");
  std::vector<std::uint32_t> list;
  std::stringstream ss(s.substr(open + 9, close - open - 9));
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) list.push_back(static_cast<std::uint32_t>(std::stoul(item)));
  }
  if (list.empty()) throw std::invalid_argument("group spec: empty radix list");
  std::size_t depth = list.size();
  auto dpos = s.find("depth=", close);
  if (dpos != std::string::npos) depth = std::stoul(s.substr(dpos + 6));
  if (depth == 0) throw std::invalid_argument("group spec: depth must be positive");
  std::vector<std::uint32_t> radices(depth);
  for (std::size_t i = 0; i < depth; ++i) radices[i] = list[i % list.size()];
  return GroupSpec(std::move(radices));
}

std::string GroupSpec::to_string() const {
  bool all2 = std::all_of(radices.begin(), radices.end(), [](std::uint32_t r) { return r == 2; });
  if (all2) return "walsh(" + std::to_string(depth()) + ")";
  std::string out = "radices=[";
  for (std::size_t i = 0; i < radices.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(radices[i]);
  }
  out += "],depth=" + std::to_string(depth());
  return out;
}

BaseSizes base_sizes(const GroupSpec& spec) {
  BaseSizes b;
  b.M.reserve(spec.depth() + 1);
  b.M.push_back(1);
  for (auto r : spec.radices) b.M.push_back(checked_mul_u64(b.M.back(), r));
  return b;
}

std::vector<BigUInt> base_sizes_big(const GroupSpec& spec, std::size_t upto) {
  if (upto > spec.depth()) throw std::out_of_range("base_sizes_big: rank exceeds depth");
  std::vector<BigUInt> M;
  M.reserve(upto + 1);
  M.emplace_back(1);
  for (std::size_t k = 0; k < upto; ++k) {
    BigUInt next = M.back();
    next.mul_small(spec.radices[k]);
    M.push_back(std::move(next));
  }
  return M;
}

Point zero_point(const GroupSpec& spec) {
  return Point{std::vector<std::uint32_t>(spec.depth(), 0)};
}

void check_point(const Point& x, const GroupSpec& spec) {
  if (x.digits.size() != spec.depth())
    throw std::invalid_argument("Point: digit count differs from depth");
  for (std::size_t j = 0; j < x.digits.size(); ++j)
    if (x.digits[j] >= spec.radices[j])
      throw std::invalid_argument("Point: digit not below its radix");
}

Idx digits_of(std::uint64_t n, const GroupSpec& spec) {
  Idx idx;
  idx.value = n;
  idx.digits.resize(spec.depth());
  std::uint64_t r = n;
  for (std::size_t j = 0; j < spec.depth(); ++j) {
    idx.digits[j] = static_cast<std::uint32_t>(r % spec.radices[j]);
    r /= spec.radices[j];
  }
  if (r != 0) throw std::out_of_range("digits_of: index not below M_N");
  return idx;
}

std::uint64_t value_of_digits(const std::vector<std::uint32_t>& digits, const GroupSpec& spec) {
  if (digits.size() != spec.depth())
    throw std::invalid_argument("value_of_digits: digit count differs from depth");
  std::uint64_t value = 0;
  std::uint64_t place = 1;
  for (std::size_t j = 0; j < digits.size(); ++j) {
    if (digits[j] >= spec.radices[j])
      throw std::invalid_argument("value_of_digits: digit not below its radix");
    value = checked_add_u64(value, checked_mul_u64(digits[j], place));
    place = checked_mul_u64(place, spec.radices[j]);
  }
  return value;
}

Cylinder cylinder_of(const Point& x, std::size_t rank, const GroupSpec& spec) {
  check_point(x, spec);
  if (rank > spec.depth()) throw std::out_of_range("cylinder_of: rank exceeds depth");
  return Cylinder{rank, std::vector<std::uint32_t>(x.digits.begin(), x.digits.begin() + rank)};
}

Rational cylinder_measure(const Cylinder& c, const GroupSpec& spec) {
  if (c.rank > spec.depth()) throw std::out_of_range("cylinder_measure: rank exceeds depth");
  std::uint64_t m = 1;
  for (std::size_t j = 0; j < c.rank; ++j) m = checked_mul_u64(m, spec.radices[j]);
  return Rational(1, static_cast<std::int64_t>(m));
}

bool cylinder_contains(const Cylinder& c, const Point& x) {
  for (std::size_t j = 0; j < c.rank; ++j)
    if (x.digits[j] != c.base[j]) return false;
  return true;
}

Point group_add(const Point& x, const Point& y, const GroupSpec& spec) {
  check_point(x, spec);
  check_point(y, spec);
  Point z = x;
  for (std::size_t j = 0; j < z.digits.size(); ++j)
    z.digits[j] = (x.digits[j] + y.digits[j]) % spec.radices[j];
  return z;
}

Point group_neg(const Point& x, const GroupSpec& spec) {
  check_point(x, spec);
  Point z = x;
  for (std::size_t j = 0; j < z.digits.size(); ++j)
    z.digits[j] = (spec.radices[j] - x.digits[j]) % spec.radices[j];
  return z;
}

CellLayout cell_layout(const GroupSpec& spec) {
  CellLayout layout;
  layout.bases = base_sizes(spec);
  layout.strides.assign(spec.depth(), 1);
  for (std::size_t j = spec.depth() - 1; j-- > 0;)
    layout.strides[j] = layout.strides[j + 1] * spec.radices[j + 1];
  return layout;
}

std::uint64_t cell_of_point(const Point& x, const CellLayout& layout) {
  std::uint64_t c = 0;
  for (std::size_t j = 0; j < x.digits.size(); ++j) c += x.digits[j] * layout.strides[j];
  return c;
}

Point point_of_cell(std::uint64_t cell, const GroupSpec& spec, const CellLayout& layout) {
  Point x;
  x.digits.resize(spec.depth());
  for (std::size_t j = 0; j < spec.depth(); ++j) {
    x.digits[j] = static_cast<std::uint32_t>(cell / layout.strides[j]);
    cell %= layout.strides[j];
  }
  return x;
}

}  // namespace vilenkin
