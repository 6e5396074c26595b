#pragma once

#include <complex>
#include <cstdint>

#include "vilenkin/cyclotomic.hpp"
#include "vilenkin/group.hpp"

namespace vilenkin {

/// lcm of the radices: every character value is an order-th root of unity.
std::uint32_t root_order(const GroupSpec& spec);

/// Generalized Rademacher function r_k(x) = exp(2*pi*i x_k / m_k), exact.
RootOfUnity rademacher(std::size_t k, const Point& x, const GroupSpec& spec);

/// Vilenkin character psi_n(x) = prod_k r_k(x)^{n_k}, exact root of unity.
RootOfUnity psi(const Idx& n, const Point& x, const GroupSpec& spec);
RootOfUnity psi_at(std::uint64_t n, const Point& x, const GroupSpec& spec);

std::complex<double> psi_value(std::uint64_t n, const Point& x, const GroupSpec& spec);

/// Kernel D_n(x) = sum_{k<n} psi_k(x) by direct summation; feasible for
/// small n only.
std::complex<double> dirichlet_naive(std::uint64_t n, const Point& x, const GroupSpec& spec);

/// Same sum as an exact cyclotomic integer.
Cyclotomic dirichlet_naive_exact(std::uint64_t n, const Point& x, const GroupSpec& spec);

/// Closed form of D_{M_n}: M_n on the rank-n cylinder at 0, zero elsewhere.
std::uint64_t dirichlet_base_closed(std::size_t n, const Point& x, const GroupSpec& spec);

/// D_n(x) in O(sum_j m_j) time, independent of the size of n, via the
/// digit-block decomposition
///   D_n(x) = sum_j psi_tail_j(x) * (sum_{u<n_j} r_j(x)^u) * D_{M_j}(x),
/// where tail_j carries the digits of n above position j.  Requires n < M_N;
/// validated against dirichlet_naive exhaustively in the test suite.
std::complex<double> dirichlet_lazy(std::uint64_t n, const Point& x, const GroupSpec& spec);

enum class KernelBackend { exact, floating };

/// Checks the shift identity D_{j+M_k}(x) = D_{M_k}(x) + psi_{M_k}(x) D_j(x)
/// for j < M_k, exactly (cyclotomic) or to 1e-12 (floating path).
bool dirichlet_shift_check(std::uint64_t j, std::size_t k, const Point& x,
                           const GroupSpec& spec,
                           KernelBackend backend = KernelBackend::exact);

}  // namespace vilenkin
