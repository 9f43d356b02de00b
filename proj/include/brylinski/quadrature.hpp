#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace brylinski {

struct GaussLegendreRule {
    std::vector<double> nodes;   // on [-1, 1]
    std::vector<double> weights;
};

/// n-point Gauss-Legendre rule; cached per n.
const GaussLegendreRule& gauss_legendre(int n);

/// Fixed-order pairwise (cascade) summation. The result depends only on the input order.
double pairwise_sum(std::span<const double> values);
std::complex<double> pairwise_sum(std::span<const std::complex<double>> values);

} // namespace brylinski
