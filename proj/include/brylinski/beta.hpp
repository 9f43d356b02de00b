#pragma once

// Direct double quadrature of the beta functions in their convergence half-planes.
//
// The inner integral is a punctured periodic trapezoid sum corrected at the diagonal by the
// zeta-function terms of the generalized Euler-Maclaurin expansion, which makes the rule accurate
// to O(h^(Re s + m + K + 2)) instead of O(h^(Re s + m + 1)).

#include <brylinski/curves.hpp>
#include <brylinski/special.hpp>

#include <string>

namespace brylinski {

enum class BetaKind { single_layer, coaxial, b1, b2 };

const char* beta_kind_name(BetaKind kind) noexcept;

struct QuadratureSpec {
    int nodes = 512; // per parameter circle; the estimate compares nodes against 2 * nodes
};

struct BetaValue {
    cplx s;
    cplx value;
    double abs_error_estimate = 0.0;
    BetaKind kind = BetaKind::single_layer;
    std::string method;
};

inline constexpr double single_layer_margin = 0.25;
inline constexpr double b2_margin = 0.25;
/// Order of the diagonal correction series used by the direct rule.
inline constexpr int direct_correction_order = 10;

/// s (s-2) (s+1) (s-1): the factor relating B1(s) to B_M(s-4) for curves in R^3.
cplx coaxial_polynomial(cplx s);

/// B_M(s) for Re s > -1 + margin.
BetaValue beta_single_layer(const Curve& curve, cplx s, const QuadratureSpec& spec = {});

/// The B2 integrand at parameters (x, y), arclength measure not included.
cplx b2_integrand(const Curve& curve, double x, double y, cplx s);

/// B2(s) for Re s > 1 + margin.
BetaValue beta_b2(const Curve& curve, cplx s, const QuadratureSpec& spec = {});

/// B1(s) = s (s-2) (s+1) (s-1) B_M(s-4).
BetaValue beta_b1(const Curve& curve, cplx s, const QuadratureSpec& spec = {});

/// B1 + B2 for Re s > 4.
BetaValue beta_coaxial(const Curve& curve, cplx s, const QuadratureSpec& spec = {});

} // namespace brylinski
