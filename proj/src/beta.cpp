#include <brylinski/beta.hpp>
#include <brylinski/errors.hpp>
#include <brylinski/kernel.hpp>
#include <brylinski/quadrature.hpp>

#include "parallel.hpp"

#include <cmath>
#include <sstream>

namespace brylinski {

namespace {

struct Grid {
    double h;
    std::vector<double> t, speed;
    std::vector<Vec3> pos, H;
};

Grid make_grid(const Curve& curve, int n, bool with_curvature)
{
    Grid g;
    g.h = two_pi / n;
    for (int i = 0; i < n; ++i) {
        const double t = g.h * i;
        g.t.push_back(t);
        g.speed.push_back(curve.speed(t));
        g.pos.push_back(curve.position(t));
        g.H.push_back(with_curvature ? mean_curvature_vector(curve, t) : Vec3::Zero());
    }
    return g;
}

// Sum over k of zeta(-(s+m)-k) C_k h^(s+m+k+1), C_k the two-sided coefficient.
cplx diagonal_correction(const std::vector<KernelTerm>& terms, cplx s, double h)
{
    cplx acc = 0.0;
    const double log_h = std::log(h);
    for (std::size_t a = 0; a < terms.size(); ++a) {
        if (terms[a].direction != 1) continue;
        const KernelTerm& plus = terms[a];
        const KernelTerm* minus = nullptr;
        for (const auto& b : terms)
            if (b.m == plus.m && b.direction == -1) minus = &b;
        const cplx alpha = s + static_cast<double>(plus.m);
        for (int k = 0; k <= plus.coeffs.order(); ++k) {
            const cplx C = plus.coeffs[k] + (minus ? minus->coeffs[k] : cplx(0.0));
            if (C == cplx(0.0)) continue;
            const cplx e = alpha + static_cast<double>(k);
            acc += zeta(-e) * C * std::exp((e + 1.0) * log_h);
        }
    }
    return acc;
}

cplx direct_value(const Curve& curve, cplx s, int n, KernelKind kind)
{
    const Grid g = make_grid(curve, n, kind == KernelKind::b2);
    std::vector<cplx> rows(static_cast<std::size_t>(n));
    detail::parallel_for(n, [&](int i) {
        std::vector<cplx> inner;
        inner.reserve(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            inner.push_back(kernel_integrand(kind, s, g.pos[i], g.pos[j], g.H[i], g.H[j]) * g.speed[j]);
        }
        const auto geometry = local_geometry(curve, g.t[i], direct_correction_order, ExpansionVariable::parameter);
        const cplx correction = diagonal_correction(decompose_kernel(geometry, s, kind), s, g.h);
        rows[i] = (g.h * pairwise_sum(inner) - correction) * g.speed[i] * g.h;
    });
    return pairwise_sum(rows);
}

void require_nodes(const QuadratureSpec& spec)
{
    if (spec.nodes < 64 || spec.nodes % 2 != 0)
        throw Error(ErrorCode::usage, "quadrature needs an even node count of at least 64");
}

void require_half_plane(cplx s, double bound, const char* what)
{
    if (!(s.real() > bound)) {
        std::ostringstream msg;
        msg << what << " direct quadrature needs Re s > " << bound << " (got s = " << s.real() << (s.imag() < 0 ? "" : "+")
            << s.imag() << "i); use the continuation engine";
        throw Error(ErrorCode::out_of_half_plane, msg.str());
    }
}

BetaValue doubled(const Curve& curve, cplx s, const QuadratureSpec& spec, KernelKind kind, BetaKind out_kind)
{
    require_nodes(spec);
    const cplx coarse = direct_value(curve, s, spec.nodes, kind);
    const cplx fine = direct_value(curve, s, 2 * spec.nodes, kind);
    return {s, fine, std::abs(fine - coarse), out_kind, "direct"};
}

} // namespace

const char* beta_kind_name(BetaKind kind) noexcept
{
    switch (kind) {
    case BetaKind::single_layer: return "single";
    case BetaKind::coaxial: return "coaxial";
    case BetaKind::b1: return "b1";
    case BetaKind::b2: return "b2";
    }
    return "unknown";
}

cplx coaxial_polynomial(cplx s) { return s * (s - 2.0) * (s + 1.0) * (s - 1.0); }

BetaValue beta_single_layer(const Curve& curve, cplx s, const QuadratureSpec& spec)
{
    require_half_plane(s, -1.0 + single_layer_margin, "single-layer");
    require_embedded(curve);
    return doubled(curve, s, spec, KernelKind::single_layer, BetaKind::single_layer);
}

cplx b2_integrand(const Curve& curve, double x, double y, cplx s)
{
    return kernel_integrand(KernelKind::b2, s, curve.position(x), curve.position(y), mean_curvature_vector(curve, x),
                            mean_curvature_vector(curve, y));
}

BetaValue beta_b2(const Curve& curve, cplx s, const QuadratureSpec& spec)
{
    require_half_plane(s, 1.0 + b2_margin, "B2");
    require_embedded(curve);
    return doubled(curve, s, spec, KernelKind::b2, BetaKind::b2);
}

BetaValue beta_b1(const Curve& curve, cplx s, const QuadratureSpec& spec)
{
    require_half_plane(s, 3.0 + single_layer_margin, "B1");
    BetaValue v = beta_single_layer(curve, s - 4.0, spec);
    const cplx p = coaxial_polynomial(s);
    return {s, p * v.value, std::abs(p) * v.abs_error_estimate, BetaKind::b1, "direct"};
}

BetaValue beta_coaxial(const Curve& curve, cplx s, const QuadratureSpec& spec)
{
    require_half_plane(s, 4.0, "coaxial");
    const BetaValue b1 = beta_b1(curve, s, spec);
    const BetaValue b2 = beta_b2(curve, s, spec);
    return {s, b1.value + b2.value, b1.abs_error_estimate + b2.abs_error_estimate, BetaKind::coaxial, "direct"};
}

} // namespace brylinski
