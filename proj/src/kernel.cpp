#include <brylinski/kernel.hpp>

#include <cmath>

namespace brylinski {

namespace {

using Vec3Jet = std::array<RealJet, 3>;

RealJet dot(const Vec3Jet& a, const Vec3Jet& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

RealJet dot(const Vec3& a, const Vec3Jet& b) { return b[0] * a[0] + b[1] * a[1] + b[2] * a[2]; }

Vec3Jet truncated(const Vec3Jet& a, int order)
{
    return {a[0].truncated(order), a[1].truncated(order), a[2].truncated(order)};
}

Vec3Jet derivative(const Vec3Jet& a) { return {a[0].derivative(), a[1].derivative(), a[2].derivative()}; }

} // namespace

LocalGeometry local_geometry(const Curve& curve, double t, int order, ExpansionVariable variable)
{
    if (order < 0) throw Error(ErrorCode::usage, "local geometry order must be non-negative");
    const int K = order;
    const int Kg = K + 4;
    Vec3Jet g = curve.jet(t, Kg);
    if (variable == ExpansionVariable::arclength) g = reparametrize_by_arclength(g);

    Vec3Jet P = g;
    for (auto& c : P) c[0] = 0.0;

    const Vec3Jet d1 = truncated(derivative(g), K + 2);
    const Vec3Jet d2 = truncated(derivative(derivative(g)), K + 2);
    const RealJet v2 = dot(d1, d1);
    const RealJet v4 = v2 * v2;
    const RealJet d12 = dot(d1, d2);
    Vec3Jet H;
    for (int i = 0; i < 3; ++i) H[i] = (d2[i] * v2 - d12 * d1[i]) / v4;
    const Vec3 h0(H[0][0], H[1][0], H[2][0]);

    const Vec3Jet chord = truncated({P[0].shifted_down(1), P[1].shifted_down(1), P[2].shifted_down(1)}, K);
    const Vec3Jet Pk = truncated(P, K + 2);

    LocalGeometry out{variable, t, dot(chord, chord), RealJet(K), RealJet(K), RealJet(K), RealJet(K)};
    // H is normal to the curve, so both projections vanish to second order in r.
    out.hx_delta = dot(h0, P).shifted_down(2).truncated(K);
    out.hy_delta = dot(H, Pk).shifted_down(2);
    out.hh = dot(h0, H).truncated(K);
    out.jacobian = variable == ExpansionVariable::arclength ? RealJet::constant(1.0, K)
                                                            : jet_power(v2, 0.5).truncated(K);
    return out;
}

RealJet chord_jet(const Curve& curve, double t, int w, int order)
{
    if (w != 1 && w != -1) throw Error(ErrorCode::usage, "direction must be +1 or -1");
    const RealJet q = local_geometry(curve, t, order, ExpansionVariable::arclength).q;
    return w > 0 ? q : q.reflected();
}

std::vector<KernelTerm> decompose_kernel(const LocalGeometry& geometry, cplx s, KernelKind kind)
{
    const ComplexJet J(geometry.jacobian);
    std::vector<std::pair<int, ComplexJet>> terms;
    if (kind == KernelKind::single_layer) {
        terms.emplace_back(0, jet_power(geometry.q, 0.5 * s) * J);
    } else {
        const ComplexJet hh(geometry.hh);
        const ComplexJet proj(geometry.hx_delta * geometry.hy_delta);
        terms.emplace_back(-2, hh * jet_power(geometry.q, 0.5 * (s - 2.0)) * J * (-s));
        terms.emplace_back(0, proj * jet_power(geometry.q, 0.5 * (s - 4.0)) * J * (-s * (s - 2.0)));
    }
    std::vector<KernelTerm> out;
    for (auto& [m, G] : terms) {
        out.push_back({m, 1, G});
        out.push_back({m, -1, G.reflected()});
    }
    return out;
}

std::vector<KernelTerm> decompose_kernel(const Curve& curve, double t, cplx s, KernelKind kind, int order)
{
    return decompose_kernel(local_geometry(curve, t, order, ExpansionVariable::arclength), s, kind);
}

int min_shift(KernelKind kind) noexcept { return kind == KernelKind::single_layer ? 0 : -2; }

cplx chord_power(double d2, cplx p)
{
    if (p.imag() == 0.0) return std::pow(d2, 0.5 * p.real());
    return std::exp(0.5 * p * std::log(d2));
}

cplx kernel_integrand(KernelKind kind, cplx s, const Vec3& x, const Vec3& y, const Vec3& hx, const Vec3& hy)
{
    const Vec3 delta = y - x;
    const double d2 = delta.squaredNorm();
    if (kind == KernelKind::single_layer) return chord_power(d2, s);
    const cplx p4 = chord_power(d2, s - 4.0);
    return -s * hx.dot(hy) * p4 * d2 - s * (s - 2.0) * hx.dot(delta) * hy.dot(delta) * p4;
}

} // namespace brylinski
