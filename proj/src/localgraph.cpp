#include <brylinski/errors.hpp>
#include <brylinski/localgraph.hpp>
#include <brylinski/quadrature.hpp>

#include <Eigen/Geometry>

#include <cmath>

namespace brylinski {

std::array<double, symbol_count> GraphCoeffs::symbol_values() const
{
    std::array<double, symbol_count> v{};
    for (int i = 2; i <= 8; ++i) {
        v[symbol_a(i)] = A(i);
        v[symbol_b(i)] = B(i);
    }
    return v;
}

GraphCoeffs GraphCoeffs::scaled(double lambda) const
{
    GraphCoeffs out;
    for (int i = 2; i <= 8; ++i) {
        const double f = std::pow(lambda, 1 - i);
        out.a[i - 2] = f * A(i);
        out.b[i - 2] = f * B(i);
    }
    return out;
}

GraphFrame default_graph_frame(const Curve& curve, double t0)
{
    const NormalFrame f = canonical_normal_frame(curve, t0);
    return {f.tangent, f.n1, f.n2};
}

GraphFrame graph_frame(const Curve& curve, double t0, const Vec3& normal_hint, bool left_handed)
{
    const Vec3 T = curve.derivative(t0, 1).normalized();
    const Vec3 n = normal_hint - normal_hint.dot(T) * T;
    if (n.norm() < 1e-12) throw Error(ErrorCode::usage, "normal hint is parallel to the tangent");
    const Vec3 e2 = n.normalized();
    return {T, e2, left_handed ? Vec3(e2.cross(T)) : Vec3(T.cross(e2))};
}

GraphCoeffs graph_coefficients(const std::array<RealJet, 3>& jet, const GraphFrame& frame)
{
    const int K = graph_order;
    if (jet[0].order() < K) throw Error(ErrorCode::usage, "graph coefficients need a jet of order 8");
    std::array<RealJet, 3> local;
    const std::array<Vec3, 3> axes = {frame.e1, frame.e2, frame.e3};
    for (int i = 0; i < 3; ++i) {
        RealJet c(K);
        for (int k = 1; k <= K; ++k)
            c[k] = axes[i][0] * jet[0][k] + axes[i][1] * jet[1][k] + axes[i][2] * jet[2][k];
        local[i] = c;
    }
    if (!(std::abs(local[0][1]) > 0.0))
        throw Error(ErrorCode::singular_jet, "tangent coordinate has no linear term");
    const RealJet h = jet_reversion(local[0]);
    const RealJet f1 = jet_compose(local[1], h);
    const RealJet f2 = jet_compose(local[2], h);
    GraphCoeffs g;
    for (int i = 2; i <= K; ++i) {
        g.a[i - 2] = f1[i];
        g.b[i - 2] = f2[i];
    }
    return g;
}

GraphCoeffs graph_coefficients(const Curve& curve, double t0, const GraphFrame& frame)
{
    return graph_coefficients(curve.jet(t0, graph_order), frame);
}

GraphCoeffs graph_coefficients(const Curve& curve, double t0)
{
    return graph_coefficients(curve, t0, default_graph_frame(curve, t0));
}

std::array<RealJet, 3> graph_curve_jet(const GraphCoeffs& g, int order)
{
    RealJet u = RealJet::variable(order);
    RealJet f1(order), f2(order);
    for (int i = 2; i <= std::min(order, graph_order); ++i) {
        f1[i] = g.A(i);
        f2[i] = g.B(i);
    }
    return {u, f1, f2};
}

InvariantTable::InvariantTable(std::vector<RationalFormula> formulas) : formulas_(std::move(formulas))
{
    if (formulas_.size() != 8) throw Error(ErrorCode::usage, "invariant table needs eight formulas");
    numerators_.reserve(formulas_.size());
    for (const auto& f : formulas_) numerators_.push_back(parse_polynomial(f.numerator));
}

const InvariantTable& InvariantTable::corrected()
{
    static const InvariantTable table(corrected_invariant_formulas());
    return table;
}

const InvariantTable& InvariantTable::printed()
{
    static const InvariantTable table(printed_invariant_formulas());
    return table;
}

LocalInvariants InvariantTable::evaluate(const GraphCoeffs& g) const
{
    const double a2 = g.A(2), b2 = g.B(2);
    const double D = a2 * a2 + b2 * b2;
    if (!(D > 0.0)) throw Error(ErrorCode::inflection, "a2^2 + b2^2 = 0: curvature vanishes, torsion undefined");
    const double S = std::sqrt(4.0 * D);
    const auto values = g.symbol_values();
    LocalInvariants out;
    for (std::size_t i = 0; i < formulas_.size(); ++i) {
        const auto& f = formulas_[i];
        const double v = std::pow(S, f.s_power) * numerators_[i].evaluate(values) / std::pow(D, f.d_power);
        if (i < 4) out.kappa[i] = v;
        else out.tau[i - 4] = v;
    }
    return out;
}

LocalInvariants invariants_from_coeffs(const GraphCoeffs& g, const InvariantTable& table) { return table.evaluate(g); }

namespace {

struct CompiledPolynomial {
    ResidueFamily family;
    int pole;
    Polynomial poly;
};

std::vector<CompiledPolynomial> compile(const std::vector<PolynomialFormula>& formulas)
{
    std::vector<CompiledPolynomial> out;
    for (const auto& f : formulas) out.push_back({f.family, f.pole, parse_polynomial(f.text)});
    return out;
}

} // namespace

PointwiseResidues pointwise_residues(const GraphCoeffs& g)
{
    static const auto table = compile(residue_polynomials());
    const auto values = g.symbol_values();
    PointwiseResidues out;
    for (const auto& p : table) {
        const double v = p.poly.evaluate(values);
        switch (p.family) {
        case ResidueFamily::single_layer: out.single_layer[p.pole] = v; break;
        case ResidueFamily::b2: out.b2[p.pole] = v; break;
        case ResidueFamily::coaxial: out.coaxial[p.pole] = v; break;
        }
    }
    // B1 contributes only at s = 3; the remaining coaxial residues are those of B2.
    out.coaxial[1] = out.b2.at(1);
    out.coaxial[-1] = out.b2.at(-1);
    return out;
}

PointwiseResidues invariant_residue_densities(const LocalInvariants& inv)
{
    static const auto table = compile(invariant_residue_integrands());
    std::array<double, symbol_count> values{};
    for (int n = 0; n < 4; ++n) {
        values[symbol_kappa(n)] = inv.kappa[n];
        values[symbol_tau(n)] = inv.tau[n];
    }
    PointwiseResidues out;
    for (const auto& p : table) {
        const double v = p.poly.evaluate(values);
        if (p.family == ResidueFamily::single_layer) out.single_layer[p.pole] = v;
        else out.coaxial[p.pole] = v;
    }
    return out;
}

double residue_integral(const Curve& curve, ResidueFamily family, int pole, int nodes)
{
    if (family == ResidueFamily::b2) throw Error(ErrorCode::usage, "no invariant density is tabulated for B2");
    if (nodes < 8) throw Error(ErrorCode::usage, "residue integral needs at least 8 nodes");
    std::vector<double> values(static_cast<std::size_t>(nodes));
    for (int i = 0; i < nodes; ++i) {
        const double t = two_pi * i / nodes;
        const FrenetData f = frenet_invariants(curve, t, 3);
        LocalInvariants inv;
        for (int n = 0; n < 4; ++n) {
            inv.kappa[n] = f.kappa[n];
            inv.tau[n] = f.tau[n];
        }
        const PointwiseResidues d = invariant_residue_densities(inv);
        const auto& table = family == ResidueFamily::single_layer ? d.single_layer : d.coaxial;
        const auto it = table.find(pole);
        if (it == table.end())
            throw Error(ErrorCode::not_a_pole, "no invariant density tabulated at s = " + std::to_string(pole));
        values[i] = it->second * curve.speed(t);
    }
    return two_pi / nodes * pairwise_sum(values);
}

} // namespace brylinski
