#include <brylinski/continuation.hpp>
#include <brylinski/errors.hpp>
#include <brylinski/quadrature.hpp>

#include "parallel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace brylinski {

namespace {

int max_pole(BetaKind kind)
{
    switch (kind) {
    case BetaKind::single_layer: return -1;
    case BetaKind::b2: return 1;
    case BetaKind::coaxial:
    case BetaKind::b1: return 3;
    }
    return -1;
}

cplx power(double base, cplx exponent)
{
    if (exponent.imag() == 0.0) return std::pow(base, exponent.real());
    return std::exp(exponent * std::log(base));
}

// Two-sided coefficient sums C_k per shift m, in order of first appearance.
std::vector<std::pair<int, std::vector<cplx>>> two_sided(const std::vector<KernelTerm>& terms)
{
    std::vector<std::pair<int, std::vector<cplx>>> out;
    for (const auto& term : terms) {
        auto it = std::find_if(out.begin(), out.end(), [&](const auto& e) { return e.first == term.m; });
        if (it == out.end()) {
            out.emplace_back(term.m, std::vector<cplx>(term.coeffs.coeffs().begin(), term.coeffs.coeffs().end()));
            continue;
        }
        for (int k = 0; k <= term.coeffs.order(); ++k) it->second[k] += term.coeffs[k];
    }
    return out;
}

// Root-test estimate of the convergence radius of a jet, from its upper half of coefficients.
double convergence_radius(const RealJet& jet, double scale)
{
    if (!(scale > 0.0)) return std::numeric_limits<double>::infinity();
    double growth = 0.0;
    const int K = jet.order();
    for (int k = std::max(1, K / 2); k <= K; ++k) {
        const double c = std::abs(jet[k]) / scale;
        if (c > 0.0) growth = std::max(growth, std::pow(c, 1.0 / k));
    }
    return growth > 0.0 ? 1.0 / growth : std::numeric_limits<double>::infinity();
}

struct Panel {
    double a, b;
};

// Panels on [0, span] for an integrand singular at -gap: widths grow with the distance to the
// singularity but never exceed span / min_panels.
std::vector<Panel> graded_panels(double gap, double span, int min_panels)
{
    std::vector<Panel> out;
    const double cap = span / min_panels;
    double e = 0.0;
    while (e < span) {
        double w = std::min(gap + e, cap);
        if (span - e < 1.5 * w) w = span - e;
        out.push_back({e, e + w});
        e += w;
    }
    return out;
}

} // namespace

bool is_lattice_pole(BetaKind kind, int s0)
{
    return s0 <= max_pole(kind) && (s0 % 2 != 0);
}

int nearest_lattice_pole(BetaKind kind, cplx s)
{
    int p = 2 * static_cast<int>(std::floor(0.5 * s.real())) + 1;
    if (std::abs(s.real() - (p - 2)) < std::abs(s.real() - p)) p -= 2;
    return std::min(p, max_pole(kind));
}

void require_off_pole(BetaKind kind, cplx s, double guard)
{
    const int p = nearest_lattice_pole(kind, s);
    if (std::abs(s - cplx(p, 0.0)) < guard) {
        std::ostringstream msg;
        msg << "s = " << s.real() << (s.imag() < 0 ? "" : "+") << s.imag() << "i is within " << guard
            << " of the pole at s = " << p << "; use residue() at poles";
        throw PoleProximityError(p, msg.str());
    }
}

std::vector<int> lattice_poles(BetaKind kind, int count)
{
    std::vector<int> out;
    for (int p = max_pole(kind); static_cast<int>(out.size()) < count; p -= 2) out.push_back(p);
    return out;
}

ContinuationEngine::ContinuationEngine(const Curve& curve, ContinuationConfig config)
    : curve_(std::make_shared<const Curve>(curve)), config_(config)
{
    if (config_.K < 0 || config_.K > 40) throw Error(ErrorCode::usage, "K must lie in [0, 40]");
    if (config_.N_outer < 8 || config_.N_outer % 2 != 0)
        throw Error(ErrorCode::usage, "N_outer must be even and at least 8");
    if (config_.N_far < 32) throw Error(ErrorCode::usage, "N_far must be at least 32");
    if (config_.panel_nodes < 4 || config_.panel_nodes > 64)
        throw Error(ErrorCode::usage, "panel_nodes must lie in [4, 64]");
    if (!(config_.pole_guard > 0.0)) throw Error(ErrorCode::usage, "pole_guard must be positive");
    if (config_.tail_orders < 0) throw Error(ErrorCode::usage, "tail_orders must be non-negative");

    map_ = std::make_shared<const ArclengthMap>(*curve_);
    length_ = map_->length();
    chord_arc_ = validate_embedded(*curve_);
    if (chord_arc_ < min_chord_arc_ratio) require_embedded(*curve_);
    epsilon_ = config_.epsilon > 0.0 ? config_.epsilon : std::min(length_ / 8.0, 0.5 * length_ * chord_arc_);
    if (!(epsilon_ > 0.0) || !(epsilon_ < 0.5 * length_))
        throw Error(ErrorCode::usage, "epsilon must lie in (0, L/2)");

    nodes_.resize(static_cast<std::size_t>(config_.N_outer));
    detail::parallel_for(config_.N_outer, [&](int i) {
        nodes_[i] = build_node(two_pi * i / config_.N_outer, true);
        nodes_[i].weight *= two_pi / config_.N_outer;
    });
}

ContinuationEngine::Node ContinuationEngine::build_node(double t, bool with_samples) const
{
    const Curve& c = *curve_;
    Node node;
    node.t = t;
    node.weight = c.speed(t);
    node.pos = c.position(t);
    node.H = mean_curvature_vector(c, t);
    node.geometry = local_geometry(c, t, extended_order(), ExpansionVariable::arclength);

    const double rho = std::min(convergence_radius(jet_log(node.geometry.q), 1.0),
                                convergence_radius(node.geometry.hh, std::abs(node.geometry.hh[0])));
    node.r_c = std::min(epsilon_, rho / 3.0);
    if (!with_samples) return node;

    const auto& rule = gauss_legendre(config_.panel_nodes);
    auto add_samples = [&](std::vector<Sample>& out, double h0, double h1, double gap) {
        // GL on [h0, h1] (either orientation), graded away from the singular end h0.
        const double span = std::abs(h1 - h0);
        const double dir = h1 > h0 ? 1.0 : -1.0;
        const int min_panels = std::max(1, static_cast<int>(std::lround(
                                               static_cast<double>(config_.N_far) / (2.0 * config_.panel_nodes))));
        for (const Panel& p : graded_panels(gap, span, min_panels)) {
            const double mid = 0.5 * (p.a + p.b), half = 0.5 * (p.b - p.a);
            for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
                const double tt = h0 + dir * (mid + half * rule.nodes[k]);
                Sample smp;
                smp.pos = c.position(tt);
                smp.H = mean_curvature_vector(c, tt);
                smp.weight = rule.weights[k] * half * c.speed(tt);
                smp.rho = std::abs(map_->offset(t, tt));
                out.push_back(smp);
            }
        }
    };

    const double h_plus = map_->param_offset(t, epsilon_);
    const double h_minus = -map_->param_offset(t, -epsilon_);
    if (node.r_c < epsilon_) {
        for (int d = 0; d < 2; ++d) {
            const double w = d == 0 ? 1.0 : -1.0;
            const double hc = map_->param_offset(t, w * node.r_c);
            const double he = d == 0 ? h_plus : -h_minus;
            // Geometric panels from r_c outwards: the remainder is singular at h = 0.
            std::vector<Sample>& out = node.remainder[d];
            double a = hc;
            while (std::abs(a) < std::abs(he)) {
                double b = 2.0 * a;
                if (std::abs(b) > std::abs(he) || std::abs(he) < 1.5 * std::abs(b)) b = he;
                const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
                for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
                    const double h = mid + half * rule.nodes[k];
                    const double tt = t + h;
                    Sample smp;
                    smp.pos = c.position(tt);
                    smp.H = mean_curvature_vector(c, tt);
                    smp.weight = rule.weights[k] * std::abs(half) * c.speed(tt);
                    smp.rho = std::abs(map_->offset(t, tt));
                    out.push_back(smp);
                }
                a = b;
            }
        }
    }

    const double lo = t + h_plus, hi = t + two_pi - h_minus;
    const double mid = 0.5 * (lo + hi);
    add_samples(node.far, lo, mid, h_plus);
    add_samples(node.far, hi, mid, h_minus);
    return node;
}

cplx ContinuationEngine::node_integral(const Node& node, cplx s, KernelKind kind) const
{
    const int K = config_.K;
    const auto terms = decompose_kernel(node.geometry, s, kind);
    cplx near = 0.0;
    for (const auto& [m, C] : two_sided(terms)) {
        const cplx alpha = s + static_cast<double>(m);
        for (int k = 0; k < static_cast<int>(C.size()); ++k) {
            if (C[k] == cplx(0.0)) continue;
            const cplx a = alpha + static_cast<double>(k + 1);
            const double r = k <= K ? epsilon_ : node.r_c;
            near += C[k] * power(r, a) / a;
        }
    }

    cplx remainder = 0.0;
    for (int d = 0; d < 2; ++d) {
        const int w = d == 0 ? 1 : -1;
        for (const Sample& smp : node.remainder[d]) {
            cplx v = kernel_integrand(kind, s, node.pos, smp.pos, node.H, smp.H);
            for (const auto& term : terms) {
                if (term.direction != w) continue;
                cplx poly = 0.0;
                for (int k = K; k >= 0; --k) poly = poly * smp.rho + term.coeffs[k];
                v -= power(smp.rho, s + static_cast<double>(term.m)) * poly;
            }
            remainder += smp.weight * v;
        }
    }

    std::vector<cplx> far(node.far.size());
    for (std::size_t i = 0; i < node.far.size(); ++i) {
        const Sample& smp = node.far[i];
        far[i] = smp.weight * kernel_integrand(kind, s, node.pos, smp.pos, node.H, smp.H);
    }
    return near + remainder + pairwise_sum(far);
}

cplx ContinuationEngine::node_value(const Node& node, cplx s, BetaKind kind) const
{
    switch (kind) {
    case BetaKind::single_layer: return node_integral(node, s, KernelKind::single_layer);
    case BetaKind::b2: return node_integral(node, s, KernelKind::b2);
    case BetaKind::b1: return coaxial_polynomial(s) * node_integral(node, s - 4.0, KernelKind::single_layer);
    case BetaKind::coaxial:
        return coaxial_polynomial(s) * node_integral(node, s - 4.0, KernelKind::single_layer) +
               node_integral(node, s, KernelKind::b2);
    }
    return 0.0;
}

void ContinuationEngine::check_arguments(cplx s, BetaKind kind) const
{
    if (!std::isfinite(s.real()) || !std::isfinite(s.imag())) throw Error(ErrorCode::usage, "s must be finite");
    // Order budget: the remainder r^(s+m+K+1) must be integrable at 0 for every term.
    auto budget = [&](cplx sigma, KernelKind k) {
        if (!(sigma.real() + min_shift(k) + config_.K + 2 > 0.0)) {
            std::ostringstream msg;
            msg << "subtraction order K = " << config_.K << " is too small for Re s = " << s.real() << "; need K > "
                << -(sigma.real() + min_shift(k) + 2.0);
            throw Error(ErrorCode::order_budget, msg.str());
        }
    };
    if (kind == BetaKind::single_layer) budget(s, KernelKind::single_layer);
    if (kind == BetaKind::b2 || kind == BetaKind::coaxial) budget(s, KernelKind::b2);
    if (kind == BetaKind::b1 || kind == BetaKind::coaxial) budget(s - 4.0, KernelKind::single_layer);

    require_off_pole(kind, s, config_.pole_guard);
}

BetaValue ContinuationEngine::evaluate(cplx s, BetaKind kind) const
{
    check_arguments(s, kind);
    const int n = static_cast<int>(nodes_.size());
    std::vector<cplx> all(static_cast<std::size_t>(n)), half(static_cast<std::size_t>(n / 2));
    detail::parallel_for(n, [&](int i) { all[i] = nodes_[i].weight * node_value(nodes_[i], s, kind); });
    for (int i = 0; i < n / 2; ++i) half[i] = 2.0 * all[2 * i];
    const cplx v = pairwise_sum(all);
    const cplx v_half = pairwise_sum(half);
    return {s, v, std::abs(v - v_half), kind, "continuation"};
}

cplx ContinuationEngine::inner_integral(double t, cplx s, KernelKind kind) const
{
    check_arguments(s, kind == KernelKind::single_layer ? BetaKind::single_layer : BetaKind::b2);
    return node_integral(build_node(t, true), s, kind);
}

cplx ContinuationEngine::node_residue(const Node& node, int pole, KernelKind kind) const
{
    const cplx s0(pole, 0.0);
    cplx acc = 0.0;
    for (const auto& [m, C] : two_sided(decompose_kernel(node.geometry, s0, kind))) {
        const int k = -1 - pole - m;
        if (k >= 0 && k < static_cast<int>(C.size())) acc += C[k];
    }
    return acc;
}

double ContinuationEngine::pointwise_residue(double t, int pole, BetaKind kind) const
{
    if (!is_lattice_pole(kind, pole))
        throw Error(ErrorCode::not_a_pole, "s = " + std::to_string(pole) + " is not a pole of " + beta_kind_name(kind));
    const Node node = build_node(t, false);
    cplx r = 0.0;
    if (kind == BetaKind::single_layer) r = node_residue(node, pole, KernelKind::single_layer);
    if (kind == BetaKind::b2 || kind == BetaKind::coaxial) r += node_residue(node, pole, KernelKind::b2);
    if (kind == BetaKind::b1 || kind == BetaKind::coaxial)
        r += coaxial_polynomial(pole) * node_residue(node, pole - 4, KernelKind::single_layer);
    return r.real();
}

ResidueReport ContinuationEngine::residue(int pole, BetaKind kind, bool numeric_check) const
{
    if (!is_lattice_pole(kind, pole))
        throw Error(ErrorCode::not_a_pole, "s = " + std::to_string(pole) + " is not a pole of the " +
                                               beta_kind_name(kind) + " beta function");
    const cplx s0(pole, 0.0);
    // Same order budget as evaluation just beside the pole.
    check_arguments(s0 + cplx(0.0, 2.0 * config_.pole_guard), kind);

    const int n = static_cast<int>(nodes_.size());
    std::vector<cplx> all(static_cast<std::size_t>(n)), half(static_cast<std::size_t>(n / 2));
    detail::parallel_for(n, [&](int i) {
        const Node& node = nodes_[i];
        cplx r = 0.0;
        if (kind == BetaKind::single_layer) r = node_residue(node, pole, KernelKind::single_layer);
        if (kind == BetaKind::b2 || kind == BetaKind::coaxial) r += node_residue(node, pole, KernelKind::b2);
        if (kind == BetaKind::b1 || kind == BetaKind::coaxial)
            r += coaxial_polynomial(s0) * node_residue(node, pole - 4, KernelKind::single_layer);
        all[i] = node.weight * r;
    });
    for (int i = 0; i < n / 2; ++i) half[i] = 2.0 * all[2 * i];
    const cplx value = pairwise_sum(all);
    const cplx value_half = pairwise_sum(half);
    if (std::abs(value.imag()) > 1e-8 * std::abs(value) + 1e-12)
        throw Error(ErrorCode::verification, "residue has a non-negligible imaginary part");

    ResidueReport report;
    report.pole = pole;
    report.kind = kind;
    report.residue = value.real();
    report.error_estimate = std::abs(value - value_half);
    const double scale_exponent = kind == BetaKind::single_layer ? pole + 2.0 : pole - 2.0;
    const double scale = std::pow(length_, scale_exponent);
    if (std::abs(report.residue) < 1e-9 * scale) {
        report.removable = true;
        report.residue = 0.0;
    }
    if (numeric_check) {
        const LimitEstimate lim = limit(pole, kind);
        report.numeric_limit = lim.value.real();
        report.numeric_error = lim.error_estimate;
    }
    return report;
}

LimitEstimate ContinuationEngine::limit(int pole, BetaKind kind, cplx direction) const
{
    if (!is_lattice_pole(kind, pole))
        throw Error(ErrorCode::not_a_pole, "s = " + std::to_string(pole) + " is not a pole");
    direction /= std::abs(direction);
    const double steps[3] = {1e-2, 5e-3, 2.5e-3};
    cplx f[3];
    for (int i = 0; i < 3; ++i) {
        const cplx ds = steps[i] * direction;
        f[i] = ds * evaluate(cplx(pole, 0.0) + ds, kind).value;
    }
    const cplx r1a = 2.0 * f[1] - f[0];
    const cplx r1b = 2.0 * f[2] - f[1];
    const cplx r2 = (4.0 * r1b - r1a) / 3.0;
    return {r2, std::abs(r2 - r1b)};
}

BetaValue continue_beta(const Curve& curve, cplx s, BetaKind kind, const ContinuationConfig& config)
{
    return ContinuationEngine(curve, config).evaluate(s, kind);
}

ResidueReport residue(const Curve& curve, int pole, BetaKind kind, const ContinuationConfig& config, bool numeric_check)
{
    return ContinuationEngine(curve, config).residue(pole, kind, numeric_check);
}

} // namespace brylinski
