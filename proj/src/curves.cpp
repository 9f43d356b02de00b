#include <brylinski/curves.hpp>
#include <brylinski/errors.hpp>
#include <brylinski/quadrature.hpp>

#include <Eigen/Geometry>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace brylinski {

namespace {

void add_cos(TrigSeries& series, int n, double c)
{
    n = std::abs(n);
    if (series.cos_coeffs.size() <= static_cast<std::size_t>(n)) series.cos_coeffs.resize(n + 1, 0.0);
    series.cos_coeffs[n] += c;
}

// sin(n t) for negative n is -sin(|n| t).
void add_sin(TrigSeries& series, int n, double c)
{
    if (n == 0) return;
    if (n < 0) {
        n = -n;
        c = -c;
    }
    if (series.sin_coeffs.size() <= static_cast<std::size_t>(n)) series.sin_coeffs.resize(n + 1, 0.0);
    series.sin_coeffs[n] += c;
}

double series_derivative(const TrigSeries& s, double t, int k)
{
    const std::size_t n_max = std::max(s.cos_coeffs.size(), s.sin_coeffs.size());
    double acc = 0.0;
    for (std::size_t n = 0; n < n_max; ++n) {
        const double a = n < s.cos_coeffs.size() ? s.cos_coeffs[n] : 0.0;
        const double b = n < s.sin_coeffs.size() ? s.sin_coeffs[n] : 0.0;
        if (a == 0.0 && b == 0.0) continue;
        if (n == 0) {
            if (k == 0) acc += a;
            continue;
        }
        const double theta = static_cast<double>(n) * t;
        const double c = std::cos(theta), sn = std::sin(theta);
        // d^k cos = cos(theta + k pi/2), d^k sin = sin(theta + k pi/2), times n^k.
        double dc = 0.0, ds = 0.0;
        switch (k % 4) {
        case 0: dc = c; ds = sn; break;
        case 1: dc = -sn; ds = c; break;
        case 2: dc = -c; ds = -sn; break;
        default: dc = sn; ds = -c; break;
        }
        acc += std::pow(static_cast<double>(n), k) * (a * dc + b * ds);
    }
    return acc;
}

RealJet series_jet(const TrigSeries& s, double t, int order)
{
    RealJet j(order);
    double fact = 1.0;
    for (int k = 0; k <= order; ++k) {
        if (k > 0) fact *= k;
        j[k] = series_derivative(s, t, k) / fact;
    }
    return j;
}

TrigSeries scaled_series(TrigSeries s, double lambda)
{
    for (auto& c : s.cos_coeffs) c *= lambda;
    for (auto& c : s.sin_coeffs) c *= lambda;
    return s;
}

void require_finite(const FourierTable& table)
{
    for (const TrigSeries* s : {&table.x, &table.y, &table.z}) {
        for (double v : s->cos_coeffs)
            if (!std::isfinite(v)) throw Error(ErrorCode::curve_validation, "non-finite Fourier coefficient");
        for (double v : s->sin_coeffs)
            if (!std::isfinite(v)) throw Error(ErrorCode::curve_validation, "non-finite Fourier coefficient");
    }
}

RealJet dot(const std::array<RealJet, 3>& a, const std::array<RealJet, 3>& b)
{
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

std::array<RealJet, 3> cross(const std::array<RealJet, 3>& a, const std::array<RealJet, 3>& b)
{
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

std::array<RealJet, 3> derivative(const std::array<RealJet, 3>& a, int order)
{
    return {a[0].derivative().truncated(order), a[1].derivative().truncated(order),
            a[2].derivative().truncated(order)};
}

} // namespace

const char* curve_kind_name(CurveKind kind) noexcept
{
    switch (kind) {
    case CurveKind::circle: return "circle";
    case CurveKind::ellipse: return "ellipse";
    case CurveKind::torus_knot: return "torus_knot";
    case CurveKind::fourier: return "fourier";
    }
    return "unknown";
}

Curve::Curve(CurveKind kind, std::vector<double> params, FourierTable table)
    : kind_(kind), params_(std::move(params)), table_(std::move(table))
{
    require_finite(table_);
    // Regularity on a dense grid; the jets are exact, so a vanishing speed is a genuine cusp.
    constexpr int grid = 2048;
    double max_speed = 0.0, min_speed = std::numeric_limits<double>::infinity();
    for (int i = 0; i < grid; ++i) {
        const double v = speed(two_pi * i / grid);
        max_speed = std::max(max_speed, v);
        min_speed = std::min(min_speed, v);
    }
    if (!(max_speed > 0.0) || min_speed <= 1e-9 * max_speed)
        throw Error(ErrorCode::curve_validation, "curve is not regular (speed vanishes)");
}

Curve Curve::circle(double radius)
{
    if (!(radius > 0.0) || !std::isfinite(radius)) throw Error(ErrorCode::curve_validation, "circle radius must be positive");
    FourierTable t;
    add_cos(t.x, 1, radius);
    add_sin(t.y, 1, radius);
    return Curve(CurveKind::circle, {radius}, std::move(t));
}

Curve Curve::ellipse(double a, double b)
{
    if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b))
        throw Error(ErrorCode::curve_validation, "ellipse semi-axes must be positive");
    FourierTable t;
    add_cos(t.x, 1, a);
    add_sin(t.y, 1, b);
    return Curve(CurveKind::ellipse, {a, b}, std::move(t));
}

Curve Curve::torus_knot(int p, int q, double major_radius, double minor_radius)
{
    if (p == 0 || q == 0) throw Error(ErrorCode::curve_validation, "torus knot winding numbers must be non-zero");
    if (!(major_radius > minor_radius) || !(minor_radius > 0.0))
        throw Error(ErrorCode::curve_validation, "torus knot needs R > r > 0");
    FourierTable t;
    const double R = major_radius, r = minor_radius;
    add_cos(t.x, p, R);
    add_cos(t.x, p + q, 0.5 * r);
    add_cos(t.x, p - q, 0.5 * r);
    add_sin(t.y, p, R);
    add_sin(t.y, p + q, 0.5 * r);
    add_sin(t.y, p - q, 0.5 * r);
    add_sin(t.z, q, r);
    return Curve(CurveKind::torus_knot, {static_cast<double>(p), static_cast<double>(q), R, r}, std::move(t));
}

Curve Curve::fourier(FourierTable table) { return Curve(CurveKind::fourier, {}, std::move(table)); }

std::string Curve::description() const
{
    std::ostringstream out;
    out << curve_kind_name(kind_);
    if (!params_.empty()) {
        out << '(';
        for (std::size_t i = 0; i < params_.size(); ++i) out << (i ? "," : "") << params_[i];
        out << ')';
    }
    return out.str();
}

Vec3 Curve::derivative(double t, int k) const
{
    if (k < 0) throw Error(ErrorCode::usage, "derivative order must be non-negative");
    return {series_derivative(table_.x, t, k), series_derivative(table_.y, t, k), series_derivative(table_.z, t, k)};
}

std::array<RealJet, 3> Curve::jet(double t, int order) const
{
    return {series_jet(table_.x, t, order), series_jet(table_.y, t, order), series_jet(table_.z, t, order)};
}

Curve Curve::scaled(double lambda) const
{
    if (!(lambda > 0.0)) throw Error(ErrorCode::usage, "scale factor must be positive");
    std::vector<double> params = params_;
    switch (kind_) {
    case CurveKind::circle:
    case CurveKind::ellipse:
        for (auto& p : params) p *= lambda;
        break;
    case CurveKind::torus_knot:
        params[2] *= lambda;
        params[3] *= lambda;
        break;
    case CurveKind::fourier: break;
    }
    FourierTable t{scaled_series(table_.x, lambda), scaled_series(table_.y, lambda), scaled_series(table_.z, lambda)};
    return Curve(kind_, std::move(params), std::move(t));
}

ArclengthMap::ArclengthMap(const Curve& curve, int panels) : curve_(&curve)
{
    if (panels < 1) throw Error(ErrorCode::usage, "arclength map needs at least one panel");
    panel_width_ = two_pi / panels;
    cumulative_.resize(static_cast<std::size_t>(panels) + 1, 0.0);
    for (int i = 0; i < panels; ++i)
        cumulative_[i + 1] = cumulative_[i] + partial(i * panel_width_, (i + 1) * panel_width_);
    length_ = cumulative_.back();
}

double ArclengthMap::partial(double a, double b) const
{
    const auto& rule = gauss_legendre(16);
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) acc += rule.weights[i] * curve_->speed(mid + half * rule.nodes[i]);
    return acc * half;
}

double ArclengthMap::arclength(double t) const
{
    const double wraps = std::floor(t / two_pi);
    const double u = t - wraps * two_pi;
    const int panels = static_cast<int>(cumulative_.size()) - 1;
    const int i = std::clamp(static_cast<int>(u / panel_width_), 0, panels - 1);
    const double start = i * panel_width_;
    return wraps * length_ + cumulative_[i] + partial(start, u);
}

double ArclengthMap::param_offset(double t0, double r) const
{
    if (r == 0.0) return 0.0;
    const double base = arclength(t0);
    const double target = base + r;
    // Bracket: speed bounds give crude limits, widened until they straddle the target.
    double step = r / curve_->speed(t0);
    double lo = std::min(0.0, 2.0 * step), hi = std::max(0.0, 2.0 * step);
    while (arclength(t0 + lo) - target > 0.0) lo = 2.0 * lo - 1e-3;
    while (arclength(t0 + hi) - target < 0.0) hi = 2.0 * hi + 1e-3;
    double h = step;
    if (h <= lo || h >= hi) h = 0.5 * (lo + hi);
    for (int iter = 0; iter < 100; ++iter) {
        const double f = arclength(t0 + h) - target;
        if (f > 0.0) hi = h;
        else lo = h;
        double next = h - f / curve_->speed(t0 + h);
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (std::abs(next - h) <= 1e-15 * std::max(1.0, std::abs(h))) return next;
        h = next;
    }
    return h;
}

std::array<RealJet, 3> eval_jet(const Curve& curve, double t, int order) { return curve.jet(t, order); }

double arclength(const Curve& curve)
{
    // Periodic trapezoid converges geometrically for analytic integrands.
    auto trapezoid = [&](int n) {
        std::vector<double> v(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) v[i] = curve.speed(two_pi * i / n);
        return two_pi / n * pairwise_sum(v);
    };
    double prev = trapezoid(128);
    for (int n = 256; n <= 65536; n *= 2) {
        const double cur = trapezoid(n);
        if (std::abs(cur - prev) <= 1e-15 * cur) return cur;
        prev = cur;
    }
    return prev;
}

RealJet arclength_jet(const std::array<RealJet, 3>& jet)
{
    const int order = jet[0].order();
    if (order < 1) throw Error(ErrorCode::usage, "arclength jet needs order >= 1");
    const auto d = derivative(jet, order - 1);
    return jet_power(dot(d, d), 0.5).antiderivative();
}

RealJet arclength_jet(const Curve& curve, double t, int order) { return arclength_jet(curve.jet(t, order)); }

std::array<RealJet, 3> reparametrize_by_arclength(const std::array<RealJet, 3>& jet)
{
    const RealJet inverse = jet_reversion(arclength_jet(jet));
    return {jet_compose(jet[0], inverse), jet_compose(jet[1], inverse), jet_compose(jet[2], inverse)};
}

std::array<RealJet, 3> unit_speed_jet(const Curve& curve, double t, int order)
{
    return reparametrize_by_arclength(curve.jet(t, order));
}

FrenetData frenet_invariants(const Curve& curve, double t, int m, int max_order)
{
    if (m < 0) throw Error(ErrorCode::usage, "derivative count must be non-negative");
    const int K = m + 3;
    if (K > max_order)
        throw Error(ErrorCode::usage, "m = " + std::to_string(m) + " needs jet order " + std::to_string(K) +
                                          " beyond max_order " + std::to_string(max_order));
    return frenet_from_jet(curve.jet(t, K), m);
}

FrenetData frenet_from_jet(const std::array<RealJet, 3>& jet, int m)
{
    if (m < 0) throw Error(ErrorCode::usage, "derivative count must be non-negative");
    const int K = m + 3;
    if (jet[0].order() < K) throw Error(ErrorCode::usage, "Frenet data needs a jet of order m + 3");
    const std::array<RealJet, 3> trimmed = {jet[0].truncated(K), jet[1].truncated(K), jet[2].truncated(K)};
    const auto G = reparametrize_by_arclength(trimmed);
    const auto d1 = derivative(G, K - 1);
    const auto d2 = derivative(d1, K - 2);
    const auto d3 = derivative(d2, K - 3);

    const auto d1c = std::array<RealJet, 3>{d1[0].truncated(K - 2), d1[1].truncated(K - 2), d1[2].truncated(K - 2)};
    const auto c12 = cross(d1c, d2);
    const RealJet speed2 = dot(d1c, d1c);
    const RealJet cross2 = dot(c12, c12);

    if (!(cross2[0] > 0.0) || std::sqrt(cross2[0]) / std::pow(speed2[0], 1.5) < tol_frame)
        throw Error(ErrorCode::undefined_frame, "curvature vanishes; Frenet frame undefined");

    const RealJet kappa = jet_power(cross2, 0.5) * jet_power(speed2, -1.5);
    const auto c12t = std::array<RealJet, 3>{c12[0].truncated(K - 3), c12[1].truncated(K - 3), c12[2].truncated(K - 3)};
    const RealJet tau = dot(c12t, d3) / cross2.truncated(K - 3);

    FrenetData out;
    double fact = 1.0;
    for (int n = 0; n <= m; ++n) {
        if (n > 0) fact *= n;
        out.kappa.push_back(fact * kappa[n]);
        out.tau.push_back(fact * tau[n]);
    }
    const Vec3 T = Vec3(d1[0][0], d1[1][0], d1[2][0]).normalized();
    const Vec3 acc(d2[0][0], d2[1][0], d2[2][0]);
    const Vec3 N = (acc - acc.dot(T) * T).normalized();
    out.frame = {T, N, T.cross(N)};
    return out;
}

Vec3 mean_curvature_vector(const Curve& curve, double t)
{
    const Vec3 v = curve.derivative(t, 1), a = curve.derivative(t, 2);
    const double v2 = v.squaredNorm();
    return (a * v2 - v.dot(a) * v) / (v2 * v2);
}

NormalFrame canonical_normal_frame(const Curve& curve, double t)
{
    const Vec3 T = curve.derivative(t, 1).normalized();
    Vec3 n1 = Vec3::Zero();
    for (int i = 0; i < 3; ++i) {
        const Vec3 e = Vec3::Unit(i);
        if (std::abs(T.dot(e)) < 0.9) {
            n1 = (e - e.dot(T) * T).normalized();
            break;
        }
    }
    return {T, n1, T.cross(n1)};
}

double coaxial_average(const Curve& curve, double t, const ScalarField& phi, double radius, int angular_nodes)
{
    if (angular_nodes < 3) throw Error(ErrorCode::usage, "coaxial average needs at least 3 angular nodes");
    const NormalFrame f = canonical_normal_frame(curve, t);
    const Vec3 u = curve.position(t);
    std::vector<double> values(static_cast<std::size_t>(angular_nodes));
    for (int j = 0; j < angular_nodes; ++j) {
        const double theta = two_pi * j / angular_nodes;
        values[j] = phi(u + radius * (std::cos(theta) * f.n1 + std::sin(theta) * f.n2));
    }
    return pairwise_sum(values) / angular_nodes;
}

double coaxial_difference_quotient(const Curve& curve, double t, const ScalarField& phi, double radius,
                                   int angular_nodes)
{
    if (!(radius > 0.0)) throw Error(ErrorCode::usage, "coaxial radius must be positive");
    const double centre = phi(curve.position(t));
    return 4.0 * (coaxial_average(curve, t, phi, radius, angular_nodes) - centre) / (radius * radius);
}

double coaxial_derivative_estimate(const Curve& curve, double t, const ScalarField& phi, std::span<const double> radii,
                                   int angular_nodes)
{
    if (radii.empty()) throw Error(ErrorCode::usage, "coaxial estimate needs at least one radius");
    std::vector<double> r(radii.begin(), radii.end());
    std::sort(r.begin(), r.end());
    const double d_small = coaxial_difference_quotient(curve, t, phi, r[0], angular_nodes);
    if (r.size() == 1) return d_small;
    const double d_large = coaxial_difference_quotient(curve, t, phi, r[1], angular_nodes);
    const double a2 = r[1] * r[1], b2 = r[0] * r[0];
    return (a2 * d_small - b2 * d_large) / (a2 - b2);
}

double validate_embedded(const Curve& curve, int grid)
{
    if (grid < 64) throw Error(ErrorCode::usage, "embedding check needs a grid of at least 64 points");
    const ArclengthMap map(curve);
    const double L = map.length();
    std::vector<Vec3> p(static_cast<std::size_t>(grid));
    std::vector<double> s(static_cast<std::size_t>(grid));
    for (int i = 0; i < grid; ++i) {
        const double t = two_pi * i / grid;
        p[i] = curve.position(t);
        s[i] = map.arclength(t);
    }
    double ratio = std::numeric_limits<double>::infinity();
    for (int i = 0; i < grid; ++i) {
        for (int j = i + 1; j < grid; ++j) {
            const double ds = std::abs(s[j] - s[i]);
            const double arc = std::min(ds, L - ds);
            ratio = std::min(ratio, (p[j] - p[i]).norm() / arc);
        }
    }
    return ratio;
}

void require_embedded(const Curve& curve)
{
    const double ratio = validate_embedded(curve);
    if (ratio < min_chord_arc_ratio) {
        std::ostringstream msg;
        msg << "curve is not embedded: chord-arc ratio " << ratio << " below " << min_chord_arc_ratio;
        throw Error(ErrorCode::curve_validation, msg.str());
    }
}

} // namespace brylinski
