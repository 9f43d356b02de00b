#pragma once

// Closed analytic curves in R^3 on the fixed parameter domain [0, 2 pi).
//
// Every built-in kind is stored as a trigonometric polynomial per coordinate, so Taylor jets at any
// parameter are exact (no finite differences on the main path).

#include <brylinski/jet.hpp>

#include <Eigen/Core>

#include <array>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace brylinski {

using Vec3 = Eigen::Vector3d;

inline constexpr double two_pi = 6.283185307179586476925286766559;

/// Curvature below which the Frenet normal is treated as undefined.
inline constexpr double tol_frame = 1e-8;
/// Default ceiling on jet order for the Frenet machinery; callers may raise it.
inline constexpr int default_max_order = 12;
/// Curves whose chord-arc ratio falls below this are rejected for beta evaluation.
inline constexpr double min_chord_arc_ratio = 1e-3;

enum class CurveKind { circle, ellipse, torus_knot, fourier };

const char* curve_kind_name(CurveKind kind) noexcept;

/// sum_n cos_coeffs[n] cos(n t) + sin_coeffs[n] sin(n t); the index is the frequency.
struct TrigSeries {
    std::vector<double> cos_coeffs;
    std::vector<double> sin_coeffs;
};

struct FourierTable {
    TrigSeries x, y, z;
};

class Curve {
public:
    static Curve circle(double radius);
    static Curve ellipse(double a, double b);
    /// ((R + r cos qt) cos pt, (R + r cos qt) sin pt, r sin qt)
    static Curve torus_knot(int p, int q, double major_radius, double minor_radius);
    static Curve fourier(FourierTable table);

    CurveKind kind() const noexcept { return kind_; }
    /// Construction parameters in declaration order (empty for fourier).
    const std::vector<double>& parameters() const noexcept { return params_; }
    const FourierTable& table() const noexcept { return table_; }
    std::string description() const;

    Vec3 position(double t) const { return derivative(t, 0); }
    /// k-th derivative with respect to the parameter.
    Vec3 derivative(double t, int k) const;
    double speed(double t) const { return derivative(t, 1).norm(); }

    /// Component jets of gamma(t + h) in h.
    std::array<RealJet, 3> jet(double t, int order) const;

    /// The curve lambda * gamma.
    Curve scaled(double lambda) const;

private:
    Curve(CurveKind kind, std::vector<double> params, FourierTable table);

    CurveKind kind_;
    std::vector<double> params_;
    FourierTable table_;
};

/// Positions along the curve by arclength: cumulative Gauss-Legendre panels plus safeguarded Newton.
class ArclengthMap {
public:
    explicit ArclengthMap(const Curve& curve, int panels = 512);

    double length() const noexcept { return length_; }
    /// sigma(t) - sigma(0) for any real t, extended periodically.
    double arclength(double t) const;
    double offset(double t0, double t1) const { return arclength(t1) - arclength(t0); }
    /// h with sigma(t0 + h) - sigma(t0) = r; r may be negative.
    double param_offset(double t0, double r) const;

private:
    double partial(double a, double b) const;

    const Curve* curve_;
    std::vector<double> cumulative_;
    double panel_width_;
    double length_;
};

struct FrenetFrame {
    Vec3 tangent, normal, binormal;
};

struct FrenetData {
    std::vector<double> kappa; // kappa_0 .. kappa_m, derivatives in arclength
    std::vector<double> tau;   // tau_0 .. tau_m
    FrenetFrame frame;
};

std::array<RealJet, 3> eval_jet(const Curve& curve, double t, int order);

double arclength(const Curve& curve);

/// Jet of sigma(t + h) - sigma(t) in h.
RealJet arclength_jet(const Curve& curve, double t, int order);

/// Jets of gamma at arclength offset r from gamma(t): the curve composed with the reverted arclength series.
std::array<RealJet, 3> unit_speed_jet(const Curve& curve, double t, int order);

FrenetData frenet_invariants(const Curve& curve, double t, int m, int max_order = default_max_order);

/// Arclength series of an arbitrary parameter jet about its base point.
RealJet arclength_jet(const std::array<RealJet, 3>& jet);
/// The same curve germ as a function of arclength offset.
std::array<RealJet, 3> reparametrize_by_arclength(const std::array<RealJet, 3>& jet);
/// Frenet data from a parameter jet of order at least m + 3 (e.g. a synthetic graph curve).
FrenetData frenet_from_jet(const std::array<RealJet, 3>& jet, int m);

/// d^2 gamma / d sigma^2 = kappa_0 N; the zero vector where the curve is locally straight.
Vec3 mean_curvature_vector(const Curve& curve, double t);

/// Tangent plus an orthonormal basis of the normal plane. The first normal comes from the
/// lowest-index coordinate axis that is not nearly parallel to the tangent (Gram-Schmidt);
/// the second completes a right-handed triple.
struct NormalFrame {
    Vec3 tangent, n1, n2;
};
NormalFrame canonical_normal_frame(const Curve& curve, double t);

using ScalarField = std::function<double(const Vec3&)>;

/// Mean of phi over the circle of the given radius in the normal plane at gamma(t).
double coaxial_average(const Curve& curve, double t, const ScalarField& phi, double radius,
                       int angular_nodes = 64);

/// 4 (average - phi(u)) / r^2 at a single radius; tends to the coaxial derivative as r -> 0.
double coaxial_difference_quotient(const Curve& curve, double t, const ScalarField& phi, double radius,
                                   int angular_nodes = 64);

/// Coaxial derivative X1^2 phi + X2^2 phi at gamma(t): difference quotients at the two smallest
/// radii combined by one Richardson step (error O(r^2) -> O(r^4)).
double coaxial_derivative_estimate(const Curve& curve, double t, const ScalarField& phi,
                                   std::span<const double> radii, int angular_nodes = 64);

/// Minimum over grid pairs of chord / shorter-arc distance.
double validate_embedded(const Curve& curve, int grid = 256);

/// Throws E_CURVE when validate_embedded falls below min_chord_arc_ratio.
void require_embedded(const Curve& curve);

} // namespace brylinski
