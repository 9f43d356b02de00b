#pragma once

// Meromorphic continuation of the beta functions by subtracting the diagonal Taylor expansion.
//
// For each outer node x the inner integral is split at arclength distance eps. On [0, eps] each
// kernel term |r|^(s+m) G(r) contributes sum_k C_k eps^(s+m+k+1) / (s+m+k+1) in closed form (the
// only source of poles) plus a regular remainder; beyond eps the integrand is smooth and is
// integrated directly. Coaxial values are P(s) B_M(s-4) + B2(s).

#include <brylinski/beta.hpp>
#include <brylinski/curves.hpp>
#include <brylinski/kernel.hpp>

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace brylinski {

struct ContinuationConfig {
    int K = 8;                 // subtraction order
    double epsilon = 0.0;      // split radius; 0 selects min(L/8, L * chord_arc / 2)
    int N_outer = 256;         // periodic trapezoid nodes for the outer integral
    int N_far = 512;           // Gauss-Legendre nodes (approximately) for the far field
    int panel_nodes = 16;      // nodes per Gauss-Legendre panel
    double pole_guard = 1e-3;
    int tail_orders = 24;      // extra closed-form orders used for the remainder near the diagonal
};

struct LimitEstimate {
    cplx value;
    double error_estimate;
};

struct ResidueReport {
    int pole = 0;
    BetaKind kind = BetaKind::single_layer;
    double residue = 0.0;
    double error_estimate = 0.0;
    std::string method = "analytic_subtraction";
    bool removable = false;
    std::optional<double> numeric_limit;
    std::optional<double> numeric_error;
};

/// Whether s0 lies on the pole lattice of the kind: single layer -1, -3, ...; B2 1, -1, ...;
/// coaxial and B1 3, 1, -1, ...
bool is_lattice_pole(BetaKind kind, int s0);

/// The first `count` lattice poles of a kind in decreasing order.
std::vector<int> lattice_poles(BetaKind kind, int count);

/// The lattice pole closest to s.
int nearest_lattice_pole(BetaKind kind, cplx s);

/// Throws PoleProximityError (E_POLE) when s is within `guard` of a lattice pole of the kind.
void require_off_pole(BetaKind kind, cplx s, double guard);

class ContinuationEngine {
public:
    explicit ContinuationEngine(const Curve& curve, ContinuationConfig config = {});

    const Curve& curve() const noexcept { return *curve_; }
    const ContinuationConfig& config() const noexcept { return config_; }
    double length() const noexcept { return length_; }
    double epsilon() const noexcept { return epsilon_; }
    double chord_arc_ratio() const noexcept { return chord_arc_; }

    BetaValue evaluate(cplx s, BetaKind kind) const;

    /// Continued inner integral over y of the kernel at the base point gamma(t) (arclength measure).
    cplx inner_integral(double t, cplx s, KernelKind kind) const;

    ResidueReport residue(int pole, BetaKind kind, bool numeric_check = false) const;

    /// Residue density of the inner integral at gamma(t); comparable with the local-graph polynomials.
    double pointwise_residue(double t, int pole, BetaKind kind) const;

    /// (s - s0) B(s) along s = s0 + h d, h in {1e-2, 5e-3, 2.5e-3}, extrapolated by two Richardson steps.
    LimitEstimate limit(int pole, BetaKind kind, cplx direction = 1.0) const;

private:
    struct Sample {
        Vec3 pos, H;
        double weight; // quadrature weight times d sigma / d t
        double rho;    // arclength distance from the base point
    };
    struct Node {
        double t = 0.0, weight = 0.0;
        Vec3 pos, H;
        LocalGeometry geometry;
        double r_c = 0.0;
        std::array<std::vector<Sample>, 2> remainder; // directions +1, -1
        std::vector<Sample> far;
    };

    Node build_node(double t, bool with_samples) const;
    cplx node_integral(const Node& node, cplx s, KernelKind kind) const;
    cplx node_residue(const Node& node, int pole, KernelKind kind) const;
    cplx node_value(const Node& node, cplx s, BetaKind kind) const;
    void check_arguments(cplx s, BetaKind kind) const;
    int extended_order() const noexcept { return config_.K + config_.tail_orders; }

    std::shared_ptr<const Curve> curve_;
    std::shared_ptr<const ArclengthMap> map_;
    ContinuationConfig config_;
    double length_ = 0.0;
    double chord_arc_ = 0.0;
    double epsilon_ = 0.0;
    std::vector<Node> nodes_;
};

BetaValue continue_beta(const Curve& curve, cplx s, BetaKind kind, const ContinuationConfig& config = {});

ResidueReport residue(const Curve& curve, int pole, BetaKind kind, const ContinuationConfig& config = {},
                      bool numeric_check = false);

} // namespace brylinski
