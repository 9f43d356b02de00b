#pragma once

// Canonical local graph (u, f1(u), f2(u)) of a curve at a point, and the closed-form local
// formulas evaluated on its coefficients.

#include <brylinski/curves.hpp>
#include <brylinski/formula_tables.hpp>
#include <brylinski/polynomial.hpp>

#include <array>
#include <map>
#include <vector>

namespace brylinski {

inline constexpr int graph_order = 8;

struct GraphCoeffs {
    std::array<double, 7> a{}; // a[i-2] multiplies u^i in f1
    std::array<double, 7> b{}; // b[i-2] multiplies u^i in f2

    double A(int i) const { return a.at(static_cast<std::size_t>(i - 2)); }
    double B(int i) const { return b.at(static_cast<std::size_t>(i - 2)); }

    /// Symbol values for polynomial evaluation (kappa/tau slots left at zero).
    std::array<double, symbol_count> symbol_values() const;
    /// a_i -> lambda^(1-i) a_i, b_i likewise: the coefficients of the curve scaled by lambda.
    GraphCoeffs scaled(double lambda) const;
};

/// Orthonormal frame for the graph: e1 is the unit tangent, e2 and e3 span the normal plane.
struct GraphFrame {
    Vec3 e1, e2, e3;
};

/// The deterministic frame: canonical_normal_frame of module curves.
GraphFrame default_graph_frame(const Curve& curve, double t0);
/// Frame with e2 taken from the normal-plane component of `normal_hint`; e3 = e1 x e2 unless
/// `left_handed` is set, in which case e3 = e2 x e1.
GraphFrame graph_frame(const Curve& curve, double t0, const Vec3& normal_hint, bool left_handed = false);

GraphCoeffs graph_coefficients(const Curve& curve, double t0);
GraphCoeffs graph_coefficients(const Curve& curve, double t0, const GraphFrame& frame);
/// The same construction from a parameter jet of order >= 8 about its base point.
GraphCoeffs graph_coefficients(const std::array<RealJet, 3>& jet, const GraphFrame& frame);

/// Jets of the graph curve (u, f1(u), f2(u)) in u, of the requested order.
std::array<RealJet, 3> graph_curve_jet(const GraphCoeffs& g, int order);

struct LocalInvariants {
    std::array<double, 4> kappa{};
    std::array<double, 4> tau{};
};

/// A compiled set of the eight kappa/tau formulas.
class InvariantTable {
public:
    explicit InvariantTable(std::vector<RationalFormula> formulas);

    /// The printed formulas with errata applied (the default).
    static const InvariantTable& corrected();
    /// The formulas exactly as printed.
    static const InvariantTable& printed();

    LocalInvariants evaluate(const GraphCoeffs& g) const;
    const std::vector<RationalFormula>& formulas() const noexcept { return formulas_; }
    const std::vector<Polynomial>& numerators() const noexcept { return numerators_; }

private:
    std::vector<RationalFormula> formulas_;
    std::vector<Polynomial> numerators_;
};

/// Throws E_INFLECTION when a2^2 + b2^2 = 0.
LocalInvariants invariants_from_coeffs(const GraphCoeffs& g, const InvariantTable& table = InvariantTable::corrected());

struct PointwiseResidues {
    std::map<int, double> single_layer; // poles -1, -3, -5
    std::map<int, double> b2;           // poles 1, -1
    std::map<int, double> coaxial;      // poles 3, 1, -1
};

PointwiseResidues pointwise_residues(const GraphCoeffs& g);

/// Residue densities in Frenet invariants, keyed like PointwiseResidues (single_layer and coaxial).
PointwiseResidues invariant_residue_densities(const LocalInvariants& inv);

/// Integral over the curve (arclength measure) of the Frenet-invariant residue density of the
/// family (single_layer or coaxial) at the pole, by the periodic trapezoid rule.
double residue_integral(const Curve& curve, ResidueFamily family, int pole, int nodes = 256);

} // namespace brylinski
