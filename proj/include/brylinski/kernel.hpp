#pragma once

// Diagonal expansions of the beta-function integrands.
//
// About a base point x and an expansion variable r (arclength offset, or parameter offset), every
// integrand is a finite sum of terms |r|^(s+m) G(r) with G analytic. The jets of G are what the
// continuation engine integrates in closed form and what the direct quadrature corrects with.

#include <brylinski/curves.hpp>
#include <brylinski/jet.hpp>
#include <brylinski/special.hpp>

#include <vector>

namespace brylinski {

enum class KernelKind { single_layer, b2 };
enum class ExpansionVariable { arclength, parameter };

struct LocalGeometry {
    ExpansionVariable variable;
    double t;
    RealJet q;        // |gamma(x + r) - gamma(x)|^2 / r^2
    RealJet hx_delta; // H(x) . delta / r^2
    RealJet hy_delta; // H(y(r)) . delta / r^2
    RealJet hh;       // H(x) . H(y(r))
    RealJet jacobian; // d sigma / d r (identically 1 in arclength)
};

/// Jets of order `order` about parameter t. Internally the curve jet carries four extra orders so
/// that the divided quantities keep full order.
LocalGeometry local_geometry(const Curve& curve, double t, int order, ExpansionVariable variable);

/// Chord function g(r) = |gamma(x + w r) - gamma(x)|^2 / r^2 in arclength offset r; g(0) = 1.
RealJet chord_jet(const Curve& curve, double t, int w, int order);

struct KernelTerm {
    int m;             // the term behaves like |r|^(s+m) G(r)
    int direction;     // +1 or -1
    ComplexJet coeffs; // G for this direction (the reflected series for direction -1)
};

/// All terms of the given integrand for both directions.
std::vector<KernelTerm> decompose_kernel(const LocalGeometry& geometry, cplx s, KernelKind kind);
/// Convenience: arclength expansion at parameter t.
std::vector<KernelTerm> decompose_kernel(const Curve& curve, double t, cplx s, KernelKind kind, int order);

/// Smallest shift m among the terms of a kind (0 for the single layer, -2 for B2).
int min_shift(KernelKind kind) noexcept;

/// |d|^p from d2 = |d|^2 > 0; takes the real path when p is real.
cplx chord_power(double d2, cplx p);

/// Pointwise integrand in the embedding: |delta|^s, or
/// -s (Hx.Hy) |delta|^(s-2) - s (s-2) (Hx.delta)(Hy.delta) |delta|^(s-4), delta = y - x.
cplx kernel_integrand(KernelKind kind, cplx s, const Vec3& x, const Vec3& y, const Vec3& hx, const Vec3& hy);

} // namespace brylinski
