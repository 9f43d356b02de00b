#pragma once

// Textual source of every closed-form local formula: the curvature/torsion expressions in graph
// coefficients, the pointwise residue polynomials, and the residue integrands in Frenet invariants.
// Numeric evaluation (localgraph) and the weight audit both parse these strings.

#include <string>
#include <vector>

namespace brylinski {

/// value = S^s_power * numerator / D^d_power with S = sqrt(4 b2^2 + 4 a2^2), D = b2^2 + a2^2.
struct RationalFormula {
    std::string name;  // "kappa0".."kappa3", "tau0".."tau3"
    int s_power;
    int d_power;
    std::string numerator;
    int weight;        // weight of the whole expression

    /// S has weight 1 and D weight 2, so the numerator carries weight - s_power + 2 d_power.
    int numerator_weight() const noexcept { return weight - s_power + 2 * d_power; }
};

/// A correction to a printed formula. With `printed` non-empty the fragment is replaced (it must
/// occur exactly once); with `printed` empty, `corrected` is added to the numerator as a new summand.
struct Erratum {
    std::string formula;
    std::string printed;
    std::string corrected;
    std::string note;
};

/// The eight expressions as printed, in the order kappa0..kappa3, tau0..tau3.
const std::vector<RationalFormula>& printed_invariant_formulas();
const std::vector<Erratum>& invariant_errata();
/// Printed formulas with every erratum applied.
std::vector<RationalFormula> corrected_invariant_formulas();
std::vector<RationalFormula> apply_errata(std::vector<RationalFormula> formulas, const std::vector<Erratum>& errata);

/// The sensitivity hook for mutation testing: kappa2's "12*a2^3*a4" becomes "13*a2^3*a4".
std::vector<RationalFormula> mutate_kappa2(std::vector<RationalFormula> formulas);

enum class ResidueFamily { single_layer, b2, coaxial };

struct PolynomialFormula {
    ResidueFamily family;
    int pole;
    std::string text;
    int weight;
};

/// Pointwise residue polynomials in graph coefficients: single layer at -1, -3, -5; B2 at 1, -1;
/// coaxial at 3 (B1 only).
const std::vector<PolynomialFormula>& residue_polynomials();

/// Residue densities in Frenet invariants: single layer at -1, -3, -5; coaxial at 3, 1, -1.
const std::vector<PolynomialFormula>& invariant_residue_integrands();

} // namespace brylinski
