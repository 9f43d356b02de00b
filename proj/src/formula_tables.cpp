#include <brylinski/errors.hpp>
#include <brylinski/formula_tables.hpp>

namespace brylinski {

namespace {

// Numerators transcribed term for term; the brackets follow the printed grouping.
const char* const kappa2_numerator =
    "((12*b2^3+12*a2^2*b2)*b4+9*a2^2*b3^2-18*a2*a3*b2*b3-12*b2^6-36*a2^2*b2^4)+(12*a2*a4+9*a3^2"
    "-36*a2^4)*b2^2+12*a2^3*a4-12*a2^6";

const char* const kappa3_numerator =
    "(60*b2^5+120*a2^2*b2^3+60*a2^4*b2)*b5+((108*a2^2*b2^2+108*a2^4)*b3-108*a2*a3*b3^3"
    "-108*a2^3*a3*b2)*b4-81*a2^2*b2*b3^3+(162*a2*a3*b2^2-81*a2^3*a3)*b3^2+(-228*b2^7-684*a2^2*b2^5+("
    "-108*a2*a4-81*a3^2-684*a2^4)*b2^3+(-108*a2^3*a4+162*a2^2*a3^2-228*a2^6)*b2)*b3-228*a2*a3*b2^6"
    "+(60*a2*a5+108*a3*a4-684*a2^3*a3)*b2^4+(120*a2^3*a5+108*a2^2*a3*a4-81*a2*a3^3-684*a2^5*a3)*b2^2"
    "+60*a2^5*a5-228*a2^7*a3";

const char* const tau1_numerator =
    "(12*a2*b2^2+12*a2^3)*b4-18*a2*b2*b3^2+(18*a3*b2^2-18*a2^2*a3)*b3-12*a4*b2^3+(18*a2*a3^2"
    "-12*a2^2*a4)*b2";

const char* const tau2_numerator =
    "(60*a2*b2^4+120*a2^3*b2^2+60*a2^5)*b5+((-216*a2*b2^3-216*a2^3*b2)*b3+108*a3*b2^4-108*a2^4*a3)*b4"
    "+(162*a2*b2^2-54*a2^3)*b3^3+(486*a2^2*a3*b2-162*a3*b2^3)*b3^2+(96*a2*b2^6+(108*a4+288*a2^3)*b2^4"
    "+(288*a2^5-486*a2*a3^2)*b2^2-108*a2^4*a4+162*a2^3*a3^2+96*a2^7)*b3-96*a3*b2^7+(-60*a5"
    "-288*a2^2*a3)*b2^5+(-120*a2^2*a5+216*a2*a3*a4+54*a3^3-288*a2^4*a3)*b2^3+(-60*a2^4*a5"
    "+216*a2^3*a3*a4-162*a2^2*a3^3-96*a2^6*a3)*b2";

const char* const tau3_numerator =
    "(360*a2*b2^6+1080*a2^3*b2^4+1080*a2^5*b2^2+360*a2^7)*b6+((-1440*a2*b2^5-2880*a2^3*b2^3"
    "-1440*a2^5*b2)*b3+720*a3*b2^6+720*a2^2*a3*b2^4-720*a2^4*a3*b2^2-720*a2^6*a3)*b5+(-864*a2*b2^5"
    "-1728*a2^3*b2^3-864*a2^5*b2)*b4^2+((3888*a2*b2^4+2592*a2^3*b2^2-1296*a2^5)*b3^2+(-2592*a3*b2^5"
    "+5184*a2^2*a3*b2^3+7776*a2^4*a3*b2)*b3+1104*a2*b2^8+(864*a4+4416*a2^3)*b2^6+(864*a2^2*a4"
    "-3888*a2*a3^2+6624*a2^5)*b2^4+(-864*a2^4*a4-2592*a2^3*a3^2+4416*a2^7)*b2^2-864*a2^6*a4"
    "+1296*a2^5*a3^2+1104*a2^9)*b4+(1944*a2^3*b2-1944*a2*b2^3)*b3^4+(1944*a3*b2^4-11664*a2^2*a3*b2^2"
    "+1944*a2^4*a3)*b3^3+(-792*a2*b2^7+(-1296*a4-2376*a2^3)*b2^5+(2592*a2^2*a4+11664*a2*a3^2"
    "-2376*a2^5)*b2^3+(3888*a2^4*a4-11664*a2^3*a3^2-792*a2^7)*b2)*b3^2+(792*a3*b2^8+(720*a5"
    "+1584*a2^2*a3)*b2^6+(720*a2^2*a5-7776*a2*a3*a4-1944*a3^3)*b2^4+(-720*a2^4*a5-5184*a2^3*a3*a4"
    "+11664*a2^2*a3^3-1584*a2^6*a3)*b2^2-720*a2^6*a5+2592*a2^5*a3*a4-1944*a2^4*a3^3-792*a2^8*a3)*b3"
    "-1104*a4*b2^9+(-360*a6-4416*a2^2*a4+792*a2*a2^3)*b2^7+(-1080*a2^2*a6+1440*a2*a3*a5+864*a2*a4^2"
    "+(1296*a3^2-6624*a2^4)*a4+2376*a2^3*a3^2)*b2^5+(-1080*a2^4*a6+2880*a2^3*a3*a5+1728*a2^3*a4^2+("
    "-2592*a2^2*a3^2-4416*a2^6)*a4-1944*a2*a4^4+2376*a2^5*a3^2)*b2^3+(-360*a2^6*a6+1440*a2^5*a3*a5"
    "+864*a2^5*a4^2+(-3888*a2^4*a3^2-1104*a2^8)*a4+1944*a2^3*a3^4+792*a2^7*a3^2)*b2";

} // namespace

const std::vector<RationalFormula>& printed_invariant_formulas()
{
    static const std::vector<RationalFormula> table = {
        {"kappa0", 1, 0, "1", 1},
        {"kappa1", -1, 0, "(24*b2*b3 + 24*a2*a3)/2", 2},
        {"kappa2", 1, 2, kappa2_numerator, 3},
        {"kappa3", 1, 3, kappa3_numerator, 4},
        {"tau0", 0, 1, "3*a2*b3 - 3*a3*b2", 1},
        {"tau1", 0, 2, tau1_numerator, 2},
        {"tau2", 0, 3, tau2_numerator, 3},
        {"tau3", 0, 4, tau3_numerator, 4},
    };
    return table;
}

const std::vector<Erratum>& invariant_errata()
{
    static const std::vector<Erratum> errata = {
        {"kappa3", "-108*a2*a3*b3^3", "-108*a2*a3*b2^3",
    "b4 bracket: exponent on the wrong symbol (weight 12 term in a weight 9 numerator)"},
        {"tau3", "792*a2*a2^3", "792*a2*a3^2",
    "b2^7 bracket: a2*a2^3 should read a2*a3^2 (weight mismatch)"},
        {"tau3", "-1944*a2*a4^4", "-1944*a2*a3^4",
    "b2^3 bracket: a4^4 should read a3^4 (weight mismatch)"},
        {"tau2", "", "-96*(b2^2 + a2^2)^3*(a2*b3 - a3*b2)",
    "missing summand -8 kappa0^2 tau0"},
        {"tau3", "",
    "-288*(b2^2 + a2^2)^3*(4*a2^3*b4 - 3*a2^2*a3*b3 - 4*a2^2*a4*b2 + 3*a2*a3^2*b2 + 4*a2*b2^2*b4"
    " - 3*a2*b2*b3^2 + 3*a3*b2^2*b3 - 4*a4*b2^3)",
    "missing summands -24 kappa0^2 tau1 - 24 kappa0 kappa1 tau0"},
    };
    return errata;
}

std::vector<RationalFormula> apply_errata(std::vector<RationalFormula> formulas, const std::vector<Erratum>& errata)
{
    for (const Erratum& e : errata) {
        bool found = false;
        for (RationalFormula& f : formulas) {
            if (f.name != e.formula) continue;
            found = true;
            if (e.printed.empty()) {
                f.numerator = "(" + f.numerator + ") + (" + e.corrected + ")";
                continue;
            }
            const auto at = f.numerator.find(e.printed);
            if (at == std::string::npos || f.numerator.find(e.printed, at + 1) != std::string::npos)
                throw Error(ErrorCode::usage, "erratum fragment '" + e.printed + "' must occur exactly once in " + f.name);
            f.numerator.replace(at, e.printed.size(), e.corrected);
        }
        if (!found) throw Error(ErrorCode::usage, "erratum names unknown formula " + e.formula);
    }
    return formulas;
}

std::vector<RationalFormula> corrected_invariant_formulas()
{
    return apply_errata(printed_invariant_formulas(), invariant_errata());
}

std::vector<RationalFormula> mutate_kappa2(std::vector<RationalFormula> formulas)
{
    return apply_errata(std::move(formulas), {{"kappa2", "12*a2^3*a4", "13*a2^3*a4", "mutation"}});
}

const std::vector<PolynomialFormula>& residue_polynomials()
{
    static const std::vector<PolynomialFormula> table = {
        {ResidueFamily::single_layer, -1, "2", 0},
        {ResidueFamily::single_layer, -3, "b2^2 + a2^2", 2},
        {ResidueFamily::single_layer, -5,
    "(24*b2*b4 + 16*b3^2 - 21*b2^4 - 42*a2^2*b2^2 + 24*a2*a4 + 16*a3^2 - 21*a2^4)/4", 4},
        {ResidueFamily::b2, 1, "-8*b2^2 - 8*a2^2", 2},
        {ResidueFamily::b2, -1, "48*b2*b4 - 36*b2^4 - 72*a2^2*b2^2 + 48*a2*a4 - 36*a2^4", 4},
        {ResidueFamily::coaxial, 3, "48", 0},
    };
    return table;
}

const std::vector<PolynomialFormula>& invariant_residue_integrands()
{
    static const std::vector<PolynomialFormula> table = {
        {ResidueFamily::single_layer, -1, "2", 0},
        {ResidueFamily::single_layer, -3, "k0^2/4", 2},
        {ResidueFamily::single_layer, -5, "3/64*k0^4 - 1/72*k0^2*t0^2 + 1/8*k0*k2 + 1/9*k1^2", 4},
        {ResidueFamily::coaxial, 3, "48", 0},
        {ResidueFamily::coaxial, 1, "-2*k0^2", 2},
        {ResidueFamily::coaxial, -1, "3/4*k0^4 - k0^2*t0^2 + k0*k2", 4},
    };
    return table;
}

} // namespace brylinski
