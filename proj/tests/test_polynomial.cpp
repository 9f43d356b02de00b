#include <brylinski/errors.hpp>
#include <brylinski/formula_tables.hpp>
#include <brylinski/polynomial.hpp>

#include <doctest.h>

#include <random>

using namespace brylinski;

namespace {

std::array<double, symbol_count> random_values(std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    std::array<double, symbol_count> v{};
    for (auto& x : v) x = u(rng);
    return v;
}

ErrorCode code_of(auto&& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::usage;
}

} // namespace

TEST_CASE("symbols")
{
    CHECK(symbol_index("a2") == symbol_a(2));
    CHECK(symbol_index("b8") == symbol_b(8));
    CHECK(symbol_index("k0") == symbol_kappa(0));
    CHECK(symbol_index("kappa3") == symbol_kappa(3));
    CHECK(symbol_index("t2") == symbol_tau(2));
    CHECK(symbol_index("tau1") == symbol_tau(1));
    CHECK(symbol_name(symbol_b(4)) == "b4");
    CHECK(code_of([] { (void)symbol_index("c5"); }) == ErrorCode::usage);
    CHECK(code_of([] { (void)symbol_index("a9"); }) == ErrorCode::usage);
}

TEST_CASE("weights")
{
    CHECK(weight_of("a2*a4") == 4);
    CHECK(weight_of("k0^2*t0^2") == 4);
    CHECK(weight_of("b8") == 7);
    CHECK(weight_of("t3") == 4);
    CHECK(weight_of("7") == 0);
    CHECK(weight_audit("48*b2*b4 - 36*b2^4 - 72*a2^2*b2^2 + 48*a2*a4 - 36*a2^4", 4).pass);
    const WeightAudit bad = weight_audit("a2*a4 + b3 - k1", 4);
    CHECK_FALSE(bad.pass);
    CHECK(bad.offending.size() == 2);
    CHECK(code_of([] { (void)weight_of("a2 + b2"); }) == ErrorCode::usage);
}

TEST_CASE("parsing and evaluation")
{
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 20; ++trial) {
        const auto v = random_values(rng);
        const double a2 = v[symbol_a(2)], b3 = v[symbol_b(3)], k0 = v[symbol_kappa(0)];
        const Polynomial p = parse_polynomial("2*a2^2 - 3*b3 + 1 - (a2 - k0)^3/4");
        const double want = 2 * a2 * a2 - 3 * b3 + 1 - (a2 - k0) * (a2 - k0) * (a2 - k0) / 4;
        CHECK(p.evaluate(v) == doctest::Approx(want).epsilon(1e-14));
        // Printing and re-parsing is the identity.
        CHECK(parse_polynomial(p.to_string()).evaluate(v) == doctest::Approx(want).epsilon(1e-14));
        // Algebra: (a2 + b3)^2 expands.
        const Polynomial sq = (Polynomial::symbol(symbol_a(2)) + Polynomial::symbol(symbol_b(3))).pow(2);
        CHECK(sq.evaluate(v) == doctest::Approx((a2 + b3) * (a2 + b3)).epsilon(1e-14));
        CHECK(sq.size() == 3);
    }
    CHECK(parse_polynomial("3/4").is_constant());
    CHECK(parse_polynomial("3/4").constant_value() == 0.75);
    CHECK(parse_polynomial("a2 - a2").size() == 0);
}

TEST_CASE("parse errors")
{
    for (const char* bad : {"a2 +", "(a2", "a2 ** 2", "a2^-1", "a2 / b2", "2 $ 3", ""})
        CHECK(code_of([&] { (void)parse_polynomial(bad); }) == ErrorCode::parse);
    CHECK(code_of([] { (void)parse_polynomial("c5 + 1"); }) == ErrorCode::usage);
}

TEST_CASE("printed tables keep the typos and the errata repair them")
{
    const auto& printed = printed_invariant_formulas();
    REQUIRE(printed.size() == 8);
    const char* names[] = {"kappa0", "kappa1", "kappa2", "kappa3", "tau0", "tau1", "tau2", "tau3"};
    const int weights[] = {1, 2, 3, 4, 1, 2, 3, 4};
    for (int i = 0; i < 8; ++i) {
        CHECK(printed[i].name == names[i]);
        CHECK(printed[i].weight == weights[i]);
    }
    CHECK(printed[0].numerator == "1");
    CHECK(printed[4].numerator == "3*a2*b3 - 3*a3*b2");
    CHECK(printed[3].numerator.find("-108*a2*a3*b3^3") != std::string::npos);
    CHECK(printed[7].numerator.find("792*a2*a2^3") != std::string::npos);

    const auto corrected = corrected_invariant_formulas();
    for (int i = 0; i < 8; ++i) {
        CHECK(weight_audit(corrected[i].numerator, corrected[i].numerator_weight()).pass);
        const bool touched = corrected[i].numerator != printed[i].numerator;
        CHECK(touched == (i == 3 || i == 6 || i == 7));
    }
    CHECK(invariant_errata().size() == 5);

    // The misprinted kappa3 and tau3 monomials break the weight grading.
    CHECK_FALSE(weight_audit(printed[3].numerator, printed[3].numerator_weight()).pass);
    CHECK_FALSE(weight_audit(printed[7].numerator, printed[7].numerator_weight()).pass);

    const auto mutated = mutate_kappa2(corrected);
    CHECK(mutated[2].numerator != corrected[2].numerator);
    CHECK(mutated[2].numerator.find("13*a2^3*a4") != std::string::npos);
    CHECK(code_of([&] { (void)apply_errata(corrected, {{"kappa2", "no such fragment", "x", ""}}); }) ==
          ErrorCode::usage);
    CHECK(code_of([&] { (void)apply_errata(corrected, {{"kappa9", "", "a2", ""}}); }) == ErrorCode::usage);
}

TEST_CASE("residue polynomial weights follow the grading")
{
    for (const auto& p : residue_polynomials()) {
        // Single layer at s = -k has weight k - 1; B2 and coaxial at s = -k have weight k + 3.
        const int k = -p.pole;
        const int expected = p.family == ResidueFamily::single_layer ? k - 1 : k + 3;
        CHECK(p.weight == expected);
        CHECK(weight_audit(p.text, p.weight).pass);
    }
    for (const auto& p : invariant_residue_integrands()) {
        const int k = -p.pole;
        CHECK(weight_audit(p.text, p.family == ResidueFamily::single_layer ? k - 1 : k + 3).pass);
    }
}
