#include <brylinski/beta.hpp>
#include <brylinski/curves.hpp>
#include <brylinski/errors.hpp>

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace brylinski;

namespace {

constexpr double pi = std::numbers::pi;

// Double-exponential rule for the integral over [0, pi] of sin(u)^s, which has endpoint
// singularities of type u^s.
cplx sine_power_integral(cplx s)
{
    const double h = 1.0 / 64;
    cplx acc = 0.0;
    for (int k = -6 * 64; k <= 6 * 64; ++k) {
        const double t = k * h;
        const double arg = 0.5 * pi * std::sinh(t);
        const double x = std::tanh(arg);          // in (-1, 1)
        const double w = 0.5 * pi * std::cosh(t) / (std::cosh(arg) * std::cosh(arg));
        // sin(u), u = pi (1 + x) / 2, from the distance to the nearer endpoint to keep relative accuracy.
        const double e = pi / (1.0 + std::exp(2.0 * std::abs(arg)));
        const double su = std::sin(e);
        if (!(su > 0.0)) continue;
        acc += w * std::exp(s * std::log(su));
    }
    return 0.5 * pi * h * acc;
}

// B_M(s) of the circle of radius R: chord 2 R sin(theta / 2) at arclength separation R theta.
cplx circle_single_layer(double R, cplx s)
{
    return 2.0 * pi * R * R * std::pow(2.0 * R, s) * 2.0 * sine_power_integral(s);
}

// On the unit circle H(x).delta = d^2 / 2, H(y).delta = -d^2 / 2 and H(x).H(y) = 1 - d^2 / 2.
cplx circle_b2(cplx s) { return -s * circle_single_layer(1.0, s - 2.0) + s * s / 4.0 * circle_single_layer(1.0, s); }

} // namespace

TEST_CASE("sine power oracle against the Gamma closed form")
{
    for (double s : {0.0, 1.0, 2.0, 3.5, -0.5}) {
        const double want = std::sqrt(pi) * std::tgamma((s + 1) / 2) / std::tgamma(s / 2 + 1);
        CHECK(std::abs(sine_power_integral(s) - want) < 1e-13 * want);
    }
}

TEST_CASE("single layer on circles")
{
    const Curve c = Curve::circle(1.0);
    CHECK(std::abs(beta_single_layer(c, 0.0).value - 4 * pi * pi) < 1e-10);
    CHECK(std::abs(beta_single_layer(c, 2.0).value - 8 * pi * pi) < 1e-10);
    CHECK(std::abs(beta_single_layer(c, 1.0).value - 16 * pi) < 1e-9);
    for (double R : {1.0, 2.0})
        for (cplx s : {cplx(0.0), cplx(1.0), cplx(2.0), cplx(3.5), cplx(2.0, 3.0), cplx(-0.5)}) {
            const BetaValue v = beta_single_layer(Curve::circle(R), s);
            const cplx want = circle_single_layer(R, s);
            CHECK(std::abs(v.value - want) < 1e-8 * std::abs(want));
            CHECK(v.abs_error_estimate < 1e-8 * std::abs(want));
            CHECK(v.method == "direct");
        }
}

TEST_CASE("B2 on the circle")
{
    const Curve c = Curve::circle(1.0);
    CHECK(std::abs(beta_b2(c, 6.0).value - 576 * pi * pi) < 1e-8 * 576 * pi * pi);
    CHECK(std::abs(beta_b2(c, 4.0).value - 64 * pi * pi) < 1e-8 * 64 * pi * pi);
    for (cplx s : {cplx(2.5), cplx(3.0, -1.0), cplx(5.0)}) {
        const cplx want = circle_b2(s);
        CHECK(std::abs(beta_b2(c, s).value - want) < 1e-8 * std::abs(want));
    }
}

TEST_CASE("B2 at s = 2 is -2 |integral of H|^2 = 0 for closed curves")
{
    for (const Curve& c : {Curve::ellipse(2.0, 1.0), Curve::torus_knot(2, 3, 2.0, 0.5)}) {
        const double scale = std::abs(beta_b2(c, 2.5).value);
        CHECK(std::abs(beta_b2(c, 2.0).value) < 1e-9 * scale);
    }
}

TEST_CASE("coaxial and B1 on the circle")
{
    const Curve c = Curve::circle(1.0);
    CHECK(std::abs(beta_coaxial(c, 6.0).value - 7296 * pi * pi) < 1e-8 * 7296 * pi * pi);
    // P(5) = 360, B_M(1) = 16 pi, B2(5) = -5 B_M(3) + 25/4 B_M(5) with B_M(3) = 128 pi / 3, B_M(5) = 2048 pi / 15.
    CHECK(std::abs(circle_single_layer(1.0, 3.0) - 128 * pi / 3) < 1e-12);
    CHECK(std::abs(circle_single_layer(1.0, 5.0) - 2048 * pi / 15) < 1e-11);
    const double want5 = 360 * 16 * pi - 5 * 128 * pi / 3 + 25.0 / 4 * 2048 * pi / 15;
    CHECK(want5 == doctest::Approx(6400 * pi).epsilon(1e-14));
    CHECK(std::abs(beta_coaxial(c, 5.0).value - want5) < 1e-8 * want5);
    CHECK(std::abs(beta_b1(c, 5.0).value - 360 * 16 * pi) < 1e-8 * 360 * 16 * pi);
    for (cplx s : {cplx(0.0), cplx(1.0), cplx(2.0), cplx(-1.0), cplx(3.0, 2.0)}) {
        const cplx want = s * (s - 2.0) * (s + 1.0) * (s - 1.0);
        CHECK(std::abs(coaxial_polynomial(s) - want) < 1e-12 * (1.0 + std::abs(want)));
    }
    const Curve e = Curve::ellipse(2.0, 1.0);
    const cplx s(5.5, 0.5);
    const cplx sum = beta_b1(e, s).value + beta_b2(e, s).value;
    CHECK(std::abs(beta_coaxial(e, s).value - sum) < 1e-10 * std::abs(sum));
}

TEST_CASE("scaling laws")
{
    const double lambda = 1.7;
    const Curve c = Curve::torus_knot(2, 3, 2.0, 0.5);
    const Curve big = c.scaled(lambda);
    for (cplx s : {cplx(0.5), cplx(2.0, 1.0)}) {
        const cplx a = beta_single_layer(c, s).value * std::pow(lambda, s + 2.0);
        CHECK(std::abs(beta_single_layer(big, s).value - a) < 1e-10 * std::abs(a));
    }
    for (cplx s : {cplx(2.5), cplx(4.0, -1.0)}) {
        const cplx a = beta_b2(c, s).value * std::pow(lambda, s - 2.0);
        CHECK(std::abs(beta_b2(big, s).value - a) < 1e-10 * std::abs(a));
    }
}

TEST_CASE("kernel symmetry in x and y")
{
    const Curve c = Curve::torus_knot(2, 3, 2.0, 0.5);
    for (cplx s : {cplx(2.5), cplx(-1.0, 3.0)})
        for (auto [x, y] : {std::pair{0.2, 1.9}, std::pair{4.0, 5.5}}) {
            const cplx a = b2_integrand(c, x, y, s), b = b2_integrand(c, y, x, s);
            CHECK(std::abs(a - b) < 1e-13 * std::abs(a));
        }
}

TEST_CASE("half-plane and quadrature validation")
{
    const Curve c = Curve::circle(1.0);
    auto code = [](auto&& f) {
        try {
            f();
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::verification;
    };
    CHECK(code([&] { beta_single_layer(c, -0.9); }) == ErrorCode::out_of_half_plane);
    CHECK(code([&] { beta_b2(c, cplx(1.0, 4.0)); }) == ErrorCode::out_of_half_plane);
    CHECK(code([&] { beta_coaxial(c, 3.0); }) == ErrorCode::out_of_half_plane);
    CHECK(code([&] { beta_single_layer(c, 1.0, QuadratureSpec{63}); }) == ErrorCode::usage);
    CHECK(code([&] { beta_single_layer(c, 1.0, QuadratureSpec{32}); }) == ErrorCode::usage);
    try {
        beta_single_layer(c, -2.0);
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("continuation") != std::string::npos);
    }
}

TEST_CASE("repeated runs are bit-identical")
{
    const Curve c = Curve::torus_knot(2, 3, 2.0, 0.5);
    const BetaValue a = beta_coaxial(c, cplx(5.0, 1.0)), b = beta_coaxial(c, cplx(5.0, 1.0));
    CHECK(a.value.real() == b.value.real());
    CHECK(a.value.imag() == b.value.imag());
    CHECK(a.abs_error_estimate == b.abs_error_estimate);
}
