#include <brylinski/curves.hpp>
#include <brylinski/errors.hpp>

#include <Eigen/Geometry>
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

using namespace brylinski;

namespace {

constexpr double pi = std::numbers::pi;

// Independent closed forms for finite-difference oracles.
Vec3 torus_knot_point(double t)
{
    const double p = 2, q = 3, R = 2, r = 0.5;
    return {(R + r * std::cos(q * t)) * std::cos(p * t), (R + r * std::cos(q * t)) * std::sin(p * t), r * std::sin(q * t)};
}

Vec3 ellipse_point(double t) { return {2 * std::cos(t), std::sin(t), 0.0}; }

template <class F>
Vec3 central_derivative(F f, double t, int k, double h)
{
    switch (k) {
    case 1: return (f(t + h) - f(t - h)) / (2 * h);
    case 2: return (f(t + h) - 2 * f(t) + f(t - h)) / (h * h);
    case 3: return (f(t + 2 * h) - 2 * f(t + h) + 2 * f(t - h) - f(t - 2 * h)) / (2 * h * h * h);
    default: return (f(t + 2 * h) - 4 * f(t + h) + 6 * f(t) - 4 * f(t - h) + f(t - 2 * h)) / (h * h * h * h);
    }
}

template <class F>
double simpson(F f, double a, double b, int n)
{
    const double h = (b - a) / n;
    double acc = f(a) + f(b);
    for (int i = 1; i < n; ++i) acc += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
    return acc * h / 3.0;
}

Curve random_curve(std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> u(-0.15, 0.15);
    FourierTable t;
    t.x = {{0, 1, u(rng), u(rng)}, {0, u(rng), u(rng)}};
    t.y = {{0, u(rng), u(rng)}, {0, 1, u(rng), u(rng)}};
    t.z = {{0, u(rng), u(rng), u(rng)}, {0, u(rng), 0.3 + u(rng)}};
    return Curve::fourier(t);
}

// Lemniscate of Gerono (x, y) = (sin t, sin t cos t): regular, flat at t = 0.
Curve gerono(double z_offset)
{
    FourierTable t;
    t.x = {{}, {0, 1}};
    t.y = {{}, {0, 0, 0.5}};
    t.z = {{0, z_offset}, {}};
    return Curve::fourier(t);
}

// phi(x) = x0^3 + 2 x0 x1 x2 - x2^2 + 0.5 x1^2 x2, with gradient and Hessian in closed form.
double phi(const Vec3& x) { return x[0] * x[0] * x[0] + 2 * x[0] * x[1] * x[2] - x[2] * x[2] + 0.5 * x[1] * x[1] * x[2]; }
Vec3 phi_grad(const Vec3& x)
{
    return {3 * x[0] * x[0] + 2 * x[1] * x[2], 2 * x[0] * x[2] + x[1] * x[2], 2 * x[0] * x[1] - 2 * x[2] + 0.5 * x[1] * x[1]};
}
Eigen::Matrix3d phi_hessian(const Vec3& x)
{
    Eigen::Matrix3d h;
    h << 6 * x[0], 2 * x[2], 2 * x[1], 2 * x[2], x[2], 2 * x[0] + x[1], 2 * x[1], 2 * x[0] + x[1], -2.0;
    return h;
}

} // namespace

TEST_CASE("eval_jet examples")
{
    const auto j = eval_jet(Curve::circle(1.0), 0.0, 2);
    CHECK(j[0][0] == doctest::Approx(1.0));
    CHECK(j[0][1] == doctest::Approx(0.0).scale(1.0));
    CHECK(j[0][2] == doctest::Approx(-0.5));
    CHECK(j[1][0] == doctest::Approx(0.0).scale(1.0));
    CHECK(j[1][1] == doctest::Approx(1.0));
    CHECK(j[1][2] == doctest::Approx(0.0).scale(1.0));
    for (int k = 0; k <= 2; ++k) CHECK(j[2][k] == 0.0);

    const Curve knot = Curve::torus_knot(2, 3, 2.0, 0.5);
    const auto p = eval_jet(knot, 1.3, 0);
    CHECK(p[0].order() == 0);
    CHECK((Vec3(p[0][0], p[1][0], p[2][0]) - torus_knot_point(1.3)).norm() < 1e-14);

    const double t = 0.7;
    const auto k4 = eval_jet(knot, t, 4);
    const double steps[] = {0, 1e-4, 1e-4, 1e-3, 1e-3};
    for (int k = 1; k <= 4; ++k) {
        const Vec3 fd = central_derivative(torus_knot_point, t, k, steps[k]);
        const Vec3 jet = std::tgamma(k + 1.0) * Vec3(k4[0][k], k4[1][k], k4[2][k]);
        CHECK((jet - fd).norm() < 1e-6 * jet.norm() * (k > 2 ? 100 : 1));
    }
}

TEST_CASE("arclength")
{
    CHECK(arclength(Curve::circle(2.0)) == doctest::Approx(4 * pi).epsilon(1e-13));
    CHECK(ArclengthMap(Curve::circle(2.0)).length() == doctest::Approx(4 * pi).epsilon(1e-13));
    auto speed = [](double t) { return std::sqrt(4 * std::sin(t) * std::sin(t) + std::cos(t) * std::cos(t)); };
    const double coarse = simpson(speed, 0, 2 * pi, 2000), fine = simpson(speed, 0, 2 * pi, 4000);
    REQUIRE(std::abs(coarse - fine) < 1e-9);
    CHECK(arclength(Curve::ellipse(2, 1)) == doctest::Approx(fine).epsilon(1e-10));
    CHECK(fine == doctest::Approx(9.6884482205).epsilon(1e-10));

    std::mt19937_64 rng(3);
    const Curve c = random_curve(rng);
    CHECK(arclength(c.scaled(2.5)) == doctest::Approx(2.5 * arclength(c)).epsilon(1e-12));

    // Arclength jet: the derivative is the speed, second derivative its rate of change.
    const Curve e = Curve::ellipse(2, 1);
    const RealJet s = arclength_jet(e, 0.9, 4);
    CHECK(s[0] == 0.0);
    CHECK(s[1] == doctest::Approx(speed(0.9)).epsilon(1e-14));
    CHECK(2 * s[2] == doctest::Approx((speed(0.9 + 1e-5) - speed(0.9 - 1e-5)) / 2e-5).epsilon(1e-8));
    const ArclengthMap map(e);
    CHECK(map.offset(0.2, 1.1) == doctest::Approx(simpson(speed, 0.2, 1.1, 2000)).epsilon(1e-12));
    const double h = map.param_offset(0.4, 1.7);
    CHECK(map.offset(0.4, 0.4 + h) == doctest::Approx(1.7).epsilon(1e-13));
}

TEST_CASE("Frenet invariants")
{
    const Curve c2 = Curve::circle(2.0);
    for (double t : {0.0, 1.3, 4.0}) {
        const FrenetData f = frenet_invariants(c2, t, 2);
        CHECK(f.kappa[0] == doctest::Approx(0.5).epsilon(1e-13));
        CHECK(std::abs(f.tau[0]) < 1e-13);
        CHECK(std::abs(f.kappa[1]) < 1e-13);
        CHECK(std::abs(f.kappa[2]) < 1e-12);
    }

    // (t, t^2, t^3) at t = 0.
    const int K = 8;
    std::array<RealJet, 3> twisted = {RealJet::variable(K), RealJet(K), RealJet(K)};
    twisted[1][2] = 1;
    twisted[2][3] = 1;
    const FrenetData tc = frenet_from_jet(twisted, 1);
    CHECK(tc.kappa[0] == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(tc.tau[0] == doctest::Approx(3.0).epsilon(1e-14));

    // Ellipse at t = 0 against a finite-difference Frenet oracle.
    const FrenetData fe = frenet_invariants(Curve::ellipse(2, 1), 0.0, 1);
    const Vec3 d1 = central_derivative(ellipse_point, 0.0, 1, 1e-4), d2 = central_derivative(ellipse_point, 0.0, 2, 1e-4);
    const double kappa_fd = d1.cross(d2).norm() / std::pow(d1.norm(), 3);
    CHECK(fe.kappa[0] == doctest::Approx(kappa_fd).epsilon(1e-6));
    CHECK(fe.kappa[0] == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(std::abs(fe.tau[0]) < 1e-13);

    // Frame is right-handed orthonormal and kappa0 >= 0.
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        const Curve c = random_curve(rng);
        const FrenetData f = frenet_invariants(c, 6.0 * trial / 10, 3);
        const auto& fr = f.frame;
        CHECK(f.kappa[0] >= 0.0);
        CHECK(std::abs(fr.tangent.dot(fr.normal)) < 1e-12);
        CHECK(std::abs(fr.tangent.dot(fr.binormal)) < 1e-12);
        CHECK(std::abs(fr.normal.dot(fr.binormal)) < 1e-12);
        CHECK(std::abs(fr.tangent.norm() - 1) < 1e-12);
        CHECK(std::abs(fr.tangent.cross(fr.normal).dot(fr.binormal) - 1) < 1e-12);
    }
}

TEST_CASE("undefined frame at an inflection")
{
    const Curve g = gerono(0.0);
    CHECK(mean_curvature_vector(g, 0.0).norm() < 1e-15);
    try {
        (void)frenet_invariants(g, 0.0, 1);
        FAIL("expected an undefined-frame error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::undefined_frame);
    }
}

TEST_CASE("mean curvature vector")
{
    const Vec3 h = mean_curvature_vector(Curve::circle(1.0), 0.0);
    CHECK((h - Vec3(-1, 0, 0)).norm() < 1e-14);
    const Curve knot = Curve::torus_knot(2, 3, 2.0, 0.5);
    const FrenetData f = frenet_invariants(knot, 1.1, 0);
    CHECK((mean_curvature_vector(knot, 1.1) - f.kappa[0] * f.frame.normal).norm() < 1e-10 * f.kappa[0]);
}

TEST_CASE("unit speed and Frenet equations on random curves")
{
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        const Curve c = random_curve(rng);
        const double t = 0.6 * trial;
        const int K = 8;
        const auto g = unit_speed_jet(c, t, K);
        CHECK(std::abs(Vec3(g[0][1], g[1][1], g[2][1]).norm() - 1.0) < 1e-12);

        // N(s) = gamma''(s) / |gamma''(s)| as a jet; its derivative obeys dN/ds = -kappa T + tau B.
        std::array<RealJet, 3> dd;
        for (int i = 0; i < 3; ++i) dd[i] = g[i].derivative().derivative();
        const RealJet norm2 = dd[0] * dd[0] + dd[1] * dd[1] + dd[2] * dd[2];
        const RealJet inv = jet_power(norm2, -0.5);
        const Vec3 dN(((dd[0] * inv)[1]), ((dd[1] * inv)[1]), ((dd[2] * inv)[1]));
        const Vec3 dT(2 * g[0][2], 2 * g[1][2], 2 * g[2][2]);
        const FrenetData f = frenet_invariants(c, t, 0);
        CHECK((dT - f.kappa[0] * f.frame.normal).norm() < 1e-9);
        CHECK((dN - (-f.kappa[0] * f.frame.tangent + f.tau[0] * f.frame.binormal)).norm() < 1e-9);
    }
}

TEST_CASE("scaling of Frenet invariants")
{
    std::mt19937_64 rng(23);
    const Curve c = random_curve(rng);
    const FrenetData a = frenet_invariants(c, 1.4, 3), b = frenet_invariants(c.scaled(2.0), 1.4, 3);
    for (int n = 0; n <= 3; ++n) {
        const double f = std::pow(2.0, -1 - n);
        CHECK(std::abs(b.kappa[n] - f * a.kappa[n]) <= 1e-10 * std::max(1.0, std::abs(f * a.kappa[n])));
        CHECK(std::abs(b.tau[n] - f * a.tau[n]) <= 1e-10 * std::max(1.0, std::abs(f * a.tau[n])));
    }
}

TEST_CASE("coaxial derivative examples")
{
    const Curve c = Curve::circle(1.0);
    const std::vector<double> radii = {1e-2, 5e-3};
    auto sq = [](const Vec3& x) { return x.squaredNorm(); };
    auto lin = [](const Vec3& x) { return 3 * x[0] - x[1] + 0.5 * x[2] + 2; };
    auto cube = [](const Vec3& x) { return x[0] * x[0] * x[0]; };
    CHECK(coaxial_derivative_estimate(c, 0.0, sq, radii) == doctest::Approx(4.0).epsilon(1e-9));
    CHECK(std::abs(coaxial_derivative_estimate(c, 0.0, lin, radii)) < 1e-8);
    CHECK(coaxial_derivative_estimate(c, 0.0, cube, radii) == doctest::Approx(6.0).epsilon(1e-8));
    CHECK(coaxial_average(c, 0.0, sq, 0.1) == doctest::Approx(1.01).epsilon(1e-14));
    try {
        (void)coaxial_derivative_estimate(c, 0.0, sq, {});
        FAIL("expected a usage error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::usage);
    }
}

TEST_CASE("coaxial identity: estimate equals Laplacian minus (phi o gamma)'' plus grad phi . H")
{
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> u(0.0, 2 * pi);
    for (int trial = 0; trial < 20; ++trial) {
        const Curve c = random_curve(rng);
        const double t = u(rng);
        const Vec3 x = c.position(t), T = c.derivative(t, 1).normalized(), H = mean_curvature_vector(c, t);
        const Eigen::Matrix3d hess = phi_hessian(x);
        const double along = T.dot(hess * T) + phi_grad(x).dot(H); // (phi o gamma)''(s)
        const double want = hess.trace() - along + phi_grad(x).dot(H);
        const std::vector<double> radii = {2e-2, 1e-2};
        CHECK(coaxial_derivative_estimate(c, t, phi, radii) == doctest::Approx(want).epsilon(1e-8).scale(1.0));
        // Raw quotients converge at order two.
        const double e1 = std::abs(coaxial_difference_quotient(c, t, phi, 4e-2) - want);
        const double e2 = std::abs(coaxial_difference_quotient(c, t, phi, 2e-2) - want);
        if (e1 > 1e-9) CHECK(std::log2(e1 / e2) > 1.9);
    }
}

TEST_CASE("divergence theorem along the curve")
{
    std::mt19937_64 rng(37);
    const Curve c = random_curve(rng);
    const int n = 512;
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
        const double t = 2 * pi * i / n;
        const Vec3 x = c.position(t), T = c.derivative(t, 1).normalized();
        acc += (T.dot(phi_hessian(x) * T) + phi_grad(x).dot(mean_curvature_vector(c, t))) * c.speed(t);
    }
    CHECK(std::abs(acc * 2 * pi / n) < 1e-8);
}

TEST_CASE("embeddedness")
{
    CHECK(validate_embedded(Curve::circle(1.0)) == doctest::Approx(2 / pi).epsilon(1e-6));
    const double e1 = validate_embedded(Curve::ellipse(2, 1), 256), e2 = validate_embedded(Curve::ellipse(2, 1), 512);
    CHECK(e1 > 0.0);
    CHECK(e1 < 2 / pi);
    CHECK(std::abs(e1 - e2) < 1e-2 * e2);
    CHECK_THROWS_AS(validate_embedded(Curve::circle(1.0), 32), Error);

    const Curve near = gerono(1e-5);
    CHECK(validate_embedded(near) < min_chord_arc_ratio);
    try {
        require_embedded(near);
        FAIL("expected rejection");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::curve_validation);
    }
    CHECK_NOTHROW(require_embedded(Curve::torus_knot(2, 3, 2.0, 0.5)));
}

TEST_CASE("construction rejects singular curves")
{
    FourierTable t;
    t.x = {{0, 1}, {}};
    t.y = {{}, {}};
    t.z = {{}, {}};
    try {
        (void)Curve::fourier(t);
        FAIL("expected rejection");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::curve_validation);
    }
    CHECK_THROWS_AS(Curve::circle(-1.0), Error);
    CHECK_THROWS_AS(Curve::torus_knot(2, 3, 0.5, 2.0), Error);
}
