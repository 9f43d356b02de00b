#include <brylinski/special.hpp>

#include <array>
#include <cmath>
#include <limits>
#include <numbers>

namespace brylinski {

namespace {

constexpr double pi = std::numbers::pi;

constexpr std::array<double, 9> lanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7,
};

bool is_nonpositive_integer(cplx z)
{
    return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::round(z.real());
}

// Valid for Re z >= 1/2.
cplx gamma_right(cplx z)
{
    z -= 1.0;
    cplx x = lanczos[0];
    for (int i = 1; i < 9; ++i) x += lanczos[i] / (z + static_cast<double>(i));
    const cplx t = z + 7.5;
    return std::sqrt(2.0 * pi) * std::exp((z + 0.5) * std::log(t) - t) * x;
}

// B_2j / (2j)! for j = 1..14.
std::array<double, 14> bernoulli_over_factorial()
{
    constexpr std::array<double, 14> b = {
        1.0 / 6.0,          -1.0 / 30.0,          1.0 / 42.0,         -1.0 / 30.0,
        5.0 / 66.0,         -691.0 / 2730.0,      7.0 / 6.0,          -3617.0 / 510.0,
        43867.0 / 798.0,    -174611.0 / 330.0,    854513.0 / 138.0,   -236364091.0 / 2730.0,
        8553103.0 / 6.0,    -23749461029.0 / 870.0,
    };
    std::array<double, 14> out{};
    double fact = 1.0;
    for (int j = 1; j <= 14; ++j) {
        fact *= static_cast<double>((2 * j - 1) * (2 * j));
        out[j - 1] = b[j - 1] / fact;
    }
    return out;
}

cplx zeta_euler_maclaurin(cplx z)
{
    static const auto coeffs = bernoulli_over_factorial();
    constexpr int n_terms = 20;
    cplx sum = 0.0;
    for (int n = 1; n < n_terms; ++n) sum += std::exp(-z * std::log(static_cast<double>(n)));
    const double N = n_terms;
    const double logN = std::log(N);
    sum += std::exp((1.0 - z) * logN) / (z - 1.0);
    sum += 0.5 * std::exp(-z * logN);
    cplx rising = z; // z (z+1) ... (z+2j-2)
    for (int j = 1; j <= 14; ++j) {
        sum += coeffs[j - 1] * rising * std::exp((-z - static_cast<double>(2 * j - 1)) * logN);
        rising *= (z + static_cast<double>(2 * j - 1)) * (z + static_cast<double>(2 * j));
    }
    return sum;
}

} // namespace

cplx gamma(cplx z)
{
    if (is_nonpositive_integer(z)) return {std::numeric_limits<double>::infinity(), 0.0};
    if (z.real() < 0.5) return pi / (std::sin(pi * z) * gamma_right(1.0 - z));
    return gamma_right(z);
}

cplx rgamma(cplx z)
{
    if (is_nonpositive_integer(z)) return 0.0;
    if (z.real() < 0.5) return std::sin(pi * z) * gamma_right(1.0 - z) / pi;
    return 1.0 / gamma_right(z);
}

cplx zeta(cplx z)
{
    if (z == cplx(1.0, 0.0)) return {std::numeric_limits<double>::infinity(), 0.0};
    if (z.real() >= -1.0) return zeta_euler_maclaurin(z);
    // Reflection: zeta(z) = 2^z pi^(z-1) sin(pi z / 2) Gamma(1-z) zeta(1-z).
    const cplx w = 1.0 - z;
    return std::exp(z * std::log(2.0) + (z - 1.0) * std::log(pi)) * std::sin(0.5 * pi * z) * gamma_right(w) *
           zeta_euler_maclaurin(w);
}

cplx circle_beta_closed_form(double radius, cplx s)
{
    const cplx scale = std::exp((s + 2.0) * std::log(2.0 * radius));
    return scale * std::pow(pi, 1.5) * gamma(0.5 * (s + 1.0)) * rgamma(0.5 * s + 1.0);
}

} // namespace brylinski
