#pragma once

// Sparse multivariate polynomials over the local-invariant symbols
//   a2..a8, b2..b8 (graph coefficients), k0..k3 (curvature derivatives), t0..t3 (torsion derivatives),
// with a small parser for the textual formulas in the formula table.

#include <array>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace brylinski {

inline constexpr int symbol_count = 22;
using Exponents = std::array<int, symbol_count>;

/// Symbol index layout: a_i at i-2, b_i at 5+i, kappa_n at 14+n, tau_n at 18+n.
inline constexpr int symbol_a(int i) { return i - 2; }
inline constexpr int symbol_b(int i) { return 5 + i; }
inline constexpr int symbol_kappa(int n) { return 14 + n; }
inline constexpr int symbol_tau(int n) { return 18 + n; }

std::string symbol_name(int index);
/// Accepts a2..a8, b2..b8, k0..k3 / kappa0..kappa3, t0..t3 / tau0..tau3; throws E_USAGE otherwise.
int symbol_index(std::string_view name);
/// a_i, b_i weigh i-1; kappa_n, tau_n weigh n+1.
int symbol_weight(int index);

struct Term {
    double coeff;
    Exponents exps;
};

class Polynomial {
public:
    Polynomial() = default;
    static Polynomial constant(double c);
    static Polynomial symbol(int index);

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(double c);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, double c) { return a *= c; }
    Polynomial pow(int n) const;

    bool is_constant() const;
    double constant_value() const;
    std::size_t size() const noexcept { return terms_.size(); }
    std::vector<Term> terms() const;

    /// values[i] is the value of symbol i.
    double evaluate(std::span<const double, symbol_count> values) const;

    std::string to_string() const;

private:
    std::map<Exponents, double> terms_;
};

/// Parses +, -, *, /, ^ (non-negative integer exponents), parentheses, decimal literals and symbols.
/// Division is only allowed by constant subexpressions. Syntax errors throw E_PARSE.
Polynomial parse_polynomial(std::string_view text);

int weight_of(const Exponents& exps);
/// Weight of a single monomial written as text, e.g. "a2*a4" or "k0^2*t0^2".
int weight_of(std::string_view monomial);

struct WeightAudit {
    bool pass = true;
    std::vector<std::string> offending; // monomials whose weight differs
};

WeightAudit weight_audit(const Polynomial& p, int expected_weight);
WeightAudit weight_audit(std::string_view expression, int expected_weight);

} // namespace brylinski
