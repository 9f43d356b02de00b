#pragma once

// Truncated Taylor series of fixed order over a real or complex scalar field.
//
// Coefficients are Taylor-normalised: coeffs[k] = f^(k)(0) / k!. Every operation truncates at the
// common order K; nothing is ever read or written past index K.

#include <brylinski/errors.hpp>

#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

namespace brylinski {

template <typename T> struct is_complex : std::false_type {};
template <typename T> struct is_complex<std::complex<T>> : std::true_type {};
template <typename T> inline constexpr bool is_complex_v = is_complex<T>::value;

template <typename T> class Jet {
public:
    using value_type = T;

    explicit Jet(int order = 0) : c_(static_cast<std::size_t>(check_order(order)) + 1, T{}) {}

    explicit Jet(std::vector<T> coeffs) : c_(std::move(coeffs))
    {
        if (c_.empty()) throw Error(ErrorCode::usage, "jet needs at least one coefficient");
    }

    Jet(std::initializer_list<T> coeffs) : Jet(std::vector<T>(coeffs)) {}

    /// Widening conversion, e.g. Jet<double> -> Jet<std::complex<double>>.
    template <typename U>
        requires(!std::is_same_v<U, T> && std::is_convertible_v<U, T>)
    explicit Jet(const Jet<U>& other) : c_(other.coeffs().begin(), other.coeffs().end())
    {}

    static Jet constant(T value, int order)
    {
        Jet j(order);
        j.c_[0] = value;
        return j;
    }

    /// The jet of base + r.
    static Jet variable(int order, T base = T{})
    {
        Jet j(order);
        j.c_[0] = base;
        if (order >= 1) j.c_[1] = T{1};
        return j;
    }

    int order() const noexcept { return static_cast<int>(c_.size()) - 1; }

    T& operator[](int k) { return c_[static_cast<std::size_t>(k)]; }
    const T& operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }

    std::span<const T> coeffs() const noexcept { return c_; }
    T value() const noexcept { return c_.front(); }

    /// Evaluates the truncated polynomial at r (Horner).
    template <typename R> auto eval(R r) const
    {
        using Out = decltype(T{} * r);
        Out acc{};
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * r + Out(*it);
        return acc;
    }

    /// Same series at a different order: drops high coefficients or pads with zeros.
    Jet truncated(int order) const
    {
        Jet j(order);
        const int n = std::min(order, this->order());
        for (int k = 0; k <= n; ++k) j.c_[k] = c_[k];
        return j;
    }

    /// d/dr; the result has order K-1 (order 0 stays order 0 with value 0).
    Jet derivative() const
    {
        if (order() == 0) return Jet(0);
        Jet d(order() - 1);
        for (int k = 1; k <= order(); ++k) d.c_[k - 1] = c_[k] * static_cast<double>(k);
        return d;
    }

    /// Integral from 0 to r; the result has order K+1.
    Jet antiderivative() const
    {
        Jet a(order() + 1);
        for (int k = 0; k <= order(); ++k) a.c_[k + 1] = c_[k] / static_cast<double>(k + 1);
        return a;
    }

    /// Divides by r^n, discarding the first n coefficients (callers guarantee they vanish).
    Jet shifted_down(int n) const
    {
        if (n < 0 || n > order()) throw Error(ErrorCode::usage, "shift exceeds jet order");
        Jet j(order() - n);
        for (int k = n; k <= order(); ++k) j.c_[k - n] = c_[k];
        return j;
    }

    /// The series of f(-r).
    Jet reflected() const
    {
        Jet j = *this;
        for (int k = 1; k <= order(); k += 2) j.c_[k] = -j.c_[k];
        return j;
    }

    Jet& operator+=(const Jet& o)
    {
        require_same_order(o);
        for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
        return *this;
    }
    Jet& operator-=(const Jet& o)
    {
        require_same_order(o);
        for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
        return *this;
    }
    Jet& operator*=(const Jet& o) { return *this = *this * o; }
    Jet& operator/=(const Jet& o) { return *this = *this / o; }

    Jet& operator+=(const T& s)
    {
        c_[0] += s;
        return *this;
    }
    Jet& operator-=(const T& s)
    {
        c_[0] -= s;
        return *this;
    }
    Jet& operator*=(const T& s)
    {
        for (auto& x : c_) x *= s;
        return *this;
    }
    Jet& operator/=(const T& s)
    {
        for (auto& x : c_) x /= s;
        return *this;
    }

    friend Jet operator+(Jet a, const Jet& b) { return a += b; }
    friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
    friend Jet operator-(Jet a)
    {
        for (auto& x : a.c_) x = -x;
        return a;
    }

    friend Jet operator*(const Jet& a, const Jet& b)
    {
        a.require_same_order(b);
        const int K = a.order();
        Jet r(K);
        for (int i = 0; i <= K; ++i) {
            if (a.c_[i] == T{}) continue;
            for (int j = 0; i + j <= K; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        return r;
    }

    friend Jet operator/(const Jet& a, const Jet& b)
    {
        a.require_same_order(b);
        if (b.c_[0] == T{}) throw Error(ErrorCode::singular_jet, "jet division by a series with zero constant term");
        const int K = a.order();
        Jet q(K);
        for (int k = 0; k <= K; ++k) {
            T acc = a.c_[k];
            for (int j = 1; j <= k; ++j) acc -= b.c_[j] * q.c_[k - j];
            q.c_[k] = acc / b.c_[0];
        }
        return q;
    }

    friend Jet operator+(Jet a, const T& s) { return a += s; }
    friend Jet operator+(const T& s, Jet a) { return a += s; }
    friend Jet operator-(Jet a, const T& s) { return a -= s; }
    friend Jet operator-(const T& s, const Jet& a) { return -a + s; }
    friend Jet operator*(Jet a, const T& s) { return a *= s; }
    friend Jet operator*(const T& s, Jet a) { return a *= s; }
    friend Jet operator/(Jet a, const T& s) { return a /= s; }

    friend bool operator==(const Jet&, const Jet&) = default;

private:
    static int check_order(int order)
    {
        if (order < 0) throw Error(ErrorCode::usage, "jet order must be non-negative");
        return order;
    }

    void require_same_order(const Jet& o) const
    {
        if (o.order() != order())
            throw Error(ErrorCode::usage, "jet order mismatch: " + std::to_string(order()) + " vs " +
                                              std::to_string(o.order()));
    }

    std::vector<T> c_;
};

using RealJet = Jet<double>;
using ComplexJet = Jet<std::complex<double>>;

template <typename T> Jet<T> jet_add(const Jet<T>& a, const Jet<T>& b) { return a + b; }
template <typename T> Jet<T> jet_multiply(const Jet<T>& a, const Jet<T>& b) { return a * b; }
template <typename T> Jet<T> jet_divide(const Jet<T>& a, const Jet<T>& b) { return a / b; }

namespace detail {

template <typename T> bool leading_is_positive_real(const T& v)
{
    if constexpr (is_complex_v<T>) {
        return v.imag() == 0.0 && v.real() > 0.0;
    } else {
        return v > 0.0;
    }
}

} // namespace detail

/// h^alpha for a jet with real, strictly positive constant term, via h (h^a)' = a h' h^a.
template <typename T, typename E> auto jet_power(const Jet<T>& h, E alpha)
{
    using Out = std::common_type_t<T, E>;
    if (!detail::leading_is_positive_real(h[0]))
        throw Error(ErrorCode::domain, "jet_power needs a real, strictly positive leading coefficient");
    const int K = h.order();
    Jet<Out> y(K);
    const double h0 = std::real(h[0]);
    y[0] = std::pow(Out(h0), Out(alpha));
    for (int k = 1; k <= K; ++k) {
        Out acc{};
        for (int j = 1; j <= k; ++j) {
            if (h[j] == T{}) continue;
            acc += (Out(alpha) * static_cast<double>(j) - static_cast<double>(k - j)) * Out(h[j]) * y[k - j];
        }
        y[k] = acc / (static_cast<double>(k) * h0);
    }
    return y;
}

/// log h for a jet with real, strictly positive constant term.
template <typename T> Jet<T> jet_log(const Jet<T>& h)
{
    if (!detail::leading_is_positive_real(h[0]))
        throw Error(ErrorCode::domain, "jet_log needs a real, strictly positive leading coefficient");
    const int K = h.order();
    Jet<T> l(K);
    l[0] = std::log(h[0]);
    for (int k = 1; k <= K; ++k) {
        T acc = h[k];
        for (int j = 1; j < k; ++j) acc -= static_cast<double>(j) / static_cast<double>(k) * l[j] * h[k - j];
        l[k] = acc / h[0];
    }
    return l;
}

/// f(g(r)) for g(0) = 0, by Horner's scheme in the jet ring.
template <typename T> Jet<T> jet_compose(const Jet<T>& f, const Jet<T>& g)
{
    if (f.order() != g.order()) throw Error(ErrorCode::usage, "jet_compose needs equal orders");
    if (g[0] != T{}) throw Error(ErrorCode::usage, "jet_compose needs g(0) = 0");
    const int K = f.order();
    Jet<T> acc = Jet<T>::constant(f[K], K);
    for (int k = K - 1; k >= 0; --k) {
        acc = acc * g;
        acc[0] += f[k];
    }
    return acc;
}

/// Compositional inverse of f (f(0) = 0, f'(0) != 0) by Lagrange inversion:
/// g_n = [r^(n-1)] (r / f(r))^n / n.
template <typename T> Jet<T> jet_reversion(const Jet<T>& f)
{
    const int K = f.order();
    if (f[0] != T{}) throw Error(ErrorCode::singular_jet, "jet_reversion needs f(0) = 0");
    if (K < 1 || f[1] == T{}) throw Error(ErrorCode::singular_jet, "jet_reversion needs f'(0) != 0");
    Jet<T> g(K);
    if (K == 1) {
        g[1] = T{1} / f[1];
        return g;
    }
    const Jet<T> phi = Jet<T>::constant(T{1}, K - 1) / f.shifted_down(1);
    Jet<T> power = phi;
    for (int n = 1; n <= K; ++n) {
        g[n] = power[n - 1] / static_cast<double>(n);
        if (n < K) power = power * phi;
    }
    return g;
}

} // namespace brylinski
