// Test-only numerical oracles, independent of the library's evaluation paths.
#pragma once

#include <cmath>
#include <functional>
#include <vector>

namespace oracles {

// Five-point central difference, O(h^4) truncation.
template <class F>
double fd_derivative(F f, double t, double h)
{
    return (f(t - 2 * h) - 8 * f(t - h) + 8 * f(t + h) - f(t + 2 * h)) / (12 * h);
}

template <class F>
double fd_derivative_rel(F f, double t, double h_rel = 1e-3)
{
    return fd_derivative(f, t, t * h_rel);
}

namespace detail {

template <class F>
double simpson(F& f, double a, double b, double fa, double fm, double fb)
{
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

template <class F>
double adaptive_step(F& f, double a, double b, double fa, double fm, double fb, double whole,
                     double tol, int depth)
{
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = simpson(f, a, m, fa, flm, fm);
    const double right = simpson(f, m, b, fm, frm, fb);
    if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return adaptive_step(f, a, m, fa, flm, fm, left, tol / 2, depth - 1) +
           adaptive_step(f, m, b, fm, frm, fb, right, tol / 2, depth - 1);
}

} // namespace detail

// Adaptive Simpson quadrature.
template <class F>
double integrate(F f, double a, double b, double tol = 1e-10, int max_depth = 40)
{
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    const double whole = detail::simpson(f, a, b, fa, fm, fb);
    return detail::adaptive_step(f, a, b, fa, fm, fb, whole, tol, max_depth);
}

inline std::vector<double> geometric_grid(double lo, double hi, int n)
{
    std::vector<double> g(static_cast<std::size_t>(n));
    const double step = std::log(hi / lo) / (n - 1);
    for (int i = 0; i < n; ++i)
        g[static_cast<std::size_t>(i)] = lo * std::exp(step * i);
    g.front() = lo;
    g.back() = hi;
    return g;
}

} // namespace oracles
