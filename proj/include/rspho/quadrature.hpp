#ifndef RSPHO_QUADRATURE_HPP
#define RSPHO_QUADRATURE_HPP

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>

namespace rspho::quadrature {

/// Composite Simpson rule over equally spaced samples f[0..n-1] with step h.
/// An even number of intervals uses pure Simpson; an odd count closes the
/// last three intervals with Simpson's 3/8 rule.
inline double simpson(std::span<const double> f, double h)
{
    const std::size_t n = f.size();
    if (n < 2)
        return 0.0;
    if (n == 2)
        return 0.5 * h * (f[0] + f[1]);
    if (n == 3)
        return h / 3.0 * (f[0] + 4.0 * f[1] + f[2]);

    std::size_t intervals = n - 1;
    std::size_t simpson_end = n - 1;
    double tail = 0.0;
    if (intervals % 2 == 1) {
        simpson_end = n - 4;
        tail = 3.0 * h / 8.0 * (f[n - 4] + 3.0 * f[n - 3] + 3.0 * f[n - 2] + f[n - 1]);
    }
    double acc = f[0] + f[simpson_end];
    for (std::size_t i = 1; i < simpson_end; ++i)
        acc += (i % 2 == 1 ? 4.0 : 2.0) * f[i];
    return h / 3.0 * acc + tail;
}

/// Trapezoid rule on arbitrary abscissae.
inline double trapezoid(std::span<const double> x, std::span<const double> f)
{
    if (x.size() != f.size())
        throw std::invalid_argument("trapezoid: size mismatch");
    double acc = 0.0;
    for (std::size_t i = 1; i < x.size(); ++i)
        acc += 0.5 * (x[i] - x[i - 1]) * (f[i] + f[i - 1]);
    return acc;
}

/// True when x is equally spaced to within a relative tolerance on the step.
inline bool is_uniform(std::span<const double> x, double rel_tol = 1e-9)
{
    if (x.size() < 3)
        return true;
    const double h = (x.back() - x.front()) / static_cast<double>(x.size() - 1);
    for (std::size_t i = 1; i < x.size(); ++i)
        if (std::abs((x[i] - x[i - 1]) - h) > rel_tol * std::abs(h) + 1e-300)
            return false;
    return true;
}

}  // namespace rspho::quadrature

#endif  // RSPHO_QUADRATURE_HPP
