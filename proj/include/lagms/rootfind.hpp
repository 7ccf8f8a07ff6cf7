#ifndef LAGMS_ROOTFIND_HPP
#define LAGMS_ROOTFIND_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

namespace lagms {

using Complex = std::complex<double>;

inline Complex horner(const std::vector<Complex>& c, Complex x)
{
    Complex acc(0.0, 0.0);
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

/// |p(x)| / sum |c_k| |x|^k, a scale-free residual.
inline double relative_residual(const std::vector<Complex>& c, Complex x)
{
    double scale = 0.0;
    double ax = std::abs(x);
    double pw = 1.0;
    for (const auto& v : c) {
        scale += std::abs(v) * pw;
        pw *= ax;
    }
    if (scale == 0.0)
        return 0.0;
    return std::abs(horner(c, x)) / scale;
}

/// All complex roots of sum c_k x^k (lowest degree first) by Aberth-Ehrlich
/// iteration. Leading zero coefficients are dropped first.
inline std::vector<Complex> polynomial_roots(std::vector<Complex> c, int max_iter = 500)
{
    while (!c.empty() && c.back() == Complex(0.0, 0.0))
        c.pop_back();
    const int n = static_cast<int>(c.size()) - 1;
    if (n < 1)
        return {};
    const Complex lead = c.back();
    for (auto& v : c)
        v /= lead;
    if (n == 1)
        return {-c[0]};
    if (n == 2) {
        const Complex b = c[1], cc = c[0];
        const Complex disc = std::sqrt(b * b - 4.0 * cc);
        const Complex q = -0.5 * (b + (std::real(std::conj(b) * disc) >= 0 ? disc : -disc));
        if (q == Complex(0.0, 0.0))
            return {Complex(0.0, 0.0), Complex(0.0, 0.0)};
        return {q, cc / q};
    }

    std::vector<Complex> dc(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k)
        dc[static_cast<std::size_t>(k - 1)] = c[static_cast<std::size_t>(k)] * static_cast<double>(k);

    // Cauchy bound for the initial circle; offset angle breaks symmetry.
    double radius = 0.0;
    for (int k = 0; k < n; ++k)
        radius = std::max(radius, std::abs(c[static_cast<std::size_t>(k)]));
    radius = std::min(1.0 + radius, 1e8);
    std::vector<Complex> z(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
        z[static_cast<std::size_t>(k)] =
            std::polar(radius * 0.5 + 0.1, 2.0 * std::numbers::pi * k / n + 0.4);

    for (int it = 0; it < max_iter; ++it) {
        double worst = 0.0;
        for (int i = 0; i < n; ++i) {
            auto& zi = z[static_cast<std::size_t>(i)];
            const Complex p = horner(c, zi);
            const Complex dp = horner(dc, zi);
            if (p == Complex(0.0, 0.0))
                continue;
            const Complex ratio = p / dp;
            Complex sum(0.0, 0.0);
            for (int j = 0; j < n; ++j)
                if (j != i)
                    sum += 1.0 / (zi - z[static_cast<std::size_t>(j)]);
            const Complex step = ratio / (1.0 - ratio * sum);
            if (std::isfinite(step.real()) && std::isfinite(step.imag())) {
                zi -= step;
                worst = std::max(worst, std::abs(step) / std::max(1.0, std::abs(zi)));
            }
        }
        if (worst < 1e-15)
            break;
    }
    return z;
}

} // namespace lagms

#endif // LAGMS_ROOTFIND_HPP
