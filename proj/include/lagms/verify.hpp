#ifndef LAGMS_VERIFY_HPP
#define LAGMS_VERIFY_HPP

#include "lagms/diffop.hpp"
#include "lagms/falsify.hpp"
#include "lagms/laguerre.hpp"
#include "lagms/sequences.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace lagms {

/// Coefficients of t^0..t^order in (1-t)^{-(1+alpha)} exp(-x t / (1-t)),
/// expanded formally; each coefficient is a polynomial in x.
inline std::vector<Polynomial> laguerre_generating_series(const LaguerreParams& params, unsigned order)
{
    // (1-t)^{-(1+alpha)} = sum_m (alpha+1)(alpha+2)...(alpha+m)/m! t^m
    std::vector<Polynomial> prefactor(order + 1);
    Rational c(1);
    for (unsigned m = 0; m <= order; ++m) {
        prefactor[m] = Polynomial::constant(c);
        c = c * (params.alpha() + m + 1) / (m + 1);
    }
    // exp(-x u), u = t/(1-t); u^j = sum_i binom(j+i-1, i) t^(j+i)
    std::vector<Polynomial> expo(order + 1);
    expo[0] = Polynomial::constant(1);
    for (unsigned j = 1; j <= order; ++j) {
        const Polynomial term = Polynomial::monomial((j % 2 ? Rational(-1) : Rational(1)) / factorial(j), j);
        for (unsigned i = 0; j + i <= order; ++i)
            expo[j + i] += term * binomial(j + i - 1, i);
    }
    std::vector<Polynomial> out(order + 1);
    for (unsigned a = 0; a <= order; ++a)
        for (unsigned b = 0; a + b <= order; ++b)
            out[a + b] += prefactor[a] * expo[b];
    return out;
}

struct CheckItem {
    std::string name;
    bool passed;
    std::string detail;  // first broken instance when failed
};

/// Sample parameter sets used throughout the identity suite.
inline std::vector<LaguerreParams> identity_alphas()
{
    return {LaguerreParams(0), LaguerreParams(Rational(1, 2)), LaguerreParams(1), LaguerreParams(3),
            LaguerreParams(Rational(-1, 2))};
}

inline std::vector<LaguerreParams> symbol_alphas()
{
    return {LaguerreParams(0), LaguerreParams(Rational(1, 2)), LaguerreParams(1), LaguerreParams(3)};
}

/// Runs every identity exactly. `fault` names one item whose computed side
/// is perturbed, so the harness's failure path can be exercised.
inline std::vector<CheckItem> run_identity_suite(const std::string& fault = "")
{
    std::vector<CheckItem> items;
    auto run = [&](const std::string& name, const std::function<std::optional<std::string>(bool)>& body) {
        auto failure = body(fault == name);
        items.push_back({name, !failure.has_value(), failure.value_or("")});
    };
    const Polynomial bump = Polynomial::constant(1);
    auto at = [](const LaguerreParams& p) { return "alpha=" + p.alpha().get_str(); };

    run("laguerre-ode", [&](bool perturb) -> std::optional<std::string> {
        for (const auto& p : identity_alphas())
            for (unsigned n = 0; n <= 12; ++n) {
                const Polynomial ln = laguerre_poly(n, p);
                Polynomial lhs = ln * Rational(n) + (perturb ? bump : Polynomial{});
                const Polynomial rhs =
                    Polynomial{-(p.alpha() + 1), Rational(1)} * derivative(ln) - Polynomial::x() * derivative(ln, 2);
                if (lhs != rhs || !check_ode(n, p))
                    return "n=" + std::to_string(n) + ", " + at(p);
            }
        return std::nullopt;
    });

    run("laguerre-recurrences", [&](bool perturb) -> std::optional<std::string> {
        for (const auto& p : identity_alphas())
            for (unsigned n = 1; n <= 12; ++n)
                if (!check_recurrences(n, p) || (perturb && n == 1))
                    return "n=" + std::to_string(n) + ", " + at(p);
        return std::nullopt;
    });

    run("laguerre-generating-function", [&](bool perturb) -> std::optional<std::string> {
        for (const auto& p : identity_alphas()) {
            auto series = laguerre_generating_series(p, 8);
            for (unsigned n = 0; n <= 8; ++n)
                if (series[n] + (perturb ? bump : Polynomial{}) != laguerre_poly(n, p))
                    return "n=" + std::to_string(n) + ", " + at(p);
        }
        return std::nullopt;
    });

    run("laguerre-at-zero", [&](bool perturb) -> std::optional<std::string> {
        for (const auto& p : identity_alphas())
            for (unsigned n = 0; n <= 12; ++n)
                if (laguerre_at_zero(n, p) + (perturb ? 1 : 0) != laguerre_poly(n, p)(0))
                    return "n=" + std::to_string(n) + ", " + at(p);
        return std::nullopt;
    });

    run("delta-eigenvalues", [&](bool perturb) -> std::optional<std::string> {
        for (const auto& p : identity_alphas())
            for (unsigned n = 0; n <= 8; ++n) {
                const Polynomial ln = laguerre_poly(n, p);
                if (apply(delta(p), ln) + (perturb ? bump : Polynomial{}) != ln * Rational(n))
                    return "n=" + std::to_string(n) + ", " + at(p);
            }
        return std::nullopt;
    });

    run("commutator", [&](bool perturb) -> std::optional<std::string> {
        for (const auto& p : identity_alphas())
            for (unsigned k = 0; k <= 6; ++k) {
                // -k (1 - D) D^k = -k D^k + k D^(k+1)
                DiffOperator expected = Rational(-static_cast<long>(k)) * DiffOperator::d(k) +
                                        Rational(static_cast<long>(k)) * DiffOperator::d(k + 1);
                DiffOperator got = commutator(delta(p), DiffOperator::d(k));
                if (perturb)
                    got = got + DiffOperator::identity();
                if (got != expected)
                    return "k=" + std::to_string(k) + ", " + at(p);
            }
        return std::nullopt;
    });

    run("falling-factorial-symbol", [&](bool perturb) -> std::optional<std::string> {
        for (const auto& p : symbol_alphas())
            for (unsigned n = 1; n <= 5; ++n)
                if (!verify_biglemma(n, p) || (perturb && n == 3))
                    return "n=" + std::to_string(n) + ", " + at(p);
        return std::nullopt;
    });

    run("symbol-sum-at-one", [&](bool perturb) -> std::optional<std::string> {
        for (const auto& p : symbol_alphas())
            for (unsigned n = 1; n <= 5; ++n) {
                Rational expected = (n % 2 ? -1 : 1);
                for (unsigned k = 1; k <= n; ++k)
                    expected *= p.alpha() + k;
                const Rational via_zero = factorial(n) * (n % 2 ? -1 : 1) * laguerre_at_zero(n, p);
                if (symbol_sum_at_one(n, p) + (perturb ? 1 : 0) != expected || via_zero != expected)
                    return "n=" + std::to_string(n) + ", " + at(p);
            }
        return std::nullopt;
    });

    run("falling-factorial-exp-symbol", [&](bool perturb) -> std::optional<std::string> {
        for (const auto& p : symbol_alphas())
            for (unsigned n = 1; n <= 4; ++n) {
                auto got = exp_symbol(falling_factorial_operator(n, p));
                if (perturb)
                    got = got + BivariatePolynomial::in_x(Polynomial::constant(1));
                if (got != falling_factorial_exp_symbol_closed_form(n, p))
                    return "n=" + std::to_string(n) + ", " + at(p);
            }
        return std::nullopt;
    });

    run("falling-factorial-eigenvalues", [&](bool perturb) -> std::optional<std::string> {
        for (const auto& p : symbol_alphas())
            for (unsigned n = 1; n <= 3; ++n) {
                const DiffOperator op = falling_factorial_operator(n, p);
                const auto spec = SequenceSpec::falling_factorial(n);
                for (unsigned k = 0; k <= 10; ++k) {
                    const Polynomial lk = laguerre_poly(k, p);
                    if (apply(op, lk) + (perturb ? bump : Polynomial{}) != lk * spec.value(k))
                        return "n=" + std::to_string(n) + ", k=" + std::to_string(k) + ", " + at(p);
                }
            }
        return std::nullopt;
    });

    run("linear-operator-equivalence", [&](bool perturb) -> std::optional<std::string> {
        const std::vector<Rational> shifts{Rational(0), Rational(1, 2), Rational(2), Rational(-3, 2)};
        for (const auto& p : identity_alphas())
            for (const auto& a : shifts)
                for (unsigned d = 0; d <= 10; ++d) {
                    // (x - 1/3)^d (x + 2)
                    const Polynomial q = pow(Polynomial::linear(Rational(-1, 3)), d) * Polynomial::linear(2);
                    Polynomial lhs = apply_diagonal(SequenceSpec::linear(a), p, q);
                    if (perturb)
                        lhs += bump;
                    if (lhs != apply(delta(p, a), q))
                        return "a=" + a.get_str() + ", deg=" + std::to_string(q.degree()) + ", " + at(p);
                }
        return std::nullopt;
    });

    run("shifted-square-image", [&](bool perturb) -> std::optional<std::string> {
        const LaguerreParams p0(0);
        const Polynomial p = pow(Polynomial::linear(-10), 2);
        const auto coeffs = to_laguerre_basis(p, p0).coefficients();
        if (coeffs != std::vector<Rational>{82, 16, 2})
            return std::string("Laguerre expansion of (x-10)^2");
        Polynomial image = apply_diagonal(SequenceSpec::explicit_values({1, -2, 3}), p0, p);
        if (perturb)
            image += bump;
        if (image != Polynomial{56, 20, 3})
            return "image is " + format_polynomial(image);
        if (!is_real_rooted(p).all_real || is_real_rooted(image).all_real)
            return std::string("rootedness verdicts");
        return std::nullopt;
    });

    run("geometric-discriminant", [&](bool perturb) -> std::optional<std::string> {
        const std::vector<Rational> rs{Rational(2), Rational(1, 2), Rational(-3), Rational(1), Rational(5, 3)};
        const std::vector<Rational> bs{Rational(-5), Rational(0), Rational(7, 2), Rational(1)};
        for (const auto& p : identity_alphas())
            for (const auto& r : rs)
                for (const auto& b : bs) {
                    const Polynomial image =
                        apply_diagonal(SequenceSpec::geometric(r), p, pow(Polynomial::linear(b), 2));
                    if (discriminant_quadratic(image) + (perturb ? 1 : 0) != discriminant_geometric(r, p, b))
                        return "r=" + r.get_str() + ", b=" + b.get_str() + ", " + at(p);
                }
        return std::nullopt;
    });

    run("linear-power-discriminant", [&](bool perturb) -> std::optional<std::string> {
        const std::vector<Rational> shifts{Rational(0), Rational(1, 2), Rational(2), Rational(7, 2)};
        for (const auto& p : identity_alphas())
            for (const auto& a : shifts)
                for (unsigned n = 2; n <= 8; ++n) {
                    const Polynomial base = Polynomial::linear(Rational(n));
                    const Polynomial image = apply(delta(p, a), pow(base, n));
                    const Polynomial cofactor = exact_divide(image, pow(base, n - 2));
                    if (discriminant_quadratic(cofactor) + (perturb ? 1 : 0) != discriminant_linear_power(a, p, n))
                        return "a=" + a.get_str() + ", n=" + std::to_string(n) + ", " + at(p);
                }
        return std::nullopt;
    });
    return items;
}

inline std::vector<std::string> identity_suite_names()
{
    return {"laguerre-ode",
            "laguerre-recurrences",
            "laguerre-generating-function",
            "laguerre-at-zero",
            "delta-eigenvalues",
            "commutator",
            "falling-factorial-symbol",
            "symbol-sum-at-one",
            "falling-factorial-exp-symbol",
            "falling-factorial-eigenvalues",
            "linear-operator-equivalence",
            "shifted-square-image",
            "geometric-discriminant",
            "linear-power-discriminant"};
}

} // namespace lagms

#endif // LAGMS_VERIFY_HPP
