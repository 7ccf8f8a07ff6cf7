#ifndef LAGMS_LAGUERRE_HPP
#define LAGMS_LAGUERRE_HPP

#include "lagms/polynomial.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace lagms {

/// The Laguerre parameter alpha, restricted to rationals greater than -1.
class LaguerreParams {
public:
    explicit LaguerreParams(Rational alpha) : alpha_(std::move(alpha))
    {
        alpha_.canonicalize();
        if (alpha_ <= -1)
            throw std::invalid_argument("Laguerre parameter alpha must exceed -1, got " +
                                        alpha_.get_str());
    }

    const Rational& alpha() const
    {
        return alpha_;
    }

    friend bool operator==(const LaguerreParams& a, const LaguerreParams& b)
    {
        return a.alpha_ == b.alpha_;
    }

private:
    Rational alpha_;
};

/// L_n^(alpha)(x) = sum_k binom(n+alpha, n-k) (-x)^k / k!, with the
/// generalized binomial expanded as prod_{j=1}^{n-k} (alpha+k+j) / (n-k)!.
inline Polynomial laguerre_poly(unsigned n, const LaguerreParams& params)
{
    const Rational& a = params.alpha();
    std::vector<Rational> c(n + 1);
    for (unsigned k = 0; k <= n; ++k) {
        Rational num(1);
        for (unsigned j = 1; j <= n - k; ++j)
            num *= a + k + j;
        Rational v = num / (factorial(n - k) * factorial(k));
        c[k] = (k % 2 == 0) ? v : Rational(-v);
    }
    return Polynomial(std::move(c));
}

/// L_n^(alpha)(0) = prod_{k=1}^n (alpha+k) / n!.
inline Rational laguerre_at_zero(unsigned n, const LaguerreParams& params)
{
    Rational num(1);
    for (unsigned k = 1; k <= n; ++k)
        num *= params.alpha() + k;
    return num / factorial(n);
}

/// L_0 .. L_max for one alpha, built once and shared by the basis
/// conversions. Immutable after construction.
class LaguerreBasis {
public:
    LaguerreBasis(const LaguerreParams& params, unsigned max_degree) : params_(params)
    {
        polys_.reserve(max_degree + 1);
        for (unsigned n = 0; n <= max_degree; ++n)
            polys_.push_back(laguerre_poly(n, params));
    }

    const LaguerreParams& params() const
    {
        return params_;
    }

    unsigned max_degree() const
    {
        return static_cast<unsigned>(polys_.size() - 1);
    }

    const Polynomial& operator[](unsigned n) const
    {
        if (n >= polys_.size())
            throw std::out_of_range("Laguerre basis holds degrees up to " +
                                    std::to_string(max_degree()));
        return polys_[n];
    }

private:
    LaguerreParams params_;
    std::vector<Polynomial> polys_;
};

/// Coefficients with respect to L_0^(alpha), L_1^(alpha), ...; trailing
/// zeros stripped.
class LaguerreCoeffs {
public:
    LaguerreCoeffs(LaguerreParams params, std::vector<Rational> coeffs)
        : params_(std::move(params)), c_(std::move(coeffs))
    {
        for (auto& v : c_)
            v.canonicalize();
        while (!c_.empty() && c_.back() == 0)
            c_.pop_back();
    }

    const LaguerreParams& params() const
    {
        return params_;
    }

    const std::vector<Rational>& coefficients() const
    {
        return c_;
    }

    friend bool operator==(const LaguerreCoeffs& a, const LaguerreCoeffs& b)
    {
        return a.params_ == b.params_ && a.c_ == b.c_;
    }

private:
    LaguerreParams params_;
    std::vector<Rational> c_;
};

/// Back-substitution against the triangular change of basis: L_k has
/// degree exactly k, so the top coefficient fixes c_k.
inline LaguerreCoeffs to_laguerre_basis(const Polynomial& p, const LaguerreBasis& basis)
{
    if (p.is_zero())
        return LaguerreCoeffs(basis.params(), {});
    const unsigned n = static_cast<unsigned>(p.degree());
    std::vector<Rational> c(n + 1);
    Polynomial rest = p;
    for (int k = static_cast<int>(n); k >= 0 && !rest.is_zero(); --k) {
        if (rest.degree() < k)
            continue;
        const Polynomial& lk = basis[static_cast<unsigned>(k)];
        Rational ck = rest.coeff(k) / lk.leading();
        c[static_cast<std::size_t>(k)] = ck;
        rest -= lk * ck;
    }
    return LaguerreCoeffs(basis.params(), std::move(c));
}

inline LaguerreCoeffs to_laguerre_basis(const Polynomial& p, const LaguerreParams& params)
{
    LaguerreBasis basis(params, p.is_zero() ? 0u : static_cast<unsigned>(p.degree()));
    return to_laguerre_basis(p, basis);
}

inline Polynomial from_laguerre_basis(const LaguerreCoeffs& coeffs, const LaguerreBasis& basis)
{
    Polynomial out;
    const auto& c = coeffs.coefficients();
    for (std::size_t k = 0; k < c.size(); ++k)
        if (c[k] != 0)
            out += basis[static_cast<unsigned>(k)] * c[k];
    return out;
}

inline Polynomial from_laguerre_basis(const LaguerreCoeffs& coeffs)
{
    const auto& c = coeffs.coefficients();
    if (c.empty())
        return {};
    LaguerreBasis basis(coeffs.params(), static_cast<unsigned>(c.size() - 1));
    return from_laguerre_basis(coeffs, basis);
}

/// n L_n = (x - alpha - 1) L_n' - x L_n'', checked as polynomials.
inline bool check_ode(unsigned n, const LaguerreParams& params)
{
    const Polynomial ln = laguerre_poly(n, params);
    const Polynomial d1 = derivative(ln);
    const Polynomial d2 = derivative(d1);
    const Polynomial rhs = Polynomial{-(params.alpha() + 1), Rational(1)} * d1 - Polynomial::x() * d2;
    return ln * Rational(n) == rhs;
}

/// x L_n' = n L_n - (alpha+n) L_{n-1} and L_n' = L_{n-1}' - L_{n-1}.
inline bool check_recurrences(unsigned n, const LaguerreParams& params)
{
    if (n == 0)
        throw std::invalid_argument("check_recurrences needs n >= 1");
    const Polynomial ln = laguerre_poly(n, params);
    const Polynomial lm = laguerre_poly(n - 1, params);
    const bool first =
        Polynomial::x() * derivative(ln) == ln * Rational(n) - lm * (params.alpha() + n);
    const bool second = derivative(ln) == derivative(lm) - lm;
    return first && second;
}

} // namespace lagms

#endif // LAGMS_LAGUERRE_HPP
