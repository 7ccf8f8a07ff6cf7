#ifndef LAGMS_DIFFOP_HPP
#define LAGMS_DIFFOP_HPP

#include "lagms/bivariate.hpp"
#include "lagms/laguerre.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace lagms {

/// Finite-order differential operator sum_k q_k(x) D^k in normal form: all
/// derivatives to the right of the polynomial coefficients. Stored densely
/// by order with trailing zero coefficients removed.
class DiffOperator {
public:
    DiffOperator() = default;

    explicit DiffOperator(std::vector<Polynomial> coeffs) : q_(std::move(coeffs))
    {
        while (!q_.empty() && q_.back().is_zero())
            q_.pop_back();
    }

    static DiffOperator identity()
    {
        return DiffOperator({Polynomial::constant(1)});
    }

    /// Multiplication by q(x).
    static DiffOperator multiply_by(const Polynomial& q)
    {
        return DiffOperator({q});
    }

    /// D^k.
    static DiffOperator d(unsigned k = 1)
    {
        std::vector<Polynomial> q(k + 1);
        q[k] = Polynomial::constant(1);
        return DiffOperator(std::move(q));
    }

    bool is_zero() const
    {
        return q_.empty();
    }

    int order() const
    {
        return static_cast<int>(q_.size()) - 1;
    }

    /// Lowest order with a nonzero coefficient, -1 for the zero operator.
    int lowest_order() const
    {
        for (std::size_t k = 0; k < q_.size(); ++k)
            if (!q_[k].is_zero())
                return static_cast<int>(k);
        return -1;
    }

    Polynomial coefficient(int k) const
    {
        if (k < 0 || k > order())
            return {};
        return q_[static_cast<std::size_t>(k)];
    }

    const std::vector<Polynomial>& coefficients() const
    {
        return q_;
    }

    friend DiffOperator operator+(const DiffOperator& a, const DiffOperator& b)
    {
        std::vector<Polynomial> q(std::max(a.q_.size(), b.q_.size()));
        for (std::size_t k = 0; k < q.size(); ++k)
            q[k] = a.coefficient(static_cast<int>(k)) + b.coefficient(static_cast<int>(k));
        return DiffOperator(std::move(q));
    }

    friend DiffOperator operator-(const DiffOperator& a, const DiffOperator& b)
    {
        std::vector<Polynomial> q(std::max(a.q_.size(), b.q_.size()));
        for (std::size_t k = 0; k < q.size(); ++k)
            q[k] = a.coefficient(static_cast<int>(k)) - b.coefficient(static_cast<int>(k));
        return DiffOperator(std::move(q));
    }

    friend DiffOperator operator*(const Rational& s, const DiffOperator& a)
    {
        std::vector<Polynomial> q = a.q_;
        for (auto& p : q)
            p *= s;
        return DiffOperator(std::move(q));
    }

    friend bool operator==(const DiffOperator& a, const DiffOperator& b)
    {
        return a.q_ == b.q_;
    }

private:
    std::vector<Polynomial> q_;
};

/// sum_k q_k(x) p^(k)(x).
inline Polynomial apply(const DiffOperator& op, const Polynomial& p)
{
    Polynomial out;
    Polynomial dp = p;
    for (const auto& q : op.coefficients()) {
        if (dp.is_zero())
            break;
        if (!q.is_zero())
            out += q * dp;
        dp = derivative(dp);
    }
    return out;
}

/// A o B, normalized with D^i q = sum_m binom(i, m) q^(m) D^(i-m).
inline DiffOperator compose(const DiffOperator& a, const DiffOperator& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Polynomial> out(static_cast<std::size_t>(a.order() + b.order() + 1));
    for (int i = 0; i <= a.order(); ++i) {
        const Polynomial& ai = a.coefficients()[static_cast<std::size_t>(i)];
        if (ai.is_zero())
            continue;
        for (int j = 0; j <= b.order(); ++j) {
            Polynomial bj = b.coefficients()[static_cast<std::size_t>(j)];
            for (int m = 0; m <= i && !bj.is_zero(); ++m) {
                out[static_cast<std::size_t>(i - m + j)] +=
                    ai * bj * binomial(static_cast<unsigned>(i), static_cast<unsigned>(m));
                bj = derivative(bj);
            }
        }
    }
    return DiffOperator(std::move(out));
}

inline DiffOperator commutator(const DiffOperator& a, const DiffOperator& b)
{
    return compose(a, b) - compose(b, a);
}

/// shift + (x - (alpha+1)) D - x D^2. With shift = 0 this diagonalizes the
/// Laguerre basis with eigenvalue n on L_n.
inline DiffOperator delta(const LaguerreParams& params, const Rational& shift = 0)
{
    return DiffOperator({Polynomial::constant(shift), Polynomial{-(params.alpha() + 1), Rational(1)},
                         Polynomial{Rational(0), Rational(-1)}});
}

/// delta (delta - 1) ... (delta - (n-1)) by iterated composition.
inline DiffOperator falling_factorial_operator(unsigned n, const LaguerreParams& params)
{
    if (n == 0)
        throw std::invalid_argument("falling_factorial_operator needs n >= 1");
    DiffOperator out = delta(params);
    for (unsigned j = 1; j < n; ++j)
        out = compose(out, delta(params, Rational(-static_cast<long>(j))));
    return out;
}

/// sum_k q_k(x) z^k.
inline BivariateSymbol symbol(const DiffOperator& op)
{
    return BivariateSymbol::from_columns(op.coefficients());
}

/// G(x, w) with op[exp(-x w)] = G(x, w) exp(-x w), i.e. the symbol at z = -w.
inline BivariateSymbol exp_symbol(const DiffOperator& op)
{
    return symbol(op).scale_y(-1);
}

/// n! (-1)^n z^n L_n^(alpha)(x - x z).
inline BivariateSymbol falling_factorial_symbol_closed_form(unsigned n, const LaguerreParams& params)
{
    const Rational scale = factorial(n) * ((n % 2 == 0) ? 1 : -1);
    return scale * (BivariatePolynomial::in_y(Polynomial::monomial(1, n)) *
                    substitute_x_times_one_minus_y(laguerre_poly(n, params)));
}

/// n! (-1)^n (-w)^n L_n^(alpha)(x + x w).
inline BivariateSymbol falling_factorial_exp_symbol_closed_form(unsigned n, const LaguerreParams& params)
{
    const Rational scale = factorial(n);
    return scale * (BivariatePolynomial::in_y(Polynomial::monomial(1, n)) *
                    substitute_x_times_one_minus_y(laguerre_poly(n, params), -1));
}

/// The composed operator's symbol against the closed form.
inline bool verify_biglemma(unsigned n, const LaguerreParams& params)
{
    if (n == 0)
        throw std::invalid_argument("verify_biglemma needs n >= 1");
    return symbol(falling_factorial_operator(n, params)) == falling_factorial_symbol_closed_form(n, params);
}

/// sum_k q_k(x) for the falling-factorial operator. The sum is constant in
/// x; anything else is an internal error.
inline Rational symbol_sum_at_one(unsigned n, const LaguerreParams& params)
{
    if (n == 0)
        throw std::invalid_argument("symbol_sum_at_one needs n >= 1");
    Polynomial sum = symbol(falling_factorial_operator(n, params)).at_y(1);
    if (sum.degree() > 0)
        throw std::logic_error("symbol sum at z = 1 is not constant: " + format_polynomial(sum));
    return sum.coeff(0);
}

} // namespace lagms

#endif // LAGMS_DIFFOP_HPP
