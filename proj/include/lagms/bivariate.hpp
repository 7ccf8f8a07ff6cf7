#ifndef LAGMS_BIVARIATE_HPP
#define LAGMS_BIVARIATE_HPP

#include "lagms/polynomial.hpp"

#include <algorithm>
#include <complex>
#include <string>
#include <vector>

namespace lagms {

/// Dense polynomial in x and a second variable (z for operator symbols, w
/// for exponential symbols). Entry (i, j) is the coefficient of x^i y^j.
/// Trailing zero rows and columns are stripped.
class BivariatePolynomial {
public:
    BivariatePolynomial() = default;

    explicit BivariatePolynomial(std::vector<std::vector<Rational>> grid) : g_(std::move(grid))
    {
        normalize();
    }

    /// Builds sum_j column_j(x) y^j.
    static BivariatePolynomial from_columns(const std::vector<Polynomial>& columns)
    {
        std::size_t rows = 0;
        for (const auto& c : columns)
            rows = std::max(rows, c.coefficients().size());
        std::vector<std::vector<Rational>> g(rows, std::vector<Rational>(columns.size()));
        for (std::size_t j = 0; j < columns.size(); ++j) {
            const auto& cc = columns[j].coefficients();
            for (std::size_t i = 0; i < cc.size(); ++i)
                g[i][j] = cc[i];
        }
        return BivariatePolynomial(std::move(g));
    }

    /// Embeds a polynomial in y alone.
    static BivariatePolynomial in_y(const Polynomial& p)
    {
        std::vector<Polynomial> cols;
        for (const auto& c : p.coefficients())
            cols.push_back(Polynomial::constant(c));
        return from_columns(cols);
    }

    static BivariatePolynomial in_x(const Polynomial& p)
    {
        return from_columns({p});
    }

    bool is_zero() const
    {
        return g_.empty();
    }

    int x_degree() const
    {
        return static_cast<int>(g_.size()) - 1;
    }

    int y_degree() const
    {
        return g_.empty() ? -1 : static_cast<int>(g_.front().size()) - 1;
    }

    Rational at(int i, int j) const
    {
        if (i < 0 || j < 0 || i > x_degree() || j > y_degree())
            return Rational(0);
        return g_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }

    const std::vector<std::vector<Rational>>& grid() const
    {
        return g_;
    }

    /// Coefficient of y^j as a polynomial in x.
    Polynomial column(int j) const
    {
        std::vector<Rational> c;
        for (int i = 0; i <= x_degree(); ++i)
            c.push_back(at(i, j));
        return Polynomial(std::move(c));
    }

    /// The polynomial in x obtained by fixing y.
    Polynomial at_y(const Rational& y) const
    {
        std::vector<Rational> c(g_.size());
        for (std::size_t i = 0; i < g_.size(); ++i) {
            Rational acc(0);
            for (auto it = g_[i].rbegin(); it != g_[i].rend(); ++it)
                acc = acc * y + *it;
            c[i] = acc;
        }
        return Polynomial(std::move(c));
    }

    /// Coefficients in x after fixing a complex y, lowest degree first.
    std::vector<std::complex<double>> at_y_complex(std::complex<double> y) const
    {
        std::vector<std::complex<double>> c(g_.size());
        for (std::size_t i = 0; i < g_.size(); ++i) {
            std::complex<double> acc(0.0, 0.0);
            for (auto it = g_[i].rbegin(); it != g_[i].rend(); ++it)
                acc = acc * y + it->get_d();
            c[i] = acc;
        }
        return c;
    }

    /// Replaces y by scale * y.
    BivariatePolynomial scale_y(const Rational& scale) const
    {
        auto g = g_;
        for (auto& row : g) {
            Rational f(1);
            for (auto& v : row) {
                v *= f;
                f *= scale;
            }
        }
        return BivariatePolynomial(std::move(g));
    }

    friend BivariatePolynomial operator+(const BivariatePolynomial& a, const BivariatePolynomial& b)
    {
        const std::size_t rows = std::max(a.g_.size(), b.g_.size());
        const std::size_t cols = static_cast<std::size_t>(std::max(a.y_degree(), b.y_degree()) + 1);
        std::vector<std::vector<Rational>> g(rows, std::vector<Rational>(cols));
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                g[i][j] = a.at(static_cast<int>(i), static_cast<int>(j)) +
                          b.at(static_cast<int>(i), static_cast<int>(j));
        return BivariatePolynomial(std::move(g));
    }

    friend BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b)
    {
        if (a.is_zero() || b.is_zero())
            return {};
        const std::size_t rows = a.g_.size() + b.g_.size() - 1;
        const std::size_t cols = a.g_.front().size() + b.g_.front().size() - 1;
        std::vector<std::vector<Rational>> g(rows, std::vector<Rational>(cols));
        for (std::size_t i = 0; i < a.g_.size(); ++i)
            for (std::size_t j = 0; j < a.g_[i].size(); ++j) {
                if (a.g_[i][j] == 0)
                    continue;
                for (std::size_t k = 0; k < b.g_.size(); ++k)
                    for (std::size_t l = 0; l < b.g_[k].size(); ++l)
                        g[i + k][j + l] += a.g_[i][j] * b.g_[k][l];
            }
        return BivariatePolynomial(std::move(g));
    }

    friend BivariatePolynomial operator*(const Rational& s, const BivariatePolynomial& a)
    {
        auto g = a.g_;
        for (auto& row : g)
            for (auto& v : row)
                v *= s;
        return BivariatePolynomial(std::move(g));
    }

    friend bool operator==(const BivariatePolynomial& a, const BivariatePolynomial& b)
    {
        return a.g_ == b.g_;
    }

private:
    void normalize()
    {
        std::size_t cols = 0;
        for (auto& row : g_) {
            for (auto& v : row)
                v.canonicalize();
            std::size_t last = row.size();
            while (last > 0 && row[last - 1] == 0)
                --last;
            cols = std::max(cols, last);
        }
        while (!g_.empty()) {
            const auto& row = g_.back();
            if (std::any_of(row.begin(), row.end(), [](const Rational& v) { return v != 0; }))
                break;
            g_.pop_back();
        }
        if (g_.empty())
            return;
        for (auto& row : g_)
            row.resize(cols);
    }

    std::vector<std::vector<Rational>> g_;
};

/// Symbol of an operator: D^k replaced by z^k.
using BivariateSymbol = BivariatePolynomial;

/// p(x - x*y) as a bivariate polynomial; with scale = -1 this is p(x + x*y).
inline BivariatePolynomial substitute_x_times_one_minus_y(const Polynomial& p, const Rational& scale = 1)
{
    // x(1 - scale*y) raised to k contributes x^k (1 - scale*y)^k.
    const Polynomial one_minus{Rational(1), Rational(-scale)};
    BivariatePolynomial out;
    Polynomial power = Polynomial::constant(1);
    const auto& c = p.coefficients();
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k] != 0) {
            std::vector<Polynomial> cols;
            for (const auto& v : power.coefficients())
                cols.push_back(Polynomial::monomial(v * c[k], static_cast<unsigned>(k)));
            out = out + BivariatePolynomial::from_columns(cols);
        }
        power *= one_minus;
    }
    return out;
}

/// Table form: one line per power of x, columns are powers of the second
/// variable, entries as rationals separated by tabs.
inline std::string format_table(const BivariatePolynomial& b, std::string_view yname = "z")
{
    std::string out = "x\\" + std::string(yname);
    for (int j = 0; j <= b.y_degree(); ++j)
        out += "\t" + std::string(yname) + "^" + std::to_string(j);
    out += '\n';
    for (int i = 0; i <= b.x_degree(); ++i) {
        out += "x^" + std::to_string(i);
        for (int j = 0; j <= b.y_degree(); ++j)
            out += "\t" + b.at(i, j).get_str();
        out += '\n';
    }
    return out;
}

} // namespace lagms

#endif // LAGMS_BIVARIATE_HPP
