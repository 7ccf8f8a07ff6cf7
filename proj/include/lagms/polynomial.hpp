#ifndef LAGMS_POLYNOMIAL_HPP
#define LAGMS_POLYNOMIAL_HPP

#include "lagms/rational.hpp"

#include <algorithm>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lagms {

/// Dense univariate polynomial over Q, lowest degree first. Trailing zero
/// coefficients are always stripped; the zero polynomial has no
/// coefficients and degree -1.
class Polynomial {
public:
    Polynomial() = default;

    explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs))
    {
        normalize();
    }

    Polynomial(std::initializer_list<Rational> coeffs) : c_(coeffs)
    {
        normalize();
    }

    static Polynomial constant(const Rational& value)
    {
        return Polynomial(std::vector<Rational>{value});
    }

    static Polynomial monomial(const Rational& coeff, unsigned degree)
    {
        std::vector<Rational> c(degree + 1);
        c[degree] = coeff;
        return Polynomial(std::move(c));
    }

    static Polynomial x()
    {
        return monomial(1, 1);
    }

    /// x + root_shift, i.e. the linear factor with zero at -root_shift.
    static Polynomial linear(const Rational& root_shift)
    {
        return Polynomial{root_shift, Rational(1)};
    }

    int degree() const
    {
        return static_cast<int>(c_.size()) - 1;
    }

    bool is_zero() const
    {
        return c_.empty();
    }

    const std::vector<Rational>& coefficients() const
    {
        return c_;
    }

    Rational coeff(int k) const
    {
        if (k < 0 || k > degree())
            return Rational(0);
        return c_[static_cast<std::size_t>(k)];
    }

    const Rational& leading() const
    {
        if (c_.empty())
            throw std::domain_error("zero polynomial has no leading coefficient");
        return c_.back();
    }

    Rational operator()(const Rational& at) const
    {
        Rational acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            acc = acc * at + *it;
        return acc;
    }

    Polynomial& operator+=(const Polynomial& o)
    {
        if (o.c_.size() > c_.size())
            c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i)
            c_[i] += o.c_[i];
        normalize();
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o)
    {
        if (o.c_.size() > c_.size())
            c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i)
            c_[i] -= o.c_[i];
        normalize();
        return *this;
    }

    Polynomial& operator*=(const Rational& s)
    {
        if (s == 0) {
            c_.clear();
            return *this;
        }
        for (auto& v : c_)
            v *= s;
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b)
    {
        a += b;
        return a;
    }

    friend Polynomial operator-(Polynomial a, const Polynomial& b)
    {
        a -= b;
        return a;
    }

    friend Polynomial operator-(Polynomial a)
    {
        for (auto& v : a.c_)
            v = -v;
        return a;
    }

    friend Polynomial operator*(Polynomial a, const Rational& s)
    {
        a *= s;
        return a;
    }

    friend Polynomial operator*(const Rational& s, Polynomial a)
    {
        a *= s;
        return a;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b)
    {
        if (a.is_zero() || b.is_zero())
            return {};
        std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0)
                continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                out[i + j] += a.c_[i] * b.c_[j];
        }
        return Polynomial(std::move(out));
    }

    Polynomial& operator*=(const Polynomial& o)
    {
        *this = *this * o;
        return *this;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b)
    {
        return a.c_ == b.c_;
    }

private:
    void normalize()
    {
        for (auto& v : c_)
            v.canonicalize();
        while (!c_.empty() && c_.back() == 0)
            c_.pop_back();
    }

    std::vector<Rational> c_;
};

inline Polynomial pow(const Polynomial& base, unsigned e)
{
    Polynomial out = Polynomial::constant(1);
    Polynomial b = base;
    while (e) {
        if (e & 1u)
            out *= b;
        e >>= 1;
        if (e)
            b *= b;
    }
    return out;
}

inline Polynomial derivative(const Polynomial& p)
{
    if (p.degree() < 1)
        return {};
    const auto& c = p.coefficients();
    std::vector<Rational> out(c.size() - 1);
    for (std::size_t k = 1; k < c.size(); ++k)
        out[k - 1] = c[k] * static_cast<unsigned long>(k);
    return Polynomial(std::move(out));
}

inline Polynomial derivative(Polynomial p, unsigned order)
{
    for (unsigned i = 0; i < order && !p.is_zero(); ++i)
        p = derivative(p);
    return p;
}

/// p(scale * x + shift), by Horner in the polynomial ring.
inline Polynomial compose_affine(const Polynomial& p, const Rational& scale, const Rational& shift)
{
    const Polynomial inner{shift, scale};
    Polynomial acc;
    const auto& c = p.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        acc = acc * inner + Polynomial::constant(*it);
    return acc;
}

/// p(q(x)).
inline Polynomial compose(const Polynomial& p, const Polynomial& q)
{
    Polynomial acc;
    const auto& c = p.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        acc = acc * q + Polynomial::constant(*it);
    return acc;
}

inline Polynomial monic(const Polynomial& p)
{
    if (p.is_zero())
        return p;
    return p * (Rational(1) / p.leading());
}

/// Euclidean division over Q. Throws on a zero divisor.
inline std::pair<Polynomial, Polynomial> divmod(const Polynomial& num, const Polynomial& den)
{
    if (den.is_zero())
        throw std::domain_error("polynomial division by zero");
    if (num.degree() < den.degree())
        return {Polynomial{}, num};
    std::vector<Rational> r = num.coefficients();
    const auto& d = den.coefficients();
    const int dd = den.degree();
    const Rational inv_lead = Rational(1) / den.leading();
    std::vector<Rational> q(static_cast<std::size_t>(num.degree() - dd + 1));
    for (int k = num.degree(); k >= dd; --k) {
        Rational f = r[static_cast<std::size_t>(k)] * inv_lead;
        q[static_cast<std::size_t>(k - dd)] = f;
        if (f == 0)
            continue;
        for (int j = 0; j <= dd; ++j)
            r[static_cast<std::size_t>(k - dd + j)] -= f * d[static_cast<std::size_t>(j)];
    }
    r.resize(static_cast<std::size_t>(dd));
    return {Polynomial(std::move(q)), Polynomial(std::move(r))};
}

/// Exact quotient; throws std::domain_error if den does not divide num.
inline Polynomial exact_divide(const Polynomial& num, const Polynomial& den)
{
    auto [q, r] = divmod(num, den);
    if (!r.is_zero())
        throw std::domain_error("polynomial division is not exact");
    return q;
}

/// Human-readable form, lowest degree first: "1 - 2x + 1/2 x^2".
inline std::string format_polynomial(const Polynomial& p, std::string_view var = "x")
{
    if (p.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    const auto& c = p.coefficients();
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k] == 0)
            continue;
        Rational mag = abs(c[k]);
        if (first) {
            if (c[k] < 0)
                os << "-";
        } else {
            os << (c[k] < 0 ? " - " : " + ");
        }
        if (k == 0) {
            os << mag.get_str();
        } else {
            if (mag != 1) {
                os << mag.get_str();
                if (mag.get_den() != 1)
                    os << ' ';
            }
            os << var;
            if (k > 1)
                os << '^' << k;
        }
        first = false;
    }
    return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const Polynomial& p)
{
    return os << format_polynomial(p);
}

/// Coefficient-list text form, lowest degree first: "100,-20,1".
inline std::string to_coefficient_text(const Polynomial& p)
{
    std::string out;
    const auto& c = p.coefficients();
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (k)
            out += ',';
        out += c[k].get_str();
    }
    return out;
}

/// Parses a comma-separated coefficient list, lowest degree first. An
/// optional pair of enclosing brackets and quoted entries are tolerated.
inline Polynomial parse_coefficient_text(std::string_view text)
{
    std::string s;
    for (char ch : text)
        if (ch != '"' && ch != '[' && ch != ']' && ch != ' ')
            s += ch;
    std::vector<Rational> c;
    if (s.empty())
        return {};
    std::size_t start = 0;
    while (true) {
        auto comma = s.find(',', start);
        c.push_back(parse_rational(s.substr(start, comma - start)));
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    return Polynomial(std::move(c));
}

} // namespace lagms

#endif // LAGMS_POLYNOMIAL_HPP
