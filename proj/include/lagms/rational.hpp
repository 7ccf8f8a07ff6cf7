#ifndef LAGMS_RATIONAL_HPP
#define LAGMS_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lagms {

/// Exact rational scalar. GMP keeps every value in lowest terms with a
/// positive denominator once canonicalized, which every helper here does.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "num/den" or an integer string. Decimal notation is rejected so
/// that no float ever reaches an exact path.
inline Rational parse_rational(std::string_view text)
{
    std::string s(text);
    while (!s.empty() && s.front() == ' ')
        s.erase(s.begin());
    while (!s.empty() && s.back() == ' ')
        s.pop_back();
    if (s.empty())
        throw std::invalid_argument("empty rational literal");
    auto slash = s.find('/');
    auto valid_int = [](std::string_view t) {
        if (t.empty())
            return false;
        std::size_t i = (t[0] == '-') ? 1 : 0;
        if (i == t.size())
            return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9')
                return false;
        return true;
    };
    if (slash == std::string::npos) {
        if (!valid_int(s))
            throw std::invalid_argument("malformed rational literal: " + s);
        return Rational(Integer(s));
    }
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-')
        throw std::invalid_argument("malformed rational literal: " + s);
    Integer d(den);
    if (d == 0)
        throw std::invalid_argument("zero denominator: " + s);
    Rational r(Integer(num), d);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& r)
{
    return r.get_str();
}

inline Rational factorial(unsigned n)
{
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

inline Rational binomial(unsigned n, unsigned k)
{
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rational(b);
}

inline Rational power(const Rational& base, unsigned e)
{
    Rational out(1);
    Rational b = base;
    while (e) {
        if (e & 1u)
            out *= b;
        b *= b;
        e >>= 1;
    }
    return out;
}

inline int sign(const Rational& r)
{
    return sgn(r);
}

} // namespace lagms

#endif // LAGMS_RATIONAL_HPP
