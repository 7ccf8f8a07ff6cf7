#ifndef LAGMS_REALROOT_HPP
#define LAGMS_REALROOT_HPP

#include "lagms/polynomial.hpp"

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace lagms {

struct SquareFreePart {
    Polynomial factor;
    unsigned multiplicity;
};

/// content * prod(part.factor ^ part.multiplicity) reproduces the input.
/// Parts are monic, square-free, pairwise coprime and ordered by
/// increasing multiplicity.
struct SquareFreeDecomposition {
    Rational content;
    std::vector<SquareFreePart> parts;
};

struct RootednessVerdict {
    bool all_real = true;
    int degree = -1;
    int real_count_with_multiplicity = 0;
};

namespace detail {

using IntPoly = std::vector<Integer>;

inline int int_degree(const IntPoly& p)
{
    return static_cast<int>(p.size()) - 1;
}

inline void trim(IntPoly& p)
{
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

/// Divides out the positive content. Signs are preserved.
inline void make_primitive(IntPoly& p)
{
    if (p.empty())
        return;
    Integer g = 0;
    for (const auto& v : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1)
            return;
    }
    if (g > 1)
        for (auto& v : p)
            mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

/// Clears denominators with a positive multiplier and strips content.
inline IntPoly to_primitive(const Polynomial& p)
{
    const auto& c = p.coefficients();
    Integer l = 1;
    for (const auto& v : c)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    IntPoly out(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        Integer q = l / c[i].get_den();
        out[i] = c[i].get_num() * q;
    }
    make_primitive(out);
    return out;
}

inline IntPoly int_derivative(const IntPoly& p)
{
    if (p.size() < 2)
        return {};
    IntPoly out(p.size() - 1);
    for (std::size_t k = 1; k < p.size(); ++k)
        out[k - 1] = p[k] * static_cast<unsigned long>(k);
    trim(out);
    return out;
}

/// Pseudo-remainder. Returns R with lc(b)^m * a = q*b + R together with m,
/// so the true remainder over Q is R / lc(b)^m.
inline std::pair<IntPoly, unsigned> pseudo_remainder(IntPoly a, const IntPoly& b)
{
    const int db = int_degree(b);
    const Integer& lb = b.back();
    unsigned m = 0;
    while (!a.empty() && int_degree(a) >= db) {
        const int shift = int_degree(a) - db;
        const Integer la = a.back();
        for (auto& v : a)
            v *= lb;
        for (int j = 0; j <= db; ++j)
            a[static_cast<std::size_t>(shift + j)] -= la * b[static_cast<std::size_t>(j)];
        ++m;
        trim(a);
    }
    return {std::move(a), m};
}

inline Polynomial to_rational(const IntPoly& p)
{
    std::vector<Rational> c(p.begin(), p.end());
    return Polynomial(std::move(c));
}

/// Primitive polynomial remainder sequence for the gcd.
inline IntPoly int_gcd(IntPoly a, IntPoly b)
{
    if (int_degree(a) < int_degree(b))
        std::swap(a, b);
    while (!b.empty()) {
        auto [r, m] = pseudo_remainder(std::move(a), b);
        (void)m;
        make_primitive(r);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

inline int sign_at_infinity(const IntPoly& p, bool negative)
{
    int s = sgn(p.back());
    if (negative && (int_degree(p) % 2 != 0))
        s = -s;
    return s;
}

/// Distinct real roots from a Sturm chain. The last chain element is
/// gcd(p, p') up to a scalar; a non-constant tail means p is not
/// square-free and no count is returned.
inline std::optional<int> sturm_count(const IntPoly& p)
{
    std::vector<IntPoly> chain;
    chain.push_back(p);
    chain.push_back(int_derivative(p));
    make_primitive(chain.back());
    while (!chain.back().empty()) {
        const IntPoly& prev = chain[chain.size() - 2];
        const IntPoly& cur = chain.back();
        auto [r, m] = pseudo_remainder(prev, cur);
        // True remainder = r / lc(cur)^m; Sturm takes its negation.
        bool negate = true;
        if (sgn(cur.back()) < 0 && (m % 2 == 1))
            negate = !negate;
        if (negate)
            for (auto& v : r)
                v = -v;
        make_primitive(r);
        chain.push_back(std::move(r));
    }
    chain.pop_back();
    if (int_degree(chain.back()) > 0)
        return std::nullopt;

    auto variations = [&](bool negative) {
        int count = 0;
        int last = 0;
        for (const auto& s : chain) {
            int v = sign_at_infinity(s, negative);
            if (v == 0)
                continue;
            if (last != 0 && v != last)
                ++count;
            last = v;
        }
        return count;
    };
    return variations(true) - variations(false);
}

} // namespace detail

/// Monic gcd. gcd(p, 0) = monic(p); both zero is rejected.
inline Polynomial poly_gcd(const Polynomial& p, const Polynomial& q)
{
    if (p.is_zero() && q.is_zero())
        throw std::invalid_argument("gcd of two zero polynomials is undefined");
    if (p.is_zero())
        return monic(q);
    if (q.is_zero())
        return monic(p);
    auto g = detail::int_gcd(detail::to_primitive(p), detail::to_primitive(q));
    return monic(detail::to_rational(g));
}

/// Yun's algorithm over Q.
inline SquareFreeDecomposition squarefree_decomposition(const Polynomial& p)
{
    if (p.is_zero())
        throw std::invalid_argument("square-free decomposition of the zero polynomial");
    SquareFreeDecomposition out;
    out.content = p.leading();
    Polynomial f = monic(p);
    if (f.degree() == 0)
        return out;
    Polynomial fp = derivative(f);
    Polynomial a = poly_gcd(f, fp);
    Polynomial b = exact_divide(f, a);
    Polynomial c = exact_divide(fp, a);
    Polynomial d = c - derivative(b);
    unsigned i = 1;
    while (b.degree() > 0) {
        Polynomial ai = poly_gcd(b, d);
        if (ai.degree() > 0)
            out.parts.push_back({ai, i});
        b = exact_divide(b, ai);
        c = exact_divide(d, ai);
        d = c - derivative(b);
        ++i;
    }
    return out;
}

/// Distinct real roots of a nonzero square-free polynomial.
inline int sturm_distinct_real_roots(const Polynomial& p)
{
    if (p.is_zero())
        throw std::invalid_argument("sturm count of the zero polynomial");
    if (p.degree() == 0)
        return 0;
    auto count = detail::sturm_count(detail::to_primitive(p));
    if (!count)
        throw std::invalid_argument("sturm count requires a square-free polynomial");
    return *count;
}

/// Exact decision: are all complex zeros of p real? The zero polynomial
/// and nonzero constants count as real-rooted.
inline RootednessVerdict is_real_rooted(const Polynomial& p)
{
    RootednessVerdict v;
    v.degree = p.degree();
    if (p.degree() <= 0)
        return v;
    if (p.degree() == 1) {
        v.real_count_with_multiplicity = 1;
        return v;
    }
    auto count = detail::sturm_count(detail::to_primitive(p));
    if (!count) {
        auto sf = squarefree_decomposition(p);
        count = 0;
        for (const auto& part : sf.parts)
            *count += static_cast<int>(part.multiplicity) * sturm_distinct_real_roots(part.factor);
    }
    v.real_count_with_multiplicity = *count;
    v.all_real = (*count == p.degree());
    return v;
}

/// b^2 - 4ac for a quadratic ax^2 + bx + c.
inline Rational discriminant_quadratic(const Polynomial& p)
{
    if (p.degree() != 2)
        throw std::invalid_argument("discriminant_quadratic needs a degree-2 polynomial");
    return p.coeff(1) * p.coeff(1) - 4 * p.coeff(2) * p.coeff(0);
}

} // namespace lagms

#endif // LAGMS_REALROOT_HPP
