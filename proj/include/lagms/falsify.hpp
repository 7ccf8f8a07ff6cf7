#ifndef LAGMS_FALSIFY_HPP
#define LAGMS_FALSIFY_HPP

#include "lagms/bivariate.hpp"
#include "lagms/diffop.hpp"
#include "lagms/rootfind.hpp"
#include "lagms/sequences.hpp"

#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lagms {

// ---------------------------------------------------------------------------
// Closed-form discriminants.

/// Discriminant of the image of (x+b)^2 under {r^k}:
/// -4 r^2 (r-1) ((2+alpha)(1-r) + 2b).
inline Rational discriminant_geometric(const Rational& r, const LaguerreParams& params, const Rational& b)
{
    const Rational& a = params.alpha();
    return -4 * r * r * (r - 1) * ((2 + a) * (1 - r) + 2 * b);
}

/// Discriminant of the quadratic cofactor of T[(x+n)^n] for
/// T = a + (x-alpha-1)D - xD^2: n^2 [alpha^2 + 4a - 4n(a - (alpha+1))].
inline Rational discriminant_linear_power(const Rational& a, const LaguerreParams& params, unsigned n)
{
    if (n < 2)
        throw std::invalid_argument("discriminant_linear_power needs n >= 2");
    const Rational& al = params.alpha();
    const Rational nn(static_cast<unsigned long>(n));
    return nn * nn * (al * al + 4 * a - 4 * nn * (a - (al + 1)));
}

// ---------------------------------------------------------------------------
// Witnesses.

enum class Family { square, power, jensen, random_product, laguerre_pair };

inline const char* to_string(Family f)
{
    switch (f) {
    case Family::square:
        return "square";
    case Family::power:
        return "power";
    case Family::jensen:
        return "jensen";
    case Family::random_product:
        return "random_product";
    case Family::laguerre_pair:
        return "laguerre_pair";
    }
    return "?";
}

/// A real-rooted input whose image has non-real zeros.
struct Witness {
    Polynomial input;
    RootednessVerdict input_verdict;
    Polynomial image;
    RootednessVerdict image_verdict;
    Family family;
    std::vector<std::pair<std::string, std::string>> family_params;
};

/// Re-checks both verdicts with the exact oracle, and optionally that the
/// image really is the operator's output.
inline bool revalidate(const Witness& w)
{
    return is_real_rooted(w.input).all_real && !is_real_rooted(w.image).all_real;
}

inline bool revalidate(const Witness& w, const SequenceSpec& spec, const LaguerreParams& params)
{
    return revalidate(w) && apply_diagonal(spec, params, w.input) == w.image;
}

/// Offsets 0, 1/2, -1/2, 1, -1, ..., 12, -12.
inline std::vector<Rational> default_b_values()
{
    std::vector<Rational> out{Rational(0)};
    for (int j = 1; j <= 24; ++j) {
        out.emplace_back(j, 2);
        out.emplace_back(-j, 2);
    }
    for (auto& v : out)
        v.canonicalize();
    return out;
}

struct SearchConfig {
    unsigned max_degree = 12;
    std::vector<Rational> b_values = default_b_values();
    std::vector<unsigned> n_values;  // empty: 2..max_degree
    std::uint64_t random_seed = 1;
    unsigned random_trials = 16;     // per degree
};

namespace detail {

inline std::mt19937_64 degree_stream(std::uint64_t seed, unsigned degree)
{
    return std::mt19937_64(seed * 0x9E3779B97F4A7C15ULL + degree);
}

inline std::optional<Witness> test_candidate(const DiagonalOperator& op, Polynomial input, Family family,
                                             std::vector<std::pair<std::string, std::string>> params)
{
    Polynomial image = op(input);
    auto image_verdict = is_real_rooted(image);
    if (image_verdict.all_real)
        return std::nullopt;
    auto input_verdict = is_real_rooted(input);
    if (!input_verdict.all_real)
        throw std::logic_error("search family produced a non-real-rooted input");
    return Witness{std::move(input), input_verdict, std::move(image), image_verdict, family, std::move(params)};
}

} // namespace detail

/// Roots j/2, j in [-12, 12], for one seeded trial of the given degree.
/// Trials for a degree depend only on (seed, degree, trial), so a larger
/// degree budget repeats every smaller budget's candidates.
inline std::vector<Rational> random_product_roots(std::uint64_t seed, unsigned degree, unsigned trial)
{
    auto rng = detail::degree_stream(seed, degree);
    rng.discard(static_cast<unsigned long long>(trial) * degree);
    std::vector<Rational> roots;
    for (unsigned i = 0; i < degree; ++i) {
        const long j = static_cast<long>(rng() % 25) - 12;
        Rational r(j, 2);
        r.canonicalize();
        roots.push_back(r);
    }
    return roots;
}

/// Hunts a witness in the fixed family order square, power, jensen,
/// random_product and returns the first one found. Absence of a witness
/// proves nothing.
inline std::optional<Witness> search(const SequenceSpec& spec, const LaguerreParams& params,
                                     const SearchConfig& config)
{
    if (config.max_degree < 1)
        return std::nullopt;
    const DiagonalOperator op(spec, params, config.max_degree);

    if (config.max_degree >= 2) {
        for (const auto& b : config.b_values) {
            auto w = detail::test_candidate(op, pow(Polynomial::linear(b), 2), Family::square,
                                            {{"b", b.get_str()}});
            if (w)
                return w;
        }
    }

    std::vector<unsigned> ns = config.n_values;
    if (ns.empty())
        for (unsigned n = 2; n <= config.max_degree; ++n)
            ns.push_back(n);
    for (unsigned n : ns) {
        if (n < 1 || n > config.max_degree)
            continue;
        auto w = detail::test_candidate(op, pow(Polynomial::linear(Rational(n)), n), Family::power,
                                        {{"n", std::to_string(n)}});
        if (w)
            return w;
    }

    for (unsigned n = 1; n <= config.max_degree; ++n) {
        auto w = detail::test_candidate(op, pow(Polynomial::linear(1), n), Family::jensen,
                                        {{"n", std::to_string(n)}});
        if (w)
            return w;
    }

    for (unsigned d = 2; d <= config.max_degree; ++d) {
        for (unsigned t = 0; t < config.random_trials; ++t) {
            auto roots = random_product_roots(config.random_seed, d, t);
            Polynomial p = Polynomial::constant(1);
            std::string text;
            for (const auto& r : roots) {
                p *= Polynomial::linear(-r);
                text += (text.empty() ? "" : ";") + r.get_str();
            }
            auto w = detail::test_candidate(op, std::move(p), Family::random_product,
                                            {{"degree", std::to_string(d)},
                                             {"trial", std::to_string(t)},
                                             {"seed", std::to_string(config.random_seed)},
                                             {"roots", text}});
            if (w)
                return w;
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// max(E_n) for f_{n,b} = L_n + b L_{n-2}.

inline bool in_bmax_set(unsigned n, const LaguerreBasis& basis, const Rational& b)
{
    return is_real_rooted(basis[n] + basis[n - 2] * b).all_real;
}

struct BmaxResult {
    Rational lo;  // in E_n
    Rational hi;  // not in E_n
    bool validated = false;
    std::optional<Rational> member_above;  // a member of E_n found above hi
};

/// Bisection on the exact membership predicate between 0 (in E_n) and
/// (n+alpha)/2 + 1 (outside: the (n-2)nd derivative
/// x^2/2 - (n+alpha)x + (n+alpha)(n+alpha-1)/2 + b has discriminant
/// (n+alpha) - 2b < 0 there). The optional scan steps by tol from hi to
/// the starting bound and records any member of E_n it meets.
inline BmaxResult compute_bmax(unsigned n, const LaguerreParams& params, const Rational& tol, bool validate = true)
{
    if (n < 2)
        throw std::invalid_argument("compute_bmax needs n >= 2");
    if (tol <= 0)
        throw std::invalid_argument("compute_bmax needs a positive tolerance");
    const LaguerreBasis basis(params, n);
    const Rational start_hi = (Rational(n) + params.alpha()) / 2 + 1;
    if (!in_bmax_set(n, basis, 0) || in_bmax_set(n, basis, start_hi))
        throw std::logic_error("bisection bracket for max(E_n) is invalid");
    BmaxResult r{Rational(0), start_hi, false, std::nullopt};
    while (r.hi - r.lo > tol) {
        Rational mid = (r.lo + r.hi) / 2;
        if (in_bmax_set(n, basis, mid))
            r.lo = mid;
        else
            r.hi = mid;
    }
    if (validate) {
        for (Rational b = r.hi; b <= start_hi; b += tol) {
            if (in_bmax_set(n, basis, b)) {
                r.member_above = b;
                break;
            }
        }
        r.validated = !r.member_above.has_value();
    }
    return r;
}

/// For each n with gamma_{n-2} > gamma_n > 0, tries L_n + beta L_{n-2}
/// with beta just inside E_n; the image scales beta by gamma_{n-2}/gamma_n
/// and leaves E_n once the enclosure is tight enough.
inline std::optional<Witness> search_laguerre_pair(const SequenceSpec& spec, const LaguerreParams& params,
                                                   unsigned max_n)
{
    if (max_n < 2)
        return std::nullopt;
    const DiagonalOperator op(spec, params, max_n);
    const auto g = sequence_values(spec, max_n);
    for (unsigned n = 2; n <= max_n; ++n) {
        if (g[n] <= 0 || g[n - 2] <= g[n])
            continue;
        Rational tol(1, 4);
        for (int refine = 0; refine < 16; ++refine, tol /= 4) {
            auto enc = compute_bmax(n, params, tol, false);
            Polynomial input = op.basis()[n] + op.basis()[n - 2] * enc.lo;
            auto w = detail::test_candidate(op, std::move(input), Family::laguerre_pair,
                                            {{"n", std::to_string(n)}, {"b", enc.lo.get_str()}});
            if (w)
                return w;
        }
    }
    return std::nullopt;
}

/// Non-decreasing positive prefix, or a witness showing the sequence is not
/// a multiplier sequence. Returns the witness when one is needed and found.
struct MonotonicityCheck {
    bool nondecreasing = true;
    std::optional<Witness> witness;

    bool consistent() const
    {
        return nondecreasing || witness.has_value();
    }
};

inline MonotonicityCheck monotonicity_check(const SequenceSpec& spec, const LaguerreParams& params, unsigned n_max,
                                            SearchConfig config = {})
{
    const auto g = sequence_values(spec, n_max);
    for (const auto& v : g)
        if (v <= 0)
            throw std::invalid_argument("monotonicity check needs a positive sequence prefix");
    MonotonicityCheck out;
    for (std::size_t k = 0; k + 1 < g.size(); ++k)
        if (g[k] > g[k + 1])
            out.nondecreasing = false;
    if (out.nondecreasing)
        return out;
    out.witness = search_laguerre_pair(spec, params, n_max);
    if (!out.witness) {
        config.max_degree = n_max;
        out.witness = search(spec, params, config);
    }
    return out;
}

inline bool verify_monotonicity_consequence(const SequenceSpec& spec, const LaguerreParams& params, unsigned n_max,
                                            const SearchConfig& config = {})
{
    return monotonicity_check(spec, params, n_max, config).consistent();
}

// ---------------------------------------------------------------------------
// Floating-point stability sampling. Falsification only.

struct StabilityPlan {
    double re_min = -5.0;
    double re_max = 5.0;
    int re_count = 10;
    double im_max = 5.0;  // Im w runs over im_max * j / im_count, j = 1..im_count
    int im_count = 10;
    double residual_tol = 1e-9;
    double im_margin = 1e-6;
};

enum class StabilityVerdict { falsified, no_violation_found };

inline const char* to_string(StabilityVerdict v)
{
    return v == StabilityVerdict::falsified ? "FALSIFIED" : "NO_VIOLATION_FOUND";
}

struct StabilityViolation {
    Complex w;
    Complex x;
    double residual;
};

/// NO_VIOLATION_FOUND is not a certificate of stability.
struct StabilityReport {
    int sampled_w = 0;
    double min_modulus_seen = std::numeric_limits<double>::infinity();
    std::optional<StabilityViolation> violation;
    StabilityVerdict verdict = StabilityVerdict::no_violation_found;
};

inline std::vector<double> linspace(double lo, double hi, int count)
{
    std::vector<double> out;
    if (count == 1)
        return {lo};
    for (int i = 0; i < count; ++i)
        out.push_back(lo + (hi - lo) * i / (count - 1));
    return out;
}

/// Samples w in the upper half-plane, solves G(., w) = 0 in x and reports
/// the first zero with Im x above the margin. min_modulus_seen tracks the
/// smallest |G(x, w)| over a probe grid of upper-half-plane x values.
inline StabilityReport bb_stability_sample(const BivariatePolynomial& g, const StabilityPlan& plan = {})
{
    if (g.is_zero())
        throw std::invalid_argument("stability sampling needs a nonzero symbol");
    StabilityReport report;
    const auto re = linspace(plan.re_min, plan.re_max, plan.re_count);
    std::vector<double> im;
    for (int j = 1; j <= plan.im_count; ++j)
        im.push_back(plan.im_max * j / plan.im_count);

    for (double wi : im) {
        for (double wr : re) {
            const Complex w(wr, wi);
            ++report.sampled_w;
            const auto c = g.at_y_complex(w);
            for (double xi : im)
                for (double xr : re)
                    report.min_modulus_seen = std::min(report.min_modulus_seen, std::abs(horner(c, Complex(xr, xi))));
            if (report.violation)
                continue;
            if (g.x_degree() == 0) {
                double scale = 0.0;
                for (int j = 0; j <= g.y_degree(); ++j)
                    scale += std::abs(g.at(0, j).get_d()) * std::pow(std::abs(w), j);
                const double res = scale == 0.0 ? 0.0 : std::abs(c[0]) / scale;
                if (res < plan.residual_tol)
                    report.violation = StabilityViolation{w, Complex(0.0, 1.0), res};
                continue;
            }
            for (const auto& x : polynomial_roots(c)) {
                const double res = relative_residual(c, x);
                if (x.imag() > plan.im_margin && res < plan.residual_tol) {
                    report.violation = StabilityViolation{w, x, res};
                    break;
                }
            }
        }
    }
    if (report.violation)
        report.verdict = StabilityVerdict::falsified;
    return report;
}

} // namespace lagms

#endif // LAGMS_FALSIFY_HPP
