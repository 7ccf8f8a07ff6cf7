#ifndef LAGMS_SEQUENCES_HPP
#define LAGMS_SEQUENCES_HPP

#include "lagms/laguerre.hpp"
#include "lagms/realroot.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace lagms {

struct TrivialSeq {
    unsigned index;
    Rational first;
    Rational second;
};
struct GeometricSeq {
    Rational ratio;
};
struct LinearSeq {
    Rational shift;
};
struct FallingFactorialSeq {
    unsigned order;
};
struct QuadraticSeq {
    Rational a;
    Rational b;
};
enum class ExplicitTail { zero, unspecified };
struct ExplicitSeq {
    std::vector<Rational> values;
    ExplicitTail tail;
};

/// Thrown when an explicit sequence without a zero tail is asked for a term
/// beyond its stated prefix.
class InsufficientPrefix : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// A candidate sequence gamma_0, gamma_1, ... described symbolically.
class SequenceSpec {
public:
    using Variant =
        std::variant<TrivialSeq, GeometricSeq, LinearSeq, FallingFactorialSeq, QuadraticSeq, ExplicitSeq>;

    SequenceSpec(Variant v) : v_(std::move(v))
    {
        if (auto* f = std::get_if<FallingFactorialSeq>(&v_); f && f->order == 0)
            throw std::invalid_argument("falling factorial sequence needs order >= 1");
    }

    static SequenceSpec trivial(unsigned index, Rational first, Rational second)
    {
        return SequenceSpec(TrivialSeq{index, std::move(first), std::move(second)});
    }
    static SequenceSpec geometric(Rational r)
    {
        return SequenceSpec(GeometricSeq{std::move(r)});
    }
    static SequenceSpec linear(Rational a)
    {
        return SequenceSpec(LinearSeq{std::move(a)});
    }
    static SequenceSpec falling_factorial(unsigned n)
    {
        return SequenceSpec(FallingFactorialSeq{n});
    }
    static SequenceSpec quadratic(Rational a, Rational b)
    {
        return SequenceSpec(QuadraticSeq{std::move(a), std::move(b)});
    }
    static SequenceSpec explicit_values(std::vector<Rational> values, ExplicitTail tail = ExplicitTail::zero)
    {
        return SequenceSpec(ExplicitSeq{std::move(values), tail});
    }
    static SequenceSpec all_ones()
    {
        return geometric(1);
    }

    const Variant& variant() const
    {
        return v_;
    }

    /// Largest index with a defined value, or nullopt if unbounded.
    std::optional<std::size_t> defined_through() const
    {
        if (auto* e = std::get_if<ExplicitSeq>(&v_); e && e->tail == ExplicitTail::unspecified) {
            if (e->values.empty())
                return std::nullopt;
            return e->values.size() - 1;
        }
        return std::nullopt;
    }

    bool covers(std::size_t n) const
    {
        if (auto* e = std::get_if<ExplicitSeq>(&v_); e && e->tail == ExplicitTail::unspecified)
            return n < e->values.size();
        return true;
    }

    Rational value(std::size_t k) const
    {
        return std::visit([k](const auto& s) { return term(s, k); }, v_);
    }

    std::string describe() const;

private:
    static Rational term(const TrivialSeq& s, std::size_t k)
    {
        if (k == s.index)
            return s.first;
        if (k == s.index + 1)
            return s.second;
        return 0;
    }
    static Rational term(const GeometricSeq& s, std::size_t k)
    {
        return power(s.ratio, static_cast<unsigned>(k));
    }
    static Rational term(const LinearSeq& s, std::size_t k)
    {
        return Rational(static_cast<unsigned long>(k)) + s.shift;
    }
    static Rational term(const FallingFactorialSeq& s, std::size_t k)
    {
        Rational out(1);
        for (unsigned j = 0; j < s.order; ++j)
            out *= static_cast<long>(k) - static_cast<long>(j);
        return out;
    }
    static Rational term(const QuadraticSeq& s, std::size_t k)
    {
        Rational kk(static_cast<unsigned long>(k));
        return kk * kk + s.a * kk + s.b;
    }
    static Rational term(const ExplicitSeq& s, std::size_t k)
    {
        if (k < s.values.size())
            return s.values[k];
        if (s.tail == ExplicitTail::zero)
            return 0;
        throw InsufficientPrefix("explicit sequence has no term " + std::to_string(k));
    }

    Variant v_;
};

inline std::string SequenceSpec::describe() const
{
    struct Visitor {
        std::string operator()(const TrivialSeq& s) const
        {
            return "trivial(n=" + std::to_string(s.index) + ", " + s.first.get_str() + ", " +
                   s.second.get_str() + ")";
        }
        std::string operator()(const GeometricSeq& s) const
        {
            return "geometric(r=" + s.ratio.get_str() + ")";
        }
        std::string operator()(const LinearSeq& s) const
        {
            return "linear(a=" + s.shift.get_str() + ")";
        }
        std::string operator()(const FallingFactorialSeq& s) const
        {
            return "falling_factorial(n=" + std::to_string(s.order) + ")";
        }
        std::string operator()(const QuadraticSeq& s) const
        {
            return "quadratic(a=" + s.a.get_str() + ", b=" + s.b.get_str() + ")";
        }
        std::string operator()(const ExplicitSeq& s) const
        {
            std::string out = "explicit[";
            for (std::size_t i = 0; i < s.values.size(); ++i)
                out += (i ? "," : "") + s.values[i].get_str();
            return out + (s.tail == ExplicitTail::zero ? "], tail zero" : "], tail unspecified");
        }
    };
    return std::visit(Visitor{}, v_);
}

/// gamma_0 .. gamma_n.
inline std::vector<Rational> sequence_values(const SequenceSpec& spec, std::size_t n)
{
    if (!spec.covers(n))
        throw InsufficientPrefix("sequence " + spec.describe() + " is not defined through index " +
                                 std::to_string(n));
    std::vector<Rational> out;
    out.reserve(n + 1);
    for (std::size_t k = 0; k <= n; ++k)
        out.push_back(spec.value(k));
    return out;
}

/// T_L restricted to polynomials of degree <= max_degree: the Laguerre
/// basis and the sequence prefix are computed once.
class DiagonalOperator {
public:
    DiagonalOperator(const SequenceSpec& spec, const LaguerreParams& params, unsigned max_degree)
        : basis_(params, max_degree), gammas_(sequence_values(spec, max_degree))
    {
    }

    const LaguerreBasis& basis() const
    {
        return basis_;
    }

    Polynomial operator()(const Polynomial& p) const
    {
        if (p.degree() > static_cast<int>(basis_.max_degree()))
            throw InsufficientPrefix("polynomial degree exceeds the operator's prepared range");
        auto c = to_laguerre_basis(p, basis_).coefficients();
        for (std::size_t k = 0; k < c.size(); ++k)
            c[k] *= gammas_[k];
        return from_laguerre_basis(LaguerreCoeffs(basis_.params(), std::move(c)), basis_);
    }

private:
    LaguerreBasis basis_;
    std::vector<Rational> gammas_;
};

/// T_L[p]: scale the k-th Laguerre coefficient by gamma_k.
inline Polynomial apply_diagonal(const SequenceSpec& spec, const LaguerreParams& params, const Polynomial& p)
{
    if (p.is_zero())
        return {};
    return DiagonalOperator(spec, params, static_cast<unsigned>(p.degree()))(p);
}

/// Classical action: T[x^k] = gamma_k x^k.
inline Polynomial apply_classical(const SequenceSpec& spec, const Polynomial& p)
{
    if (p.is_zero())
        return {};
    auto g = sequence_values(spec, static_cast<std::size_t>(p.degree()));
    std::vector<Rational> c = p.coefficients();
    for (std::size_t k = 0; k < c.size(); ++k)
        c[k] *= g[k];
    return Polynomial(std::move(c));
}

/// Jensen polynomial sum_k binom(n,k) gamma_k x^k.
inline Polynomial jensen_polynomial(const std::vector<Rational>& gammas, unsigned n)
{
    std::vector<Rational> c(n + 1);
    for (unsigned k = 0; k <= n; ++k)
        c[k] = binomial(n, k) * gammas[k];
    return Polynomial(std::move(c));
}

// ---------------------------------------------------------------------------
// Necessary conditions inherited from classical multiplier sequences.

struct PolyaSchurResult {
    bool ok = true;
    unsigned checked_through = 0;
    std::optional<unsigned> first_failure;
    Polynomial witness;  // the failing Jensen polynomial
};

struct IndexResult {
    bool ok = true;
    std::optional<std::size_t> first_failure;
    std::string detail;
};

struct NecessaryReport {
    PolyaSchurResult polya_schur;
    IndexResult turan;
    IndexResult sign_pattern;
    IndexResult zero_pattern;

    bool passed() const
    {
        return polya_schur.ok && turan.ok && sign_pattern.ok && zero_pattern.ok;
    }
};

/// Jensen polynomials for n = 0..N must all be real-rooted.
inline PolyaSchurResult polya_schur_test(const SequenceSpec& spec, unsigned n_max)
{
    const auto g = sequence_values(spec, n_max);
    PolyaSchurResult out;
    for (unsigned n = 0; n <= n_max; ++n) {
        Polynomial jp = jensen_polynomial(g, n);
        out.checked_through = n;
        if (!is_real_rooted(jp).all_real) {
            out.ok = false;
            out.first_failure = n;
            out.witness = std::move(jp);
            return out;
        }
    }
    return out;
}

/// gamma_k^2 - gamma_{k-1} gamma_{k+1} >= 0 for k = 1..N.
inline IndexResult turan_test(const SequenceSpec& spec, unsigned n_max)
{
    const auto g = sequence_values(spec, n_max + 1);
    for (std::size_t k = 1; k <= n_max; ++k) {
        Rational t = g[k] * g[k] - g[k - 1] * g[k + 1];
        if (t < 0)
            return {false, k, "gamma_k^2 - gamma_{k-1} gamma_{k+1} = " + t.get_str()};
    }
    return {};
}

/// Nonzero terms all share one sign, or all alternate with the index.
inline IndexResult sign_pattern_test(const SequenceSpec& spec, unsigned n_max)
{
    const auto g = sequence_values(spec, n_max);
    int same = 0;
    int alternating = 0;
    bool same_ok = true;
    bool alt_ok = true;
    for (std::size_t k = 0; k < g.size(); ++k) {
        const int s = sgn(g[k]);
        if (s == 0)
            continue;
        const int a = (k % 2 == 0) ? s : -s;
        if (same == 0) {
            same = s;
            alternating = a;
            continue;
        }
        same_ok = same_ok && s == same;
        alt_ok = alt_ok && a == alternating;
        if (!same_ok && !alt_ok)
            return {false, k, "terms neither share a sign nor alternate"};
    }
    return {};
}

/// Once a nonzero term is followed by a zero, every later term vanishes;
/// and a support that ends must have at most two terms (anything longer is
/// a non-trivial sequence, whose terms are nonzero from their first
/// nonzero index on).
inline IndexResult zero_pattern_test(const SequenceSpec& spec, unsigned n_max)
{
    const auto g = sequence_values(spec, n_max);
    std::optional<std::size_t> first_nonzero;
    std::optional<std::size_t> first_gap;
    for (std::size_t k = 0; k < g.size(); ++k) {
        if (g[k] != 0) {
            if (first_gap)
                return {false, k, "nonzero term after a zero following the support"};
            if (!first_nonzero)
                first_nonzero = k;
        } else if (first_nonzero && !first_gap) {
            first_gap = k;
        }
    }
    if (first_nonzero && first_gap && *first_gap - *first_nonzero > 2)
        return {false, *first_gap, "support of length > 2 terminates"};
    return {};
}

inline NecessaryReport necessary_battery(const SequenceSpec& spec, unsigned n_max)
{
    NecessaryReport r;
    r.polya_schur = polya_schur_test(spec, n_max);
    r.turan = turan_test(spec, n_max);
    r.sign_pattern = sign_pattern_test(spec, n_max);
    r.zero_pattern = zero_pattern_test(spec, n_max);
    return r;
}

// ---------------------------------------------------------------------------
// Closed-form verdicts for the characterized families.

enum class MsVerdict { is_ms, not_ms, unknown };

inline const char* to_string(MsVerdict v)
{
    switch (v) {
    case MsVerdict::is_ms:
        return "IS_MS";
    case MsVerdict::not_ms:
        return "NOT_MS";
    case MsVerdict::unknown:
        return "UNKNOWN";
    }
    return "?";
}

struct Classification {
    MsVerdict verdict;
    std::string citation;
};

/// The quadratic bounds known at alpha = 0, in the order they are tested.
/// Returns the name of the first violated bound.
inline std::optional<std::string> quadratic_violated_bound(const Rational& a, const Rational& b)
{
    if (a < -1)
        return "a>=-1";
    if (b < 0)
        return "b>=0";
    if (b > (a + 1) * (a + 1) / 4)
        return "b<=(a+1)^2/4";
    if (a > 4)
        return "a<=4";
    if (b < a - 1)
        return "b>=a-1";
    return std::nullopt;
}

/// b = a - 1 with 1 <= a <= 3 is a known multiplier sequence at alpha = 0.
inline bool quadratic_on_known_line(const Rational& a, const Rational& b)
{
    return b == a - 1 && a >= 1 && a <= 3;
}

/// Support of at most two consecutive terms and nothing after it.
inline bool is_trivial_explicit(const ExplicitSeq& e)
{
    if (e.tail != ExplicitTail::zero)
        return false;
    std::size_t first = e.values.size(), last = 0, count = 0;
    for (std::size_t k = 0; k < e.values.size(); ++k)
        if (e.values[k] != 0) {
            first = std::min(first, k);
            last = k;
            ++count;
        }
    return count == 0 || last - first <= 1;
}

/// Battery depth used when a closed form is silent.
inline constexpr unsigned kClassifyBatteryDepth = 10;

/// Theorem-backed verdicts for the families with known characterizations.
/// Other specs fall through to the necessary battery and the monotonicity
/// requirement for positive sequences; if both pass, the answer is UNKNOWN.
inline Classification classify_known(const SequenceSpec& spec, const LaguerreParams& params)
{
    struct Visitor {
        const LaguerreParams& params;
        std::optional<Classification> operator()(const TrivialSeq&) const
        {
            return Classification{MsVerdict::is_ms, "trivial: two consecutive nonzero terms"};
        }
        std::optional<Classification> operator()(const GeometricSeq& s) const
        {
            if (s.ratio == 1)
                return Classification{MsVerdict::is_ms, "geometric: r=1"};
            if (s.ratio == 0)
                return Classification{MsVerdict::is_ms, "trivial: geometric r=0 is (1,0,0,...)"};
            return Classification{MsVerdict::not_ms, "geometric: only r=1"};
        }
        std::optional<Classification> operator()(const LinearSeq& s) const
        {
            if (s.shift >= 0 && s.shift <= params.alpha() + 1)
                return Classification{MsVerdict::is_ms, "linear: 0<=a<=alpha+1"};
            return Classification{MsVerdict::not_ms, "linear: 0<=a<=alpha+1"};
        }
        std::optional<Classification> operator()(const FallingFactorialSeq&) const
        {
            return Classification{MsVerdict::is_ms, "falling factorial"};
        }
        std::optional<Classification> operator()(const QuadraticSeq& s) const
        {
            if (params.alpha() != 0)
                return std::nullopt;
            if (auto bound = quadratic_violated_bound(s.a, s.b))
                return Classification{MsVerdict::not_ms, "quadratic: " + *bound};
            if (quadratic_on_known_line(s.a, s.b))
                return Classification{MsVerdict::is_ms, "quadratic: b=a-1, 1<=a<=3"};
            return Classification{MsVerdict::unknown, "quadratic: open region"};
        }
        std::optional<Classification> operator()(const ExplicitSeq& e) const
        {
            if (is_trivial_explicit(e))
                return Classification{MsVerdict::is_ms, "trivial: two consecutive nonzero terms"};
            return std::nullopt;
        }
    };
    if (auto c = std::visit(Visitor{params}, spec.variant()); c && c->verdict != MsVerdict::unknown)
        return *c;

    unsigned depth = kClassifyBatteryDepth;
    if (auto limit = spec.defined_through()) {
        if (*limit < 1)
            return {MsVerdict::unknown, "prefix too short"};
        depth = static_cast<unsigned>(*limit) - 1;
    }
    auto report = necessary_battery(spec, depth);
    if (!report.polya_schur.ok)
        return {MsVerdict::not_ms, "necessary: Jensen polynomial n=" +
                                       std::to_string(*report.polya_schur.first_failure)};
    if (!report.turan.ok)
        return {MsVerdict::not_ms, "necessary: Turan k=" + std::to_string(*report.turan.first_failure)};
    if (!report.sign_pattern.ok)
        return {MsVerdict::not_ms,
                "necessary: sign pattern k=" + std::to_string(*report.sign_pattern.first_failure)};
    if (!report.zero_pattern.ok)
        return {MsVerdict::not_ms,
                "necessary: zero pattern k=" + std::to_string(*report.zero_pattern.first_failure)};

    const auto g = sequence_values(spec, depth);
    bool positive = true;
    for (const auto& v : g)
        positive = positive && v > 0;
    if (positive)
        for (std::size_t k = 0; k + 1 < g.size(); ++k)
            if (g[k] > g[k + 1])
                return {MsVerdict::not_ms, "monotonicity: gamma_" + std::to_string(k) + " > gamma_" +
                                               std::to_string(k + 1)};
    if (std::holds_alternative<QuadraticSeq>(spec.variant()) && params.alpha() == 0)
        return {MsVerdict::unknown, "quadratic: open region"};
    return {MsVerdict::unknown, "no closed form applies"};
}

} // namespace lagms

#endif // LAGMS_SEQUENCES_HPP
