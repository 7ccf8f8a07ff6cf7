#ifndef LAGMS_CONJECTURE_HPP
#define LAGMS_CONJECTURE_HPP

#include "lagms/falsify.hpp"
#include "lagms/parallel.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace lagms {

// Quadratic sequences k^2 + a k + b at alpha = 0. The conjectured region
// -1 <= a <= 3, max{0, a-1} <= b <= (1+a)^2/8 is geometry only: it labels
// points and never yields a positive verdict.

enum class ConjectureSide { inside, boundary, outside };

inline const char* to_string(ConjectureSide s)
{
    switch (s) {
    case ConjectureSide::inside:
        return "INSIDE";
    case ConjectureSide::boundary:
        return "BOUNDARY";
    case ConjectureSide::outside:
        return "OUTSIDE";
    }
    return "?";
}

inline Rational conjecture_upper_b(const Rational& a)
{
    return (1 + a) * (1 + a) / 8;
}

inline Rational conjecture_lower_b(const Rational& a)
{
    return a - 1 > 0 ? Rational(a - 1) : Rational(0);
}

inline ConjectureSide conjecture_side(const Rational& a, const Rational& b)
{
    const Rational lower = conjecture_lower_b(a);
    const Rational upper = conjecture_upper_b(a);
    if (a < -1 || a > 3 || b < lower || b > upper)
        return ConjectureSide::outside;
    if (a == -1 || a == 3 || b == lower || b == upper)
        return ConjectureSide::boundary;
    return ConjectureSide::inside;
}

struct NecessaryRegionVerdict {
    bool excluded;         // a stated bound is violated, so NOT_MS
    std::string citation;  // name of the violated bound
};

/// a >= -1, 0 <= b <= (a+1)^2/4, a <= 4 and a - 1 <= b.
inline NecessaryRegionVerdict necessary_region(const Rational& a, const Rational& b)
{
    if (auto bound = quadratic_violated_bound(a, b))
        return {true, *bound};
    return {false, ""};
}

enum class RegionStatus { outside_necessary, falsified, surviving, theorem_is_ms };

inline const char* to_string(RegionStatus s)
{
    switch (s) {
    case RegionStatus::outside_necessary:
        return "OUTSIDE_NECESSARY";
    case RegionStatus::falsified:
        return "FALSIFIED";
    case RegionStatus::surviving:
        return "SURVIVING";
    case RegionStatus::theorem_is_ms:
        return "THEOREM_IS_MS";
    }
    return "?";
}

inline constexpr const char* kKnownLineCitation = "line-b=a-1";

struct RegionClassification {
    Rational a;
    Rational b;
    RegionStatus status;
    std::string detail;  // violated bound, known-line citation, or witness degree
    ConjectureSide side;
    unsigned budget;
    std::optional<Witness> witness;
};

struct ScanGrid {
    Rational a_min{-2};
    Rational a_max{5};
    Rational b_min{-1};
    Rational b_max{5};
    Rational step{1, 4};
    unsigned degree = 10;
    std::uint64_t seed = 1;
};

inline RegionClassification classify_point(const Rational& a, const Rational& b, unsigned budget,
                                           std::uint64_t seed)
{
    RegionClassification out{a, b, RegionStatus::surviving, "", conjecture_side(a, b), budget, std::nullopt};
    if (auto nec = necessary_region(a, b); nec.excluded) {
        out.status = RegionStatus::outside_necessary;
        out.detail = nec.citation;
        return out;
    }
    if (quadratic_on_known_line(a, b)) {
        out.status = RegionStatus::theorem_is_ms;
        out.detail = kKnownLineCitation;
        return out;
    }
    SearchConfig config;
    config.max_degree = budget;
    config.random_seed = seed;
    const LaguerreParams params(0);
    if (auto w = search(SequenceSpec::quadratic(a, b), params, config)) {
        out.status = RegionStatus::falsified;
        out.detail = std::to_string(w->input.degree());
        out.witness = std::move(w);
    }
    return out;
}

/// Every grid point, ordered by (a, b). Points are independent and may run
/// in parallel; the output order does not depend on scheduling.
inline std::vector<RegionClassification> scan(const ScanGrid& grid, unsigned threads = thread_budget())
{
    if (grid.step <= 0)
        throw std::invalid_argument("scan step must be positive");
    std::vector<std::pair<Rational, Rational>> points;
    for (Rational a = grid.a_min; a <= grid.a_max; a += grid.step)
        for (Rational b = grid.b_min; b <= grid.b_max; b += grid.step)
            points.emplace_back(a, b);
    return ordered_parallel_map(
        points.size(),
        [&](std::size_t i) { return classify_point(points[i].first, points[i].second, grid.degree, grid.seed); },
        threads);
}

inline constexpr const char* kScanCsvHeader = "a,b,status,citation_or_witness_degree,conjecture_side,N";

inline void emit_csv(const std::vector<RegionClassification>& results, std::ostream& os)
{
    os << kScanCsvHeader << '\n';
    for (const auto& r : results)
        os << r.a.get_str() << ',' << r.b.get_str() << ',' << to_string(r.status) << ',' << r.detail << ','
           << to_string(r.side) << ',' << r.budget << '\n';
    if (!os)
        throw std::runtime_error("failed writing scan CSV");
}

inline void write_csv(const std::vector<RegionClassification>& results, const std::string& path)
{
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw std::runtime_error("cannot open " + path + " for writing");
    emit_csv(results, f);
}

/// Closed polyline around the conjectured region: the upper curve from
/// a = -1 to a = 3, then the lower boundary back. Rows are "a,b".
inline void emit_boundary_polyline(std::ostream& os, const Rational& step = Rational(1, 8))
{
    os << "a,b\n";
    std::vector<Rational> as;
    for (Rational a = -1; a <= 3; a += step)
        as.push_back(a);
    if (as.back() != 3)
        as.emplace_back(3);
    for (const auto& a : as)
        os << a.get_str() << ',' << conjecture_upper_b(a).get_str() << '\n';
    for (auto it = as.rbegin(); it != as.rend(); ++it)
        os << it->get_str() << ',' << conjecture_lower_b(*it).get_str() << '\n';
    if (!os)
        throw std::runtime_error("failed writing boundary polyline");
}

} // namespace lagms

#endif // LAGMS_CONJECTURE_HPP
