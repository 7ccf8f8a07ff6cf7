#include "lagms/conjecture.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace lagms;

namespace {

std::string csv_of(const std::vector<RegionClassification>& rows)
{
    std::ostringstream os;
    emit_csv(rows, os);
    return os.str();
}

} // namespace

TEST(NecessaryRegion, Examples)
{
    auto v = necessary_region(-2, 0);
    EXPECT_TRUE(v.excluded);
    EXPECT_EQ(v.citation, "a>=-1");
    v = necessary_region(1, 2);
    EXPECT_TRUE(v.excluded);
    EXPECT_EQ(v.citation, "b<=(a+1)^2/4");
    v = necessary_region(5, 4);
    EXPECT_TRUE(v.excluded);
    EXPECT_EQ(v.citation, "a<=4");
    EXPECT_EQ(necessary_region(0, -1).citation, "b>=0");
    EXPECT_EQ(necessary_region(3, Rational(3, 2)).citation, "b>=a-1");
    EXPECT_FALSE(necessary_region(2, 1).excluded);
}

TEST(ConjectureSide, Geometry)
{
    EXPECT_EQ(conjecture_side(2, 1), ConjectureSide::boundary);
    EXPECT_EQ(conjecture_side(0, Rational(1, 8)), ConjectureSide::boundary);
    EXPECT_EQ(conjecture_side(0, Rational(1, 16)), ConjectureSide::inside);
    EXPECT_EQ(conjecture_side(0, Rational(1, 4)), ConjectureSide::outside);
    EXPECT_EQ(conjecture_side(-1, 0), ConjectureSide::boundary);
    EXPECT_EQ(conjecture_side(Rational(-3, 2), 0), ConjectureSide::outside);
    EXPECT_EQ(conjecture_side(3, 2), ConjectureSide::boundary);
    EXPECT_EQ(conjecture_side(4, 3), ConjectureSide::outside);
}

TEST(ClassifyPoint, Examples)
{
    auto r = classify_point(2, 1, 10, 1);
    EXPECT_EQ(r.status, RegionStatus::theorem_is_ms);
    EXPECT_NE(r.side, ConjectureSide::outside);

    r = classify_point(Rational(-3, 2), 0, 10, 1);
    EXPECT_EQ(r.status, RegionStatus::outside_necessary);
    EXPECT_EQ(r.detail, "a>=-1");

    r = classify_point(0, Rational(1, 16), 10, 1);
    EXPECT_EQ(r.side, ConjectureSide::inside);
    EXPECT_EQ(r.status, RegionStatus::surviving);
}

TEST(ClassifyPoint, FalsifiedPointsCarryValidWitness)
{
    ScanGrid g;
    g.degree = 6;
    int falsified = 0;
    for (const auto& r : scan(g)) {
        if (r.status != RegionStatus::falsified)
            continue;
        ++falsified;
        ASSERT_TRUE(r.witness.has_value());
        EXPECT_TRUE(revalidate(*r.witness, SequenceSpec::quadratic(r.a, r.b), LaguerreParams(0)));
        EXPECT_EQ(r.detail, std::to_string(r.witness->input.degree()));
    }
    EXPECT_GT(falsified, 0);
}

TEST(Csv, Rows)
{
    EXPECT_EQ(csv_of({}), "a,b,status,citation_or_witness_degree,conjecture_side,N\n");
    const auto csv = csv_of({classify_point(2, 1, 10, 1), classify_point(-2, 0, 10, 1)});
    EXPECT_EQ(csv, "a,b,status,citation_or_witness_degree,conjecture_side,N\n"
                   "2,1,THEOREM_IS_MS,line-b=a-1,BOUNDARY,10\n"
                   "-2,0,OUTSIDE_NECESSARY,a>=-1,OUTSIDE,10\n");
}

TEST(Scan, SmallGridOrderingAndStatuses)
{
    ScanGrid g;
    g.a_min = 0;
    g.a_max = 2;
    g.b_min = 0;
    g.b_max = 1;
    g.step = Rational(1, 2);
    g.degree = 6;
    const auto rows = scan(g, 1);
    ASSERT_EQ(rows.size(), 15u);
    for (std::size_t i = 1; i < rows.size(); ++i)
        EXPECT_TRUE(rows[i - 1].a < rows[i].a || (rows[i - 1].a == rows[i].a && rows[i - 1].b < rows[i].b));
    EXPECT_EQ(csv_of(scan(g, 1)), csv_of(scan(g, 3)));
}

TEST(Scan, OutsideNecessaryRowsFollowFromBoundsAlone)
{
    ScanGrid g;
    g.degree = 4;
    for (const auto& r : scan(g)) {
        const auto nec = necessary_region(r.a, r.b);
        EXPECT_EQ(r.status == RegionStatus::outside_necessary, nec.excluded);
        if (nec.excluded) {
            EXPECT_EQ(r.detail, nec.citation);
            EXPECT_EQ(classify_known(SequenceSpec::quadratic(r.a, r.b), LaguerreParams(0)).verdict,
                      MsVerdict::not_ms);
        }
    }
}

TEST(Scan, FalsificationIsMonotoneInBudget)
{
    ScanGrid g;
    g.a_min = -1;
    g.a_max = 4;
    g.b_min = 0;
    g.b_max = 3;
    g.step = Rational(1, 2);
    g.degree = 4;
    const auto low = scan(g);
    g.degree = 10;
    const auto high = scan(g);
    ASSERT_EQ(low.size(), high.size());
    for (std::size_t i = 0; i < low.size(); ++i) {
        if (low[i].status == RegionStatus::falsified) {
            EXPECT_EQ(high[i].status, RegionStatus::falsified) << low[i].a << "," << low[i].b;
        }
    }
}

TEST(Scan, NoInsidePointIsFalsified)
{
    for (const auto& r : scan(ScanGrid{})) {
        if (r.side == ConjectureSide::inside) {
            EXPECT_NE(r.status, RegionStatus::falsified) << r.a << "," << r.b;
        }
    }
}

TEST(Polyline, ClosedLoopOverConjecturedRegion)
{
    std::ostringstream os;
    emit_boundary_polyline(os, 1);
    EXPECT_EQ(os.str(), "a,b\n"
                        "-1,0\n0,1/8\n1,1/2\n2,9/8\n3,2\n"
                        "3,2\n2,1\n1,0\n0,0\n-1,0\n");
}
