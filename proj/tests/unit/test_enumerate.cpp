#include "dunkl/enumerate.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

using namespace dunkl;

namespace {

Rational R(std::int64_t p, std::int64_t q = 1)
{
    return Rational(p, q);
}

TableRow row_of(std::int64_t d, std::vector<std::int64_t> num)
{
    return make_row(d, std::move(num));
}

bool reciprocal_or_zero(const Rational& t)
{
    return t.is_zero() || t.num() == 1 || t.num() == -1;
}

// the A-row conditions evaluated on rationals, tuple by tuple
bool oracle_valid(const std::vector<Rational>& mu)
{
    Rational s;
    for (const auto& m : mu) s += m;
    if (!(R(0) < s && s < R(2))) return false;
    for (std::size_t i = 0; i < mu.size(); ++i)
        for (std::size_t j = i + 1; j < mu.size(); ++j) {
            Rational t = R(1) - mu[i] - mu[j];
            if (!(R(0) < t)) return false;
            if (t.num() != 1 && !(t.num() == 2 && mu[i] == mu[j])) return false;
        }
    if (s > R(1))
        for (const auto& m : mu)
            if (s - m > R(1) && (s - m - R(1)).num() != 1) return false;
    return true;
}

std::set<std::vector<Rational>> oracle_rows(int n, std::int64_t d_max)
{
    std::set<std::vector<Rational>> out;
    for (std::int64_t d = 2; d <= d_max; ++d) {
        std::vector<std::int64_t> t(n + 1, 1);
        while (true) {
            std::vector<Rational> mu;
            for (auto x : t) mu.push_back(R(x, d));
            std::sort(mu.begin(), mu.end());
            if (oracle_valid(mu)) out.insert(mu);
            int k = n;
            while (k >= 0 && t[k] == d - 1) --k;
            if (k < 0) break;
            ++t[k];
            for (int j = k + 1; j <= n; ++j) t[j] = t[k];
        }
    }
    return out;
}

std::string read_file(const std::string& path)
{
    std::ifstream f(path);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

} // namespace

TEST(Enumerate, RowCounts)
{
    auto r3 = enumerate_lauricella(3, 42);
    EXPECT_EQ(r3.size(), 77u);
    EXPECT_EQ(r3.front().d, 3);
    EXPECT_EQ(r3.front().num, (std::vector<std::int64_t>{1, 1, 1, 1}));
    EXPECT_EQ(r3.front().bold, std::vector<bool>(4, true));
    EXPECT_EQ(r3.back().d, 42);
    EXPECT_EQ(enumerate_lauricella(4, 12).size(), 26u);
    auto r9 = enumerate_lauricella(9, 12);
    ASSERT_EQ(r9.size(), 1u);
    EXPECT_EQ(r9[0].d, 6);
    EXPECT_EQ(r9[0].num, std::vector<std::int64_t>(10, 1));
    EXPECT_TRUE(enumerate_lauricella(10, 12).empty());
}

TEST(Enumerate, MatchesTupleOracle)
{
    for (auto [n, dm] : std::vector<std::pair<int, int>>{{2, 24}, {3, 20}, {4, 12}}) {
        std::set<std::vector<Rational>> got;
        for (const auto& r : enumerate_lauricella(n, dm)) {
            EXPECT_TRUE(got.insert(r.mu()).second) << "duplicate row";
        }
        EXPECT_EQ(got, oracle_rows(n, dm)) << n;
    }
}

TEST(Enumerate, RowInvariants)
{
    auto rows = enumerate_lauricella(3, 42);
    for (auto& r : enumerate_lauricella(4, 12)) rows.push_back(r);
    for (const auto& r : rows) {
        std::int64_t g = r.d;
        for (auto x : r.num) g = std::gcd(g, x);
        EXPECT_EQ(g, 1);
        EXPECT_TRUE(std::is_sorted(r.num.begin(), r.num.end()));
        EXPECT_TRUE(is_admissible_kind(r.kind));
        for (std::size_t i = 0; i < r.num.size(); ++i)
            for (std::size_t j = i + 1; j < r.num.size(); ++j) EXPECT_LT(r.num[i] + r.num[j], r.d);
    }
    for (std::size_t i = 1; i < rows.size(); ++i)
        if (rows[i].n == rows[i - 1].n)
            EXPECT_TRUE(std::tie(rows[i - 1].d, rows[i - 1].num) < std::tie(rows[i].d, rows[i].num));
}

TEST(Enumerate, NoRowsBeyondTheTableBound)
{
    std::int64_t top = 0;
    for (const auto& r : enumerate_lauricella(3, 100)) top = std::max(top, r.d);
    EXPECT_EQ(top, 42);
    for (int n = 4; n <= 9; ++n)
        for (const auto& r : enumerate_lauricella(n, 40)) EXPECT_LE(r.d, 12) << n;
}

TEST(Enumerate, ThreadCountDoesNotChangeOutput)
{
    auto one = rows_to_csv(enumerate_lauricella(3, 42, 1));
    EXPECT_EQ(one, rows_to_csv(enumerate_lauricella(3, 42, 3)));
    EXPECT_EQ(one, rows_to_csv(enumerate_lauricella(3, 42, 8)));
}

TEST(Enumerate, BoldFlag)
{
    TableRow a = row_of(12, {3, 3, 5, 6});
    EXPECT_TRUE(bold_flag(a, 0));
    EXPECT_EQ(a.bold, std::vector<bool>(4, true));
    TableRow b = row_of(6, {1, 1, 1, 1});
    for (int m = 0; m < 4; ++m) EXPECT_FALSE(bold_flag(b, m));
    TableRow c = row_of(6, {1, 1, 1, 4});
    EXPECT_TRUE(bold_flag(c, 3));
    EXPECT_FALSE(bold_flag(c, 0));
}

TEST(Enumerate, DFlag)
{
    TableRow a = row_of(4, {1, 1, 1, 1});
    EXPECT_TRUE(d_flag(a, 0));
    EXPECT_TRUE(a.dflag[0]);
    TableRow b = row_of(5, {2, 2, 2, 2});
    for (int m = 0; m < 4; ++m) EXPECT_FALSE(d_flag(b, m));
    TableRow c;
    c.d = 6;
    c.num = {1, 1, 2, 2};
    EXPECT_FALSE(d_flag(c, 3));
}

TEST(Enumerate, BoldRowsReduceToSchwarzSystems)
{
    // the reduced B_n system, checked by the rotation test on every flat
    int checked = 0;
    for (const auto& r : enumerate_lauricella(3, 42))
        for (int m = 0; m <= r.n; ++m) {
            if (!r.bold[m]) continue;
            DunklSystem b = reduce_at(r.mu(), m);
            ASSERT_EQ(b.family, Family::bn);
            EXPECT_TRUE(check_schwarz(b, SchwarzScope::full, false).passed()) << r.d << " m=" << m;
            ++checked;
        }
    EXPECT_GT(checked, 100);
}

TEST(Enumerate, RemarksFollowTheSubsetSums)
{
    for (const auto& r : enumerate_lauricella(3, 42)) {
        Rational s;
        for (const auto& m : r.mu()) s += m;
        if (s < R(1)) {
            EXPECT_EQ(r.remark, Remark::ell);
            continue;
        }
        if (s == R(1)) {
            EXPECT_EQ(r.remark, Remark::par);
            continue;
        }
        bool unit = false;
        auto mu = r.mu();
        for (int mask = 0; mask < (1 << 4); ++mask) {
            int bits = __builtin_popcount(mask);
            if (bits < 2 || bits > 3) continue;
            Rational t;
            for (int i = 0; i < 4; ++i)
                if (mask >> i & 1) t += mu[i];
            unit = unit || t == R(1);
        }
        EXPECT_EQ(r.remark, unit ? Remark::hyp : Remark::cc);
    }
}

TEST(Enumerate, Exceptional)
{
    auto h3 = enumerate_exceptional("H3", 12);
    std::vector<int> qs;
    for (const auto& e : h3) {
        qs.push_back(e.q[0]);
        EXPECT_TRUE(e.cocompact);
    }
    EXPECT_EQ(qs, (std::vector<int>{3, 4, 5, 10}));
    auto e6 = enumerate_exceptional("E6", 12);
    ASSERT_EQ(e6.size(), 2u);
    EXPECT_EQ(e6[0].q, std::vector<int>{3});
    EXPECT_EQ(e6[1].q, std::vector<int>{4});
    EXPECT_FALSE(e6[0].cocompact || e6[1].cocompact);
    auto f4 = enumerate_exceptional("F4", 12);
    EXPECT_EQ(exceptional_to_text("F4", f4), "F4 q1=2 | 3 par, 4, 5*, 6, 8*, 12*\n"
                                             "F4 q1=3 | 3, 4*, 6, 12*\n"
                                             "F4 q1=4 | 4\n"
                                             "F4 q1=6 | 6\n");
    EXPECT_EQ(f4.front().kind, Kind::parabolic);
    EXPECT_THROW(enumerate_exceptional("Z9", 12), std::invalid_argument);
}

TEST(Enumerate, MonomialSeries)
{
    TableRow r = monomial_series(2, 3);
    EXPECT_EQ(r.mu(), (std::vector<Rational>{R(0), R(0), R(2, 3)}));
    EXPECT_TRUE(r.bold[2]);
    EXPECT_FALSE(r.bold[0]);
    EXPECT_TRUE(r.degenerate_support);
    EXPECT_EQ(r.kind, Kind::reducible_support);
    EXPECT_EQ(r.remark, Remark::ell);
    TableRow one = monomial_series(1, 2);
    EXPECT_EQ(one.mu(), (std::vector<Rational>{R(0), R(1, 2)}));
    EXPECT_TRUE(one.degenerate_support);
    EXPECT_TRUE(one.bold[1]);
    EXPECT_EQ(one.kind, Kind::elliptic);
    for (int n = 1; n <= 5; ++n)
        for (int q = 2; q <= 8; ++q) {
            TableRow m = monomial_series(n, q);
            EXPECT_TRUE(m.bold[n]);
            EXPECT_TRUE(reduction_schwarz(m.mu(), n));
        }
}

TEST(Enumerate, Formats)
{
    auto rows = enumerate_lauricella(3, 5);
    std::string csv = rows_to_csv(rows);
    EXPECT_EQ(csv, "#,d,n_0,n_1,n_2,n_3,remark\n"
                   "1,3,1*,1*,1*,1*,\n"
                   "2,4,1*+,1*+,1*+,1*+,par\n"
                   "3,4,1*,1*,1*,2*,\n"
                   "4,5,2*,2*,2*,2*,cc\n");
    auto j = rows_to_json(rows);
    EXPECT_EQ(j.size(), 4u);
    EXPECT_EQ(j[1]["remark"], "par");
    EXPECT_EQ(j[1]["dflag"][0], true);
    EXPECT_NE(rows_to_table(rows).find("par"), std::string::npos);
}

TEST(Enumerate, GoldenTableOne)
{
    std::vector<TableRow> all;
    for (int n = 3; n <= 9; ++n)
        for (auto& r : enumerate_lauricella(n, n == 3 ? 42 : 12)) all.push_back(r);
    EXPECT_EQ(rows_to_csv(all), read_file(std::string(DUNKL_GOLDEN_DIR) + "/table1.csv"));
}
