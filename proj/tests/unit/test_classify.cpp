#include "dunkl/classify.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace dunkl;

namespace {

Rational R(std::int64_t p, std::int64_t q = 1)
{
    return Rational(p, q);
}

std::vector<Rational> over(std::int64_t d, std::vector<std::int64_t> n)
{
    std::vector<Rational> mu;
    for (auto x : n) mu.push_back(R(x, d));
    return mu;
}

Kind kind_of(const std::vector<Rational>& mu)
{
    return classify(lauricella_system(mu)).kind;
}

// the same system with hyperplanes listed in another order and the gram scaled
DunklSystem shuffled(const DunklSystem& s, std::mt19937& g, const Rational& c)
{
    const Arrangement& a = s.arrangement;
    std::vector<int> perm(a.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), g);
    std::vector<Vec> normals;
    std::vector<std::string> labels;
    std::vector<Rational> kappa;
    for (int x : perm) {
        normals.push_back(a.normals[x]);
        labels.push_back(a.labels[x]);
        kappa.push_back(s.kappa[x]);
    }
    ExactMatrix gram = a.gram;
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j) gram.at(i, j) *= c;
    return make_system(make_arrangement(a.name, gram, normals, labels), kappa);
}

} // namespace

TEST(Classify, LauricellaExamples)
{
    EXPECT_EQ(kind_of(over(6, {1, 1, 1, 1})), Kind::elliptic);
    EXPECT_EQ(kind_of(over(4, {1, 1, 1, 1})), Kind::parabolic);
    EXPECT_EQ(kind_of(over(5, {2, 2, 2, 2})), Kind::hyperbolic_cocompact);
    EXPECT_EQ(kind_of(over(4, {1, 1, 1, 2})), Kind::hyperbolic_cofinite);
    EXPECT_EQ(kind_of(over(8, {1, 3, 3, 3})), Kind::hyperbolic_cocompact);
    EXPECT_EQ(kind_of(over(3, {1, 1, 1, 1})), Kind::hyperbolic_cofinite);
    // pair defect 3/4
    ClassificationReport bad = classify(lauricella_system(over(8, {1, 1, 3, 3})));
    EXPECT_EQ(bad.kind, Kind::schwarz_fail);
    ASSERT_TRUE(bad.witness.has_value());
    EXPECT_EQ(bad.witness->count(), 1);
    // sum of weights beyond 2
    EXPECT_EQ(kind_of(over(6, {4, 4, 4, 4})), Kind::not_admissible);
}

TEST(Classify, Cocompactness)
{
    EXPECT_FALSE(cocompact(lauricella_system(over(4, {1, 1, 1, 2}))));
    EXPECT_TRUE(cocompact(lauricella_system(over(8, {1, 3, 3, 3}))));
    DunklSystem e6 = constant_kappa_system("E6", {3});
    EXPECT_FALSE(cocompact(e6));
    bool a5 = false;
    for (const auto& nd : e6.flats().nodes)
        if (nd.codim == 5 && nd.members.count() == 15) {
            a5 = true;
            EXPECT_EQ(e6.kappa_of(nd), R(1));
        }
    EXPECT_TRUE(a5);
    ClassificationReport r = classify(e6);
    EXPECT_EQ(r.kind, Kind::hyperbolic_cofinite);
}

TEST(Classify, H3)
{
    ClassificationReport q6 = classify(constant_kappa_system("H3", {6}));
    EXPECT_EQ(q6.kind, Kind::schwarz_fail);
    EXPECT_EQ(q6.witness_type, "I2(5)");
    for (int q : {3, 4, 5, 10}) EXPECT_EQ(classify(constant_kappa_system("H3", {q})).kind, Kind::hyperbolic_cocompact) << q;
    for (int q : {6, 7, 8, 9, 11, 12}) EXPECT_FALSE(is_admissible_kind(classify(constant_kappa_system("H3", {q})).kind)) << q;
}

TEST(Classify, F4Parabolic)
{
    ClassificationReport r = classify(constant_kappa_system("F4", {2, 3}));
    EXPECT_EQ(r.kind, Kind::parabolic);
    EXPECT_EQ(r.signature, (Signature{3, 1, 0}));
    EXPECT_EQ(r.kappa0, R(1));
}

TEST(Classify, KindInvariants)
{
    std::vector<std::vector<Rational>> rows{over(6, {1, 1, 1, 1}), over(6, {1, 1, 1, 2}), over(4, {1, 1, 1, 1}), over(5, {2, 2, 2, 2}),
                                            over(4, {1, 1, 1, 2}), over(12, {3, 3, 5, 6}), over(10, {3, 3, 3, 3}), over(6, {1, 1, 1, 1, 1})};
    for (const auto& mu : rows) {
        DunklSystem s = lauricella_system(mu);
        ClassificationReport r = classify(s);
        ASSERT_TRUE(is_admissible_kind(r.kind)) << r.reason;
        const int n = s.dim();
        if (r.kind == Kind::elliptic) {
            EXPECT_LT(r.kappa0, R(1));
            EXPECT_EQ(r.signature, (Signature{n, 0, 0}));
        } else if (r.kind == Kind::parabolic) {
            EXPECT_EQ(r.kappa0, R(1));
            EXPECT_EQ(r.signature.null, 1);
        } else {
            EXPECT_EQ(r.signature, (Signature{n - 1, 0, 1}));
        }
        // definite exactly below one
        EXPECT_EQ(r.signature == (Signature{n, 0, 0}), r.kappa0 < R(1));
    }
}

TEST(Classify, RelabelingAndScaling)
{
    std::mt19937 g(3);
    std::vector<DunklSystem> systems{lauricella_system(over(6, {1, 1, 1, 1})), lauricella_system(over(4, {1, 1, 1, 2})),
                                     lauricella_system(over(5, {2, 2, 2, 2})), lauricella_system(over(8, {1, 1, 3, 3})),
                                     constant_kappa_system("H3", {5}), constant_kappa_system("H3", {6}),
                                     constant_kappa_system("B3", {4})};
    for (const auto& s : systems) {
        ClassificationReport want = classify(s);
        for (const Rational& c : {R(1), R(3), R(2, 7)}) {
            ClassificationReport got = classify(shuffled(s, g, c));
            EXPECT_EQ(got.kind, want.kind) << s.arrangement.name << " " << c.str();
            EXPECT_EQ(got.signature, want.signature);
            EXPECT_EQ(got.kappa0, want.kappa0);
        }
    }
}

TEST(Classify, BnThroughQuotient)
{
    auto mu = over(12, {3, 3, 5, 6});
    for (int m = 0; m < 4; ++m) {
        ClassificationReport b = classify(reduce_at(mu, m));
        ClassificationReport a = classify(lauricella_system(mu));
        EXPECT_EQ(b.kind, a.kind);
        EXPECT_EQ(b.signature, a.signature);
    }
}

TEST(Classify, DualDegreesFormula)
{
    DualDegrees d = scale_degrees({2, 3, 4}, R(2, 3));
    EXPECT_EQ(d.degrees, (std::vector<std::int64_t>{6, 9, 12}));
    EXPECT_EQ(d.order, 648);
    d = scale_degrees({1, 2, 3}, R(5, 6));
    EXPECT_EQ(d.degrees, (std::vector<std::int64_t>{6, 12, 18}));
    EXPECT_EQ(d.order, 1296);
    d = scale_degrees({2, 3, 4}, R(0));
    EXPECT_EQ(d.degrees, (std::vector<std::int64_t>{2, 3, 4}));
    EXPECT_EQ(d.order, 24);
    EXPECT_THROW(scale_degrees({2, 3, 4}, R(3, 5)), std::domain_error);
    EXPECT_THROW(scale_degrees({2}, R(3, 2)), std::domain_error);
}

TEST(Classify, DualDegreesOfEllipticRows)
{
    ClassificationReport a = classify(lauricella_system(over(6, {1, 1, 1, 1})));
    ASSERT_EQ(a.kind, Kind::elliptic);
    EXPECT_EQ(a.group_degrees, (std::vector<std::int64_t>{2, 3, 4}));
    ASSERT_TRUE(a.dual_degrees.has_value()) << a.dual_error;
    EXPECT_EQ(*a.dual_degrees, (std::vector<std::int64_t>{6, 9, 12}));
    EXPECT_EQ(*a.dual_order, 648);
    ClassificationReport b = classify(lauricella_system(over(6, {1, 1, 1, 2})));
    ASSERT_EQ(b.kind, Kind::elliptic);
    EXPECT_EQ(b.group_degrees, (std::vector<std::int64_t>{1, 2, 3}));
    ASSERT_TRUE(b.dual_degrees.has_value()) << b.dual_error;
    EXPECT_EQ(*b.dual_degrees, (std::vector<std::int64_t>{6, 12, 18}));
    EXPECT_EQ(*b.dual_order, 1296);
    // the A_3 system with kappa = 1/3 has G = S_4 and kappa0 = 2/3, as (1/6)^4
    ClassificationReport c = classify(constant_kappa_system("A3", {3}));
    ASSERT_EQ(c.kind, Kind::elliptic);
    EXPECT_EQ(*c.dual_degrees, (std::vector<std::int64_t>{6, 9, 12}));
}

TEST(Classify, Presentation)
{
    DunklSystem h3 = constant_kappa_system("H3", {5});
    ClassificationReport r = classify(h3);
    std::map<std::string, std::int64_t> q;
    std::map<std::string, int> size;
    for (const auto& rel : r.presentation) {
        q[rel.type] = rel.q;
        size[rel.type] += rel.orbit_size;
    }
    EXPECT_EQ(q["A1"], 5);
    EXPECT_EQ(size["A1"], 15);
    EXPECT_EQ(q["I2(5)"], 2);
    EXPECT_EQ(size["I2(5)"], 6);
    EXPECT_EQ(q["H3"], 1);
    EXPECT_EQ(r.presentation.size(), 3u);
    // elliptic and parabolic: hyperplane relations only
    for (const auto& mu : {over(6, {1, 1, 1, 1}), over(4, {1, 1, 1, 1})}) {
        ClassificationReport e = classify(lauricella_system(mu));
        for (const auto& rel : e.presentation) EXPECT_EQ(rel.node.count(), 1);
    }
    // Lauricella hyperbolic: pairs and lines with kappa > 1
    ClassificationReport l = classify(lauricella_system(over(5, {2, 2, 2, 2})));
    int lines = 0;
    for (const auto& rel : l.presentation) {
        if (rel.node.count() == 1) EXPECT_EQ(rel.q, 5);  // 1 - 4/5
        if (rel.node.count() == 3) {
            lines += rel.orbit_size;
            EXPECT_EQ(rel.q, 5);  // 1 - 6/5
        }
    }
    EXPECT_EQ(lines, 4);
}

TEST(Classify, Json)
{
    DunklSystem h3 = constant_kappa_system("H3", {5});
    auto j = report_to_json(h3, classify(h3));
    EXPECT_EQ(j["kind"], "hyperbolic-cocompact");
    EXPECT_EQ(j["kappa0"], "3");
    EXPECT_EQ(j["signature"], nlohmann::json({2, 0, 1}));
    EXPECT_TRUE(j["cocompact"].get<bool>());
    EXPECT_TRUE(j["schwarz"].is_array());
    EXPECT_FALSE(j["schwarz"].empty());
    EXPECT_EQ(j["presentation"].size(), 3u);
    auto e = report_to_json(lauricella_system(over(6, {1, 1, 1, 1})), classify(lauricella_system(over(6, {1, 1, 1, 1}))));
    EXPECT_EQ(e["dual"]["order"], 648);
    auto b = reduce_at(over(12, {3, 3, 5, 6}), 0);
    // the triple 3 + 3 + 6 has kappa 1
    EXPECT_EQ(report_to_json(b, classify(b))["kind"], "hyperbolic-cofinite");
}

TEST(Classify, NonFlatAndOutOfRange)
{
    Arrangement a = build_reflection_arrangement("A2");
    ClassificationReport r = classify(make_system(a, {R(1, 2), R(1, 3), R(1, 4)}));
    EXPECT_EQ(r.kind, Kind::not_admissible);
    EXPECT_TRUE(r.witness.has_value());
    // B3 with only one mirror class: the short mirrors alone are A1^3
    int reducible = 0;
    for (auto q : {std::vector<int>{2, 3}, std::vector<int>{3, 2}}) reducible += classify(constant_kappa_system("B3", q)).kind == Kind::reducible_support;
    EXPECT_EQ(reducible, 1);
}
