#include "dunkl/arrangement.hpp"

#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

using namespace dunkl;

namespace {

// H_L for the flat spanned by two mirrors, by rank tests on the normals
Bits pair_closure(const Arrangement& a, int i, int j)
{
    Bits b(a.size());
    for (int x = 0; x < a.size(); ++x)
        if (rank_of({a.normals[i], a.normals[j], a.normals[x]}, a.field, a.dim) == 2) b.set(x);
    return b;
}

std::vector<int> orbit_sizes(const Arrangement& a)
{
    std::vector<int> s;
    for (const auto& o : hyperplane_orbits(a)) s.push_back(static_cast<int>(o.size()));
    std::sort(s.begin(), s.end());
    return s;
}

} // namespace

TEST(Arrangement, MirrorCounts)
{
    EXPECT_EQ(build_reflection_arrangement("A3").size(), 6);
    EXPECT_EQ(build_reflection_arrangement("H3").size(), 15);
    EXPECT_EQ(build_reflection_arrangement("F4").size(), 24);
    for (const auto& label : shipped_labels()) {
        Arrangement a = build_reflection_arrangement(label);
        CoxeterDatum cd = coxeter_datum(label);
        EXPECT_EQ(a.size(), cd.mirrors) << label;
        EXPECT_EQ(a.dim, cd.rank) << label;
        int sum = 0;
        for (int d : cd.degrees) sum += d - 1;
        EXPECT_EQ(sum, cd.mirrors) << label;
        if (cd.real) EXPECT_EQ(cd.h * cd.rank, 2 * cd.mirrors) << label;
    }
    EXPECT_THROW(build_reflection_arrangement("ST25"), std::invalid_argument);
    EXPECT_THROW(build_reflection_arrangement("E9"), std::invalid_argument);
}

TEST(Arrangement, F4MirrorsFromStandardRoots)
{
    // the 48 roots +-e_i, +-e_i+-e_j, (+-1,+-1,+-1,+-1)/2 give 24 mirrors: 12 long, 12 short
    std::set<std::vector<int>> mirrors;
    std::vector<std::vector<int>> roots;
    for (int i = 0; i < 4; ++i) {
        std::vector<int> v(4, 0);
        v[i] = 2;
        roots.push_back(v);
        for (int j = i + 1; j < 4; ++j)
            for (int s : {1, -1}) {
                std::vector<int> w(4, 0);
                w[i] = 2;
                w[j] = 2 * s;
                roots.push_back(w);
            }
    }
    for (int m = 0; m < 8; ++m) roots.push_back({1, m & 1 ? -1 : 1, m & 2 ? -1 : 1, m & 4 ? -1 : 1});
    int longc = 0;
    for (const auto& r : roots) {
        mirrors.insert(r);
        int nn = 0;
        for (int x : r) nn += x * x;
        if (nn == 8) ++longc;
    }
    EXPECT_EQ(mirrors.size(), 24u);
    EXPECT_EQ(longc, 12);
    EXPECT_EQ(orbit_sizes(build_reflection_arrangement("F4")), (std::vector<int>{12, 12}));
}

TEST(Arrangement, Orbits)
{
    for (const std::string l : {"A2", "A3", "A5"}) EXPECT_EQ(hyperplane_orbits(build_reflection_arrangement(l)).size(), 1u);
    EXPECT_EQ(orbit_sizes(build_reflection_arrangement("B2")), (std::vector<int>{2, 2}));
    EXPECT_EQ(orbit_sizes(build_reflection_arrangement("B3")), (std::vector<int>{3, 6}));
    EXPECT_EQ(hyperplane_orbits(build_reflection_arrangement("H3")).size(), 1u);
    EXPECT_EQ(hyperplane_orbits(build_reflection_arrangement("ST34")).size(), 1u);
}

TEST(Arrangement, ReflectionsPermuteNormals)
{
    for (const auto& label : shipped_labels()) {
        Arrangement a = build_reflection_arrangement(label);
        auto perms = reflection_permutations(a);
        ASSERT_TRUE(perms.has_value()) << label;
        for (const auto& p : *perms) {
            std::vector<int> q = p;
            std::sort(q.begin(), q.end());
            for (int i = 0; i < a.size(); ++i) ASSERT_EQ(q[i], i) << label;
        }
    }
}

TEST(Arrangement, A3CodimTwo)
{
    Arrangement a = build_reflection_arrangement("A3");
    IntersectionLattice lat = intersection_lattice(a);
    int irr = 0, red = 0;
    for (int id : lat.by_codim[2]) (lat.node(id).irreducible ? irr : red)++;
    EXPECT_EQ(irr, 4);
    EXPECT_EQ(red, 3);
    // brute force over pairs
    std::set<Bits> flats;
    for (int i = 0; i < a.size(); ++i)
        for (int j = i + 1; j < a.size(); ++j) flats.insert(pair_closure(a, i, j));
    EXPECT_EQ(flats.size(), lat.by_codim[2].size());
    for (const auto& f : flats) EXPECT_TRUE(lat.find(f).has_value());
    const LatticeNode& o = lat.node(lat.origin());
    EXPECT_EQ(o.members.count(), 6);
    EXPECT_EQ(o.codim, 3);
    EXPECT_EQ(o.components.size(), 1u);
}

TEST(Arrangement, H3CodimTwoTypes)
{
    Arrangement a = build_reflection_arrangement("H3");
    std::map<int, int> brute;
    std::set<Bits> flats;
    for (int i = 0; i < a.size(); ++i)
        for (int j = i + 1; j < a.size(); ++j) flats.insert(pair_closure(a, i, j));
    for (const auto& f : flats) brute[f.count()]++;
    EXPECT_EQ(brute[3], 10);
    EXPECT_EQ(brute[5], 6);
    EXPECT_EQ(brute[2], 15);
    IntersectionLattice lat = intersection_lattice(a, 2);
    std::map<std::string, int> types;
    for (int id : lat.by_codim[2]) types[type_guess(lat.node(id))]++;
    EXPECT_EQ(types["A2"], 10);
    EXPECT_EQ(types["I2(5)"], 6);
    EXPECT_EQ(types["reducible(1x1)"], 15);
}

TEST(Arrangement, ComponentsExamples)
{
    Arrangement a = build_reflection_arrangement("A3");
    IntersectionLattice lat = intersection_lattice(a);
    for (int id : lat.by_codim[2]) {
        const auto& nd = lat.node(id);
        if (nd.members.count() == 2) {
            auto c = irreducible_components(a, nd);
            ASSERT_EQ(c.size(), 2u);
            EXPECT_EQ(c[0].size(), 1u);
        }
    }
    for (int id : lat.by_codim[1]) EXPECT_EQ(irreducible_components(a, lat.node(id)).size(), 1u);
    EXPECT_EQ(irreducible_components(a, lat.node(lat.origin())).size(), 1u);
}

TEST(Arrangement, ComponentsAgreeWithBipartitionSearch)
{
    for (const std::string label : {"A3", "B3", "D4", "A4", "H3", "B4", "F4", "ST24", "ST29"}) {
        Arrangement a = build_reflection_arrangement(label);
        IntersectionLattice lat = intersection_lattice(a);
        for (const auto& nd : lat.nodes) {
            if (nd.members.count() == 0 || nd.members.count() > 12) continue;
            EXPECT_EQ(nd.components, components_bruteforce(a, nd.member_list())) << label;
            EXPECT_EQ(flat_codim(a, nd.members), nd.codim);
        }
    }
}

TEST(Arrangement, LatticeIsIntersectionClosed)
{
    std::mt19937 g(4);
    for (const std::string label : {"B4", "H3", "ST29"}) {
        Arrangement a = build_reflection_arrangement(label);
        IntersectionLattice lat = intersection_lattice(a);
        std::uniform_int_distribution<int> pick(0, static_cast<int>(lat.nodes.size()) - 1);
        for (int t = 0; t < 200; ++t) {
            const auto& x = lat.node(pick(g));
            const auto& y = lat.node(pick(g));
            Bits m = flat_closure(a, (x.members | y.members).list());
            ASSERT_TRUE(lat.find(m).has_value()) << label;
        }
        // every hyperplane is a node
        for (int h = 0; h < a.size(); ++h) EXPECT_TRUE(lat.find(Bits::from_list(a.size(), {h})).has_value());
        // node basis dimension matches the codimension
        for (int t = 0; t < 20; ++t) {
            const auto& x = lat.node(pick(g));
            EXPECT_EQ(static_cast<int>(flat_basis(a, x.members).size()), a.dim - x.codim);
        }
    }
}

TEST(Arrangement, IrreducibleSearchMatchesFullLattice)
{
    for (const std::string label : {"A4", "B4", "D4", "D5", "F4", "H3", "H4", "ST24", "ST27", "ST29", "ST31", "ST33"}) {
        Arrangement a = build_reflection_arrangement(label);
        IntersectionLattice full = intersection_lattice(a);
        IntersectionLattice irr = irreducible_lattice(a);
        std::set<Bits> want, got;
        for (const auto& nd : full.nodes)
            if (nd.irreducible) want.insert(nd.members);
        for (const auto& nd : irr.nodes) {
            EXPECT_TRUE(nd.irreducible);
            got.insert(nd.members);
        }
        EXPECT_EQ(want, got) << label;
    }
}

TEST(Arrangement, IrreducibleChainToCodimOne)
{
    // every irreducible L other than {0} contains an irreducible flat of codimension one in L
    for (const auto& label : shipped_labels()) {
        Arrangement a = build_reflection_arrangement(label);
        IntersectionLattice irr = irreducible_lattice(a);
        for (int k = 1; k < a.dim; ++k)
            for (int id : irr.by_codim[k]) {
                const auto& L = irr.node(id);
                bool found = false;
                for (int jd : irr.by_codim[k + 1])
                    if (L.members.subset_of(irr.node(jd).members)) {
                        found = true;
                        break;
                    }
                EXPECT_TRUE(found) << label << " codim " << k;
            }
        EXPECT_EQ(irr.node(irr.origin()).members.count(), a.size());
    }
}

TEST(Arrangement, JsonRoundTripAndValidation)
{
    Arrangement a = build_reflection_arrangement("H3");
    Arrangement b = arrangement_from_json(arrangement_to_json(a));
    EXPECT_EQ(b.normals, a.normals);
    EXPECT_EQ(b.gram, a.gram);
    const FieldSpec q = FieldSpec::Q();
    auto v = [&](int x, int y) { return Vec{Scalar(q, Rational(x)), Scalar(q, Rational(y))}; };
    ExactMatrix id = ExactMatrix::identity(q, 2);
    EXPECT_THROW(make_arrangement("dup", id, {v(1, 0), v(2, 0), v(0, 1)}), std::invalid_argument);
    EXPECT_THROW(make_arrangement("red", id, {v(1, 0), v(0, 1)}), std::invalid_argument);
    ExactMatrix neg = id;
    neg.at(1, 1) = Scalar(q, Rational(-1));
    EXPECT_THROW(make_arrangement("neg", neg, {v(1, 0), v(0, 1), v(1, 1)}), std::invalid_argument);
    Arrangement ok = make_arrangement("ok", id, {v(2, 0), v(0, 3), v(1, 1)});
    EXPECT_EQ(ok.normals[0], v(1, 0));
    Arrangement red = make_arrangement("red", id, {v(1, 0), v(0, 1)}, {}, false);
    EXPECT_FALSE(red.irreducible);
}
