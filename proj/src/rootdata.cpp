#include "dunkl/rootdata.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <regex>
#include <stdexcept>

namespace dunkl {

namespace {

struct ParsedLabel {
    std::string family;  // A B D E F H I ST
    int n = 0;           // rank, or ST number
    int m = 0;           // I2(m)
};

std::optional<ParsedLabel> parse_label(const std::string& s)
{
    static const std::regex re_i(R"(I2\((\d+)\))");
    static const std::regex re_st(R"(ST(\d+))");
    static const std::regex re_x(R"(([ABDEFH])(\d+))");
    std::smatch mt;
    ParsedLabel p;
    if (std::regex_match(s, mt, re_i)) {
        p.family = "I";
        p.n = 2;
        p.m = std::stoi(mt[1]);
        if (p.m < 3 || p.m > 60) return std::nullopt;
        return p;
    }
    if (std::regex_match(s, mt, re_st)) {
        p.family = "ST";
        p.n = std::stoi(mt[1]);
        static const std::vector<int> ok{24, 27, 29, 31, 33, 34};
        if (std::find(ok.begin(), ok.end(), p.n) == ok.end()) return std::nullopt;
        return p;
    }
    if (std::regex_match(s, mt, re_x)) {
        p.family = mt[1];
        p.n = std::stoi(mt[2]);
        const int n = p.n;
        if (p.family == "A" && n >= 1 && n <= 12) return p;
        if (p.family == "B" && n >= 2 && n <= 12) return p;
        if (p.family == "D" && n >= 4 && n <= 12) return p;
        if (p.family == "E" && n >= 6 && n <= 8) return p;
        if (p.family == "F" && n == 4) return p;
        if (p.family == "H" && (n == 3 || n == 4)) return p;
    }
    return std::nullopt;
}

std::vector<std::vector<int>> coxeter_matrix(const ParsedLabel& p)
{
    const int n = p.n;
    std::vector<std::vector<int>> m(n, std::vector<int>(n, 2));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    auto edge = [&](int a, int b, int v) { m[a][b] = m[b][a] = v; };
    const std::string& f = p.family;
    if (f == "A" || f == "B" || f == "F" || f == "H") {
        for (int i = 0; i + 1 < n; ++i) edge(i, i + 1, 3);
        if (f == "B") edge(n - 2, n - 1, 4);
        if (f == "F") edge(1, 2, 4);
        if (f == "H") edge(0, 1, 5);
    } else if (f == "D") {
        for (int i = 0; i + 2 < n; ++i) edge(i, i + 1, 3);
        edge(n - 3, n - 1, 3);
    } else if (f == "E") {
        // Bourbaki numbering: 1-3-4-5-..., 2 attached to 4
        edge(0, 2, 3);
        edge(2, 3, 3);
        edge(1, 3, 3);
        for (int i = 3; i + 1 < n; ++i) edge(i, i + 1, 3);
    } else if (f == "I") {
        edge(0, 1, p.m);
    }
    return m;
}

std::vector<int> range_step(int a, int b, int step)
{
    std::vector<int> v;
    for (int x = a; x <= b; x += step) v.push_back(x);
    return v;
}

struct STInfo {
    int rank;
    std::vector<int> degrees, codegrees;
    int mirrors;
};

const std::map<int, STInfo>& st_table()
{
    static const std::map<int, STInfo> t{
        {24, {3, {4, 6, 14}, {0, 8, 10}, 21}},
        {27, {3, {6, 12, 30}, {0, 18, 24}, 45}},
        {29, {4, {4, 8, 12, 20}, {0, 8, 12, 16}, 40}},
        {31, {4, {8, 12, 20, 24}, {0, 12, 16, 28}, 60}},
        {33, {5, {4, 6, 10, 12, 18}, {0, 6, 8, 12, 14}, 45}},
        {34, {6, {6, 12, 18, 24, 30, 42}, {0, 12, 18, 24, 30, 36}, 126}},
    };
    return t;
}

} // namespace

long long CoxeterDatum::order() const
{
    long long o = 1;
    for (int d : degrees) o *= d;
    return o;
}

bool label_supported(const std::string& label)
{
    return parse_label(label).has_value();
}

std::vector<std::string> shipped_labels()
{
    return {"A3", "B3", "D4", "E6", "E7", "E8", "F4", "H3", "H4", "ST24", "ST27", "ST29", "ST31", "ST33", "ST34"};
}

CoxeterDatum coxeter_datum(const std::string& label)
{
    auto pl = parse_label(label);
    if (!pl) throw std::invalid_argument("unsupported group label: " + label);
    const ParsedLabel& p = *pl;
    CoxeterDatum cd;
    cd.label = label;
    if (p.family == "ST") {
        const STInfo& s = st_table().at(p.n);
        cd.real = false;
        cd.rank = s.rank;
        cd.degrees = s.degrees;
        for (int d : s.degrees) cd.exponents.push_back(d - 1);
        for (int c : s.codegrees) cd.coexponents.push_back(c + 1);
        cd.mirrors = s.mirrors;
        cd.h = s.degrees.back();
        return cd;
    }
    const int n = p.n;
    cd.rank = n;
    cd.m = coxeter_matrix(p);
    const std::string& f = p.family;
    if (f == "A") {
        cd.h = n + 1;
        cd.exponents = range_step(1, n, 1);
    } else if (f == "B") {
        cd.h = 2 * n;
        cd.exponents = range_step(1, 2 * n - 1, 2);
        cd.short_roots = {n - 1};
    } else if (f == "D") {
        cd.h = 2 * n - 2;
        cd.exponents = range_step(1, 2 * n - 3, 2);
        cd.exponents.push_back(n - 1);
        std::sort(cd.exponents.begin(), cd.exponents.end());
    } else if (f == "E") {
        static const std::map<int, std::vector<int>> ex{
            {6, {1, 4, 5, 7, 8, 11}}, {7, {1, 5, 7, 9, 11, 13, 17}}, {8, {1, 7, 11, 13, 17, 19, 23, 29}}};
        cd.exponents = ex.at(n);
        cd.h = cd.exponents.back() + 1;
    } else if (f == "F") {
        cd.h = 12;
        cd.exponents = {1, 5, 7, 11};
        cd.short_roots = {2, 3};
    } else if (f == "H") {
        cd.h = n == 3 ? 10 : 30;
        cd.exponents = n == 3 ? std::vector<int>{1, 5, 9} : std::vector<int>{1, 11, 19, 29};
    } else if (f == "I") {
        cd.h = p.m;
        cd.exponents = {1, p.m - 1};
        if (p.m % 2 == 0) cd.short_roots = {1};
    }
    for (int e : cd.exponents) cd.degrees.push_back(e + 1);
    cd.coexponents = cd.exponents;
    cd.mirrors = cd.h * n / 2;
    return cd;
}

namespace {

RootData coxeter_roots(const ParsedLabel& p, const CoxeterDatum& cd)
{
    const int n = p.n;
    RootData rd;
    // squared root lengths
    bool golden = p.family == "H" || (p.family == "I" && p.m == 5);
    bool generic_i = p.family == "I" && p.m != 3 && p.m != 4 && p.m != 5 && p.m != 6;
    std::vector<std::int64_t> len(n, 2);
    // generic dihedral roots keep equal lengths
    if (!generic_i)
        for (int s : cd.short_roots) len[s] = 1;
    if (p.family == "I" && p.m == 6) len[1] = 6;
    if (golden)
        rd.field = FieldSpec::quadratic(5);
    else if (generic_i)
        rd.field = FieldSpec::cyclotomic(2 * p.m);
    else
        rd.field = FieldSpec::Q();
    const FieldSpec& f = rd.field;
    rd.gram = ExactMatrix(f, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Scalar& g = rd.gram.at(i, j);
            if (i == j) {
                g = Scalar(f, Rational(len[i]));
                continue;
            }
            const int mij = cd.m[i][j];
            if (mij == 2) continue;
            if (mij == 3) {
                // -cos(pi/3) sqrt(l_i l_j), lengths agree on an m=3 edge
                g = Scalar(f, Rational(-len[i], 2));
            } else if (mij == 4 || (mij == 6 && !generic_i)) {
                // lengths (2,1) for m=4 and (2,6) for m=6 make -cos(pi/m) sqrt(l_i l_j) rational
                g = Scalar(f, mij == 4 ? Rational(-1) : Rational(-3));
            } else if (mij == 5) {
                // -2 cos(pi/5) = -(1 + sqrt5)/2
                g = Scalar(f, Scalar::Coords{Rational(-1, 2), Rational(-1, 2)});
            } else {
                Scalar z = Scalar::gen_power(f, 1);
                g = -(z + z.conj());
            }
        }
    for (int i = 0; i < n; ++i) {
        Vec v = zero_vec(f, n);
        v[i] = Scalar(f, Rational(1));
        rd.generators.push_back(v);
    }
    return rd;
}

Scalar sc(const FieldSpec& f, std::int64_t k)
{
    return Scalar(f, Rational(k));
}

Vec unit(const FieldSpec& f, int n, int i, const Scalar& c)
{
    Vec v = zero_vec(f, n);
    v[i] = c;
    return v;
}

RootData st_roots(int which)
{
    RootData rd;
    auto perms3 = [] {
        std::vector<std::array<int, 3>> ps;
        std::array<int, 3> p{0, 1, 2};
        do ps.push_back(p);
        while (std::next_permutation(p.begin(), p.end()));
        return ps;
    };
    if (which == 24) {
        const FieldSpec f = FieldSpec::cyclotomic(7);
        rd.field = f;
        rd.gram = ExactMatrix::identity(f, 3);
        // alpha = zeta + zeta^2 + zeta^4 = (-1 + sqrt(-7))/2
        Scalar al = Scalar::gen_power(f, 1) + Scalar::gen_power(f, 2) + Scalar::gen_power(f, 4);
        for (int i = 0; i < 3; ++i) rd.generators.push_back(unit(f, 3, i, sc(f, 2)));
        for (auto p : perms3())
            for (int s : {1, -1}) {
                Vec v = zero_vec(f, 3);
                v[p[1]] = al;
                v[p[2]] = al * Rational(s);
                rd.generators.push_back(v);
                for (int s2 : {1, -1}) {
                    Vec w = zero_vec(f, 3);
                    w[p[0]] = al.conj();
                    w[p[1]] = sc(f, s);
                    w[p[2]] = sc(f, s2);
                    rd.generators.push_back(w);
                }
            }
    } else if (which == 27) {
        const FieldSpec f = FieldSpec::cyclotomic(15);
        rd.field = f;
        rd.gram = ExactMatrix::identity(f, 3);
        Scalar z5 = Scalar::gen_power(f, 3), z5i = Scalar::gen_power(f, 12);
        Scalar tau = sc(f, 1) + z5 + z5i;  // (1 + sqrt5)/2
        Scalar taui = z5 + z5i;            // tau - 1 = 1/tau
        for (int i = 0; i < 3; ++i) rd.generators.push_back(unit(f, 3, i, sc(f, 1)));
        for (int k = 0; k < 3; ++k)
            for (int s1 : {1, -1})
                for (int s2 : {1, -1}) {
                    Vec v = zero_vec(f, 3);
                    v[k] = sc(f, 1);
                    v[(k + 1) % 3] = tau * Rational(s1);
                    v[(k + 2) % 3] = taui * Rational(s2);
                    rd.generators.push_back(v);
                }
        Vec extra = zero_vec(f, 3);
        extra[0] = sc(f, 1);
        extra[1] = Scalar::gen_power(f, 5);  // primitive cube root of unity
        rd.generators.push_back(extra);
    } else if (which == 29 || which == 31) {
        const FieldSpec f = FieldSpec::cyclotomic(4);
        rd.field = f;
        rd.gram = ExactMatrix::identity(f, 4);
        if (which == 31)
            for (int i = 0; i < 4; ++i) rd.generators.push_back(unit(f, 4, i, sc(f, 1)));
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                for (int a = 0; a < 4; ++a) {
                    Vec v = zero_vec(f, 4);
                    v[i] = sc(f, 1);
                    v[j] = -Scalar::gen_power(f, a);
                    rd.generators.push_back(v);
                }
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b)
                for (int c = 0; c < 4; ++c) {
                    int s = a + b + c;
                    if (which == 29 ? s % 4 != 0 : s % 2 != 0) continue;
                    rd.generators.push_back(
                        {sc(f, 1), Scalar::gen_power(f, a), Scalar::gen_power(f, b), Scalar::gen_power(f, c)});
                }
    } else if (which == 33 || which == 34) {
        const FieldSpec f = FieldSpec::cyclotomic(3);
        rd.field = f;
        std::vector<Vec> r6;
        for (int i = 0; i < 6; ++i)
            for (int j = i + 1; j < 6; ++j)
                for (int a = 0; a < 3; ++a) {
                    Vec v = zero_vec(f, 6);
                    v[i] = sc(f, 1);
                    v[j] = -Scalar::gen_power(f, a);
                    r6.push_back(v);
                }
        for (int code = 0; code < 243; ++code) {
            int c = code, s = 0;
            Vec v{sc(f, 1)};
            for (int k = 0; k < 5; ++k) {
                v.push_back(Scalar::gen_power(f, c % 3));
                s += c % 3;
                c /= 3;
            }
            if (s % 3 == 0) r6.push_back(v);
        }
        if (which == 34) {
            rd.gram = ExactMatrix::identity(f, 6);
            rd.generators = r6;
        } else {
            // roots orthogonal to e0 - e1, in the basis e0 + e1, e2, ..., e5
            rd.gram = ExactMatrix::identity(f, 5);
            rd.gram.at(0, 0) = sc(f, 2);
            for (const auto& v : r6) {
                if (!(v[0] == v[1])) continue;
                rd.generators.push_back({v[0], v[2], v[3], v[4], v[5]});
            }
        }
    }
    return rd;
}

} // namespace

RootData root_data(const std::string& label)
{
    auto pl = parse_label(label);
    if (!pl) throw std::invalid_argument("unsupported group label: " + label);
    RootData rd = pl->family == "ST" ? st_roots(pl->n) : coxeter_roots(*pl, coxeter_datum(label));
    rd.version = "rootdata-1";
    return rd;
}

} // namespace dunkl
