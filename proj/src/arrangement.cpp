#include "dunkl/arrangement.hpp"

#include "dunkl/signature.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <climits>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace dunkl {

// ---------------------------------------------------------------- Bits

Bits Bits::from_list(int n, const std::vector<int>& idx)
{
    Bits b(n);
    for (int i : idx) b.set(i);
    return b;
}

int Bits::count() const
{
    int c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
}

bool Bits::subset_of(const Bits& o) const
{
    for (std::size_t i = 0; i < w_.size(); ++i)
        if (w_[i] & ~o.w_[i]) return false;
    return true;
}

Bits Bits::operator|(const Bits& o) const
{
    Bits r = *this;
    for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] |= o.w_[i];
    return r;
}

Bits Bits::operator&(const Bits& o) const
{
    Bits r = *this;
    for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] &= o.w_[i];
    return r;
}

std::vector<int> Bits::list() const
{
    std::vector<int> v;
    for (int i = 0; i < n_; ++i)
        if (test(i)) v.push_back(i);
    return v;
}

std::size_t Bits::hash() const
{
    std::size_t h = static_cast<std::size_t>(n_);
    for (auto w : w_) h = h * 0x9E3779B97F4A7C15ull ^ (w + (h >> 7));
    return h;
}

bool operator<(const Bits& a, const Bits& b)
{
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return std::lexicographical_compare(a.w_.begin(), a.w_.end(), b.w_.begin(), b.w_.end());
}

// ---------------------------------------------------------------- elimination kernels

namespace {

struct IntRing {
    using T = std::int64_t;
    bool zero(T x) const { return x == 0; }
    T zero_value() const { return 0; }
    T one() const { return 1; }
    // target := piv[c] * target - target[c] * piv, then divided by its content
    void eliminate(std::vector<T>& target, const std::vector<T>& piv, int c) const
    {
        const __int128 a = piv[c], b = target[c];
        for (std::size_t i = 0; i < target.size(); ++i) {
            __int128 r = a * target[i] - b * piv[i];
            if (r > INT64_MAX || r < INT64_MIN) throw std::overflow_error("integer elimination overflow");
            target[i] = static_cast<T>(r);
        }
        std::int64_t g = 0;
        for (auto x : target) g = std::gcd(g, x < 0 ? -x : x);
        if (g > 1)
            for (auto& x : target) x /= g;
    }
};

// Algebraic integers of Z[sqrt d] or Z[zeta_N] on the power basis, fraction-free.
struct AlgIntRing {
    static constexpr int kMaxDeg = 8;
    using T = std::array<std::int64_t, kMaxDeg>;
    int k = 1;
    bool quadratic = false;
    std::int64_t d = 0;
    std::vector<std::int64_t> phi;  // monic minimal polynomial, lowest degree first

    bool zero(const T& x) const
    {
        for (int i = 0; i < k; ++i)
            if (x[i]) return false;
        return true;
    }
    T zero_value() const { return T{}; }
    T one() const
    {
        T t{};
        t[0] = 1;
        return t;
    }
    T mul(const T& a, const T& b) const
    {
        constexpr std::int64_t lim = std::int64_t(1) << 52;
        for (int i = 0; i < k; ++i)
            if (a[i] > lim || a[i] < -lim || b[i] > lim || b[i] < -lim) throw std::overflow_error("algebraic integer overflow");
        __int128 t[2 * kMaxDeg] = {};
        for (int i = 0; i < k; ++i)
            if (a[i])
                for (int j = 0; j < k; ++j) t[i + j] += static_cast<__int128>(a[i]) * b[j];
        if (quadratic) {
            t[0] += t[2] * d;
        } else {
            for (int deg = 2 * k - 2; deg >= k; --deg) {
                const __int128 c = t[deg];
                if (!c) continue;
                t[deg] = 0;
                for (int i = 0; i < k; ++i) t[deg - k + i] -= c * phi[i];
            }
        }
        T r{};
        for (int i = 0; i < k; ++i) {
            if (t[i] > INT64_MAX || t[i] < INT64_MIN) throw std::overflow_error("algebraic integer overflow");
            r[i] = static_cast<std::int64_t>(t[i]);
        }
        return r;
    }
    void eliminate(std::vector<T>& target, const std::vector<T>& piv, int c) const
    {
        const T a = piv[c], b = target[c];
        std::int64_t g = 0;
        for (std::size_t i = 0; i < target.size(); ++i) {
            T x = zero(target[i]) ? T{} : mul(a, target[i]);
            if (!zero(piv[i])) {
                T y = mul(b, piv[i]);
                for (int j = 0; j < k; ++j) {
                    __int128 r = static_cast<__int128>(x[j]) - y[j];
                    if (r > INT64_MAX || r < INT64_MIN) throw std::overflow_error("algebraic integer overflow");
                    x[j] = static_cast<std::int64_t>(r);
                }
            }
            target[i] = x;
            for (int j = 0; j < k; ++j) g = std::gcd(g, x[j] < 0 ? -x[j] : x[j]);
        }
        if (g > 1)
            for (auto& x : target)
                for (int j = 0; j < k; ++j) x[j] /= g;
    }
};

struct FieldRing {
    using T = Scalar;
    FieldSpec f;
    bool zero(const T& x) const { return x.is_zero(); }
    T zero_value() const { return Scalar(f); }
    T one() const { return Scalar(f, Rational(1)); }
    void eliminate(std::vector<T>& target, const std::vector<T>& piv, int c) const
    {
        Scalar m = target[c] / piv[c];
        for (std::size_t i = 0; i < target.size(); ++i)
            if (!piv[i].is_zero()) target[i] -= m * piv[i];
    }
};

template <class R>
struct Engine {
    using T = typename R::T;
    R ring;
    int n = 0, N = 0;
    // p0[i][x]: functional of hyperplane x evaluated on the i-th standard basis vector
    std::vector<std::vector<T>> p0;
    std::vector<std::vector<T>> normals;

    // rows span L; returns rows spanning L cut by hyperplane h
    std::vector<std::vector<T>> cut(std::vector<std::vector<T>> rows, int h) const
    {
        int j0 = -1;
        for (std::size_t j = 0; j < rows.size(); ++j)
            if (!ring.zero(rows[j][h])) {
                j0 = static_cast<int>(j);
                break;
            }
        if (j0 < 0) return rows;
        std::vector<std::vector<T>> out;
        out.reserve(rows.size() - 1);
        for (std::size_t j = 0; j < rows.size(); ++j) {
            if (static_cast<int>(j) == j0) continue;
            if (!ring.zero(rows[j][h])) ring.eliminate(rows[j], rows[j0], h);
            out.push_back(std::move(rows[j]));
        }
        return out;
    }

    Bits zero_columns(const std::vector<std::vector<T>>& rows) const
    {
        Bits b(N);
        for (int x = 0; x < N; ++x) {
            bool z = true;
            for (const auto& r : rows)
                if (!ring.zero(r[x])) {
                    z = false;
                    break;
                }
            if (z) b.set(x);
        }
        return b;
    }

    std::vector<std::vector<T>> rows_for(const std::vector<int>& basis) const
    {
        auto rows = p0;
        for (int h : basis) rows = cut(std::move(rows), h);
        return rows;
    }

    // greedy basis and fundamental-circuit connectivity of the given normals
    void matroid(const std::vector<int>& S, std::vector<int>* basis, std::vector<int>* comp_of) const
    {
        std::vector<std::vector<T>> ech;
        std::vector<int> piv, bas;
        std::vector<int> parent(S.size());
        std::iota(parent.begin(), parent.end(), 0);
        auto findp = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        std::vector<int> slot_pos;  // position in S of each basis slot
        for (std::size_t s = 0; s < S.size(); ++s) {
            // coordinates, then the combination coefficients over basis slots
            std::vector<T> v(2 * n + 1, ring.zero_value());
            for (int i = 0; i < n; ++i) v[i] = normals[S[s]][i];
            const int k = static_cast<int>(bas.size());
            v[n + k] = ring.one();
            for (std::size_t e = 0; e < ech.size(); ++e)
                if (!ring.zero(v[piv[e]])) ring.eliminate(v, ech[e], piv[e]);
            int p = -1;
            for (int i = 0; i < n; ++i)
                if (!ring.zero(v[i])) {
                    p = i;
                    break;
                }
            if (p < 0) {
                for (int b = 0; b < k; ++b)
                    if (!ring.zero(v[n + b])) {
                        int ra = findp(static_cast<int>(s)), rb = findp(slot_pos[b]);
                        if (ra != rb) parent[ra] = rb;
                    }
            } else {
                ech.push_back(std::move(v));
                piv.push_back(p);
                bas.push_back(S[s]);
                slot_pos.push_back(static_cast<int>(s));
            }
        }
        if (basis) *basis = bas;
        if (comp_of) {
            comp_of->assign(S.size(), 0);
            for (std::size_t s = 0; s < S.size(); ++s) (*comp_of)[s] = findp(static_cast<int>(s));
        }
    }

    std::vector<std::vector<int>> components(const std::vector<int>& S) const
    {
        std::vector<int> comp;
        matroid(S, nullptr, &comp);
        std::map<int, std::vector<int>> blocks;
        for (std::size_t s = 0; s < S.size(); ++s) blocks[comp[s]].push_back(S[s]);
        std::vector<std::vector<int>> out;
        for (auto& [k, b] : blocks) out.push_back(b);
        std::sort(out.begin(), out.end());
        return out;
    }

    int rank(const std::vector<int>& S) const
    {
        std::vector<int> b;
        matroid(S, &b, nullptr);
        return static_cast<int>(b.size());
    }
};

// common denominator of every coordinate of every entry
std::int64_t denominator_lcm(const Vec& v)
{
    std::int64_t l = 1;
    for (const auto& s : v)
        for (const auto& c : s.coords()) l = lcm64(l, c.den());
    return l;
}

std::vector<std::int64_t> to_integers(const Vec& v)
{
    std::int64_t l = denominator_lcm(v);
    std::vector<std::int64_t> out;
    for (const auto& s : v) out.push_back((s.to_rational() * Rational(l)).num());
    std::int64_t g = 0;
    for (auto x : out) g = std::gcd(g, x < 0 ? -x : x);
    if (g > 1)
        for (auto& x : out) x /= g;
    return out;
}

std::vector<AlgIntRing::T> to_alg_integers(const Vec& v, int k)
{
    std::int64_t l = denominator_lcm(v);
    std::vector<AlgIntRing::T> out;
    for (const auto& s : v) {
        AlgIntRing::T t{};
        const auto& c = s.coords();
        for (std::size_t i = 0; i < c.size() && static_cast<int>(i) < k; ++i) t[i] = (c[i] * Rational(l)).num();
        out.push_back(t);
    }
    return out;
}

// functional of hyperplane x: v -> <v, n_x> = sum_i v_i (G conj n_x)_i
Vec functional(const Arrangement& a, int x)
{
    Vec c;
    for (const auto& s : a.normals[x]) c.push_back(s.conj());
    return a.gram.apply(c);
}

template <class R, class Conv>
Engine<R> make_engine(const Arrangement& a, R ring, Conv conv)
{
    Engine<R> e;
    e.ring = ring;
    e.n = a.dim;
    e.N = a.size();
    e.p0.assign(e.n, std::vector<typename R::T>(e.N, ring.zero_value()));
    for (int x = 0; x < e.N; ++x) {
        auto f = conv(functional(a, x));
        for (int i = 0; i < e.n; ++i) e.p0[i][x] = f[i];
        e.normals.push_back(conv(a.normals[x]));
    }
    return e;
}

bool alg_int_ok(const FieldSpec& f)
{
    return f.kind != FieldSpec::Kind::rational && f.degree() <= AlgIntRing::kMaxDeg;
}

AlgIntRing alg_ring(const FieldSpec& f)
{
    AlgIntRing r;
    r.k = f.degree();
    if (f.kind == FieldSpec::Kind::quadratic) {
        r.quadratic = true;
        r.d = f.param;
    } else {
        r.phi = cyclotomic_polynomial(f.param);
    }
    return r;
}

template <class F>
auto with_engine(const Arrangement& a, F&& f)
{
    try {
        if (a.field.kind == FieldSpec::Kind::rational) return f(make_engine(a, IntRing{}, to_integers));
        if (alg_int_ok(a.field)) {
            const int k = a.field.degree();
            return f(make_engine(a, alg_ring(a.field), [k](const Vec& v) { return to_alg_integers(v, k); }));
        }
    } catch (const std::overflow_error&) {
        // fall through to exact field arithmetic
    }
    return f(make_engine(a, FieldRing{a.field}, [](const Vec& v) { return std::vector<Scalar>(v.begin(), v.end()); }));
}

std::size_t vec_hash(const Vec& v)
{
    std::size_t h = 0;
    for (const auto& s : v) h = h * 1000003u ^ s.hash();
    return h;
}

template <class E>
IntersectionLattice bfs(const Arrangement& a, const E& eng, int max_codim, bool irreducible_only)
{
    IntersectionLattice lat;
    lat.irreducible_only = irreducible_only;
    const int n = a.dim, N = a.size();
    if (max_codim < 0 || max_codim > n) max_codim = n;
    std::vector<std::vector<int>> bases;
    std::unordered_set<Bits, BitsHash> rejected;

    LatticeNode top;
    top.members = Bits(N);
    top.codim = 0;
    top.irreducible = false;
    if (!irreducible_only) {
        lat.index.emplace(top.members, 0);
        lat.nodes.push_back(top);
        bases.push_back({});
    }
    lat.by_codim.assign(max_codim + 1, {});
    if (!irreducible_only) lat.by_codim[0].push_back(0);

    // codim 1
    for (int x = 0; x < N && max_codim >= 1; ++x) {
        auto rows = eng.cut(eng.p0, x);
        Bits m = eng.zero_columns(rows);
        if (lat.index.count(m)) continue;
        LatticeNode nd;
        nd.members = m;
        nd.codim = 1;
        nd.components = eng.components(m.list());
        nd.irreducible = nd.components.size() == 1;
        lat.index.emplace(m, static_cast<int>(lat.nodes.size()));
        lat.by_codim[1].push_back(static_cast<int>(lat.nodes.size()));
        lat.nodes.push_back(nd);
        bases.push_back({x});
    }
    for (int k = 1; k < max_codim; ++k) {
        const std::vector<int> level = lat.by_codim[k];
        for (int id : level) {
            auto rows = eng.rows_for(bases[id]);
            Bits covered = lat.nodes[id].members;
            const std::vector<int> base = bases[id];
            for (int h = 0; h < N; ++h) {
                if (covered.test(h)) continue;
                auto child = eng.cut(rows, h);
                Bits m = eng.zero_columns(child);
                covered = covered | m;
                if (lat.index.count(m) || rejected.count(m)) continue;
                auto comps = eng.components(m.list());
                bool irr = comps.size() == 1;
                if (irreducible_only && !irr) {
                    rejected.insert(m);
                    continue;
                }
                LatticeNode nd;
                nd.members = m;
                nd.codim = k + 1;
                nd.irreducible = irr;
                nd.components = std::move(comps);
                const int nid = static_cast<int>(lat.nodes.size());
                lat.index.emplace(m, nid);
                lat.by_codim[k + 1].push_back(nid);
                lat.nodes.push_back(std::move(nd));
                auto b = base;
                b.push_back(h);
                bases.push_back(std::move(b));
            }
        }
    }
    return lat;
}

} // namespace

// ---------------------------------------------------------------- Arrangement

std::optional<int> Arrangement::find(const Vec& v) const
{
    if (is_zero(v)) return std::nullopt;
    Vec w = normalize_first(v);
    auto it = lookup.find(vec_hash(w));
    if (it == lookup.end()) return std::nullopt;
    for (int i : it->second)
        if (normals[i] == w) return i;
    return std::nullopt;
}

Arrangement make_arrangement(const std::string& name, const ExactMatrix& gram, std::vector<Vec> normals,
                             std::vector<std::string> labels, bool strict)
{
    Arrangement a;
    a.name = name;
    a.field = gram.field();
    a.dim = gram.rows();
    if (gram.rows() != gram.cols() || a.dim == 0) throw std::invalid_argument("gram must be square and nonempty");
    if (!gram.is_hermitian()) throw std::invalid_argument("gram is not hermitian");
    a.gram = gram;
    if (normals.empty()) throw std::invalid_argument("arrangement without hyperplanes");
    for (auto& v : normals) {
        if (static_cast<int>(v.size()) != a.dim) throw std::invalid_argument("normal has wrong length");
        for (const auto& s : v)
            if (!(s.field() == a.field)) throw std::invalid_argument("normal outside the gram field");
        if (is_zero(v)) throw std::invalid_argument("zero normal");
        v = normalize_first(v);
    }
    if (!labels.empty() && labels.size() != normals.size()) throw std::invalid_argument("label count mismatch");
    if (labels.empty())
        for (std::size_t i = 0; i < normals.size(); ++i) labels.push_back("H" + std::to_string(i));
    a.normals = std::move(normals);
    a.labels = std::move(labels);
    for (int i = 0; i < a.size(); ++i) {
        if (a.find(a.normals[i])) throw std::invalid_argument("proportional normals at " + a.labels[i]);
        a.lookup[vec_hash(a.normals[i])].push_back(i);
    }
    std::vector<int> all(a.size());
    std::iota(all.begin(), all.end(), 0);
    auto comps = irreducible_components(a, Bits::from_list(a.size(), all));
    a.irreducible = comps.size() == 1;
    if (strict) {
        if (!positive_definite(gram)) throw std::invalid_argument("gram is not positive definite");
        if (rank_of(a.normals, a.field, a.dim) != a.dim) throw std::invalid_argument("hyperplanes do not meet in {0}");
        if (!a.irreducible) throw std::invalid_argument("arrangement is reducible");
    }
    return a;
}

Vec reflect(const Arrangement& a, int k, const Vec& v)
{
    const Vec& n = a.normals[k];
    Scalar c = a.inner(v, n) / a.inner(n, n) * Rational(2);
    return sub(v, scale(c, n));
}

std::optional<std::vector<std::vector<int>>> reflection_permutations(const Arrangement& a)
{
    std::vector<std::vector<int>> perms(a.size(), std::vector<int>(a.size()));
    for (int k = 0; k < a.size(); ++k)
        for (int x = 0; x < a.size(); ++x) {
            auto y = a.find(reflect(a, k, a.normals[x]));
            if (!y) return std::nullopt;
            perms[k][x] = *y;
        }
    return perms;
}

std::vector<std::vector<int>> hyperplane_orbits(const Arrangement& a)
{
    const int N = a.size();
    std::vector<int> parent(N);
    std::iota(parent.begin(), parent.end(), 0);
    auto findp = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int k = 0; k < N; ++k)
        for (int x = 0; x < N; ++x) {
            auto y = a.find(reflect(a, k, a.normals[x]));
            if (!y) continue;
            int ra = findp(x), rb = findp(*y);
            if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
        }
    std::map<int, std::vector<int>> blocks;
    for (int x = 0; x < N; ++x) blocks[findp(x)].push_back(x);
    std::vector<std::vector<int>> out;
    for (auto& [r, b] : blocks) out.push_back(b);
    return out;
}

Arrangement build_reflection_arrangement(const std::string& label)
{
    RootData rd = root_data(label);
    // close the generators under reflections in every known mirror
    std::vector<Vec> mirrors;
    std::unordered_map<std::size_t, std::vector<int>> seen;
    auto add = [&](const Vec& v) {
        Vec w = normalize_first(v);
        auto& bucket = seen[vec_hash(w)];
        for (int i : bucket)
            if (mirrors[i] == w) return false;
        bucket.push_back(static_cast<int>(mirrors.size()));
        mirrors.push_back(w);
        return true;
    };
    for (const auto& g : rd.generators) add(g);
    // every pair of mirrors is visited once through the queue
    std::vector<Vec> queue = mirrors;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        // reflect queue[qi] in every mirror, and every mirror in queue[qi]
        const Vec v = queue[qi];
        const Scalar vv = herm(v, rd.gram, v);
        const std::size_t m_now = mirrors.size();
        for (std::size_t k = 0; k < m_now; ++k) {
            const Vec a = mirrors[k];
            Scalar aa = herm(a, rd.gram, a);
            Vec w = sub(v, scale(herm(v, rd.gram, a) / aa * Rational(2), a));
            if (add(w)) queue.push_back(mirrors.back());
            Vec u = sub(a, scale(herm(a, rd.gram, v) / vv * Rational(2), v));
            if (add(u)) queue.push_back(mirrors.back());
        }
        if (mirrors.size() > 2000) throw std::runtime_error("mirror closure does not terminate for " + label);
    }
    std::sort(mirrors.begin(), mirrors.end(), [](const Vec& x, const Vec& y) {
        // deterministic order: by numeric embedding, lexicographic
        for (std::size_t i = 0; i < x.size(); ++i) {
            auto a = x[i].numeric(), b = y[i].numeric();
            if (std::abs(a.real() - b.real()) > 1e-12) return a.real() < b.real();
            if (std::abs(a.imag() - b.imag()) > 1e-12) return a.imag() < b.imag();
        }
        return false;
    });
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < mirrors.size(); ++i) labels.push_back(label + ":" + std::to_string(i));
    return make_arrangement(label, rd.gram, mirrors, labels, true);
}

nlohmann::json arrangement_to_json(const Arrangement& a)
{
    nlohmann::json j;
    j["name"] = a.name;
    j["field"] = field_to_json(a.field);
    nlohmann::json g = nlohmann::json::array();
    for (int i = 0; i < a.dim; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int k = 0; k < a.dim; ++k) row.push_back(scalar_to_json(a.gram.at(i, k)));
        g.push_back(row);
    }
    j["gram"] = g;
    nlohmann::json ns = nlohmann::json::array();
    for (const auto& v : a.normals) {
        nlohmann::json row = nlohmann::json::array();
        for (const auto& s : v) row.push_back(scalar_to_json(s));
        ns.push_back(row);
    }
    j["normals"] = ns;
    j["labels"] = a.labels;
    return j;
}

Arrangement arrangement_from_json(const nlohmann::json& j)
{
    FieldSpec f = j.contains("field") ? field_from_json(j.at("field")) : FieldSpec::Q();
    const auto& g = j.at("gram");
    const int n = static_cast<int>(g.size());
    ExactMatrix gram(f, n, n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(g[i].size()) != n) throw std::invalid_argument("gram must be square");
        for (int k = 0; k < n; ++k) gram.at(i, k) = scalar_from_json(g[i][k], f);
    }
    std::vector<Vec> normals;
    for (const auto& row : j.at("normals")) {
        Vec v;
        for (const auto& s : row) v.push_back(scalar_from_json(s, f));
        normals.push_back(v);
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    std::string name = j.contains("name") ? j.at("name").get<std::string>() : "json";
    return make_arrangement(name, gram, normals, labels, true);
}

// ---------------------------------------------------------------- lattice

std::optional<int> IntersectionLattice::find(const Bits& members) const
{
    auto it = index.find(members);
    if (it == index.end()) return std::nullopt;
    return it->second;
}

int IntersectionLattice::origin() const
{
    for (int i = static_cast<int>(by_codim.size()) - 1; i >= 0; --i)
        for (int id : by_codim[i])
            if (nodes[id].members.count() == nodes[id].members.size()) return id;
    throw std::logic_error("lattice without origin node");
}

IntersectionLattice intersection_lattice(const Arrangement& a, int max_codim)
{
    return with_engine(a, [&](const auto& e) { return bfs(a, e, max_codim, false); });
}

IntersectionLattice irreducible_lattice(const Arrangement& a, int max_codim)
{
    return with_engine(a, [&](const auto& e) { return bfs(a, e, max_codim, true); });
}

Bits flat_closure(const Arrangement& a, const std::vector<int>& hyperplanes)
{
    return with_engine(a, [&](const auto& e) {
        auto rows = e.p0;
        for (int h : hyperplanes) rows = e.cut(std::move(rows), h);
        return e.zero_columns(rows);
    });
}

int flat_codim(const Arrangement& a, const Bits& members)
{
    return with_engine(a, [&](const auto& e) { return e.rank(members.list()); });
}

std::vector<Vec> flat_basis(const Arrangement& a, const Bits& members)
{
    auto S = members.list();
    if (S.empty()) {
        std::vector<Vec> b;
        for (int i = 0; i < a.dim; ++i) {
            Vec v = zero_vec(a.field, a.dim);
            v[i] = Scalar(a.field, Rational(1));
            b.push_back(v);
        }
        return b;
    }
    ExactMatrix m(a.field, static_cast<int>(S.size()), a.dim);
    for (std::size_t r = 0; r < S.size(); ++r) {
        Vec f = functional(a, S[r]);
        for (int i = 0; i < a.dim; ++i) m.at(static_cast<int>(r), i) = f[i];
    }
    return m.nullspace();
}

std::vector<std::vector<int>> irreducible_components(const Arrangement& a, const Bits& members)
{
    return with_engine(a, [&](const auto& e) { return e.components(members.list()); });
}

std::vector<std::vector<int>> irreducible_components(const Arrangement& a, const LatticeNode& node)
{
    return irreducible_components(a, node.members);
}

std::vector<std::vector<int>> components_bruteforce(const Arrangement& a, const std::vector<int>& members)
{
    // finest splitting: repeatedly split a block whenever some bipartition is rank-additive
    auto rank = [&](const std::vector<int>& idx) {
        std::vector<Vec> vs;
        for (int i : idx) vs.push_back(a.normals[i]);
        return rank_of(vs, a.field, a.dim);
    };
    std::vector<std::vector<int>> done, todo{members};
    while (!todo.empty()) {
        auto b = todo.back();
        todo.pop_back();
        const int k = static_cast<int>(b.size());
        if (k > 20) throw std::invalid_argument("bipartition search limited to 20 hyperplanes");
        bool split = false;
        const int rb = rank(b);
        for (std::uint32_t mask = 1; mask < (1u << (k - 1)) && !split; ++mask) {
            std::vector<int> p, q;
            for (int i = 0; i < k; ++i) ((mask >> i) & 1 ? p : q).push_back(b[i]);
            if (rank(p) + rank(q) == rb) {
                todo.push_back(p);
                todo.push_back(q);
                split = true;
            }
        }
        if (!split) done.push_back(b);
    }
    for (auto& b : done) std::sort(b.begin(), b.end());
    std::sort(done.begin(), done.end());
    return done;
}

std::string type_guess(const LatticeNode& node)
{
    const int k = node.codim, m = node.members.count();
    if (!node.irreducible) {
        std::string s;
        for (const auto& c : node.components) s += (s.empty() ? "" : "x") + std::to_string(c.size());
        return "reducible(" + s + ")";
    }
    if (k == 1) return "A1";
    if (k == 2) {
        if (m == 3) return "A2";
        if (m == 4) return "B2";
        if (m == 6) return "G2";
        return "I2(" + std::to_string(m) + ")";
    }
    if (m == k * (k + 1) / 2) return "A" + std::to_string(k);
    if (k == 3 && m == 15) return "H3";
    if (k == 4 && m == 60) return "H4";
    if (k == 4 && m == 24) return "F4";
    if (k == 6 && m == 36) return "E6";
    if (k == 7 && m == 63) return "E7";
    if (k == 8 && m == 120) return "E8";
    if (m == k * k) return "B" + std::to_string(k);
    if (k >= 4 && m == k * (k - 1)) return "D" + std::to_string(k);
    return "X" + std::to_string(k) + "[" + std::to_string(m) + "]";
}

} // namespace dunkl
