#include "dunkl/schwarz.hpp"

#include <algorithm>
#include <bit>
#include <complex>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <set>
#include <stdexcept>

namespace dunkl {

namespace {

bool root_in_field(const FieldSpec& f, std::int64_t p)
{
    if (p <= 2) return true;
    if (f.kind != FieldSpec::Kind::cyclotomic) return false;
    return std::lcm<std::int64_t>(2, f.param) % p == 0;
}

// a primitive p-th root of unity in f (root_in_field must hold)
Scalar root_of_unity(const FieldSpec& f, std::int64_t p)
{
    if (p == 1) return Scalar(f, Rational(1));
    if (p == 2) return Scalar(f, Rational(-1));
    const std::int64_t n = f.param;
    if (n % p == 0) return Scalar::gen_power(f, n / p);
    // n odd: exp(pi i k / n) = -zeta_n^((k - n) / 2) with k = 2n / p odd
    const std::int64_t k = 2 * n / p;
    std::int64_t e = ((k - n) / 2) % n;
    if (e < 0) e += n;
    return -Scalar::gen_power(f, e);
}

// coefficients c with pi_L(v) = sum c_b basis_b, from <v, b_a> = sum_b c_b <b_b, b_a>
struct Projector {
    std::vector<Vec> basis;
    ExactMatrix minv;

    Vec apply(const Arrangement& a, const Vec& v) const
    {
        const int k = static_cast<int>(basis.size());
        Vec out = zero_vec(a.field, a.dim);
        if (k == 0) return out;
        Vec r(k, Scalar(a.field));
        for (int i = 0; i < k; ++i) r[i] = a.inner(v, basis[i]);
        Vec c = minv.apply(r);
        for (int b = 0; b < k; ++b) out = add(out, scale(c[b], basis[b]));
        return out;
    }
};

Projector projector_onto(const Arrangement& a, const Bits& L)
{
    Projector pr;
    pr.basis = flat_basis(a, L);
    const int k = static_cast<int>(pr.basis.size());
    if (k == 0) return pr;
    ExactMatrix m(a.field, k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) m.at(i, j) = a.inner(pr.basis[j], pr.basis[i]);
    pr.minv = m.inverse();
    return pr;
}

bool orthogonal_to_all(const Arrangement& a, int x, const Bits& L)
{
    for (int y : L.list())
        if (!a.inner(a.normals[x], a.normals[y]).is_zero()) return false;
    return true;
}

// reflections in mirrors that permute the hyperplanes, per support arrangement
const std::vector<std::vector<int>>& mirror_symmetries(const DunklSystem& sys)
{
    static std::mutex mu;
    static std::map<const IntersectionLattice*, std::vector<std::vector<int>>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(sys.lattice.get());
    if (it != cache.end()) return it->second;
    const Arrangement& a = sys.arrangement;
    std::vector<std::vector<int>> perms;
    for (int k = 0; k < a.size(); ++k) {
        std::vector<int> perm(a.size());
        bool ok = true;
        for (int x = 0; x < a.size() && ok; ++x) {
            auto y = a.find(reflect(a, k, a.normals[x]));
            if (y)
                perm[x] = *y;
            else
                ok = false;
        }
        if (ok) perms.push_back(std::move(perm));
    }
    return cache.emplace(sys.lattice.get(), std::move(perms)).first->second;
}

Bits permute(const Bits& b, const std::vector<int>& perm)
{
    Bits out(b.size());
    for (int x : b.list()) out.set(perm[x]);
    return out;
}

// orbits of the given lattice nodes under the weight-preserving mirror reflections
std::vector<std::vector<int>> node_orbits(const DunklSystem& sys, const std::vector<int>& nodes)
{
    const auto& lat = sys.flats();
    std::vector<const std::vector<int>*> gens;
    for (const auto& perm : mirror_symmetries(sys)) {
        bool keeps = true;
        for (std::size_t x = 0; x < perm.size() && keeps; ++x) keeps = sys.kappa[x] == sys.kappa[perm[x]];
        if (keeps) gens.push_back(&perm);
    }
    std::unordered_map<int, int> pos;
    for (std::size_t i = 0; i < nodes.size(); ++i) pos[nodes[i]] = static_cast<int>(i);
    std::vector<int> parent(nodes.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto findp = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (const auto* g : gens) {
            auto j = lat.find(permute(lat.node(nodes[i]).members, *g));
            if (!j) continue;
            auto p = pos.find(*j);
            if (p == pos.end()) continue;
            int ra = findp(static_cast<int>(i)), rb = findp(p->second);
            if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
        }
    std::map<int, std::vector<int>> blocks;
    for (std::size_t i = 0; i < nodes.size(); ++i) blocks[findp(static_cast<int>(i))].push_back(nodes[i]);
    std::vector<std::vector<int>> out;
    for (auto& [r, b] : blocks) out.push_back(std::move(b));
    return out;
}

bool in_scope(SchwarzScope scope, const LatticeNode& node, const Rational& k, int dim)
{
    switch (scope) {
    case SchwarzScope::codim1:
        return node.codim == 1;
    case SchwarzScope::thm62:
        return (node.codim == 1 && k < Rational(1)) || (dim - node.codim == 1 && k > Rational(1));
    case SchwarzScope::full:
        return true;
    }
    return false;
}

bool listed(SchwarzScope scope, const LatticeNode& node, int dim)
{
    if (scope == SchwarzScope::codim1) return node.codim == 1;
    if (scope == SchwarzScope::thm62) return node.codim == 1 || dim - node.codim == 1;
    return node.codim >= 1;
}

} // namespace

SchwarzFraction schwarz_fraction(const Rational& kappa_L)
{
    Rational d = Rational(1) - kappa_L;
    if (d.is_zero()) return {};
    return {d.num(), d.den()};
}

bool SchwarzLedger::passed() const
{
    return first_failure() == nullptr;
}

const SchwarzEntry* SchwarzLedger::first_failure() const
{
    for (const auto& e : entries)
        if (e.status == SchwarzStatus::fail) return &e;
    return nullptr;
}

bool rotation_preserves_system(const DunklSystem& sys, const Bits& L, std::int64_t p)
{
    if (p == 0) throw std::invalid_argument("rotation order must be nonzero");
    p = std::abs(p);
    if (p == 1) return true;
    const Arrangement& a = sys.arrangement;
    if (!root_in_field(a.field, p)) {
        // g n = pi_L n + zeta pi_perp n lies on a K-rational line only if one part vanishes
        for (int x = 0; x < a.size(); ++x)
            if (!L.test(x) && !orthogonal_to_all(a, x, L)) return false;
        return true;
    }
    const Scalar z = root_of_unity(a.field, p);
    const Scalar one_minus = Scalar(a.field, Rational(1)) - z;
    Projector pr = projector_onto(a, L);
    for (int x = 0; x < a.size(); ++x) {
        const Vec& n = a.normals[x];
        Vec g = add(scale(z, n), scale(one_minus, pr.apply(a, n)));
        auto y = a.find(g);
        if (!y || sys.kappa[*y] != sys.kappa[x]) return false;
    }
    return true;
}

Eigen::MatrixXcd schwarz_rotation(const DunklSystem& sys, const Bits& L, std::int64_t p)
{
    const Arrangement& a = sys.arrangement;
    const int n = a.dim;
    p = std::abs(p);
    const std::complex<double> z = std::polar(1.0, 2 * std::numbers::pi / static_cast<double>(p));
    auto basis = flat_basis(a, L);
    Eigen::MatrixXcd g = z * Eigen::MatrixXcd::Identity(n, n);
    if (basis.empty()) return g;
    const int k = static_cast<int>(basis.size());
    Eigen::MatrixXcd b(n, k);
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < n; ++i) b(i, j) = basis[j][i].numeric();
    Eigen::MatrixXcd gt = a.gram.numeric().transpose();
    Eigen::MatrixXcd pi = b * (b.adjoint() * gt * b).inverse() * b.adjoint() * gt;
    return g + (1.0 - z) * pi;
}

std::vector<int> lauricella_indices(const DunklSystem& sys, const Bits& node)
{
    std::set<int> out;
    for (int x : node.list()) {
        const auto& l = sys.arrangement.labels.at(x);
        auto c = l.find(',');
        if (l.empty() || l[0] != 'z' || c == std::string::npos) throw std::invalid_argument("not a Lauricella label: " + l);
        out.insert(std::stoi(l.substr(1, c - 1)));
        out.insert(std::stoi(l.substr(c + 2)));
    }
    return {out.begin(), out.end()};
}

bool lauricella_pair_schwarz(const Rational& mu_i, const Rational& mu_j)
{
    Rational d = Rational(1) - mu_i - mu_j;
    if (d.sign() <= 0) return false;
    return d.num() == 1 || (d.num() == 2 && mu_i == mu_j);
}

bool lauricella_node_schwarz(const std::vector<Rational>& mu, const std::vector<int>& I)
{
    Rational k;
    for (int i : I) k += mu.at(i);
    SchwarzFraction f = schwarz_fraction(k);
    if (f.p == 0 || std::abs(f.p) == 1) return true;
    // only the transposition of two equal weights survives; larger nodes have
    // a hyperplane z_a = z_b (a in I, b outside) whose image involves three coordinates
    if (I.size() == mu.size()) return true;
    return I.size() == 2 && std::abs(f.p) == 2 && mu[I[0]] == mu[I[1]];
}

bool reduction_schwarz(const std::vector<Rational>& mu, int m)
{
    const int n1 = static_cast<int>(mu.size());
    if (n1 > 30) throw std::invalid_argument("too many weights");
    for (std::uint32_t s = 0; s < (1u << n1); ++s) {
        if (!((s >> m) & 1)) continue;
        const int sz = std::popcount(s);
        if (sz < 2 || sz >= n1) continue;
        Rational d(1);
        for (int i = 0; i < n1; ++i)
            if ((s >> i) & 1) d -= mu[i];
        if (!d.is_zero() && d.num() != 1 && d.num() != -1) return false;
    }
    return true;
}

SchwarzLedger check_schwarz(const DunklSystem& sys, SchwarzScope scope, bool closed_forms)
{
    SchwarzLedger led;
    led.scope = scope;
    const auto& lat = sys.flats();
    const int dim = sys.dim();
    const bool lauricella = closed_forms && sys.family == Family::lauricella && sys.dropped == 0;
    std::vector<int> nodes;
    for (std::size_t k = 1; k < lat.by_codim.size(); ++k)
        for (int i : lat.by_codim[k])
            if (listed(scope, lat.node(i), dim)) nodes.push_back(i);
    for (const auto& orbit : node_orbits(sys, nodes)) {
        const LatticeNode& node = lat.node(orbit.front());
        SchwarzEntry e;
        e.node = node.members;
        e.codim = node.codim;
        e.orbit_size = static_cast<int>(orbit.size());
        e.kappa = sys.kappa_of(node);
        e.fraction = schwarz_fraction(e.kappa);
        const bool origin = node.codim == dim && node.members.count() == sys.arrangement.size();
        if (!in_scope(scope, node, e.kappa, dim)) {
            e.status = SchwarzStatus::not_required;
        } else if (e.fraction.p == 0) {
            e.status = SchwarzStatus::pass;
            e.reason = "kappa = 1";
        } else if (origin) {
            e.status = SchwarzStatus::pass;
            e.reason = "origin";
        } else if (std::abs(e.fraction.p) == 1) {
            e.status = SchwarzStatus::pass;
        } else {
            bool ok = lauricella ? lauricella_node_schwarz(sys.mu, lauricella_indices(sys, node.members))
                                 : rotation_preserves_system(sys, node.members, e.fraction.p);
            e.status = ok ? SchwarzStatus::pass : SchwarzStatus::fail;
            if (!ok) e.reason = "rotation of order " + std::to_string(std::abs(e.fraction.p)) + " is not a symmetry";
        }
        led.entries.push_back(std::move(e));
    }
    return led;
}

std::string scope_name(SchwarzScope s)
{
    switch (s) {
    case SchwarzScope::codim1:
        return "codim1";
    case SchwarzScope::thm62:
        return "thm62-hypotheses";
    case SchwarzScope::full:
        return "full";
    }
    return "";
}

std::string status_name(SchwarzStatus s)
{
    switch (s) {
    case SchwarzStatus::pass:
        return "pass";
    case SchwarzStatus::fail:
        return "fail";
    case SchwarzStatus::not_required:
        return "not-required";
    }
    return "";
}

nlohmann::json ledger_to_json(const DunklSystem& sys, const SchwarzLedger& ledger)
{
    nlohmann::json out = nlohmann::json::array();
    const auto& lat = sys.flats();
    for (const auto& e : ledger.entries) {
        nlohmann::json j;
        auto idx = lat.find(e.node);
        j["node"] = e.node.list();
        j["type"] = idx ? type_guess(lat.node(*idx)) : std::string("?");
        j["codim"] = e.codim;
        j["orbit_size"] = e.orbit_size;
        j["kappa"] = e.kappa.str();
        j["p"] = e.fraction.p;
        j["q"] = e.fraction.q;
        j["status"] = status_name(e.status);
        if (!e.reason.empty()) j["reason"] = e.reason;
        out.push_back(std::move(j));
    }
    return out;
}

} // namespace dunkl
