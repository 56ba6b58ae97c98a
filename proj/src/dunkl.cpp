#include "dunkl/dunkl.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dunkl {

namespace {

std::string fingerprint(const Arrangement& a, int max_codim)
{
    std::size_t h = 0;
    auto mix = [&](std::size_t x) { h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
    for (const auto& v : a.normals)
        for (const auto& s : v) mix(s.hash());
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j) mix(a.gram.at(i, j).hash());
    std::ostringstream os;
    os << a.name << '|' << a.field.str() << '|' << a.dim << '|' << a.size() << '|' << max_codim << '|' << h;
    return os.str();
}

// lattices are shared between systems on the same arrangement
std::shared_ptr<const IntersectionLattice> shared_lattice(const Arrangement& a, int max_codim)
{
    static std::mutex mu;
    static std::map<std::string, std::shared_ptr<const IntersectionLattice>> cache;
    const std::string key = fingerprint(a, max_codim);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    auto lat = std::make_shared<const IntersectionLattice>(irreducible_lattice(a, max_codim));
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(key, lat).first->second;
}

Scalar scal(const FieldSpec& f, const Rational& r)
{
    return Scalar(f, r);
}

void require_positive(const std::vector<Rational>& mu)
{
    for (const auto& m : mu)
        if (m.sign() <= 0) throw std::invalid_argument("weights must be positive, got " + m.str());
}

// pairwise labels "i,j" of a Lauricella hyperplane
std::optional<std::pair<int, int>> parse_pair(const std::string& s)
{
    auto c = s.find(',');
    if (s.size() < 4 || s.front() != 'z' || c == std::string::npos) return std::nullopt;
    try {
        return std::make_pair(std::stoi(s.substr(1, c - 1)), std::stoi(s.substr(c + 2)));
    } catch (const std::logic_error&) {
        return std::nullopt;
    }
}

} // namespace

Rational DunklSystem::kappa0() const
{
    Rational s;
    for (const auto& k : kappa) s += k;
    return s / Rational(dim());
}

Rational DunklSystem::kappa_of(const Bits& members) const
{
    Rational s;
    for (int x : members.list()) s += kappa[x];
    return s / Rational(flat_codim(arrangement, members));
}

Rational DunklSystem::kappa_of(const LatticeNode& node) const
{
    Rational s;
    for (int x : node.member_list()) s += kappa[x];
    return s / Rational(node.codim);
}

FlatCertificate check_flat(const Arrangement& a, const std::vector<Rational>& kappa, const IntersectionLattice& irr)
{
    FlatCertificate cert;
    std::vector<Scalar> inv_len;
    for (const auto& n : a.normals) inv_len.push_back(a.inner(n, n).inverse());
    if (irr.by_codim.size() > 2)
        for (int id : irr.by_codim[2]) {
            const auto members = irr.node(id).member_list();
            Rational kl;
            for (int h : members) kl += kappa[h];
            kl /= Rational(2);
            // the operator sum_H kappa_H <., n_H> n_H / <n_H, n_H> must act as kappa_L on span(n_H)
            for (int x : members) {
                Vec w = scale(scal(a.field, -kl), a.normals[x]);
                for (int h : members) {
                    Scalar c = a.inner(a.normals[x], a.normals[h]) * inv_len[h] * kappa[h];
                    w = add(w, scale(c, a.normals[h]));
                }
                if (!is_zero(w)) {
                    cert.witness = irr.node(id).members;
                    return cert;
                }
            }
        }
    cert.verified = true;
    return cert;
}

FlatCertificate check_flat(const DunklSystem& sys)
{
    return check_flat(sys.arrangement, sys.kappa, sys.flats());
}

DunklSystem make_system(const Arrangement& a, const std::vector<Rational>& kappa)
{
    if (static_cast<int>(kappa.size()) != a.size()) throw std::invalid_argument("one weight per hyperplane required");
    DunklSystem s;
    std::vector<int> keep;
    for (int i = 0; i < a.size(); ++i)
        if (!kappa[i].is_zero()) keep.push_back(i);
    if (keep.empty()) throw std::invalid_argument("all weights vanish");
    s.dropped = a.size() - static_cast<int>(keep.size());
    if (s.dropped == 0) {
        s.arrangement = a;
        s.kappa = kappa;
    } else {
        std::vector<Vec> normals;
        std::vector<std::string> labels;
        for (int i : keep) {
            normals.push_back(a.normals[i]);
            labels.push_back(a.labels[i]);
            s.kappa.push_back(kappa[i]);
        }
        s.arrangement = make_arrangement(a.name + "/support", a.gram, normals, labels, false);
    }
    s.reducible_support = !s.arrangement.irreducible || rank_of(s.arrangement.normals, a.field, a.dim) < a.dim;
    s.lattice = shared_lattice(s.arrangement, s.reducible_support ? 2 : -1);
    s.flat = check_flat(s.arrangement, s.kappa, *s.lattice);
    return s;
}

DunklSystem lauricella_system(const std::vector<Rational>& mu)
{
    if (mu.size() < 2) throw std::invalid_argument("at least two weights required");
    require_positive(mu);
    const FieldSpec q = FieldSpec::Q();
    const int n = static_cast<int>(mu.size()) - 1;
    // basis f_k = eps_k - eps_0 of {sum phi = 0}, where <eps_i, eps_j> = delta_ij / mu_i;
    // eps_i - eps_j is then f_i - f_j with f_0 = 0
    ExactMatrix g(q, n, n);
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) g.at(k, l) = scal(q, mu[0].inverse() + (k == l ? mu[k + 1].inverse() : Rational()));
    auto eps = [&](int i) {
        Vec v = zero_vec(q, n);
        if (i > 0) v[i - 1] = scal(q, Rational(1));
        return v;
    };
    std::vector<Vec> normals;
    std::vector<std::string> labels;
    std::vector<Rational> kappa;
    for (int i = 0; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            normals.push_back(sub(eps(i), eps(j)));
            labels.push_back("z" + std::to_string(i) + ",z" + std::to_string(j));
            kappa.push_back(mu[i] + mu[j]);
        }
    Arrangement a = make_arrangement("A" + std::to_string(n) + "-lauricella", g, normals, labels);
    DunklSystem s = make_system(a, kappa);
    s.family = Family::lauricella;
    s.mu = mu;
    return s;
}

DunklSystem bn_system(const std::vector<Rational>& mu, const Rational& a)
{
    if (mu.size() < 2) throw std::invalid_argument("B_n needs n >= 2");
    require_positive(mu);
    const FieldSpec q = FieldSpec::Q();
    const int n = static_cast<int>(mu.size());
    ExactMatrix g(q, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g.at(i, j) = scal(q, i == j ? mu[i].inverse() : Rational());
    std::vector<Vec> normals;
    std::vector<std::string> labels;
    std::vector<Rational> kappa;
    // the roots e_i -+ e_j and e_i are the normals for the gram diag(1/mu)
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int e : {1, -1}) {
                Vec v = zero_vec(q, n);
                v[i] = scal(q, Rational(1));
                v[j] = scal(q, Rational(-e));
                normals.push_back(v);
                labels.push_back("z" + std::to_string(i + 1) + (e > 0 ? "-" : "+") + "z" + std::to_string(j + 1));
                kappa.push_back(mu[i] + mu[j]);
            }
    for (int i = 0; i < n; ++i) {
        Vec v = zero_vec(q, n);
        v[i] = scal(q, Rational(1));
        normals.push_back(v);
        labels.push_back("z" + std::to_string(i + 1));
        kappa.push_back(a + Rational(2) * mu[i]);
    }
    Arrangement arr = make_arrangement("B" + std::to_string(n), g, normals, labels);
    DunklSystem s = make_system(arr, kappa);
    s.family = Family::bn;
    s.mu = mu;
    s.a = a;
    return s;
}

DunklSystem reduce_at(const std::vector<Rational>& mu, int m)
{
    const int N = static_cast<int>(mu.size());
    if (m < 0 || m >= N) throw std::out_of_range("reduction index out of range");
    std::vector<Rational> rest;
    for (int i = 0; i < N; ++i) {
        if (i == m) continue;
        Rational s = mu[i] + mu[m];
        if (s < Rational(1, 2) || s >= Rational(1))
            throw std::invalid_argument("reduction at index " + std::to_string(m) + " needs 1/2 <= mu_i + mu_m < 1");
        rest.push_back(mu[i]);
    }
    // short weight 2(mu_m + mu_i) - 1 = a + 2 mu_i
    return bn_system(rest, Rational(2) * mu[m] - Rational(1));
}

std::vector<Rational> an_quotient(const DunklSystem& bn)
{
    if (bn.family != Family::bn) throw std::invalid_argument("not a B_n system");
    std::vector<Rational> out{(bn.a + Rational(1)) / Rational(2)};
    out.insert(out.end(), bn.mu.begin(), bn.mu.end());
    return out;
}

std::vector<int> orbit_index(const Arrangement& a)
{
    std::vector<int> idx(a.size(), 0);
    auto orbits = hyperplane_orbits(a);
    for (std::size_t o = 0; o < orbits.size(); ++o)
        for (int x : orbits[o]) idx[x] = static_cast<int>(o);
    return idx;
}

DunklSystem constant_kappa_system(const std::string& label, const std::vector<int>& q)
{
    if (!label_supported(label)) throw std::invalid_argument("unsupported group label: " + label);
    static std::mutex mu;
    static std::map<std::string, std::pair<Arrangement, std::vector<int>>> cache;
    std::pair<Arrangement, std::vector<int>> entry;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(label);
        if (it != cache.end()) entry = it->second;
    }
    if (entry.second.empty()) {
        Arrangement a = build_reflection_arrangement(label);
        auto orb = orbit_index(a);
        entry = {std::move(a), std::move(orb)};
        std::lock_guard<std::mutex> lock(mu);
        cache.emplace(label, entry);
    }
    const auto& [a, orb] = entry;
    const int norb = *std::max_element(orb.begin(), orb.end()) + 1;
    if (q.empty() || (q.size() != 1 && static_cast<int>(q.size()) != norb))
        throw std::invalid_argument(label + " needs " + std::to_string(norb) + " ramification indices");
    for (int x : q)
        if (x < 2) throw std::invalid_argument("ramification indices must be >= 2");
    std::vector<Rational> kappa;
    for (int x = 0; x < a.size(); ++x) {
        int qq = q.size() == 1 ? q[0] : q[orb[x]];
        kappa.push_back(Rational(1) - Rational(2, qq));
    }
    DunklSystem s = make_system(a, kappa);
    s.family = Family::coxeter;
    s.group = label;
    s.q = q.size() == 1 ? std::vector<int>(norb, q[0]) : q;
    return s;
}

ExponentLedger kappa_ledger(const DunklSystem& sys)
{
    if (!sys.flat.verified) throw std::logic_error("exponents need a verified flat system");
    ExponentLedger led;
    for (const auto& nd : sys.flats().nodes) {
        led.nodes.push_back(nd.members);
        led.codim.push_back(nd.codim);
        led.kappa.push_back(sys.kappa_of(nd));
    }
    return led;
}

DunklSystem longitudinal(const DunklSystem& sys, const Bits& L)
{
    const Arrangement& a = sys.arrangement;
    auto comps = irreducible_components(a, L);
    if (comps.size() != 1) throw std::invalid_argument("longitudinal system needs an irreducible flat");
    std::vector<Vec> basis = flat_basis(a, L);
    const int k = static_cast<int>(basis.size());
    if (k == 0) throw std::invalid_argument("longitudinal system of {0} is empty");
    const FieldSpec& f = a.field;
    ExactMatrix gl(f, k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) gl.at(i, j) = a.inner(basis[i], basis[j]);
    ExactMatrix gl_inv = gl.inverse();
    std::vector<Vec> normals;
    std::vector<Bits> traces;
    std::vector<std::string> labels;
    for (int h = 0; h < a.size(); ++h) {
        if (L.test(h)) continue;
        // normal of L cap H in L-coordinates: conj(G_L^{-1} w) with w_i = <b_i, n_H>
        Vec w;
        for (const auto& b : basis) w.push_back(a.inner(b, a.normals[h]));
        Vec n = gl_inv.apply(w);
        for (auto& x : n) x = x.conj();
        bool seen = false;
        for (const auto& m : normals)
            if (proportional(m, n)) {
                seen = true;
                break;
            }
        if (seen) continue;
        std::vector<int> gen = L.list();
        gen.push_back(h);
        traces.push_back(flat_closure(a, gen));
        normals.push_back(n);
        labels.push_back(a.labels[h]);
    }
    std::vector<Rational> kappa;
    for (const auto& M : traces) {
        // kappa of the intersection of the members of H_M - H_L
        std::vector<int> rest;
        for (int x : M.list())
            if (!L.test(x)) rest.push_back(x);
        kappa.push_back(sys.kappa_of(flat_closure(a, rest)));
    }
    Arrangement al = make_arrangement(a.name + "/L", gl, normals, labels, false);
    return make_system(al, kappa);
}

DunklSystem transversal(const DunklSystem& sys, const Bits& L)
{
    const Arrangement& a = sys.arrangement;
    const FieldSpec& f = a.field;
    const auto members = L.list();
    // greedy basis of span(n_H : H in H_L)
    std::vector<Vec> basis;
    for (int x : members) {
        auto trial = basis;
        trial.push_back(a.normals[x]);
        if (rank_of(trial, f, a.dim) > static_cast<int>(basis.size())) basis = trial;
    }
    const int k = static_cast<int>(basis.size());
    ExactMatrix gt(f, k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) gt.at(i, j) = a.inner(basis[i], basis[j]);
    // coordinates c of n with sum c_i b_i = n: solve B c = n through the gram
    ExactMatrix gt_inv = gt.inverse();
    std::vector<Vec> normals;
    std::vector<std::string> labels;
    std::vector<Rational> kappa;
    for (int x : members) {
        Vec w;
        for (const auto& b : basis) w.push_back(a.inner(a.normals[x], b));
        // <n, b_j> = sum_i c_i <b_i, b_j>, so c = (G^T)^{-1} w
        Vec c = gt_inv.transpose().apply(w);
        normals.push_back(c);
        labels.push_back(a.labels[x]);
        kappa.push_back(sys.kappa[x]);
    }
    Arrangement at = make_arrangement(a.name + "/transversal", gt, normals, labels, false);
    return make_system(at, kappa);
}

std::optional<std::vector<Rational>> lauricella_shape(const DunklSystem& sys)
{
    const Arrangement& a = sys.arrangement;
    std::map<std::pair<int, int>, Rational> k;
    int n = 0;
    for (int x = 0; x < a.size(); ++x) {
        auto p = parse_pair(a.labels[x]);
        if (!p) return std::nullopt;
        k[*p] = sys.kappa[x];
        n = std::max(n, p->second);
    }
    if (n < 2 || static_cast<int>(k.size()) != n * (n + 1) / 2) return std::nullopt;
    std::vector<Rational> mu(n + 1);
    mu[0] = (k[{0, 1}] + k[{0, 2}] - k[{1, 2}]) / Rational(2);
    for (int i = 1; i <= n; ++i) mu[i] = k[{0, i}] - mu[0];
    for (const auto& [p, v] : k)
        if (mu[p.first] + mu[p.second] != v) return std::nullopt;
    return mu;
}

nlohmann::json system_to_json(const DunklSystem& sys)
{
    nlohmann::json j;
    j["arrangement"] = arrangement_to_json(sys.arrangement);
    std::vector<std::string> k;
    for (const auto& x : sys.kappa) k.push_back(x.str());
    j["kappa"] = k;
    j["kappa0"] = sys.kappa0().str();
    j["flat"] = sys.flat.verified;
    if (sys.flat.witness) j["witness"] = sys.flat.witness->list();
    j["dropped"] = sys.dropped;
    j["reducible_support"] = sys.reducible_support;
    return j;
}

} // namespace dunkl
