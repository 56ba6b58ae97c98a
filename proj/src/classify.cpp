#include "dunkl/classify.hpp"

#include "dunkl/forms.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <deque>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace dunkl {

namespace {

const Rational kOne(1);

std::string base_label(const DunklSystem& sys)
{
    if (sys.family == Family::coxeter) return sys.group;
    std::string n = sys.arrangement.name;
    auto s = n.find('/');
    if (s != std::string::npos) n = n.substr(0, s);
    return label_supported(n) ? n : "";
}

std::vector<double> to_doubles(const std::vector<Rational>& v)
{
    std::vector<double> out;
    for (const auto& x : v) out.push_back(x.to_double());
    return out;
}

bool all_equal(const std::vector<Rational>& v)
{
    return std::all_of(v.begin(), v.end(), [&](const Rational& x) { return x == v.front(); });
}

Signature coxeter_signature(const DunklSystem& sys, const CoxeterDatum& cd, const std::vector<Rational>& w)
{
    const int n = cd.rank;
    const Rational k0 = sys.kappa0();
    if (!cd.real) {
        // primitive complex groups: the form degenerates exactly at the co-exponents
        if (k0 < kOne) return {n, 0, 0};
        if (k0 == kOne) return {n - 1, 1, 0};
        if (k0 < Rational(cd.coexponents.at(1))) return {n - 1, 0, 1};
        throw std::domain_error("kappa0 beyond the hyperbolic exponent of " + cd.label);
    }
    Eigen::MatrixXd h = hecke_gram(cd, to_doubles(w));
    return hermitian_signature(Eigen::MatrixXcd(h.cast<std::complex<double>>()), 1e-9);
}

// admissibility of kappa0 > 1, reason on failure
std::optional<std::string> hyperbolic_inadmissible(const DunklSystem& sys)
{
    const Rational k0 = sys.kappa0();
    if (sys.family == Family::lauricella || (sys.family == Family::generic && lauricella_shape(sys))) {
        auto mu = sys.family == Family::lauricella ? sys.mu : *lauricella_shape(sys);
        for (const auto& m : mu)
            if (m.sign() <= 0 || m >= kOne) return "mu outside (0,1)";
        if (k0 >= Rational(2)) return "kappa0 >= 2";
        return std::nullopt;
    }
    const std::string label = base_label(sys);
    if (label.empty()) return "no admissibility criterion for this arrangement";
    CoxeterDatum cd = coxeter_datum(label);
    auto w = class_weights(sys, cd);
    if (!w) return "weights are not invariant";
    if (!cd.real) {
        if (k0 >= Rational(cd.coexponents.at(1))) return "kappa0 >= co-exponent m2*";
        return std::nullopt;
    }
    if (all_equal(*w)) {
        if (k0 >= Rational(cd.exponents.at(1))) return "kappa0 >= m2";
        return std::nullopt;
    }
    if (!ray_admissible(cd, to_doubles(*w))) return "hermitian form degenerates along the ray";
    return std::nullopt;
}

struct MatKey {
    std::vector<std::int64_t> v;
    friend bool operator==(const MatKey&, const MatKey&) = default;
};
struct MatKeyHash {
    std::size_t operator()(const MatKey& k) const
    {
        std::size_t h = 0;
        for (auto x : k.v) h ^= std::hash<std::int64_t>()(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

MatKey key_of(const Eigen::MatrixXcd& m)
{
    MatKey k;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            k.v.push_back(std::llround(m(i, j).real() * 1e6));
            k.v.push_back(std::llround(m(i, j).imag() * 1e6));
        }
    return k;
}

std::vector<Eigen::MatrixXcd> close_group(const std::vector<Eigen::MatrixXcd>& gens, int n, std::int64_t max_order)
{
    std::vector<Eigen::MatrixXcd> elems;
    std::unordered_set<MatKey, MatKeyHash> seen;
    Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(n, n);
    elems.push_back(id);
    seen.insert(key_of(id));
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (const auto& g : gens) {
            Eigen::MatrixXcd h = g * elems[i];
            if (seen.insert(key_of(h)).second) {
                elems.push_back(h);
                if (static_cast<std::int64_t>(elems.size()) > max_order)
                    throw std::domain_error("Schwarz symmetry group exceeds " + std::to_string(max_order) + " elements");
            }
        }
    return elems;
}

} // namespace

std::string kind_name(Kind k)
{
    switch (k) {
    case Kind::elliptic:
        return "elliptic";
    case Kind::parabolic:
        return "parabolic";
    case Kind::hyperbolic_cocompact:
        return "hyperbolic-cocompact";
    case Kind::hyperbolic_cofinite:
        return "hyperbolic-cofinite";
    case Kind::not_admissible:
        return "not-admissible";
    case Kind::schwarz_fail:
        return "schwarz-fail";
    case Kind::reducible_support:
        return "reducible-support";
    }
    return "";
}

bool is_admissible_kind(Kind k)
{
    return k == Kind::elliptic || k == Kind::parabolic || k == Kind::hyperbolic_cocompact ||
           k == Kind::hyperbolic_cofinite;
}

std::optional<std::vector<Rational>> class_weights(const DunklSystem& sys, const CoxeterDatum& cd)
{
    if (!cd.real) {
        if (sys.dropped > 0 || sys.kappa.empty() || !all_equal(sys.kappa)) return std::nullopt;
        return std::vector<Rational>{sys.kappa.front()};
    }
    RootData rd = root_data(cd.label);
    auto cls = reflection_classes(cd);
    const int nc = class_count(cd);
    std::vector<std::optional<Rational>> w(nc);
    for (int i = 0; i < cd.rank; ++i) {
        auto x = sys.arrangement.find(rd.generators[i]);
        Rational k = x ? sys.kappa[*x] : Rational(0);
        if (w[cls[i]] && *w[cls[i]] != k) return std::nullopt;
        w[cls[i]] = k;
    }
    std::vector<Rational> out;
    for (const auto& x : w) out.push_back(*x);
    // the support must carry exactly these weights on the class counts
    auto counts = class_mirror_counts(cd);
    Rational want_sum;
    int want_size = 0;
    for (int c = 0; c < nc; ++c) {
        want_sum += Rational(counts[c]) * out[c];
        if (!out[c].is_zero()) want_size += counts[c];
    }
    Rational sum;
    for (const auto& k : sys.kappa) {
        sum += k;
        if (std::find(out.begin(), out.end(), k) == out.end()) return std::nullopt;
    }
    if (sum != want_sum || sys.arrangement.size() != want_size) return std::nullopt;
    return out;
}

Signature flat_form_signature(const DunklSystem& sys)
{
    const int n = sys.dim();
    const Rational k0 = sys.kappa0();
    if (n == 1) {
        if (k0 < kOne) return {1, 0, 0};
        if (k0 == kOne) return {0, 1, 0};
        return {0, 0, 1};
    }
    if (sys.family == Family::lauricella) return lauricella_signature(sys.mu);
    if (sys.family == Family::bn) return lauricella_signature(an_quotient(sys));
    if (sys.family == Family::generic)
        if (auto mu = lauricella_shape(sys)) return lauricella_signature(*mu);
    const std::string label = base_label(sys);
    if (label.empty()) throw std::domain_error("no flat hermitian form known for " + sys.arrangement.name);
    CoxeterDatum cd = coxeter_datum(label);
    auto w = class_weights(sys, cd);
    if (!w) throw std::domain_error("weights on " + label + " are not invariant");
    return coxeter_signature(sys, cd, *w);
}

bool cocompact(const DunklSystem& sys)
{
    if (sys.family == Family::bn) return cocompact(lauricella_system(an_quotient(sys)));
    const auto& lat = sys.flats();
    for (std::size_t c = 1; c < lat.by_codim.size(); ++c)
        for (int i : lat.by_codim[c]) {
            const LatticeNode& nd = lat.node(i);
            if (nd.codim >= sys.dim()) continue;
            if (sys.kappa_of(nd) == kOne) return false;
        }
    return true;
}

DualDegrees scale_degrees(const std::vector<std::int64_t>& group_degrees, const Rational& kappa0)
{
    const Rational s = kOne - kappa0;
    if (s.sign() <= 0) throw std::domain_error("dual degrees need kappa0 < 1");
    DualDegrees d;
    d.order = 1;
    for (auto g : group_degrees) {
        Rational x = Rational(g) / s;
        if (!x.is_integer()) throw std::domain_error("degree " + std::to_string(g) + " / (1 - kappa0) = " + x.str() + " is not an integer");
        d.degrees.push_back(x.num());
        d.order *= x.num();
    }
    std::sort(d.degrees.begin(), d.degrees.end());
    return d;
}

std::vector<std::int64_t> schwarz_group_degrees(const DunklSystem& sys, std::int64_t max_order)
{
    const int n = sys.dim();
    const auto& lat = sys.flats();
    const bool closed = sys.family == Family::lauricella && sys.dropped == 0;
    std::vector<Eigen::MatrixXcd> gens;
    for (const auto& nd : lat.nodes) {
        if (nd.codim == 0) continue;
        SchwarzFraction f = schwarz_fraction(sys.kappa_of(nd));
        if (std::abs(f.p) < 2) continue;
        const bool origin = nd.codim == n;
        bool ok = origin || (closed ? lauricella_node_schwarz(sys.mu, lauricella_indices(sys, nd.members))
                                    : rotation_preserves_system(sys, nd.members, f.p));
        if (ok) gens.push_back(schwarz_rotation(sys, nd.members, f.p));
    }
    auto elems = close_group(gens, n, max_order);
    const std::int64_t order = static_cast<std::int64_t>(elems.size());
    // Molien series sum_g 1/det(1 - t g) = prod_i 1/(1 - t^{d_i}), read off degree by degree
    const int D = static_cast<int>(std::min<std::int64_t>(order, 400));
    std::vector<std::complex<double>> mol(D + 1, 0.0);
    for (const auto& g : elems) {
        Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(g, false);
        // complete homogeneous sums h_k of the eigenvalues
        std::vector<std::complex<double>> h(D + 1, 0.0);
        h[0] = 1.0;
        for (int j = 0; j < n; ++j) {
            std::complex<double> l = es.eigenvalues()(j);
            for (int k = 1; k <= D; ++k) h[k] += l * h[k - 1];
        }
        for (int k = 0; k <= D; ++k) mol[k] += h[k];
    }
    std::vector<double> rem(D + 1);
    for (int k = 0; k <= D; ++k) rem[k] = mol[k].real() / static_cast<double>(order);
    std::vector<std::int64_t> degrees;
    for (int k = 1; k <= D && static_cast<int>(degrees.size()) < n; ++k) {
        const double c = rem[k];
        const std::int64_t r = std::llround(c);
        if (std::abs(c - static_cast<double>(r)) > 1e-6 || r < 0)
            throw std::domain_error("Molien series of the Schwarz group has non-integral coefficient");
        for (std::int64_t t = 0; t < r; ++t) {
            degrees.push_back(k);
            for (int j = D; j >= k; --j) rem[j] -= rem[j - k];
        }
    }
    std::int64_t prod = 1;
    for (auto d : degrees) prod *= d;
    if (static_cast<int>(degrees.size()) != n || prod != order)
        throw std::domain_error("Schwarz symmetry group is not generated by reflections");
    return degrees;
}

DualDegrees dual_degrees(const DunklSystem& sys)
{
    return scale_degrees(schwarz_group_degrees(sys), sys.kappa0());
}

std::vector<Relation> presentation(const DunklSystem& sys, const SchwarzLedger& ledger)
{
    std::vector<Relation> out;
    const auto& lat = sys.flats();
    const int n = sys.dim();
    const bool hyperbolic = sys.kappa0() > kOne;
    auto add = [&](const SchwarzEntry& e) {
        Relation r;
        r.node = e.node;
        auto idx = lat.find(e.node);
        r.type = idx ? type_guess(lat.node(*idx)) : "?";
        r.orbit_size = e.orbit_size;
        r.kappa = e.kappa;
        r.q = e.fraction.q;
        out.push_back(std::move(r));
    };
    for (const auto& e : ledger.entries)
        if (e.codim == 1) add(e);
    if (!hyperbolic) return out;
    for (const auto& e : ledger.entries)
        if (e.codim > 1 && n - e.codim == 1 && e.kappa > kOne) add(e);
    SchwarzEntry origin;
    origin.node = Bits(sys.arrangement.size());
    for (int x = 0; x < sys.arrangement.size(); ++x) origin.node.set(x);
    origin.codim = n;
    origin.kappa = sys.kappa0();
    origin.fraction = schwarz_fraction(origin.kappa);
    if (n > 1) add(origin);
    return out;
}

ClassificationReport classify(const DunklSystem& sys)
{
    ClassificationReport r;
    r.kappa0 = sys.kappa0();
    if (sys.family == Family::bn) {
        std::vector<Rational> mu;
        try {
            mu = an_quotient(sys);
            for (const auto& m : mu)
                if (m.sign() <= 0) throw std::invalid_argument("quotient weight " + m.str() + " is not positive");
        } catch (const std::exception& e) {
            r.kind = Kind::not_admissible;
            r.reason = std::string("A_n quotient: ") + e.what();
            return r;
        }
        ClassificationReport q = classify(lauricella_system(mu));
        q.reason = q.reason.empty() ? "classified through the A_n quotient" : q.reason;
        return q;
    }
    if (!sys.flat.verified) {
        r.kind = Kind::not_admissible;
        r.reason = "not flat";
        r.witness = sys.flat.witness;
        return r;
    }
    if (sys.reducible_support) {
        r.kind = Kind::reducible_support;
        r.reason = "support of the weights is reducible";
        return r;
    }
    for (const auto& k : sys.kappa)
        if (k.sign() <= 0 || k >= kOne) {
            r.kind = Kind::not_admissible;
            r.reason = "kappa_H = " + k.str() + " outside (0,1)";
            return r;
        }
    try {
        r.signature = flat_form_signature(sys);
    } catch (const std::domain_error& e) {
        r.kind = Kind::not_admissible;
        r.reason = e.what();
        return r;
    }
    const int n = sys.dim();
    auto fail_schwarz = [&](const SchwarzLedger& led) {
        const SchwarzEntry* bad = led.first_failure();
        r.kind = Kind::schwarz_fail;
        r.witness = bad->node;
        auto idx = sys.flats().find(bad->node);
        r.witness_type = idx ? type_guess(sys.flats().node(*idx)) : "?";
        r.reason = bad->reason;
    };
    if (r.kappa0 < kOne) {
        if (!(r.signature == Signature{n, 0, 0})) {
            r.kind = Kind::not_admissible;
            r.reason = "form not positive definite";
            return r;
        }
        r.schwarz = check_schwarz(sys, SchwarzScope::codim1);
        if (!r.schwarz.passed()) {
            fail_schwarz(r.schwarz);
            return r;
        }
        r.kind = Kind::elliptic;
        r.presentation = presentation(sys, r.schwarz);
        try {
            r.group_degrees = schwarz_group_degrees(sys);
            DualDegrees d = scale_degrees(r.group_degrees, r.kappa0);
            r.dual_degrees = d.degrees;
            r.dual_order = d.order;
        } catch (const std::domain_error& e) {
            r.dual_error = e.what();
        }
        return r;
    }
    if (r.kappa0 == kOne) {
        if (!(r.signature == Signature{n - 1, 1, 0})) {
            r.kind = Kind::not_admissible;
            r.reason = "form not parabolic";
            return r;
        }
        r.schwarz = check_schwarz(sys, SchwarzScope::codim1);
        if (!r.schwarz.passed()) {
            fail_schwarz(r.schwarz);
            return r;
        }
        r.kind = Kind::parabolic;
        r.presentation = presentation(sys, r.schwarz);
        return r;
    }
    if (n == 1) {
        r.kind = Kind::not_admissible;
        r.reason = "kappa0 > 1 in dimension one";
        return r;
    }
    if (auto why = hyperbolic_inadmissible(sys)) {
        r.kind = Kind::not_admissible;
        r.reason = *why;
        return r;
    }
    if (!(r.signature == Signature{n - 1, 0, 1})) {
        r.kind = Kind::not_admissible;
        r.reason = "form not hyperbolic";
        return r;
    }
    r.schwarz = check_schwarz(sys, SchwarzScope::thm62);
    if (!r.schwarz.passed()) {
        fail_schwarz(r.schwarz);
        return r;
    }
    r.cocompact = cocompact(sys);
    r.kind = r.cocompact ? Kind::hyperbolic_cocompact : Kind::hyperbolic_cofinite;
    r.presentation = presentation(sys, r.schwarz);
    return r;
}

nlohmann::json report_to_json(const DunklSystem& sys, const ClassificationReport& r)
{
    // ledgers of B_n systems refer to the nodes of the quotient
    if (sys.family == Family::bn && r.kind != Kind::not_admissible)
        return report_to_json(lauricella_system(an_quotient(sys)), r);
    nlohmann::json j;
    j["kind"] = kind_name(r.kind);
    if (!r.reason.empty()) j["reason"] = r.reason;
    if (r.witness) {
        j["witness"] = {{"node", r.witness->list()}, {"type", r.witness_type}};
    }
    j["kappa0"] = r.kappa0.str();
    j["signature"] = {r.signature.pos, r.signature.null, r.signature.neg};
    j["cocompact"] = r.cocompact;
    j["schwarz_scope"] = scope_name(r.schwarz.scope);
    j["schwarz"] = ledger_to_json(sys, r.schwarz);
    if (r.dual_degrees) {
        j["dual"] = {{"degrees", *r.dual_degrees}, {"order", *r.dual_order}, {"group_degrees", r.group_degrees}};
    } else if (!r.dual_error.empty()) {
        j["dual"] = {{"error", r.dual_error}};
    }
    nlohmann::json pres = nlohmann::json::array();
    for (const auto& rel : r.presentation)
        pres.push_back({{"orbit", rel.type}, {"node", rel.node.list()}, {"size", rel.orbit_size}, {"kappa", rel.kappa.str()}, {"q", rel.q}});
    j["presentation"] = pres;
    return j;
}

} // namespace dunkl
