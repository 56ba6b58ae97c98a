#include "dunkl/cli.hpp"

#include "dunkl/classify.hpp"
#include "dunkl/enumerate.hpp"
#include "dunkl/forms.hpp"
#include "dunkl/numlab.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace dunkl::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else if (c != ' ') {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::vector<Rational> parse_rationals(const std::string& s)
{
    std::vector<Rational> out;
    for (const auto& t : split(s, ',')) {
        if (t.empty()) throw UsageError("empty entry in '" + s + "'");
        out.push_back(Rational::parse(t));
    }
    return out;
}

std::vector<int> parse_ints(const std::string& s)
{
    std::vector<int> out;
    for (const auto& r : parse_rationals(s)) {
        if (!r.is_integer()) throw UsageError("not an integer: " + r.str());
        out.push_back(static_cast<int>(r.floor()));
    }
    return out;
}

// rationals "p/q" or decimals
std::vector<double> parse_reals(const std::string& s)
{
    std::vector<double> out;
    for (const auto& t : split(s, ',')) {
        if (t.find('/') != std::string::npos) {
            out.push_back(Rational::parse(t).to_double());
            continue;
        }
        std::size_t used = 0;
        double v = 0;
        try {
            v = std::stod(t, &used);
        } catch (const std::logic_error&) {
            used = 0;
        }
        if (t.empty() || used != t.size()) throw UsageError("not a number: '" + t + "'");
        out.push_back(v);
    }
    return out;
}

std::vector<std::string> rational_strings(const std::vector<Rational>& v)
{
    std::vector<std::string> out;
    for (const auto& r : v) out.push_back(r.str());
    return out;
}

void round_floats(json& j)
{
    if (j.is_number_float()) {
        j = std::stod(format_double(j.get<double>()));
    } else if (j.is_structured()) {
        for (auto& x : j) round_floats(x);
    }
}

void emit(std::ostream& out, json j)
{
    round_floats(j);
    out << j.dump(2) << "\n";
}

json complex_json(std::complex<double> c)
{
    return json::array({c.real(), c.imag()});
}

std::string read_file(const std::string& path)
{
    std::ifstream f(path);
    if (!f) throw UsageError("cannot read " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

bool refused_kind(Kind k)
{
    return !is_admissible_kind(k);
}

// ------------------------------------------------------------ system flags

struct SystemArgs {
    std::string lauricella, bn, group, q, arrangement, kappa;
};

void add_system_options(CLI::App* sub, SystemArgs& a, bool with_kappa)
{
    sub->add_option("--lauricella", a.lauricella, "weights mu_0,...,mu_n of the A_n system");
    sub->add_option("--bn", a.bn, "B_n weights mu_1,...,mu_n:a=A");
    sub->add_option("--coxeter,--group", a.group, "reflection group label (A3, H3, F4, ST24, ...)");
    sub->add_option("--q", a.q, "ramification index per mirror orbit, kappa = 1 - 2/q");
    sub->add_option("--arrangement", a.arrangement, "arrangement JSON file");
    if (with_kappa) sub->add_option("--kappa", a.kappa, "weights for --arrangement, one per hyperplane or a single value");
}

DunklSystem build_system(const SystemArgs& a)
{
    const int sources = !a.lauricella.empty() + !a.bn.empty() + !a.group.empty() + !a.arrangement.empty();
    if (sources != 1) throw UsageError("give exactly one of --lauricella, --bn, --coxeter, --arrangement");
    if (!a.lauricella.empty()) return lauricella_system(parse_rationals(a.lauricella));
    if (!a.bn.empty()) {
        auto colon = a.bn.find(':');
        if (colon == std::string::npos || a.bn.compare(colon, 3, ":a=") != 0) throw UsageError("--bn expects mu_1,...,mu_n:a=A");
        return bn_system(parse_rationals(a.bn.substr(0, colon)), Rational::parse(a.bn.substr(colon + 3)));
    }
    if (!a.group.empty()) {
        if (a.q.empty()) throw UsageError("--coxeter needs --q");
        return constant_kappa_system(a.group, parse_ints(a.q));
    }
    Arrangement arr = arrangement_from_json(json::parse(read_file(a.arrangement)));
    if (a.kappa.empty()) throw UsageError("--arrangement needs --kappa");
    std::vector<Rational> k = parse_rationals(a.kappa);
    if (k.size() == 1) k.assign(arr.size(), k[0]);
    return make_system(arr, k);
}

Arrangement build_arrangement(const SystemArgs& a)
{
    if (!a.group.empty() == !a.arrangement.empty()) throw UsageError("give exactly one of --group, --arrangement");
    if (!a.group.empty()) {
        if (!label_supported(a.group)) throw UsageError("unsupported group label: " + a.group);
        return build_reflection_arrangement(a.group);
    }
    return arrangement_from_json(json::parse(read_file(a.arrangement)));
}

// ------------------------------------------------------------------ verbs

int do_classify(const SystemArgs& sa, const std::string& format, std::ostream& out)
{
    DunklSystem sys = build_system(sa);
    ClassificationReport r = classify(sys);
    if (format == "json") {
        emit(out, report_to_json(sys, r));
    } else {
        out << "kind: " << kind_name(r.kind) << "\n";
        if (!r.reason.empty()) out << "reason: " << r.reason << "\n";
        if (r.witness) out << "witness: " << r.witness_type << "\n";
        out << "kappa0: " << r.kappa0.str() << "\n";
        out << "signature: " << r.signature.str() << "\n";
        out << "cocompact: " << (r.cocompact ? "yes" : "no") << "\n";
        if (r.dual_degrees) {
            out << "dual degrees:";
            for (auto d : *r.dual_degrees) out << " " << d;
            out << " (order " << *r.dual_order << ")\n";
        }
        for (const auto& rel : r.presentation) out << "relation: " << rel.type << " x" << rel.orbit_size << " q=" << rel.q << "\n";
    }
    return refused_kind(r.kind) ? refused : ok;
}

std::string exceptional_csv(const std::string& label, const std::vector<ExceptionalEntry>& entries)
{
    std::ostringstream os;
    os << "label,q,kind,cocompact\n";
    for (const auto& e : entries) {
        os << label << ",";
        for (std::size_t i = 0; i < e.q.size(); ++i) os << (i ? ";" : "") << e.q[i];
        os << "," << kind_name(e.kind) << "," << (e.cocompact ? "true" : "false") << "\n";
    }
    return os.str();
}

int do_enumerate(const std::string& type, int rank, std::int64_t dmax, int qmax, const std::string& format, int threads,
                 std::ostream& out)
{
    if (type == "A" || type == "monomial") {
        std::vector<TableRow> rows;
        if (type == "A") {
            if (rank == 0) {
                if (dmax != 0) throw UsageError("--dmax needs --rank");
                rows = table_one(threads);
            } else {
                rows = enumerate_lauricella(rank, dmax != 0 ? dmax : table_one_dmax(rank), threads);
            }
        } else {
            if (rank < 1) throw UsageError("--type monomial needs --rank");
            for (int q = 2; q <= qmax; ++q) rows.push_back(monomial_series(rank, q));
        }
        if (format == "csv") out << rows_to_csv(rows);
        else if (format == "table") out << rows_to_table(rows);
        else emit(out, rows_to_json(rows));
        return ok;
    }
    if (rank != 0 || dmax != 0) throw UsageError("--rank and --dmax apply to --type A only");
    if (!label_supported(type)) throw UsageError("unknown type: " + type);
    auto entries = enumerate_exceptional(type, qmax, threads);
    if (format == "csv") out << exceptional_csv(type, entries);
    else if (format == "table") out << exceptional_to_text(type, entries);
    else emit(out, exceptional_to_json(type, entries));
    return ok;
}

int do_lattice(const SystemArgs& sa, bool list, bool full, int max_codim, std::ostream& out)
{
    Arrangement a = build_arrangement(sa);
    IntersectionLattice irr = irreducible_lattice(a, max_codim);
    if (list) {
        out << "codim,type,size\n";
        for (const auto& level : irr.by_codim)
            for (int i : level) {
                const LatticeNode& node = irr.node(i);
                if (node.codim == 0) continue;
                out << node.codim << "," << type_guess(node) << "," << node.members.count() << "\n";
            }
        return ok;
    }
    json j;
    j["arrangement"] = a.name;
    j["dim"] = a.dim;
    j["hyperplanes"] = a.size();
    json counts = json::array();
    for (const auto& level : irr.by_codim) counts.push_back(level.size());
    j["irreducible_per_codim"] = counts;
    if (full) {
        IntersectionLattice all = intersection_lattice(a, max_codim);
        json c = json::array();
        for (const auto& level : all.by_codim) c.push_back(level.size());
        j["flats_per_codim"] = c;
    }
    emit(out, j);
    return ok;
}

int do_hecke(const std::string& group, const std::string& kappa, bool gram, bool det_check, std::ostream& out)
{
    if (group.empty() || kappa.empty()) throw UsageError("hecke needs --group and --kappa");
    if (!label_supported(group)) throw UsageError("unsupported group label: " + group);
    CoxeterDatum cd = coxeter_datum(group);
    if (!cd.real) throw UsageError(group + " has no Coxeter matrix");
    std::vector<Rational> kr = parse_rationals(kappa);
    if (static_cast<int>(kr.size()) != 1 && static_cast<int>(kr.size()) != class_count(cd))
        throw UsageError(group + " needs 1 or " + std::to_string(class_count(cd)) + " kappa values");
    std::vector<double> k;
    for (const auto& r : kr) k.push_back(r.to_double());
    Eigen::MatrixXd h = hecke_gram(cd, k);
    json j;
    j["group"] = group;
    j["kappa"] = rational_strings(kr);
    j["kappa0"] = class_kappa0(cd, k);
    if (gram) {
        json m = json::array();
        for (int r = 0; r < h.rows(); ++r) {
            json row = json::array();
            for (int c = 0; c < h.cols(); ++c) row.push_back(h(r, c));
            m.push_back(row);
        }
        j["gram"] = m;
    }
    const double det = h.determinant();
    j["determinant"] = det;
    Signature s = hermitian_signature(Eigen::MatrixXcd(h.cast<std::complex<double>>()));
    j["inertia"] = {s.pos, s.null, s.neg};
    if (det_check) {
        bool single = kr.size() == 1 || class_count(cd) == 1;
        if (!single) throw UsageError("the product formula needs a single weight");
        const double want = coxeter_det(cd, k[0]);
        j["product_formula"] = want;
        const double scale = std::max(std::abs(want), 1e-300);
        j["relative_difference"] = std::abs(det - want) / scale;
    }
    emit(out, j);
    return ok;
}

int do_lauricella(const std::string& mu_s, const std::string& z_s, double tol, bool hermitian, double pde_step,
                  std::ostream& out)
{
    std::vector<Rational> mur = parse_rationals(mu_s);
    std::vector<double> mu, z = parse_reals(z_s);
    for (const auto& r : mur) mu.push_back(r.to_double());
    LauricellaValues v = lauricella_values(mu, z, tol);
    json j = lauricella_to_json(mu, z, v);
    j["mu"] = rational_strings(mur);
    j["tol"] = tol;
    if (hermitian) {
        Rational s;
        for (const auto& r : mur) s += r;
        if (!(Rational(1) < s && s < Rational(2))) throw UsageError("--hermitian needs 1 < sum mu < 2");
        HermitianN n = hermitian_N(mu, z, std::max(tol, 1e-8));
        j["hermitian"] = {{"formula", n.formula},
                          {"direct", n.direct},
                          {"direct_error", n.direct_error},
                          {"relative_difference", n.relative_difference}};
    }
    if (pde_step > 0) {
        PdeResidual p = pde_residual(mu, z, pde_step);
        j["pde"] = {{"step", pde_step}, {"residual", p.residual}, {"noise", p.noise}};
    }
    emit(out, j);
    return ok;
}

int find_mirror(const DunklSystem& sys, const std::string& loop)
{
    if (loop.rfind("H:", 0) != 0) throw UsageError("--loop expects H:<label> or H:<index>");
    const std::string key = loop.substr(2);
    std::string zkey;
    {
        auto parts = split(key, ',');
        if (parts.size() == 2) zkey = "z" + parts[0] + ",z" + parts[1];
    }
    const auto& labels = sys.arrangement.labels;
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == key || (!zkey.empty() && labels[i] == zkey)) return static_cast<int>(i);
    if (!key.empty() && key.find_first_not_of("0123456789") == std::string::npos) {
        const int i = std::stoi(key);
        if (i < sys.arrangement.size()) return i;
    }
    throw UsageError("no mirror " + key);
}

int do_monodromy(const SystemArgs& sa, const std::string& loop, double tol, double radius, int sides, std::ostream& out)
{
    DunklSystem sys = build_system(sa);
    const int x = find_mirror(sys, loop);
    MonodromyResult r = monodromy_transport(sys, mirror_loop(sys, x, radius, sides), tol);
    json j = monodromy_to_json(r);
    const Rational k = sys.kappa[x];
    j["mirror"] = x < static_cast<int>(sys.arrangement.labels.size()) ? sys.arrangement.labels[x] : std::to_string(x);
    j["kappa_H"] = k.str();
    j["expected_eigenvalue"] = complex_json(std::polar(1.0, 2 * M_PI * k.to_double()));
    emit(out, j);
    return ok;
}

int do_presentation(const SystemArgs& sa, std::ostream& out)
{
    DunklSystem sys = build_system(sa);
    ClassificationReport r = classify(sys);
    json j;
    j["kind"] = kind_name(r.kind);
    if (refused_kind(r.kind)) {
        if (!r.reason.empty()) j["reason"] = r.reason;
        emit(out, j);
        return refused;
    }
    j["relations"] = report_to_json(sys, r)["presentation"];
    emit(out, j);
    return ok;
}

int do_tables_verify(const std::string& dir, const std::string& only, int qmax, int threads, std::ostream& out)
{
    struct Item {
        std::string file;
        std::function<std::string()> make;
    };
    std::vector<Item> items;
    if (only == "all" || only == "table1") items.push_back({"table1.csv", [&] { return rows_to_csv(table_one(threads)); }});
    if (only == "all" || only == "exceptional")
        items.push_back({"exceptional.txt", [&] { return exceptional_tables(qmax, threads); }});
    std::size_t bad = 0;
    for (const auto& it : items) {
        const std::string want = read_file(dir + "/" + it.file);
        const std::string got = it.make();
        auto diff = line_diff(it.file, want, got);
        for (const auto& d : diff) out << d << "\n";
        std::size_t lines = std::count(got.begin(), got.end(), '\n');
        if (diff.empty()) out << it.file << ": ok (" << lines << " lines)\n";
        else out << it.file << ": " << diff.size() << " mismatched lines\n";
        bad += diff.size();
    }
    return bad == 0 ? ok : refused;
}

} // namespace

std::string format_double(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::vector<std::string> line_diff(const std::string& name, const std::string& expected, const std::string& got)
{
    auto lines = [](const std::string& s) {
        std::vector<std::string> v;
        std::istringstream is(s);
        for (std::string l; std::getline(is, l);) v.push_back(l);
        return v;
    };
    const auto a = lines(expected), b = lines(got);
    std::vector<std::string> out;
    for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
        const std::string x = i < a.size() ? a[i] : "<missing>";
        const std::string y = i < b.size() ? b[i] : "<missing>";
        if (x != y) out.push_back(name + ":" + std::to_string(i + 1) + ": expected '" + x + "' got '" + y + "'");
    }
    return out;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Dunkl systems on reflection arrangements"};
    app.name("dunkl");
    app.require_subcommand(1);
    app.fallthrough();
    int threads = 0;
    app.add_option("--threads", threads, "worker threads (default: all cores)")->check(CLI::NonNegativeNumber);

    SystemArgs cls_sys;
    std::string cls_format = "json";
    auto* cls = app.add_subcommand("classify", "decide the geometric type of a Dunkl system");
    add_system_options(cls, cls_sys, true);
    cls->add_option("--format", cls_format)->check(CLI::IsMember({"json", "table"}));

    std::string en_type, en_format = "csv";
    int en_rank = 0, en_qmax = 12;
    std::int64_t en_dmax = 0;
    auto* en = app.add_subcommand("enumerate", "regenerate classification tables");
    en->add_option("--type", en_type, "A, monomial, or a group label (E6, F4, H3, ST24, ...)")->required();
    en->add_option("--rank", en_rank)->check(CLI::PositiveNumber);
    en->add_option("--dmax", en_dmax)->check(CLI::PositiveNumber);
    en->add_option("--qmax", en_qmax)->check(CLI::Range(2, 1000));
    en->add_option("--format", en_format)->check(CLI::IsMember({"csv", "json", "table"}));

    SystemArgs lat_sys;
    bool lat_list = false, lat_full = false;
    int lat_codim = -1;
    auto* lat = app.add_subcommand("lattice", "intersection lattice of an arrangement");
    lat->add_option("--group", lat_sys.group);
    lat->add_option("--arrangement", lat_sys.arrangement);
    lat->add_flag("--list-irreducible", lat_list, "CSV of irreducible flats: codim, type, |H_L|");
    lat->add_flag("--full", lat_full, "also count all flats");
    lat->add_option("--max-codim", lat_codim);

    std::string he_group, he_kappa;
    bool he_gram = false, he_det = false;
    auto* he = app.add_subcommand("hecke", "invariant hermitian form of the Hecke reflection representation");
    he->add_option("--group", he_group)->required();
    he->add_option("--kappa", he_kappa, "one weight, or one per reflection class")->required();
    he->add_flag("--gram", he_gram, "include the matrix");
    he->add_flag("--det-check", he_det, "compare the determinant with the product formula");

    std::string la_mu, la_z;
    double la_tol = 1e-12, la_pde = 0;
    bool la_herm = false;
    auto* la = app.add_subcommand("lauricella", "hypergeometric integrals F_k");
    la->add_option("--mu", la_mu)->required();
    la->add_option("--z", la_z)->required();
    la->add_option("--tol", la_tol)->check(CLI::PositiveNumber);
    la->add_flag("--hermitian", la_herm, "hermitian form N by formula and by planar integral");
    la->add_option("--pde-step", la_pde, "residual of the Lauricella system with this difference step");

    SystemArgs mo_sys;
    std::string mo_loop;
    double mo_tol = 1e-10, mo_radius = 0.25;
    int mo_sides = 48;
    auto* mo = app.add_subcommand("monodromy", "transport around a small loop about a mirror");
    add_system_options(mo, mo_sys, true);
    mo->add_option("--loop", mo_loop, "H:i,j (Lauricella points) or H:<label or index>")->required();
    mo->add_option("--tol", mo_tol)->check(CLI::PositiveNumber);
    mo->add_option("--radius", mo_radius)->check(CLI::Range(1e-6, 0.9));
    mo->add_option("--sides", mo_sides)->check(CLI::Range(8, 100000));

    SystemArgs pr_sys;
    auto* pr = app.add_subcommand("presentation", "orbifold relations of the holonomy group");
    add_system_options(pr, pr_sys, true);

    std::string tv_dir = DUNKL_GOLDEN_DIR, tv_only = "all";
    int tv_qmax = 12;
    auto* tv = app.add_subcommand("tables-verify", "regenerate the tables and diff against the golden files");
    tv->add_option("--golden", tv_dir);
    tv->add_option("--only", tv_only)->check(CLI::IsMember({"all", "table1", "exceptional"}));
    tv->add_option("--qmax", tv_qmax)->check(CLI::Range(2, 1000));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage;
    }

    try {
        if (cls->parsed()) return do_classify(cls_sys, cls_format, out);
        if (en->parsed()) return do_enumerate(en_type, en_rank, en_dmax, en_qmax, en_format, threads, out);
        if (lat->parsed()) return do_lattice(lat_sys, lat_list, lat_full, lat_codim, out);
        if (he->parsed()) return do_hecke(he_group, he_kappa, he_gram, he_det, out);
        if (la->parsed()) return do_lauricella(la_mu, la_z, la_tol, la_herm, la_pde, out);
        if (mo->parsed()) return do_monodromy(mo_sys, mo_loop, mo_tol, mo_radius, mo_sides, out);
        if (pr->parsed()) return do_presentation(pr_sys, out);
        if (tv->parsed()) return do_tables_verify(tv_dir, tv_only, tv_qmax, threads, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return usage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return usage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return usage;
    } catch (const json::exception& e) {
        err << "error: " << e.what() << "\n";
        return usage;
    } catch (const std::exception& e) {
        err << "failed: " << e.what() << "\n";
        return failure;
    }
    return usage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    std::vector<const char*> argv{"dunkl"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

} // namespace dunkl::cli
