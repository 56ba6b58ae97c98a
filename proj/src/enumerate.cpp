#include "dunkl/enumerate.hpp"

#include <algorithm>
#include <iomanip>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dunkl {

namespace {

// numerator of the reduced fraction t/d (t may be negative)
std::int64_t reduced_num(std::int64_t t, std::int64_t d)
{
    if (t == 0) return 0;
    return t / std::gcd(t, d);
}

bool pair_ok(std::int64_t a, std::int64_t b, std::int64_t d)
{
    if (a + b >= d) return false;
    std::int64_t t = reduced_num(d - a - b, d);
    return t == 1 || (t == 2 && a == b);
}

Remark remark_of(Kind k)
{
    switch (k) {
    case Kind::elliptic: return Remark::ell;
    case Kind::parabolic: return Remark::par;
    case Kind::hyperbolic_cocompact: return Remark::cc;
    default: return Remark::hyp;
    }
}

void fill_flags(TableRow& row)
{
    const int k = static_cast<int>(row.num.size());
    row.bold.assign(k, false);
    row.dflag.assign(k, false);
    for (int m = 0; m < k; ++m) {
        row.bold[m] = bold_flag(row, m);
        row.dflag[m] = row.bold[m] && d_flag(row, m);
    }
}

std::vector<TableRow> rows_for_d(int n, std::int64_t d)
{
    std::vector<TableRow> out;
    std::vector<std::int64_t> p;
    std::function<void(std::int64_t, std::int64_t)> rec = [&](std::int64_t lo, std::int64_t sum) {
        if (static_cast<int>(p.size()) == n + 1) {
            std::int64_t g = d;
            for (auto x : p) g = std::gcd(g, x);
            if (g == 1 && lauricella_row_valid(d, p)) out.push_back(make_row(d, p));
            return;
        }
        for (std::int64_t x = lo; x < d && sum + x < 2 * d; ++x) {
            bool ok = true;
            for (auto y : p)
                if (!pair_ok(y, x, d)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            p.push_back(x);
            rec(x, sum + x);
            p.pop_back();
        }
    };
    rec(1, 0);
    return out;
}

std::string cell(const TableRow& r, int i)
{
    std::string s = std::to_string(r.num[i]);
    if (r.bold[i]) s += "*";
    if (r.dflag[i]) s += "+";
    return s;
}

int widest(const std::vector<TableRow>& rows)
{
    int w = 0;
    for (const auto& r : rows) w = std::max(w, static_cast<int>(r.num.size()));
    return w;
}

std::string entry_text(const ExceptionalEntry& e, std::size_t from)
{
    std::string s;
    for (std::size_t i = from; i < e.q.size(); ++i) s += (i > from ? "," : "") + std::to_string(e.q[i]);
    if (e.cocompact) s += "*";
    if (e.kind == Kind::parabolic) s += " par";
    return s;
}

} // namespace

std::string remark_name(Remark r)
{
    switch (r) {
    case Remark::ell: return "ell";
    case Remark::par: return "par";
    case Remark::cc: return "cc";
    case Remark::hyp: return "";
    }
    return "";
}

std::vector<Rational> TableRow::mu() const
{
    std::vector<Rational> out;
    for (auto x : num) out.emplace_back(x, d);
    return out;
}

bool lauricella_row_valid(std::int64_t d, const std::vector<std::int64_t>& num)
{
    const std::int64_t s = std::accumulate(num.begin(), num.end(), std::int64_t{0});
    if (s <= 0 || s >= 2 * d) return false;
    for (auto x : num)
        if (x <= 0 || x >= d) return false;
    for (std::size_t i = 0; i < num.size(); ++i)
        for (std::size_t j = i + 1; j < num.size(); ++j)
            if (!pair_ok(num[i], num[j], d)) return false;
    if (s > d)
        for (auto x : num)
            if (s - x > d && reduced_num(s - x - d, d) != 1) return false;
    return true;
}

bool bold_flag(const TableRow& row, int m)
{
    const int k = static_cast<int>(row.num.size());
    for (int i = 0; i < k; ++i) {
        if (i == m) continue;
        const std::int64_t s = row.num[i] + row.num[m];
        if (2 * s < row.d || s >= row.d) return false;
    }
    return reduction_schwarz(row.mu(), m);
}

bool d_flag(const TableRow& row, int m)
{
    for (std::size_t i = 0; i < row.num.size(); ++i)
        if (static_cast<int>(i) != m && 2 * (row.num[i] + row.num[m]) != row.d) return false;
    return true;
}

TableRow make_row(std::int64_t d, std::vector<std::int64_t> num)
{
    std::sort(num.begin(), num.end());
    std::int64_t g = d;
    for (auto x : num) g = std::gcd(g, x);
    TableRow row;
    row.n = static_cast<int>(num.size()) - 1;
    row.d = d / g;
    for (auto x : num) row.num.push_back(x / g);
    fill_flags(row);
    row.kind = classify(lauricella_system(row.mu())).kind;
    row.remark = remark_of(row.kind);
    return row;
}

int resolve_threads(int threads)
{
    if (threads > 0) return threads;
    return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<TableRow> enumerate_lauricella(int n, std::int64_t d_max, int threads)
{
    if (n < 2) throw std::invalid_argument("rank must be at least 2");
    const std::size_t count = d_max >= 2 ? static_cast<std::size_t>(d_max - 1) : 0;
    auto per_d = parallel_map<std::vector<TableRow>>(count, threads, [&](std::size_t i) { return rows_for_d(n, static_cast<std::int64_t>(i) + 2); });
    std::vector<TableRow> out;
    for (auto& v : per_d)
        for (auto& r : v) {
            if (!is_admissible_kind(r.kind)) throw std::logic_error("enumerated row is not admissible: " + kind_name(r.kind));
            out.push_back(std::move(r));
        }
    return out;
}

std::vector<ExceptionalEntry> enumerate_exceptional(const std::string& label, int q_max, int threads)
{
    if (!label_supported(label)) throw std::invalid_argument("unsupported group label: " + label);
    const int orbits = [&] {
        auto orb = orbit_index(build_reflection_arrangement(label));
        return *std::max_element(orb.begin(), orb.end()) + 1;
    }();
    if (orbits > 2) throw std::invalid_argument(label + " has more than two mirror orbits");
    std::vector<std::vector<int>> params;
    if (orbits == 1) {
        for (int q = 3; q <= q_max; ++q) params.push_back({q});
    } else {
        // the two classes are exchanged by an outer symmetry: q1 <= q2
        for (int q1 = 2; q1 <= q_max; ++q1)
            for (int q2 = std::max(q1, 3); q2 <= q_max; ++q2) params.push_back({q1, q2});
    }
    // lattices are shared, build it once before the workers start
    if (!params.empty()) constant_kappa_system(label, params.front());
    auto all = parallel_map<ExceptionalEntry>(params.size(), threads, [&](std::size_t i) {
        ExceptionalEntry e;
        e.q = params[i];
        ClassificationReport r = classify(constant_kappa_system(label, e.q));
        e.kind = r.kind;
        e.cocompact = r.kind == Kind::hyperbolic_cocompact;
        return e;
    });
    std::vector<ExceptionalEntry> out;
    for (auto& e : all)
        if (is_admissible_kind(e.kind)) out.push_back(std::move(e));
    return out;
}

TableRow monomial_series(int n, int q)
{
    if (n < 1 || q < 2) throw std::invalid_argument("monomial series needs n >= 1 and q >= 2");
    TableRow row;
    row.n = n;
    row.d = q;
    row.num.assign(n + 1, 0);
    row.num[n] = q - 1;
    row.degenerate_support = true;
    fill_flags(row);
    // the support is the n mirrors z_i = z_n, mutually orthogonal in the limit mu_i -> 0
    const FieldSpec f = FieldSpec::Q();
    ExactMatrix g(f, n, n);
    std::vector<Vec> normals;
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) {
        g.at(i, i) = Scalar(f, Rational(1));
        Vec v = zero_vec(f, n);
        v[i] = Scalar(f, Rational(1));
        normals.push_back(v);
        labels.push_back("z" + std::to_string(i) + ",z" + std::to_string(n));
    }
    DunklSystem s = make_system(make_arrangement("monomial", g, normals, labels, n == 1), std::vector<Rational>(n, Rational(q - 1, q)));
    row.kind = classify(s).kind;
    // each factor is a rank one elliptic system
    row.remark = s.kappa0() < Rational(1) ? Remark::ell : remark_of(row.kind);
    return row;
}

std::string rows_to_csv(const std::vector<TableRow>& rows, int first_index)
{
    const int w = widest(rows);
    std::ostringstream os;
    os << "#,d";
    for (int i = 0; i < w; ++i) os << ",n_" << i;
    os << ",remark\n";
    int idx = first_index;
    for (const auto& r : rows) {
        os << idx++ << "," << r.d;
        for (int i = 0; i < w; ++i) os << "," << (i < static_cast<int>(r.num.size()) ? cell(r, i) : "");
        os << "," << remark_name(r.remark) << "\n";
    }
    return os.str();
}

std::string rows_to_table(const std::vector<TableRow>& rows, int first_index)
{
    const int w = widest(rows);
    std::ostringstream os;
    os << std::setw(4) << "#" << std::setw(5) << "d";
    for (int i = 0; i < w; ++i) os << std::setw(6) << ("n" + std::to_string(i));
    os << "  remark\n";
    int idx = first_index;
    for (const auto& r : rows) {
        os << std::setw(4) << idx++ << std::setw(5) << r.d;
        for (int i = 0; i < w; ++i) os << std::setw(6) << (i < static_cast<int>(r.num.size()) ? cell(r, i) : "");
        os << "  " << remark_name(r.remark) << "\n";
    }
    return os.str();
}

nlohmann::json rows_to_json(const std::vector<TableRow>& rows, int first_index)
{
    nlohmann::json out = nlohmann::json::array();
    int idx = first_index;
    for (const auto& r : rows) {
        nlohmann::json j;
        j["index"] = idx++;
        j["n"] = r.n;
        j["d"] = r.d;
        j["numerators"] = r.num;
        j["bold"] = r.bold;
        j["dflag"] = r.dflag;
        j["remark"] = remark_name(r.remark);
        j["kind"] = kind_name(r.kind);
        if (r.degenerate_support) j["degenerate_support"] = true;
        out.push_back(j);
    }
    return out;
}

std::string exceptional_to_text(const std::string& label, const std::vector<ExceptionalEntry>& entries)
{
    std::ostringstream os;
    if (entries.empty() || entries.front().q.size() == 1) {
        os << label << " |";
        for (std::size_t i = 0; i < entries.size(); ++i) os << (i ? ", " : " ") << entry_text(entries[i], 0);
        os << "\n";
        return os.str();
    }
    std::size_t i = 0;
    while (i < entries.size()) {
        const int q1 = entries[i].q[0];
        os << label << " q1=" << q1 << " |";
        for (bool first = true; i < entries.size() && entries[i].q[0] == q1; ++i, first = false)
            os << (first ? " " : ", ") << entry_text(entries[i], 1);
        os << "\n";
    }
    return os.str();
}

nlohmann::json exceptional_to_json(const std::string& label, const std::vector<ExceptionalEntry>& entries)
{
    nlohmann::json j;
    j["label"] = label;
    j["entries"] = nlohmann::json::array();
    for (const auto& e : entries) j["entries"].push_back({{"q", e.q}, {"kind", kind_name(e.kind)}, {"cocompact", e.cocompact}});
    return j;
}

std::int64_t table_one_dmax(int n)
{
    return n == 3 ? 42 : 12;
}

std::vector<TableRow> table_one(int threads)
{
    std::vector<TableRow> all;
    for (int n = 3; n <= 9; ++n)
        for (auto& r : enumerate_lauricella(n, table_one_dmax(n), threads)) all.push_back(std::move(r));
    return all;
}

std::vector<std::string> exceptional_labels()
{
    return {"E6", "E7", "E8", "F4", "H3", "H4", "ST24", "ST27", "ST29", "ST31", "ST33", "ST34"};
}

std::string exceptional_tables(int q_max, int threads)
{
    std::string out;
    for (const auto& label : exceptional_labels()) out += exceptional_to_text(label, enumerate_exceptional(label, q_max, threads));
    return out;
}

} // namespace dunkl
