#pragma once

#include "dunkl/classify.hpp"

#include "json.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace dunkl {

enum class Remark { ell, par, hyp, cc };

std::string remark_name(Remark r);  // hyp prints as the empty string

// mu_i = num[i] / d on the A_n arrangement (n + 1 points)
struct TableRow {
    int n = 0;
    std::int64_t d = 1;
    std::vector<std::int64_t> num;
    std::vector<bool> bold;   // reduction at the index gives a B_n weight satisfying the Schwarz conditions
    std::vector<bool> dflag;  // bold and n_i + n_m = d/2 for all i != m
    Remark remark = Remark::hyp;
    Kind kind = Kind::hyperbolic_cofinite;
    // fewer than two effective hyperplanes in some direction (zero weights)
    bool degenerate_support = false;

    std::vector<Rational> mu() const;
};

// the A-row predicates: Sigma mu in (0,2), pair defects with numerator 1 or 2
// (2 only for equal weights), complements above 1 exceed it by 1/k
bool lauricella_row_valid(std::int64_t d, const std::vector<std::int64_t>& num);

bool bold_flag(const TableRow& row, int m);
bool d_flag(const TableRow& row, int m);

// fills bold, dflag, kind and remark from num and d
TableRow make_row(std::int64_t d, std::vector<std::int64_t> num);

// threads <= 0 uses all cores; output does not depend on it
std::vector<TableRow> enumerate_lauricella(int n, std::int64_t d_max, int threads = 0);

struct ExceptionalEntry {
    std::vector<int> q;  // one per mirror orbit (F4: q1 <= q2)
    Kind kind = Kind::not_admissible;
    bool cocompact = false;
};

std::vector<ExceptionalEntry> enumerate_exceptional(const std::string& label, int q_max, int threads = 0);

// mu_0 = ... = mu_{n-1} = 0, mu_n = 1 - 1/q, kept with its zero entries (d = q)
TableRow monomial_series(int n, int q);

std::string rows_to_csv(const std::vector<TableRow>& rows, int first_index = 1);
std::string rows_to_table(const std::vector<TableRow>& rows, int first_index = 1);
nlohmann::json rows_to_json(const std::vector<TableRow>& rows, int first_index = 1);

// "E6 | 3, 4" style lines: "*" marks cocompact, " par" parabolic
std::string exceptional_to_text(const std::string& label, const std::vector<ExceptionalEntry>& entries);
nlohmann::json exceptional_to_json(const std::string& label, const std::vector<ExceptionalEntry>& entries);

// d_max used for the full A table: 42 at rank 3, 12 above
std::int64_t table_one_dmax(int n);
// ranks 3..9 in order
std::vector<TableRow> table_one(int threads = 0);

std::vector<std::string> exceptional_labels();
// exceptional_to_text for every label of exceptional_labels(), q <= q_max
std::string exceptional_tables(int q_max = 12, int threads = 0);

// runs f(0..count-1) on a pool of workers, results in index order
template <class T>
std::vector<T> parallel_map(std::size_t count, int threads, const std::function<T(std::size_t)>& f);

int resolve_threads(int threads);

} // namespace dunkl

#include "dunkl/detail/parallel.hpp"
