#pragma once

#include "dunkl/dunkl.hpp"

#include <Eigen/Dense>
#include "json.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace dunkl {

// 1 - kappa_L = p / q in lowest terms, q > 0; p = 0, q = 1 when kappa_L = 1
struct SchwarzFraction {
    std::int64_t p = 0;
    std::int64_t q = 1;
    Rational value() const { return Rational(p, q); }
};

SchwarzFraction schwarz_fraction(const Rational& kappa_L);

enum class SchwarzStatus { pass, fail, not_required };
enum class SchwarzScope { codim1, thm62, full };

struct SchwarzEntry {
    Bits node;  // representative of its symmetry orbit
    int codim = 0;
    int orbit_size = 1;
    Rational kappa;
    SchwarzFraction fraction;
    SchwarzStatus status = SchwarzStatus::not_required;
    std::string reason;
};

struct SchwarzLedger {
    SchwarzScope scope = SchwarzScope::codim1;
    std::vector<SchwarzEntry> entries;

    bool passed() const;
    const SchwarzEntry* first_failure() const;
};

// Whether the unitary map fixing L pointwise and acting on the orthogonal
// complement of L by a primitive |p|-th root of unity permutes the hyperplanes
// with their weights. Exact; when that root of unity lies outside the field
// of the arrangement the answer follows from linear independence over it.
bool rotation_preserves_system(const DunklSystem& sys, const Bits& L, std::int64_t p);

// The same map as a numeric matrix in the coordinates of the arrangement.
Eigen::MatrixXcd schwarz_rotation(const DunklSystem& sys, const Bits& L, std::int64_t p);

// Ledger over the nodes required by the scope:
//   codim1: every hyperplane;
//   thm62: hyperplanes with kappa < 1 and one-dimensional flats with kappa > 1;
//   full: every irreducible flat.
// Nodes in one orbit of the weight-preserving mirror reflections share an entry.
// Lauricella systems use the closed node predicate unless closed_forms is off.
SchwarzLedger check_schwarz(const DunklSystem& sys, SchwarzScope scope, bool closed_forms = true);

// Lauricella node z_i (i in I) all equal, |I| >= 2, I a proper subset
bool lauricella_node_schwarz(const std::vector<Rational>& mu, const std::vector<int>& I);

// Codimension-one condition for a Lauricella pair: 1 - mu_i - mu_j positive
// with numerator 1, or 2 when mu_i = mu_j.
bool lauricella_pair_schwarz(const Rational& mu_i, const Rational& mu_j);

// For all I containing m with 2 <= |I| <= n: 1 - mu_I is zero or 1/k, k a nonzero integer
bool reduction_schwarz(const std::vector<Rational>& mu, int m);

// indices z_i of the Lauricella hyperplanes in the node
std::vector<int> lauricella_indices(const DunklSystem& sys, const Bits& node);

std::string scope_name(SchwarzScope s);
std::string status_name(SchwarzStatus s);
nlohmann::json ledger_to_json(const DunklSystem& sys, const SchwarzLedger& ledger);

} // namespace dunkl
