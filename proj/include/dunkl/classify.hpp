#pragma once

#include "dunkl/dunkl.hpp"
#include "dunkl/schwarz.hpp"
#include "dunkl/signature.hpp"

#include "json.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dunkl {

enum class Kind {
    elliptic,
    parabolic,
    hyperbolic_cocompact,
    hyperbolic_cofinite,
    not_admissible,
    schwarz_fail,
    reducible_support,
};

std::string kind_name(Kind k);
bool is_admissible_kind(Kind k);  // elliptic, parabolic or hyperbolic

// alpha_L^q = 1 for the orbit of L
struct Relation {
    Bits node;
    std::string type;
    int orbit_size = 1;
    Rational kappa;
    std::int64_t q = 1;
};

struct ClassificationReport {
    Kind kind = Kind::not_admissible;
    std::string reason;
    std::optional<Bits> witness;  // failing Schwarz node or non-flat node
    std::string witness_type;
    Rational kappa0;
    Signature signature;
    SchwarzLedger schwarz;
    bool cocompact = false;
    std::vector<std::int64_t> group_degrees;  // Schwarz symmetry group, elliptic only
    std::optional<std::vector<std::int64_t>> dual_degrees;
    std::optional<std::int64_t> dual_order;
    std::string dual_error;
    std::vector<Relation> presentation;
};

ClassificationReport classify(const DunklSystem& sys);

// no irreducible flat other than {0} and V has kappa_L = 1
bool cocompact(const DunklSystem& sys);

// Signature of the flat hermitian form, from the family structure. Throws
// std::domain_error when no form is available for the system.
Signature flat_form_signature(const DunklSystem& sys);

// per Hecke class weights of a system on a Coxeter or Shephard-Todd arrangement
std::optional<std::vector<Rational>> class_weights(const DunklSystem& sys, const CoxeterDatum& cd);

struct DualDegrees {
    std::vector<std::int64_t> degrees;
    std::int64_t order = 0;
};

// d_i / (1 - kappa0) and the product; throws std::domain_error unless integral
DualDegrees scale_degrees(const std::vector<std::int64_t>& group_degrees, const Rational& kappa0);

// degrees of the group generated by the Schwarz rotations of all flats that
// satisfy the Schwarz condition (weights of C* on the orbit space, 1 for fixed
// directions). Throws std::domain_error when the group is not generated by
// reflections or is too large to enumerate.
std::vector<std::int64_t> schwarz_group_degrees(const DunklSystem& sys, std::int64_t max_order = 200000);

DualDegrees dual_degrees(const DunklSystem& sys);

// relations alpha_H^{q_H} for the hyperplane orbits, and for hyperbolic systems
// also for flats of dimension <= 1 with kappa_L > 1
std::vector<Relation> presentation(const DunklSystem& sys, const SchwarzLedger& thm62_ledger);

nlohmann::json report_to_json(const DunklSystem& sys, const ClassificationReport& r);

} // namespace dunkl
