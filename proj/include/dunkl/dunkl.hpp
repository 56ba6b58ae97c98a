#pragma once

#include "dunkl/arrangement.hpp"
#include "dunkl/rational.hpp"

#include "json.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace dunkl {

enum class Family { generic, lauricella, bn, coxeter };

struct FlatCertificate {
    bool verified = false;
    std::optional<Bits> witness;  // irreducible codim-2 node where the identity fails
};

struct DunklSystem {
    // support arrangement: hyperplanes of weight zero have been removed
    Arrangement arrangement;
    std::vector<Rational> kappa;
    FlatCertificate flat;
    // the support is reducible or does not meet in {0}
    bool reducible_support = false;
    int dropped = 0;

    Family family = Family::generic;
    std::vector<Rational> mu;  // lauricella: mu_0..mu_n; bn: mu_1..mu_n
    Rational a;                // bn only
    std::string group;         // coxeter only
    std::vector<int> q;        // coxeter only, per orbit of the full arrangement

    std::shared_ptr<const IntersectionLattice> lattice;  // irreducible flats of the support

    int dim() const { return arrangement.dim; }
    Rational kappa0() const;
    // (sum of kappa over H_L) / codim L
    Rational kappa_of(const Bits& members) const;
    Rational kappa_of(const LatticeNode& node) const;
    const IntersectionLattice& flats() const { return *lattice; }
};

// Builds a system from an arrangement and weights: drops zero weights,
// computes the irreducible lattice of the support and the flatness certificate.
DunklSystem make_system(const Arrangement& a, const std::vector<Rational>& kappa);

DunklSystem lauricella_system(const std::vector<Rational>& mu);
DunklSystem bn_system(const std::vector<Rational>& mu, const Rational& a);
// B_n system obtained from Lauricella weights by reducing at index m
DunklSystem reduce_at(const std::vector<Rational>& mu, int m);
// A_n parameters (mu_0 = (a+1)/2, mu_1, ..., mu_n) of a B_n system
std::vector<Rational> an_quotient(const DunklSystem& bn);
// kappa_H = 1 - 2/q on each orbit; q has one entry per orbit or a single entry
DunklSystem constant_kappa_system(const std::string& label, const std::vector<int>& q);

// The orbit of each mirror of build_reflection_arrangement(label), ordered as
// the orbits are listed: the first orbit contains mirror 0.
std::vector<int> orbit_index(const Arrangement& a);

FlatCertificate check_flat(const Arrangement& a, const std::vector<Rational>& kappa, const IntersectionLattice& irr);
FlatCertificate check_flat(const DunklSystem& sys);

struct ExponentLedger {
    std::vector<Bits> nodes;
    std::vector<int> codim;
    std::vector<Rational> kappa;
};

// kappa_L for every irreducible node; throws unless flatness is verified
ExponentLedger kappa_ledger(const DunklSystem& sys);

// longitudinal system on an irreducible flat L (throws on reducible L)
DunklSystem longitudinal(const DunklSystem& sys, const Bits& L);
// transversal system on V/L, realized on the span of the normals in H_L
DunklSystem transversal(const DunklSystem& sys, const Bits& L);

// mu with kappa_ij = mu_i + mu_j on an A_n-labelled arrangement of a Lauricella system
std::optional<std::vector<Rational>> lauricella_shape(const DunklSystem& sys);

nlohmann::json system_to_json(const DunklSystem& sys);

} // namespace dunkl
