#pragma once

#include "dunkl/matrix.hpp"
#include "dunkl/rootdata.hpp"

#include <boost/container/small_vector.hpp>
#include "json.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace dunkl {

// Subset of hyperplane indices.
class Bits {
public:
    Bits() = default;
    explicit Bits(int n) : n_(n), w_((n + 63) / 64, 0) {}
    static Bits from_list(int n, const std::vector<int>& idx);

    int size() const { return n_; }
    void set(int i) { w_[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    int count() const;
    bool subset_of(const Bits& o) const;
    Bits operator|(const Bits& o) const;
    Bits operator&(const Bits& o) const;
    std::vector<int> list() const;
    std::size_t hash() const;
    friend bool operator==(const Bits& a, const Bits& b) { return a.n_ == b.n_ && a.w_ == b.w_; }
    friend bool operator<(const Bits& a, const Bits& b);

private:
    int n_ = 0;
    boost::container::small_vector<std::uint64_t, 4> w_;
};

struct BitsHash {
    std::size_t operator()(const Bits& b) const { return b.hash(); }
};

struct Arrangement {
    std::string name;
    FieldSpec field;
    int dim = 0;
    ExactMatrix gram;
    std::vector<Vec> normals;
    std::vector<std::string> labels;
    bool irreducible = true;

    int size() const { return static_cast<int>(normals.size()); }
    Scalar inner(const Vec& x, const Vec& y) const { return herm(x, gram, y); }
    // index of the hyperplane with normal proportional to v
    std::optional<int> find(const Vec& v) const;

    std::unordered_map<std::size_t, std::vector<int>> lookup;
};

// Validates and canonicalizes (first nonzero coordinate 1). With strict set, the
// gram must be positive definite, the hyperplanes must meet only in {0} and the
// arrangement must be irreducible; otherwise only the basic checks run and
// irreducible is recorded.
Arrangement make_arrangement(const std::string& name, const ExactMatrix& gram, std::vector<Vec> normals,
                             std::vector<std::string> labels = {}, bool strict = true);

Arrangement build_reflection_arrangement(const std::string& label);

nlohmann::json arrangement_to_json(const Arrangement& a);
Arrangement arrangement_from_json(const nlohmann::json& j);

// orthogonal reflection in mirror k applied to v
Vec reflect(const Arrangement& a, int k, const Vec& v);
// perms[k][x] = index of s_k(H_x), or nullopt when s_k does not permute the mirrors
std::optional<std::vector<std::vector<int>>> reflection_permutations(const Arrangement& a);

std::vector<std::vector<int>> hyperplane_orbits(const Arrangement& a);

struct LatticeNode {
    Bits members;
    int codim = 0;
    bool irreducible = false;
    std::vector<std::vector<int>> components;
    std::vector<int> member_list() const { return members.list(); }
};

struct IntersectionLattice {
    std::vector<LatticeNode> nodes;
    std::unordered_map<Bits, int, BitsHash> index;
    std::vector<std::vector<int>> by_codim;
    bool irreducible_only = false;

    std::optional<int> find(const Bits& members) const;
    int origin() const;  // node with every hyperplane
    const LatticeNode& node(int i) const { return nodes[i]; }
};

// All flats up to max_codim (negative: all). Children are computed by
// intersecting with one hyperplane at a time; the node {0} is always present.
IntersectionLattice intersection_lattice(const Arrangement& a, int max_codim = -1);

// Irreducible flats only, reached through chains of irreducible flats.
IntersectionLattice irreducible_lattice(const Arrangement& a, int max_codim = -1);

// H_L for L the intersection of the given hyperplanes
Bits flat_closure(const Arrangement& a, const std::vector<int>& hyperplanes);
int flat_codim(const Arrangement& a, const Bits& members);
// basis of the subspace L
std::vector<Vec> flat_basis(const Arrangement& a, const Bits& members);

// finest splitting of H_L, blocks sorted
std::vector<std::vector<int>> irreducible_components(const Arrangement& a, const Bits& members);
std::vector<std::vector<int>> irreducible_components(const Arrangement& a, const LatticeNode& node);

// brute-force splitting check by all bipartitions (small sets only)
std::vector<std::vector<int>> components_bruteforce(const Arrangement& a, const std::vector<int>& members);

// name like "A2", "I2(5)", "H3" inferred from codim and |H_L| of an irreducible flat
std::string type_guess(const LatticeNode& node);

} // namespace dunkl
