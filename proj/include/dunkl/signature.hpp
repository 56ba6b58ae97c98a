#pragma once

#include "dunkl/matrix.hpp"

#include <Eigen/Dense>

#include <functional>
#include <optional>
#include <string>

namespace dunkl {

struct Signature {
    int pos = 0, null = 0, neg = 0;
    int dim() const { return pos + null + neg; }
    friend bool operator==(const Signature&, const Signature&) = default;
    Signature& operator+=(const Signature& o)
    {
        pos += o.pos;
        null += o.null;
        neg += o.neg;
        return *this;
    }
    std::string str() const;
};

// Inertia of a hermitian matrix; eigenvalues in [-tol, tol] count as null.
// When some eigenvalue magnitude lies in [tol/10, 10 tol] and an exact hook
// is supplied, its answer replaces the numeric one.
Signature hermitian_signature(const Eigen::MatrixXcd& g, double tol = 1e-9,
                              const std::function<std::optional<Signature>()>& exact_hook = {});

// Inertia by exact congruence diagonalization.
Signature exact_hermitian_signature(const ExactMatrix& g);

// Numeric signature of an exact matrix with the exact computation as hook.
Signature hermitian_signature(const ExactMatrix& g, double tol = 1e-9);

// Gram positivity by leading principal minors.
bool positive_definite(const ExactMatrix& g);

} // namespace dunkl
