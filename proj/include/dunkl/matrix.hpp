#pragma once

#include "dunkl/field.hpp"

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace dunkl {

using Vec = std::vector<Scalar>;

class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(const FieldSpec& f, int rows, int cols);
    // rows of equal length; every entry must live in the same field
    static ExactMatrix from_rows(const std::vector<Vec>& rows);
    static ExactMatrix identity(const FieldSpec& f, int n);

    const FieldSpec& field() const { return f_; }
    int rows() const { return r_; }
    int cols() const { return c_; }

    Scalar& at(int i, int j) { return a_[static_cast<std::size_t>(i) * c_ + j]; }
    const Scalar& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * c_ + j]; }
    Vec row(int i) const;
    Vec col(int j) const;

    ExactMatrix adjoint() const;  // conjugate transpose
    ExactMatrix transpose() const;
    bool is_hermitian() const;

    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
    friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
    friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);
    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);
    Vec apply(const Vec& v) const;

    // reduced row echelon form, pivot columns in *pivots
    ExactMatrix rref(std::vector<int>* pivots = nullptr) const;
    int rank() const;
    Scalar det() const;
    // basis of {x : A x = 0}
    std::vector<Vec> nullspace() const;
    ExactMatrix inverse() const;

    Eigen::MatrixXcd numeric() const;
    std::string str() const;

private:
    FieldSpec f_;
    int r_ = 0, c_ = 0;
    std::vector<Scalar> a_;
};

int exact_rank(const ExactMatrix& m);

// vector helpers
Vec zero_vec(const FieldSpec& f, int n);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Scalar& s, const Vec& v);
bool is_zero(const Vec& v);
// <x, y> = x^T G conj(y)
Scalar herm(const Vec& x, const ExactMatrix& g, const Vec& y);
// first nonzero coordinate scaled to 1
Vec normalize_first(const Vec& v);
// v is a scalar multiple of w (both nonzero)
bool proportional(const Vec& v, const Vec& w);
int rank_of(const std::vector<Vec>& vs, const FieldSpec& f, int dim);

} // namespace dunkl
