#include "dunkl/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace dunkl {

ExactMatrix::ExactMatrix(const FieldSpec& f, int rows, int cols)
    : f_(f), r_(rows), c_(cols), a_(static_cast<std::size_t>(rows) * cols, Scalar(f))
{
}

ExactMatrix ExactMatrix::from_rows(const std::vector<Vec>& rows)
{
    if (rows.empty() || rows[0].empty()) throw std::invalid_argument("empty matrix");
    const FieldSpec f = rows[0][0].field();
    ExactMatrix m(f, static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.r_; ++i) {
        if (static_cast<int>(rows[i].size()) != m.c_) throw std::invalid_argument("ragged rows");
        for (int j = 0; j < m.c_; ++j) {
            if (!(rows[i][j].field() == f)) throw std::invalid_argument("mixed fields in matrix");
            m.at(i, j) = rows[i][j];
        }
    }
    return m;
}

ExactMatrix ExactMatrix::identity(const FieldSpec& f, int n)
{
    ExactMatrix m(f, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(f, Rational(1));
    return m;
}

Vec ExactMatrix::row(int i) const
{
    return Vec(a_.begin() + static_cast<std::ptrdiff_t>(i) * c_, a_.begin() + static_cast<std::ptrdiff_t>(i + 1) * c_);
}

Vec ExactMatrix::col(int j) const
{
    Vec v;
    for (int i = 0; i < r_; ++i) v.push_back(at(i, j));
    return v;
}

ExactMatrix ExactMatrix::adjoint() const
{
    ExactMatrix m(f_, c_, r_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) m.at(j, i) = at(i, j).conj();
    return m;
}

ExactMatrix ExactMatrix::transpose() const
{
    ExactMatrix m(f_, c_, r_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) m.at(j, i) = at(i, j);
    return m;
}

bool ExactMatrix::is_hermitian() const
{
    return r_ == c_ && adjoint() == *this;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b)
{
    if (a.c_ != b.r_) throw std::invalid_argument("dimension mismatch");
    ExactMatrix m(a.f_, a.r_, b.c_);
    for (int i = 0; i < a.r_; ++i)
        for (int k = 0; k < a.c_; ++k) {
            const Scalar& x = a.at(i, k);
            if (x.is_zero()) continue;
            for (int j = 0; j < b.c_; ++j)
                if (!b.at(k, j).is_zero()) m.at(i, j) += x * b.at(k, j);
        }
    return m;
}

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b)
{
    ExactMatrix m = a;
    for (std::size_t i = 0; i < m.a_.size(); ++i) m.a_[i] += b.a_[i];
    return m;
}

ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b)
{
    ExactMatrix m = a;
    for (std::size_t i = 0; i < m.a_.size(); ++i) m.a_[i] -= b.a_[i];
    return m;
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b)
{
    return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
}

Vec ExactMatrix::apply(const Vec& v) const
{
    Vec out(r_, Scalar(f_));
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j)
            if (!at(i, j).is_zero() && !v[j].is_zero()) out[i] += at(i, j) * v[j];
    return out;
}

ExactMatrix ExactMatrix::rref(std::vector<int>* pivots) const
{
    ExactMatrix m = *this;
    std::vector<int> piv;
    int r = 0;
    for (int c = 0; c < c_ && r < r_; ++c) {
        int p = r;
        while (p < r_ && m.at(p, c).is_zero()) ++p;
        if (p == r_) continue;
        if (p != r)
            for (int j = 0; j < c_; ++j) std::swap(m.at(p, j), m.at(r, j));
        Scalar inv = m.at(r, c).inverse();
        for (int j = c; j < c_; ++j) m.at(r, j) *= inv;
        for (int i = 0; i < r_; ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            Scalar f = m.at(i, c);
            for (int j = c; j < c_; ++j)
                if (!m.at(r, j).is_zero()) m.at(i, j) -= f * m.at(r, j);
        }
        piv.push_back(c);
        ++r;
    }
    if (pivots) *pivots = piv;
    return m;
}

int ExactMatrix::rank() const
{
    std::vector<int> piv;
    rref(&piv);
    return static_cast<int>(piv.size());
}

Scalar ExactMatrix::det() const
{
    if (r_ != c_) throw std::invalid_argument("det of non-square matrix");
    ExactMatrix m = *this;
    Scalar d(f_, Rational(1));
    for (int c = 0; c < c_; ++c) {
        int p = c;
        while (p < r_ && m.at(p, c).is_zero()) ++p;
        if (p == r_) return Scalar(f_);
        if (p != c) {
            for (int j = 0; j < c_; ++j) std::swap(m.at(p, j), m.at(c, j));
            d = -d;
        }
        d *= m.at(c, c);
        Scalar inv = m.at(c, c).inverse();
        for (int i = c + 1; i < r_; ++i) {
            if (m.at(i, c).is_zero()) continue;
            Scalar f = m.at(i, c) * inv;
            for (int j = c; j < c_; ++j)
                if (!m.at(c, j).is_zero()) m.at(i, j) -= f * m.at(c, j);
        }
    }
    return d;
}

std::vector<Vec> ExactMatrix::nullspace() const
{
    std::vector<int> piv;
    ExactMatrix m = rref(&piv);
    std::vector<bool> is_piv(c_, false);
    for (int p : piv) is_piv[p] = true;
    std::vector<Vec> basis;
    for (int free = 0; free < c_; ++free) {
        if (is_piv[free]) continue;
        Vec v(c_, Scalar(f_));
        v[free] = Scalar(f_, Rational(1));
        for (std::size_t k = 0; k < piv.size(); ++k) v[piv[k]] = -m.at(static_cast<int>(k), free);
        basis.push_back(v);
    }
    return basis;
}

ExactMatrix ExactMatrix::inverse() const
{
    if (r_ != c_) throw std::invalid_argument("inverse of non-square matrix");
    ExactMatrix aug(f_, r_, 2 * c_);
    for (int i = 0; i < r_; ++i) {
        for (int j = 0; j < c_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, c_ + i) = Scalar(f_, Rational(1));
    }
    std::vector<int> piv;
    ExactMatrix red = aug.rref(&piv);
    if (static_cast<int>(piv.size()) < r_ || piv.back() >= c_) throw std::domain_error("singular matrix");
    ExactMatrix inv(f_, r_, c_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) inv.at(i, j) = red.at(i, c_ + j);
    return inv;
}

Eigen::MatrixXcd ExactMatrix::numeric() const
{
    Eigen::MatrixXcd m(r_, c_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) m(i, j) = at(i, j).numeric();
    return m;
}

std::string ExactMatrix::str() const
{
    std::ostringstream os;
    for (int i = 0; i < r_; ++i) {
        os << "[";
        for (int j = 0; j < c_; ++j) os << (j ? ", " : "") << at(i, j).str();
        os << "]\n";
    }
    return os.str();
}

int exact_rank(const ExactMatrix& m)
{
    return m.rank();
}

Vec zero_vec(const FieldSpec& f, int n)
{
    return Vec(n, Scalar(f));
}

Vec add(const Vec& a, const Vec& b)
{
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vec sub(const Vec& a, const Vec& b)
{
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Vec scale(const Scalar& s, const Vec& v)
{
    Vec r = v;
    for (auto& x : r) x = s * x;
    return r;
}

bool is_zero(const Vec& v)
{
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

Scalar herm(const Vec& x, const ExactMatrix& g, const Vec& y)
{
    Scalar s(g.field());
    const int n = g.rows();
    for (int i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        Scalar row(g.field());
        for (int j = 0; j < n; ++j)
            if (!g.at(i, j).is_zero() && !y[j].is_zero()) row += g.at(i, j) * y[j].conj();
        s += x[i] * row;
    }
    return s;
}

Vec normalize_first(const Vec& v)
{
    for (const auto& x : v)
        if (!x.is_zero()) return scale(x.inverse(), v);
    throw std::domain_error("normalize of zero vector");
}

bool proportional(const Vec& v, const Vec& w)
{
    // all 2x2 minors vanish
    int k = -1;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) {
            k = static_cast<int>(i);
            break;
        }
    if (k < 0 || w[k].is_zero()) return false;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!(v[i] * w[k] == w[i] * v[k])) return false;
    return true;
}

int rank_of(const std::vector<Vec>& vs, const FieldSpec& f, int dim)
{
    if (vs.empty()) return 0;
    ExactMatrix m(f, static_cast<int>(vs.size()), dim);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < dim; ++j) m.at(i, j) = vs[i][j];
    return m.rank();
}

} // namespace dunkl
