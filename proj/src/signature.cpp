#include "dunkl/signature.hpp"

#include <cmath>
#include <stdexcept>

namespace dunkl {

std::string Signature::str() const
{
    return "(" + std::to_string(pos) + "," + std::to_string(null) + "," + std::to_string(neg) + ")";
}

Signature hermitian_signature(const Eigen::MatrixXcd& g, double tol,
                              const std::function<std::optional<Signature>()>& exact_hook)
{
    if (g.rows() != g.cols()) throw std::invalid_argument("signature of non-square matrix");
    if ((g - g.adjoint()).cwiseAbs().maxCoeff() > tol) throw std::invalid_argument("matrix is not hermitian within tolerance");
    Signature s;
    if (g.rows() == 0) return s;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(g, Eigen::EigenvaluesOnly);
    bool ambiguous = false;
    for (int i = 0; i < es.eigenvalues().size(); ++i) {
        double e = es.eigenvalues()(i);
        if (std::fabs(e) >= tol / 10 && std::fabs(e) <= tol * 10) ambiguous = true;
        if (e > tol)
            ++s.pos;
        else if (e < -tol)
            ++s.neg;
        else
            ++s.null;
    }
    if (ambiguous && exact_hook) {
        if (auto ex = exact_hook()) return *ex;
    }
    return s;
}

Signature exact_hermitian_signature(const ExactMatrix& g0)
{
    if (!g0.is_hermitian()) throw std::invalid_argument("matrix is not hermitian");
    ExactMatrix a = g0;
    const FieldSpec f = a.field();
    const int n = a.rows();
    Signature s;
    int k = 0;
    auto swap_rc = [&](int i, int j) {
        for (int c = 0; c < n; ++c) std::swap(a.at(i, c), a.at(j, c));
        for (int r = 0; r < n; ++r) std::swap(a.at(r, i), a.at(r, j));
    };
    while (k < n) {
        int p = -1;
        for (int i = k; i < n; ++i)
            if (!a.at(i, i).is_zero()) {
                p = i;
                break;
            }
        if (p < 0) {
            // zero diagonal: find an off-diagonal entry and fold it into the diagonal
            int pi = -1, pj = -1;
            for (int i = k; i < n && pi < 0; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (!a.at(i, j).is_zero()) {
                        pi = i;
                        pj = j;
                        break;
                    }
            if (pi < 0) {
                s.null += n - k;
                break;
            }
            // row/col pi += c * row/col pj with Re(conj(c) a_ij) != 0
            Scalar c(f);
            std::vector<Scalar> tries;
            tries.push_back(Scalar(f, Rational(1)));
            if (f.kind == FieldSpec::Kind::cyclotomic)
                for (int e = 1; e < f.degree(); ++e) tries.push_back(Scalar::gen_power(f, e));
            tries.push_back(a.at(pi, pj));
            for (const auto& t : tries) {
                Scalar re = t.conj() * a.at(pi, pj);
                re += re.conj();
                if (!re.is_zero()) {
                    c = t;
                    break;
                }
            }
            for (int col = 0; col < n; ++col) a.at(pi, col) += c * a.at(pj, col);
            for (int row = 0; row < n; ++row) a.at(row, pi) += c.conj() * a.at(row, pj);
            p = pi;
        }
        if (p != k) swap_rc(p, k);
        Scalar piv = a.at(k, k);
        Scalar inv = piv.inverse();
        for (int i = k + 1; i < n; ++i) {
            if (a.at(i, k).is_zero()) continue;
            Scalar m = a.at(i, k) * inv;
            for (int c = k; c < n; ++c) a.at(i, c) -= m * a.at(k, c);
            Scalar mc = m.conj();
            for (int r = k; r < n; ++r) a.at(r, i) -= mc * a.at(r, k);
        }
        int sg = piv.sign();
        if (sg > 0)
            ++s.pos;
        else
            ++s.neg;
        ++k;
    }
    return s;
}

Signature hermitian_signature(const ExactMatrix& g, double tol)
{
    return hermitian_signature(g.numeric(), tol, [&]() -> std::optional<Signature> { return exact_hermitian_signature(g); });
}

bool positive_definite(const ExactMatrix& g)
{
    const int n = g.rows();
    for (int k = 1; k <= n; ++k) {
        ExactMatrix m(g.field(), k, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) m.at(i, j) = g.at(i, j);
        if (m.det().sign() <= 0) return false;
    }
    return true;
}

} // namespace dunkl
