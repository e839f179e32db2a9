#include "mapspace/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace mapspace {

Matrix Matrix::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

bool Matrix::is_zero() const
{
    for (const auto& x : data_)
        if (sgn(x) != 0)
            return false;
    return true;
}

Matrix Matrix::transpose() const
{
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

std::vector<Scalar> Matrix::column(std::size_t c) const
{
    std::vector<Scalar> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        v[r] = (*this)(r, c);
    return v;
}

Matrix operator*(const Matrix& a, const Matrix& b)
{
    if (a.cols_ != b.rows_)
        throw std::invalid_argument("matrix product: shape mismatch");
    Matrix p(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& aik = a(i, k);
            if (sgn(aik) == 0)
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                p(i, j) += aik * b(k, j);
        }
    return p;
}

Matrix operator+(const Matrix& a, const Matrix& b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("matrix sum: shape mismatch");
    Matrix s = a;
    for (std::size_t i = 0; i < s.data_.size(); ++i)
        s.data_[i] += b.data_[i];
    return s;
}

Matrix operator*(const Scalar& s, const Matrix& m)
{
    Matrix r = m;
    for (auto& x : r.data_)
        x *= s;
    return r;
}

std::string Matrix::to_string() const
{
    std::string out = "[";
    for (std::size_t r = 0; r < rows_; ++r) {
        out += r ? ", [" : "[";
        for (std::size_t c = 0; c < cols_; ++c) {
            if (c)
                out += ", ";
            out += mapspace::to_string((*this)(r, c));
        }
        out += "]";
    }
    return out + "]";
}

namespace {

// Row-reduces m in place; returns rank and accumulates the determinant sign/pivots.
std::size_t eliminate(Matrix& m, Scalar* det)
{
    std::size_t rank = 0;
    if (det)
        *det = 1;
    for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
        std::size_t pivot = rank;
        while (pivot < m.rows() && sgn(m(pivot, c)) == 0)
            ++pivot;
        if (pivot == m.rows()) {
            if (det)
                *det = 0;
            continue;
        }
        if (pivot != rank) {
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m(pivot, j), m(rank, j));
            if (det)
                *det = -*det;
        }
        if (det)
            *det *= m(rank, c);
        for (std::size_t r = rank + 1; r < m.rows(); ++r) {
            if (sgn(m(r, c)) == 0)
                continue;
            Scalar factor = m(r, c) / m(rank, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                m(r, j) -= factor * m(rank, j);
        }
        ++rank;
    }
    return rank;
}

}  // namespace

std::size_t rank(Matrix m) { return eliminate(m, nullptr); }

Scalar determinant(Matrix m)
{
    if (!m.is_square())
        throw std::invalid_argument("determinant of a non-square matrix");
    if (m.rows() == 0)
        return 1;
    Scalar det;
    std::size_t r = eliminate(m, &det);
    return r == m.rows() ? det : Scalar(0);
}

bool is_regular(const Matrix& m) { return m.is_square() && rank(m) == m.rows(); }

std::optional<Matrix> inverse(const Matrix& m)
{
    if (!m.is_square())
        return std::nullopt;
    const std::size_t n = m.rows();
    Matrix a = m;
    Matrix inv = Matrix::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && sgn(a(pivot, c)) == 0)
            ++pivot;
        if (pivot == n)
            return std::nullopt;
        if (pivot != c)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(pivot, j), a(c, j));
                std::swap(inv(pivot, j), inv(c, j));
            }
        Scalar p = a(c, c);
        for (std::size_t j = 0; j < n; ++j) {
            a(c, j) /= p;
            inv(c, j) /= p;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || sgn(a(r, c)) == 0)
                continue;
            Scalar f = a(r, c);
            for (std::size_t j = 0; j < n; ++j) {
                a(r, j) -= f * a(c, j);
                inv(r, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

std::vector<Scalar> primitive_integer(std::vector<Scalar> v)
{
    mpz_class lcm_den = 1;
    for (const auto& x : v)
        if (sgn(x) != 0)
            mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.get_den_mpz_t());
    mpz_class g = 0;
    for (auto& x : v) {
        x *= lcm_den;
        if (sgn(x) != 0)
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num_mpz_t());
    }
    if (g == 0)
        return v;
    int lead = 0;
    for (const auto& x : v)
        if (sgn(x) != 0) {
            lead = sgn(x);
            break;
        }
    Scalar scale(lead < 0 ? mpz_class(-1) : mpz_class(1), g);
    scale.canonicalize();
    for (auto& x : v)
        x *= scale;
    return v;
}

namespace {

// Applies the column operation  col_dst += f * col_src  to P and the matching
// congruence  G <- E^T G E  to the form.
void add_column(Matrix& change, Matrix& form, std::size_t dst, std::size_t src, const Scalar& f)
{
    const std::size_t n = form.rows();
    for (std::size_t r = 0; r < change.rows(); ++r)
        change(r, dst) += f * change(r, src);
    for (std::size_t r = 0; r < n; ++r)
        form(r, dst) += f * form(r, src);
    for (std::size_t c = 0; c < n; ++c)
        form(dst, c) += f * form(src, c);
}

void swap_columns(Matrix& change, Matrix& form, std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    const std::size_t n = form.rows();
    for (std::size_t r = 0; r < change.rows(); ++r)
        std::swap(change(r, a), change(r, b));
    for (std::size_t r = 0; r < n; ++r)
        std::swap(form(r, a), form(r, b));
    for (std::size_t c = 0; c < n; ++c)
        std::swap(form(a, c), form(b, c));
}

Matrix congruent(const Matrix& gram, const Matrix& change) { return change.transpose() * gram * change; }

void normalize_columns(Matrix& change)
{
    for (std::size_t c = 0; c < change.cols(); ++c) {
        auto col = primitive_integer(change.column(c));
        for (std::size_t r = 0; r < change.rows(); ++r)
            change(r, c) = col[r];
    }
}

}  // namespace

Congruence diagonalize_symmetric(const Matrix& gram)
{
    if (!gram.is_square() || gram.transpose() != gram)
        throw std::invalid_argument("diagonalize_symmetric: form is not symmetric");
    const std::size_t n = gram.rows();
    Matrix change = Matrix::identity(n);
    Matrix form = gram;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && sgn(form(pivot, pivot)) == 0)
            ++pivot;
        if (pivot < n) {
            swap_columns(change, form, k, pivot);
        } else {
            // No anisotropic basis vector left; x + y is anisotropic when b(x, y) != 0.
            std::size_t i = n, j = n;
            for (std::size_t a = k; a < n && i == n; ++a)
                for (std::size_t b = a + 1; b < n; ++b)
                    if (sgn(form(a, b)) != 0) {
                        i = a;
                        j = b;
                        break;
                    }
            if (i == n)
                break;  // remaining block is zero
            add_column(change, form, i, j, 1);
            swap_columns(change, form, k, i);
        }
        for (std::size_t r = k + 1; r < n; ++r) {
            if (sgn(form(k, r)) == 0)
                continue;
            Scalar f = -form(k, r) / form(k, k);
            add_column(change, form, r, k, f);
        }
    }
    normalize_columns(change);
    return {change, congruent(gram, change)};
}

std::optional<Congruence> symplectic_normal_form(const Matrix& gram)
{
    if (!gram.is_square() || (-1) * gram.transpose() != gram)
        throw std::invalid_argument("symplectic_normal_form: form is not skew-symmetric");
    const std::size_t n = gram.rows();
    if (n % 2 != 0)
        return std::nullopt;
    Matrix change = Matrix::identity(n);
    Matrix form = gram;
    for (std::size_t k = 0; k < n; k += 2) {
        std::size_t i = n, j = n;
        for (std::size_t a = k; a < n && i == n; ++a)
            for (std::size_t b = k; b < n; ++b)
                if (sgn(form(a, b)) != 0) {
                    i = a;
                    j = b;
                    break;
                }
        if (i == n)
            return std::nullopt;
        // Place the pair so that form(k+1, k) = l and form(k, k+1) = -l.
        if (i < j) {
            swap_columns(change, form, k, i);
            swap_columns(change, form, k + 1, j == k ? i : j);
        } else {
            swap_columns(change, form, k, j);
            swap_columns(change, form, k + 1, i == k ? j : i);
        }
        const Scalar lambda = form(k + 1, k);
        for (std::size_t r = k + 2; r < n; ++r) {
            Scalar beta = form(r, k) / lambda;
            Scalar alpha = -form(r, k + 1) / lambda;
            if (sgn(alpha) != 0)
                add_column(change, form, r, k, -alpha);
            if (sgn(beta) != 0)
                add_column(change, form, r, k + 1, -beta);
        }
    }
    normalize_columns(change);
    return Congruence{change, congruent(gram, change)};
}

}  // namespace mapspace
