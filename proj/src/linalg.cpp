#include "sullivan/linalg.hpp"

#include <algorithm>
#include <utility>

#include "sullivan/error.hpp"
#include "sullivan/sparse.hpp"

namespace sullivan {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0))
{
}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
{
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw Error(ErrorKind::DimensionMismatch, "ragged matrix literal");
        for (const auto& x : r)
            data_.push_back(x);
    }
    for (auto& x : data_)
        x.canonicalize();
}

RationalMatrix RationalMatrix::identity(std::size_t n)
{
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::from_columns(std::size_t rows, const std::vector<Vector>& columns)
{
    RationalMatrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != rows)
            throw Error(ErrorKind::DimensionMismatch, "column length differs from row count");
        for (std::size_t r = 0; r < rows; ++r)
            m(r, c) = columns[c][r];
    }
    return m;
}

Vector RationalMatrix::column(std::size_t c) const
{
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        v[r] = (*this)(r, c);
    return v;
}

Vector RationalMatrix::row(std::size_t r) const
{
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

RationalMatrix RationalMatrix::transpose() const
{
    RationalMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

Vector RationalMatrix::apply(const Vector& v) const
{
    if (v.size() != cols_)
        throw Error(ErrorKind::DimensionMismatch, "vector length differs from column count");
    Vector out(rows_, Rational(0));
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if ((*this)(r, c) != 0)
                out[r] += (*this)(r, c) * v[c];
    return out;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b)
{
    if (a.cols_ != b.rows_)
        throw Error(ErrorKind::DimensionMismatch, "matrix product shapes");
    RationalMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& x = a(i, k);
            if (x == 0)
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                out(i, j) += x * b(k, j);
        }
    return out;
}

bool operator==(const RationalMatrix& a, const RationalMatrix& b)
{
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::vector<std::vector<Integer>> to_integer_rows(const RationalMatrix& m)
{
    std::vector<std::vector<Integer>> out(m.rows(), std::vector<Integer>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Integer l = 1;
        for (std::size_t c = 0; c < m.cols(); ++c)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
        for (std::size_t c = 0; c < m.cols(); ++c)
            out[r][c] = m(r, c).get_num() * (l / m(r, c).get_den());
    }
    return out;
}

IntegerEchelon bareiss_echelon(std::vector<std::vector<Integer>> a, std::size_t cols)
{
    IntegerEchelon out;
    const std::size_t rows = a.size();
    std::size_t r = 0;
    Integer prev = 1;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0)
            ++p;
        if (p == rows)
            continue;
        std::swap(a[p], a[r]);
        const Integer& pivot = a[r][c];
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                Integer t = pivot * a[i][j] - a[i][c] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = pivot;
        out.pivot_columns.push_back(c);
        ++r;
    }
    a.resize(r);
    out.rows = std::move(a);
    return out;
}

namespace {

IntegerEchelon echelon_of(const RationalMatrix& m)
{
    return bareiss_echelon(to_integer_rows(m), m.cols());
}

// Solves the echelon system for the pivot unknowns given values of the free ones.
// rhs_column, when set, is a column of the echelon holding the right-hand side.
void back_substitute(const IntegerEchelon& e, Vector& x, std::optional<std::size_t> rhs_column)
{
    for (std::size_t k = e.rows.size(); k-- > 0;) {
        const auto& row = e.rows[k];
        const std::size_t p = e.pivot_columns[k];
        Rational s = rhs_column ? Rational(row[*rhs_column]) : Rational(0);
        const std::size_t end = rhs_column ? *rhs_column : row.size();
        for (std::size_t j = p + 1; j < end; ++j)
            if (row[j] != 0 && x[j] != 0)
                s -= Rational(row[j]) * x[j];
        x[p] = s / Rational(row[p]);
    }
}

}  // namespace

std::size_t rank(const RationalMatrix& m)
{
    return echelon_of(m).pivot_columns.size();
}

SubspaceBasis::SubspaceBasis(std::size_t ambient_dim, std::vector<Vector> vectors)
    : ambient_dim_(ambient_dim), vectors_(std::move(vectors))
{
    for (auto& v : vectors_) {
        if (v.size() != ambient_dim_)
            throw Error(ErrorKind::DimensionMismatch, "basis vector length differs from ambient dimension");
        for (auto& x : v)
            x.canonicalize();
    }
    if (!vectors_.empty() && rank(RationalMatrix::from_columns(ambient_dim_, vectors_)) != vectors_.size())
        throw Error(ErrorKind::NotIndependent, "basis vectors are linearly dependent");
}

SubspaceBasis::SubspaceBasis(Unchecked, std::size_t ambient_dim, std::vector<Vector> vectors)
    : ambient_dim_(ambient_dim), vectors_(std::move(vectors))
{
}

SubspaceBasis SubspaceBasis::full(std::size_t ambient_dim)
{
    std::vector<Vector> vs;
    for (std::size_t i = 0; i < ambient_dim; ++i) {
        Vector v(ambient_dim, Rational(0));
        v[i] = 1;
        vs.push_back(std::move(v));
    }
    return SubspaceBasis(ambient_dim, std::move(vs));
}

SubspaceBasis kernel_basis(const RationalMatrix& m)
{
    const IntegerEchelon e = echelon_of(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivot_columns)
        is_pivot[p] = true;
    std::vector<Vector> out;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f])
            continue;
        Vector x(m.cols(), Rational(0));
        x[f] = 1;
        back_substitute(e, x, std::nullopt);
        out.push_back(std::move(x));
    }
    return SubspaceBasis(SubspaceBasis::Unchecked{}, m.cols(), std::move(out));
}

SubspaceBasis image_basis(const RationalMatrix& m)
{
    const IntegerEchelon e = echelon_of(m);
    std::vector<Vector> out;
    for (auto p : e.pivot_columns)
        out.push_back(m.column(p));
    return SubspaceBasis(SubspaceBasis::Unchecked{}, m.rows(), std::move(out));
}

Membership image_membership(const SubspaceBasis& basis, const Vector& v)
{
    if (v.size() != basis.ambient_dim())
        throw Error(ErrorKind::DimensionMismatch, "vector length differs from ambient dimension");
    const std::size_t k = basis.dim();
    std::vector<Vector> columns = basis.vectors();
    columns.push_back(v);
    const IntegerEchelon e = echelon_of(RationalMatrix::from_columns(basis.ambient_dim(), columns));
    if (std::find(e.pivot_columns.begin(), e.pivot_columns.end(), k) != e.pivot_columns.end())
        return {};
    Vector x(k + 1, Rational(0));
    back_substitute(e, x, k);
    x.pop_back();
    return {true, std::move(x)};
}

SubspaceBasis quotient_basis(const SubspaceBasis& sub, const SubspaceBasis& ambient)
{
    if (sub.ambient_dim() != ambient.ambient_dim())
        throw Error(ErrorKind::DimensionMismatch, "subspace and ambient live in different spaces");
    SparseEchelon span;
    for (const auto& v : ambient.vectors())
        span.insert(to_sparse(v));
    for (const auto& v : sub.vectors())
        if (!span.reduce(to_sparse(v)).remainder.empty())
            throw Error(ErrorKind::NotASubspace, "a subspace vector lies outside the ambient span");

    SparseEchelon chosen;
    for (const auto& v : sub.vectors())
        chosen.insert(to_sparse(v));
    std::vector<Vector> out;
    for (const auto& v : ambient.vectors())
        if (chosen.insert(to_sparse(v)))
            out.push_back(v);
    return SubspaceBasis(SubspaceBasis::Unchecked{}, ambient.ambient_dim(), std::move(out));
}

}  // namespace sullivan
