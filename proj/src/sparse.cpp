#include "sullivan/sparse.hpp"

namespace sullivan {

void axpy(SparseVector& y, const Rational& a, const SparseVector& x)
{
    if (a == 0 || x.empty())
        return;
    SparseVector out;
    out.reserve(y.size() + x.size());
    auto iy = y.begin();
    auto ix = x.begin();
    while (iy != y.end() || ix != x.end()) {
        if (ix == x.end() || (iy != y.end() && iy->index < ix->index)) {
            out.push_back(std::move(*iy++));
        }
        else if (iy == y.end() || ix->index < iy->index) {
            out.push_back({ix->index, a * ix->value});
            ++ix;
        }
        else {
            Rational v = iy->value + a * ix->value;
            if (v != 0)
                out.push_back({iy->index, std::move(v)});
            ++iy;
            ++ix;
        }
    }
    y = std::move(out);
}

SparseVector to_sparse(const Vector& v)
{
    SparseVector out;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0)
            out.push_back({i, v[i]});
    return out;
}

Vector to_dense(const SparseVector& v, std::size_t n)
{
    Vector out(n, Rational(0));
    for (const auto& e : v)
        out.at(e.index) = e.value;
    return out;
}

SparseVector unit_vector(std::size_t index)
{
    return {{index, Rational(1)}};
}

SparseEchelon::Reduction SparseEchelon::reduce(SparseVector v) const
{
    Reduction r;
    while (!v.empty()) {
        auto it = rows_.find(v.front().index);
        if (it == rows_.end())
            break;
        const Row& row = it->second;
        Rational c = v.front().value / row.vector.front().value;
        axpy(v, -c, row.vector);
        axpy(r.coefficients, c, row.history);
    }
    r.remainder = std::move(v);
    return r;
}

bool SparseEchelon::insert(SparseVector v, SparseVector history)
{
    return insert(reduce(std::move(v)), std::move(history));
}

bool SparseEchelon::insert(Reduction r, SparseVector history)
{
    if (r.remainder.empty())
        return false;
    axpy(history, Rational(-1), r.coefficients);
    const std::size_t lead = r.remainder.front().index;
    rows_.emplace(lead, Row{std::move(r.remainder), std::move(history)});
    return true;
}

ColumnReduction reduce_columns(const std::vector<SparseVector>& columns)
{
    ColumnReduction out;
    SparseEchelon echelon;
    for (std::size_t j = 0; j < columns.size(); ++j) {
        SparseEchelon::Reduction r = echelon.reduce(columns[j]);
        SparseVector history = unit_vector(j);
        if (r.remainder.empty()) {
            axpy(history, Rational(-1), r.coefficients);
            out.kernel.push_back(std::move(history));
        }
        else {
            echelon.insert(std::move(r), std::move(history));
            out.image_columns.push_back(j);
        }
    }
    return out;
}

}  // namespace sullivan
