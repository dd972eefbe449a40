#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "sullivan/linalg.hpp"

namespace sullivan {

struct SparseEntry {
    std::size_t index;
    Rational value;
};

/// Sorted by index, no explicit zeros.
using SparseVector = std::vector<SparseEntry>;

/// y += a * x
void axpy(SparseVector& y, const Rational& a, const SparseVector& x);
SparseVector to_sparse(const Vector& v);
Vector to_dense(const SparseVector& v, std::size_t n);
SparseVector unit_vector(std::size_t index);

/// Echelon rows keyed by leading index. Each row carries a history: a combination of
/// caller-chosen tags it stands for, so reductions can be translated back into coordinates.
class SparseEchelon {
public:
    struct Reduction {
        SparseVector remainder;     // empty iff the input lies in the span
        SparseVector coefficients;  // history accumulated while eliminating leads
    };

    Reduction reduce(SparseVector v) const;

    /// Reduces v and inserts the remainder with history (history - coefficients).
    /// Returns false, leaving the echelon unchanged, when v is already in the span.
    bool insert(SparseVector v, SparseVector history = {});

    /// Inserts a reduction previously obtained from reduce() on this echelon.
    bool insert(Reduction reduction, SparseVector history);

    std::size_t size() const noexcept { return rows_.size(); }

private:
    struct Row {
        SparseVector vector;
        SparseVector history;
    };
    std::map<std::size_t, Row> rows_;
};

/// Column-by-column reduction of a sparse matrix given by its columns.
struct ColumnReduction {
    std::vector<SparseVector> kernel;        // over column indices
    std::vector<std::size_t> image_columns;  // pivot columns, spanning the image
};

ColumnReduction reduce_columns(const std::vector<SparseVector>& columns);

}  // namespace sullivan
