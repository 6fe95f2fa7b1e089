#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tracealg/scalar.hpp"

namespace tracealg {

// Dense exact matrix over a field, for the finite-dimensional linear
// algebra path (null spaces, ranks, solving) independent of the Groebner
// machinery.
class KMatrix {
public:
    KMatrix() = default;
    KMatrix(FieldSpec field, size_t rows, size_t cols)
        : field_(field), rows_(rows), cols_(cols),
          a_(rows * cols, Scalar::zero(field)) {}

    static KMatrix identity(FieldSpec field, size_t n);
    static KMatrix from_columns(FieldSpec field, size_t rows,
                                const std::vector<std::vector<Scalar>>& cols);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    const FieldSpec& field() const { return field_; }
    const Scalar& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }
    Scalar& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
    std::vector<Scalar> column(size_t j) const;

    KMatrix multiply(const KMatrix& o) const;
    std::vector<Scalar> apply(const std::vector<Scalar>& v) const;
    KMatrix transpose() const;
    KMatrix hconcat(const KMatrix& o) const;
    bool is_zero() const;
    bool operator==(const KMatrix& o) const;

    // Gauss-Jordan; returns pivot column indices. Modifies in place.
    std::vector<size_t> rref();
    size_t rank() const;
    // column basis of the kernel
    KMatrix null_space() const;
    // solve A x = b; nullopt if inconsistent
    std::optional<std::vector<Scalar>> solve(const std::vector<Scalar>& b) const;
    // column span basis (as matrix with rank() columns, canonical rref rows)
    KMatrix column_space() const;

    std::string to_string() const;

private:
    FieldSpec field_;
    size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> a_;
};

// v together with a basis matrix: is v in the column span?
bool in_column_span(const KMatrix& basis, const std::vector<Scalar>& v);

// canonical subspace fingerprint: rref of the transpose (row-space form)
std::string subspace_fingerprint(const KMatrix& columns);

bool same_column_span(const KMatrix& a, const KMatrix& b);

}  // namespace tracealg
