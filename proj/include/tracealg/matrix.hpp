#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tracealg/quotient.hpp"

namespace tracealg {

// Matrix with entries in a quotient ring, stored row-major as normal forms.
// Columns are module elements of R^rows throughout.
struct RingMatrix {
    QRingPtr ring;
    size_t rows = 0, cols = 0;
    std::vector<Polynomial> entries;

    static RingMatrix zero(QRingPtr ring, size_t rows, size_t cols);
    static RingMatrix identity(QRingPtr ring, size_t n);
    static RingMatrix from_columns(QRingPtr ring, size_t rows,
                                   const std::vector<std::vector<Polynomial>>& columns);

    const Polynomial& at(size_t i, size_t j) const { return entries[i * cols + j]; }
    Polynomial& at(size_t i, size_t j) { return entries[i * cols + j]; }
    std::vector<Polynomial> column(size_t j) const;

    RingMatrix transpose() const;
    RingMatrix multiply(const RingMatrix& o) const;
    RingMatrix hconcat(const RingMatrix& o) const;
    RingMatrix select_columns(const std::vector<size_t>& keep) const;
    RingMatrix drop_zero_columns() const;
    bool is_zero() const;

    // "[[a, b], [c, d]]" row-major with polynomial strings
    std::string to_string() const;
};

// Degrees of homogeneous columns given row degrees: entry (i,j) must be
// homogeneous of degree col[j] - row[i]. nullopt if any column fails.
std::optional<std::vector<int64_t>> infer_column_degrees(const RingMatrix& a,
                                                         const std::vector<int64_t>& row_degs);

// Columns generate ker(A : R^cols -> R^rows) as a module over the quotient
// ring, including the relations induced by the defining ideal. A times the
// result is zero.
RingMatrix syzygy_matrix(const RingMatrix& a, uint32_t degree_cap = 0);

// Membership tests in the submodule of R^rank generated by a set of columns
// (defining-ideal multiples included automatically).
class SubmoduleBasis {
public:
    SubmoduleBasis(QRingPtr ring, size_t rank, const RingMatrix& gens, uint32_t degree_cap = 0);
    SubmoduleBasis(QRingPtr ring, size_t rank, const std::vector<std::vector<Polynomial>>& gens,
                   uint32_t degree_cap = 0);

    std::vector<Polynomial> reduce(const std::vector<Polynomial>& v) const;
    bool contains(const std::vector<Polynomial>& v) const;
    bool contains_all_columns(const RingMatrix& m) const;
    size_t ambient_rank() const { return rank_; }

private:
    void build(const std::vector<std::vector<Polynomial>>& gens, uint32_t degree_cap);

    QRingPtr ring_;
    size_t rank_;
    ModuleOrder mo_;
    std::vector<VecPoly> gb_;
};

// Equality of submodules of R^rank given by generator columns; extra columns
// of ambient relations may be supplied (both sides are taken modulo them).
bool submodules_equal(const QRingPtr& ring, size_t rank, const RingMatrix& a, const RingMatrix& b,
                      const RingMatrix* ambient_relations = nullptr, uint32_t degree_cap = 0);

}  // namespace tracealg
