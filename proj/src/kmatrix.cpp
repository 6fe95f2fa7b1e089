#include "tracealg/kmatrix.hpp"

#include <stdexcept>

namespace tracealg {

KMatrix KMatrix::identity(FieldSpec field, size_t n) {
    KMatrix m(field, n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(field);
    return m;
}

KMatrix KMatrix::from_columns(FieldSpec field, size_t rows,
                              const std::vector<std::vector<Scalar>>& cols) {
    KMatrix m(field, rows, cols.size());
    for (size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) throw std::invalid_argument("column height mismatch");
        for (size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
}

std::vector<Scalar> KMatrix::column(size_t j) const {
    std::vector<Scalar> c;
    c.reserve(rows_);
    for (size_t i = 0; i < rows_; ++i) c.push_back(at(i, j));
    return c;
}

KMatrix KMatrix::multiply(const KMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
    KMatrix m(field_, rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (size_t j = 0; j < o.cols_; ++j)
                m.at(i, j) += at(i, k) * o.at(k, j);
        }
    return m;
}

std::vector<Scalar> KMatrix::apply(const std::vector<Scalar>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("vector length mismatch");
    std::vector<Scalar> out(rows_, Scalar::zero(field_));
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero() && !v[j].is_zero()) out[i] += at(i, j) * v[j];
    return out;
}

KMatrix KMatrix::transpose() const {
    KMatrix m(field_, cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

KMatrix KMatrix::hconcat(const KMatrix& o) const {
    if (rows_ != o.rows_) throw std::invalid_argument("row count mismatch");
    KMatrix m(field_, rows_, cols_ + o.cols_);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
        for (size_t j = 0; j < o.cols_; ++j) m.at(i, cols_ + j) = o.at(i, j);
    }
    return m;
}

bool KMatrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

bool KMatrix::operator==(const KMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && field_ == o.field_ &&
           [&] {
               for (size_t i = 0; i < a_.size(); ++i)
                   if (a_[i] != o.a_[i]) return false;
               return true;
           }();
}

std::vector<size_t> KMatrix::rref() {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < cols_ && row < rows_; ++col) {
        size_t p = rows_;
        for (size_t i = row; i < rows_; ++i)
            if (!at(i, col).is_zero()) {
                p = i;
                break;
            }
        if (p == rows_) continue;
        if (p != row)
            for (size_t j = 0; j < cols_; ++j) std::swap(at(p, j), at(row, j));
        Scalar inv = at(row, col).inverse();
        for (size_t j = 0; j < cols_; ++j) at(row, j) = at(row, j) * inv;
        for (size_t i = 0; i < rows_; ++i) {
            if (i == row || at(i, col).is_zero()) continue;
            Scalar f = at(i, col);
            for (size_t j = 0; j < cols_; ++j) at(i, j) = at(i, j) - f * at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

size_t KMatrix::rank() const {
    KMatrix tmp = *this;
    return tmp.rref().size();
}

KMatrix KMatrix::null_space() const {
    KMatrix tmp = *this;
    std::vector<size_t> pivots = tmp.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (size_t p : pivots) is_pivot[p] = true;
    std::vector<std::vector<Scalar>> basis;
    for (size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Scalar> v(cols_, Scalar::zero(field_));
        v[free] = Scalar::one(field_);
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -tmp.at(r, free);
        basis.push_back(std::move(v));
    }
    return from_columns(field_, cols_, basis);
}

std::optional<std::vector<Scalar>> KMatrix::solve(const std::vector<Scalar>& b) const {
    if (b.size() != rows_) throw std::invalid_argument("rhs length mismatch");
    KMatrix aug(field_, rows_, cols_ + 1);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_) = b[i];
    }
    std::vector<size_t> pivots = aug.rref();
    if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;  // inconsistent
    std::vector<Scalar> x(cols_, Scalar::zero(field_));
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, cols_);
    return x;
}

KMatrix KMatrix::column_space() const {
    KMatrix t = transpose();
    std::vector<size_t> pivots = t.rref();
    KMatrix out(field_, rows_, pivots.size());
    for (size_t r = 0; r < pivots.size(); ++r)
        for (size_t i = 0; i < rows_; ++i) out.at(i, r) = t.at(r, i);
    return out;
}

std::string KMatrix::to_string() const {
    std::string s = "[";
    for (size_t i = 0; i < rows_; ++i) {
        s += i ? "; " : "";
        for (size_t j = 0; j < cols_; ++j) {
            if (j) s += ",";
            s += at(i, j).to_string();
        }
    }
    return s + "]";
}

bool in_column_span(const KMatrix& basis, const std::vector<Scalar>& v) {
    return basis.solve(v).has_value();
}

std::string subspace_fingerprint(const KMatrix& columns) {
    KMatrix t = columns.transpose();
    t.rref();
    std::string s = std::to_string(columns.rows()) + ":";
    size_t r = 0;
    for (size_t i = 0; i < t.rows(); ++i) {
        bool zero = true;
        for (size_t j = 0; j < t.cols(); ++j) zero = zero && t.at(i, j).is_zero();
        if (zero) continue;
        ++r;
        for (size_t j = 0; j < t.cols(); ++j) s += t.at(i, j).to_string() + ",";
        s += ";";
    }
    return s + "#" + std::to_string(r);
}

bool same_column_span(const KMatrix& a, const KMatrix& b) {
    return subspace_fingerprint(a) == subspace_fingerprint(b);
}

}  // namespace tracealg
