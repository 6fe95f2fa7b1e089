#include "tracealg/matrix.hpp"

#include <stdexcept>

namespace tracealg {

RingMatrix RingMatrix::zero(QRingPtr ring, size_t rows, size_t cols) {
    RingMatrix m;
    m.rows = rows;
    m.cols = cols;
    m.entries.assign(rows * cols, Polynomial::zero(ring->base()));
    m.ring = std::move(ring);
    return m;
}

RingMatrix RingMatrix::identity(QRingPtr ring, size_t n) {
    RingMatrix m = zero(ring, n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = Polynomial::one(m.ring->base());
    return m;
}

RingMatrix RingMatrix::from_columns(QRingPtr ring, size_t rows,
                                    const std::vector<std::vector<Polynomial>>& columns) {
    RingMatrix m = zero(std::move(ring), rows, columns.size());
    for (size_t j = 0; j < columns.size(); ++j) {
        if (columns[j].size() != rows) throw std::invalid_argument("column height mismatch");
        for (size_t i = 0; i < rows; ++i) m.at(i, j) = m.ring->nf(columns[j][i]);
    }
    return m;
}

std::vector<Polynomial> RingMatrix::column(size_t j) const {
    std::vector<Polynomial> c;
    c.reserve(rows);
    for (size_t i = 0; i < rows; ++i) c.push_back(at(i, j));
    return c;
}

RingMatrix RingMatrix::transpose() const {
    RingMatrix m = zero(ring, cols, rows);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) m.at(j, i) = at(i, j);
    return m;
}

RingMatrix RingMatrix::multiply(const RingMatrix& o) const {
    if (cols != o.rows) throw std::invalid_argument("matrix shape mismatch");
    RingMatrix m = zero(ring, rows, o.cols);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < o.cols; ++j) {
            Polynomial acc = Polynomial::zero(ring->base());
            for (size_t k = 0; k < cols; ++k) acc += at(i, k) * o.at(k, j);
            m.at(i, j) = ring->nf(acc);
        }
    return m;
}

RingMatrix RingMatrix::hconcat(const RingMatrix& o) const {
    if (rows != o.rows) throw std::invalid_argument("row count mismatch");
    RingMatrix m = zero(ring, rows, cols + o.cols);
    for (size_t i = 0; i < rows; ++i) {
        for (size_t j = 0; j < cols; ++j) m.at(i, j) = at(i, j);
        for (size_t j = 0; j < o.cols; ++j) m.at(i, cols + j) = o.at(i, j);
    }
    return m;
}

RingMatrix RingMatrix::select_columns(const std::vector<size_t>& keep) const {
    RingMatrix m = zero(ring, rows, keep.size());
    for (size_t j = 0; j < keep.size(); ++j)
        for (size_t i = 0; i < rows; ++i) m.at(i, j) = at(i, keep[j]);
    return m;
}

RingMatrix RingMatrix::drop_zero_columns() const {
    std::vector<size_t> keep;
    for (size_t j = 0; j < cols; ++j) {
        bool zero = true;
        for (size_t i = 0; i < rows && zero; ++i) zero = at(i, j).is_zero();
        if (!zero) keep.push_back(j);
    }
    return select_columns(keep);
}

bool RingMatrix::is_zero() const {
    for (const auto& e : entries)
        if (!e.is_zero()) return false;
    return true;
}

std::string RingMatrix::to_string() const {
    std::string out = "[";
    for (size_t i = 0; i < rows; ++i) {
        out += i ? ", [" : "[";
        for (size_t j = 0; j < cols; ++j) {
            if (j) out += ", ";
            out += at(i, j).to_string();
        }
        out += "]";
    }
    return out + "]";
}

std::optional<std::vector<int64_t>> infer_column_degrees(const RingMatrix& a,
                                                         const std::vector<int64_t>& row_degs) {
    if (row_degs.size() != a.rows) return std::nullopt;
    std::vector<int64_t> out(a.cols, 0);
    for (size_t j = 0; j < a.cols; ++j) {
        bool found = false;
        for (size_t i = 0; i < a.rows; ++i) {
            const Polynomial& e = a.at(i, j);
            if (e.is_zero()) continue;
            auto d = e.homogeneous_degree();
            if (!d) return std::nullopt;
            int64_t cd = *d + row_degs[i];
            if (!found) {
                out[j] = cd;
                found = true;
            } else if (out[j] != cd) {
                return std::nullopt;
            }
        }
        // all-zero columns are homogeneous of degree 0 by convention
    }
    return out;
}

RingMatrix syzygy_matrix(const RingMatrix& a, uint32_t degree_cap) {
    const QRingPtr& R = a.ring;
    const PolyRingPtr& P = R->base();
    size_t s = a.rows, t = a.cols;
    if (t == 0) return RingMatrix::zero(R, 0, 0);
    if (s == 0) return RingMatrix::identity(R, t);

    uint32_t rank = static_cast<uint32_t>(s + t);
    ModuleOrder mo{P->order, static_cast<uint32_t>(s)};
    std::vector<VecPoly> gens;
    for (size_t j = 0; j < t; ++j) {
        std::vector<Polynomial> comps(rank, Polynomial::zero(P));
        for (size_t i = 0; i < s; ++i) comps[i] = R->nf(a.at(i, j));
        comps[s + j] = Polynomial::one(P);
        gens.push_back(VecPoly::from_components(P, comps, mo));
    }
    for (const auto& f : R->defining().gens) {
        for (size_t q = 0; q < s; ++q) {
            std::vector<Polynomial> comps(rank, Polynomial::zero(P));
            comps[q] = f;
            gens.push_back(VecPoly::from_components(P, comps, mo));
        }
    }
    auto gb = module_groebner(std::move(gens), mo, degree_cap);

    std::vector<std::vector<Polynomial>> cols;
    for (const auto& v : gb) {
        if (!v.supported_below(static_cast<uint32_t>(s))) continue;
        std::vector<Polynomial> col(t, Polynomial::zero(P));
        bool nonzero = false;
        for (size_t j = 0; j < t; ++j) {
            col[j] = R->nf(v.component(static_cast<uint32_t>(s + j)));
            nonzero = nonzero || !col[j].is_zero();
        }
        if (nonzero) cols.push_back(std::move(col));
    }
    return RingMatrix::from_columns(R, t, cols);
}

SubmoduleBasis::SubmoduleBasis(QRingPtr ring, size_t rank, const RingMatrix& gens,
                               uint32_t degree_cap)
    : ring_(std::move(ring)), rank_(rank), mo_{ring_->base()->order, 0} {
    std::vector<std::vector<Polynomial>> cols;
    for (size_t j = 0; j < gens.cols; ++j) cols.push_back(gens.column(j));
    build(cols, degree_cap);
}

SubmoduleBasis::SubmoduleBasis(QRingPtr ring, size_t rank,
                               const std::vector<std::vector<Polynomial>>& gens,
                               uint32_t degree_cap)
    : ring_(std::move(ring)), rank_(rank), mo_{ring_->base()->order, 0} {
    build(gens, degree_cap);
}

void SubmoduleBasis::build(const std::vector<std::vector<Polynomial>>& gens,
                           uint32_t degree_cap) {
    const PolyRingPtr& P = ring_->base();
    std::vector<VecPoly> in;
    for (const auto& g : gens) {
        if (g.size() != rank_) throw std::invalid_argument("generator height mismatch");
        in.push_back(VecPoly::from_components(P, g, mo_));
    }
    for (const auto& f : ring_->defining().gens) {
        for (size_t q = 0; q < rank_; ++q) {
            std::vector<Polynomial> comps(rank_, Polynomial::zero(P));
            comps[q] = f;
            in.push_back(VecPoly::from_components(P, comps, mo_));
        }
    }
    gb_ = module_groebner(std::move(in), mo_, degree_cap);
}

std::vector<Polynomial> SubmoduleBasis::reduce(const std::vector<Polynomial>& v) const {
    if (v.size() != rank_) throw std::invalid_argument("vector height mismatch");
    VecPoly w = VecPoly::from_components(ring_->base(), v, mo_);
    return module_normal_form(std::move(w), gb_, mo_).to_components();
}

bool SubmoduleBasis::contains(const std::vector<Polynomial>& v) const {
    for (const auto& c : reduce(v))
        if (!c.is_zero()) return false;
    return true;
}

bool SubmoduleBasis::contains_all_columns(const RingMatrix& m) const {
    for (size_t j = 0; j < m.cols; ++j)
        if (!contains(m.column(j))) return false;
    return true;
}

bool submodules_equal(const QRingPtr& ring, size_t rank, const RingMatrix& a, const RingMatrix& b,
                      const RingMatrix* ambient_relations, uint32_t degree_cap) {
    RingMatrix ga = a, gb = b;
    if (ambient_relations) {
        ga = ga.hconcat(*ambient_relations);
        gb = gb.hconcat(*ambient_relations);
    }
    SubmoduleBasis sa(ring, rank, ga, degree_cap);
    SubmoduleBasis sb(ring, rank, gb, degree_cap);
    return sa.contains_all_columns(b) && sb.contains_all_columns(a);
}

}  // namespace tracealg
