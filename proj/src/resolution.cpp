#include "tracealg/resolution.hpp"

#include <stdexcept>

#include "tracealg/errors.hpp"

namespace tracealg {

FreeResolution resolve(const PresentedModule& m, size_t length, uint32_t degree_cap) {
    if (!m.graded && !m.ring->is_artinian())
        throw std::domain_error("minimal resolution requires grading (or an Artinian ring)");

    FreeResolution res;
    res.ring = m.ring;
    res.graded = m.graded;

    auto [pres, degs] = minimalize_presentation(m.presentation, m.gen_degrees, m.graded);
    res.ranks.push_back(pres.rows);
    res.degrees.push_back(degs);
    if (pres.rows == 0) {
        res.complete = true;
        return res;
    }

    RingMatrix d = minimal_column_generators(pres, degs, m.graded, degree_cap);
    std::vector<int64_t> row_degs = degs;
    while (res.differentials.size() < length) {
        if (d.cols == 0) {
            res.complete = true;
            break;
        }
        std::vector<int64_t> col_degs;
        if (res.graded) {
            auto cd = infer_column_degrees(d, row_degs);
            if (!cd) throw std::logic_error("graded resolution produced inhomogeneous columns");
            col_degs = *cd;
        }
        res.differentials.push_back(d);
        res.ranks.push_back(d.cols);
        res.degrees.push_back(col_degs);
        if (res.differentials.size() == length) break;

        RingMatrix syz = syzygy_matrix(d, degree_cap);
        d = minimal_column_generators(syz, col_degs, res.graded, degree_cap);
        row_degs = std::move(col_degs);
    }
    return res;
}

ModulePtr syzygy_module(const ModulePtr& m, size_t n, uint32_t degree_cap) {
    if (n == 0) return m;
    FreeResolution res = resolve(*m, n + 1, degree_cap);
    size_t rank_n = res.rank(n);
    if (rank_n == 0) {
        auto z = std::make_shared<PresentedModule>(*free_module(m->ring, 0));
        z->zero_flagged = true;
        return z;
    }
    RingMatrix pres = res.differential(n + 1)
                          ? *res.differential(n + 1)
                          : RingMatrix::zero(m->ring, rank_n, 0);
    std::vector<int64_t> degs = res.graded ? res.degrees[n] : std::vector<int64_t>{};
    auto out = std::make_shared<PresentedModule>();
    out->ring = m->ring;
    out->presentation = std::move(pres);
    out->graded = res.graded;
    out->gen_degrees = std::move(degs);
    // the syzygy sits inside the previous free module via d_n
    out->embedding = SubmoduleInfo{
        *res.differential(n),
        free_module(m->ring, res.rank(n - 1),
                    res.graded ? res.degrees[n - 1] : std::vector<int64_t>{})};
    return out;
}

}  // namespace tracealg
