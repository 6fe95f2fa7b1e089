#include "tracealg/module.hpp"

#include <algorithm>
#include <stdexcept>

#include "tracealg/errors.hpp"

namespace tracealg {

std::vector<Polynomial> PresentedModule::ideal_generators() const {
    if (!is_ideal()) throw std::invalid_argument("module is not an embedded ideal");
    std::vector<Polynomial> out;
    for (size_t j = 0; j < embedding->vectors.cols; ++j)
        out.push_back(embedding->vectors.at(0, j));
    return out;
}

ModulePtr free_module(QRingPtr ring, size_t rank, std::vector<int64_t> degrees) {
    auto m = std::make_shared<PresentedModule>();
    m->ring = ring;
    m->presentation = RingMatrix::zero(ring, rank, 0);
    if (degrees.empty()) degrees.assign(rank, 0);
    if (degrees.size() != rank) throw std::invalid_argument("degree count mismatch");
    m->gen_degrees = std::move(degrees);
    m->graded = ring->graded();
    return m;
}

ModulePtr ring_as_module(QRingPtr ring) { return free_module(std::move(ring), 1); }

ModulePtr present_ideal(const std::vector<Polynomial>& gens, const QRingPtr& ring,
                        uint32_t degree_cap) {
    auto m = std::make_shared<PresentedModule>();
    m->ring = ring;
    std::vector<std::vector<Polynomial>> cols;
    for (const auto& g : gens) {
        Polynomial f = ring->nf(g);
        if (f.is_zero()) throw std::invalid_argument("ideal generator is zero in the ring");
        cols.push_back({std::move(f)});
    }
    RingMatrix embed = RingMatrix::from_columns(ring, 1, cols);
    m->zero_flagged = gens.empty();
    m->embedding = SubmoduleInfo{embed, nullptr};
    RingMatrix row = embed;  // 1 x m matrix of the generators
    m->presentation = syzygy_matrix(row, degree_cap);
    m->graded = ring->graded();
    for (size_t j = 0; j < embed.cols; ++j) {
        auto d = embed.at(0, j).homogeneous_degree();
        if (d && m->graded) {
            m->gen_degrees.push_back(*d);
        } else {
            m->graded = false;
        }
    }
    if (!m->graded) m->gen_degrees.clear();
    return m;
}

ModulePtr quotient_by_ideal(const std::vector<Polynomial>& gens, const QRingPtr& ring) {
    auto m = std::make_shared<PresentedModule>();
    m->ring = ring;
    std::vector<std::vector<Polynomial>> cols;
    for (const auto& g : gens) {
        Polynomial f = ring->nf(g);
        if (!f.is_zero()) cols.push_back({std::move(f)});
    }
    m->presentation = RingMatrix::from_columns(ring, 1, cols);
    m->gen_degrees = {0};
    m->graded = ring->graded();
    if (m->graded)
        for (size_t j = 0; j < m->presentation.cols; ++j)
            if (!m->presentation.at(0, j).homogeneous_degree()) m->graded = false;
    if (!m->graded) m->gen_degrees.clear();
    return m;
}

ModulePtr submodule_of(const ModulePtr& x, const RingMatrix& vectors, uint32_t degree_cap) {
    if (vectors.rows != x->gen_count())
        throw std::invalid_argument("submodule vectors must live in the ambient's coordinates");
    auto m = std::make_shared<PresentedModule>();
    m->ring = x->ring;
    m->zero_flagged = vectors.cols == 0;
    m->embedding = SubmoduleInfo{vectors, x};
    RingMatrix combined = vectors.hconcat(x->presentation);
    RingMatrix syz = syzygy_matrix(combined, degree_cap);
    // relations among our generators: first block of rows
    RingMatrix pres = RingMatrix::zero(x->ring, vectors.cols, syz.cols);
    for (size_t i = 0; i < vectors.cols; ++i)
        for (size_t j = 0; j < syz.cols; ++j) pres.at(i, j) = syz.at(i, j);
    m->presentation = pres.drop_zero_columns();
    m->graded = false;
    if (x->graded) {
        auto degs = infer_column_degrees(vectors, x->gen_degrees);
        if (degs) {
            m->gen_degrees = *degs;
            m->graded = true;
        }
    }
    return m;
}

ModulePtr quotient_module(const ModulePtr& x, const RingMatrix& sub_vectors) {
    if (sub_vectors.rows != x->gen_count())
        throw std::invalid_argument("submodule vectors must live in the ambient's coordinates");
    auto m = std::make_shared<PresentedModule>();
    m->ring = x->ring;
    m->presentation = x->presentation.hconcat(sub_vectors);
    m->gen_degrees = x->gen_degrees;
    m->graded = false;
    if (x->graded) {
        auto degs = infer_column_degrees(sub_vectors, x->gen_degrees);
        m->graded = degs.has_value();
    }
    if (!m->graded) m->gen_degrees.clear();
    return m;
}

ModulePtr direct_sum(const ModulePtr& a, const ModulePtr& b) {
    if (!same_qring(a->ring, b->ring)) throw std::invalid_argument("ring mismatch");
    size_t rows = a->gen_count() + b->gen_count();
    size_t cols = a->presentation.cols + b->presentation.cols;
    RingMatrix pres = RingMatrix::zero(a->ring, rows, cols);
    for (size_t i = 0; i < a->gen_count(); ++i)
        for (size_t j = 0; j < a->presentation.cols; ++j) pres.at(i, j) = a->presentation.at(i, j);
    for (size_t i = 0; i < b->gen_count(); ++i)
        for (size_t j = 0; j < b->presentation.cols; ++j)
            pres.at(a->gen_count() + i, a->presentation.cols + j) = b->presentation.at(i, j);
    auto m = std::make_shared<PresentedModule>();
    m->ring = a->ring;
    m->presentation = std::move(pres);
    m->graded = a->graded && b->graded;
    if (m->graded) {
        m->gen_degrees = a->gen_degrees;
        m->gen_degrees.insert(m->gen_degrees.end(), b->gen_degrees.begin(),
                              b->gen_degrees.end());
    }
    return m;
}

ModulePtr module_from_presentation(QRingPtr ring, RingMatrix presentation,
                                   std::vector<int64_t> gen_degrees) {
    auto m = std::make_shared<PresentedModule>();
    m->ring = std::move(ring);
    m->graded = false;
    if (m->ring->graded() && gen_degrees.size() == presentation.rows) {
        auto cd = infer_column_degrees(presentation, gen_degrees);
        if (cd) {
            m->graded = true;
            m->gen_degrees = std::move(gen_degrees);
        }
    }
    m->presentation = std::move(presentation);
    return m;
}

bool is_zero_module(const PresentedModule& m, uint32_t degree_cap) {
    size_t s = m.gen_count();
    if (s == 0) return true;
    SubmoduleBasis span(m.ring, s, m.presentation, degree_cap);
    for (size_t i = 0; i < s; ++i) {
        std::vector<Polynomial> e(s, Polynomial::zero(m.ring->base()));
        e[i] = Polynomial::one(m.ring->base());
        if (!span.contains(e)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// staircase dimension of coker(presentation) as a P-module

namespace {

struct ComponentStaircase {
    // leading monomials of the module GB restricted to one component
    std::vector<Monomial> lts;
    bool killed = false;  // a unit leading term wipes the component
};

std::optional<size_t> component_count(const ComponentStaircase& cs, size_t nvars,
                                      const PolyRingPtr& ring, int64_t shift,
                                      std::vector<std::pair<int64_t, size_t>>* hilbert) {
    if (cs.killed) return 0;
    std::vector<uint32_t> bound(nvars, 0);
    std::vector<bool> covered(nvars, false);
    for (const auto& m : cs.lts) {
        size_t nz = 0, which = 0;
        for (size_t v = 0; v < nvars; ++v)
            if (m.e[v]) {
                ++nz;
                which = v;
            }
        if (nz == 1) {
            covered[which] = true;
            bound[which] = std::max(bound[which], m.e[which]);
        }
    }
    for (size_t v = 0; v < nvars; ++v)
        if (!covered[v]) return std::nullopt;  // infinite staircase
    size_t count = 0;
    Monomial cur(nvars);
    for (;;) {
        bool standard = true;
        for (const auto& lt : cs.lts)
            if (lt.divides(cur)) {
                standard = false;
                break;
            }
        if (standard) {
            ++count;
            if (hilbert) {
                int64_t d = ring->weighted_degree(cur) + shift;
                bool found = false;
                for (auto& [deg, n] : *hilbert)
                    if (deg == d) {
                        ++n;
                        found = true;
                    }
                if (!found) hilbert->push_back({d, 1});
            }
        }
        size_t v = 0;
        while (v < nvars) {
            cur.e[v] += 1;
            cur.deg += 1;
            if (cur.e[v] < std::max(bound[v], 1u)) break;
            cur.deg -= cur.e[v];
            cur.e[v] = 0;
            ++v;
        }
        if (v == nvars) break;
    }
    return count;
}

std::optional<std::vector<ComponentStaircase>> module_staircase(const PresentedModule& m,
                                                                uint32_t degree_cap) {
    size_t s = m.gen_count();
    const PolyRingPtr& P = m.ring->base();
    ModuleOrder mo{P->order, 0};
    std::vector<VecPoly> gens;
    for (size_t j = 0; j < m.presentation.cols; ++j)
        gens.push_back(VecPoly::from_components(P, m.presentation.column(j), mo));
    for (const auto& f : m.ring->defining().gens) {
        for (size_t q = 0; q < s; ++q) {
            std::vector<Polynomial> comps(s, Polynomial::zero(P));
            comps[q] = f;
            gens.push_back(VecPoly::from_components(P, comps, mo));
        }
    }
    auto gb = module_groebner(std::move(gens), mo, degree_cap);
    std::vector<ComponentStaircase> cs(s);
    for (const auto& v : gb) {
        const ModMono& lt = v.leading();
        if (lt.m.is_one()) cs[lt.comp].killed = true;
        cs[lt.comp].lts.push_back(lt.m);
    }
    return cs;
}

}  // namespace

std::optional<size_t> module_dimension_over_k(const PresentedModule& m, uint32_t degree_cap) {
    size_t s = m.gen_count();
    if (s == 0) return 0;
    auto cs = module_staircase(m, degree_cap);
    size_t total = 0;
    for (size_t c = 0; c < s; ++c) {
        auto n = component_count((*cs)[c], m.ring->nvars(), m.ring->base(), 0, nullptr);
        if (!n) return std::nullopt;
        total += *n;
    }
    return total;
}

std::optional<std::vector<std::pair<int64_t, size_t>>> module_hilbert(const PresentedModule& m,
                                                                      uint32_t degree_cap) {
    if (!m.graded) return std::nullopt;
    std::vector<std::pair<int64_t, size_t>> hilbert;
    size_t s = m.gen_count();
    if (s == 0) return hilbert;
    auto cs = module_staircase(m, degree_cap);
    for (size_t c = 0; c < s; ++c) {
        auto n = component_count((*cs)[c], m.ring->nvars(), m.ring->base(), m.gen_degrees[c],
                                 &hilbert);
        if (!n) return std::nullopt;
    }
    std::sort(hilbert.begin(), hilbert.end());
    return hilbert;
}

// ---------------------------------------------------------------------------
// minimalization

std::pair<RingMatrix, std::vector<int64_t>> minimalize_presentation(
    const RingMatrix& a, const std::vector<int64_t>& gen_degrees, bool graded) {
    const QRingPtr& R = a.ring;
    RingMatrix m = a;
    std::vector<int64_t> degs = gen_degrees;
    std::vector<bool> row_alive(m.rows, true), col_alive(m.cols, true);

    for (;;) {
        size_t pi = m.rows, pj = m.cols;
        for (size_t i = 0; i < m.rows && pi == m.rows; ++i) {
            if (!row_alive[i]) continue;
            for (size_t j = 0; j < m.cols; ++j) {
                if (!col_alive[j]) continue;
                if (!m.at(i, j).is_zero() && R->is_unit(m.at(i, j))) {
                    pi = i;
                    pj = j;
                    break;
                }
            }
        }
        if (pi == m.rows) break;
        Polynomial inv = R->invert_unit(m.at(pi, pj));
        for (size_t j = 0; j < m.cols; ++j) {
            if (!col_alive[j] || j == pj || m.at(pi, j).is_zero()) continue;
            Polynomial factor = R->multiply(inv, m.at(pi, j));
            for (size_t i = 0; i < m.rows; ++i) {
                if (!row_alive[i] || i == pi) continue;
                m.at(i, j) = R->nf(m.at(i, j) - m.at(i, pj) * factor);
            }
            m.at(pi, j) = Polynomial::zero(R->base());
        }
        row_alive[pi] = false;
        col_alive[pj] = false;
    }

    std::vector<size_t> rows_kept, cols_kept;
    for (size_t i = 0; i < m.rows; ++i)
        if (row_alive[i]) rows_kept.push_back(i);
    for (size_t j = 0; j < m.cols; ++j) {
        if (!col_alive[j]) continue;
        bool zero = true;
        for (size_t i : rows_kept) zero = zero && m.at(i, j).is_zero();
        if (!zero) cols_kept.push_back(j);
    }
    RingMatrix out = RingMatrix::zero(R, rows_kept.size(), cols_kept.size());
    for (size_t i = 0; i < rows_kept.size(); ++i)
        for (size_t j = 0; j < cols_kept.size(); ++j)
            out.at(i, j) = m.at(rows_kept[i], cols_kept[j]);
    std::vector<int64_t> out_degs;
    if (graded)
        for (size_t i : rows_kept) out_degs.push_back(degs[i]);
    return {std::move(out), std::move(out_degs)};
}

RingMatrix minimal_column_generators(const RingMatrix& a, const std::vector<int64_t>& row_degs,
                                     bool graded, uint32_t degree_cap) {
    const QRingPtr& R = a.ring;
    RingMatrix work = a.drop_zero_columns();
    if (work.cols == 0) return work;

    if (graded) {
        auto col_degs = infer_column_degrees(work, row_degs);
        if (!col_degs) throw std::invalid_argument("inhomogeneous columns in graded context");
        std::vector<size_t> order(work.cols);
        for (size_t j = 0; j < order.size(); ++j) order[j] = j;
        std::stable_sort(order.begin(), order.end(),
                         [&](size_t x, size_t y) { return (*col_degs)[x] < (*col_degs)[y]; });
        std::vector<size_t> kept;
        for (size_t j : order) {
            SubmoduleBasis span(R, work.rows, work.select_columns(kept), degree_cap);
            if (!span.contains(work.column(j))) kept.push_back(j);
        }
        std::sort(kept.begin(), kept.end());
        return work.select_columns(kept);
    }

    if (!R->is_artinian())
        throw std::domain_error("minimal generators need a graded module or an Artinian ring");
    std::vector<size_t> kept(work.cols);
    for (size_t j = 0; j < kept.size(); ++j) kept[j] = j;
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t pos = 0; pos < kept.size(); ++pos) {
            std::vector<size_t> others;
            for (size_t q = 0; q < kept.size(); ++q)
                if (q != pos) others.push_back(kept[q]);
            SubmoduleBasis span(R, work.rows, work.select_columns(others), degree_cap);
            if (span.contains(work.column(kept[pos]))) {
                kept.erase(kept.begin() + static_cast<ptrdiff_t>(pos));
                changed = true;
                break;
            }
        }
    }
    return work.select_columns(kept);
}

size_t minimal_generators(const PresentedModule& m) {
    if (!m.graded && !m.ring->is_artinian())
        throw std::domain_error("minimal generators need a graded module or an Artinian ring");
    auto [pres, degs] = minimalize_presentation(m.presentation, m.gen_degrees, m.graded);
    return pres.rows;
}

bool is_free(const PresentedModule& m) {
    if (!m.graded && !m.ring->is_artinian())
        throw std::domain_error("freeness test needs a graded module or an Artinian ring");
    auto [pres, degs] = minimalize_presentation(m.presentation, m.gen_degrees, m.graded);
    return pres.is_zero();
}

}  // namespace tracealg
