#include "tracealg/homological.hpp"

#include <algorithm>
#include <stdexcept>

#include "tracealg/errors.hpp"

namespace tracealg {

namespace {

ModulePtr zero_module(const QRingPtr& ring) {
    auto z = std::make_shared<PresentedModule>(*free_module(ring, 0));
    z->zero_flagged = true;
    return z;
}

bool is_free_rank_one_cover(const ModulePtr& x) {
    return x->gen_count() == 1 && x->presentation.cols == 0;
}

// Greedy minimal generating set of (cands + modulo)/modulo; returns kept
// column indices of cands. Graded path processes ascending degree, the
// Artinian path iterates redundancy removal to a fixed point.
std::vector<size_t> min_gens_modulo(const RingMatrix& cands, const RingMatrix& modulo,
                                    const std::vector<int64_t>& ambient_degs, bool graded,
                                    uint32_t cap) {
    const QRingPtr& R = cands.ring;
    std::vector<size_t> nonzero;
    for (size_t j = 0; j < cands.cols; ++j) {
        bool z = true;
        for (size_t i = 0; i < cands.rows && z; ++i) z = cands.at(i, j).is_zero();
        if (!z) nonzero.push_back(j);
    }
    if (nonzero.empty()) return {};

    if (graded) {
        auto col_degs = infer_column_degrees(cands, ambient_degs);
        if (!col_degs) throw std::logic_error("inhomogeneous candidates in graded context");
        std::stable_sort(nonzero.begin(), nonzero.end(),
                         [&](size_t x, size_t y) { return (*col_degs)[x] < (*col_degs)[y]; });
        std::vector<size_t> kept;
        for (size_t j : nonzero) {
            RingMatrix span = cands.select_columns(kept).hconcat(modulo);
            SubmoduleBasis basis(R, cands.rows, span, cap);
            if (!basis.contains(cands.column(j))) kept.push_back(j);
        }
        std::sort(kept.begin(), kept.end());
        return kept;
    }

    if (!R->is_artinian())
        throw std::domain_error("generator minimalization needs grading or an Artinian ring");
    std::vector<size_t> kept = nonzero;
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t pos = 0; pos < kept.size(); ++pos) {
            std::vector<size_t> others;
            for (size_t q = 0; q < kept.size(); ++q)
                if (q != pos) others.push_back(kept[q]);
            RingMatrix span = cands.select_columns(others).hconcat(modulo);
            SubmoduleBasis basis(R, cands.rows, span, cap);
            if (basis.contains(cands.column(kept[pos]))) {
                kept.erase(kept.begin() + static_cast<ptrdiff_t>(pos));
                changed = true;
                break;
            }
        }
    }
    return kept;
}

// carrier of a subquotient span(cands)/span(modulo) inside R^rank, with kept
// candidate indices reported for lift bookkeeping
struct Subquotient {
    ModulePtr carrier;
    std::vector<size_t> kept;
};

Subquotient present_subquotient(const RingMatrix& cands, const RingMatrix& modulo,
                                const std::vector<int64_t>& ambient_degs, bool graded,
                                uint32_t cap) {
    const QRingPtr& R = cands.ring;
    std::vector<size_t> kept = min_gens_modulo(cands, modulo, ambient_degs, graded, cap);
    if (kept.empty()) return {zero_module(R), {}};
    RingMatrix u = cands.select_columns(kept);
    RingMatrix combined = u.hconcat(modulo);
    RingMatrix syz = syzygy_matrix(combined, cap);
    RingMatrix pres = RingMatrix::zero(R, u.cols, syz.cols);
    for (size_t i = 0; i < u.cols; ++i)
        for (size_t j = 0; j < syz.cols; ++j) pres.at(i, j) = syz.at(i, j);
    pres = pres.drop_zero_columns();

    auto mod = std::make_shared<PresentedModule>();
    mod->ring = R;
    mod->presentation = std::move(pres);
    mod->graded = false;
    if (graded) {
        auto degs = infer_column_degrees(u, ambient_degs);
        if (degs) {
            mod->gen_degrees = *degs;
            mod->graded = true;
        }
    }
    return {mod, std::move(kept)};
}

}  // namespace

GroebnerBasis ideal_basis_in_ring(const QRingPtr& ring, const std::vector<Polynomial>& gens,
                                  uint32_t degree_cap) {
    std::vector<Polynomial> all = gens;
    for (const auto& j : ring->defining().gens) all.push_back(j);
    return groebner_basis(ring->base(), all, degree_cap);
}

HomModule hom_module(const ModulePtr& m, const ModulePtr& n, uint32_t degree_cap) {
    if (!same_qring(m->ring, n->ring)) throw std::invalid_argument("hom: ring mismatch");
    const QRingPtr& R = m->ring;
    size_t s = m->gen_count(), a = m->presentation.cols;
    size_t t = n->gen_count(), b = n->presentation.cols;
    if (s == 0 || t == 0) return {zero_module(R), {}};

    bool graded = m->graded && n->graded;
    std::vector<int64_t> ambient_degs(s * t, 0);
    if (graded)
        for (size_t i = 0; i < s; ++i)
            for (size_t j = 0; j < t; ++j)
                ambient_degs[i * t + j] = n->gen_degrees[j] - m->gen_degrees[i];

    // phi must send every relation of M into the image of N's presentation
    RingMatrix phi;
    if (a == 0) {
        phi = RingMatrix::identity(R, s * t);
    } else {
        RingMatrix c = RingMatrix::zero(R, a * t, s * t + a * b);
        for (size_t k = 0; k < a; ++k)
            for (size_t j = 0; j < t; ++j) {
                for (size_t i = 0; i < s; ++i)
                    c.at(k * t + j, i * t + j) = m->presentation.at(i, k);
                for (size_t l = 0; l < b; ++l)
                    c.at(k * t + j, s * t + k * b + l) = n->presentation.at(j, l);
            }
        RingMatrix syz = syzygy_matrix(c, degree_cap);
        RingMatrix proj = RingMatrix::zero(R, s * t, syz.cols);
        for (size_t i = 0; i < s * t; ++i)
            for (size_t j = 0; j < syz.cols; ++j) proj.at(i, j) = syz.at(i, j);
        phi = proj.drop_zero_columns();
    }

    // maps factoring through N's presentation represent zero
    RingMatrix v = RingMatrix::zero(R, s * t, s * b);
    for (size_t i = 0; i < s; ++i)
        for (size_t l = 0; l < b; ++l)
            for (size_t j = 0; j < t; ++j) v.at(i * t + j, i * b + l) = n->presentation.at(j, l);

    Subquotient sq = present_subquotient(phi, v, ambient_degs, graded, degree_cap);
    HomModule out;
    out.carrier = sq.carrier;
    for (size_t idx : sq.kept) {
        RingMatrix lift = RingMatrix::zero(R, t, s);
        for (size_t i = 0; i < s; ++i)
            for (size_t j = 0; j < t; ++j) lift.at(j, i) = phi.at(i * t + j, idx);
        out.lifts.push_back(std::move(lift));
    }
    return out;
}

ModulePtr ext_module(size_t i, const ModulePtr& m, const ModulePtr& n, uint32_t degree_cap) {
    if (!same_qring(m->ring, n->ring)) throw std::invalid_argument("ext: ring mismatch");
    if (i == 0) return hom_module(m, n, degree_cap).carrier;
    const QRingPtr& R = m->ring;
    size_t t = n->gen_count(), b = n->presentation.cols;
    if (t == 0) return zero_module(R);

    FreeResolution res = resolve(*m, i + 1, degree_cap);
    size_t ai = res.rank(i);
    if (ai == 0) return zero_module(R);
    size_t aip = res.rank(i + 1);
    size_t aim = res.rank(i - 1);

    bool graded = res.graded && n->graded;
    std::vector<int64_t> ambient_degs(ai * t, 0);
    if (graded)
        for (size_t c = 0; c < ai; ++c)
            for (size_t j = 0; j < t; ++j)
                ambient_degs[c * t + j] = n->gen_degrees[j] - res.degrees[i][c];

    // cocycles: phi with phi . d_{i+1} = 0 modulo N's relations
    RingMatrix z;
    if (aip == 0) {
        z = RingMatrix::identity(R, ai * t);
    } else {
        const RingMatrix& d_next = *res.differential(i + 1);  // ai x aip
        RingMatrix c = RingMatrix::zero(R, aip * t, ai * t + aip * b);
        for (size_t k = 0; k < aip; ++k)
            for (size_t j = 0; j < t; ++j) {
                for (size_t cc = 0; cc < ai; ++cc)
                    c.at(k * t + j, cc * t + j) = d_next.at(cc, k);
                for (size_t l = 0; l < b; ++l)
                    c.at(k * t + j, ai * t + k * b + l) = n->presentation.at(j, l);
            }
        RingMatrix syz = syzygy_matrix(c, degree_cap);
        RingMatrix proj = RingMatrix::zero(R, ai * t, syz.cols);
        for (size_t r = 0; r < ai * t; ++r)
            for (size_t j = 0; j < syz.cols; ++j) proj.at(r, j) = syz.at(r, j);
        z = proj.drop_zero_columns();
    }

    // coboundaries: psi . d_i plus the relations of N^{F_i}
    const RingMatrix& d_i = *res.differential(i);  // aim x ai
    RingMatrix bnd = RingMatrix::zero(R, ai * t, aim * t + ai * b);
    for (size_t cp = 0; cp < aim; ++cp)
        for (size_t jp = 0; jp < t; ++jp)
            for (size_t cc = 0; cc < ai; ++cc)
                bnd.at(cc * t + jp, cp * t + jp) = d_i.at(cp, cc);
    for (size_t cc = 0; cc < ai; ++cc)
        for (size_t l = 0; l < b; ++l)
            for (size_t j = 0; j < t; ++j)
                bnd.at(cc * t + j, aim * t + cc * b + l) = n->presentation.at(j, l);

    return present_subquotient(z, bnd, ambient_degs, graded, degree_cap).carrier;
}

HomModule dual_module(const ModulePtr& m, uint32_t degree_cap) {
    return hom_module(m, ring_as_module(m->ring), degree_cap);
}

TraceResult trace_in(const ModulePtr& m, const ModulePtr& x, uint32_t degree_cap) {
    HomModule hom = hom_module(m, x, degree_cap);
    const QRingPtr& R = x->ring;
    size_t t = x->gen_count();
    RingMatrix images = RingMatrix::zero(R, t, 0);
    for (const auto& lift : hom.lifts) images = images.hconcat(lift);
    images = images.drop_zero_columns();

    TraceResult out;
    out.certifying_maps = hom.lifts;
    out.trace = submodule_of(x, images, degree_cap);
    // proper iff X is not contained in the trace
    SubmoduleBasis span(R, t, images.hconcat(x->presentation), degree_cap);
    bool covers = true;
    for (size_t j = 0; j < t && covers; ++j) {
        std::vector<Polynomial> e(t, Polynomial::zero(R->base()));
        e[j] = Polynomial::one(R->base());
        covers = span.contains(e);
    }
    out.proper = !covers;
    if (is_free_rank_one_cover(x)) {
        std::vector<Polynomial> gens;
        for (size_t j = 0; j < images.cols; ++j) gens.push_back(images.at(0, j));
        out.ideal_basis = ideal_basis_in_ring(R, gens, degree_cap);
    }
    return out;
}

namespace {

TraceResult trace_ideal_from_gens(const QRingPtr& ring, const std::vector<Polynomial>& gens,
                                  std::vector<RingMatrix> maps, uint32_t degree_cap) {
    TraceResult out;
    out.certifying_maps = std::move(maps);
    out.ideal_basis = ideal_basis_in_ring(ring, gens, degree_cap);
    out.proper = !out.ideal_basis->contains_one();
    std::vector<Polynomial> nf_gens;
    for (const auto& g : out.ideal_basis->gens) {
        Polynomial f = ring->nf(g);
        if (!f.is_zero()) nf_gens.push_back(std::move(f));
    }
    out.trace = present_ideal(nf_gens, ring, degree_cap);
    return out;
}

}  // namespace

TraceResult trace_ideal(const ModulePtr& ideal, TraceMethod method, uint32_t degree_cap) {
    if (!ideal->is_ideal())
        throw std::invalid_argument("trace_ideal needs an ideal with its embedding");
    const QRingPtr& R = ideal->ring;
    if (method == TraceMethod::left_kernel) {
        RingMatrix lk = syzygy_matrix(ideal->presentation.transpose(), degree_cap);
        std::vector<Polynomial> gens;
        for (size_t i = 0; i < lk.rows; ++i)
            for (size_t j = 0; j < lk.cols; ++j)
                if (!lk.at(i, j).is_zero()) gens.push_back(lk.at(i, j));
        return trace_ideal_from_gens(R, gens, {}, degree_cap);
    }
    HomModule hom = hom_module(ideal, ring_as_module(R), degree_cap);
    std::vector<Polynomial> gens;
    for (const auto& lift : hom.lifts)
        for (const auto& e : lift.entries)
            if (!e.is_zero()) gens.push_back(e);
    return trace_ideal_from_gens(R, gens, hom.lifts, degree_cap);
}

TraceResult trace_ideal_checked(const ModulePtr& ideal, uint32_t degree_cap) {
    TraceResult via_hom = trace_ideal(ideal, TraceMethod::hom_images, degree_cap);
    TraceResult via_lk = trace_ideal(ideal, TraceMethod::left_kernel, degree_cap);
    if (!ideal_equal(*via_hom.ideal_basis, *via_lk.ideal_basis))
        throw EngineError("trace ideal methods disagree: hom_images " +
                          via_hom.trace->embedding->vectors.to_string() + " vs left_kernel " +
                          via_lk.trace->embedding->vectors.to_string());
    return via_hom;
}

namespace {

// generator columns of M inside X, checking the embedding really is into X
RingMatrix embedded_vectors(const ModulePtr& m, const ModulePtr& x) {
    if (!m->embedding) throw std::invalid_argument("module is not presented inside an ambient");
    const SubmoduleInfo& e = *m->embedding;
    if (!e.ambient) {
        if (!is_free_rank_one_cover(x))
            throw std::invalid_argument("ideal embedding needs the ambient R");
        return e.vectors;
    }
    if (e.ambient.get() != x.get())
        throw std::invalid_argument("module is not presented inside the given ambient");
    return e.vectors;
}

}  // namespace

bool is_trace_module_via_trace(const ModulePtr& m, const ModulePtr& x, uint32_t degree_cap) {
    RingMatrix mv = embedded_vectors(m, x);
    TraceResult t = trace_in(m, x, degree_cap);
    return submodules_equal(x->ring, x->gen_count(), t.trace->embedding->vectors, mv,
                            &x->presentation, degree_cap);
}

bool is_trace_module_via_homs(const ModulePtr& m, const ModulePtr& x, uint32_t degree_cap) {
    RingMatrix mv = embedded_vectors(m, x);
    HomModule hom = hom_module(m, x, degree_cap);
    SubmoduleBasis span(x->ring, x->gen_count(), mv.hconcat(x->presentation), degree_cap);
    for (const auto& lift : hom.lifts)
        if (!span.contains_all_columns(lift)) return false;
    return true;
}

bool is_trace_module(const ModulePtr& m, const ModulePtr& x, uint32_t degree_cap) {
    bool via_trace = is_trace_module_via_trace(m, x, degree_cap);
    bool via_homs = is_trace_module_via_homs(m, x, degree_cap);
    if (via_trace != via_homs)
        throw EngineError("trace-module criteria disagree (M = T_X(M) vs Hom images)");
    return via_trace;
}

ModulePtr annihilator(const ModulePtr& m, uint32_t degree_cap) {
    const QRingPtr& R = m->ring;
    size_t s = m->gen_count(), a = m->presentation.cols;
    if (s == 0) return present_ideal({Polynomial::one(R->base())}, R, degree_cap);

    RingMatrix c = RingMatrix::zero(R, s * s, 1 + s * a);
    for (size_t i = 0; i < s; ++i) {
        c.at(i * s + i, 0) = Polynomial::one(R->base());
        for (size_t rho = 0; rho < s; ++rho)
            for (size_t k = 0; k < a; ++k)
                c.at(i * s + rho, 1 + i * a + k) = m->presentation.at(rho, k);
    }
    RingMatrix syz = syzygy_matrix(c, degree_cap);
    std::vector<Polynomial> gens;
    for (size_t j = 0; j < syz.cols; ++j)
        if (!syz.at(0, j).is_zero()) gens.push_back(syz.at(0, j));
    GroebnerBasis basis = ideal_basis_in_ring(R, gens, degree_cap);
    std::vector<Polynomial> nf_gens;
    for (const auto& g : basis.gens) {
        Polynomial f = R->nf(g);
        if (!f.is_zero()) nf_gens.push_back(std::move(f));
    }
    return present_ideal(nf_gens, R, degree_cap);
}

namespace {

bool local_with_variable_maximal_ideal(const QRingPtr& ring) {
    if (ring->graded()) return true;
    if (!ring->is_artinian()) return false;
    size_t cap = ring->dimension_over_k() + 1;
    for (size_t v = 0; v < ring->nvars(); ++v) {
        Polynomial p = Polynomial::variable(ring->base(), v);
        Polynomial pow = ring->nf(p);
        size_t k = 0;
        while (!pow.is_zero() && k++ <= cap) pow = ring->multiply(pow, p);
        if (!pow.is_zero()) return false;  // variable not nilpotent
    }
    return true;
}

}  // namespace

ModulePtr socle(const ModulePtr& m, uint32_t degree_cap) {
    const QRingPtr& R = m->ring;
    if (!local_with_variable_maximal_ideal(R))
        throw std::domain_error("socle needs a local setup with maximal ideal (variables)");
    size_t s = m->gen_count(), a = m->presentation.cols, nv = R->nvars();
    if (s == 0) return submodule_of(m, RingMatrix::zero(R, 0, 0));

    RingMatrix c = RingMatrix::zero(R, nv * s, s + nv * a);
    for (size_t v = 0; v < nv; ++v) {
        Polynomial xv = Polynomial::variable(R->base(), v);
        for (size_t rho = 0; rho < s; ++rho) {
            c.at(v * s + rho, rho) = xv;
            for (size_t k = 0; k < a; ++k)
                c.at(v * s + rho, s + v * a + k) = m->presentation.at(rho, k);
        }
    }
    RingMatrix syz = syzygy_matrix(c, degree_cap);
    RingMatrix w = RingMatrix::zero(R, s, syz.cols);
    for (size_t i = 0; i < s; ++i)
        for (size_t j = 0; j < syz.cols; ++j) w.at(i, j) = syz.at(i, j);
    return submodule_of(m, w.drop_zero_columns(), degree_cap);
}

ModulePtr quotient_by_submodule(const ModulePtr& x, const ModulePtr& m) {
    if (!m->embedding) throw std::invalid_argument("module is not presented inside an ambient");
    if (!m->embedding->ambient) {
        if (!is_free_rank_one_cover(x))
            throw std::invalid_argument("ideal embedding needs the ambient R");
        return quotient_by_ideal(m->ideal_generators(), x->ring);
    }
    if (m->embedding->ambient.get() != x.get())
        throw std::invalid_argument("module is not presented inside the given ambient");
    return quotient_module(x, m->embedding->vectors);
}

size_t grade(const ModulePtr& ideal, uint32_t degree_cap) {
    if (!ideal->is_ideal()) throw std::invalid_argument("grade needs an embedded ideal");
    std::vector<Polynomial> gens = ideal->ideal_generators();
    if (gens.empty()) throw std::invalid_argument("grade of the zero ideal");
    GroebnerBasis basis = ideal_basis_in_ring(ideal->ring, gens, degree_cap);
    if (basis.contains_one()) throw std::invalid_argument("grade of the unit ideal");

    ModulePtr quot = quotient_by_ideal(gens, ideal->ring);
    ModulePtr r_mod = ring_as_module(ideal->ring);
    size_t cap = ideal->ring->nvars() + 1;
    for (size_t i = 0; i <= cap; ++i) {
        ModulePtr e = ext_module(i, quot, r_mod, degree_cap);
        if (!is_zero_module(*e, degree_cap)) return i;
    }
    throw CapError("grade exceeded the variable-count cap");
}

ConormalDual conormal_dual(const ModulePtr& ideal, uint32_t degree_cap) {
    if (!ideal->is_ideal()) throw std::invalid_argument("conormal dual needs an embedded ideal");
    const QRingPtr& R = ideal->ring;
    std::vector<Polynomial> gens = ideal->ideal_generators();
    std::vector<Polynomial> defining = R->defining().gens;
    defining.insert(defining.end(), gens.begin(), gens.end());
    QRingPtr quotient;
    try {
        quotient = QuotientRing::make(R->base(), defining, degree_cap);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("conormal dual of the unit ideal");
    }

    // I/I^2 over R/I: reduce the presentation of I
    RingMatrix pres = RingMatrix::zero(quotient, ideal->gen_count(), ideal->presentation.cols);
    for (size_t i = 0; i < pres.rows; ++i)
        for (size_t j = 0; j < pres.cols; ++j)
            pres.at(i, j) = quotient->nf(ideal->presentation.at(i, j));
    ModulePtr conormal = module_from_presentation(
        quotient, pres, ideal->graded ? ideal->gen_degrees : std::vector<int64_t>{});

    ConormalDual out;
    out.carrier = hom_module(conormal, ring_as_module(quotient), degree_cap).carrier;
    out.vanishes = is_zero_module(*out.carrier, degree_cap);

    // adjunction cross-check against Hom_R(I, R/I)
    ModulePtr over_r = hom_module(ideal, quotient_by_ideal(gens, R), degree_cap).carrier;
    if (out.vanishes != is_zero_module(*over_r, degree_cap))
        throw EngineError("conormal dual disagrees with Hom(I, R/I) under adjunction");
    return out;
}

bool is_artinian_gorenstein(const QRingPtr& ring, uint32_t degree_cap) {
    if (!ring->is_artinian()) return false;
    ModulePtr soc = socle(ring_as_module(ring), degree_cap);
    auto dim = module_dimension_over_k(*soc, degree_cap);
    return dim && *dim == 1;
}

ModulePtr cosyzygy_module(const ModulePtr& m, size_t n, uint32_t degree_cap) {
    if (!is_artinian_gorenstein(m->ring, degree_cap))
        throw std::domain_error("cosyzygy needs an Artinian Gorenstein ring");
    if (n == 0) return m;
    ModulePtr d = dual_module(m, degree_cap).carrier;
    ModulePtr s = syzygy_module(d, n, degree_cap);
    return dual_module(s, degree_cap).carrier;
}

RigidityVerdict rigidity(const ModulePtr& m, uint32_t degree_cap) {
    ModulePtr e = ext_module(1, m, m, degree_cap);
    RigidityVerdict v;
    v.rigid = is_zero_module(*e, degree_cap);
    v.ext1_dimension = module_dimension_over_k(*e, degree_cap);
    v.free = is_free(*m);
    if (v.free && !v.rigid) throw EngineError("free module with nonzero Ext^1 against itself");
    return v;
}

}  // namespace tracealg
