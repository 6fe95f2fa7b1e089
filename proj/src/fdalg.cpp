#include "tracealg/fdalg.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "tracealg/errors.hpp"

namespace tracealg {

std::shared_ptr<const FiniteAlgebra> FiniteAlgebra::make(const QRingPtr& ring, size_t dim_cap) {
    auto a = std::make_shared<FiniteAlgebra>();
    a->ring_ = ring;
    a->basis_ = ring->standard_monomials(dim_cap);  // throws if not Artinian / too big
    // ascending order: the unit comes first
    std::reverse(a->basis_.begin(), a->basis_.end());
    size_t d = a->basis_.size();
    a->unit_index_ = 0;
    if (d == 0 || !a->basis_[0].is_one()) throw std::logic_error("staircase missing the unit");

    const FieldSpec& f = ring->field();
    auto index_of = [&](const Monomial& m) -> size_t {
        for (size_t i = 0; i < d; ++i)
            if (a->basis_[i] == m) return i;
        return d;
    };
    a->table_.reserve(d);
    for (size_t i = 0; i < d; ++i) {
        KMatrix mult(f, d, d);
        for (size_t j = 0; j < d; ++j) {
            Polynomial prod = ring->nf(
                Polynomial::term(ring->base(), a->basis_[i] * a->basis_[j], Scalar::one(f)));
            for (const auto& t : prod.terms()) {
                size_t e = index_of(t.m);
                if (e == d) throw std::logic_error("product left the staircase");
                mult.at(e, j) = t.c;
            }
        }
        a->table_.push_back(std::move(mult));
    }

    // construction-time axioms: unit, commutativity, associativity
    for (size_t i = 0; i < d; ++i) {
        for (size_t j = 0; j < d; ++j) {
            if (a->table_[a->unit_index_].at(i, j) !=
                (i == j ? Scalar::one(f) : Scalar::zero(f)))
                throw std::logic_error("unit fails to act as identity");
        }
    }
    std::vector<std::vector<std::vector<Scalar>>> prod(d);
    for (size_t i = 0; i < d; ++i) {
        prod[i].resize(d);
        for (size_t j = 0; j < d; ++j) prod[i][j] = a->table_[i].column(j);
    }
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) {
            if (prod[i][j] != prod[j][i]) throw std::logic_error("commutativity fails");
            for (size_t k = 0; k < d; ++k) {
                // (e_i e_j) e_k == e_i (e_j e_k)
                std::vector<Scalar> lhs(d, Scalar::zero(f)), rhs(d, Scalar::zero(f));
                for (size_t e = 0; e < d; ++e) {
                    if (!prod[i][j][e].is_zero()) {
                        const auto col = prod[e][k];
                        for (size_t q = 0; q < d; ++q) lhs[q] += prod[i][j][e] * col[q];
                    }
                    if (!prod[j][k][e].is_zero()) {
                        const auto col = prod[i][e];
                        for (size_t q = 0; q < d; ++q) rhs[q] += prod[j][k][e] * col[q];
                    }
                }
                if (lhs != rhs) throw std::logic_error("associativity fails");
            }
        }
    return a;
}

std::vector<Scalar> FiniteAlgebra::coords(const Polynomial& p) const {
    Polynomial nf = ring_->nf(p);
    std::vector<Scalar> out(dim(), Scalar::zero(ring_->field()));
    for (const auto& t : nf.terms()) {
        bool found = false;
        for (size_t i = 0; i < basis_.size() && !found; ++i)
            if (basis_[i] == t.m) {
                out[i] = t.c;
                found = true;
            }
        if (!found) throw std::logic_error("normal form outside the staircase");
    }
    return out;
}

Polynomial FiniteAlgebra::element(const std::vector<Scalar>& coords) const {
    std::vector<Term> terms;
    for (size_t i = 0; i < coords.size(); ++i)
        if (!coords[i].is_zero()) terms.push_back({basis_[i], coords[i]});
    return Polynomial::from_terms(ring_->base(), std::move(terms));
}

KMatrix FiniteAlgebra::mult_matrix(const std::vector<Scalar>& coords) const {
    KMatrix m(ring_->field(), dim(), dim());
    for (size_t i = 0; i < coords.size(); ++i) {
        if (coords[i].is_zero()) continue;
        for (size_t r = 0; r < dim(); ++r)
            for (size_t c = 0; c < dim(); ++c) m.at(r, c) += coords[i] * table_[i].at(r, c);
    }
    return m;
}

std::vector<Scalar> FiniteAlgebra::product(const std::vector<Scalar>& x,
                                           const std::vector<Scalar>& y) const {
    return mult_matrix(x).apply(y);
}

KMatrix FDModule::act(const std::vector<Scalar>& algebra_coords) const {
    KMatrix m(algebra->ring()->field(), dim, dim);
    for (size_t i = 0; i < algebra_coords.size(); ++i) {
        if (algebra_coords[i].is_zero()) continue;
        for (size_t r = 0; r < dim; ++r)
            for (size_t c = 0; c < dim; ++c)
                m.at(r, c) += algebra_coords[i] * action[i].at(r, c);
    }
    return m;
}

FDModule fd_regular(const AlgebraPtr& a) {
    FDModule m;
    m.algebra = a;
    m.dim = a->dim();
    for (size_t i = 0; i < a->dim(); ++i) m.action.push_back(a->mult_matrix([&] {
        std::vector<Scalar> e(a->dim(), Scalar::zero(a->ring()->field()));
        e[i] = Scalar::one(a->ring()->field());
        return e;
    }()));
    std::vector<Scalar> unit(a->dim(), Scalar::zero(a->ring()->field()));
    unit[a->unit_index()] = Scalar::one(a->ring()->field());
    m.generators = {unit};
    return m;
}

FDModule fd_free(const AlgebraPtr& a, size_t rank) {
    const FieldSpec& f = a->ring()->field();
    FDModule reg = fd_regular(a);
    FDModule m;
    m.algebra = a;
    m.dim = a->dim() * rank;
    for (size_t i = 0; i < a->dim(); ++i) {
        KMatrix big(f, m.dim, m.dim);
        for (size_t s = 0; s < rank; ++s)
            for (size_t r = 0; r < a->dim(); ++r)
                for (size_t c = 0; c < a->dim(); ++c)
                    big.at(s * a->dim() + r, s * a->dim() + c) = reg.action[i].at(r, c);
        m.action.push_back(std::move(big));
    }
    for (size_t s = 0; s < rank; ++s) {
        std::vector<Scalar> g(m.dim, Scalar::zero(f));
        g[s * a->dim() + a->unit_index()] = Scalar::one(f);
        m.generators.push_back(std::move(g));
    }
    return m;
}

namespace {

// module-closed subspace basis spanned by vectors under the ambient action
KMatrix module_span(const FDModule& amb, const std::vector<std::vector<Scalar>>& vectors) {
    const FieldSpec& f = amb.algebra->ring()->field();
    std::vector<std::vector<Scalar>> closed;
    for (const auto& v : vectors)
        for (size_t i = 0; i < amb.algebra->dim(); ++i) closed.push_back(amb.action[i].apply(v));
    KMatrix span = KMatrix::from_columns(f, amb.dim, closed);
    return span.column_space();
}

}  // namespace

FDModule fd_submodule(const FDModule& amb, const std::vector<std::vector<Scalar>>& vectors) {
    const FieldSpec& f = amb.algebra->ring()->field();
    KMatrix basis = module_span(amb, vectors);
    FDModule m;
    m.algebra = amb.algebra;
    m.dim = basis.cols();
    for (size_t i = 0; i < amb.algebra->dim(); ++i) {
        KMatrix act(f, m.dim, m.dim);
        for (size_t j = 0; j < m.dim; ++j) {
            auto img = amb.action[i].apply(basis.column(j));
            auto sol = basis.solve(img);
            if (!sol) throw std::logic_error("submodule is not action-closed");
            for (size_t r = 0; r < m.dim; ++r) act.at(r, j) = (*sol)[r];
        }
        m.action.push_back(std::move(act));
    }
    for (const auto& v : vectors) {
        auto sol = basis.solve(v);
        if (!sol) throw std::logic_error("generator escaped its span");
        m.generators.push_back(*sol);
    }
    return m;
}

KMatrix fd_ideal_subspace(const AlgebraPtr& a, const std::vector<Polynomial>& gens) {
    FDModule reg = fd_regular(a);
    std::vector<std::vector<Scalar>> vecs;
    for (const auto& g : gens) vecs.push_back(a->coords(g));
    return module_span(reg, vecs);
}

FDModule fd_ideal(const AlgebraPtr& a, const std::vector<Polynomial>& gens) {
    FDModule reg = fd_regular(a);
    std::vector<std::vector<Scalar>> vecs;
    for (const auto& g : gens) vecs.push_back(a->coords(g));
    return fd_submodule(reg, vecs);
}

FDModule fd_quotient(const FDModule& amb, const std::vector<std::vector<Scalar>>& vectors,
                     KMatrix* projection) {
    const FieldSpec& f = amb.algebra->ring()->field();
    KMatrix sub = module_span(amb, vectors);
    // complement coordinates: non-pivot rows of the subspace column basis
    KMatrix t = sub.transpose();
    std::vector<size_t> pivots = t.rref();  // pivots index ambient coordinates
    std::vector<bool> in_sub(amb.dim, false);
    for (size_t p : pivots) in_sub[p] = true;
    std::vector<size_t> rep;  // ambient coordinates representing the quotient basis
    for (size_t i = 0; i < amb.dim; ++i)
        if (!in_sub[i]) rep.push_back(i);

    // reduction of an ambient vector to quotient coordinates
    auto reduce = [&](std::vector<Scalar> v) {
        // subtract the subspace part: solve [sub | rep-units] decomposition
        // row-reduce against t (rows are a basis of the subspace in rref form)
        for (size_t r = 0; r < pivots.size(); ++r) {
            Scalar c = v[pivots[r]];
            if (c.is_zero()) continue;
            for (size_t i = 0; i < amb.dim; ++i) v[i] = v[i] - c * t.at(r, i);
        }
        std::vector<Scalar> out;
        out.reserve(rep.size());
        for (size_t i : rep) out.push_back(v[i]);
        return out;
    };

    FDModule q;
    q.algebra = amb.algebra;
    q.dim = rep.size();
    for (size_t i = 0; i < amb.algebra->dim(); ++i) {
        KMatrix act(f, q.dim, q.dim);
        for (size_t j = 0; j < q.dim; ++j) {
            std::vector<Scalar> e(amb.dim, Scalar::zero(f));
            e[rep[j]] = Scalar::one(f);
            auto img = reduce(amb.action[i].apply(e));
            for (size_t r = 0; r < q.dim; ++r) act.at(r, j) = img[r];
        }
        q.action.push_back(std::move(act));
    }
    for (const auto& g : amb.generators) q.generators.push_back(reduce(g));
    if (projection) {
        KMatrix proj(f, q.dim, amb.dim);
        for (size_t j = 0; j < amb.dim; ++j) {
            std::vector<Scalar> e(amb.dim, Scalar::zero(f));
            e[j] = Scalar::one(f);
            auto img = reduce(e);
            for (size_t r = 0; r < q.dim; ++r) proj.at(r, j) = img[r];
        }
        *projection = std::move(proj);
    }
    return q;
}

FDModule fd_quotient_by_ideal(const AlgebraPtr& a, const std::vector<Polynomial>& gens,
                              KMatrix* projection) {
    FDModule reg = fd_regular(a);
    std::vector<std::vector<Scalar>> vecs;
    for (const auto& g : gens) vecs.push_back(a->coords(g));
    return fd_quotient(reg, vecs, projection);
}

KMatrix fd_module_span(const FDModule& amb, const std::vector<std::vector<Scalar>>& vectors) {
    return module_span(amb, vectors);
}

KMatrix fd_trace_in(const FDModule& m, const FDModule& x) {
    const FieldSpec& f = m.algebra->ring()->field();
    FDHom homs = fd_hom(m, x);
    std::vector<std::vector<Scalar>> images;
    for (const auto& map : homs.maps)
        for (size_t j = 0; j < m.dim; ++j) images.push_back(map.column(j));
    return KMatrix::from_columns(f, x.dim, images).column_space();
}

FDModule fd_direct_sum(const FDModule& x, const FDModule& y) {
    const FieldSpec& f = x.algebra->ring()->field();
    FDModule m;
    m.algebra = x.algebra;
    m.dim = x.dim + y.dim;
    for (size_t i = 0; i < x.algebra->dim(); ++i) {
        KMatrix act(f, m.dim, m.dim);
        for (size_t r = 0; r < x.dim; ++r)
            for (size_t c = 0; c < x.dim; ++c) act.at(r, c) = x.action[i].at(r, c);
        for (size_t r = 0; r < y.dim; ++r)
            for (size_t c = 0; c < y.dim; ++c) act.at(x.dim + r, x.dim + c) = y.action[i].at(r, c);
        m.action.push_back(std::move(act));
    }
    return m;
}

FDHom fd_hom(const FDModule& m, const FDModule& n) {
    if (m.algebra.get() != n.algebra.get()) throw std::invalid_argument("algebra mismatch");
    const FieldSpec& f = m.algebra->ring()->field();
    size_t md = m.dim, nd = n.dim;
    FDHom out;
    if (md == 0 || nd == 0) {
        out.dim = 0;
        return out;
    }
    // commutation with the variable actions generates all constraints
    const QRingPtr& ring = m.algebra->ring();
    std::vector<size_t> var_ids;
    std::vector<KMatrix> mv, nv;
    for (size_t v = 0; v < ring->nvars(); ++v) {
        auto coords = m.algebra->coords(Polynomial::variable(ring->base(), v));
        mv.push_back(m.act(coords));
        nv.push_back(n.act(coords));
    }
    size_t unknowns = nd * md;  // phi(r, c), flat index c * nd + r
    KMatrix sys(f, mv.size() * nd * md, unknowns);
    size_t row = 0;
    for (size_t v = 0; v < mv.size(); ++v) {
        // phi * Mv - Nv * phi = 0
        for (size_t r = 0; r < nd; ++r)
            for (size_t c = 0; c < md; ++c) {
                for (size_t k = 0; k < md; ++k)
                    sys.at(row, k * nd + r) += mv[v].at(k, c);
                for (size_t k = 0; k < nd; ++k)
                    sys.at(row, c * nd + k) -= nv[v].at(r, k);
                ++row;
            }
    }
    KMatrix null = sys.null_space();
    out.dim = null.cols();
    for (size_t j = 0; j < null.cols(); ++j) {
        KMatrix map(f, nd, md);
        for (size_t c = 0; c < md; ++c)
            for (size_t r = 0; r < nd; ++r) map.at(r, c) = null.at(c * nd + r, j);
        out.maps.push_back(std::move(map));
    }
    return out;
}

namespace {

// minimal cover data: P0 = A^{b0} -> M with kernel K
struct Cover {
    size_t b0 = 0;
    FDModule p0;
    KMatrix pi;            // M.dim x (A.dim * b0)
    FDModule kernel;       // submodule of P0
    KMatrix kernel_basis;  // columns inside P0 coordinates
};

Cover minimal_cover(const FDModule& m) {
    const AlgebraPtr& a = m.algebra;
    const FieldSpec& f = a->ring()->field();
    // mM = sum of variable-action images
    std::vector<std::vector<Scalar>> ms;
    for (size_t v = 0; v < a->ring()->nvars(); ++v) {
        KMatrix act = m.act(a->coords(Polynomial::variable(a->ring()->base(), v)));
        for (size_t j = 0; j < m.dim; ++j) ms.push_back(act.column(j));
    }
    KMatrix msub = KMatrix::from_columns(f, m.dim, ms);
    KMatrix t = msub.transpose();
    std::vector<size_t> pivots = t.rref();
    std::vector<bool> covered(m.dim, false);
    for (size_t p : pivots) covered[p] = true;
    // lift a basis of M/mM: the unit vectors on uncovered coordinates
    std::vector<std::vector<Scalar>> gens;
    for (size_t i = 0; i < m.dim; ++i) {
        if (covered[i]) continue;
        std::vector<Scalar> e(m.dim, Scalar::zero(f));
        e[i] = Scalar::one(f);
        gens.push_back(std::move(e));
    }

    Cover c;
    c.b0 = gens.size();
    c.p0 = fd_free(a, c.b0);
    c.pi = KMatrix(f, m.dim, c.p0.dim);
    for (size_t s = 0; s < c.b0; ++s)
        for (size_t e = 0; e < a->dim(); ++e) {
            std::vector<Scalar> ec(a->dim(), Scalar::zero(f));
            ec[e] = Scalar::one(f);
            auto img = m.act(ec).apply(gens[s]);
            for (size_t r = 0; r < m.dim; ++r) c.pi.at(r, s * a->dim() + e) = img[r];
        }
    c.kernel_basis = c.pi.null_space();
    std::vector<std::vector<Scalar>> kvecs;
    for (size_t j = 0; j < c.kernel_basis.cols(); ++j)
        kvecs.push_back(c.kernel_basis.column(j));
    c.kernel = fd_submodule(c.p0, kvecs);
    return c;
}

}  // namespace

size_t fd_minimal_generators(const FDModule& m) { return minimal_cover(m).b0; }

bool fd_is_free(const FDModule& m) {
    if (m.dim == 0) return true;
    return minimal_cover(m).kernel.dim == 0;
}

FDModule fd_syzygy(const FDModule& m, size_t n) {
    FDModule cur = m;
    for (size_t i = 0; i < n; ++i) {
        if (cur.dim == 0) return cur;
        cur = minimal_cover(cur).kernel;
    }
    return cur;
}

size_t fd_ext1(const FDModule& m, const FDModule& n) {
    if (m.algebra.get() != n.algebra.get()) throw std::invalid_argument("algebra mismatch");
    if (m.dim == 0 || n.dim == 0) return 0;
    const AlgebraPtr& a = m.algebra;
    const FieldSpec& f = a->ring()->field();
    Cover cov = minimal_cover(m);
    if (cov.kernel.dim == 0) return 0;  // M free

    FDHom homs = fd_hom(cov.kernel, n);
    if (homs.dim == 0) return 0;
    // restrictions of module maps P0 -> N, i.e. psi(a_1..a_b0) = sum act(a_s) w_s
    // flat coordinates of a map K -> N: (kernel basis column j) -> N, index j*nd + r
    size_t kd = cov.kernel.dim, nd = n.dim;
    std::vector<std::vector<Scalar>> restricted;
    for (size_t s = 0; s < cov.b0; ++s)
        for (size_t w = 0; w < nd; ++w) {
            std::vector<Scalar> wvec(nd, Scalar::zero(f));
            wvec[w] = Scalar::one(f);
            std::vector<Scalar> flat(kd * nd, Scalar::zero(f));
            for (size_t j = 0; j < kd; ++j) {
                // kernel basis element j as an element of P0 = A^{b0}
                auto amb = cov.kernel_basis.column(j);
                std::vector<Scalar> coords(a->dim(), Scalar::zero(f));
                for (size_t e = 0; e < a->dim(); ++e) coords[e] = amb[s * a->dim() + e];
                auto img = n.act(coords).apply(wvec);
                for (size_t r = 0; r < nd; ++r) flat[j * nd + r] = img[r];
            }
            restricted.push_back(std::move(flat));
        }
    // flatten the Hom(K, N) basis the same way
    std::vector<std::vector<Scalar>> hom_flat;
    for (const auto& map : homs.maps) {
        std::vector<Scalar> flat(kd * nd, Scalar::zero(f));
        for (size_t j = 0; j < kd; ++j)
            for (size_t r = 0; r < nd; ++r) flat[j * nd + r] = map.at(r, j);
        hom_flat.push_back(std::move(flat));
    }
    KMatrix res = KMatrix::from_columns(f, kd * nd, restricted);
    return homs.dim - res.rank();
}

FDModule fd_dual(const FDModule& m) {
    const AlgebraPtr& a = m.algebra;
    const FieldSpec& f = a->ring()->field();
    FDHom homs = fd_hom(m, fd_regular(a));
    FDModule d;
    d.algebra = a;
    d.dim = homs.dim;
    size_t ad = a->dim(), md = m.dim;
    // flatten hom basis for coordinate solving
    std::vector<std::vector<Scalar>> flat;
    for (const auto& map : homs.maps) {
        std::vector<Scalar> v(ad * md, Scalar::zero(f));
        for (size_t c = 0; c < md; ++c)
            for (size_t r = 0; r < ad; ++r) v[c * ad + r] = map.at(r, c);
        flat.push_back(std::move(v));
    }
    KMatrix basis = KMatrix::from_columns(f, ad * md, flat);
    for (size_t i = 0; i < ad; ++i) {
        std::vector<Scalar> ec(ad, Scalar::zero(f));
        ec[i] = Scalar::one(f);
        KMatrix mult = a->mult_matrix(ec);
        KMatrix act(f, d.dim, d.dim);
        for (size_t j = 0; j < d.dim; ++j) {
            KMatrix moved = mult.multiply(homs.maps[j]);  // (a . phi)(v) = a phi(v)
            std::vector<Scalar> v(ad * md, Scalar::zero(f));
            for (size_t c = 0; c < md; ++c)
                for (size_t r = 0; r < ad; ++r) v[c * ad + r] = moved.at(r, c);
            auto sol = basis.solve(v);
            if (!sol) throw std::logic_error("dual action left the hom space");
            for (size_t r = 0; r < d.dim; ++r) act.at(r, j) = (*sol)[r];
        }
        d.action.push_back(std::move(act));
    }
    return d;
}

FDModule fd_cosyzygy(const FDModule& m, size_t n) {
    return fd_dual(fd_syzygy(fd_dual(m), n));
}

size_t fd_socle_dimension(const FDModule& m) {
    const AlgebraPtr& a = m.algebra;
    const FieldSpec& f = a->ring()->field();
    size_t nv = a->ring()->nvars();
    KMatrix stack(f, nv * m.dim, m.dim);
    for (size_t v = 0; v < nv; ++v) {
        KMatrix act = m.act(a->coords(Polynomial::variable(a->ring()->base(), v)));
        for (size_t r = 0; r < m.dim; ++r)
            for (size_t c = 0; c < m.dim; ++c) stack.at(v * m.dim + r, c) = act.at(r, c);
    }
    return stack.null_space().cols();
}

KMatrix fd_trace_in_ring(const FDModule& m) {
    const AlgebraPtr& a = m.algebra;
    const FieldSpec& f = a->ring()->field();
    FDHom homs = fd_hom(m, fd_regular(a));
    std::vector<std::vector<Scalar>> images;
    for (const auto& map : homs.maps)
        for (size_t j = 0; j < m.dim; ++j) images.push_back(map.column(j));
    return KMatrix::from_columns(f, a->dim(), images).column_space();
}

std::vector<EnumeratedIdeal> enumerate_monomial_ideals(const AlgebraPtr& a) {
    const FieldSpec& f = a->ring()->field();
    size_t d = a->dim();
    if (d > 20) throw CapError("monomial enumeration above 2^20 subsets");
    std::vector<EnumeratedIdeal> out;
    std::set<std::string> seen;
    for (uint64_t mask = 0; mask < (uint64_t(1) << d); ++mask) {
        std::vector<Polynomial> gens;
        std::vector<std::vector<Scalar>> vecs;
        for (size_t i = 0; i < d; ++i) {
            if (!(mask >> i & 1)) continue;
            gens.push_back(Polynomial::term(a->ring()->base(), a->basis()[i], Scalar::one(f)));
            std::vector<Scalar> e(d, Scalar::zero(f));
            e[i] = Scalar::one(f);
            vecs.push_back(std::move(e));
        }
        KMatrix span = module_span(fd_regular(a), vecs);
        std::string fp = subspace_fingerprint(span);
        if (seen.insert(fp).second)
            out.push_back({std::move(gens), std::move(span), false});
    }
    return out;
}

std::vector<EnumeratedIdeal> enumerate_random_ideals(const AlgebraPtr& a, uint64_t seed,
                                                     size_t count) {
    const FieldSpec& f = a->ring()->field();
    size_t d = a->dim();
    std::mt19937_64 rng(seed);
    auto random_scalar = [&]() {
        if (f.kind == FieldKind::rationals)
            return Scalar(f, static_cast<long>(rng() % 7) - 3);
        return Scalar(f, static_cast<long>(rng() % f.characteristic));
    };
    std::vector<EnumeratedIdeal> out;
    std::set<std::string> seen;
    FDModule reg = fd_regular(a);
    for (size_t n = 0; n < count; ++n) {
        size_t ngens = 1 + static_cast<size_t>(rng() % 2);
        std::vector<Polynomial> gens;
        std::vector<std::vector<Scalar>> vecs;
        for (size_t g = 0; g < ngens; ++g) {
            std::vector<Scalar> v(d, Scalar::zero(f));
            bool nonzero = false;
            for (size_t tries = 0; tries < 64 && !nonzero; ++tries) {
                for (size_t i = 0; i < d; ++i) {
                    // elements of the maximal ideal only
                    v[i] = a->basis()[i].is_one() ? Scalar::zero(f) : random_scalar();
                    nonzero = nonzero || !v[i].is_zero();
                }
            }
            gens.push_back(a->element(v));
            vecs.push_back(std::move(v));
        }
        KMatrix span = module_span(reg, vecs);
        std::string fp = subspace_fingerprint(span);
        bool dup = !seen.insert(fp).second;
        out.push_back({std::move(gens), std::move(span), dup});
    }
    return out;
}

}  // namespace tracealg
