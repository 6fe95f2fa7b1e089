#include "tracealg/quotient.hpp"

#include <algorithm>
#include <stdexcept>

#include "tracealg/errors.hpp"

namespace tracealg {

QRingPtr QuotientRing::make(PolyRingPtr base, const std::vector<Polynomial>& defining,
                            uint32_t degree_cap) {
    auto r = std::make_shared<QuotientRing>();
    r->base_ = base;
    r->defining_ = groebner_basis(base, defining, degree_cap);
    if (r->defining_.contains_one()) throw std::invalid_argument("zero ring");
    r->graded_ = true;
    for (const auto& g : defining)
        if (!g.homogeneous_degree()) r->graded_ = false;
    return r;
}

bool QuotientRing::is_artinian() const {
    // finite staircase iff every variable has a pure power among the leading terms
    size_t n = nvars();
    if (n == 0) return true;
    std::vector<bool> covered(n, false);
    for (const auto& g : defining_.gens) {
        const Monomial& lm = g.leading_monomial();
        size_t nz = 0, which = 0;
        for (size_t v = 0; v < n; ++v) {
            if (lm.e[v]) {
                ++nz;
                which = v;
            }
        }
        if (nz == 1) covered[which] = true;
        if (nz == 0) return true;  // cannot happen for a proper ideal
    }
    return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
}

std::vector<Monomial> QuotientRing::standard_monomials(size_t cap) const {
    if (!is_artinian()) throw std::domain_error("ring not Artinian");
    size_t n = nvars();
    std::vector<uint32_t> bound(n, 1);
    for (const auto& g : defining_.gens) {
        const Monomial& lm = g.leading_monomial();
        size_t nz = 0, which = 0;
        for (size_t v = 0; v < n; ++v)
            if (lm.e[v]) {
                ++nz;
                which = v;
            }
        if (nz == 1) bound[which] = std::max(bound[which], lm.e[which]);
    }
    std::vector<const Monomial*> lts;
    for (const auto& g : defining_.gens) lts.push_back(&g.leading_monomial());

    std::vector<Monomial> out;
    Monomial cur(n);
    // box enumeration with divisibility filter
    for (;;) {
        bool standard = true;
        for (const auto* lt : lts)
            if (lt->divides(cur)) {
                standard = false;
                break;
            }
        if (standard) {
            out.push_back(cur);
            if (cap && out.size() > cap) throw CapError("standard monomial cap exceeded");
        }
        size_t v = 0;
        while (v < n) {
            cur.e[v] += 1;
            cur.deg += 1;
            if (cur.e[v] < bound[v]) break;
            cur.deg -= cur.e[v];
            cur.e[v] = 0;
            ++v;
        }
        if (v == n) break;
    }
    std::sort(out.begin(), out.end(),
              [&](const Monomial& a, const Monomial& b) { return base_->order.compare(a, b) > 0; });
    return out;
}

bool QuotientRing::is_unit(const Polynomial& a) const {
    Polynomial f = nf(a);
    if (f.is_zero() || f.constant_coefficient().is_zero()) return false;
    if (f.is_constant()) return true;
    // unit iff the positive part is nilpotent
    Polynomial rest = f - Polynomial::constant(base_, f.constant_coefficient());
    Polynomial pow = rest;
    size_t cap = is_artinian() ? dimension_over_k() + 1 : 64;
    for (size_t k = 0; k < cap; ++k) {
        if (pow.is_zero()) return true;
        pow = multiply(pow, rest);
    }
    return false;
}

Polynomial QuotientRing::invert_unit(const Polynomial& a) const {
    Polynomial f = nf(a);
    if (f.is_zero()) throw std::domain_error("division by zero in quotient ring");
    Scalar c = f.constant_coefficient();
    if (c.is_zero()) throw std::domain_error("not a unit");
    Scalar cinv = c.inverse();
    Polynomial rest = f - Polynomial::constant(base_, c);
    if (rest.is_zero()) return Polynomial::constant(base_, cinv);
    // (c + r)^-1 = c^-1 * sum_k (-r/c)^k, finite since r is nilpotent
    Polynomial ratio = nf(rest.scaled(-cinv));
    Polynomial acc = Polynomial::one(base_);
    Polynomial pow = ratio;
    size_t cap = is_artinian() ? dimension_over_k() + 1 : 64;
    size_t k = 0;
    while (!pow.is_zero()) {
        acc += pow;
        pow = multiply(pow, ratio);
        if (++k > cap) throw std::domain_error("not a unit");
    }
    return nf(acc.scaled(cinv));
}

bool same_qring(const QRingPtr& a, const QRingPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (!same_ring(a->base(), b->base())) return false;
    return a->defining().gens == b->defining().gens;
}

std::vector<Polynomial> element_annihilator(const Polynomial& a, const QRingPtr& ring,
                                            uint32_t degree_cap) {
    // (J : a) via elimination in P^2 on (a, 1) and (j, 0)
    const PolyRingPtr& P = ring->base();
    ModuleOrder mo{P->order, 1};
    std::vector<VecPoly> gens;
    Polynomial f = ring->nf(a);
    gens.push_back(VecPoly::from_components(P, {f, Polynomial::one(P)}, mo));
    for (const auto& j : ring->defining().gens)
        gens.push_back(VecPoly::from_components(P, {j, Polynomial::zero(P)}, mo));
    auto gb = module_groebner(std::move(gens), mo, degree_cap);
    std::vector<Polynomial> out;
    for (const auto& v : gb) {
        if (!v.supported_below(1)) continue;  // still involves the ambient component
        Polynomial g = ring->nf(v.component(1));
        if (!g.is_zero()) out.push_back(std::move(g));
    }
    return out;
}

bool is_zerodivisor(const Polynomial& a, const QRingPtr& ring, uint32_t degree_cap) {
    Polynomial f = ring->nf(a);
    if (f.is_zero()) return true;
    if (ring->is_unit(f)) return false;
    return !element_annihilator(f, ring, degree_cap).empty();
}

}  // namespace tracealg
