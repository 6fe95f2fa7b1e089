#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "tracealg/kmatrix.hpp"
#include "tracealg/quotient.hpp"

namespace tracealg {

// Artinian quotient ring as a finite-dimensional algebra over k with
// structure constants, the independent oracle for every homological verdict
// on the Groebner path.
class FiniteAlgebra {
public:
    static std::shared_ptr<const FiniteAlgebra> make(const QRingPtr& ring, size_t dim_cap = 64);

    const QRingPtr& ring() const { return ring_; }
    const std::vector<Monomial>& basis() const { return basis_; }
    size_t dim() const { return basis_.size(); }
    size_t unit_index() const { return unit_index_; }

    // coordinates of the normal form of p on the monomial basis
    std::vector<Scalar> coords(const Polynomial& p) const;
    Polynomial element(const std::vector<Scalar>& coords) const;
    // matrix of multiplication by the element with the given coordinates
    KMatrix mult_matrix(const std::vector<Scalar>& coords) const;
    // product of two coordinate vectors
    std::vector<Scalar> product(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const;

private:
    QRingPtr ring_;
    std::vector<Monomial> basis_;
    size_t unit_index_ = 0;
    // table[i] = multiplication matrix of basis element i
    std::vector<KMatrix> table_;
};

using AlgebraPtr = std::shared_ptr<const FiniteAlgebra>;

// Finite-dimensional module: one action matrix per algebra basis element.
struct FDModule {
    AlgebraPtr algebra;
    size_t dim = 0;
    std::vector<KMatrix> action;                    // indexed like the algebra basis
    std::vector<std::vector<Scalar>> generators;    // distinguished generators (optional)

    KMatrix act(const std::vector<Scalar>& algebra_coords) const;
};

// R as a module over itself
FDModule fd_regular(const AlgebraPtr& a);
// free module A^rank
FDModule fd_free(const AlgebraPtr& a, size_t rank);
// ideal generated by ring elements, as a module with distinguished generators
FDModule fd_ideal(const AlgebraPtr& a, const std::vector<Polynomial>& gens);
// submodule of `amb` spanned (as a module) by the given vectors
FDModule fd_submodule(const FDModule& amb, const std::vector<std::vector<Scalar>>& vectors);
// quotient of the regular module by an ideal subspace (columns)
FDModule fd_quotient_by_ideal(const AlgebraPtr& a, const std::vector<Polynomial>& gens,
                              KMatrix* projection = nullptr);
// quotient of a module by the submodule spanned by the given vectors; the
// optional projection maps ambient coordinates onto quotient coordinates
FDModule fd_quotient(const FDModule& amb, const std::vector<std::vector<Scalar>>& vectors,
                     KMatrix* projection = nullptr);
FDModule fd_direct_sum(const FDModule& x, const FDModule& y);

// module-closed span of vectors inside an ambient module (column basis)
KMatrix fd_module_span(const FDModule& amb, const std::vector<std::vector<Scalar>>& vectors);
// trace of M inside X: the span of the images of all module maps M -> X
KMatrix fd_trace_in(const FDModule& m, const FDModule& x);

// subspace basis (ambient coordinates) of the ideal generated by gens
KMatrix fd_ideal_subspace(const AlgebraPtr& a, const std::vector<Polynomial>& gens);

// Hom_R(M, N): dimension plus an explicit matrix basis
struct FDHom {
    size_t dim = 0;
    std::vector<KMatrix> maps;  // N.dim x M.dim matrices
};
FDHom fd_hom(const FDModule& m, const FDModule& n);

// dim_k Ext^1(M, N) from a Nakayama minimal cover: 0 -> K -> P0 -> M -> 0
// and Ext^1 = Hom(K, N) / restrictions of Hom(P0, N).
size_t fd_ext1(const FDModule& m, const FDModule& n);

size_t fd_minimal_generators(const FDModule& m);
bool fd_is_free(const FDModule& m);
// kernel of the minimal cover (the first syzygy); iterate for higher ones
FDModule fd_syzygy(const FDModule& m, size_t n = 1);
// Hom(M, R) with its natural module structure
FDModule fd_dual(const FDModule& m);
// (syzygy of the dual), dualized
FDModule fd_cosyzygy(const FDModule& m, size_t n = 1);
// socle dimension (joint kernel of all variable actions)
size_t fd_socle_dimension(const FDModule& m);
// trace of M in R: span of the images of all homomorphisms M -> R
KMatrix fd_trace_in_ring(const FDModule& m);

struct EnumeratedIdeal {
    std::vector<Polynomial> generators;
    KMatrix subspace;       // column basis in algebra coordinates
    bool duplicate = false; // same subspace as an earlier entry (random mode)
};

// all ideals generated by subsets of the monomial basis, deduplicated
std::vector<EnumeratedIdeal> enumerate_monomial_ideals(const AlgebraPtr& a);
// `count` seeded draws of ideals generated by random elements of the maximal
// ideal; duplicates (as subspaces) are kept but flagged
std::vector<EnumeratedIdeal> enumerate_random_ideals(const AlgebraPtr& a, uint64_t seed,
                                                     size_t count);

}  // namespace tracealg
