#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "tracealg/matrix.hpp"

namespace tracealg {

class PresentedModule;
using ModulePtr = std::shared_ptr<const PresentedModule>;

// Generators written inside an ambient module (columns in the ambient's
// generator coordinates). ambient == nullptr means the ambient is R itself,
// so the columns have height 1 and the module is an ideal with its embedding.
struct SubmoduleInfo {
    RingMatrix vectors;
    ModulePtr ambient;
};

// Finitely presented module M = coker(presentation : R^cols -> R^gens).
class PresentedModule {
public:
    QRingPtr ring;
    RingMatrix presentation;
    std::vector<int64_t> gen_degrees;  // one per generator when graded
    bool graded = false;
    std::optional<SubmoduleInfo> embedding;
    bool zero_flagged = false;  // built from an empty generator list

    size_t gen_count() const { return presentation.rows; }
    bool is_ideal() const { return embedding && !embedding->ambient; }
    // generators as ring elements; only for ideals
    std::vector<Polynomial> ideal_generators() const;
};

ModulePtr free_module(QRingPtr ring, size_t rank, std::vector<int64_t> degrees = {});
ModulePtr ring_as_module(QRingPtr ring);

// Ideal (g_1..g_m) <= R presented by its full syzygy matrix, embedding kept.
ModulePtr present_ideal(const std::vector<Polynomial>& gens, const QRingPtr& ring,
                        uint32_t degree_cap = 0);

// Cyclic module R/I presented by a single generator with relation row I.
ModulePtr quotient_by_ideal(const std::vector<Polynomial>& gens, const QRingPtr& ring);

// Submodule of X generated by the given columns (in X's generator
// coordinates), presented abstractly with the embedding retained.
ModulePtr submodule_of(const ModulePtr& x, const RingMatrix& vectors, uint32_t degree_cap = 0);

// X / (submodule generated by the columns)
ModulePtr quotient_module(const ModulePtr& x, const RingMatrix& sub_vectors);

ModulePtr direct_sum(const ModulePtr& a, const ModulePtr& b);

// Construct from a raw presentation; degrees optional (module is graded when
// the ring is graded, degrees are supplied, and the matrix is homogeneous).
ModulePtr module_from_presentation(QRingPtr ring, RingMatrix presentation,
                                   std::vector<int64_t> gen_degrees = {});

bool is_zero_module(const PresentedModule& m, uint32_t degree_cap = 0);

// k-dimension of the module (count of standard monomials of the cokernel);
// nullopt when infinite-dimensional.
std::optional<size_t> module_dimension_over_k(const PresentedModule& m, uint32_t degree_cap = 0);

// Graded k-dimensions by degree (finite-dimensional modules only).
std::optional<std::vector<std::pair<int64_t, size_t>>> module_hilbert(
    const PresentedModule& m, uint32_t degree_cap = 0);

// Nakayama count dim_k M/mM. Requires a graded module or an Artinian ring.
size_t minimal_generators(const PresentedModule& m);

// true iff the minimal presentation has no relations left
bool is_free(const PresentedModule& m);

// Presentation with unit entries pivoted away; returns the new matrix and
// the surviving generator degrees (degrees empty when not graded).
std::pair<RingMatrix, std::vector<int64_t>> minimalize_presentation(
    const RingMatrix& a, const std::vector<int64_t>& gen_degrees, bool graded);

// Subset of columns minimally generating the same submodule of R^rows.
// Requires homogeneous columns (graded path) or an Artinian ring.
RingMatrix minimal_column_generators(const RingMatrix& a, const std::vector<int64_t>& row_degs,
                                     bool graded, uint32_t degree_cap = 0);

}  // namespace tracealg
