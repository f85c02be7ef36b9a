#pragma once

#include <string>
#include <vector>

#include "qtl/canbasis.hpp"
#include "qtl/comp.hpp"

namespace qtl {

/// One symbolic (exact, field-free) verification case.
struct CheckCase {
    std::string suite;
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Compositions of n with positive parts, optionally bounded arity.
std::vector<Comp> shapes_of_total(int n, int max_parts = -1);

/// Defining relations of the algebra on V_d for d <= dmax.
std::vector<CheckCase> check_relations_irrep(int dmax);

/// Defining relations through the iterated coproduct on a tensor space.
std::vector<CheckCase> check_relations_tensor(const Comp& shape);

/// The rank-r quiver function spaces carry exactly the matrices of V_{d-2r}.
std::vector<CheckCase> check_quiver_matrices(int dmax);

/// Every realizable slice map intertwines E, F, K exactly.
std::vector<CheckCase> check_slice_isomorphism(const Comp& shape);

/// q = 1 specialization of the cell counts is the binomial product.
std::vector<CheckCase> check_cell_count_q1(const Comp& shape);

/// Unitriangularity, bar invariance and coefficient positivity of the
/// canonical table of the shape.
std::vector<CheckCase> check_canonical_table(const Comp& shape);

/// Certification of the canonical-extension basis (dense value, closure
/// criterion, rank-1 uniqueness) and of its canonical module structure.
std::vector<CheckCase> check_canonical_certification(const Comp& shape, CanonicalCache& cache);

/// Decomposition basis: closed action forms, isotypic blocks, disjoint
/// supports, certification.
std::vector<CheckCase> check_decomposition(const Comp& shape);

/// Diagonal action of the intertwiners on the decomposition basis with the
/// nonzero constants, plus the independent q = 1 recursion.
std::vector<CheckCase> check_intertwiner_diagonal(const Comp& shape);

/// Closed omega coefficients equal the direct intertwiner images on the
/// canonical-extension basis, including the vanishing cases.
std::vector<CheckCase> check_omega(const Comp& shape, CanonicalCache& cache);

/// Every intertwiner commutes with E, F, K; the family is linearly
/// independent of cardinality #LCM.
std::vector<CheckCase> check_intertwiner_commute(const Comp& shape);

/// xi is an isomorphism onto the decomposition span commuting with the action.
std::vector<CheckCase> check_xi(const Comp& shape, CanonicalCache& cache);

}  // namespace qtl
