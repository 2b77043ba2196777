#ifndef GSM_PANAYI_HPP
#define GSM_PANAYI_HPP

#include <string>
#include <vector>

#include "gsm/bigint.hpp"
#include "gsm/local_field.hpp"
#include "gsm/local_poly.hpp"

namespace gsm {

struct RootApproximation {
    std::vector<long> digit_indices; // residue enumeration indices, depth order
    std::string digits;              // readable rendering of the same string
    FieldElement value;              // Newton-sharpened approximation
    long residual_valuation = 0;     // certified lower bound on nu(phi(value))
};

struct RootReport {
    long count = 0;
    std::vector<RootApproximation> approximations;
};

/**
 * Digit-by-digit root counting over K: reduce the normalized polynomial mod
 * pi, stop on a degree-1 reduction (one root behind this digit string), kill
 * on a rootless or degree-0 reduction, and otherwise branch per residue root
 * through x -> pi*x + lift(root). Breadth-first with children in residue
 * enumeration order, so reports are deterministic.
 *
 * max_depth < 0 selects the default 2*nu(Res(phi, phi')) + 4; any live branch
 * past the bound raises DepthExceeded. The input must be squarefree, which is
 * enforced up front through a finite resultant valuation.
 */
RootReport count_roots(const PolyOverK& phi, const LocalField& K,
                       long max_depth = -1);

/**
 * A root in K of an integer polynomial defining a subfield F, as the first
 * reported root of count_roots, or NoRootInField when there is none.
 */
FieldElement embed_subfield(const LocalField& K,
                            const std::vector<BigInt>& subfield_poly);

} // namespace gsm

#endif
