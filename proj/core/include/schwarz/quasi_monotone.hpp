#pragma once

#include <vector>

#include "schwarz/coefficients.hpp"
#include "schwarz/mesh.hpp"

namespace schwarz {

/// Outcome of the coefficient-distribution check: assumption1 demands a
/// face-path with nondecreasing mu from every subdomain to the patch
/// maximum, assumption2 only that every mu along some such path dominates
/// the starting value. assumption1 implies assumption2.
struct QuasiMonotoneVerdict {
    bool assumption1 = false;
    bool assumption2 = false;
};

/// Checks one vertex patch given the mu value of each patch subdomain.
/// For boundary vertices, the patch maximum must own a boundary face
/// containing the vertex.
QuasiMonotoneVerdict check_patch(const std::vector<double>& mu,
                                 const std::vector<std::vector<int>>& adjacency,
                                 const std::vector<bool>& boundary_face_at_vertex,
                                 bool vertex_on_boundary);

/// Conjunction of the patch verdicts over every coarse vertex.
QuasiMonotoneVerdict check_quasi_monotone(const CoefficientField& coeffs,
                                          const std::vector<VertexPatch>& patches);

/// Classifies a single chain of mu values running from one subdomain to
/// the maximum: assumption1 iff nondecreasing along the chain, assumption2
/// iff every value dominates the first.
QuasiMonotoneVerdict classify_path(const std::vector<double>& mu_along_path);

} // namespace schwarz
