#pragma once

#include <cstdint>
#include <vector>

#include "brauer/config.hpp"

namespace brauer {

/// Square exact-integer matrix indexed by the polygons in declaration
/// order. Symmetric, with every diagonal entry at least 2.
struct CartanMatrix {
    std::vector<std::vector<std::int64_t>> entries;

    std::size_t order() const { return entries.size(); }

    bool operator==(const CartanMatrix&) const = default;
};

/// Diagonal entry for polygon p:
///   2 + sum over the vertices a of p of occ(a,p) * (occ(a,p) * mu(a) - 1).
std::int64_t cartan_diagonal(const BrauerConfiguration& config, const PolygonId& p);

/// Off-diagonal entry for distinct polygons p, q:
///   sum over the shared vertices a of mu(a) * occ(a,p) * occ(a,q).
/// Zero exactly when the polygons share no vertex.
std::int64_t cartan_off_diagonal(const BrauerConfiguration& config, const PolygonId& p,
                                 const PolygonId& q);

CartanMatrix cartan_matrix(const BrauerConfiguration& config);

/// Total dimension of the configuration's algebra:
///   2 * |polygons| + sum over vertices of val(a) * (mu(a) * val(a) - 1).
/// Equals the sum of all Cartan matrix entries.
std::int64_t algebra_dimension(const BrauerConfiguration& config);

/// Whether any nonzero path connects the two distinct polygons' quiver
/// vertices; equivalent to a shared configuration vertex.
bool hom_nonzero(const BrauerConfiguration& config, const PolygonId& p, const PolygonId& q);

}  // namespace brauer
