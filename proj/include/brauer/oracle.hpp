#pragma once

#include <optional>
#include <vector>

#include "brauer/cartan.hpp"
#include "brauer/quiver.hpp"

namespace brauer {

enum class BasisPathKind {
    Idempotent,      // the empty path at a quiver vertex
    ProperPrefix,    // a nonempty proper prefix of some cycle power C^mu
    FullCycleClass,  // all full powers anchored at one polygon, identified
};

/// One basis element of the path space between two quiver vertices. A
/// FullCycleClass stands for every full power C^mu anchored at its polygon
/// at once; those are all equal modulo the type-one relations, so the class
/// records the polygon rather than any particular cycle.
struct BasisPath {
    BasisPathKind kind = BasisPathKind::ProperPrefix;
    std::vector<Arrow> arrows;  // empty unless kind == ProperPrefix
    QuiverVertex source;
    QuiverVertex target;
    std::optional<PolygonId> cycle_class_polygon;  // FullCycleClass only
};

/// Brute-force basis enumeration for the path space from p's quiver vertex
/// to q's: walk C^mu for every special cycle anchored at an occurrence of
/// p and keep each nonempty proper prefix ending at q's vertex, plus, when
/// p == q, the idempotent and the identified full-cycle class. The result
/// is duplicate-free. Deliberately independent of the closed-form entry
/// formulas.
std::vector<BasisPath> enumerate_basis(const BrauerConfiguration& config, const Quiver& quiver,
                                       const PolygonId& p, const PolygonId& q);

/// Cartan matrix recomputed entrywise as |enumerate_basis(p, q)|.
CartanMatrix oracle_cartan_matrix(const BrauerConfiguration& config);

}  // namespace brauer
