#include "brauer/oracle.hpp"

#include <set>

#include "brauer/checked.hpp"

namespace brauer {

namespace {

// Enumeration walks mu * val arrows per cycle; refuse configurations where
// that is no longer a sane amount of work or memory.
constexpr std::int64_t kMaxPowerLength = 1'000'000;

void require_valid(const BrauerConfiguration& config) {
    auto violations = config.validate();
    if (!violations.empty()) throw InvalidConfigurationError(std::move(violations));
}

std::vector<BasisPath> enumerate_basis_unchecked(const BrauerConfiguration& config,
                                                 const Quiver& quiver, const PolygonId& p,
                                                 const PolygonId& q) {
    const QuiverVertex& source = quiver.vertex_of(p);
    const QuiverVertex& target = quiver.vertex_of(q);

    std::vector<BasisPath> paths;
    std::set<std::vector<ArrowId>> seen;
    for (const VertexId& generator : config.vertices) {
        if (config.is_truncated(generator)) continue;
        if (config.occ(generator, p) == 0) continue;
        const std::int64_t exponent = config.mu(generator);
        for (const SpecialCycle& cycle : special_cycles_at(config, quiver, generator, p)) {
            const std::int64_t cycle_length = static_cast<std::int64_t>(cycle.arrows.size());
            const std::int64_t power_length = checked_mul(exponent, cycle_length);
            if (power_length > kMaxPowerLength) {
                throw OverflowError("basis enumeration too large for cycle of vertex '" +
                                    generator.name + "'");
            }
            std::vector<Arrow> prefix;
            prefix.reserve(static_cast<std::size_t>(power_length));
            for (std::int64_t len = 1; len < power_length; ++len) {
                prefix.push_back(cycle.arrows[static_cast<std::size_t>((len - 1) % cycle_length)]);
                if (prefix.back().target != target) continue;
                std::vector<ArrowId> key;
                key.reserve(prefix.size());
                for (const Arrow& arrow : prefix) key.push_back(arrow.id);
                if (!seen.insert(std::move(key)).second) continue;
                paths.push_back({BasisPathKind::ProperPrefix, prefix, source, target, {}});
            }
        }
    }
    if (p == q) {
        paths.push_back({BasisPathKind::Idempotent, {}, source, target, {}});
        paths.push_back({BasisPathKind::FullCycleClass, {}, source, target, p});
    }
    return paths;
}

}  // namespace

std::vector<BasisPath> enumerate_basis(const BrauerConfiguration& config, const Quiver& quiver,
                                       const PolygonId& p, const PolygonId& q) {
    if (!config.has_polygon(p)) throw UnknownPolygonError(p.name);
    if (!config.has_polygon(q)) throw UnknownPolygonError(q.name);
    require_valid(config);
    return enumerate_basis_unchecked(config, quiver, p, q);
}

CartanMatrix oracle_cartan_matrix(const BrauerConfiguration& config) {
    require_valid(config);
    Quiver quiver = build_quiver(config);
    const std::size_t n = config.polygons.size();
    CartanMatrix matrix;
    matrix.entries.assign(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            auto basis = enumerate_basis_unchecked(config, quiver, config.polygons[i].id(),
                                                   config.polygons[j].id());
            matrix.entries[i][j] = static_cast<std::int64_t>(basis.size());
        }
    }
    return matrix;
}

}  // namespace brauer
