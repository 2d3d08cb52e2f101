#include "brauer/cartan.hpp"

#include "brauer/checked.hpp"

namespace brauer {

namespace {

void require_valid(const BrauerConfiguration& config) {
    auto violations = config.validate();
    if (!violations.empty()) throw InvalidConfigurationError(std::move(violations));
}

std::int64_t diagonal_entry(const BrauerConfiguration& config, const Polygon& polygon) {
    std::int64_t total = 2;
    for (const auto& [vertex, count] : polygon.member_counts()) {
        // occ * (occ*mu - 1); vanishes for a truncated vertex.
        std::int64_t term = checked_mul(count, checked_sub(checked_mul(count, config.mu(vertex)), 1));
        total = checked_add(total, term);
    }
    return total;
}

std::int64_t off_diagonal_entry(const BrauerConfiguration& config, const Polygon& p,
                                const Polygon& q) {
    std::int64_t total = 0;
    for (const auto& [vertex, count_p] : p.member_counts()) {
        std::int64_t count_q = q.count_of(vertex);
        if (count_q == 0) continue;
        total = checked_add(total, checked_mul(config.mu(vertex), checked_mul(count_p, count_q)));
    }
    return total;
}

}  // namespace

std::int64_t cartan_diagonal(const BrauerConfiguration& config, const PolygonId& p) {
    if (!config.has_polygon(p)) throw UnknownPolygonError(p.name);
    require_valid(config);
    return diagonal_entry(config, config.polygon(p));
}

std::int64_t cartan_off_diagonal(const BrauerConfiguration& config, const PolygonId& p,
                                 const PolygonId& q) {
    if (!config.has_polygon(p)) throw UnknownPolygonError(p.name);
    if (!config.has_polygon(q)) throw UnknownPolygonError(q.name);
    if (p == q) throw SamePolygonError(p.name);
    require_valid(config);
    return off_diagonal_entry(config, config.polygon(p), config.polygon(q));
}

CartanMatrix cartan_matrix(const BrauerConfiguration& config) {
    require_valid(config);
    const std::size_t n = config.polygons.size();
    CartanMatrix matrix;
    matrix.entries.assign(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            matrix.entries[i][j] = (i == j)
                ? diagonal_entry(config, config.polygons[i])
                : off_diagonal_entry(config, config.polygons[i], config.polygons[j]);
        }
    }
    return matrix;
}

std::int64_t algebra_dimension(const BrauerConfiguration& config) {
    require_valid(config);
    std::int64_t total = checked_mul(2, static_cast<std::int64_t>(config.polygons.size()));
    for (const VertexId& vertex : config.vertices) {
        std::int64_t valency = config.val(vertex);
        std::int64_t term =
            checked_mul(valency, checked_sub(checked_mul(config.mu(vertex), valency), 1));
        total = checked_add(total, term);
    }
    return total;
}

bool hom_nonzero(const BrauerConfiguration& config, const PolygonId& p, const PolygonId& q) {
    if (!config.has_polygon(p)) throw UnknownPolygonError(p.name);
    if (!config.has_polygon(q)) throw UnknownPolygonError(q.name);
    if (p == q) throw SamePolygonError(p.name);
    const Polygon& first = config.polygon(p);
    const Polygon& second = config.polygon(q);
    for (const auto& [vertex, count] : first.member_counts()) {
        if (second.count_of(vertex) > 0) return true;
    }
    return false;
}

}  // namespace brauer
