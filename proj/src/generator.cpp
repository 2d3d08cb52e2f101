#include "brauer/generator.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace brauer {

namespace {

// splitmix64 (Steele/Lea/Vigna). Used instead of <random> engines because
// the whole sequence is pinned down by these three constants, so a seed
// means the same configuration on every platform and standard library.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform draw from [0, bound). Rejection sampling, no modulo bias.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t v = next();
            if (v >= threshold) return v % bound;
        }
    }

private:
    std::uint64_t state_;
};

// Fisher-Yates, spelled out so the permutation depends only on the
// splitmix64 stream and never on std::shuffle's implementation.
template <typename T>
void shuffle(std::vector<T>& items, SplitMix64& rng) {
    for (std::size_t i = items.size(); i > 1; --i) {
        std::swap(items[i - 1], items[static_cast<std::size_t>(rng.below(i))]);
    }
}

void require_bounds(const GeneratorBounds& bounds) {
    if (bounds.max_vertices < 1 || bounds.max_polygons < 1 || bounds.max_occ < 1 ||
        bounds.max_mu < 1) {
        throw std::invalid_argument("generator bounds must be positive");
    }
}

std::string vertex_name(std::size_t index) { return std::to_string(index + 1); }
std::string polygon_name(std::size_t index) { return "V" + std::to_string(index + 1); }

// Working state of one attempt: counts[p][v] is how often pool vertex v
// occurs in polygon p, mu[v] its multiplicity. Pool vertices that end up
// in no polygon are dropped on assembly, which is what makes C1 hold by
// construction.
struct Draft {
    std::size_t n_pool = 0;
    std::vector<std::vector<std::int64_t>> counts;
    std::vector<std::int64_t> mu;

    std::int64_t val(std::size_t v) const {
        std::int64_t total = 0;
        for (const auto& row : counts) total += row[v];
        return total;
    }

    bool satisfies_c3(std::size_t p) const {
        for (std::size_t v = 0; v < n_pool; ++v) {
            if (counts[p][v] > 0 && val(v) * mu[v] > 1) return true;
        }
        return false;
    }
};

std::optional<BrauerConfiguration> assemble(Draft& draft, SplitMix64& rng) {
    const std::size_t n_poly = draft.counts.size();

    BrauerConfiguration config;
    std::vector<std::size_t> used;
    for (std::size_t v = 0; v < draft.n_pool; ++v) {
        if (draft.val(v) > 0) {
            used.push_back(v);
            config.vertices.push_back({vertex_name(v)});
        }
    }
    for (std::size_t p = 0; p < n_poly; ++p) {
        std::vector<VertexId> members;
        for (std::size_t v = 0; v < draft.n_pool; ++v) {
            for (std::int64_t k = 0; k < draft.counts[p][v]; ++k) {
                members.push_back({vertex_name(v)});
            }
        }
        config.polygons.emplace_back(PolygonId{polygon_name(p)}, members);
    }
    for (std::size_t v : used) {
        if (draft.mu[v] > 1) config.multiplicity[{vertex_name(v)}] = draft.mu[v];
    }
    for (std::size_t v : used) {
        if (draft.val(v) == 1 && draft.mu[v] == 1) continue;  // truncated
        std::vector<PolygonId> sequence;
        for (std::size_t p = 0; p < n_poly; ++p) {
            for (std::int64_t k = 0; k < draft.counts[p][v]; ++k) {
                sequence.push_back({polygon_name(p)});
            }
        }
        shuffle(sequence, rng);
        VertexId id{vertex_name(v)};
        config.orientation[id] = SuccessorSequence{id, std::move(sequence)};
    }

    if (!config.validate().empty()) return std::nullopt;
    return config;
}

std::optional<BrauerConfiguration> attempt_multiset(SplitMix64& rng,
                                                    const GeneratorBounds& bounds) {
    Draft draft;
    draft.n_pool = 1 + static_cast<std::size_t>(
                           rng.below(static_cast<std::uint64_t>(bounds.max_vertices)));
    const std::size_t n_poly =
        1 + static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(bounds.max_polygons)));
    draft.counts.assign(n_poly, std::vector<std::int64_t>(draft.n_pool, 0));
    draft.mu.assign(draft.n_pool, 1);

    for (std::size_t p = 0; p < n_poly; ++p) {
        const std::size_t target = 2 + static_cast<std::size_t>(rng.below(3));
        std::int64_t placed = 0;
        for (std::size_t slot = 0; slot < target; ++slot) {
            const std::size_t start =
                static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(draft.n_pool)));
            bool done = false;
            for (std::size_t k = 0; k < draft.n_pool && !done; ++k) {
                const std::size_t v = (start + k) % draft.n_pool;
                if (draft.counts[p][v] < bounds.max_occ) {
                    ++draft.counts[p][v];
                    ++placed;
                    done = true;
                }
            }
            if (!done) break;  // every pool vertex at its cap
        }
        if (placed < 2) return std::nullopt;  // C2 cannot hold
    }

    for (std::size_t v = 0; v < draft.n_pool; ++v) {
        if (rng.below(2) == 1) {
            draft.mu[v] =
                1 + static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(bounds.max_mu)));
        }
    }

    // C3 fix-ups, deterministic and monotone: occurrence counts and
    // multiplicities only ever grow, so earlier polygons stay fixed.
    for (std::size_t p = 0; p < n_poly; ++p) {
        if (draft.satisfies_c3(p)) continue;
        std::size_t first = draft.n_pool;
        for (std::size_t v = 0; v < draft.n_pool && first == draft.n_pool; ++v) {
            if (draft.counts[p][v] > 0) first = v;
        }
        if (bounds.max_mu >= 2) {
            draft.mu[first] = 2;
        } else if (bounds.max_occ >= 2) {
            ++draft.counts[p][first];
        } else {
            bool fixed = false;
            for (std::size_t v = 0; v < draft.n_pool && !fixed; ++v) {
                if (draft.counts[p][v] == 0) continue;
                for (std::size_t q = 0; q < n_poly && !fixed; ++q) {
                    if (q == p || draft.counts[q][v] >= bounds.max_occ) continue;
                    ++draft.counts[q][v];
                    fixed = true;
                }
            }
            if (!fixed) return std::nullopt;
        }
    }

    return assemble(draft, rng);
}

std::optional<BrauerConfiguration> attempt_set(SplitMix64& rng, const GeneratorBounds& bounds) {
    if (bounds.max_vertices < 2 || bounds.max_polygons < 2) return std::nullopt;

    Draft draft;
    draft.n_pool = 1 + static_cast<std::size_t>(
                           rng.below(static_cast<std::uint64_t>(bounds.max_vertices)));
    if (draft.n_pool < 2) return std::nullopt;
    const std::size_t n_poly =
        2 + static_cast<std::size_t>(
                rng.below(static_cast<std::uint64_t>(bounds.max_polygons - 1)));
    draft.counts.assign(n_poly, std::vector<std::int64_t>(draft.n_pool, 0));
    draft.mu.assign(draft.n_pool, 1);

    std::vector<std::size_t> pool_indices(draft.n_pool);
    for (std::size_t v = 0; v < draft.n_pool; ++v) pool_indices[v] = v;
    for (std::size_t p = 0; p < n_poly; ++p) {
        const std::uint64_t spread = std::min<std::uint64_t>(3, draft.n_pool - 1);
        const std::size_t size = 2 + static_cast<std::size_t>(rng.below(spread));
        shuffle(pool_indices, rng);
        for (std::size_t slot = 0; slot < size; ++slot) draft.counts[p][pool_indices[slot]] = 1;
    }

    // C3 with mu = 1 means every polygon needs a member of valency >= 2;
    // fix by copying the first member into the first polygon lacking it.
    for (std::size_t p = 0; p < n_poly; ++p) {
        if (draft.satisfies_c3(p)) continue;
        std::size_t first = draft.n_pool;
        for (std::size_t v = 0; v < draft.n_pool && first == draft.n_pool; ++v) {
            if (draft.counts[p][v] > 0) first = v;
        }
        for (std::size_t q = 0; q < n_poly; ++q) {
            if (q == p || draft.counts[q][first] > 0) continue;
            draft.counts[q][first] = 1;
            break;
        }
    }

    return assemble(draft, rng);
}

constexpr int kMaxAttempts = 1000;

template <typename Attempt>
BrauerConfiguration run_attempts(const GeneratorBounds& bounds, Attempt attempt) {
    require_bounds(bounds);
    SplitMix64 rng(bounds.seed);
    for (int i = 0; i < kMaxAttempts; ++i) {
        if (auto config = attempt(rng, bounds)) return std::move(*config);
    }
    throw UnsatisfiableError("no valid configuration within bounds after " +
                             std::to_string(kMaxAttempts) + " attempts");
}

}  // namespace

BrauerConfiguration generate_random(const GeneratorBounds& bounds) {
    return run_attempts(bounds, attempt_multiset);
}

BrauerConfiguration generate_random_set(const GeneratorBounds& bounds) {
    return run_attempts(bounds, attempt_set);
}

}  // namespace brauer
