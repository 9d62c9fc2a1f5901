#include "sqfree/footprint.hpp"

#include <algorithm>
#include <atomic>
#include <limits>

#include "sqfree/parallel.hpp"

namespace sqfree {

namespace {

void check_monomials(const std::vector<unsigned>& sizes,
                     const std::vector<SquareFreeExponent>& monomials) {
    const int m = static_cast<int>(sizes.size());
    if (m == 0 || m > 64) throw BadArgs("need 1..64 sizes");
    for (const auto& a : monomials)
        if (a.m != m) throw DimensionMismatch("monomial variable count vs sizes");
    for (std::size_t i = 0; i < monomials.size(); ++i)
        for (std::size_t j = i + 1; j < monomials.size(); ++j)
            if (monomials[i].mask == monomials[j].mask) throw BadArgs("duplicate monomials");
}

bool box_fits_u64(const std::vector<unsigned>& sizes, std::uint64_t& out) {
    std::uint64_t n = 1;
    for (unsigned s : sizes) {
        if (s != 0 && n > (std::uint64_t{1} << 62) / s) return false;
        n *= s;
    }
    out = n;
    return true;
}

// Inclusion-exclusion core. Walks include/exclude decisions over the
// monomial list, keeping the running union product
//   P(U) = prod_{i in U} (n_i - 1) * prod_{i not in U} n_i
// updated by exact division as new support indices join the union.
template <typename Int>
Int ie_sum(const std::vector<unsigned>& sizes, const std::vector<std::uint64_t>& masks) {
    const std::size_t t = masks.size();
    Int box = 1;
    for (unsigned s : sizes) box *= s;

    Int total = 0;
    // Iterative DFS stack: (next index, union, parity of included count, product)
    struct Frame {
        std::size_t idx;
        std::uint64_t unite;
        bool odd;
        Int prod;
    };
    std::vector<Frame> stack;
    stack.push_back({0, 0, false, box});
    while (!stack.empty()) {
        Frame fr = std::move(stack.back());
        stack.pop_back();
        if (fr.idx == t) {
            if (fr.unite != 0 || fr.odd) {  // at least one monomial included
                if (fr.odd)
                    total += fr.prod;
                else
                    total -= fr.prod;
            }
            continue;
        }
        // exclude masks[idx]
        stack.push_back({fr.idx + 1, fr.unite, fr.odd, fr.prod});
        // include masks[idx]
        Frame inc{fr.idx + 1, fr.unite | masks[fr.idx], !fr.odd, std::move(fr.prod)};
        std::uint64_t fresh = masks[fr.idx] & ~fr.unite;
        while (fresh) {
            const int i = std::countr_zero(fresh);
            fresh &= fresh - 1;
            inc.prod /= sizes[i];
            inc.prod *= sizes[i] - 1;
        }
        stack.push_back(std::move(inc));
    }
    return total;
}

}  // namespace

std::uint64_t shadow_size_enum(const std::vector<unsigned>& sizes,
                               const std::vector<SquareFreeExponent>& monomials,
                               std::uint64_t budget) {
    check_monomials(sizes, monomials);
    if (monomials.empty()) throw BadArgs("shadow of the empty set");
    std::uint64_t box = 0;
    if (!box_fits_u64(sizes, box) || box > budget)
        throw BudgetExceeded("box too large to enumerate; use inclusion-exclusion");

    const int m = static_cast<int>(sizes.size());
    std::vector<std::uint64_t> masks;
    masks.reserve(monomials.size());
    for (const auto& a : monomials) masks.push_back(a.mask);

    std::uint64_t count = 0;
    std::vector<unsigned> beta(m, 0);
    std::uint64_t nonzero = 0;  // support mask of beta
    while (true) {
        for (std::uint64_t am : masks) {
            if ((am & ~nonzero) == 0) {
                ++count;
                break;
            }
        }
        int i = m - 1;
        while (i >= 0) {
            const std::uint64_t bit = std::uint64_t{1} << i;
            if (++beta[i] < sizes[i]) {
                nonzero |= bit;
                break;
            }
            beta[i] = 0;
            nonzero &= ~bit;
            --i;
        }
        if (i < 0) break;
    }
    return count;
}

BigInt shadow_size_ie(const std::vector<unsigned>& sizes,
                      const std::vector<SquareFreeExponent>& monomials) {
    check_monomials(sizes, monomials);
    if (monomials.empty()) throw BadArgs("shadow of the empty set");
    if (monomials.size() > 30) throw TooManyMonomials("inclusion-exclusion limit is 30 monomials");
    std::vector<std::uint64_t> masks;
    masks.reserve(monomials.size());
    for (const auto& a : monomials) masks.push_back(a.mask);
    std::uint64_t box = 0;
    if (box_fits_u64(sizes, box))
        return BigInt(static_cast<std::int64_t>(ie_sum<__int128>(sizes, masks)));
    return ie_sum<BigInt>(sizes, masks);
}

ShadowReport shadow_report(const std::vector<unsigned>& sizes,
                           const std::vector<SquareFreeExponent>& monomials,
                           std::uint64_t enum_budget) {
    ShadowReport out;
    out.monomials = monomials;
    out.shadow_size = shadow_size_ie(sizes, monomials);
    try {
        std::uint64_t direct = shadow_size_enum(sizes, monomials, enum_budget);
        if (BigInt(direct) != out.shadow_size)
            throw InternalError("shadow enumeration and inclusion-exclusion disagree");
        out.cross_checked = true;
    } catch (const BudgetExceeded&) {
        out.cross_checked = false;
    }
    return out;
}

namespace {

// One chunk of the footprint minimization: all r-subsets whose smallest pool
// rank is `first`. DFS in ascending rank order, so the first subset completed
// at any given value is the lexicographically smallest one in the chunk.
struct ChunkBest {
    std::uint64_t value = std::numeric_limits<std::uint64_t>::max();
    std::vector<int> ranks;
    std::uint64_t examined = 0;
    bool complete = true;
};

void footprint_chunk_u64(const std::vector<unsigned>& sizes,
                         const std::vector<std::uint64_t>& pool, int first, int r,
                         std::uint64_t node_quota, std::atomic<std::uint64_t>& shared_best,
                         ChunkBest& out) {
    const int pool_size = static_cast<int>(pool.size());
    std::vector<int> chosen;
    chosen.reserve(r);
    std::vector<std::uint64_t> masks;
    masks.reserve(r);

    // recursive lambda over next candidate rank
    auto dfs = [&](auto&& self, int next) -> void {
        if (!out.complete) return;
        if (static_cast<int>(chosen.size()) == r) return;
        const int need = r - static_cast<int>(chosen.size());
        for (int cand = next; cand + need <= pool_size; ++cand) {
            if (out.examined >= node_quota) {
                out.complete = false;
                return;
            }
            chosen.push_back(cand);
            masks.push_back(pool[cand]);
            ++out.examined;
            const std::uint64_t shadow =
                static_cast<std::uint64_t>(ie_sum<__int128>(sizes, masks));
            const std::uint64_t bound = std::min(out.value, shared_best.load());
            if (shadow <= bound) {
                if (static_cast<int>(chosen.size()) == r) {
                    if (shadow < out.value) {
                        out.value = shadow;
                        out.ranks = chosen;
                        // publish for cross-chunk pruning
                        std::uint64_t cur = shared_best.load();
                        while (shadow < cur && !shared_best.compare_exchange_weak(cur, shadow)) {
                        }
                    }
                } else {
                    self(self, cand + 1);
                }
            }
            masks.pop_back();
            chosen.pop_back();
            if (!out.complete) return;
        }
    };

    chosen.push_back(first);
    masks.push_back(pool[first]);
    ++out.examined;
    const std::uint64_t shadow = static_cast<std::uint64_t>(ie_sum<__int128>(sizes, masks));
    if (shadow <= std::min(out.value, shared_best.load())) {
        if (r == 1) {
            out.value = shadow;
            out.ranks = chosen;
            std::uint64_t cur = shared_best.load();
            while (shadow < cur && !shared_best.compare_exchange_weak(cur, shadow)) {
            }
        } else {
            dfs(dfs, first + 1);
        }
    }
}

}  // namespace

FootprintResult footprint_bound(const std::vector<unsigned>& sizes, int d, int r,
                                bool homogeneous, const FootprintOptions& opt) {
    const int m = static_cast<int>(sizes.size());
    if (m < 1 || m > 64) throw BadArgs("need 1..64 sizes");
    if (homogeneous) {
        if (d < 1 || d > m) throw BadDegree("homogeneous degree must be in [1, m]");
    } else if (d < 0 || d > m) {
        throw BadDegree("degree must be in [0, m]");
    }
    auto pool_exps = homogeneous ? squarefree_of_degree(m, d) : squarefree_up_to_degree(m, d);
    const int pool_size = static_cast<int>(pool_exps.size());
    if (r < 1 || r > pool_size) throw BadRange("subset size must be in [1, pool size]");

    std::uint64_t box = 0;
    if (!box_fits_u64(sizes, box))
        throw Unsupported("box size exceeds 2^62; footprint search unsupported at this scale");

    std::vector<std::uint64_t> pool;
    pool.reserve(pool_exps.size());
    for (const auto& a : pool_exps) pool.push_back(a.mask);

    const int chunks = pool_size - r + 1;
    std::vector<ChunkBest> results(chunks);
    std::atomic<std::uint64_t> shared_best{std::numeric_limits<std::uint64_t>::max()};
    const std::uint64_t quota = std::max<std::uint64_t>(1, opt.subset_budget / chunks);

    parallel_for(chunks, opt.jobs, [&](std::size_t c) {
        footprint_chunk_u64(sizes, pool, static_cast<int>(c), r, quota, shared_best, results[c]);
    });

    FootprintResult out;
    out.d = d;
    out.r = r;
    out.homogeneous = homogeneous;
    const ChunkBest* best = nullptr;
    for (const auto& cb : results) {
        out.examined += cb.examined;
        out.complete = out.complete && cb.complete;
        if (cb.ranks.empty()) continue;
        if (!best || cb.value < best->value ||
            (cb.value == best->value && cb.ranks < best->ranks))
            best = &cb;
    }
    if (!best) throw InternalError("footprint search found no candidate");
    out.value = best->value;
    out.witness.reserve(r);
    for (int rank_idx : best->ranks) out.witness.push_back(pool_exps[rank_idx]);
    return out;
}

std::uint64_t vanishing_count(const std::vector<Point>& pts,
                              const std::vector<SquareFreeExponent>& monomials) {
    std::uint64_t count = 0;
    for (const auto& p : pts) {
        std::uint64_t zero_mask = 0;
        for (std::size_t i = 0; i < p.size(); ++i)
            if (p[i] == 0) zero_mask |= std::uint64_t{1} << i;
        bool all_vanish = true;
        for (const auto& a : monomials) {
            if ((a.mask & zero_mask) == 0) {  // some term of the product never hits zero
                all_vanish = false;
                break;
            }
        }
        if (all_vanish) ++count;
    }
    return count;
}

std::uint64_t vanishing_count(const CartesianSet& x,
                              const std::vector<SquareFreeExponent>& monomials) {
    return vanishing_count(points(x), monomials);
}

}  // namespace sqfree
