#include "sqfree/ghw.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>
#include <map>

#include "sqfree/formulas.hpp"
#include "sqfree/parallel.hpp"

namespace sqfree {

const char* method_name(GhwMethod m) {
    switch (m) {
        case GhwMethod::ExactSubspace: return "exact-subspace";
        case GhwMethod::ExactSupport: return "exact-support";
        case GhwMethod::Footprint: return "footprint";
        case GhwMethod::Formula: return "formula";
        case GhwMethod::Duality: return "duality";
    }
    return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

// ---------------------------------------------------------------- subspaces

// Distinct generator columns up to scalar, with multiplicities. A subcode
// basis B hits column g_j iff it hits the normalized representative, so
// support counting only needs one dot product per class.
struct ColumnClasses {
    std::vector<Elem> reps;  // class-major, k entries per class
    std::vector<std::uint32_t> mult;
    std::size_t k = 0;
    std::size_t classes() const { return mult.size(); }
};

ColumnClasses build_classes(const GfMatrix& g) {
    const Field& f = *g.field();
    const std::size_t k = g.rows(), n = g.cols();
    ColumnClasses out;
    out.k = k;
    std::map<std::vector<Elem>, std::size_t> index;
    std::vector<Elem> col(k);
    for (std::size_t j = 0; j < n; ++j) {
        std::size_t lead = k;
        for (std::size_t i = 0; i < k; ++i) {
            col[i] = g(i, j);
            if (lead == k && col[i] != 0) lead = i;
        }
        if (lead == k) continue;  // zero column never contributes support
        const Elem scale = f.inv(col[lead]);
        for (std::size_t i = 0; i < k; ++i) col[i] = f.mul(col[i], scale);
        auto [it, fresh] = index.try_emplace(col, out.mult.size());
        if (fresh) {
            out.reps.insert(out.reps.end(), col.begin(), col.end());
            out.mult.push_back(1);
        } else {
            ++out.mult[it->second];
        }
    }
    return out;
}

// Support of the subcode with coefficient rows B, early-aborting as soon as
// the running count exceeds `abort_above`.
std::size_t class_support(const Field& f, const Elem* b, std::size_t r, const ColumnClasses& cc,
                          std::size_t abort_above) {
    const std::size_t k = cc.k;
    std::size_t support = 0;
    for (std::size_t cls = 0; cls < cc.classes(); ++cls) {
        const Elem* rep = cc.reps.data() + cls * k;
        bool nonzero = false;
        for (std::size_t i = 0; i < r && !nonzero; ++i) {
            const Elem* row = b + i * k;
            Elem acc = 0;
            for (std::size_t j = 0; j < k; ++j) acc = f.add(acc, f.mul(row[j], rep[j]));
            nonzero = acc != 0;
        }
        if (nonzero) {
            support += cc.mult[cls];
            if (support > abort_above) return support;
        }
    }
    return support;
}

// Work unit: one pivot pattern with the first `prefix.size()` free cells
// pinned, so that huge patterns split into evenly sized pieces.
struct SubspaceChunk {
    std::size_t pattern = 0;
    std::vector<unsigned> prefix;
};

std::vector<SubspaceChunk> make_subspace_chunks(
    const std::vector<std::vector<std::size_t>>& patterns, std::size_t k, unsigned q,
    std::uint64_t target) {
    std::vector<SubspaceChunk> chunks;
    for (std::size_t p = 0; p < patterns.size(); ++p) {
        const std::size_t nfree = free_cells(k, patterns[p]).size();
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < nfree && count <= (std::uint64_t{1} << 40); ++i) count *= q;
        std::size_t depth = 0;
        while (depth < nfree && count > target) {
            count /= q;
            ++depth;
        }
        // enumerate prefixes of length `depth` in odometer order
        std::vector<unsigned> prefix(depth, 0);
        while (true) {
            chunks.push_back({p, prefix});
            std::size_t i = 0;
            while (i < depth) {
                if (++prefix[i] < q) break;
                prefix[i] = 0;
                ++i;
            }
            if (i == depth) break;
        }
    }
    return chunks;
}

struct SubspaceChunkResult {
    std::size_t value = std::numeric_limits<std::size_t>::max();
    std::vector<Elem> coeff;  // flattened winner
};

void run_subspace_chunk(const Field& f, std::size_t k, std::size_t r,
                        const std::vector<std::size_t>& pattern,
                        const std::vector<unsigned>& prefix, const ColumnClasses& cc,
                        std::atomic<std::size_t>& shared_best, SubspaceChunkResult& out,
                        const FieldPtr& field_ptr) {
    GfMatrix buf(field_ptr, r, k);
    init_pattern_matrix(buf, pattern);
    const auto cells = free_cells(k, pattern);
    for (std::size_t i = 0; i < prefix.size(); ++i)
        buf(cells[i].first, cells[i].second) = static_cast<Elem>(prefix[i]);

    const std::size_t var_begin = prefix.size();
    const unsigned q = f.q();
    std::vector<unsigned> digits(cells.size() - var_begin, 0);

    auto consider = [&]() {
        const std::size_t bound = std::min(out.value, shared_best.load());
        const std::size_t support = class_support(f, buf.data().data(), r, cc, bound);
        if (support > bound) return;
        if (support < out.value ||
            (support == out.value && (out.coeff.empty() || buf.data() < out.coeff))) {
            out.value = support;
            out.coeff = buf.data();
            std::size_t cur = shared_best.load();
            while (support < cur && !shared_best.compare_exchange_weak(cur, support)) {
            }
        }
    };

    consider();
    if (digits.empty()) return;
    while (true) {
        std::size_t i = 0;
        while (i < digits.size()) {
            if (++digits[i] < q) break;
            digits[i] = 0;
            ++i;
        }
        if (i == digits.size()) return;
        for (std::size_t j = 0; j <= i; ++j)
            buf(cells[var_begin + j].first, cells[var_begin + j].second) =
                static_cast<Elem>(digits[j]);
        consider();
    }
}

// Expresses a codeword of the row space of G (full rank) as a coefficient
// vector with respect to G's rows.
std::vector<Elem> solve_row_combination(const GfMatrix& g, std::span<const Elem> w) {
    const std::size_t k = g.rows(), n = g.cols();
    GfMatrix aug(g.field(), n, k + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < k; ++j) aug(i, j) = g(j, i);
        aug(i, k) = w[i];
    }
    auto rr = rref(std::move(aug));
    if (rr.pivots.size() != k || (k > 0 && rr.pivots.back() >= k))
        throw InternalError("witness codeword not in the row space");
    std::vector<Elem> x(k);
    for (std::size_t i = 0; i < k; ++i) x[i] = rr.mat(i, k);
    return x;
}

// ------------------------------------------------------------ support side

// Incremental column echelon with undo, tracking only the rank.
class ColumnEchelon {
  public:
    ColumnEchelon(const Field& f, std::size_t len) : f_(&f), len_(len), scratch_(len) {}

    bool push(const Elem* col) {
        const Field& f = *f_;
        std::copy(col, col + len_, scratch_.begin());
        for (std::size_t p = 0; p < pivot_pos_.size(); ++p) {
            const Elem c = scratch_[pivot_pos_[p]];
            if (c == 0) continue;
            const Elem* row = pivot_vec_.data() + p * len_;
            const Elem neg = f.neg(c);
            for (std::size_t i = 0; i < len_; ++i)
                scratch_[i] = f.add(scratch_[i], f.mul(neg, row[i]));
        }
        std::size_t lead = len_;
        for (std::size_t i = 0; i < len_; ++i)
            if (scratch_[i] != 0) {
                lead = i;
                break;
            }
        if (lead == len_) {
            grew_.push_back(false);
            return false;
        }
        const Elem scale = f.inv(scratch_[lead]);
        for (std::size_t i = 0; i < len_; ++i) scratch_[i] = f.mul(scratch_[i], scale);
        pivot_pos_.push_back(lead);
        pivot_vec_.insert(pivot_vec_.end(), scratch_.begin(), scratch_.end());
        grew_.push_back(true);
        return true;
    }

    void pop() {
        if (grew_.back()) {
            pivot_pos_.pop_back();
            pivot_vec_.resize(pivot_vec_.size() - len_);
        }
        grew_.pop_back();
    }

    std::size_t rank() const { return pivot_pos_.size(); }

  private:
    const Field* f_;
    std::size_t len_;
    std::vector<Elem> scratch_;
    std::vector<std::size_t> pivot_pos_;
    std::vector<Elem> pivot_vec_;
    std::vector<bool> grew_;
};

struct BudgetHit {};  // internal signal; converted to BudgetExceeded by the driver

struct SupportSearchShared {
    std::atomic<std::uint64_t> nodes{0};
    std::uint64_t budget = 0;
    Clock::time_point deadline{};
    bool has_deadline = false;
    std::atomic<std::size_t> found_chunk{std::numeric_limits<std::size_t>::max()};
};

void count_node(SupportSearchShared& sh) {
    const std::uint64_t seen = sh.nodes.fetch_add(1) + 1;
    if (seen > sh.budget) throw BudgetHit{};
    if (sh.has_deadline && (seen & 0x1fff) == 0 && Clock::now() > sh.deadline) throw BudgetHit{};
}

// DFS over column subsets starting with `first`, limited to size `smax`,
// looking for rank slack >= r. Columns are explored in ascending order, so
// the first witness found is the lexicographically smallest in the chunk.
bool support_chunk_dfs(const Field& f, const std::vector<std::vector<Elem>>& cols, int r,
                       int smax, std::size_t first, SupportSearchShared& sh,
                       std::vector<std::size_t>& chosen, ColumnEchelon& ech) {
    const std::size_t n = cols.size();
    count_node(sh);
    ech.push(cols[first].data());
    chosen.push_back(first);
    const int t = static_cast<int>(chosen.size());
    const int slack = t - static_cast<int>(ech.rank());
    if (slack >= r) return true;
    if (t < smax) {
        for (std::size_t c = first + 1; c < n; ++c) {
            const int room = std::min<int>(smax - t, static_cast<int>(n - c));
            if (slack + room < r) break;  // even taking everything can't reach
            if (support_chunk_dfs(f, cols, r, smax, c, sh, chosen, ech)) return true;
        }
    }
    chosen.pop_back();
    ech.pop();
    return false;
}

struct SupportSweepResult {
    bool found = false;
    std::vector<std::size_t> witness;
};

// One deepening sweep at subset size limit smax; returns the lex-smallest
// witness across chunks, if any chunk found one.
SupportSweepResult support_sweep(const FieldPtr& field, const std::vector<std::vector<Elem>>& cols,
                                 int r, int smax, SupportSearchShared& sh, unsigned jobs) {
    const std::size_t n = cols.size();
    std::vector<SupportSweepResult> results(n);
    sh.found_chunk.store(std::numeric_limits<std::size_t>::max());
    parallel_for(n, jobs, [&](std::size_t c) {
        if (c > sh.found_chunk.load()) return;  // lex-larger than a known witness
        ColumnEchelon ech(*field, cols[c].size());
        std::vector<std::size_t> chosen;
        if (support_chunk_dfs(*field, cols, r, smax, c, sh, chosen, ech)) {
            results[c].found = true;
            results[c].witness = std::move(chosen);
            std::size_t cur = sh.found_chunk.load();
            while (c < cur && !sh.found_chunk.compare_exchange_weak(cur, c)) {
            }
        }
    });
    for (auto& res : results)
        if (res.found) return res;
    return {};
}

std::vector<std::vector<Elem>> matrix_columns(const GfMatrix& m) {
    std::vector<std::vector<Elem>> cols(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) {
        cols[j].resize(m.rows());
        for (std::size_t i = 0; i < m.rows(); ++i) cols[j][i] = m(i, j);
    }
    return cols;
}

SubcodeWitness make_support_witness(const GfMatrix& g, const GfMatrix& h,
                                    const std::vector<std::size_t>& support, int r) {
    const FieldPtr& field = g.field();
    GfMatrix hs(field, h.rows(), support.size());
    for (std::size_t j = 0; j < support.size(); ++j)
        for (std::size_t i = 0; i < h.rows(); ++i) hs(i, j) = h(i, support[j]);
    GfMatrix inside = nullspace_basis(hs);
    if (inside.rows() < static_cast<std::size_t>(r))
        throw InternalError("support witness has too little slack");
    GfMatrix embedded(field, inside.rows(), g.cols());
    for (std::size_t i = 0; i < inside.rows(); ++i)
        for (std::size_t j = 0; j < support.size(); ++j) embedded(i, support[j]) = inside(i, j);
    embedded = row_basis(embedded);

    SubcodeWitness out;
    out.support = support;
    out.coefficients = GfMatrix(field, r, g.rows());
    for (int i = 0; i < r; ++i) {
        auto x = solve_row_combination(g, embedded.row(i));
        for (std::size_t j = 0; j < x.size(); ++j) out.coefficients(i, j) = x[j];
    }
    return out;
}

// ------------------------------------------------- full power-set hierarchy

struct PowersetBest {
    std::size_t size = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> subset;

    bool improved_by(std::size_t cand_size, const std::vector<std::size_t>& cand) const {
        return cand_size < size || (cand_size == size && cand < subset);
    }
};

void powerset_dfs(const Field& f, const std::vector<std::vector<Elem>>& cols, int kmax,
                  std::vector<std::size_t>& chosen, ColumnEchelon& ech,
                  std::vector<PowersetBest>& best, std::size_t next) {
    const int t = static_cast<int>(chosen.size());
    const int slack = t - static_cast<int>(ech.rank());
    for (int rr = 1; rr <= std::min(slack, kmax); ++rr)
        if (best[rr].improved_by(t, chosen)) {
            best[rr].size = t;
            best[rr].subset = chosen;
        }
    for (std::size_t c = next; c < cols.size(); ++c) {
        ech.push(cols[c].data());
        chosen.push_back(c);
        powerset_dfs(f, cols, kmax, chosen, ech, best, c + 1);
        chosen.pop_back();
        ech.pop();
    }
}

// All d_r at once: walk every column subset, tracking per-r the smallest
// (then lex-smallest) subset with rank slack >= r.
std::vector<PowersetBest> support_hierarchy_powerset(const FieldPtr& field,
                                                     const std::vector<std::vector<Elem>>& cols,
                                                     int kmax, unsigned jobs) {
    const std::size_t n = cols.size();
    // chunk prefixes: all subsets of size <= 3; only full-length prefixes
    // spawn extensions, so the pieces partition the power set
    const std::size_t prefix_len = std::min<std::size_t>(3, n);
    std::vector<std::vector<std::size_t>> prefixes;
    for (std::size_t len = 1; len <= prefix_len; ++len) {
        std::vector<std::size_t> idx(len);
        for (std::size_t i = 0; i < len; ++i) idx[i] = i;
        while (true) {
            prefixes.push_back(idx);
            std::size_t i = len;
            while (i > 0 && idx[i - 1] == n - len + (i - 1)) --i;
            if (i == 0) break;
            ++idx[i - 1];
            for (std::size_t j = i; j < len; ++j) idx[j] = idx[j - 1] + 1;
        }
    }

    std::vector<std::vector<PowersetBest>> results(prefixes.size());
    parallel_for(prefixes.size(), jobs, [&](std::size_t pi) {
        const auto& prefix = prefixes[pi];
        auto& best = results[pi];
        best.assign(kmax + 1, {});
        ColumnEchelon ech(*field, cols.empty() ? 0 : cols[0].size());
        std::vector<std::size_t> chosen;
        for (std::size_t c : prefix) {
            ech.push(cols[c].data());
            chosen.push_back(c);
        }
        if (prefix.size() < prefix_len) {
            // evaluate just this subset; extensions belong to longer prefixes
            const int t = static_cast<int>(chosen.size());
            const int slack = t - static_cast<int>(ech.rank());
            for (int rr = 1; rr <= std::min(slack, kmax); ++rr)
                if (best[rr].improved_by(t, chosen)) {
                    best[rr].size = t;
                    best[rr].subset = chosen;
                }
        } else {
            powerset_dfs(*field, cols, kmax, chosen, ech, best, prefix.back() + 1);
        }
    });

    std::vector<PowersetBest> best(kmax + 1);
    for (const auto& part : results)
        for (int rr = 1; rr <= kmax; ++rr)
            if (part[rr].size != std::numeric_limits<std::size_t>::max() &&
                best[rr].improved_by(part[rr].size, part[rr].subset))
                best[rr] = part[rr];
    return best;
}

void assert_strictly_increasing(const WeightHierarchyReport& report) {
    const auto vals = report.values();
    if (!verify_monotonicity(vals, static_cast<std::size_t>(report.length)))
        throw InternalError("computed hierarchy is not strictly increasing within [1, n]");
}

}  // namespace

GhwValue ghw_by_subspace_search(const GfMatrix& generator, int r, const GhwOptions& opt) {
    GfMatrix g = row_basis(generator);
    const std::size_t k = g.rows(), n = g.cols();
    if (r < 1 || static_cast<std::size_t>(r) > k)
        throw BadRange("subcode dimension must be in [1, k]");
    const Field& f = *g.field();
    const BigInt count = gaussian_binomial(static_cast<int>(k), r, f.q());
    if (count > opt.subspace_cap)
        throw CapExceeded("subspace count exceeds cap; use the support-search oracle", count);

    const ColumnClasses cc = build_classes(g);
    const auto patterns = pivot_patterns(k, r);
    const auto chunks = make_subspace_chunks(patterns, k, f.q(), 1 << 16);

    std::vector<SubspaceChunkResult> results(chunks.size());
    std::atomic<std::size_t> shared_best{std::numeric_limits<std::size_t>::max()};
    parallel_for(chunks.size(), opt.jobs, [&](std::size_t c) {
        run_subspace_chunk(f, k, r, patterns[chunks[c].pattern], chunks[c].prefix, cc, shared_best,
                           results[c], g.field());
    });

    const SubspaceChunkResult* best = nullptr;
    for (const auto& res : results) {
        if (res.coeff.empty()) continue;
        if (!best || res.value < best->value ||
            (res.value == best->value && res.coeff < best->coeff))
            best = &res;
    }
    if (!best) throw InternalError("subspace search found no candidate");

    GhwValue out;
    out.method = GhwMethod::ExactSubspace;
    out.value = best->value;
    SubcodeWitness w;
    w.coefficients = GfMatrix(g.field(), r, k);
    for (std::size_t i = 0; i < static_cast<std::size_t>(r); ++i)
        for (std::size_t j = 0; j < k; ++j) w.coefficients(i, j) = best->coeff[i * k + j];
    GfMatrix sub = w.coefficients * g;
    w.support = row_space_support(sub);
    if (w.support.size() != out.value) throw InternalError("support recount mismatch");
    (void)n;
    out.witness = std::move(w);
    return out;
}

GhwValue ghw_by_support_search(const GfMatrix& generator, int r, const GhwOptions& opt) {
    GfMatrix g = row_basis(generator);
    const std::size_t k = g.rows();
    const std::size_t n = g.cols();
    if (r < 1 || static_cast<std::size_t>(r) > k)
        throw BadRange("subcode dimension must be in [1, k]");
    GfMatrix h = nullspace_basis(g);
    const auto cols = matrix_columns(h);

    SupportSearchShared sh;
    sh.budget = opt.support_node_budget;
    if (opt.time_limit_sec > 0) {
        sh.has_deadline = true;
        sh.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                         std::chrono::duration<double>(opt.time_limit_sec));
    }

    for (int smax = r; smax <= static_cast<int>(n); ++smax) {
        SupportSweepResult sweep;
        try {
            sweep = support_sweep(g.field(), cols, r, smax, sh, opt.jobs);
        } catch (const BudgetHit&) {
            throw BudgetExceeded("support search budget exhausted", smax);
        }
        if (sweep.found) {
            GhwValue out;
            out.method = GhwMethod::ExactSupport;
            out.value = sweep.witness.size();
            out.witness = make_support_witness(g, h, sweep.witness, r);
            return out;
        }
    }
    throw InternalError("support search exhausted all sizes without a witness");
}

GhwValue ghw_exact_auto(const GfMatrix& generator, int r, const GhwOptions& opt) {
    try {
        return ghw_by_subspace_search(generator, r, opt);
    } catch (const CapExceeded&) {
        return ghw_by_support_search(generator, r, opt);
    }
}

WeightHierarchyReport weight_hierarchy(const GfMatrix& generator, GhwMethod method,
                                       const GhwOptions& opt) {
    GfMatrix g = row_basis(generator);
    const std::size_t k = g.rows(), n = g.cols();
    if (k == 0) throw BadArgs("hierarchy of the zero code");

    WeightHierarchyReport report;
    report.length = n;
    report.dimension = k;

    switch (method) {
        case GhwMethod::ExactSubspace: {
            for (int r = 1; r <= static_cast<int>(k); ++r) {
                auto v = ghw_by_subspace_search(g, r, opt);
                report.records.push_back(
                    {r, BigInt(v.value), v.method, true, std::move(v.witness), std::nullopt});
            }
            break;
        }
        case GhwMethod::ExactSupport: {
            const bool powerset_ok =
                n < 63 && (std::uint64_t{1} << n) <= opt.powerset_budget;
            if (powerset_ok) {
                GfMatrix h = nullspace_basis(g);
                const auto best = support_hierarchy_powerset(
                    g.field(), matrix_columns(h), static_cast<int>(k), opt.jobs);
                for (int r = 1; r <= static_cast<int>(k); ++r) {
                    if (best[r].size == std::numeric_limits<std::size_t>::max())
                        throw InternalError("power-set sweep missed a weight");
                    SubcodeWitness w = make_support_witness(g, h, best[r].subset, r);
                    report.records.push_back({r, BigInt(best[r].size), GhwMethod::ExactSupport,
                                              true, std::move(w), std::nullopt});
                }
            } else {
                for (int r = 1; r <= static_cast<int>(k); ++r) {
                    auto v = ghw_by_support_search(g, r, opt);
                    report.records.push_back(
                        {r, BigInt(v.value), v.method, true, std::move(v.witness), std::nullopt});
                }
            }
            break;
        }
        case GhwMethod::Duality: {
            GfMatrix dual = nullspace_basis(g);
            std::vector<bool> excluded(n + 1, false);
            for (int r = 1; r <= static_cast<int>(dual.rows()); ++r)
                excluded[n + 1 - ghw_exact_auto(dual, r, opt).value] = true;
            int r = 1;
            for (std::size_t v = 1; v <= n; ++v) {
                if (excluded[v]) continue;
                report.records.push_back(
                    {r++, BigInt(v), GhwMethod::Duality, true, std::nullopt, std::nullopt});
            }
            if (report.records.size() != k)
                throw InternalError("duality complement has the wrong cardinality");
            break;
        }
        default:
            throw BadArgs("matrix hierarchies support exact-subspace, exact-support, duality");
    }
    assert_strictly_increasing(report);
    return report;
}

WeightHierarchyReport weight_hierarchy_footprint(const CartesianSet& x, int d, bool homogeneous,
                                                 const FootprintOptions& opt) {
    bool zeros_everywhere = true;
    for (int i = 0; i < x.m(); ++i) zeros_everywhere = zeros_everywhere && x.has_zero(i);
    const bool exact = !homogeneous || zeros_everywhere;

    const auto sizes = x.sizes();
    auto pool = homogeneous ? squarefree_of_degree(x.m(), d) : squarefree_up_to_degree(x.m(), d);

    WeightHierarchyReport report;
    report.length = static_cast<std::size_t>(x.point_count());
    report.dimension = pool.size();
    for (int r = 1; r <= static_cast<int>(pool.size()); ++r) {
        auto fp = footprint_bound(sizes, d, r, homogeneous, opt);
        if (!fp.complete) throw BudgetExceeded("footprint search budget exhausted");
        report.records.push_back({r, fp.value, GhwMethod::Footprint, exact, std::nullopt,
                                  std::move(fp.witness)});
    }
    if (exact) assert_strictly_increasing(report);
    return report;
}

WeightHierarchyReport weight_hierarchy_formula(const std::vector<unsigned>& sizes, int d,
                                               bool homogeneous, bool has_zero) {
    const int m = static_cast<int>(sizes.size());
    WeightHierarchyReport report;
    std::uint64_t n = 1;
    for (unsigned s : sizes) n *= s;
    report.length = n;
    report.dimension = 0;
    for (int r = 1; r <= m + 1 - d; ++r) {
        auto v = homogeneous ? ghw_formula_homogeneous(sizes, d, r)
                             : ghw_formula_up_to_degree(sizes, d, r);
        const bool exact = v.exact && (!homogeneous || has_zero);
        report.records.push_back(
            {r, std::move(v.value), GhwMethod::Formula, exact, std::nullopt, std::nullopt});
    }
    return report;
}

bool verify_monotonicity(const std::vector<BigInt>& values, std::size_t n) {
    if (values.empty()) return false;
    if (values.front() < 1 || values.back() > n) return false;
    for (std::size_t i = 0; i + 1 < values.size(); ++i)
        if (values[i] >= values[i + 1]) return false;
    return true;
}

bool verify_wei_duality(const GfMatrix& generator, const GhwOptions& opt) {
    GfMatrix g = row_basis(generator);
    const std::size_t n = g.cols(), k = g.rows();
    std::vector<bool> in_c(n + 1, false);
    for (int r = 1; r <= static_cast<int>(k); ++r)
        in_c[ghw_exact_auto(g, r, opt).value] = true;

    std::vector<bool> excluded(n + 1, false);
    GfMatrix dual = nullspace_basis(g);
    for (int r = 1; r <= static_cast<int>(dual.rows()); ++r)
        excluded[n + 1 - ghw_exact_auto(dual, r, opt).value] = true;

    for (std::size_t v = 1; v <= n; ++v)
        if (in_c[v] == excluded[v]) return false;  // must partition {1..n}
    return true;
}

}  // namespace sqfree
