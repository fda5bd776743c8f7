#include "stabbing.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "error.hpp"

namespace garsia {

namespace {

// Endpoint storage budget for one enumeration (doubles across all axes).
constexpr size_t kMaxEndpointDoubles = size_t{1} << 23;

class SweepEngine {
public:
    SweepEngine(const BoxArray& boxes, const std::vector<double>& min_width)
        : boxes_(boxes), min_width_(min_width) {
        // One position map per recursion level: the levels track disjoint
        // active sets over the same box ids.
        pos_.assign(static_cast<size_t>(boxes.dim), {});
        for (auto& level : pos_) level.assign(boxes.count, -1);
        cur_cell_.assign(static_cast<size_t>(boxes.dim), {0.0, 0.0});
    }

    StabbingResult run() {
        std::vector<uint32_t> all(boxes_.count);
        for (size_t i = 0; i < boxes_.count; ++i) all[i] = static_cast<uint32_t>(i);
        recurse(all, 0, false);
        return best_;
    }

private:
    void sort_orders(const std::vector<uint32_t>& idx, int axis, std::vector<uint32_t>& by_lo,
                     std::vector<uint32_t>& by_hi, std::vector<double>& vals) {
        const auto& LO = boxes_.lo[static_cast<size_t>(axis)];
        const auto& HI = boxes_.hi[static_cast<size_t>(axis)];
        by_lo = idx;
        by_hi = idx;
        std::sort(by_lo.begin(), by_lo.end(), [&](uint32_t a, uint32_t b) {
            return LO[a] != LO[b] ? LO[a] < LO[b] : a < b;
        });
        std::sort(by_hi.begin(), by_hi.end(), [&](uint32_t a, uint32_t b) {
            return HI[a] != HI[b] ? HI[a] < HI[b] : a < b;
        });
        vals.clear();
        vals.reserve(idx.size() * 2);
        for (uint32_t i : idx) {
            vals.push_back(LO[i]);
            vals.push_back(HI[i]);
        }
        std::sort(vals.begin(), vals.end());
        vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    }

    void update_best(long long depth, int axis, double w, double cell_lo, double cell_hi) {
        best_.depth = depth;
        cur_cell_[static_cast<size_t>(axis)] = {cell_lo, cell_hi};
        best_.cell = cur_cell_;
        best_.witness = cur_witness_;
        best_.witness.resize(static_cast<size_t>(boxes_.dim));
        best_.witness[static_cast<size_t>(axis)] = w;
        best_.margin = cell_hi - cell_lo;
        for (int a = 0; a < axis; ++a)
            best_.margin = std::min(best_.margin, cur_cell_[static_cast<size_t>(a)].second -
                                                      cur_cell_[static_cast<size_t>(a)].first);
    }

    // Last axis: counts on positive-width slabs always, and at shared
    // endpoint values (within tolerance) once an earlier axis provided the
    // positive width.
    void scan_last_axis(const std::vector<uint32_t>& idx, int axis, bool has_positive) {
        const auto& LO = boxes_.lo[static_cast<size_t>(axis)];
        const auto& HI = boxes_.hi[static_cast<size_t>(axis)];
        std::vector<uint32_t> by_lo, by_hi;
        std::vector<double> vals;
        sort_orders(idx, axis, by_lo, by_hi, vals);
        const double min_w = min_width_[static_cast<size_t>(axis)];

        long long added = 0, removed = 0;   // slab bookkeeping
        long long padded = 0, premoved = 0; // point bookkeeping with tolerance
        size_t ia = 0, ir = 0, pa = 0, pr = 0;
        for (size_t j = 0; j < vals.size(); ++j) {
            const double v = vals[j];
            if (has_positive) {
                while (pa < by_lo.size() && LO[by_lo[pa]] <= v + min_w) {
                    ++pa;
                    ++padded;
                }
                while (pr < by_hi.size() && HI[by_hi[pr]] < v - min_w) {
                    ++pr;
                    ++premoved;
                }
                if (padded - premoved > best_.depth)
                    update_best(padded - premoved, axis, v, v, v);
            }
            while (ia < by_lo.size() && LO[by_lo[ia]] <= v) {
                ++ia;
                ++added;
            }
            while (ir < by_hi.size() && HI[by_hi[ir]] <= v) {
                ++ir;
                ++removed;
            }
            if (j + 1 < vals.size() && vals[j + 1] - v > min_w && added - removed > best_.depth)
                update_best(added - removed, axis, 0.5 * (v + vals[j + 1]), v, vals[j + 1]);
        }
    }

    void recurse(const std::vector<uint32_t>& idx, int axis, bool has_positive) {
        if (idx.empty()) return;
        if (axis == boxes_.dim - 1) {
            scan_last_axis(idx, axis, has_positive);
            return;
        }
        const auto& LO = boxes_.lo[static_cast<size_t>(axis)];
        const auto& HI = boxes_.hi[static_cast<size_t>(axis)];
        std::vector<uint32_t> by_lo, by_hi;
        std::vector<double> vals;
        sort_orders(idx, axis, by_lo, by_hi, vals);

        std::vector<int32_t>& pos = pos_[static_cast<size_t>(axis)];
        std::vector<uint32_t> active;
        active.reserve(idx.size());
        auto add = [&](uint32_t b) {
            pos[b] = static_cast<int32_t>(active.size());
            active.push_back(b);
        };
        auto remove = [&](uint32_t b) {
            int32_t p = pos[b];
            uint32_t last = active.back();
            active[static_cast<size_t>(p)] = last;
            pos[last] = p;
            active.pop_back();
            pos[b] = -1;
        };

        const double min_w = min_width_[static_cast<size_t>(axis)];
        long long padded = 0, premoved = 0;
        size_t ia = 0, ir = 0, pa = 0, pr = 0;
        for (size_t j = 0; j < vals.size(); ++j) {
            const double vj = vals[j];
            while (pa < by_lo.size() && LO[by_lo[pa]] <= vj + min_w) {
                ++pa;
                ++padded;
            }
            while (pr < by_hi.size() && HI[by_hi[pr]] < vj - min_w) {
                ++pr;
                ++premoved;
            }
            const long long p = padded - premoved;
            const long long g_left = static_cast<long long>(active.size());
            while (ia < by_lo.size() && LO[by_lo[ia]] <= vj) add(by_lo[ia++]);
            while (ir < by_hi.size() && HI[by_hi[ir]] <= vj) remove(by_hi[ir++]);
            const long long g_right = static_cast<long long>(active.size());
            // Pinched slab at vj. When its box set has the size of an
            // adjacent slab that was itself recursed, it equals that slab's
            // set and is already covered; otherwise endpoints genuinely meet
            // at vj (or the neighboring cell fell below min_w) and the
            // pinched set must be explored.
            const bool left_covered = j > 0 && vj - vals[j - 1] > min_w;
            const bool right_covered = j + 1 < vals.size() && vals[j + 1] - vj > min_w;
            if (p > best_.depth && (p > g_left || !left_covered) &&
                (p > g_right || !right_covered)) {
                std::vector<uint32_t> at_point;
                at_point.reserve(static_cast<size_t>(p));
                for (size_t k = 0; k < pa; ++k)
                    if (HI[by_lo[k]] >= vj - min_w) at_point.push_back(by_lo[k]);
                cur_cell_[static_cast<size_t>(axis)] = {vj, vj};
                cur_witness_.resize(static_cast<size_t>(boxes_.dim));
                cur_witness_[static_cast<size_t>(axis)] = vj;
                recurse(at_point, axis + 1, has_positive);
            }
            // A slab can only improve on the best if enough boxes span it.
            if (j + 1 < vals.size() && vals[j + 1] - vj > min_w &&
                static_cast<long long>(active.size()) > best_.depth) {
                cur_cell_[static_cast<size_t>(axis)] = {vj, vals[j + 1]};
                cur_witness_.resize(static_cast<size_t>(boxes_.dim));
                cur_witness_[static_cast<size_t>(axis)] = 0.5 * (vj + vals[j + 1]);
                recurse(active, axis + 1, true);
            }
        }
        for (uint32_t b : active) pos[b] = -1;
    }

    const BoxArray& boxes_;
    std::vector<double> min_width_;
    StabbingResult best_;
    std::vector<std::vector<int32_t>> pos_;
    std::vector<double> cur_witness_;
    std::vector<std::pair<double, double>> cur_cell_;
};

// Interval partial sums of the word digits for all 2^n words, one pair of
// arrays per axis. Word w maps to digits a_i = bit (n-i) of w.
struct PartialSums {
    int n = 0;
    std::vector<std::vector<double>> plo, phi; // [axis][word]
};

PartialSums partial_sums(const Layout& layout, int n) {
    const int dim = layout.coords.dimension();
    const size_t count = size_t{1} << n;
    if (count * static_cast<size_t>(dim) > kMaxEndpointDoubles)
        fail(Status::BudgetExceeded, "2^n word boxes exceed the memory budget");
    PartialSums ps;
    ps.n = n;
    ps.plo.assign(static_cast<size_t>(dim), {});
    ps.phi.assign(static_cast<size_t>(dim), {});
    for (int a = 0; a < dim; ++a) {
        const AxisEnvelope& env = layout.envelope.axes[static_cast<size_t>(a)];
        auto& plo = ps.plo[static_cast<size_t>(a)];
        auto& phi = ps.phi[static_cast<size_t>(a)];
        plo.resize(count);
        phi.resize(count);
        plo[0] = phi[0] = 0.0;
        for (size_t w = 1; w < count; ++w) {
            const int bit = std::countr_zero(w);
            const int i = n - bit;
            const size_t parent = w & (w - 1);
            Interval sum = Interval{plo[parent], phi[parent]} + env.weight[static_cast<size_t>(i)];
            plo[w] = sum.lo;
            phi[w] = sum.hi;
        }
    }
    return ps;
}

struct EnumeratedBoxes {
    BoxArray outer;
    BoxArray inner;                  // filled only when with_inner
    std::vector<uint8_t> inner_valid;
};

EnumeratedBoxes enumerate_word_boxes(const Layout& layout, int n, bool with_inner) {
    const int dim = layout.coords.dimension();
    const size_t count = size_t{1} << n;
    PartialSums ps = partial_sums(layout, n);

    EnumeratedBoxes out;
    out.outer.dim = dim;
    out.outer.count = count;
    out.outer.lo.assign(static_cast<size_t>(dim), std::vector<double>(count));
    out.outer.hi.assign(static_cast<size_t>(dim), std::vector<double>(count));
    if (with_inner) {
        out.inner = out.outer;
        out.inner_valid.assign(count, 1);
    }
    for (int a = 0; a < dim; ++a) {
        const AxisEnvelope& env = layout.envelope.axes[static_cast<size_t>(a)];
        const Interval tl = env.tail_lo[static_cast<size_t>(n)];
        const Interval th = env.tail_hi[static_cast<size_t>(n)];
        for (size_t w = 0; w < count; ++w) {
            Interval partial{ps.plo[static_cast<size_t>(a)][w], ps.phi[static_cast<size_t>(a)][w]};
            Interval lo = partial + tl;
            Interval hi = partial + th;
            out.outer.lo[static_cast<size_t>(a)][w] = lo.lo;
            out.outer.hi[static_cast<size_t>(a)][w] = hi.hi;
            if (with_inner) {
                out.inner.lo[static_cast<size_t>(a)][w] = lo.hi;
                out.inner.hi[static_cast<size_t>(a)][w] = hi.lo;
                if (lo.hi > hi.lo) out.inner_valid[w] = 0;
            }
        }
    }
    return out;
}

double ln_from_mn(int n, long long mn) {
    // Exact zero when mn = 2^n.
    return (static_cast<double>(n) - std::log2(static_cast<double>(mn))) * std::log(2.0);
}

// Cells narrower than this are endpoint-uncertainty artifacts: exact-touching
// boxes land a few ulps apart in double arithmetic. Genuine cells must be
// wider; each caller checks that against the envelope width at its depth.
constexpr double kSlabMinUnits = 256.0;

std::vector<double> slab_min_widths(const Layout& layout, int n) {
    std::vector<double> out;
    for (const AxisEnvelope& env : layout.envelope.axes) {
        double min_w = kSlabMinUnits * env.widen_unit;
        double inner_width = env.tail_hi[static_cast<size_t>(n)].lo -
                             env.tail_lo[static_cast<size_t>(n)].hi;
        if (!(min_w < 0.25 * inner_width))
            fail(Status::DomainError,
                 "word boxes at this depth are too thin for double-precision endpoints");
        out.push_back(min_w);
    }
    return out;
}

} // namespace

StabbingResult max_stabbing_depth(const BoxArray& boxes) {
    return max_stabbing_depth(boxes, std::vector<double>(static_cast<size_t>(boxes.dim), 0.0));
}

StabbingResult max_stabbing_depth(const BoxArray& boxes,
                                  const std::vector<double>& min_cell_width) {
    if (boxes.count == 0) fail(Status::BadArgument, "empty box set");
    if (boxes.dim <= 0 || boxes.lo.size() != static_cast<size_t>(boxes.dim) ||
        boxes.hi.size() != static_cast<size_t>(boxes.dim) ||
        min_cell_width.size() != static_cast<size_t>(boxes.dim))
        fail(Status::BadArgument, "inconsistent box dimension");
    for (int a = 0; a < boxes.dim; ++a)
        if (boxes.lo[static_cast<size_t>(a)].size() != boxes.count ||
            boxes.hi[static_cast<size_t>(a)].size() != boxes.count)
            fail(Status::BadArgument, "inconsistent box dimension");
    SweepEngine engine(boxes, min_cell_width);
    return engine.run();
}

DepthResult compute_mn(const ConjugateSystem& sys, int n, int tail_N) {
    if (n < 1) fail(Status::BadArgument, "n must be >= 1");
    Layout layout = build_layout(sys, tail_N, n);
    EnumeratedBoxes boxes = enumerate_word_boxes(layout, n, false);
    StabbingResult sr = max_stabbing_depth(boxes.outer, slab_min_widths(layout, n));

    DepthResult res;
    res.n = n;
    res.mn = sr.depth;
    res.ln = ln_from_mn(n, sr.depth);
    res.ratio = res.ln / (static_cast<double>(n) * std::log(sys.beta1));
    res.margin = sr.margin;
    res.witness = sr.witness;
    for (auto [lo, hi] : sr.cell) {
        res.witness_cell.lo.push_back(lo);
        res.witness_cell.hi.push_back(hi);
    }
    return res;
}

BestBound best_bound(const ConjugateSystem& sys, int n_max, int tail_N) {
    if (n_max < 1) fail(Status::BadArgument, "n_max must be >= 1");
    BestBound out;
    for (int n = 1; n <= n_max; ++n) {
        DepthResult r = compute_mn(sys, n, tail_N);
        if (out.best.n == 0 || r.ratio > out.best.ratio) out.best = r;
        if (r.ratio > 1.0) {
            out.first_certifying_n = n;
            break;
        }
    }
    return out;
}

CertifiedDepth certify_region(const ConjugateSystem& sys, const std::vector<double>& halfwidths,
                              int n, int tail_N) {
    if (n < 1) fail(Status::BadArgument, "n must be >= 1");
    Layout layout = build_layout(sys, tail_N, n, &halfwidths);
    // The rectangle must stay inside the parameter space: beta1 in (1,2) and
    // every conjugate modulus in (1,2).
    const AxisInfo& b1 = layout.coords.axes[0];
    if (!(b1.real_value.lo > 1.0 && b1.real_value.hi < 2.0))
        fail(Status::DomainError, "beta1 rectangle leaves (1,2)");
    for (const AxisInfo& ax : layout.coords.axes)
        if (!(ax.mod.lo > 1.0 && ax.mod.hi < 2.0))
            fail(Status::DomainError, "conjugate modulus rectangle leaves (1,2)");

    EnumeratedBoxes boxes = enumerate_word_boxes(layout, n, true);
    std::vector<double> min_w = slab_min_widths(layout, n);
    CertifiedDepth out;
    out.m_upper = max_stabbing_depth(boxes.outer, min_w).depth;

    // Boxes whose inner hull collapses are dropped from the lower count.
    std::vector<uint32_t> valid;
    for (size_t w = 0; w < boxes.inner.count; ++w)
        if (boxes.inner_valid[w]) valid.push_back(static_cast<uint32_t>(w));
    if (valid.empty()) {
        out.m_lower = 1; // every parameter choice has at least one box
    } else {
        BoxArray narrowed;
        narrowed.dim = boxes.inner.dim;
        narrowed.count = valid.size();
        narrowed.lo.assign(static_cast<size_t>(narrowed.dim), std::vector<double>(valid.size()));
        narrowed.hi.assign(static_cast<size_t>(narrowed.dim), std::vector<double>(valid.size()));
        for (int a = 0; a < narrowed.dim; ++a)
            for (size_t k = 0; k < valid.size(); ++k) {
                narrowed.lo[static_cast<size_t>(a)][k] = boxes.inner.lo[static_cast<size_t>(a)][valid[k]];
                narrowed.hi[static_cast<size_t>(a)][k] = boxes.inner.hi[static_cast<size_t>(a)][valid[k]];
            }
        out.m_lower = std::max<long long>(max_stabbing_depth(narrowed, min_w).depth, 1);
    }

    out.certified = (out.m_lower == out.m_upper);
    if (out.certified) out.ln_constant = ln_from_mn(n, out.m_upper);
    return out;
}

long long seeded_mn_lower_bound(const ConjugateSystem& sys, int n, const std::vector<Box>& seeds,
                                int tail_N) {
    if (n < 1) fail(Status::BadArgument, "n must be >= 1");
    if (seeds.empty()) fail(Status::BadArgument, "empty seed set");
    Layout layout = build_layout(sys, tail_N, n);
    const int dim = layout.coords.dimension();
    for (const Box& s : seeds)
        if (s.lo.size() != static_cast<size_t>(dim) || s.hi.size() != static_cast<size_t>(dim))
            fail(Status::BadArgument, "seed dimension mismatch");

    const int pn = n - 1;
    PartialSums parents = partial_sums(layout, pn);
    const size_t parent_count = size_t{1} << pn;

    // Parent boxes that meet a seed region contribute both children.
    std::vector<uint32_t> kept;
    for (size_t w = 0; w < parent_count; ++w) {
        bool meets_any = false;
        for (const Box& s : seeds) {
            bool meets = true;
            for (int a = 0; a < dim && meets; ++a) {
                const AxisEnvelope& env = layout.envelope.axes[static_cast<size_t>(a)];
                Interval partial{parents.plo[static_cast<size_t>(a)][w],
                                 parents.phi[static_cast<size_t>(a)][w]};
                double lo = (partial + env.tail_lo[static_cast<size_t>(pn)]).lo;
                double hi = (partial + env.tail_hi[static_cast<size_t>(pn)]).hi;
                if (hi < s.lo[static_cast<size_t>(a)] || lo > s.hi[static_cast<size_t>(a)])
                    meets = false;
            }
            if (meets) {
                meets_any = true;
                break;
            }
        }
        if (meets_any) kept.push_back(static_cast<uint32_t>(w));
    }
    if (kept.empty()) return 1;

    BoxArray children;
    children.dim = dim;
    children.count = kept.size() * 2;
    children.lo.assign(static_cast<size_t>(dim), std::vector<double>(children.count));
    children.hi.assign(static_cast<size_t>(dim), std::vector<double>(children.count));
    for (int a = 0; a < dim; ++a) {
        const AxisEnvelope& env = layout.envelope.axes[static_cast<size_t>(a)];
        const Interval wn = env.weight[static_cast<size_t>(n)];
        const Interval tl = env.tail_lo[static_cast<size_t>(n)];
        const Interval th = env.tail_hi[static_cast<size_t>(n)];
        for (size_t k = 0; k < kept.size(); ++k) {
            Interval partial{parents.plo[static_cast<size_t>(a)][kept[k]],
                             parents.phi[static_cast<size_t>(a)][kept[k]]};
            for (int digit = 0; digit < 2; ++digit) {
                Interval p = digit ? (partial + wn) : partial;
                children.lo[static_cast<size_t>(a)][2 * k + static_cast<size_t>(digit)] =
                    (p + tl).lo;
                children.hi[static_cast<size_t>(a)][2 * k + static_cast<size_t>(digit)] =
                    (p + th).hi;
            }
        }
    }
    return max_stabbing_depth(children, slab_min_widths(layout, n)).depth;
}

} // namespace garsia
