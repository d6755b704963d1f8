#include "skewcode/distance.hpp"

#include <array>
#include <atomic>
#include <bit>
#include <chrono>
#include <limits>
#include <mutex>
#include <random>

#include "skewcode/divisor_search.hpp"
#include "skewcode/parallel.hpp"

namespace skewcode {

namespace {

using Clock = std::chrono::steady_clock;

// GF(p)-basis of the code: basis[i*m + j] = y^j * row_i, where y^j is the
// element with value p^j.
Matrix prime_field_basis(const SkewCyclicCode& code) {
    const auto& F = code.field();
    Matrix basis;
    basis.reserve(code.dimension() * F.degree());
    Elem yj_base = 1;
    std::vector<Elem> powers_of_y(F.degree());
    for (unsigned j = 0; j < F.degree(); ++j) {
        powers_of_y[j] = yj_base;
        yj_base *= F.characteristic();
    }
    for (const auto& row : code.generator_matrix())
        for (unsigned j = 0; j < F.degree(); ++j) {
            Codeword v(row.size());
            for (std::size_t i = 0; i < row.size(); ++i) v[i] = F.mul(powers_of_y[j], row[i]);
            basis.push_back(std::move(v));
        }
    return basis;
}

struct ItemResult {
    std::size_t best = std::numeric_limits<std::size_t>::max();
    Codeword witness;
    std::uint64_t messages = 0;
};

struct WalkPlan {
    std::size_t digits = 0;     // N = k m
    std::size_t top = 0;        // digits fixed per work item
    std::uint64_t items = 1;    // p^top
    std::uint64_t per_item = 1; // p^(N - top)
};

WalkPlan plan_walk(unsigned p, std::size_t digits) {
    WalkPlan plan;
    plan.digits = digits;
    while (plan.top < digits && plan.items < 256) {
        plan.items *= p;
        ++plan.top;
    }
    for (std::size_t i = plan.top; i < digits; ++i) plan.per_item *= p;
    return plan;
}

// Stops the walk once any worker reaches `floor` (the target, or weight 1).
struct SharedMin {
    std::atomic<std::size_t> value{std::numeric_limits<std::size_t>::max()};
    std::size_t floor = 1;

    void offer(std::size_t w) {
        std::size_t cur = value.load(std::memory_order_relaxed);
        while (w < cur && !value.compare_exchange_weak(cur, w, std::memory_order_relaxed)) {
        }
    }
    bool done() const { return value.load(std::memory_order_relaxed) <= floor; }
};

template <unsigned M>
struct BitPlanes {
    std::array<std::uint64_t, M> w{};

    void add(const BitPlanes& o) {
        for (unsigned b = 0; b < M; ++b) w[b] ^= o.w[b];
    }
    std::size_t weight() const {
        std::uint64_t any = 0;
        for (unsigned b = 0; b < M; ++b) any |= w[b];
        return static_cast<std::size_t>(std::popcount(any));
    }
};

template <unsigned M>
BitPlanes<M> to_planes(std::span<const Elem> v) {
    BitPlanes<M> out;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (unsigned b = 0; b < M; ++b)
            if ((v[i] >> b) & 1U) out.w[b] |= std::uint64_t{1} << i;
    return out;
}

template <unsigned M>
Codeword from_planes(const BitPlanes<M>& pl, std::size_t n) {
    Codeword out(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (unsigned b = 0; b < M; ++b)
            if ((pl.w[b] >> i) & 1U) out[i] |= Elem{1} << b;
    return out;
}

template <unsigned M>
std::vector<ItemResult> walk_binary(const Matrix& basis, std::size_t n, const WalkPlan& plan, unsigned threads,
                                    SharedMin& shared) {
    std::vector<BitPlanes<M>> b;
    b.reserve(basis.size());
    for (const auto& v : basis) b.push_back(to_planes<M>(v));
    std::vector<ItemResult> results(plan.items);
    const std::size_t low = plan.digits - plan.top;
    parallel_blocks(plan.items, threads, [&](std::uint64_t item, unsigned) {
        ItemResult& res = results[item];
        if (shared.done()) return;
        BitPlanes<M> cw;
        for (std::size_t t = 0; t < plan.top; ++t)
            if ((item >> t) & 1U) cw.add(b[low + t]);
        auto consider = [&](const BitPlanes<M>& c) {
            const std::size_t w = c.weight();
            if (w < res.best) {
                res.best = w;
                res.witness = from_planes<M>(c, n);
                shared.offer(w);
            }
        };
        if (item != 0) consider(cw);
        ++res.messages;
        for (std::uint64_t s = 1; s < plan.per_item; ++s) {
            cw.add(b[static_cast<std::size_t>(std::countr_zero(s))]);
            const std::size_t w = cw.weight();
            if (w < res.best) consider(cw);
            if ((s & 0xFFFFF) == 0 && shared.done()) {
                res.messages += s;
                return;
            }
        }
        res.messages += plan.per_item - 1;
    });
    return results;
}

std::vector<ItemResult> walk_generic(const GaloisField& F, const Matrix& basis, std::size_t n, const WalkPlan& plan,
                                     unsigned threads, SharedMin& shared) {
    const unsigned p = F.characteristic();
    std::vector<std::vector<std::size_t>> support(basis.size());
    for (std::size_t c = 0; c < basis.size(); ++c)
        for (std::size_t i = 0; i < n; ++i)
            if (basis[c][i] != 0) support[c].push_back(i);
    std::vector<ItemResult> results(plan.items);
    const std::size_t low = plan.digits - plan.top;
    parallel_blocks(plan.items, threads, [&](std::uint64_t item, unsigned) {
        ItemResult& res = results[item];
        if (shared.done()) return;
        Codeword cw(n, 0);
        std::uint64_t rest = item;
        for (std::size_t t = 0; t < plan.top; ++t) {
            const Elem digit = F.from_int(static_cast<std::int64_t>(rest % p));
            rest /= p;
            for (std::size_t i = 0; i < n; ++i) cw[i] = F.add(cw[i], F.mul(digit, basis[low + t][i]));
        }
        std::size_t weight = hamming_weight(cw);
        auto consider = [&] {
            if (weight < res.best) {
                res.best = weight;
                res.witness = cw;
                shared.offer(weight);
            }
        };
        if (item != 0) consider();
        ++res.messages;
        for (std::uint64_t s = 1; s < plan.per_item; ++s) {
            std::uint64_t v = s;
            std::size_t c = 0;
            while (v % p == 0) {
                v /= p;
                ++c;
            }
            const auto& bc = basis[c];
            for (std::size_t i : support[c]) {
                const Elem old = cw[i];
                const Elem nw = F.add(old, bc[i]);
                cw[i] = nw;
                weight += (nw != 0) - (old != 0);
            }
            if (weight < res.best) consider();
            if ((s & 0xFFFFF) == 0 && shared.done()) {
                res.messages += s;
                return;
            }
        }
        res.messages += plan.per_item - 1;
    });
    return results;
}

std::vector<ItemResult> run_walk(const SkewCyclicCode& code, const WalkPlan& plan, unsigned threads,
                                 SharedMin& shared) {
    const auto& F = code.field();
    const Matrix basis = prime_field_basis(code);
    const std::size_t n = code.length();
    if (F.characteristic() == 2 && n <= 64) {
        switch (F.degree()) {
            case 1: return walk_binary<1>(basis, n, plan, threads, shared);
            case 2: return walk_binary<2>(basis, n, plan, threads, shared);
            case 3: return walk_binary<3>(basis, n, plan, threads, shared);
            case 4: return walk_binary<4>(basis, n, plan, threads, shared);
            case 5: return walk_binary<5>(basis, n, plan, threads, shared);
            case 6: return walk_binary<6>(basis, n, plan, threads, shared);
            case 7: return walk_binary<7>(basis, n, plan, threads, shared);
            case 8: return walk_binary<8>(basis, n, plan, threads, shared);
            default: break;
        }
    }
    return walk_generic(F, basis, n, plan, threads, shared);
}

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

std::optional<std::uint64_t> message_space_size(const SkewCyclicCode& code) {
    std::uint64_t size = 1;
    const std::uint64_t q = code.field().order();
    for (std::size_t i = 0; i < code.dimension(); ++i) {
        if (size > std::numeric_limits<std::uint64_t>::max() / q) return std::nullopt;
        size *= q;
    }
    return size;
}

DistanceReport min_distance_exact(const SkewCyclicCode& code, const DistanceOptions& options) {
    const auto start = Clock::now();
    const auto size = message_space_size(code);
    if (!size || *size > options.budget)
        throw BudgetExceeded("q^k exceeds the distance budget; use the sampled upper bound");
    DistanceReport report;
    if (code.dimension() == 0) throw std::invalid_argument("zero code has no minimum distance");

    const auto& F = code.field();
    const WalkPlan plan = plan_walk(F.characteristic(), code.dimension() * F.degree());
    SharedMin shared;
    shared.floor = options.target ? std::max<std::size_t>(*options.target, 1) : 1;
    const auto results = run_walk(code, plan, options.threads, shared);

    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (const auto& r : results) {
        report.messages += r.messages;
        if (r.best < best) {
            best = r.best;
            report.witness = r.witness;
        }
    }
    report.distance = best;
    // Weight 1 is a lower bound for any nonzero code, so stopping there is still exact.
    report.status = (options.target && best <= *options.target && best > 1) ? DistanceStatus::TargetReached
                                                                             : DistanceStatus::Exact;
    if (report.status == DistanceStatus::TargetReached && report.messages >= *size)
        report.status = DistanceStatus::Exact;
    report.seconds = seconds_since(start);
    return report;
}

DistanceReport min_distance_upper(const SkewCyclicCode& code, std::uint64_t trials, std::uint64_t seed,
                                  unsigned threads, std::uint64_t budget) {
    if (trials == 0) throw std::invalid_argument("trials must be at least 1");
    const auto size = message_space_size(code);
    if (size && *size <= budget && trials >= *size - 1) {
        DistanceOptions opt;
        opt.budget = budget;
        opt.threads = threads;
        return min_distance_exact(code, opt);
    }
    const auto start = Clock::now();
    const auto& F = code.field();
    const Matrix basis = prime_field_basis(code);
    const std::size_t n = code.length();
    const unsigned p = F.characteristic();
    const bool binary = p == 2 && n <= 64;

    // Bit planes for the binary path: basis c as m words.
    const unsigned m = F.degree();
    std::vector<std::uint64_t> planes;
    if (binary) {
        planes.assign(basis.size() * m, 0);
        for (std::size_t c = 0; c < basis.size(); ++c)
            for (std::size_t i = 0; i < n; ++i)
                for (unsigned b = 0; b < m; ++b)
                    if ((basis[c][i] >> b) & 1U) planes[c * m + b] |= std::uint64_t{1} << i;
    }

    constexpr std::uint64_t kBlock = 1 << 14;
    const std::uint64_t blocks = (trials + kBlock - 1) / kBlock;
    std::vector<ItemResult> results(blocks);
    parallel_blocks(blocks, threads, [&](std::uint64_t blk, unsigned) {
        std::mt19937_64 rng(stream_seed(seed, blk));
        ItemResult& res = results[blk];
        const std::uint64_t end = std::min(trials, (blk + 1) * kBlock);
        std::vector<std::uint64_t> acc(m);
        Codeword cw(n);
        std::uniform_int_distribution<unsigned> digit(0, p - 1);
        // Draws one message; false when it happened to be zero.
        auto draw_binary = [&] {
            bool nonzero = false;
            std::fill(acc.begin(), acc.end(), 0);
            for (std::size_t c0 = 0; c0 < basis.size(); c0 += 64) {
                std::uint64_t bits = rng();
                if (basis.size() - c0 < 64) bits &= (std::uint64_t{1} << (basis.size() - c0)) - 1;
                while (bits) {
                    const std::size_t c = c0 + static_cast<std::size_t>(std::countr_zero(bits));
                    bits &= bits - 1;
                    nonzero = true;
                    for (unsigned b = 0; b < m; ++b) acc[b] ^= planes[c * m + b];
                }
            }
            return nonzero;
        };
        auto draw_generic = [&] {
            bool nonzero = false;
            std::fill(cw.begin(), cw.end(), 0);
            for (std::size_t c = 0; c < basis.size(); ++c) {
                const unsigned d = digit(rng);
                if (d == 0) continue;
                nonzero = true;
                const Elem s = F.from_int(d);
                for (std::size_t i = 0; i < n; ++i) cw[i] = F.add(cw[i], F.mul(s, basis[c][i]));
            }
            return nonzero;
        };
        for (std::uint64_t t = blk * kBlock; t < end; ++t) {
            ++res.messages;
            if (binary) {
                while (!draw_binary()) {
                }
                std::uint64_t any = 0;
                for (auto w : acc) any |= w;
                const auto w = static_cast<std::size_t>(std::popcount(any));
                if (w < res.best) {
                    res.best = w;
                    res.witness.assign(n, 0);
                    for (std::size_t i = 0; i < n; ++i)
                        for (unsigned b = 0; b < m; ++b)
                            if ((acc[b] >> i) & 1U) res.witness[i] |= Elem{1} << b;
                }
            } else {
                while (!draw_generic()) {
                }
                const std::size_t w = hamming_weight(cw);
                if (w < res.best) {
                    res.best = w;
                    res.witness = cw;
                }
            }
        }
    });

    DistanceReport report;
    report.status = DistanceStatus::UpperBound;
    report.distance = std::numeric_limits<std::size_t>::max();
    for (const auto& r : results) {
        report.messages += r.messages;
        if (r.best < report.distance) {
            report.distance = r.best;
            report.witness = r.witness;
        }
    }
    report.seconds = seconds_since(start);
    return report;
}

}  // namespace skewcode
