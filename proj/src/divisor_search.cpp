#include "skewcode/divisor_search.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <mutex>
#include <optional>
#include <random>
#include <set>

#include "skewcode/parallel.hpp"

namespace skewcode {

namespace {

std::vector<SkewPoly> sorted_unique(std::vector<SkewPoly> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

// Table of theta on every field element.
std::vector<Elem> theta_table(const SkewRing& ring) {
    const auto& F = ring.field();
    std::vector<Elem> t(F.order());
    for (Elem x = 0; x < F.order(); ++x) t[x] = ring.theta().apply(x);
    return t;
}

// Remainder of X^n by the monic g (given by its d low coefficients) equals 1.
// r <- X r - c g keeps r the right remainder of successive powers of X.
bool x_power_reduces_to_one(const GaloisField& F, const std::vector<Elem>& th, std::span<const Elem> low,
                            std::size_t n, std::vector<Elem>& r) {
    const std::size_t d = low.size();
    if (d == 0) return true;
    r.assign(d, 0);
    r[0] = 1;
    for (std::size_t step = 0; step < n; ++step) {
        const Elem top = th[r[d - 1]];
        for (std::size_t j = d - 1; j > 0; --j) r[j] = th[r[j - 1]];
        r[0] = 0;
        if (top != 0)
            for (std::size_t j = 0; j < d; ++j) r[j] = F.sub(r[j], F.mul(top, low[j]));
    }
    if (r[0] != 1) return false;
    for (std::size_t j = 1; j < d; ++j)
        if (r[j] != 0) return false;
    return true;
}

// Characteristic 2: 64 candidates at once, bit-sliced across lanes. Plane i
// of a coefficient holds bit i (the y^i coordinate) of that coefficient in
// every lane, so theta and field products become word operations.
template <unsigned M>
class BinaryLanes {
  public:
    using Coeff = std::array<std::uint64_t, M>;

    BinaryLanes(const SkewRing& ring, std::size_t d) : d_(d), g_(d), r_(d), next_(d) {
        const auto& F = ring.field();
        for (unsigned j = 0; j < M; ++j) {
            const Elem col = ring.theta().apply(Elem{1} << j);
            for (unsigned i = 0; i < M; ++i)
                if (col >> i & 1) theta_rows_[i] |= 1u << j;
        }
        for (unsigned i = 0; i < M; ++i) taps_[i] = F.modulus()[i] != 0;
    }

    /// Sets coefficient j of lane `lane`.
    void set(std::size_t lane, std::size_t j, Elem value) {
        const std::uint64_t bit = std::uint64_t{1} << lane;
        for (unsigned i = 0; i < M; ++i) {
            auto& w = g_[j][i];
            w = (w & ~bit) | ((std::uint64_t{value} >> i & 1) << lane);
        }
    }

    /// Lanes whose X^n reduces to 1 modulo X^d + low.
    std::uint64_t run(std::size_t n) {
        for (auto& c : r_) c.fill(0);
        r_[0][0] = ~std::uint64_t{0};
        for (std::size_t step = 0; step < n; ++step) {
            const Coeff top = theta(r_[d_ - 1]);
            for (std::size_t j = d_ - 1; j > 0; --j) next_[j] = theta(r_[j - 1]);
            next_[0].fill(0);
            for (std::size_t j = 0; j < d_; ++j) multiply_add(top, g_[j], next_[j]);
            r_.swap(next_);
        }
        std::uint64_t hit = r_[0][0];
        for (unsigned i = 1; i < M; ++i) hit &= ~r_[0][i];
        for (std::size_t j = 1; j < d_; ++j)
            for (unsigned i = 0; i < M; ++i) hit &= ~r_[j][i];
        return hit;
    }

  private:
    Coeff theta(const Coeff& in) const {
        Coeff out{};
        for (unsigned i = 0; i < M; ++i)
            for (unsigned j = 0; j < M; ++j) out[i] ^= in[j] & (0 - std::uint64_t{theta_rows_[i] >> j & 1});
        return out;
    }

    // acc += a * b in GF(2^M), lane-wise; subtraction is addition here.
    void multiply_add(const Coeff& a, const Coeff& b, Coeff& acc) const {
        std::array<std::uint64_t, 2 * M> prod{};
        for (unsigned i = 0; i < M; ++i)
            for (unsigned j = 0; j < M; ++j) prod[i + j] ^= a[i] & b[j];
        for (unsigned k = 2 * M - 2; k >= M; --k)
            for (unsigned t = 0; t < M; ++t)
                if (taps_[t]) prod[k - M + t] ^= prod[k];
        for (unsigned i = 0; i < M; ++i) acc[i] ^= prod[i];
    }

    std::size_t d_;
    std::array<std::uint32_t, M> theta_rows_{};
    std::array<bool, M> taps_{};
    std::vector<Coeff> g_, r_, next_;
};

template <unsigned M>
void scan_binary(const SkewRing& ring, std::size_t n, std::size_t d, std::uint64_t begin, std::uint64_t end,
                 std::vector<Elem> low, std::vector<std::vector<Elem>>& out) {
    const Elem q = ring.field().order();
    BinaryLanes<M> lanes(ring, d);
    std::vector<std::vector<Elem>> batch;
    for (std::uint64_t idx = begin; idx < end;) {
        batch.clear();
        for (std::size_t lane = 0; lane < 64 && idx < end; ++lane, ++idx) {
            for (std::size_t j = 0; j < d; ++j) lanes.set(lane, j, low[j]);
            batch.push_back(low);
            for (std::size_t j = 0; j < d && ++low[j] == q; ++j) low[j] = 0;
        }
        std::uint64_t hit = lanes.run(n);
        if (batch.size() < 64) hit &= (std::uint64_t{1} << batch.size()) - 1;
        for (; hit != 0; hit &= hit - 1) out.push_back(batch[static_cast<std::size_t>(std::countr_zero(hit))]);
    }
}

using BinaryScan = void (*)(const SkewRing&, std::size_t, std::size_t, std::uint64_t, std::uint64_t,
                            std::vector<Elem>, std::vector<std::vector<Elem>>&);

BinaryScan binary_scan_for(const GaloisField& F) {
    if (F.characteristic() != 2) return nullptr;
    switch (F.degree()) {
        case 1: return scan_binary<1>;
        case 2: return scan_binary<2>;
        case 3: return scan_binary<3>;
        case 4: return scan_binary<4>;
        case 5: return scan_binary<5>;
        case 6: return scan_binary<6>;
        case 7: return scan_binary<7>;
        case 8: return scan_binary<8>;
        default: return nullptr;
    }
}

}  // namespace

std::string to_string(DivisorMode mode) {
    switch (mode) {
        case DivisorMode::Exhaustive: return "exhaustive";
        case DivisorMode::Random: return "random";
        case DivisorMode::Dfs: return "dfs";
    }
    return "?";
}

DivisorMode parse_divisor_mode(const std::string& text) {
    if (text == "exhaustive") return DivisorMode::Exhaustive;
    if (text == "random") return DivisorMode::Random;
    if (text == "dfs") return DivisorMode::Dfs;
    throw std::invalid_argument("unknown divisor mode '" + text + "'");
}

void require_theta_cyclic_length(const SkewRing& ring, std::size_t n) {
    if (n == 0) throw std::invalid_argument("code length must be positive");
    if (n % ring.theta().order() != 0)
        throw std::invalid_argument("order of theta (" + std::to_string(ring.theta().order()) +
                                    ") does not divide n = " + std::to_string(n));
}

bool is_right_divisor(const SkewPoly& g, std::size_t n) {
    if (g.is_zero()) throw std::domain_error("zero polynomial is not a divisor");
    return right_divmod(g.ring().x_n_minus_one(n), g).remainder.is_zero();
}

std::vector<Elem> linear_right_factors(const SkewPoly& f) {
    std::vector<Elem> out;
    const auto& F = f.field();
    for (Elem beta = 0; beta < F.order(); ++beta)
        if (eval_rem_linear(f, beta) == 0) out.push_back(beta);
    return out;
}

DivisorSet enumerate_right_divisors(const RingPtr& ring, std::size_t n, std::size_t d, std::uint64_t budget,
                                    unsigned threads) {
    require_theta_cyclic_length(*ring, n);
    if (d > n) throw std::invalid_argument("divisor degree exceeds n");
    const auto& F = ring->field();
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) {
        if (count > budget / F.order() + 1) throw BudgetExceeded("q^d exceeds the exhaustive budget");
        count *= F.order();
    }
    if (count > budget) throw BudgetExceeded("q^d exceeds the exhaustive budget");

    const auto th = theta_table(*ring);
    const BinaryScan binary_scan = binary_scan_for(F);
    constexpr std::uint64_t kBlock = 4096;
    const std::uint64_t blocks = (count + kBlock - 1) / kBlock;
    std::mutex mu;
    std::vector<std::vector<Elem>> found;
    parallel_blocks(blocks, threads, [&](std::uint64_t b, unsigned) {
        std::vector<Elem> low(d), scratch;
        std::vector<std::vector<Elem>> local;
        std::uint64_t v = b * kBlock;
        for (std::size_t j = 0; j < d; ++j) {
            low[j] = static_cast<Elem>(v % F.order());
            v /= F.order();
        }
        auto advance = [&] {
            for (std::size_t j = 0; j < d && ++low[j] == F.order(); ++j) low[j] = 0;
        };
        const std::uint64_t end = std::min(count, (b + 1) * kBlock);
        if (binary_scan && d > 0) {
            binary_scan(*ring, n, d, b * kBlock, end, low, local);
        } else {
            for (std::uint64_t idx = b * kBlock; idx < end; ++idx, advance())
                if (x_power_reduces_to_one(F, th, low, n, scratch)) local.push_back(low);
        }
        std::lock_guard lock(mu);
        for (auto& l : local) found.push_back(std::move(l));
    });

    DivisorSet out;
    out.candidates_tested = count;
    for (auto& low : found) {
        low.push_back(1);
        out.divisors.push_back(ring->from_coeffs(std::move(low)));
    }
    out.divisors = sorted_unique(std::move(out.divisors));
    return out;
}

DivisorSet sample_right_divisors(const RingPtr& ring, std::size_t n, std::size_t d, std::uint64_t trials,
                                 std::uint64_t seed, SampleStrategy strategy, unsigned threads) {
    require_theta_cyclic_length(*ring, n);
    if (trials == 0) throw std::invalid_argument("trials must be at least 1");
    if (d > n) throw std::invalid_argument("divisor degree exceeds n");
    const auto& F = ring->field();
    const SkewPoly xn1 = ring->x_n_minus_one(n);

    constexpr std::uint64_t kBlock = 64;
    const std::uint64_t blocks = (trials + kBlock - 1) / kBlock;
    std::mutex mu;
    std::vector<SkewPoly> found;
    parallel_blocks(blocks, threads, [&](std::uint64_t b, unsigned) {
        std::mt19937_64 rng(stream_seed(seed, b));
        std::uniform_int_distribution<Elem> coeff(0, F.order() - 1);
        auto random_below = [&](long degree) {
            std::vector<Elem> c(static_cast<std::size_t>(std::max(degree, 0L)));
            for (auto& x : c) x = coeff(rng);
            return ring->from_coeffs(std::move(c));
        };
        std::vector<SkewPoly> local;
        const std::uint64_t end = std::min(trials, (b + 1) * kBlock);
        for (std::uint64_t t = b * kBlock; t < end; ++t) {
            if (strategy == SampleStrategy::SingleRgcd) {
                SkewPoly g = rgcd(xn1, random_below(static_cast<long>(n)));
                if (g.degree() == static_cast<long>(d)) local.push_back(std::move(g));
                continue;
            }
            SkewPoly cur = ring->one();
            SkewPoly cof = xn1;
            // Attempts are bounded so a trial cannot loop on an unlucky cofactor.
            for (std::size_t attempt = 0; attempt < 4 * n + 8 && cur.degree() < static_cast<long>(d); ++attempt) {
                SkewPoly g = rgcd(cof, random_below(cof.degree()));
                if (g.degree() <= 0 || cur.degree() + g.degree() > static_cast<long>(d)) continue;
                cof = right_divmod(cof, g).quotient;
                cur = g * cur;
            }
            if (cur.degree() == static_cast<long>(d)) local.push_back(monic(cur));
        }
        std::lock_guard lock(mu);
        for (auto& g : local) found.push_back(std::move(g));
    });

    DivisorSet out;
    out.candidates_tested = trials;
    out.divisors = sorted_unique(std::move(found));
    return out;
}

DivisorSet dfs_split_divisors(const RingPtr& ring, std::size_t n, std::size_t d_max, std::size_t max_divisors) {
    require_theta_cyclic_length(*ring, n);
    const SkewPoly xn1 = ring->x_n_minus_one(n);
    DivisorSet out;
    std::set<SkewPoly> all{ring->one()};
    // Each level holds (divisor g, cofactor h) with h g = X^n - 1.
    std::vector<std::pair<SkewPoly, SkewPoly>> level{{ring->one(), xn1}};
    for (std::size_t depth = 0; depth < std::min(d_max, n) && !level.empty(); ++depth) {
        std::set<SkewPoly> seen;
        std::vector<std::pair<SkewPoly, SkewPoly>> next;
        for (const auto& [g, h] : level) {
            for (Elem beta : linear_right_factors(h)) {
                ++out.candidates_tested;
                const SkewPoly lin = ring->linear(beta);
                SkewPoly g2 = lin * g;
                if (!seen.insert(g2).second) continue;
                if (all.size() >= max_divisors) {
                    out.complete = false;
                    break;
                }
                all.insert(g2);
                next.emplace_back(std::move(g2), right_divmod(h, lin).quotient);
            }
            if (!out.complete) break;
        }
        if (!out.complete) break;
        level = std::move(next);
    }
    out.divisors.assign(all.begin(), all.end());
    return out;
}

DivisorSet find_right_divisors(const RingPtr& ring, const DivisorQuery& query) {
    switch (query.mode) {
        case DivisorMode::Exhaustive:
            return enumerate_right_divisors(ring, query.n, query.degree, query.budget, query.threads);
        case DivisorMode::Random:
            return sample_right_divisors(ring, query.n, query.degree, query.trials, query.seed,
                                         SampleStrategy::Peeling, query.threads);
        case DivisorMode::Dfs: {
            auto all = dfs_split_divisors(ring, query.n, query.degree);
            std::erase_if(all.divisors,
                          [&](const SkewPoly& g) { return g.degree() != static_cast<long>(query.degree); });
            return all;
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace skewcode
