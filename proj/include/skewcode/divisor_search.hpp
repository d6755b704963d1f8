#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "skewcode/skew_ring.hpp"

namespace skewcode {

enum class DivisorMode { Exhaustive, Random, Dfs };

std::string to_string(DivisorMode mode);
DivisorMode parse_divisor_mode(const std::string& text);

class BudgetExceeded : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct DivisorQuery {
    std::size_t n = 0;
    std::size_t degree = 0;
    DivisorMode mode = DivisorMode::Exhaustive;
    /// Largest number of monic candidates the exhaustive scan may test.
    std::uint64_t budget = std::uint64_t{1} << 24;
    std::uint64_t trials = 1000;
    std::uint64_t seed = 1;
    unsigned threads = 0;  // 0: hardware concurrency
};

struct DivisorSet {
    /// Monic, deduplicated, sorted by SkewPoly::operator<.
    std::vector<SkewPoly> divisors;
    /// False when a size limit cut the search short (dfs mode).
    bool complete = true;
    std::uint64_t candidates_tested = 0;
};

/// Throws unless order(theta) divides n.
void require_theta_cyclic_length(const SkewRing& ring, std::size_t n);

bool is_right_divisor(const SkewPoly& g, std::size_t n);

/// Every beta with X - beta a right factor of f, in increasing element order.
std::vector<Elem> linear_right_factors(const SkewPoly& f);

/// All monic degree-d right divisors of X^n - 1 by scanning the q^d monic candidates.
DivisorSet enumerate_right_divisors(const RingPtr& ring, std::size_t n, std::size_t d,
                                    std::uint64_t budget = std::uint64_t{1} << 24, unsigned threads = 0);

enum class SampleStrategy {
    /// g = rgcd(X^n - 1, r) for one random r of degree < n.
    SingleRgcd,
    /// Repeats the rgcd step on the remaining left cofactor, accumulating
    /// g_s ... g_1 until degree d is reached.
    Peeling,
};

/// Seeded random search; deterministic for a given seed whatever the thread count.
DivisorSet sample_right_divisors(const RingPtr& ring, std::size_t n, std::size_t d, std::uint64_t trials,
                                 std::uint64_t seed, SampleStrategy strategy = SampleStrategy::Peeling,
                                 unsigned threads = 0);

/// Right divisors of X^n - 1 of degree <= d_max that split into linear
/// factors, grown one linear right factor at a time. Stops expanding a
/// level once max_divisors is reached.
DivisorSet dfs_split_divisors(const RingPtr& ring, std::size_t n, std::size_t d_max,
                              std::size_t max_divisors = 100000);

/// Dispatches on query.mode; dfs results are filtered to the requested degree.
DivisorSet find_right_divisors(const RingPtr& ring, const DivisorQuery& query);

}  // namespace skewcode
