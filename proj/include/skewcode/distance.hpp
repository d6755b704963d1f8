#pragma once

#include <cstdint>
#include <optional>

#include "skewcode/code.hpp"

namespace skewcode {

enum class DistanceStatus {
    Exact,
    /// Sampled minimum; the true distance is at most this value.
    UpperBound,
    /// Enumeration stopped once the running minimum reached the target.
    TargetReached,
};

struct DistanceReport {
    DistanceStatus status = DistanceStatus::Exact;
    std::size_t distance = 0;
    std::uint64_t messages = 0;
    double seconds = 0.0;
    /// A codeword of weight `distance`.
    std::optional<Codeword> witness;

    bool exact() const noexcept { return status == DistanceStatus::Exact; }
};

struct DistanceOptions {
    /// Largest message-space size q^k enumerated exactly.
    std::uint64_t budget = std::uint64_t{1} << 33;
    unsigned threads = 0;
    /// Stop as soon as a codeword of weight <= target is seen.
    std::optional<std::size_t> target;
};

/// Enumeration above this many messages takes hours on a desktop.
inline constexpr std::uint64_t kLongDistanceRun = std::uint64_t{1} << 30;

/// q^k, or nullopt if it does not fit in 64 bits.
std::optional<std::uint64_t> message_space_size(const SkewCyclicCode& code);

/**
 * Exact minimum distance by walking all q^k messages in a p-ary Gray order
 * over a GF(p)-basis {y^j X^i G}: each step adds one basis codeword, so a
 * step costs O(n) (one XOR per bit plane when p = 2 and n <= 64).
 * Throws BudgetExceeded when q^k > options.budget.
 */
DistanceReport min_distance_exact(const SkewCyclicCode& code, const DistanceOptions& options = {});

/// Minimum weight over `trials` random nonzero messages. Falls back to the
/// exact search when trials >= q^k - 1 and q^k fits the budget.
DistanceReport min_distance_upper(const SkewCyclicCode& code, std::uint64_t trials, std::uint64_t seed,
                                  unsigned threads = 0, std::uint64_t budget = std::uint64_t{1} << 33);

}  // namespace skewcode
