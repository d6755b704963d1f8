#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "skewcode/code.hpp"

namespace skewcode {

/// Throws unless p = 2, q = 2^n, n even and theta is the squaring Frobenius.
void require_bch_setting(const SkewRing& ring, std::size_t n);

/// lclm(X - alpha, ..., X - alpha^(d-1)), monic. Throws when the result does
/// not right-divide X^n - 1.
SkewPoly bch_generator(const RingPtr& ring, std::size_t n, std::size_t designed_distance);

/// A theta-cyclic code whose generator has the right factors X - alpha^k, k = 1..d-1.
class SkewBchCode {
  public:
    SkewBchCode(SkewCyclicCode code, std::size_t designed_distance);

    const SkewCyclicCode& code() const noexcept { return code_; }
    std::size_t designed_distance() const noexcept { return d_; }
    /// floor((d - 1) / 2).
    std::size_t correctable() const noexcept { return (d_ - 1) / 2; }

  private:
    SkewCyclicCode code_;
    std::size_t d_;
};

/// S_d(z) = sum_{k=1}^{d-1} Rem(b, X - alpha^k) z^(k-1).
TildePoly syndrome(const SkewPoly& received, std::size_t designed_distance);

struct EuclidStep {
    TildePoly quotient;  // q_i (zero for the two seed rows)
    TildePoly r;
    TildePoly u;
    TildePoly v;
};

struct KeyEquationSolution {
    TildePoly sigma;
    TildePoly omega;
    /// Rows i = -1, 0, 1, ..., k; each satisfies u S + v z^(d-1) = r.
    std::vector<EuclidStep> steps;
};

/// Partial Euclid on (z^(d-1), S) stopped at the first remainder of degree < t.
/// Returns sigma = U_k / U_k(0) and omega = r_k / U_k(0).
KeyEquationSolution key_equation_solve(const TildePoly& syndrome, std::size_t designed_distance,
                                       std::size_t t);

/// Exponents j with sigma(alpha^-j) = 0, in the order the roots are met
/// scanning alpha^0, alpha^1, ... Empty for sigma = 1.
std::vector<std::uint64_t> locate(const TildePoly& sigma);

/// e_k = alpha^-j_k omega(alpha^-j_k) / prod_{l != k} (1 - alpha^(j_l - j_k)).
std::vector<Elem> magnitudes(const TildePoly& omega, const std::vector<std::uint64_t>& js);

struct PositionCandidates {
    /// i in [0, n) with 2^i - 1 = j (mod q - 1).
    std::vector<std::size_t> refined;
    /// i in [0, n) with 2^i - 1 = j (mod n).
    std::vector<std::size_t> mod_n;
};

PositionCandidates position_candidates(std::uint64_t j, std::size_t n, std::uint64_t q_minus_1);

enum class PositionStrategy {
    /// Trial the mod (q-1) candidates, falling back to the mod n list.
    RefinedFirst,
    /// Trial the full mod n candidate list.
    ModN,
};

struct DecodeOptions {
    PositionStrategy strategy = PositionStrategy::RefinedFirst;
};

struct DecodeResult {
    Codeword error;
    Codeword corrected;
    TildePoly syndrome;
    std::optional<KeyEquationSolution> key_equation;
    std::vector<Elem> roots;
    std::vector<std::uint64_t> js;
    std::vector<Elem> magnitudes;
    /// Error words built from the mod n congruence, first locator varying slowest.
    std::vector<Codeword> mod_n_candidates;
    /// Error words actually tested, in test order.
    std::vector<Codeword> trialed;
    std::size_t division_tests = 0;
};

enum class DecodeFailure {
    KeyEquation,
    Locator,
    Magnitude,
    NoCandidate,
    MultipleCandidates,
};

std::string to_string(DecodeFailure kind);

class DecodeError : public std::runtime_error {
  public:
    DecodeError(DecodeFailure kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    DecodeFailure kind() const noexcept { return kind_; }

  private:
    DecodeFailure kind_;
};

DecodeResult decode(const SkewBchCode& code, std::span<const Elem> received, const DecodeOptions& options = {});

struct RoundTripStats {
    std::uint64_t trials = 0;
    std::uint64_t successes = 0;
    /// Failures by kind; a decode that returns the wrong error counts as "wrong".
    std::map<std::string, std::uint64_t> failures;
    double seconds = 0.0;
};

/// Random codeword plus a random error of weight 0..max_errors (uniform
/// weight, distinct positions, nonzero magnitudes), decoded and compared.
/// Deterministic for a given seed.
RoundTripStats roundtrip(const SkewBchCode& code, std::uint64_t trials, std::size_t max_errors, std::uint64_t seed,
                         const DecodeOptions& options = {});

}  // namespace skewcode
