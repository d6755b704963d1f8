#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "skewcode/skew_ring.hpp"

namespace skewcode {

/// Coefficient vector (a_0, ..., a_{n-1}) of a word; a(X) = sum a_i X^i.
using Codeword = std::vector<Elem>;
using Matrix = std::vector<std::vector<Elem>>;

std::size_t hamming_weight(std::span<const Elem> word) noexcept;

/**
 * Theta-cyclic code of length n: the left ideal generated by a monic right
 * divisor G of X^n - 1 in F_q[X;theta]/(X^n - 1). Row i of the generator
 * matrix is X^i G, i = 0..k-1, which has degree < n so no reduction occurs.
 */
class SkewCyclicCode {
  public:
    /// Validates order(theta) | n, G | X^n - 1 on the right and deg G < n.
    /// G is normalized to be monic.
    static SkewCyclicCode from_generator(RingPtr ring, std::size_t n, const SkewPoly& generator);

    const SkewRing& ring() const noexcept { return *ring_; }
    const RingPtr& ring_ptr() const noexcept { return ring_; }
    const GaloisField& field() const noexcept { return ring_->field(); }
    std::size_t length() const noexcept { return n_; }
    std::size_t dimension() const noexcept { return k_; }
    const SkewPoly& generator() const noexcept { return g_; }
    const Matrix& generator_matrix() const noexcept { return rows_; }

    /// sum_i m_i (X^i G).
    Codeword encode(std::span<const Elem> message) const;
    bool is_codeword(std::span<const Elem> word) const;

    SkewPoly to_poly(std::span<const Elem> word) const;
    Codeword to_word(const SkewPoly& f) const;

  private:
    SkewCyclicCode(RingPtr ring, std::size_t n, SkewPoly g);

    RingPtr ring_;
    std::size_t n_;
    std::size_t k_;
    SkewPoly g_;
    Matrix rows_;
};

/// (theta(a_{n-1}), theta(a_0), ..., theta(a_{n-2})).
Codeword theta_shift(const Automorphism& theta, std::span<const Elem> word);

/// Row-reduced echelon form over GF(q); returns the nonzero rows.
Matrix row_reduce(const GaloisField& field, Matrix rows);

/**
 * H_1 for the skew-BCH setting (p = 2, q = 2^n, theta squaring): entry
 * (s-1, i) is alpha^((2^i - 1) s) for s = 1..d-1. Throws when the code
 * is outside that setting or some X - alpha^s is not a right factor of G.
 */
Matrix check_matrix_h1(const SkewCyclicCode& code, std::size_t designed_distance);

}  // namespace skewcode
