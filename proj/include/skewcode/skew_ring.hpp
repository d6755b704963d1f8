#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "skewcode/galois_field.hpp"

namespace skewcode {

class SkewPoly;

/// F_q[X; theta]: polynomials with coefficients on the left and X a = theta(a) X.
class SkewRing : public std::enable_shared_from_this<SkewRing> {
  public:
    static std::shared_ptr<const SkewRing> create(FieldPtr field, unsigned theta_power);

    const GaloisField& field() const noexcept { return *field_; }
    const FieldPtr& field_ptr() const noexcept { return field_; }
    const Automorphism& theta() const noexcept { return theta_; }

    SkewPoly zero() const;
    SkewPoly one() const;
    SkewPoly constant(Elem c) const;
    /// c X^k.
    SkewPoly monomial(Elem c, std::size_t k) const;
    SkewPoly x_pow(std::size_t k) const;
    /// X^n - 1.
    SkewPoly x_n_minus_one(std::size_t n) const;
    /// X - beta.
    SkewPoly linear(Elem beta) const;
    /// Ascending coefficients; trailing zeros are dropped.
    SkewPoly from_coeffs(std::vector<Elem> coeffs) const;

  private:
    struct Token {};

  public:
    SkewRing(Token, FieldPtr field, unsigned theta_power);

  private:
    FieldPtr field_;
    Automorphism theta_;
};

using RingPtr = std::shared_ptr<const SkewRing>;

class RingMismatch : public std::invalid_argument {
  public:
    RingMismatch() : std::invalid_argument("operands belong to different skew polynomial rings") {}
};

/// Element of F_q[X; theta]. Coefficients are stored ascending by degree;
/// the zero polynomial has no coefficients.
class SkewPoly {
  public:
    SkewPoly(RingPtr ring, std::vector<Elem> coeffs);

    const SkewRing& ring() const noexcept { return *ring_; }
    const RingPtr& ring_ptr() const noexcept { return ring_; }
    const GaloisField& field() const noexcept { return ring_->field(); }

    std::span<const Elem> coeffs() const noexcept { return c_; }
    /// Coefficient of X^i, zero past the degree.
    Elem coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }
    Elem lead() const noexcept { return c_.empty() ? 0 : c_.back(); }
    /// Number of nonzero coefficients.
    std::size_t weight() const noexcept;

    SkewPoly operator+(const SkewPoly& o) const;
    SkewPoly operator-(const SkewPoly& o) const;
    SkewPoly operator-() const;
    /// Skew product.
    SkewPoly operator*(const SkewPoly& o) const;

    bool operator==(const SkewPoly& o) const noexcept {
        return ring_ == o.ring_ && c_ == o.c_;
    }
    /// Lexicographic on (degree, coefficients from the top); used for
    /// canonical ordering of divisor sets.
    bool operator<(const SkewPoly& o) const noexcept;

  private:
    void check_ring(const SkewPoly& o) const;

    RingPtr ring_;
    std::vector<Elem> c_;
};

struct DivMod {
    SkewPoly quotient;
    SkewPoly remainder;
};

SkewPoly skew_mul(const SkewPoly& f, const SkewPoly& g);
/// f = quotient * g + remainder, deg remainder < deg g.
DivMod right_divmod(const SkewPoly& f, const SkewPoly& g);
/// f = g * quotient + remainder, deg remainder < deg g.
DivMod left_divmod(const SkewPoly& f, const SkewPoly& g);

/// c f with c a degree-0 left factor: plain scaling of every coefficient.
SkewPoly left_scale(Elem c, const SkewPoly& f);
/// lc(f)^{-1} f.
SkewPoly monic(const SkewPoly& f);

/// Monic greatest common right divisor.
SkewPoly rgcd(const SkewPoly& f, const SkewPoly& g);
/// Monic least common left multiple.
SkewPoly lclm(const SkewPoly& f, const SkewPoly& g);

/// Bezout data of the right Euclidean algorithm: u f + v g = gcd, where
/// gcd is not normalized.
struct RightBezout {
    SkewPoly gcd;
    SkewPoly u;
    SkewPoly v;
    /// Cofactors at termination: lcm_u f + lcm_v g = 0.
    SkewPoly lcm_u;
    SkewPoly lcm_v;
};
RightBezout right_extended_euclid(const SkewPoly& f, const SkewPoly& g);

bool is_central(const SkewPoly& f);

/// N_k(beta) = beta theta(beta) ... theta^{k-1}(beta), the remainder of X^k by X - beta.
Elem norm_power(const Automorphism& theta, Elem beta, std::size_t k);
/// Remainder of the right division of f by X - beta.
Elem eval_rem_linear(const SkewPoly& f, Elem beta);

/// Canonical representative of f in F_q[X;theta]/(X^n - 1).
SkewPoly mod_xn_minus_1(const SkewPoly& f, std::size_t n);

/// Sparse commutative polynomial over GF(q) in z.
class TildePoly {
  public:
    using Term = std::pair<std::uint64_t, Elem>;

    explicit TildePoly(const GaloisField& field) : field_(&field) {}
    TildePoly(const GaloisField& field, std::vector<Term> terms);
    /// Dense ascending coefficients.
    static TildePoly from_dense(const GaloisField& field, std::span<const Elem> coeffs);
    static TildePoly monomial(const GaloisField& field, Elem c, std::uint64_t k);

    const GaloisField& field() const noexcept { return *field_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    /// -1 for zero.
    long long degree() const noexcept {
        return terms_.empty() ? -1 : static_cast<long long>(terms_.back().first);
    }
    Elem coeff(std::uint64_t k) const noexcept;
    Elem lead() const noexcept { return terms_.empty() ? 0 : terms_.back().second; }
    Elem eval(Elem z) const;

    TildePoly operator+(const TildePoly& o) const;
    TildePoly operator-(const TildePoly& o) const;
    TildePoly operator*(const TildePoly& o) const;
    TildePoly scaled(Elem c) const;
    /// Drops every term of degree >= k.
    TildePoly truncated(std::uint64_t k) const;
    std::pair<TildePoly, TildePoly> divmod(const TildePoly& g) const;

    bool operator==(const TildePoly& o) const noexcept {
        return field_ == o.field_ && terms_ == o.terms_;
    }

  private:
    const GaloisField* field_;
    std::vector<Term> terms_;
};

/// P~ = sum a_k z^(2^k - 1); defined for the squaring Frobenius only.
TildePoly tilde_poly(const SkewPoly& f);

}  // namespace skewcode
