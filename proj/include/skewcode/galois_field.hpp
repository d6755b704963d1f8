#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace skewcode {

/// Raw field element: the residue's coefficient vector packed base p,
/// value = c_0 + c_1 p + ... + c_{m-1} p^{m-1}.
using Elem = std::uint32_t;

class FieldError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

struct FieldOptions {
    /// Largest field order for which tables are built.
    std::uint64_t max_order = std::uint64_t{1} << 20;
};

/**
 * GF(p^m) presented as GF(p)[y]/(modulus) with a designated primitive
 * element alpha. All multiplicative arithmetic goes through log/antilog
 * tables built at construction; the object is immutable afterwards.
 */
class GaloisField {
  public:
    /// Validates the presentation and builds the tables. When
    /// generator_hint is empty, the primitive element with the smallest
    /// packed value (coefficient vector compared c_{m-1} first) is used.
    static std::shared_ptr<const GaloisField> create(unsigned p, unsigned m,
                                                     std::vector<unsigned> modulus,
                                                     std::optional<Elem> generator_hint = std::nullopt,
                                                     const FieldOptions& options = {});

    /// GF(4) = GF(2)[y]/(y^2+y+1), alpha = y.
    static std::shared_ptr<const GaloisField> gf4();
    /// GF(9) = GF(3)[y]/(y^2-y-1), alpha = y.
    static std::shared_ptr<const GaloisField> gf9();
    /// GF(2^10) with the Conway polynomial y^10+y^6+y^5+y^3+y^2+y+1, alpha = y.
    static std::shared_ptr<const GaloisField> gf1024();

    unsigned characteristic() const noexcept { return p_; }
    unsigned degree() const noexcept { return m_; }
    std::uint32_t order() const noexcept { return q_; }
    const std::vector<unsigned>& modulus() const noexcept { return modulus_; }
    Elem generator() const noexcept { return exp_[1]; }

    Elem zero() const noexcept { return 0; }
    Elem one() const noexcept { return 1; }
    bool contains(Elem x) const noexcept { return x < q_; }

    Elem add(Elem a, Elem b) const noexcept {
        if (p_ == 2) return a ^ b;
        if (!add_table_.empty()) return add_table_[std::size_t{a} * q_ + b];
        return add_digits(a, b);
    }
    Elem neg(Elem a) const noexcept { return p_ == 2 ? a : neg_[a]; }
    Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }

    Elem mul(Elem a, Elem b) const noexcept {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::int64_t e) const;

    /// alpha^k for any integer k (reduced mod q-1).
    Elem antilog(std::int64_t k) const noexcept {
        const std::int64_t n = q_ - 1;
        return exp_[static_cast<std::size_t>(((k % n) + n) % n)];
    }
    /// Exponent in [0, q-1) with alpha^result = x. Throws on zero.
    std::uint32_t log(Elem x) const;

    /// x^(p^s).
    Elem frobenius(Elem x, unsigned s) const noexcept {
        if (x == 0) return 0;
        return exp_[static_cast<std::size_t>((std::uint64_t{log_[x]} * frob_mult_[s % m_]) % (q_ - 1))];
    }

    /// Coefficient vector (c_0..c_{m-1}) of x.
    std::vector<unsigned> digits(Elem x) const;
    Elem from_digits(std::span<const unsigned> digits) const;
    /// Embeds the prime-field integer c (mod p).
    Elem from_int(std::int64_t c) const;

    /// Multiplicative order of a nonzero element.
    std::uint32_t multiplicative_order(Elem x) const;

    /// Distinct prime factors of q-1.
    const std::vector<std::uint32_t>& order_prime_factors() const noexcept { return q1_primes_; }

  private:
    GaloisField() = default;

    Elem add_digits(Elem a, Elem b) const noexcept;
    Elem poly_mul(Elem a, Elem b) const;  // schoolbook, used only while building tables
    Elem poly_pow(Elem a, std::uint64_t e) const;

    unsigned p_ = 0;
    unsigned m_ = 0;
    std::uint32_t q_ = 0;
    std::vector<unsigned> modulus_;
    std::vector<Elem> exp_;           // 2(q-1) entries
    std::vector<std::uint32_t> log_;  // q entries, log_[0] unused
    std::vector<Elem> neg_;
    std::vector<Elem> add_table_;
    std::vector<std::uint64_t> frob_mult_;  // p^s mod (q-1)
    std::vector<std::uint32_t> q1_primes_;
};

using FieldPtr = std::shared_ptr<const GaloisField>;

/// Checked element handle. The owning field must outlive it.
class FieldElement {
  public:
    FieldElement(const GaloisField& field, Elem value);

    const GaloisField& field() const noexcept { return *field_; }
    Elem value() const noexcept { return value_; }
    bool is_zero() const noexcept { return value_ == 0; }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const { return {*field_, field_->neg(value_)}; }
    FieldElement inverse() const { return {*field_, field_->inv(value_)}; }
    FieldElement pow(std::int64_t e) const { return {*field_, field_->pow(value_, e)}; }
    std::uint32_t log() const { return field_->log(value_); }

    bool operator==(const FieldElement& o) const noexcept {
        return field_ == o.field_ && value_ == o.value_;
    }

  private:
    void check_same(const FieldElement& o) const;

    const GaloisField* field_;
    Elem value_;
};

/// Frobenius power x -> x^(p^s), 0 <= s < m.
class Automorphism {
  public:
    Automorphism(const GaloisField& field, unsigned power);

    static Automorphism identity(const GaloisField& field) { return {field, 0}; }

    const GaloisField& field() const noexcept { return *field_; }
    unsigned power() const noexcept { return power_; }
    /// Order of theta in the automorphism group: m / gcd(m, s).
    unsigned order() const noexcept { return order_; }
    bool is_identity() const noexcept { return power_ == 0; }

    Elem apply(Elem x) const noexcept { return field_->frobenius(x, power_); }
    /// theta^j(x) for any integer j, negative meaning the inverse.
    Elem apply_pow(Elem x, std::int64_t j) const noexcept;
    FieldElement operator()(const FieldElement& x) const;

    Automorphism inverse() const { return {*field_, (field_->degree() - power_) % field_->degree()}; }
    /// Size of the fixed field, p^gcd(m, s).
    std::uint32_t fixed_field_order() const noexcept;
    bool fixes(Elem x) const noexcept { return apply(x) == x; }

    bool operator==(const Automorphism& o) const noexcept {
        return field_ == o.field_ && power_ == o.power_;
    }

  private:
    const GaloisField* field_;
    unsigned power_;
    unsigned order_;
};

/// Power notation: "zero" or the decimal exponent k of alpha^k.
std::string to_power_string(const GaloisField& field, Elem x);
/// Inverse of to_power_string. Accepts "zero", "0"-style exponents and "a^k".
Elem parse_power_string(const GaloisField& field, const std::string& text);

}  // namespace skewcode
