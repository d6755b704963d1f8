#include "skewcode/code.hpp"

#include <algorithm>
#include <stdexcept>

#include "skewcode/divisor_search.hpp"

namespace skewcode {

std::size_t hamming_weight(std::span<const Elem> word) noexcept {
    return static_cast<std::size_t>(std::count_if(word.begin(), word.end(), [](Elem x) { return x != 0; }));
}

SkewCyclicCode::SkewCyclicCode(RingPtr ring, std::size_t n, SkewPoly g)
    : ring_(std::move(ring)), n_(n), k_(n - static_cast<std::size_t>(g.degree())), g_(std::move(g)) {
    rows_.reserve(k_);
    for (std::size_t i = 0; i < k_; ++i) {
        const SkewPoly row = ring_->x_pow(i) * g_;
        Codeword w(n_, 0);
        std::copy(row.coeffs().begin(), row.coeffs().end(), w.begin());
        rows_.push_back(std::move(w));
    }
}

SkewCyclicCode SkewCyclicCode::from_generator(RingPtr ring, std::size_t n, const SkewPoly& generator) {
    require_theta_cyclic_length(*ring, n);
    if (generator.is_zero()) throw std::invalid_argument("generator polynomial is zero");
    if (generator.degree() >= static_cast<long>(n))
        throw std::invalid_argument("generator degree must be below n (the zero code is not supported)");
    SkewPoly g = monic(generator);
    if (!is_right_divisor(g, n)) throw std::invalid_argument("generator does not right-divide X^n - 1");
    return SkewCyclicCode(std::move(ring), n, std::move(g));
}

Codeword SkewCyclicCode::encode(std::span<const Elem> message) const {
    if (message.size() != k_)
        throw std::invalid_argument("message length " + std::to_string(message.size()) + " != k = " +
                                    std::to_string(k_));
    const auto& F = field();
    Codeword w(n_, 0);
    for (std::size_t i = 0; i < k_; ++i) {
        if (message[i] == 0) continue;
        for (std::size_t j = 0; j < n_; ++j) w[j] = F.add(w[j], F.mul(message[i], rows_[i][j]));
    }
    return w;
}

bool SkewCyclicCode::is_codeword(std::span<const Elem> word) const {
    if (word.size() != n_) throw std::invalid_argument("word length differs from n");
    return right_divmod(to_poly(word), g_).remainder.is_zero();
}

SkewPoly SkewCyclicCode::to_poly(std::span<const Elem> word) const {
    return ring_->from_coeffs(std::vector<Elem>(word.begin(), word.end()));
}

Codeword SkewCyclicCode::to_word(const SkewPoly& f) const {
    const SkewPoly r = mod_xn_minus_1(f, n_);
    Codeword w(n_, 0);
    std::copy(r.coeffs().begin(), r.coeffs().end(), w.begin());
    return w;
}

Codeword theta_shift(const Automorphism& theta, std::span<const Elem> word) {
    Codeword out(word.size(), 0);
    if (word.empty()) return out;
    out[0] = theta.apply(word.back());
    for (std::size_t i = 1; i < word.size(); ++i) out[i] = theta.apply(word[i - 1]);
    return out;
}

Matrix row_reduce(const GaloisField& F, Matrix rows) {
    if (rows.empty()) return rows;
    const std::size_t cols = rows.front().size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t piv = rank;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[rank], rows[piv]);
        const Elem inv = F.inv(rows[rank][c]);
        for (auto& x : rows[rank]) x = F.mul(inv, x);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][c] == 0) continue;
            const Elem f = rows[r][c];
            for (std::size_t j = 0; j < cols; ++j) rows[r][j] = F.sub(rows[r][j], F.mul(f, rows[rank][j]));
        }
        ++rank;
    }
    rows.resize(rank);
    return rows;
}

Matrix check_matrix_h1(const SkewCyclicCode& code, std::size_t designed_distance) {
    const auto& F = code.field();
    const std::size_t n = code.length();
    if (F.characteristic() != 2 || F.degree() != n || code.ring().theta().power() != 1 || n % 2 != 0)
        throw std::invalid_argument("check matrix H1 needs q = 2^n, n even and theta the squaring Frobenius");
    if (designed_distance < 2) throw std::invalid_argument("designed distance must be at least 2");
    if (n >= 64) throw std::invalid_argument("length too large for 2^i - 1 exponents");
    for (std::size_t s = 1; s < designed_distance; ++s)
        if (eval_rem_linear(code.generator(), F.antilog(static_cast<std::int64_t>(s))) != 0)
            throw std::invalid_argument("X - alpha^" + std::to_string(s) + " is not a right factor of G");
    const std::uint64_t order = F.order() - 1;
    Matrix h(designed_distance - 1, std::vector<Elem>(n));
    for (std::size_t s = 1; s < designed_distance; ++s)
        for (std::size_t i = 0; i < n; ++i) {
            const std::uint64_t e = (((std::uint64_t{1} << i) - 1) % order) * s % order;
            h[s - 1][i] = F.antilog(static_cast<std::int64_t>(e));
        }
    return h;
}

}  // namespace skewcode
