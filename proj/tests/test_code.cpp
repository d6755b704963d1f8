#include <random>
#include <set>

#include "doctest.h"
#include "skewcode/bch.hpp"
#include "skewcode/code.hpp"
#include "skewcode/divisor_search.hpp"
#include "skewcode/io.hpp"
#include "test_util.hpp"

using namespace skewcode;
using namespace skewcode::testing;

namespace {

const char* kTable30 =
    "x^14 + x^13 + a*x^11 + x^10 + x^9 + x^8 + a*x^7 + x^6 + a*x^5 + a^2*x^4 + a^2*x^2 + a*x + a^2";
const char* kTable44 =
    "x^24 + x^21 + x^20 + a^7*x^19 + a^3*x^18 + 2*x^17 + a^3*x^16 + a^5*x^14 + a^5*x^13 + 2*x^12 + "
    "a^2*x^10 + a^7*x^9 + 2*x^6 + a^5*x^5 + a^7*x^4 + a^3*x^3 + a^7*x^2 + a^2*x + 2";

Codeword random_word(const GaloisField& F, std::size_t n, std::mt19937_64& rng) {
    Codeword w(n);
    for (auto& x : w) x = random_elem(F, rng);
    return w;
}

// Determinant over GF(q) by elimination.
Elem determinant(const GaloisField& F, Matrix a) {
    const std::size_t n = a.size();
    Elem det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a[piv][c] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            std::swap(a[piv], a[c]);
            det = F.neg(det);
        }
        det = F.mul(det, a[c][c]);
        const Elem inv = F.inv(a[c][c]);
        for (std::size_t r = c + 1; r < n; ++r) {
            const Elem f = F.mul(a[r][c], inv);
            for (std::size_t k = c; k < n; ++k) a[r][k] = F.sub(a[r][k], F.mul(f, a[c][k]));
        }
    }
    return det;
}

void check_shift_closure(const SkewCyclicCode& code) {
    for (const auto& row : code.generator_matrix()) {
        Codeword w = row;
        for (std::size_t t = 0; t < code.length(); ++t) {
            w = theta_shift(code.ring().theta(), w);
            REQUIRE(code.is_codeword(w));
        }
    }
}

}  // namespace

TEST_CASE("construction from table generators") {
    const auto R4 = SkewRing::create(GaloisField::gf4(), 1);
    const auto c30 = SkewCyclicCode::from_generator(R4, 30, io::parse_poly(R4, kTable30));
    CHECK(c30.dimension() == 16);
    CHECK(c30.generator_matrix().size() == 16);
    check_shift_closure(c30);
    const auto R9 = SkewRing::create(GaloisField::gf9(), 1);
    const auto c44 = SkewCyclicCode::from_generator(R9, 44, io::parse_poly(R9, kTable44));
    CHECK(c44.dimension() == 20);
    check_shift_closure(c44);
}

TEST_CASE("construction edge cases and errors") {
    const auto R = SkewRing::create(GaloisField::gf4(), 1);
    const auto full = SkewCyclicCode::from_generator(R, 6, R->one());
    CHECK(full.dimension() == 6);
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) CHECK(full.generator_matrix()[i][j] == (i == j ? 1u : 0u));
    CHECK_THROWS(SkewCyclicCode::from_generator(R, 5, R->one()));
    CHECK_THROWS(SkewCyclicCode::from_generator(R, 6, R->zero()));
    CHECK_THROWS(SkewCyclicCode::from_generator(R, 6, R->x_n_minus_one(6)));
    CHECK_THROWS(SkewCyclicCode::from_generator(R, 6, R->x_pow(1)));
    // a non-monic right divisor is normalized
    const Elem a = R->field().antilog(1);
    const auto scaled = SkewCyclicCode::from_generator(R, 2, R->from_coeffs({a, a}));
    CHECK(scaled.generator() == R->from_coeffs({1, 1}));
}

TEST_CASE("encoding examples") {
    const auto R = SkewRing::create(GaloisField::gf4(), 1);
    const auto code = SkewCyclicCode::from_generator(R, 30, io::parse_poly(R, kTable30));
    CHECK(hamming_weight(code.encode(Codeword(16, 0))) == 0);
    Codeword e0(16, 0);
    e0[0] = 1;
    Codeword g(code.generator().coeffs().begin(), code.generator().coeffs().end());
    g.resize(30, 0);
    CHECK(code.encode(e0) == g);
    CHECK_THROWS(code.encode(Codeword(15, 0)));

    const auto big = SkewRing::create(GaloisField::gf1024(), 1);
    const auto G = big->from_coeffs(from_powers(big->field(), {777, 1020, 670, 878, 643, 345, 0}));
    const auto c10 = SkewCyclicCode::from_generator(big, 10, G);
    const auto a = from_powers(big->field(), {555, 252, 696, 87, 29, 567, 16, 650, 547, 654});
    const auto b = from_powers(big->field(), {557, 252, 696, 87, 29, 567, 16, 650, 775, 818});
    CHECK(c10.is_codeword(a));
    CHECK_FALSE(c10.is_codeword(b));
}

TEST_CASE("encode matches message times generator matrix") {
    const auto R = SkewRing::create(GaloisField::gf9(), 1);
    const auto& F = R->field();
    const auto code = SkewCyclicCode::from_generator(R, 44, io::parse_poly(R, kTable44));
    std::mt19937_64 rng(3);
    for (int t = 0; t < 200; ++t) {
        const auto msg = random_word(F, code.dimension(), rng);
        Codeword want(44, 0);
        for (std::size_t i = 0; i < msg.size(); ++i)
            for (std::size_t j = 0; j < 44; ++j)
                want[j] = F.add(want[j], F.mul(msg[i], code.generator_matrix()[i][j]));
        const auto c = code.encode(msg);
        CHECK(c == want);
        // the polynomial view agrees: (sum m_i X^i) G
        CHECK(code.to_word(code.to_poly(msg) * code.generator()) == c);
    }
}

TEST_CASE("theta shift examples") {
    const auto F = GaloisField::gf4();
    const Automorphism th(*F, 1), id(*F, 0);
    const Elem a = F->antilog(1), a2 = F->antilog(2);
    CHECK(theta_shift(th, Codeword{1, a, 0, 0}) == Codeword{0, 1, a2, 0});
    CHECK(theta_shift(th, Codeword(4, 0)) == Codeword(4, 0));
    CHECK(theta_shift(id, Codeword{1, a, a2, 0}) == Codeword{0, 1, a, a2});
}

TEST_CASE("check matrix of the skew-BCH code") {
    const auto big = SkewRing::create(GaloisField::gf1024(), 1);
    const auto& F = big->field();
    const auto code = SkewCyclicCode::from_generator(big, 10, bch_generator(big, 10, 7));
    const auto H = check_matrix_h1(code, 7);
    REQUIRE(H.size() == 6);
    const auto a = from_powers(F, {555, 252, 696, 87, 29, 567, 16, 650, 547, 654});
    for (std::size_t s = 0; s < 6; ++s) {
        REQUIRE(H[s].size() == 10);
        Elem acc = 0;
        for (std::size_t i = 0; i < 10; ++i) acc = F.add(acc, F.mul(H[s][i], a[i]));
        CHECK(acc == 0);
        CHECK(acc == eval_rem_linear(code.to_poly(a), F.antilog(static_cast<std::int64_t>(s + 1))));
    }
    // every choice of 6 columns is nonsingular
    int subsets = 0;
    for (unsigned mask = 0; mask < 1024; ++mask) {
        if (__builtin_popcount(mask) != 6) continue;
        Matrix sub(6);
        for (std::size_t s = 0; s < 6; ++s)
            for (std::size_t i = 0; i < 10; ++i)
                if (mask >> i & 1) sub[s].push_back(H[s][i]);
        CHECK(determinant(F, sub) != 0);
        ++subsets;
    }
    CHECK(subsets == 210);
    std::mt19937_64 rng(9);
    for (int t = 0; t < 100; ++t) {
        const auto c = code.encode(random_word(F, 4, rng));
        for (std::size_t s = 0; s < 6; ++s) {
            Elem acc = 0;
            for (std::size_t i = 0; i < 10; ++i) acc = F.add(acc, F.mul(H[s][i], c[i]));
            CHECK(acc == 0);
        }
    }
    const auto f4 = SkewRing::create(GaloisField::gf4(), 1);
    CHECK_THROWS(check_matrix_h1(SkewCyclicCode::from_generator(f4, 2, f4->linear(1)), 2));
}

TEST_CASE("shift closure and linearity on every enumerated small code") {
    const auto R = SkewRing::create(GaloisField::gf4(), 1);
    const auto& F = R->field();
    std::mt19937_64 rng(21);
    std::size_t codes = 0;
    for (std::size_t n : {2, 4, 6, 8}) {
        for (std::size_t d = 0; d < n; ++d) {
            for (const auto& g : enumerate_right_divisors(R, n, d).divisors) {
                const auto code = SkewCyclicCode::from_generator(R, n, g);
                ++codes;
                check_shift_closure(code);
                CHECK(row_reduce(F, code.generator_matrix()).size() == code.dimension());
                for (int t = 0; t < 5; ++t) {
                    const auto u = code.encode(random_word(F, code.dimension(), rng));
                    const auto v = code.encode(random_word(F, code.dimension(), rng));
                    const Elem c = random_elem(F, rng);
                    Codeword w(n);
                    for (std::size_t i = 0; i < n; ++i) w[i] = F.add(F.mul(c, u[i]), v[i]);
                    CHECK(code.is_codeword(w));
                    CHECK(code.is_codeword(theta_shift(R->theta(), w)));
                    CHECK(code.to_word(code.to_poly(w)) == w);
                }
            }
        }
    }
    CHECK(codes > 100);
}

TEST_CASE("every shift-closed linear code comes from a right divisor") {
    const auto R = SkewRing::create(GaloisField::gf4(), 1);
    const auto& F = R->field();
    std::mt19937_64 rng(33);
    for (std::size_t n : {2, 4, 6}) {
        std::vector<SkewCyclicCode> all;
        for (std::size_t d = 0; d <= n; ++d)
            if (d < n)
                for (const auto& g : enumerate_right_divisors(R, n, d).divisors)
                    all.push_back(SkewCyclicCode::from_generator(R, n, g));
        for (int t = 0; t < 300; ++t) {
            Matrix basis = row_reduce(F, {random_word(F, n, rng)});
            if (basis.empty()) continue;
            while (true) {
                Matrix grown = basis;
                for (const auto& row : basis) grown.push_back(theta_shift(R->theta(), row));
                grown = row_reduce(F, grown);
                if (grown.size() == basis.size()) break;
                basis = grown;
            }
            std::size_t matches = 0;
            for (const auto& code : all)
                if (row_reduce(F, code.generator_matrix()) == basis) ++matches;
            CHECK(matches == 1);
        }
    }
}

TEST_CASE("shift closure on random codewords of random codes") {
    struct Pool {
        RingPtr ring;
        std::size_t n;
        std::vector<SkewPoly> divisors;
    };
    std::vector<Pool> pools;
    const auto add = [&](RingPtr R, std::size_t n) {
        Pool p{R, n, {}};
        for (std::size_t d = 1; d < n; ++d) {
            auto set = find_right_divisors(R, {n, d, DivisorMode::Random, 1 << 16, 200, 5, 1});
            for (auto& g : set.divisors) p.divisors.push_back(std::move(g));
        }
        REQUIRE_FALSE(p.divisors.empty());
        pools.push_back(std::move(p));
    };
    for (std::size_t n : {4, 6, 8, 10, 12}) add(SkewRing::create(GaloisField::gf4(), 1), n);
    for (std::size_t n : {4, 6, 8}) add(SkewRing::create(GaloisField::gf9(), 1), n);
    for (std::size_t n : {3, 6}) add(SkewRing::create(GaloisField::create(2, 3, {1, 1, 0, 1}), 1), n);
    for (std::size_t n : {2, 4, 6}) add(SkewRing::create(GaloisField::create(2, 4, {1, 1, 0, 0, 1}), 2), n);

    std::mt19937_64 rng(41);
    for (int t = 0; t < 10000; ++t) {
        const auto& p = pools[rng() % pools.size()];
        const auto& g = p.divisors[rng() % p.divisors.size()];
        const auto code = SkewCyclicCode::from_generator(p.ring, p.n, g);
        const auto c = code.encode(random_word(code.field(), code.dimension(), rng));
        REQUIRE(code.is_codeword(c));
        CHECK(code.is_codeword(theta_shift(p.ring->theta(), c)));
    }
}
