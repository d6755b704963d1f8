#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "doctest.h"
#include "skewcode/galois_field.hpp"

using namespace skewcode;

namespace {

// Independent schoolbook arithmetic on digit vectors mod (p, modulus).
std::vector<unsigned> poly_mulmod(unsigned p, const std::vector<unsigned>& modulus, const std::vector<unsigned>& a,
                                  const std::vector<unsigned>& b) {
    const std::size_t m = modulus.size() - 1;
    std::vector<unsigned> c(2 * m, 0);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    for (std::size_t k = 2 * m - 1; k >= m; --k) {
        const unsigned t = c[k];
        if (t == 0) continue;
        for (std::size_t i = 0; i <= m; ++i) c[k - m + i] = (c[k - m + i] + (p - t) * modulus[i]) % p;
    }
    c.resize(m);
    return c;
}

std::vector<unsigned> poly_add(unsigned p, const std::vector<unsigned>& a, const std::vector<unsigned>& b) {
    std::vector<unsigned> c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = (a[i] + b[i]) % p;
    return c;
}

void check_against_schoolbook(const GaloisField& F) {
    const auto& mod = F.modulus();
    for (Elem a = 0; a < F.order(); ++a)
        for (Elem b = 0; b < F.order(); ++b) {
            const auto da = F.digits(a), db = F.digits(b);
            REQUIRE(F.digits(F.mul(a, b)) == poly_mulmod(F.characteristic(), mod, da, db));
            REQUIRE(F.digits(F.add(a, b)) == poly_add(F.characteristic(), da, db));
        }
}

}  // namespace

TEST_CASE("construction of the standard fields") {
    const auto f4 = GaloisField::gf4();
    CHECK(f4->order() == 4);
    CHECK(f4->generator() == f4->from_digits(std::vector<unsigned>{0, 1}));
    CHECK(f4->multiplicative_order(f4->generator()) == 3);

    const auto f9 = GaloisField::gf9();
    CHECK(f9->order() == 9);
    CHECK(f9->multiplicative_order(f9->generator()) == 8);
    CHECK(f9->generator() == f9->from_digits(std::vector<unsigned>{0, 1}));

    const auto f2 = GaloisField::create(2, 1, {1, 1});
    CHECK(f2->order() == 2);
    CHECK(f2->generator() == 1);

    const auto big = GaloisField::gf1024();
    CHECK(big->modulus() == std::vector<unsigned>{1, 1, 1, 1, 0, 1, 1, 0, 0, 0, 1});
    CHECK(big->generator() == 2);
}

TEST_CASE("default generator is the smallest primitive element") {
    // y^2 + 1 over GF(3) is irreducible but y has order 4, so alpha is not y.
    const auto f = GaloisField::create(3, 2, {1, 0, 1});
    CHECK(f->multiplicative_order(f->generator()) == 8);
    Elem smallest = 0;
    for (Elem x = 1; x < 9; ++x) {
        if (f->multiplicative_order(x) != 8) continue;
        auto dx = f->digits(x), ds = f->digits(smallest);
        std::reverse(dx.begin(), dx.end());
        std::reverse(ds.begin(), ds.end());
        if (smallest == 0 || dx < ds) smallest = x;
    }
    CHECK(f->generator() == smallest);
    CHECK_THROWS_AS(GaloisField::create(3, 2, {1, 0, 1}, Elem{f->from_digits(std::vector<unsigned>{0, 1})}),
                    FieldError);
}

TEST_CASE("construction errors") {
    CHECK_THROWS_AS(GaloisField::create(4, 1, {1, 1}), FieldError);           // not prime
    CHECK_THROWS_AS(GaloisField::create(2, 2, {1, 0, 1}), FieldError);        // (y+1)^2
    CHECK_THROWS_AS(GaloisField::create(2, 2, {1, 1, 0}), FieldError);        // not monic
    CHECK_THROWS_AS(GaloisField::create(2, 3, {1, 1, 1}), FieldError);        // wrong length
    CHECK_THROWS_AS(GaloisField::create(2, 21, std::vector<unsigned>(22, 1)), FieldError);  // too large
}

TEST_CASE("arithmetic examples") {
    const auto f4 = GaloisField::gf4();
    const Elem a = f4->antilog(1), a2 = f4->antilog(2);
    CHECK(f4->mul(a, a2) == 1);
    CHECK(f4->add(a, a2) == 1);
    const auto big = GaloisField::gf1024();
    CHECK(big->mul(big->antilog(777), big->antilog(345)) == big->antilog(99));
    CHECK_THROWS_AS(f4->inv(0), std::domain_error);
    CHECK_THROWS_AS(f4->log(0), std::domain_error);
    CHECK(f4->log(1) == 0);
    CHECK(f4->log(a) == 1);
    CHECK(f4->log(a2) == 2);
}

TEST_CASE("table arithmetic matches schoolbook arithmetic") {
    check_against_schoolbook(*GaloisField::gf4());
    check_against_schoolbook(*GaloisField::gf9());
    check_against_schoolbook(*GaloisField::create(2, 5, {1, 0, 1, 0, 0, 1}));
    check_against_schoolbook(*GaloisField::create(5, 2, {2, 1, 1}));

    const auto big = GaloisField::gf1024();
    std::mt19937_64 rng(1);
    for (int i = 0; i < 20000; ++i) {
        const Elem a = static_cast<Elem>(rng() % 1024), b = static_cast<Elem>(rng() % 1024);
        REQUIRE(big->digits(big->mul(a, b)) == poly_mulmod(2, big->modulus(), big->digits(a), big->digits(b)));
    }
}

TEST_CASE("log and antilog are inverse") {
    for (const auto& F : {GaloisField::gf4(), GaloisField::gf9(), GaloisField::gf1024()}) {
        for (Elem x = 1; x < F->order(); ++x) REQUIRE(F->antilog(F->log(x)) == x);
        for (std::uint32_t k = 0; k + 1 < F->order(); ++k) REQUIRE(F->log(F->antilog(k)) == k);
        for (auto r : F->order_prime_factors()) CHECK(F->pow(F->generator(), (F->order() - 1) / r) != 1);
    }
}

TEST_CASE("inverse, division and powers") {
    const auto F = GaloisField::gf9();
    for (Elem x = 1; x < 9; ++x) {
        CHECK(F->mul(x, F->inv(x)) == 1);
        CHECK(F->pow(x, -1) == F->inv(x));
        CHECK(F->pow(x, 8) == 1);
        CHECK(F->sub(x, x) == 0);
        CHECK(F->add(x, F->neg(x)) == 0);
    }
    CHECK(F->pow(0, 0) == 1);
    CHECK(F->pow(0, 3) == 0);
    CHECK(F->from_int(-1) == F->from_int(2));
}

TEST_CASE("frobenius examples") {
    const auto f4 = GaloisField::gf4();
    CHECK(Automorphism(*f4, 1).apply(f4->antilog(1)) == f4->antilog(2));
    const auto f9 = GaloisField::gf9();
    CHECK(Automorphism(*f9, 1).apply(f9->antilog(1)) == f9->antilog(3));
    for (Elem x = 0; x < 9; ++x) CHECK(Automorphism::identity(*f9).apply(x) == x);
    CHECK_THROWS_AS(Automorphism(*f9, 2), FieldError);
}

TEST_CASE("frobenius is a field automorphism of the stated order") {
    const auto f64 = GaloisField::create(2, 6, {1, 1, 0, 0, 0, 0, 1});
    const auto f81 = GaloisField::create(3, 4, {2, 0, 0, 1, 1});
    for (const auto& F : {GaloisField::gf4(), GaloisField::gf9(), f64, f81, GaloisField::gf1024()}) {
        const unsigned m = F->degree();
        for (unsigned s = 0; s < m; ++s) {
            const Automorphism th(*F, s);
            if (F->order() <= 81) {
                for (Elem x = 0; x < F->order(); ++x)
                    for (Elem y = 0; y < F->order(); ++y) {
                        REQUIRE(th.apply(F->mul(x, y)) == F->mul(th.apply(x), th.apply(y)));
                        REQUIRE(th.apply(F->add(x, y)) == F->add(th.apply(x), th.apply(y)));
                    }
            }
            // smallest t >= 1 with theta^t = id
            unsigned t = 1;
            while (true) {
                bool id = true;
                for (Elem x = 0; x < F->order() && id; ++x) {
                    Elem y = x;
                    for (unsigned i = 0; i < s * t; ++i) y = F->pow(y, static_cast<std::int64_t>(F->characteristic()));
                    id = y == x;
                }
                if (id) break;
                ++t;
            }
            CHECK(th.order() == t);
            CHECK(th.order() == (s == 0 ? 1 : m / std::gcd(m, s)));
            std::uint32_t fixed = 0;
            for (Elem x = 0; x < F->order(); ++x) fixed += th.fixes(x);
            CHECK(fixed == th.fixed_field_order());
            for (Elem x = 0; x < F->order(); ++x) {
                REQUIRE(th.apply(x) == F->pow(x, static_cast<std::int64_t>(std::pow(F->characteristic(), s))));
                REQUIRE(th.apply_pow(th.apply(x), -1) == x);
                REQUIRE(th.inverse().apply(th.apply(x)) == x);
            }
        }
    }
}

TEST_CASE("checked elements") {
    const auto f4 = GaloisField::gf4();
    const auto f9 = GaloisField::gf9();
    const FieldElement a(*f4, f4->antilog(1));
    CHECK((a * a * a).value() == 1);
    CHECK((a + a.pow(2)).value() == 1);
    CHECK((a / a).value() == 1);
    CHECK(a.inverse().log() == 2);
    CHECK_THROWS_AS(a + FieldElement(*f9, 1), FieldError);
    CHECK_THROWS_AS(FieldElement(*f4, 4), FieldError);
    CHECK_THROWS_AS(FieldElement(*f4, 0).inverse(), std::domain_error);
}

TEST_CASE("power notation") {
    const auto F = GaloisField::gf1024();
    CHECK(to_power_string(*F, 0) == "zero");
    CHECK(to_power_string(*F, F->antilog(777)) == "777");
    CHECK(parse_power_string(*F, "zero") == 0);
    CHECK(parse_power_string(*F, "345") == F->antilog(345));
    CHECK(parse_power_string(*F, "a^345") == F->antilog(345));
    CHECK_THROWS(parse_power_string(*F, "banana"));
}
