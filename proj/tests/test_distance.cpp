#include <random>

#include "doctest.h"
#include "skewcode/bch.hpp"
#include "skewcode/distance.hpp"
#include "skewcode/divisor_search.hpp"
#include "test_util.hpp"

using namespace skewcode;
using namespace skewcode::testing;

namespace {

// Minimum weight over all nonzero messages, enumerated as base-q counters.
std::size_t oracle_distance(const SkewCyclicCode& code) {
    const auto& F = code.field();
    const std::size_t k = code.dimension();
    std::vector<Elem> msg(k, 0);
    std::size_t best = code.length() + 1;
    while (true) {
        std::size_t j = 0;
        while (j < k && ++msg[j] == F.order()) msg[j++] = 0;
        if (j == k) break;
        best = std::min(best, hamming_weight(code.encode(msg)));
    }
    return best;
}

std::vector<SkewCyclicCode> small_codes() {
    std::vector<SkewCyclicCode> out;
    const auto f4 = SkewRing::create(GaloisField::gf4(), 1);
    for (std::size_t n : {2, 4, 6, 8})
        for (std::size_t d = 1; d < n; ++d)
            for (const auto& g : enumerate_right_divisors(f4, n, d).divisors) {
                auto code = SkewCyclicCode::from_generator(f4, n, g);
                if (code.dimension() <= 6) out.push_back(std::move(code));
            }
    const auto f9 = SkewRing::create(GaloisField::gf9(), 1);
    for (std::size_t n : {2, 4})
        for (std::size_t d = 1; d < n; ++d)
            for (const auto& g : enumerate_right_divisors(f9, n, d).divisors)
                out.push_back(SkewCyclicCode::from_generator(f9, n, g));
    const auto f8 = SkewRing::create(GaloisField::create(2, 3, {1, 1, 0, 1}), 1);
    for (std::size_t d = 2; d < 6; ++d)
        for (const auto& g : enumerate_right_divisors(f8, 6, d).divisors)
            out.push_back(SkewCyclicCode::from_generator(f8, 6, g));
    return out;
}

}  // namespace

TEST_CASE("distance examples") {
    const auto R = SkewRing::create(GaloisField::gf4(), 1);
    const auto full = SkewCyclicCode::from_generator(R, 4, R->one());
    CHECK(min_distance_exact(full).distance == 1);
    const auto rep = SkewCyclicCode::from_generator(R, 2, R->linear(1));
    const auto rep_report = min_distance_exact(rep);
    CHECK(rep_report.distance == 2);
    CHECK(rep_report.exact());
    CHECK(rep_report.messages == 4);  // the zero message is visited too
    REQUIRE(rep_report.witness);
    CHECK(rep.is_codeword(*rep_report.witness));
    CHECK(hamming_weight(*rep_report.witness) == 2);
}

TEST_CASE("exact distance equals direct enumeration") {
    const auto codes = small_codes();
    CHECK(codes.size() > 200);
    for (const auto& code : codes) {
        for (unsigned threads : {1u, 3u}) {
            DistanceOptions opt;
            opt.threads = threads;
            const auto rep = min_distance_exact(code, opt);
            REQUIRE(rep.distance == oracle_distance(code));
            REQUIRE(rep.exact());
            REQUIRE(rep.witness);
            CHECK(code.is_codeword(*rep.witness));
            CHECK(hamming_weight(*rep.witness) == rep.distance);
        }
        const auto rep = min_distance_exact(code);
        CHECK(rep.distance <= code.length() - code.dimension() + 1);
        CHECK(rep.distance <= code.generator().weight());
    }
}

TEST_CASE("upper bound never undercuts the exact distance") {
    std::uint64_t seed = 1;
    for (const auto& code : small_codes()) {
        const auto exact = min_distance_exact(code).distance;
        const auto up = min_distance_upper(code, 50, seed++, 1, 0);
        CHECK(up.status == DistanceStatus::UpperBound);
        CHECK(up.distance >= exact);
        CHECK(up.messages >= 50);
        REQUIRE(up.witness);
        CHECK(code.is_codeword(*up.witness));
        CHECK(hamming_weight(*up.witness) == up.distance);
    }
}

TEST_CASE("upper bound is deterministic and falls back to enumeration") {
    const auto R = SkewRing::create(GaloisField::gf4(), 1);
    const auto g = enumerate_right_divisors(R, 8, 4).divisors.back();
    const auto code = SkewCyclicCode::from_generator(R, 8, g);
    const auto a = min_distance_upper(code, 100, 5, 1);
    const auto b = min_distance_upper(code, 100, 5, 4);
    CHECK(a.distance == b.distance);
    CHECK(a.witness == b.witness);
    const auto fallback = min_distance_upper(code, 1000, 5);
    CHECK(fallback.exact());
    CHECK(fallback.distance == min_distance_exact(code).distance);
}

TEST_CASE("budget and target") {
    const auto R = SkewRing::create(GaloisField::gf4(), 1);
    const auto code = SkewCyclicCode::from_generator(R, 8, R->one());
    DistanceOptions opt;
    opt.budget = 1000;
    CHECK_THROWS_AS(min_distance_exact(code, opt), BudgetExceeded);
    CHECK(message_space_size(code) == 65536);

    const auto g = enumerate_right_divisors(R, 8, 4).divisors.front();
    const auto c2 = SkewCyclicCode::from_generator(R, 8, g);
    const auto exact = min_distance_exact(c2).distance;
    DistanceOptions t;
    t.target = exact;
    const auto hit = min_distance_exact(c2, t);
    CHECK(hit.status != DistanceStatus::UpperBound);
    CHECK(hit.distance == exact);
    t.target = exact - 1;
    const auto miss = min_distance_exact(c2, t);
    CHECK(miss.status == DistanceStatus::Exact);
    CHECK(miss.distance == exact);
}

TEST_CASE("skew-BCH codes reach their designed distance") {
    for (std::size_t n : {4, 6}) {
        std::vector<unsigned> modulus = n == 4 ? std::vector<unsigned>{1, 1, 0, 0, 1}
                                               : std::vector<unsigned>{1, 1, 0, 0, 0, 0, 1};
        const auto R = SkewRing::create(GaloisField::create(2, static_cast<unsigned>(n), modulus), 1);
        for (std::size_t d = 2; d <= n; ++d) {
            const auto code = SkewCyclicCode::from_generator(R, n, bch_generator(R, n, d));
            auto size = message_space_size(code);
            if (!size || *size > (1u << 20)) continue;
            CHECK(min_distance_exact(code).distance >= d);
        }
    }
}
