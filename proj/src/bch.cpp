#include "skewcode/bch.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>

#include "skewcode/divisor_search.hpp"

namespace skewcode {

namespace {

TildePoly constant(const GaloisField& F, Elem c) { return TildePoly::monomial(F, c, 0); }

// Cartesian product over the per-locator position lists, first list slowest.
// Combinations that reuse a position are skipped.
std::vector<Codeword> build_candidates(const std::vector<std::vector<std::size_t>>& positions,
                                       const std::vector<Elem>& mags, std::size_t n) {
    std::vector<Codeword> out;
    if (positions.empty()) return out;
    for (const auto& p : positions)
        if (p.empty()) return out;
    std::vector<std::size_t> idx(positions.size(), 0);
    while (true) {
        Codeword e(n, 0);
        bool distinct = true;
        for (std::size_t k = 0; k < positions.size(); ++k) {
            const std::size_t i = positions[k][idx[k]];
            if (e[i] != 0) distinct = false;
            e[i] = mags[k];
        }
        if (distinct) out.push_back(std::move(e));
        std::size_t k = positions.size();
        while (k > 0) {
            --k;
            if (++idx[k] < positions[k].size()) break;
            idx[k] = 0;
            if (k == 0) return out;
        }
    }
}

}  // namespace

void require_bch_setting(const SkewRing& ring, std::size_t n) {
    const auto& F = ring.field();
    if (F.characteristic() != 2 || F.degree() != n)
        throw std::invalid_argument("skew-BCH decoding needs q = 2^n");
    if (n % 2 != 0) throw std::invalid_argument("skew-BCH decoding needs n even");
    if (ring.theta().power() != 1) throw std::invalid_argument("skew-BCH decoding needs theta(a) = a^2");
    if (n >= 64) throw std::invalid_argument("length too large for 2^i - 1 exponents");
}

SkewPoly bch_generator(const RingPtr& ring, std::size_t n, std::size_t designed_distance) {
    require_bch_setting(*ring, n);
    if (designed_distance < 2 || designed_distance > n + 1)
        throw std::invalid_argument("designed distance must satisfy 2 <= d <= n + 1");
    const auto& F = ring->field();
    SkewPoly g = ring->linear(F.antilog(1));
    for (std::size_t k = 2; k < designed_distance; ++k)
        g = lclm(g, ring->linear(F.antilog(static_cast<std::int64_t>(k))));
    if (!is_right_divisor(g, n))
        throw std::domain_error("lclm of the linear factors does not right-divide X^n - 1");
    return g;
}

SkewBchCode::SkewBchCode(SkewCyclicCode code, std::size_t designed_distance)
    : code_(std::move(code)), d_(designed_distance) {
    require_bch_setting(code_.ring(), code_.length());
    if (d_ < 2) throw std::invalid_argument("designed distance must be at least 2");
    const auto& F = code_.field();
    for (std::size_t k = 1; k < d_; ++k)
        if (eval_rem_linear(code_.generator(), F.antilog(static_cast<std::int64_t>(k))) != 0)
            throw std::invalid_argument("X - alpha^" + std::to_string(k) + " is not a right factor of G");
}

TildePoly syndrome(const SkewPoly& received, std::size_t designed_distance) {
    const auto& F = received.field();
    std::vector<Elem> s(designed_distance > 0 ? designed_distance - 1 : 0);
    for (std::size_t k = 1; k < designed_distance; ++k)
        s[k - 1] = eval_rem_linear(received, F.antilog(static_cast<std::int64_t>(k)));
    return TildePoly::from_dense(F, s);
}

KeyEquationSolution key_equation_solve(const TildePoly& S, std::size_t designed_distance, std::size_t t) {
    const auto& F = S.field();
    if (S.is_zero()) throw std::invalid_argument("zero syndrome has no key equation");
    const TildePoly zero(F);
    KeyEquationSolution sol{zero, zero, {}};
    sol.steps.push_back({zero, TildePoly::monomial(F, 1, designed_distance - 1), zero, constant(F, 1)});
    sol.steps.push_back({zero, S, constant(F, 1), zero});
    const auto small = [&](const TildePoly& r) { return r.degree() < static_cast<long long>(t); };
    while (!small(sol.steps.back().r)) {
        const auto& prev2 = sol.steps[sol.steps.size() - 2];
        const auto& prev1 = sol.steps.back();
        auto [q, r] = prev2.r.divmod(prev1.r);
        EuclidStep next{q, r, prev2.u - q * prev1.u, prev2.v - q * prev1.v};
        sol.steps.push_back(std::move(next));
    }
    const auto& last = sol.steps.back();
    const Elem u0 = last.u.coeff(0);
    if (u0 == 0) throw DecodeError(DecodeFailure::KeyEquation, "U_k(0) = 0: too many errors");
    const Elem inv = F.inv(u0);
    sol.sigma = last.u.scaled(inv);
    sol.omega = last.r.scaled(inv);
    return sol;
}

std::vector<std::uint64_t> locate(const TildePoly& sigma) {
    const auto& F = sigma.field();
    const std::uint64_t order = F.order() - 1;
    std::vector<std::uint64_t> js;
    for (std::uint64_t e = 0; e < order; ++e)
        if (sigma.eval(F.antilog(static_cast<std::int64_t>(e))) == 0) js.push_back((order - e) % order);
    return js;
}

std::vector<Elem> magnitudes(const TildePoly& omega, const std::vector<std::uint64_t>& js) {
    const auto& F = omega.field();
    std::vector<Elem> out;
    out.reserve(js.size());
    for (std::size_t k = 0; k < js.size(); ++k) {
        const auto jk = static_cast<std::int64_t>(js[k]);
        const Elem x = F.antilog(-jk);
        Elem denom = 1;
        for (std::size_t l = 0; l < js.size(); ++l) {
            if (l == k) continue;
            denom = F.mul(denom, F.sub(1, F.antilog(static_cast<std::int64_t>(js[l]) - jk)));
        }
        if (denom == 0) throw DecodeError(DecodeFailure::Magnitude, "repeated locator exponent");
        out.push_back(F.div(F.mul(x, omega.eval(x)), denom));
    }
    return out;
}

PositionCandidates position_candidates(std::uint64_t j, std::size_t n, std::uint64_t q_minus_1) {
    PositionCandidates pc;
    for (std::size_t i = 0; i < n && i < 64; ++i) {
        const std::uint64_t v = (std::uint64_t{1} << i) - 1;
        if (v % q_minus_1 == j % q_minus_1) pc.refined.push_back(i);
        if (v % n == j % n) pc.mod_n.push_back(i);
    }
    return pc;
}

std::string to_string(DecodeFailure kind) {
    switch (kind) {
        case DecodeFailure::KeyEquation: return "key-equation";
        case DecodeFailure::Locator: return "locator";
        case DecodeFailure::Magnitude: return "magnitude";
        case DecodeFailure::NoCandidate: return "no-candidate";
        case DecodeFailure::MultipleCandidates: return "multiple-candidates";
    }
    return "?";
}

DecodeResult decode(const SkewBchCode& bch, std::span<const Elem> received, const DecodeOptions& options) {
    const auto& code = bch.code();
    const auto& F = code.field();
    const std::size_t n = code.length();
    if (received.size() != n) throw std::invalid_argument("received word length differs from n");
    const SkewPoly b = code.to_poly(received);

    DecodeResult res{Codeword(n, 0), Codeword(received.begin(), received.end()), syndrome(b, bch.designed_distance()),
                     std::nullopt, {}, {}, {}, {}, {}, 0};
    if (res.syndrome.is_zero()) return res;

    res.key_equation = key_equation_solve(res.syndrome, bch.designed_distance(), bch.correctable());
    const TildePoly& sigma = res.key_equation->sigma;
    res.js = locate(sigma);
    if (static_cast<long long>(res.js.size()) != sigma.degree())
        throw DecodeError(DecodeFailure::Locator, "locator has " + std::to_string(res.js.size()) +
                                                      " distinct roots but degree " + std::to_string(sigma.degree()));
    for (auto j : res.js) res.roots.push_back(F.antilog(-static_cast<std::int64_t>(j)));
    res.magnitudes = magnitudes(res.key_equation->omega, res.js);

    std::vector<std::vector<std::size_t>> refined, mod_n;
    for (auto j : res.js) {
        auto pc = position_candidates(j, n, F.order() - 1);
        refined.push_back(std::move(pc.refined));
        mod_n.push_back(std::move(pc.mod_n));
    }
    res.mod_n_candidates = build_candidates(mod_n, res.magnitudes, n);

    std::vector<Codeword> survivors;
    auto trial = [&](const std::vector<Codeword>& list) {
        for (const auto& e : list) {
            res.trialed.push_back(e);
            ++res.division_tests;
            Codeword a(n);
            for (std::size_t i = 0; i < n; ++i) a[i] = F.sub(received[i], e[i]);
            if (code.is_codeword(a)) survivors.push_back(e);
        }
    };
    if (options.strategy == PositionStrategy::RefinedFirst) {
        trial(build_candidates(refined, res.magnitudes, n));
        if (survivors.empty()) trial(res.mod_n_candidates);
    } else {
        trial(res.mod_n_candidates);
    }

    if (survivors.empty()) throw DecodeError(DecodeFailure::NoCandidate, "no candidate error yields a codeword");
    std::sort(survivors.begin(), survivors.end());
    survivors.erase(std::unique(survivors.begin(), survivors.end()), survivors.end());
    if (survivors.size() > 1)
        throw DecodeError(DecodeFailure::MultipleCandidates,
                          std::to_string(survivors.size()) + " candidate errors yield codewords");
    res.error = survivors.front();
    for (std::size_t i = 0; i < n; ++i) res.corrected[i] = F.sub(received[i], res.error[i]);
    return res;
}

RoundTripStats roundtrip(const SkewBchCode& bch, std::uint64_t trials, std::size_t max_errors, std::uint64_t seed,
                         const DecodeOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    const auto& code = bch.code();
    const auto& F = code.field();
    const std::size_t n = code.length();
    if (max_errors > n) throw std::invalid_argument("more errors than positions");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Elem> any(0, F.order() - 1), nonzero(1, F.order() - 1);
    std::uniform_int_distribution<std::size_t> weight(0, max_errors);
    RoundTripStats stats;
    std::vector<std::size_t> positions(n);
    for (std::uint64_t t = 0; t < trials; ++t) {
        Codeword msg(code.dimension());
        for (auto& m : msg) m = any(rng);
        const Codeword c = code.encode(msg);
        std::iota(positions.begin(), positions.end(), 0);
        std::shuffle(positions.begin(), positions.end(), rng);
        Codeword e(n, 0), b = c;
        const std::size_t w = weight(rng);
        for (std::size_t k = 0; k < w; ++k) {
            e[positions[k]] = nonzero(rng);
            b[positions[k]] = F.add(b[positions[k]], e[positions[k]]);
        }
        ++stats.trials;
        try {
            const auto res = decode(bch, b, options);
            if (res.error == e && res.corrected == c)
                ++stats.successes;
            else
                ++stats.failures["wrong"];
        } catch (const DecodeError& err) {
            ++stats.failures[to_string(err.kind())];
        }
    }
    stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return stats;
}

}  // namespace skewcode
