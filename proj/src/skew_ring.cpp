#include "skewcode/skew_ring.hpp"

#include <algorithm>
#include <map>

namespace skewcode {

namespace {

void trim(std::vector<Elem>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

// Subtracts (c X^shift) * g from acc in place.
void sub_left_term_times(const SkewRing& ring, std::vector<Elem>& acc, Elem c, std::size_t shift,
                         std::span<const Elem> g) {
    const auto& F = ring.field();
    const auto& th = ring.theta();
    for (std::size_t j = 0; j < g.size(); ++j) {
        if (g[j] == 0) continue;
        acc[shift + j] = F.sub(acc[shift + j], F.mul(c, th.apply_pow(g[j], static_cast<std::int64_t>(shift))));
    }
}

// Subtracts g * (c X^shift) from acc in place.
void sub_times_right_term(const SkewRing& ring, std::vector<Elem>& acc, std::span<const Elem> g, Elem c,
                          std::size_t shift) {
    const auto& F = ring.field();
    const auto& th = ring.theta();
    for (std::size_t j = 0; j < g.size(); ++j) {
        if (g[j] == 0) continue;
        acc[shift + j] = F.sub(acc[shift + j], F.mul(g[j], th.apply_pow(c, static_cast<std::int64_t>(j))));
    }
}

void require_same_ring(const SkewPoly& f, const SkewPoly& g) {
    if (f.ring_ptr() == g.ring_ptr()) return;
    if (f.ring().field_ptr() == g.ring().field_ptr() && f.ring().theta() == g.ring().theta()) return;
    throw RingMismatch();
}

}  // namespace

SkewRing::SkewRing(Token, FieldPtr field, unsigned theta_power)
    : field_(std::move(field)), theta_(*field_, theta_power) {}

std::shared_ptr<const SkewRing> SkewRing::create(FieldPtr field, unsigned theta_power) {
    if (!field) throw std::invalid_argument("null field");
    return std::make_shared<const SkewRing>(Token{}, std::move(field), theta_power);
}

SkewPoly SkewRing::zero() const { return {shared_from_this(), {}}; }
SkewPoly SkewRing::one() const { return {shared_from_this(), {1}}; }
SkewPoly SkewRing::constant(Elem c) const { return {shared_from_this(), {c}}; }

SkewPoly SkewRing::monomial(Elem c, std::size_t k) const {
    std::vector<Elem> v(k + 1, 0);
    v[k] = c;
    return {shared_from_this(), std::move(v)};
}

SkewPoly SkewRing::x_pow(std::size_t k) const { return monomial(1, k); }

SkewPoly SkewRing::x_n_minus_one(std::size_t n) const {
    std::vector<Elem> v(n + 1, 0);
    v[n] = 1;
    v[0] = field_->add(v[0], field_->neg(1));
    return {shared_from_this(), std::move(v)};
}

SkewPoly SkewRing::linear(Elem beta) const { return {shared_from_this(), {field_->neg(beta), 1}}; }

SkewPoly SkewRing::from_coeffs(std::vector<Elem> coeffs) const { return {shared_from_this(), std::move(coeffs)}; }

SkewPoly::SkewPoly(RingPtr ring, std::vector<Elem> coeffs) : ring_(std::move(ring)), c_(std::move(coeffs)) {
    for (auto x : c_)
        if (!ring_->field().contains(x)) throw FieldError("coefficient outside the field");
    trim(c_);
}

std::size_t SkewPoly::weight() const noexcept {
    return static_cast<std::size_t>(std::count_if(c_.begin(), c_.end(), [](Elem x) { return x != 0; }));
}

void SkewPoly::check_ring(const SkewPoly& o) const { require_same_ring(*this, o); }

SkewPoly SkewPoly::operator+(const SkewPoly& o) const {
    check_ring(o);
    const auto& F = field();
    std::vector<Elem> r(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = F.add(coeff(i), o.coeff(i));
    return {ring_, std::move(r)};
}

SkewPoly SkewPoly::operator-(const SkewPoly& o) const {
    check_ring(o);
    const auto& F = field();
    std::vector<Elem> r(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = F.sub(coeff(i), o.coeff(i));
    return {ring_, std::move(r)};
}

SkewPoly SkewPoly::operator-() const {
    std::vector<Elem> r(c_);
    for (auto& x : r) x = field().neg(x);
    return {ring_, std::move(r)};
}

SkewPoly SkewPoly::operator*(const SkewPoly& o) const { return skew_mul(*this, o); }

bool SkewPoly::operator<(const SkewPoly& o) const noexcept {
    if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
    return std::lexicographical_compare(c_.rbegin(), c_.rend(), o.c_.rbegin(), o.c_.rend());
}

SkewPoly skew_mul(const SkewPoly& f, const SkewPoly& g) {
    require_same_ring(f, g);
    if (f.is_zero() || g.is_zero()) return f.ring().zero();
    const auto& F = f.field();
    const auto& th = f.ring().theta();
    const auto fc = f.coeffs();
    const auto gc = g.coeffs();
    std::vector<Elem> r(fc.size() + gc.size() - 1, 0);
    std::vector<Elem> twisted(gc.begin(), gc.end());
    for (std::size_t i = 0; i < fc.size(); ++i) {
        if (i > 0)
            for (auto& x : twisted) x = th.apply(x);
        if (fc[i] == 0) continue;
        for (std::size_t j = 0; j < gc.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(fc[i], twisted[j]));
    }
    return {f.ring_ptr(), std::move(r)};
}

DivMod right_divmod(const SkewPoly& f, const SkewPoly& g) {
    if (g.is_zero()) throw std::domain_error("division by the zero polynomial");
    require_same_ring(f, g);
    const auto& ring = f.ring();
    const auto& F = ring.field();
    const auto& th = ring.theta();
    const long dg = g.degree();
    if (f.degree() < dg) return {ring.zero(), f};
    std::vector<Elem> rem(f.coeffs().begin(), f.coeffs().end());
    std::vector<Elem> quo(static_cast<std::size_t>(f.degree() - dg + 1), 0);
    const Elem lg = g.lead();
    for (long top = f.degree(); top >= dg; --top) {
        const Elem a = rem[static_cast<std::size_t>(top)];
        if (a == 0) continue;
        const auto shift = static_cast<std::size_t>(top - dg);
        const Elem c = F.div(a, th.apply_pow(lg, static_cast<std::int64_t>(shift)));
        quo[shift] = c;
        sub_left_term_times(ring, rem, c, shift, g.coeffs());
    }
    rem.resize(static_cast<std::size_t>(dg));
    return {ring.from_coeffs(std::move(quo)), ring.from_coeffs(std::move(rem))};
}

DivMod left_divmod(const SkewPoly& f, const SkewPoly& g) {
    if (g.is_zero()) throw std::domain_error("division by the zero polynomial");
    require_same_ring(f, g);
    const auto& ring = f.ring();
    const auto& F = ring.field();
    const auto& th = ring.theta();
    const long dg = g.degree();
    if (f.degree() < dg) return {ring.zero(), f};
    std::vector<Elem> rem(f.coeffs().begin(), f.coeffs().end());
    std::vector<Elem> quo(static_cast<std::size_t>(f.degree() - dg + 1), 0);
    const Elem lg_inv = F.inv(g.lead());
    for (long top = f.degree(); top >= dg; --top) {
        const Elem a = rem[static_cast<std::size_t>(top)];
        if (a == 0) continue;
        const auto shift = static_cast<std::size_t>(top - dg);
        // g * (c X^shift) leads with lc(g) theta^dg(c).
        const Elem c = th.apply_pow(F.mul(lg_inv, a), -dg);
        quo[shift] = c;
        sub_times_right_term(ring, rem, g.coeffs(), c, shift);
    }
    rem.resize(static_cast<std::size_t>(dg));
    return {ring.from_coeffs(std::move(quo)), ring.from_coeffs(std::move(rem))};
}

SkewPoly left_scale(Elem c, const SkewPoly& f) {
    const auto& F = f.field();
    std::vector<Elem> r(f.coeffs().begin(), f.coeffs().end());
    for (auto& x : r) x = F.mul(c, x);
    return {f.ring_ptr(), std::move(r)};
}

SkewPoly monic(const SkewPoly& f) {
    if (f.is_zero()) return f;
    return left_scale(f.field().inv(f.lead()), f);
}

RightBezout right_extended_euclid(const SkewPoly& f, const SkewPoly& g) {
    const auto& ring = f.ring();
    // Invariant: u_i f + v_i g = r_i.
    SkewPoly r0 = f, r1 = g;
    SkewPoly u0 = ring.one(), u1 = ring.zero();
    SkewPoly v0 = ring.zero(), v1 = ring.one();
    while (!r1.is_zero()) {
        auto [q, r] = right_divmod(r0, r1);
        SkewPoly u2 = u0 - q * u1;
        SkewPoly v2 = v0 - q * v1;
        r0 = std::move(r1);
        r1 = std::move(r);
        u0 = std::move(u1);
        u1 = std::move(u2);
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    return {r0, u0, v0, u1, v1};
}

SkewPoly rgcd(const SkewPoly& f, const SkewPoly& g) {
    if (f.is_zero() && g.is_zero()) throw std::domain_error("rgcd of two zero polynomials");
    SkewPoly a = f, b = g;
    while (!b.is_zero()) {
        SkewPoly r = right_divmod(a, b).remainder;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

SkewPoly lclm(const SkewPoly& f, const SkewPoly& g) {
    if (f.is_zero() || g.is_zero()) throw std::domain_error("lclm of a zero polynomial");
    const auto bez = right_extended_euclid(f, g);
    return monic(bez.lcm_u * f);
}

bool is_central(const SkewPoly& f) {
    const auto& th = f.ring().theta();
    const auto c = f.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        if (i % th.order() != 0 || !th.fixes(c[i])) return false;
    }
    return true;
}

Elem norm_power(const Automorphism& theta, Elem beta, std::size_t k) {
    const auto& F = theta.field();
    Elem n = 1;
    Elem t = beta;
    for (std::size_t i = 0; i < k; ++i) {
        n = F.mul(n, t);
        t = theta.apply(t);
    }
    return n;
}

Elem eval_rem_linear(const SkewPoly& f, Elem beta) {
    const auto& F = f.field();
    const auto& th = f.ring().theta();
    Elem acc = 0;
    Elem n = 1;
    Elem t = beta;
    for (auto a : f.coeffs()) {
        acc = F.add(acc, F.mul(a, n));
        n = F.mul(n, t);
        t = th.apply(t);
    }
    return acc;
}

SkewPoly mod_xn_minus_1(const SkewPoly& f, std::size_t n) {
    if (n == 0) throw std::invalid_argument("length must be positive");
    if (f.degree() < static_cast<long>(n)) return f;
    // a X^(n+t) = (a X^t)(X^n - 1) + a X^t, so folding needs no twist.
    const auto& F = f.field();
    std::vector<Elem> r(n, 0);
    const auto c = f.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) r[i % n] = F.add(r[i % n], c[i]);
    return f.ring().from_coeffs(std::move(r));
}

TildePoly::TildePoly(const GaloisField& field, std::vector<Term> terms) : field_(&field) {
    std::map<std::uint64_t, Elem> acc;
    for (auto [k, c] : terms) acc[k] = field.add(acc[k], c);
    for (auto [k, c] : acc)
        if (c != 0) terms_.emplace_back(k, c);
}

TildePoly TildePoly::from_dense(const GaloisField& field, std::span<const Elem> coeffs) {
    std::vector<Term> t;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (coeffs[i] != 0) t.emplace_back(i, coeffs[i]);
    return {field, std::move(t)};
}

TildePoly TildePoly::monomial(const GaloisField& field, Elem c, std::uint64_t k) {
    return {field, {{k, c}}};
}

Elem TildePoly::coeff(std::uint64_t k) const noexcept {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), k,
                               [](const Term& t, std::uint64_t key) { return t.first < key; });
    return it != terms_.end() && it->first == k ? it->second : 0;
}

Elem TildePoly::eval(Elem z) const {
    const auto& F = *field_;
    if (z == 0) return coeff(0);
    const std::uint64_t n = F.order() - 1;
    Elem acc = 0;
    for (auto [k, c] : terms_) acc = F.add(acc, F.mul(c, F.pow(z, static_cast<std::int64_t>(k % n))));
    return acc;
}

TildePoly TildePoly::operator+(const TildePoly& o) const {
    std::vector<Term> t = terms_;
    t.insert(t.end(), o.terms_.begin(), o.terms_.end());
    return {*field_, std::move(t)};
}

TildePoly TildePoly::operator-(const TildePoly& o) const {
    std::vector<Term> t = terms_;
    for (auto [k, c] : o.terms_) t.emplace_back(k, field_->neg(c));
    return {*field_, std::move(t)};
}

TildePoly TildePoly::operator*(const TildePoly& o) const {
    std::vector<Term> t;
    t.reserve(terms_.size() * o.terms_.size());
    for (auto [a, x] : terms_)
        for (auto [b, y] : o.terms_) t.emplace_back(a + b, field_->mul(x, y));
    return {*field_, std::move(t)};
}

TildePoly TildePoly::scaled(Elem c) const {
    std::vector<Term> t;
    for (auto [k, x] : terms_) t.emplace_back(k, field_->mul(c, x));
    return {*field_, std::move(t)};
}

TildePoly TildePoly::truncated(std::uint64_t k) const {
    std::vector<Term> t;
    for (auto term : terms_)
        if (term.first < k) t.push_back(term);
    return {*field_, std::move(t)};
}

std::pair<TildePoly, TildePoly> TildePoly::divmod(const TildePoly& g) const {
    if (g.is_zero()) throw std::domain_error("division by the zero polynomial");
    const auto& F = *field_;
    std::map<std::uint64_t, Elem> rem;
    for (auto [k, c] : terms_) rem[k] = c;
    std::vector<Term> quo;
    const auto dg = static_cast<std::uint64_t>(g.degree());
    const Elem lg_inv = F.inv(g.lead());
    while (!rem.empty() && rem.rbegin()->first >= dg) {
        auto [top, a] = *rem.rbegin();
        const std::uint64_t shift = top - dg;
        const Elem c = F.mul(a, lg_inv);
        quo.emplace_back(shift, c);
        for (auto [k, y] : g.terms_) {
            auto& slot = rem[k + shift];
            slot = F.sub(slot, F.mul(c, y));
            if (slot == 0) rem.erase(k + shift);
        }
    }
    std::vector<Term> r(rem.begin(), rem.end());
    return {TildePoly(F, std::move(quo)), TildePoly(F, std::move(r))};
}

TildePoly tilde_poly(const SkewPoly& f) {
    const auto& F = f.field();
    if (F.characteristic() != 2 || f.ring().theta().power() != 1)
        throw std::invalid_argument("tilde polynomial requires the squaring Frobenius");
    if (f.degree() >= 64) throw std::invalid_argument("tilde polynomial exponent overflows 64 bits");
    std::vector<TildePoly::Term> t;
    const auto c = f.coeffs();
    for (std::size_t k = 0; k < c.size(); ++k)
        if (c[k] != 0) t.emplace_back((std::uint64_t{1} << k) - 1, c[k]);
    return {F, std::move(t)};
}

}  // namespace skewcode
