#include "skewcode/galois_field.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace skewcode {

namespace {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint32_t> distinct_prime_factors(std::uint32_t n) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t d = 2; std::uint64_t{d} * d <= n; ++d) {
        if (n % d != 0) continue;
        out.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) out.push_back(n);
    return out;
}

// Dense polynomials over GF(p), ascending, used only for the irreducibility test.
using PrimePoly = std::vector<unsigned>;

void trim(PrimePoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

PrimePoly prime_mod(PrimePoly f, const PrimePoly& g, unsigned p) {
    // g monic
    trim(f);
    const std::size_t dg = g.size() - 1;
    while (f.size() > dg && !f.empty()) {
        const unsigned c = f.back();
        const std::size_t shift = f.size() - 1 - dg;
        for (std::size_t j = 0; j <= dg; ++j)
            f[shift + j] = (f[shift + j] + (p - c) * g[j]) % p;
        trim(f);
    }
    return f;
}

// Trial division by every monic polynomial of degree 1..m/2.
bool is_irreducible(const PrimePoly& f, unsigned p) {
    const std::size_t m = f.size() - 1;
    if (m <= 1) return true;
    for (std::size_t d = 1; d <= m / 2; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        PrimePoly g(d + 1, 0);
        g[d] = 1;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            std::uint64_t v = idx;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = static_cast<unsigned>(v % p);
                v /= p;
            }
            if (prime_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

}  // namespace

std::shared_ptr<const GaloisField> GaloisField::create(unsigned p, unsigned m, std::vector<unsigned> modulus,
                                                       std::optional<Elem> generator_hint,
                                                       const FieldOptions& options) {
    if (!is_prime(p)) throw FieldError("characteristic " + std::to_string(p) + " is not prime");
    if (m == 0) throw FieldError("extension degree must be positive");
    if (modulus.size() != m + 1) throw FieldError("modulus must have m+1 coefficients");
    for (auto& c : modulus)
        if (c >= p) throw FieldError("modulus coefficient out of range [0, p)");
    if (modulus.back() != 1) throw FieldError("modulus must be monic");

    std::uint64_t q = 1;
    for (unsigned i = 0; i < m; ++i) {
        q *= p;
        if (q > options.max_order) throw FieldError("field order exceeds the table-construction bound");
    }
    if (!is_irreducible(modulus, p)) throw FieldError("modulus is reducible over GF(p)");

    std::shared_ptr<GaloisField> f(new GaloisField());
    f->p_ = p;
    f->m_ = m;
    f->q_ = static_cast<std::uint32_t>(q);
    f->modulus_ = std::move(modulus);
    f->q1_primes_ = distinct_prime_factors(f->q_ - 1);

    auto is_primitive = [&](Elem x) {
        if (x == 0 || x >= f->q_) return false;
        if (f->q_ == 2) return x == 1;
        for (auto r : f->q1_primes_)
            if (f->poly_pow(x, (f->q_ - 1) / r) == 1) return false;
        return true;
    };

    Elem alpha = 0;
    if (generator_hint) {
        if (!is_primitive(*generator_hint)) throw FieldError("generator hint is not a primitive element");
        alpha = *generator_hint;
    } else {
        for (Elem cand = 1; cand < f->q_ && alpha == 0; ++cand)
            if (is_primitive(cand)) alpha = cand;
    }

    const std::uint32_t n = f->q_ - 1;
    f->exp_.assign(2 * std::size_t{n}, 0);
    f->log_.assign(f->q_, 0);
    Elem x = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
        f->exp_[i] = x;
        f->exp_[i + n] = x;
        f->log_[x] = i;
        x = f->poly_mul(x, alpha);
    }

    f->neg_.resize(f->q_);
    for (Elem a = 0; a < f->q_; ++a) {
        auto d = f->digits(a);
        for (auto& c : d) c = (p - c) % p;
        f->neg_[a] = f->from_digits(d);
    }
    if (p != 2 && f->q_ <= 729) {
        f->add_table_.resize(std::size_t{f->q_} * f->q_);
        for (Elem a = 0; a < f->q_; ++a)
            for (Elem b = 0; b < f->q_; ++b) f->add_table_[std::size_t{a} * f->q_ + b] = f->add_digits(a, b);
    }
    f->frob_mult_.resize(m);
    std::uint64_t pw = 1;
    for (unsigned s = 0; s < m; ++s) {
        f->frob_mult_[s] = pw % (n == 0 ? 1 : n);
        pw = (pw * p) % (n == 0 ? 1 : n);
    }
    return f;
}

std::shared_ptr<const GaloisField> GaloisField::gf4() { return create(2, 2, {1, 1, 1}); }

std::shared_ptr<const GaloisField> GaloisField::gf9() { return create(3, 2, {2, 2, 1}); }

std::shared_ptr<const GaloisField> GaloisField::gf1024() {
    return create(2, 10, {1, 1, 1, 1, 0, 1, 1, 0, 0, 0, 1});
}

Elem GaloisField::add_digits(Elem a, Elem b) const noexcept {
    Elem out = 0;
    Elem scale = 1;
    for (unsigned i = 0; i < m_; ++i) {
        out += ((a % p_ + b % p_) % p_) * scale;
        a /= p_;
        b /= p_;
        scale *= p_;
    }
    return out;
}

Elem GaloisField::poly_mul(Elem a, Elem b) const {
    auto da = digits(a);
    auto db = digits(b);
    std::vector<unsigned> prod(2 * m_, 0);
    for (unsigned i = 0; i < m_; ++i)
        for (unsigned j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
    for (std::size_t k = prod.size(); k-- > m_;) {
        const unsigned c = prod[k];
        if (c == 0) continue;
        const std::size_t shift = k - m_;
        for (unsigned j = 0; j <= m_; ++j) prod[shift + j] = (prod[shift + j] + (p_ - c) * modulus_[j]) % p_;
    }
    prod.resize(m_);
    return from_digits(prod);
}

Elem GaloisField::poly_pow(Elem a, std::uint64_t e) const {
    Elem r = 1;
    while (e) {
        if (e & 1) r = poly_mul(r, a);
        a = poly_mul(a, a);
        e >>= 1;
    }
    return r;
}

Elem GaloisField::inv(Elem a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

Elem GaloisField::pow(Elem a, std::int64_t e) const {
    if (a == 0) {
        if (e < 0) throw std::domain_error("negative power of zero");
        return e == 0 ? 1 : 0;
    }
    const std::int64_t n = q_ - 1;
    const std::int64_t k = ((static_cast<std::int64_t>(log_[a]) * (e % n)) % n + n) % n;
    return exp_[static_cast<std::size_t>(k)];
}

std::uint32_t GaloisField::log(Elem x) const {
    if (x == 0) throw std::domain_error("discrete logarithm of zero");
    if (x >= q_) throw FieldError("element outside the field");
    return log_[x];
}

std::vector<unsigned> GaloisField::digits(Elem x) const {
    std::vector<unsigned> d(m_);
    for (unsigned i = 0; i < m_; ++i) {
        d[i] = x % p_;
        x /= p_;
    }
    return d;
}

Elem GaloisField::from_digits(std::span<const unsigned> digits) const {
    Elem v = 0;
    for (std::size_t i = digits.size(); i-- > 0;) v = v * p_ + (digits[i] % p_);
    return v;
}

Elem GaloisField::from_int(std::int64_t c) const {
    const std::int64_t r = ((c % p_) + p_) % p_;
    return static_cast<Elem>(r);
}

std::uint32_t GaloisField::multiplicative_order(Elem x) const {
    const std::uint32_t l = log(x);
    const std::uint32_t n = q_ - 1;
    return n / std::gcd(n, l == 0 ? n : l);
}

FieldElement::FieldElement(const GaloisField& field, Elem value) : field_(&field), value_(value) {
    if (!field.contains(value)) throw FieldError("element outside the field");
}

void FieldElement::check_same(const FieldElement& o) const {
    if (field_ != o.field_) throw FieldError("operands belong to different fields");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check_same(o);
    return {*field_, field_->add(value_, o.value_)};
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    check_same(o);
    return {*field_, field_->sub(value_, o.value_)};
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_same(o);
    return {*field_, field_->mul(value_, o.value_)};
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
    check_same(o);
    return {*field_, field_->div(value_, o.value_)};
}

Automorphism::Automorphism(const GaloisField& field, unsigned power) : field_(&field), power_(power) {
    const unsigned m = field.degree();
    if (power >= m) throw FieldError("Frobenius power must satisfy 0 <= s < m");
    order_ = power == 0 ? 1 : m / std::gcd(m, power);
}

Elem Automorphism::apply_pow(Elem x, std::int64_t j) const noexcept {
    const std::int64_t m = field_->degree();
    const std::int64_t s = ((static_cast<std::int64_t>(power_) * (j % m)) % m + m) % m;
    return field_->frobenius(x, static_cast<unsigned>(s));
}

FieldElement Automorphism::operator()(const FieldElement& x) const {
    if (&x.field() != field_) throw FieldError("element is not in the automorphism's field");
    return {*field_, apply(x.value())};
}

std::uint32_t Automorphism::fixed_field_order() const noexcept {
    const unsigned g = std::gcd(field_->degree(), power_ == 0 ? field_->degree() : power_);
    std::uint32_t r = 1;
    for (unsigned i = 0; i < g; ++i) r *= field_->characteristic();
    return r;
}

std::string to_power_string(const GaloisField& field, Elem x) {
    if (x == 0) return "zero";
    return std::to_string(field.log(x));
}

Elem parse_power_string(const GaloisField& field, const std::string& text) {
    if (text == "zero") return 0;
    std::string_view sv = text;
    if (sv.starts_with("a^")) sv.remove_prefix(2);
    std::int64_t k = 0;
    auto [ptr, ec] = std::from_chars(sv.data(), sv.data() + sv.size(), k);
    if (ec != std::errc{} || ptr != sv.data() + sv.size())
        throw FieldError("not a power-notation element: '" + text + "'");
    return field.antilog(k);
}

}  // namespace skewcode
