#include "dihedra/finite_field.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace dihedra {

namespace {

using Poly = std::vector<u64>;

void trim(Poly &a)
{
    while (!a.empty() && a.back() == 0) a.pop_back();
}

u64 inv_mod(u64 a, u64 p)
{
    return powmod(a, p - 2, p);
}

// a mod b over F_p; b monic. For p < 2^16 coefficients of a are left
// unreduced (t * b[i] < 2^32, so 2^31 additions fit) and only the leading one
// is reduced when it is eliminated.
Poly poly_mod(Poly a, const Poly &b, u64 p)
{
    const bool lazy = p < (u64{1} << 16);
    const std::size_t n = b.size();
    while (a.size() >= n) {
        const u64 lead = a.back() % p;
        a.pop_back();
        if (lead == 0) continue;
        const u64 t = p - lead;
        const std::size_t shift = a.size() + 1 - n;
        if (lazy) {
            for (std::size_t i = 0; i + 1 < n; ++i) a[shift + i] += t * b[i];
        } else {
            for (std::size_t i = 0; i + 1 < n; ++i) a[shift + i] = (a[shift + i] + t * b[i]) % p;
        }
    }
    for (auto &v : a) v %= p;
    trim(a);
    return a;
}

Poly poly_mulmod(const Poly &a, const Poly &b, const Poly &f, u64 p)
{
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    if (p < (u64{1} << 16)) {
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
        }
        for (auto &v : r) v %= p;
    } else {
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
        }
    }
    return poly_mod(std::move(r), f, p);
}

void make_monic(Poly &a, u64 p)
{
    const u64 inv = inv_mod(a.back(), p);
    for (auto &v : a) v = v * inv % p;
}

Poly poly_powmod(Poly base, u64 e, const Poly &f, u64 p)
{
    Poly result{1};
    base = poly_mod(std::move(base), f, p);
    while (e > 0) {
        if (e & 1) result = poly_mulmod(result, base, f, p);
        e >>= 1;
        if (e > 0) base = poly_mulmod(base, base, f, p);
    }
    return result;
}

Poly poly_gcd(Poly a, Poly b, u64 p)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        make_monic(b, p);
        Poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Inverse of a modulo the irreducible f by the extended Euclidean algorithm.
Poly poly_inverse(Poly a, const Poly &f, u64 p)
{
    Poly r0 = f, r1 = std::move(a);
    Poly s0{}, s1{1};
    while (r1.size() > 1) {
        // One long division r0 = q r1 + r, tracking the Bezout coefficient.
        const u64 lead_inv = inv_mod(r1.back(), p);
        Poly q(r0.size() - r1.size() + 1, 0);
        Poly r = r0;
        while (r.size() >= r1.size()) {
            const u64 t = r.back() * lead_inv % p;
            const std::size_t shift = r.size() - r1.size();
            q[shift] = t;
            for (std::size_t i = 0; i < r1.size(); ++i) r[shift + i] = (r[shift + i] + (p - t) * r1[i]) % p;
            trim(r);
        }
        // s = s0 - q s1
        Poly s(std::max(s0.size(), q.size() + s1.size()), 0);
        for (std::size_t i = 0; i < s0.size(); ++i) s[i] = s0[i];
        for (std::size_t i = 0; i < q.size(); ++i) {
            for (std::size_t j = 0; j < s1.size(); ++j) s[i + j] = (s[i + j] + (p - q[i]) * s1[j] % p) % p;
        }
        trim(s);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    const u64 c = inv_mod(r1[0], p);
    for (auto &v : s1) v = v * c % p;
    return s1;
}

} // namespace

bool is_irreducible(u64 p, const Coeffs &coeffs)
{
    if (p < 2 || p >= (u64{1} << 31)) throw std::invalid_argument("is_irreducible: p must be below 2^31");
    Poly f(coeffs.begin(), coeffs.end());
    for (auto &c : f) c %= p;
    trim(f);
    if (f.size() < 2) return false;
    const std::size_t m = f.size() - 1;
    if (m == 1) return true;
    if (f[0] == 0) return false;
    // Root check: the k = 1 step below, done directly when p is small.
    if (p <= 64) {
        for (u64 a = 1; a < p; ++a) {
            u64 v = 0;
            for (std::size_t i = f.size(); i-- > 0;) v = (v * a + f[i]) % p;
            if (v == 0) return false;
        }
    }

    // x^(p^k) mod f for k = 1, 2, ...; f is irreducible iff no factor of
    // degree k <= m/2 divides x^(p^k) - x.
    Poly xpk = poly_powmod({0, 1}, p, f, p);
    for (std::size_t k = 1; k <= m / 2; ++k) {
        Poly diff = xpk;
        diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
        diff[1] = (diff[1] + p - 1) % p;
        trim(diff);
        if (diff.empty()) return false;
        if (poly_gcd(f, diff, p).size() > 1) return false;
        if (k < m / 2) xpk = poly_powmod(xpk, p, f, p);
    }
    return true;
}

FieldContext::FieldContext(u64 p, Coeffs modulus) : p_(p), m_(0), modulus_(std::move(modulus))
{
    if (p < 2 || p >= (u64{1} << 31) || !is_prime(p)) throw std::invalid_argument("FieldContext: p must be a prime below 2^31");
    if (modulus_.size() < 2 || modulus_.back() != 1) throw std::invalid_argument("FieldContext: modulus must be monic of degree >= 1");
    for (auto c : modulus_) {
        if (c >= p) throw std::invalid_argument("FieldContext: modulus coefficients must be reduced mod p");
    }
    if (!is_irreducible(p, modulus_)) throw std::invalid_argument("FieldContext: modulus is not irreducible");
    m_ = static_cast<unsigned>(modulus_.size() - 1);
    for (unsigned j = 0; j < m_; ++j) {
        if (modulus_[j] != 0) tail_.emplace_back(j, static_cast<std::uint32_t>(p - modulus_[j]));
    }
    mpz_ui_pow_ui(unit_order_.get_mpz_t(), p, m_);
    unit_order_ -= 1;
}

FieldPtr FieldContext::create(u64 p, Coeffs modulus)
{
    return FieldPtr(new FieldContext(p, std::move(modulus)));
}

void FieldContext::reduce(std::vector<u64> &poly) const
{
    for (std::size_t i = poly.size(); i-- > m_;) {
        const u64 t = poly[i] % p_;
        poly[i] = 0;
        if (t == 0) continue;
        const std::size_t base = i - m_;
        for (auto [j, c] : tail_) poly[base + j] = (poly[base + j] + t * c) % p_;
    }
    poly.resize(m_, 0);
}

FieldPtr make_field(u64 p, unsigned m)
{
    if (m < 1) throw std::invalid_argument("make_field: degree must be >= 1");
    Coeffs poly(m + 1, 0);
    poly[m] = 1;
    for (;;) {
        if (is_irreducible(p, poly)) return FieldContext::create(p, poly);
        // Next monic polynomial in base-p counter order.
        unsigned i = 0;
        while (i < m && ++poly[i] == p) poly[i++] = 0;
        if (i == m) throw std::logic_error("make_field: no irreducible polynomial found");
    }
}

FieldPtr field_cached(u64 p, unsigned m)
{
    static std::mutex mu;
    static std::map<std::pair<u64, unsigned>, FieldPtr> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto &slot = cache[{p, m}];
    if (!slot) slot = make_field(p, m);
    return slot;
}

FieldElement::FieldElement(FieldPtr ctx, Coeffs coeffs) : ctx_(std::move(ctx)), c_(std::move(coeffs))
{
    if (c_.size() != ctx_->degree()) throw std::invalid_argument("FieldElement: wrong number of coefficients");
    for (auto v : c_) {
        if (v >= ctx_->p()) throw std::invalid_argument("FieldElement: coefficient not reduced");
    }
}

FieldElement FieldElement::zero(const FieldPtr &ctx)
{
    return FieldElement(ctx, Coeffs(ctx->degree(), 0));
}

FieldElement FieldElement::one(const FieldPtr &ctx)
{
    return constant(ctx, 1);
}

FieldElement FieldElement::constant(const FieldPtr &ctx, i64 value)
{
    Coeffs c(ctx->degree(), 0);
    c[0] = static_cast<std::uint32_t>(mod(value, static_cast<i64>(ctx->p())));
    return FieldElement(ctx, std::move(c));
}

FieldElement FieldElement::variable(const FieldPtr &ctx)
{
    if (ctx->degree() == 1) {
        // x = -c0 in F_p.
        return constant(ctx, -static_cast<i64>(ctx->modulus()[0]));
    }
    Coeffs c(ctx->degree(), 0);
    c[1] = 1;
    return FieldElement(ctx, std::move(c));
}

FieldElement FieldElement::from_index(const FieldPtr &ctx, u64 n)
{
    Coeffs c(ctx->degree(), 0);
    for (unsigned i = 0; i < ctx->degree() && n > 0; ++i) {
        c[i] = static_cast<std::uint32_t>(n % ctx->p());
        n /= ctx->p();
    }
    if (n != 0) throw std::out_of_range("FieldElement::from_index: index exceeds field size");
    return FieldElement(ctx, std::move(c));
}

bool FieldElement::is_zero() const
{
    for (auto v : c_) {
        if (v != 0) return false;
    }
    return true;
}

bool FieldElement::is_one() const
{
    if (c_[0] != 1) return false;
    for (std::size_t i = 1; i < c_.size(); ++i) {
        if (c_[i] != 0) return false;
    }
    return true;
}

FieldElement FieldElement::operator+(const FieldElement &o) const
{
    const u64 p = ctx_->p();
    Coeffs r(c_.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = static_cast<std::uint32_t>((u64{c_[i]} + o.c_[i]) % p);
    return FieldElement(ctx_, std::move(r));
}

FieldElement FieldElement::operator-(const FieldElement &o) const
{
    const u64 p = ctx_->p();
    Coeffs r(c_.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = static_cast<std::uint32_t>((u64{c_[i]} + p - o.c_[i]) % p);
    return FieldElement(ctx_, std::move(r));
}

FieldElement FieldElement::operator-() const
{
    return zero(ctx_) - *this;
}

FieldElement FieldElement::operator*(const FieldElement &o) const
{
    const u64 p = ctx_->p();
    const std::size_t m = c_.size();
    std::vector<u64> prod(2 * m - 1, 0);
    if (p < (u64{1} << 16)) {
        // Products stay below 2^32, so a full row of sums fits in 64 bits.
        for (std::size_t i = 0; i < m; ++i) {
            const u64 ai = c_[i];
            if (ai == 0) continue;
            for (std::size_t j = 0; j < m; ++j) prod[i + j] += ai * o.c_[j];
        }
        for (auto &v : prod) v %= p;
    } else {
        for (std::size_t i = 0; i < m; ++i) {
            const u64 ai = c_[i];
            if (ai == 0) continue;
            for (std::size_t j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + ai * o.c_[j]) % p;
        }
    }
    ctx_->reduce(prod);
    Coeffs r(m);
    for (std::size_t i = 0; i < m; ++i) r[i] = static_cast<std::uint32_t>(prod[i]);
    return FieldElement(ctx_, std::move(r));
}

FieldElement FieldElement::square() const
{
    const u64 p = ctx_->p();
    const std::size_t m = c_.size();
    std::vector<u64> prod(2 * m - 1, 0);
    const bool lazy = p < (u64{1} << 16);
    for (std::size_t i = 0; i < m; ++i) {
        const u64 ai = c_[i];
        if (ai == 0) continue;
        const u64 twice = 2 * ai;
        for (std::size_t j = i + 1; j < m; ++j) {
            prod[i + j] = lazy ? prod[i + j] + twice * c_[j] : (prod[i + j] + twice * c_[j]) % p;
        }
        prod[2 * i] = lazy ? prod[2 * i] + ai * ai : (prod[2 * i] + ai * ai) % p;
    }
    for (auto &v : prod) v %= p;
    ctx_->reduce(prod);
    Coeffs r(m);
    for (std::size_t i = 0; i < m; ++i) r[i] = static_cast<std::uint32_t>(prod[i]);
    return FieldElement(ctx_, std::move(r));
}

FieldElement FieldElement::pow(u64 e) const
{
    FieldElement result = one(ctx_);
    FieldElement base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e > 0) base = base.square();
    }
    return result;
}

FieldElement FieldElement::pow(const mpz_class &e) const
{
    if (e < 0) return inverse().pow(mpz_class(-e));
    FieldElement result = one(ctx_);
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        result = result.square();
        if (mpz_tstbit(e.get_mpz_t(), i)) result = result * *this;
    }
    return result;
}

FieldElement FieldElement::inverse() const
{
    if (is_zero()) throw std::domain_error("FieldElement::inverse: zero has no inverse");
    const u64 p = ctx_->p();
    Poly f(ctx_->modulus().begin(), ctx_->modulus().end());
    Poly a(c_.begin(), c_.end());
    trim(a);
    const Poly inv = poly_inverse(std::move(a), f, p);
    Coeffs r(c_.size(), 0);
    for (std::size_t i = 0; i < inv.size(); ++i) r[i] = static_cast<std::uint32_t>(inv[i]);
    return FieldElement(ctx_, std::move(r));
}

FieldElement FieldElement::frobenius(unsigned k) const
{
    FieldElement r = *this;
    for (unsigned i = 0; i < k; ++i) r = r.pow(ctx_->p());
    return r;
}

unsigned FieldElement::degree() const
{
    const unsigned m = ctx_->degree();
    FieldElement r = *this;
    for (unsigned s = 1; s <= m; ++s) {
        r = r.pow(ctx_->p());
        if (m % s == 0 && r == *this) return s;
    }
    return m;
}

bool FieldElement::has_exact_order(u64 h) const
{
    if (h == 0 || is_zero()) return false;
    if (!pow(h).is_one()) return false;
    for (u64 q : prime_divisors(h)) {
        if (pow(h / q).is_one()) return false;
    }
    return true;
}

std::ostream &operator<<(std::ostream &os, const FieldElement &e)
{
    bool first = true;
    for (std::size_t i = e.c_.size(); i-- > 0;) {
        if (e.c_[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0 || e.c_[i] != 1) os << e.c_[i];
        if (i >= 1) os << "x";
        if (i >= 2) os << '^' << i;
    }
    if (first) os << 0;
    return os;
}

FieldElement element_of_order(const FieldPtr &ctx, u64 h)
{
    if (h == 0) throw std::invalid_argument("element_of_order: h must be positive");
    const mpz_class &n = ctx->unit_group_order();
    if (mpz_divisible_ui_p(n.get_mpz_t(), h) == 0) {
        throw std::invalid_argument("element_of_order: h does not divide p^m - 1");
    }
    const mpz_class cofactor = n / h;
    // Candidates in counter order, starting from 1 (index 1). Nonzero
    // constants only reach orders dividing p - 1, so they are skipped when
    // they cannot succeed; the chosen element is unchanged.
    const u64 first = (ctx->p() - 1) % h == 0 ? 1 : ctx->p();
    for (u64 idx = first;; ++idx) {
        const FieldElement x = FieldElement::from_index(ctx, idx).pow(cofactor);
        if (x.has_exact_order(h)) return x;
    }
}

} // namespace dihedra
