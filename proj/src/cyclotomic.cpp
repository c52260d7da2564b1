#include "dihedra/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace dihedra {

namespace {

// Exact division of a by the monic integer polynomial b.
std::vector<i64> divide_exact(std::vector<i64> a, const std::vector<i64> &b)
{
    const std::size_t db = b.size() - 1;
    std::vector<i64> q(a.size() - db, 0);
    for (std::size_t i = a.size(); i-- > db;) {
        const i64 t = a[i];
        q[i - db] = t;
        for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= t * b[j];
    }
    return q;
}

} // namespace

std::vector<i64> cyclotomic_polynomial(u64 h)
{
    if (h == 0) throw std::invalid_argument("cyclotomic_polynomial: h must be positive");
    static std::mutex mu;
    static std::map<u64, std::vector<i64>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        if (auto it = cache.find(h); it != cache.end()) return it->second;
    }
    // x^h - 1 divided by Phi_d for every proper divisor d.
    std::vector<i64> poly(h + 1, 0);
    poly[0] = -1;
    poly[h] = 1;
    for (u64 d = 1; d < h; ++d) {
        if (h % d == 0) poly = divide_exact(std::move(poly), cyclotomic_polynomial(d));
    }
    std::lock_guard<std::mutex> lock(mu);
    cache[h] = poly;
    return poly;
}

Cyclotomic::Cyclotomic(u64 h) : h_(h), c_(h, 0)
{
    if (h == 0) throw std::invalid_argument("Cyclotomic: order must be positive");
}

Cyclotomic Cyclotomic::integer(u64 h, i64 value)
{
    Cyclotomic z(h);
    z.c_[0] = value;
    return z;
}

Cyclotomic Cyclotomic::root(u64 h, i64 e)
{
    Cyclotomic z(h);
    z.c_[static_cast<std::size_t>(mod(e, static_cast<i64>(h)))] = 1;
    return z;
}

void Cyclotomic::check_same(const Cyclotomic &o) const
{
    if (h_ != o.h_) throw std::invalid_argument("Cyclotomic: mismatched orders");
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic &o) const
{
    Cyclotomic r = *this;
    r += o;
    return r;
}

Cyclotomic &Cyclotomic::operator+=(const Cyclotomic &o)
{
    check_same(o);
    for (std::size_t i = 0; i < h_; ++i) c_[i] += o.c_[i];
    return *this;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic &o) const
{
    return *this + o * -1;
}

Cyclotomic Cyclotomic::operator*(i64 k) const
{
    Cyclotomic r = *this;
    for (auto &v : r.c_) v *= k;
    return r;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic &o) const
{
    check_same(o);
    Cyclotomic r(h_);
    for (std::size_t i = 0; i < h_; ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < h_; ++j) {
            if (o.c_[j] == 0) continue;
            std::size_t k = i + j;
            if (k >= h_) k -= h_;
            r.c_[k] += c_[i] * o.c_[j];
        }
    }
    return r;
}

std::vector<i64> Cyclotomic::normal_form() const
{
    const std::vector<i64> phi = cyclotomic_polynomial(h_);
    const std::size_t deg = phi.size() - 1;
    std::vector<i64> a = c_;
    for (std::size_t i = a.size(); i-- > deg;) {
        const i64 t = a[i];
        if (t == 0) continue;
        for (std::size_t j = 0; j <= deg; ++j) a[i - deg + j] -= t * phi[j];
    }
    a.resize(deg);
    return a;
}

bool operator==(const Cyclotomic &a, const Cyclotomic &b)
{
    return a.h_ == b.h_ && a.normal_form() == b.normal_form();
}

std::ostream &operator<<(std::ostream &os, const Cyclotomic &z)
{
    const auto nf = z.normal_form();
    bool first = true;
    for (std::size_t i = 0; i < nf.size(); ++i) {
        if (nf[i] == 0) continue;
        if (!first) os << (nf[i] > 0 ? " + " : " - ");
        else if (nf[i] < 0) os << '-';
        first = false;
        const i64 mag = nf[i] < 0 ? -nf[i] : nf[i];
        if (i == 0 || mag != 1) os << mag;
        if (i >= 1) os << "z" << (i >= 2 ? "^" + std::to_string(i) : "");
    }
    if (first) os << 0;
    return os;
}

} // namespace dihedra
