#include "blowup/gf.hpp"

#include <string>

namespace blowup {

namespace {

using Poly = std::vector<std::uint32_t>;  // low-to-high coefficients over GF(p)

/// Remainder of a modulo the monic polynomial m, over GF(p).
Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
    const std::size_t dm = m.size() - 1;
    while (a.size() > dm) {
        std::uint32_t lead = a.back();
        std::size_t shift = a.size() - 1 - dm;
        if (lead != 0) {
            for (std::size_t i = 0; i <= dm; ++i) {
                std::uint32_t sub = (lead * m[i]) % p;
                a[shift + i] = (a[shift + i] + p - sub) % p;
            }
        }
        a.pop_back();
    }
    return a;
}

}  // namespace

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& poly) {
    if (poly.size() < 2 || poly.back() != 1) return false;
    const std::size_t k = poly.size() - 1;
    for (std::size_t j = 1; j <= k / 2; ++j) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < j; ++i) count *= p;
        for (std::uint64_t v = 0; v < count; ++v) {
            Poly g(j + 1);
            std::uint64_t t = v;
            for (std::size_t i = 0; i < j; ++i) {
                g[i] = static_cast<std::uint32_t>(t % p);
                t /= p;
            }
            g[j] = 1;
            Poly r = poly_mod(poly, g, p);
            bool zero = true;
            for (auto c : r) zero = zero && c == 0;
            if (zero) return false;
        }
    }
    return true;
}

std::vector<std::uint32_t> default_modulus(std::uint32_t p, std::uint32_t k) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < k; ++i) count *= p;
    for (std::uint64_t v = 0; v < count; ++v) {
        Poly m(k + 1);
        std::uint64_t t = v;
        for (std::uint32_t i = 0; i < k; ++i) {
            m[i] = static_cast<std::uint32_t>(t % p);
            t /= p;
        }
        m[k] = 1;
        if (is_irreducible(p, m)) return m;
    }
    throw FieldError("no irreducible polynomial found");  // unreachable for prime p
}

Field FieldSpec::make(std::uint32_t p, std::uint32_t k,
                      std::optional<std::vector<std::uint32_t>> modulus) {
    if (!is_prime(p)) throw FieldError("characteristic " + std::to_string(p) + " is not prime");
    if (k < 1) throw FieldError("extension degree must be >= 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
        q *= p;
        if (q > kMaxFieldOrder)
            throw FieldError("field order p^k exceeds the supported maximum 65536");
    }
    Poly m;
    if (k > 1) {
        if (modulus) {
            m = *modulus;
            if (m.size() != k + 1)
                throw FieldError("modulus must have k+1 = " + std::to_string(k + 1) +
                                 " coefficients");
            for (auto c : m)
                if (c >= p) throw FieldError("modulus coefficient out of range [0,p)");
            if (m.back() != 1) throw FieldError("modulus must be monic");
            if (!is_irreducible(p, m)) throw FieldError("modulus is reducible over GF(p)");
        } else {
            m = default_modulus(p, k);
        }
    }
    return Field(new FieldSpec(p, k, std::move(m)));
}

FieldSpec::FieldSpec(std::uint32_t p, std::uint32_t k, std::vector<std::uint32_t> modulus)
    : p_(p), k_(k), q_(1), modulus_(std::move(modulus)) {
    for (std::uint32_t i = 0; i < k_; ++i) q_ *= p_;
    build_tables();
}

FieldElement FieldSpec::from_int(std::int64_t n) const {
    std::int64_t r = n % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return FieldElement{static_cast<std::uint32_t>(r)};
}

FieldElement FieldSpec::add_digits(FieldElement a, FieldElement b) const {
    std::uint32_t x = a.rep, y = b.rep, out = 0, scale = 1;
    for (std::uint32_t i = 0; i < k_; ++i) {
        std::uint32_t s = x % p_ + y % p_;
        if (s >= p_) s -= p_;
        out += s * scale;
        scale *= p_;
        x /= p_;
        y /= p_;
    }
    return FieldElement{out};
}

std::uint32_t FieldSpec::slow_mul(std::uint32_t a, std::uint32_t b) const {
    if (k_ == 1) return static_cast<std::uint32_t>((std::uint64_t{a} * b) % p_);
    Poly x(k_), y(k_);
    for (std::uint32_t i = 0; i < k_; ++i) {
        x[i] = a % p_;
        y[i] = b % p_;
        a /= p_;
        b /= p_;
    }
    Poly prod(2 * k_ - 1, 0);
    for (std::uint32_t i = 0; i < k_; ++i)
        for (std::uint32_t j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p_;
    prod = poly_mod(std::move(prod), modulus_, p_);
    std::uint32_t out = 0, scale = 1;
    for (std::uint32_t i = 0; i < k_; ++i) {
        out += (i < prod.size() ? prod[i] : 0) * scale;
        scale *= p_;
    }
    return out;
}

void FieldSpec::build_tables() {
    neg_.resize(q_);
    for (std::uint32_t a = 0; a < q_; ++a) {
        std::uint32_t x = a, out = 0, scale = 1;
        for (std::uint32_t i = 0; i < k_; ++i) {
            out += ((p_ - x % p_) % p_) * scale;
            scale *= p_;
            x /= p_;
        }
        neg_[a] = FieldElement{out};
    }

    // The multiplicative group is cyclic; find a generator by brute force.
    const std::uint32_t order = q_ - 1;
    exp_.assign(order, 0);
    log_.assign(q_, 0);
    for (std::uint32_t g = (q_ == 2 ? 1 : 2); g < q_; ++g) {
        std::uint32_t x = 1, i = 0;
        bool primitive = true;
        for (; i < order; ++i) {
            if (i > 0 && x == 1) {
                primitive = false;
                break;
            }
            exp_[i] = x;
            x = slow_mul(x, g);
        }
        if (primitive && x == 1) break;
    }
    for (std::uint32_t i = 0; i < order; ++i) log_[exp_[i]] = i;
}

FieldElement FieldSpec::inv(FieldElement a) const {
    if (a.rep == 0) throw FieldError("inverse of zero");
    std::uint32_t l = log_[a.rep];
    return FieldElement{exp_[l == 0 ? 0 : q_ - 1 - l]};
}

FieldElement FieldSpec::pow(FieldElement a, std::uint64_t e) const {
    if (e == 0) return one();
    if (a.rep == 0) return zero();
    std::uint64_t l = (std::uint64_t{log_[a.rep]} * (e % (q_ - 1))) % (q_ - 1);
    return FieldElement{exp_[l]};
}

std::vector<FieldElement> FieldSpec::elements() const {
    std::vector<FieldElement> out;
    out.reserve(q_);
    for (std::uint32_t a = 0; a < q_; ++a) out.emplace_back(a);
    return out;
}

}  // namespace blowup
