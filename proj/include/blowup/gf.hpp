// Finite fields GF(p^k) with table-driven multiplication.
#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

namespace blowup {

/// Largest supported field cardinality.
inline constexpr std::uint32_t kMaxFieldOrder = 1u << 16;

class FieldError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An element of GF(p^k), stored as the base-p packing of its coefficient
/// vector: rep = c_0 + c_1 p + ... + c_{k-1} p^{k-1}. Carries no field pointer.
struct FieldElement {
    std::uint32_t rep = 0;

    constexpr FieldElement() = default;
    constexpr explicit FieldElement(std::uint32_t r) : rep(r) {}

    constexpr bool is_zero() const { return rep == 0; }
    friend constexpr auto operator<=>(FieldElement, FieldElement) = default;
};

class FieldSpec;
using Field = std::shared_ptr<const FieldSpec>;

/// GF(p^k). Immutable after construction; share it through `Field`.
class FieldSpec {
public:
    /// Validates p, k and the modulus (low-to-high coefficients, monic, degree k).
    /// With k > 1 and no modulus, the smallest irreducible polynomial is used.
    static Field make(std::uint32_t p, std::uint32_t k = 1,
                      std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

    std::uint32_t p() const { return p_; }
    std::uint32_t k() const { return k_; }
    std::uint32_t q() const { return q_; }
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }
    bool is_gf2() const { return q_ == 2; }

    FieldElement zero() const { return FieldElement{0}; }
    FieldElement one() const { return FieldElement{1}; }

    /// Image of an integer under Z -> GF(p).
    FieldElement from_int(std::int64_t n) const;

    bool contains(FieldElement a) const { return a.rep < q_; }

    FieldElement add(FieldElement a, FieldElement b) const {
        if (k_ == 1) {
            std::uint32_t s = a.rep + b.rep;
            return FieldElement{s >= p_ ? s - p_ : s};
        }
        if (p_ == 2) return FieldElement{a.rep ^ b.rep};
        return add_digits(a, b);
    }
    FieldElement neg(FieldElement a) const { return neg_[a.rep]; }
    FieldElement sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }
    FieldElement mul(FieldElement a, FieldElement b) const {
        if (a.rep == 0 || b.rep == 0) return FieldElement{0};
        std::uint32_t e = log_[a.rep] + log_[b.rep];
        if (e >= q_ - 1) e -= q_ - 1;
        return FieldElement{exp_[e]};
    }
    /// Throws FieldError on zero.
    FieldElement inv(FieldElement a) const;
    FieldElement pow(FieldElement a, std::uint64_t e) const;

    /// All q elements in increasing rep order.
    std::vector<FieldElement> elements() const;

    friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
        return a.p_ == b.p_ && a.k_ == b.k_ && a.modulus_ == b.modulus_;
    }

private:
    FieldSpec(std::uint32_t p, std::uint32_t k, std::vector<std::uint32_t> modulus);

    FieldElement add_digits(FieldElement a, FieldElement b) const;
    /// Schoolbook product of packed polynomials reduced by the modulus.
    std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b) const;
    void build_tables();

    std::uint32_t p_;
    std::uint32_t k_;
    std::uint32_t q_;
    std::vector<std::uint32_t> modulus_;
    std::vector<std::uint32_t> exp_;
    std::vector<std::uint32_t> log_;
    std::vector<FieldElement> neg_;
};

inline bool same_field(const Field& a, const Field& b) {
    return a == b || (a && b && *a == *b);
}

bool is_prime(std::uint32_t n);

/// Exhaustive irreducibility test over GF(p): no monic factor of degree <= k/2.
bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& poly);

/// Smallest monic irreducible of degree k over GF(p) when compared
/// high-to-low (equivalently, by integer packing).
std::vector<std::uint32_t> default_modulus(std::uint32_t p, std::uint32_t k);

}  // namespace blowup
