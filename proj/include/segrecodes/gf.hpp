#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "segrecodes/errors.hpp"

namespace segrecodes {

/// Description of GF(q), q = p^m. For m > 1 the field is realized as
/// GF(p)[x]/(modulus) with elements encoded as base-p digit strings.
struct FieldSpec {
    std::uint32_t q = 0;
    std::uint32_t p = 0;
    std::uint32_t m = 1;
    std::vector<std::uint32_t> modulus; // coefficient of x^i at index i; empty when m == 1

    bool operator==(const FieldSpec&) const = default;
};

enum class ArithKind { Add, Sub, Mul, Div };

/// Exact arithmetic in GF(q). Elements are integer codes in [0, q):
/// the residue mod p for prime fields, the base-p digit encoding of a
/// polynomial of degree < m otherwise. Immutable; all operations are pure.
class Field {
public:
    explicit Field(std::uint32_t q);

    std::uint32_t q() const { return spec_.q; }
    std::uint32_t p() const { return spec_.p; }
    std::uint32_t m() const { return spec_.m; }
    const FieldSpec& spec() const { return spec_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        if (tabled_) return add_[a * spec_.q + b];
        std::uint64_t s = std::uint64_t(a) + b;
        return std::uint32_t(s >= spec_.p ? s - spec_.p : s);
    }

    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
        if (tabled_) return sub_[a * spec_.q + b];
        return a >= b ? a - b : a + spec_.p - b;
    }

    std::uint32_t neg(std::uint32_t a) const { return sub(0, a); }

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        if (tabled_) return mul_[a * spec_.q + b];
        return std::uint32_t(std::uint64_t(a) * b % spec_.p);
    }

    std::uint32_t inv(std::uint32_t a) const;

    std::uint32_t div(std::uint32_t a, std::uint32_t b) const { return mul(a, inv(b)); }

    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;

    std::uint32_t arith(std::uint32_t a, std::uint32_t b, ArithKind kind) const;

    /// Codes 0..q-1 in increasing order; with nonzero_only, 1..q-1.
    std::vector<std::uint32_t> elements(bool nonzero_only = false) const;

    /// Direct access to the q*q multiplication table, or nullptr for
    /// large prime fields. Row a holds a*b for b = 0..q-1.
    const std::uint32_t* mul_row(std::uint32_t a) const {
        return tabled_ ? mul_.data() + std::size_t(a) * spec_.q : nullptr;
    }

private:
    FieldSpec spec_;
    bool tabled_ = false;
    std::vector<std::uint32_t> add_, sub_, mul_, inv_;
};

using FieldPtr = std::shared_ptr<const Field>;

/// Builds GF(q), deterministically: the same q always yields the same
/// FieldSpec. Throws NotPrimePower / UnsupportedField.
FieldPtr make_field(std::uint32_t q);

bool same_field(const Field& a, const Field& b);

/// Trial-division irreducibility test for a polynomial over GF(p),
/// coefficient of x^i at index i.
bool poly_is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& poly);

} // namespace segrecodes
