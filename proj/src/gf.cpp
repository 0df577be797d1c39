#include "segrecodes/gf.hpp"

#include <algorithm>
#include <numeric>

namespace segrecodes {

namespace {

// Irreducible moduli for all prime powers q <= 64, coefficient of x^i at
// index i. Each entry is verified by poly_is_irreducible at construction.
const std::vector<std::uint32_t>* lookup_modulus(std::uint32_t q) {
    static const struct {
        std::uint32_t q;
        std::vector<std::uint32_t> poly;
    } table[] = {
        {4, {1, 1, 1}},           // x^2 + x + 1
        {8, {1, 1, 0, 1}},        // x^3 + x + 1
        {9, {1, 0, 1}},           // x^2 + 1
        {16, {1, 1, 0, 0, 1}},    // x^4 + x + 1
        {25, {2, 0, 1}},          // x^2 + 2
        {27, {1, 2, 0, 1}},       // x^3 + 2x + 1
        {32, {1, 0, 1, 0, 0, 1}}, // x^5 + x^2 + 1
        {49, {1, 0, 1}},          // x^2 + 1
        {64, {1, 1, 0, 0, 0, 0, 1}}, // x^6 + x + 1
    };
    for (const auto& e : table)
        if (e.q == q) return &e.poly;
    return nullptr;
}

std::vector<std::uint32_t> decode_poly(std::uint32_t code, std::uint32_t p, std::uint32_t m) {
    std::vector<std::uint32_t> c(m, 0);
    for (std::uint32_t i = 0; i < m && code != 0; ++i) {
        c[i] = code % p;
        code /= p;
    }
    return c;
}

std::uint32_t encode_poly(const std::vector<std::uint32_t>& c, std::uint32_t p) {
    std::uint32_t code = 0;
    for (std::size_t i = c.size(); i-- > 0;)
        code = code * p + c[i];
    return code;
}

void trim(std::vector<std::uint32_t>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

// a mod b over GF(p), b nonzero.
std::vector<std::uint32_t> poly_mod(std::vector<std::uint32_t> a, const std::vector<std::uint32_t>& b,
                                    std::uint32_t p) {
    trim(a);
    const std::size_t db = b.size() - 1;
    const std::uint32_t lead_inv = [&] {
        // b is monic in all call sites, but handle the general case.
        std::uint32_t l = b.back();
        for (std::uint32_t x = 1; x < p; ++x)
            if (std::uint64_t(l) * x % p == 1) return x;
        return 1u;
    }();
    while (a.size() > db) {
        const std::uint32_t c = std::uint32_t(std::uint64_t(a.back()) * lead_inv % p);
        const std::size_t shift = a.size() - 1 - db;
        if (c != 0)
            for (std::size_t i = 0; i <= db; ++i) {
                std::uint64_t t = a[i + shift] + std::uint64_t(p) - std::uint64_t(c) * b[i] % p;
                a[i + shift] = std::uint32_t(t % p);
            }
        a.pop_back();
        trim(a);
        if (a.empty()) break;
    }
    return a;
}

std::vector<std::uint32_t> poly_mul_mod(const std::vector<std::uint32_t>& a,
                                        const std::vector<std::uint32_t>& b,
                                        const std::vector<std::uint32_t>& mod, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint32_t> c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = std::uint32_t((c[i + j] + std::uint64_t(a[i]) * b[j]) % p);
    return poly_mod(std::move(c), mod, p);
}

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; std::uint64_t(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

} // namespace

bool poly_is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& poly) {
    std::vector<std::uint32_t> f = poly;
    trim(f);
    if (f.size() < 2) return false; // constants are not irreducible
    const std::size_t deg = f.size() - 1;
    if (deg == 1) return true;
    // Trial division by every monic polynomial of degree 1..deg/2.
    for (std::size_t dd = 1; dd <= deg / 2; ++dd) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < dd; ++i) count *= p;
        for (std::uint64_t code = 0; code < count; ++code) {
            std::vector<std::uint32_t> g(dd + 1, 0);
            std::uint64_t c = code;
            for (std::size_t i = 0; i < dd; ++i) {
                g[i] = std::uint32_t(c % p);
                c /= p;
            }
            g[dd] = 1;
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

Field::Field(std::uint32_t q) {
    if (q < 2) throw NotPrimePower("field cardinality must be at least 2, got " + std::to_string(q));
    std::uint32_t p = 0;
    for (std::uint32_t d = 2; std::uint64_t(d) * d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    if (p == 0) p = q; // q itself prime
    std::uint32_t m = 0;
    std::uint64_t t = 1;
    while (t < q) {
        t *= p;
        ++m;
    }
    if (t != q) throw NotPrimePower(std::to_string(q) + " is not a prime power");
    if (!is_prime(p)) throw NotPrimePower(std::to_string(q) + " is not a prime power");

    spec_.q = q;
    spec_.p = p;
    spec_.m = m;
    if (m > 1) {
        if (q > 64) throw UnsupportedField("extension fields are supported only up to q = 64, got q = " + std::to_string(q));
        const auto* mod = lookup_modulus(q);
        if (mod == nullptr) throw UnsupportedField("no modulus for q = " + std::to_string(q));
        spec_.modulus = *mod;
        if (!poly_is_irreducible(p, spec_.modulus))
            throw UnsupportedField("modulus for q = " + std::to_string(q) + " is not irreducible");
    }

    tabled_ = q <= 256;
    if (tabled_) {
        add_.resize(std::size_t(q) * q);
        sub_.resize(std::size_t(q) * q);
        mul_.resize(std::size_t(q) * q);
        inv_.assign(q, 0);
        for (std::uint32_t a = 0; a < q; ++a)
            for (std::uint32_t b = 0; b < q; ++b) {
                std::uint32_t s, d, pr;
                if (m == 1) {
                    s = (a + b) % p;
                    d = (a + p - b) % p;
                    pr = std::uint32_t(std::uint64_t(a) * b % p);
                } else {
                    auto pa = decode_poly(a, p, m), pb = decode_poly(b, p, m);
                    std::vector<std::uint32_t> ps(m, 0), pd(m, 0);
                    for (std::uint32_t i = 0; i < m; ++i) {
                        ps[i] = (pa[i] + pb[i]) % p;
                        pd[i] = (pa[i] + p - pb[i]) % p;
                    }
                    s = encode_poly(ps, p);
                    d = encode_poly(pd, p);
                    auto pp = poly_mul_mod(pa, pb, spec_.modulus, p);
                    pp.resize(m, 0);
                    pr = encode_poly(pp, p);
                }
                add_[a * q + b] = s;
                sub_[a * q + b] = d;
                mul_[a * q + b] = pr;
            }
        for (std::uint32_t a = 1; a < q; ++a)
            for (std::uint32_t b = 1; b < q; ++b)
                if (mul_[a * q + b] == 1) {
                    inv_[a] = b;
                    break;
                }
    }
}

std::uint32_t Field::inv(std::uint32_t a) const {
    if (a == 0) throw DivisionByZero("inverse of zero in GF(" + std::to_string(spec_.q) + ")");
    if (tabled_) return inv_[a];
    return pow(a, spec_.p - 2); // Fermat; m == 1 here
}

std::uint32_t Field::pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t r = 1;
    while (e != 0) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

std::uint32_t Field::arith(std::uint32_t a, std::uint32_t b, ArithKind kind) const {
    switch (kind) {
    case ArithKind::Add: return add(a, b);
    case ArithKind::Sub: return sub(a, b);
    case ArithKind::Mul: return mul(a, b);
    case ArithKind::Div:
        if (b == 0) throw DivisionByZero("division by zero in GF(" + std::to_string(spec_.q) + ")");
        return div(a, b);
    }
    throw Error("unknown arithmetic kind");
}

std::vector<std::uint32_t> Field::elements(bool nonzero_only) const {
    std::vector<std::uint32_t> out;
    out.reserve(spec_.q - (nonzero_only ? 1 : 0));
    for (std::uint32_t a = nonzero_only ? 1 : 0; a < spec_.q; ++a) out.push_back(a);
    return out;
}

FieldPtr make_field(std::uint32_t q) { return std::make_shared<Field>(q); }

bool same_field(const Field& a, const Field& b) { return a.spec() == b.spec(); }

} // namespace segrecodes
