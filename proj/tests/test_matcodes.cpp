#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "segrecodes/matcodes.hpp"

using namespace segrecodes;

namespace {

MatrixGF mat(std::uint32_t q, std::size_t rows, std::size_t cols,
             std::initializer_list<std::uint32_t> entries) {
    MatrixGF m(make_field(q), rows, cols);
    std::copy(entries.begin(), entries.end(), m.a.begin());
    return m;
}

// Independent distance oracle: all q^k messages, no projective shortcut.
std::size_t oracle_min_distance(const LinearCode& c) {
    const Field& f = c.field();
    const std::uint32_t q = f.q();
    const std::size_t k = c.k(), n = c.n();
    std::size_t best = n + 1;
    std::vector<std::uint32_t> msg(k, 0);
    while (true) {
        bool nonzero = false;
        for (std::uint32_t x : msg) nonzero |= x != 0;
        if (nonzero) {
            std::size_t w = 0;
            for (std::size_t t = 0; t < n; ++t) {
                std::uint32_t v = 0;
                for (std::size_t j = 0; j < k; ++j)
                    v = f.add(v, f.mul(msg[j], c.basis().at(j, t)));
                w += v != 0;
            }
            best = std::min(best, w);
        }
        std::size_t i = k;
        bool done = true;
        while (i-- > 0) {
            if (msg[i] + 1 < q) {
                ++msg[i];
                std::fill(msg.begin() + std::ptrdiff_t(i) + 1, msg.end(), 0);
                done = false;
                break;
            }
        }
        if (done) break;
    }
    return best;
}

// Independent second-weight oracle: all pairs of linearly independent
// codewords, minimum union support.
std::size_t oracle_ghw2(const LinearCode& c) {
    const Field& f = c.field();
    const std::uint32_t q = f.q();
    const std::size_t k = c.k(), n = c.n();
    std::vector<std::vector<std::uint32_t>> words;
    std::vector<std::uint32_t> msg(k, 0);
    while (true) {
        std::vector<std::uint32_t> w(n, 0);
        for (std::size_t t = 0; t < n; ++t)
            for (std::size_t j = 0; j < k; ++j) w[t] = f.add(w[t], f.mul(msg[j], c.basis().at(j, t)));
        if (std::any_of(w.begin(), w.end(), [](std::uint32_t x) { return x != 0; }))
            words.push_back(std::move(w));
        std::size_t i = k;
        bool done = true;
        while (i-- > 0) {
            if (msg[i] + 1 < q) {
                ++msg[i];
                std::fill(msg.begin() + std::ptrdiff_t(i) + 1, msg.end(), 0);
                done = false;
                break;
            }
        }
        if (done) break;
    }
    std::size_t best = n + 1;
    for (std::size_t a = 0; a < words.size(); ++a)
        for (std::size_t b = a + 1; b < words.size(); ++b) {
            bool dependent = false;
            for (std::uint32_t l = 1; l < q && !dependent; ++l) {
                bool all = true;
                for (std::size_t t = 0; t < n; ++t)
                    if (words[b][t] != f.mul(l, words[a][t])) {
                        all = false;
                        break;
                    }
                dependent = all;
            }
            if (dependent) continue;
            best = std::min(best, support({words[a], words[b]}).size());
        }
    return best;
}

} // namespace

TEST_CASE("rref examples") {
    auto r1 = rref(mat(2, 2, 3, {1, 0, 1, 1, 0, 1}));
    CHECK(r1.rank == 1);
    CHECK(std::vector<std::uint32_t>(r1.r.row(0), r1.r.row(0) + 3) == std::vector<std::uint32_t>{1, 0, 1});

    auto r2 = rref(mat(3, 2, 2, {1, 1, 1, 2}));
    CHECK(r2.rank == 2);
    CHECK(r2.r == mat(3, 2, 2, {1, 0, 0, 1}));

    CHECK(rref(MatrixGF(make_field(2), 2, 3)).rank == 0);
}

TEST_CASE("rref is idempotent and preserves the row space") {
    std::mt19937_64 gen(7);
    for (std::uint32_t q : {2u, 3u, 4u, 5u})
        for (int trial = 0; trial < 20; ++trial) {
            MatrixGF m(make_field(q), 3, 5);
            for (auto& e : m.a) e = std::uint32_t(gen() % q);
            auto r = rref(m);
            auto rr = rref(r.r);
            CHECK(r.r == rr.r);
            CHECK(rowspace_equal(m, r.r));
        }
}

TEST_CASE("rowspace_equal") {
    CHECK(rowspace_equal(mat(3, 1, 2, {1, 1}), mat(3, 1, 2, {2, 2})));
    CHECK_FALSE(rowspace_equal(mat(2, 1, 2, {1, 0}), mat(2, 1, 2, {0, 1})));
    CHECK(rowspace_equal(mat(2, 2, 2, {1, 0, 0, 1}), mat(2, 2, 2, {1, 1, 1, 0})));
    CHECK_THROWS_AS(rowspace_equal(mat(2, 1, 2, {1, 0}), mat(2, 1, 3, {1, 0, 0})), DimensionMismatch);
}

TEST_CASE("kronecker") {
    auto b = mat(2, 2, 3, {1, 0, 1, 0, 1, 1});
    auto one = mat(2, 1, 1, {1});
    CHECK(kronecker(one, b) == b);

    CHECK(kronecker(mat(2, 1, 2, {1, 1}), mat(2, 1, 2, {1, 0})) == mat(2, 1, 4, {1, 0, 1, 0}));

    auto g = mat(2, 2, 3, {1, 0, 1, 0, 1, 1});
    CHECK(rref(kronecker(g, g)).rank == 4);
}

TEST_CASE("kronecker rank is multiplicative, random pairs") {
    std::mt19937_64 gen(11);
    for (std::uint32_t q : {2u, 3u, 4u})
        for (int trial = 0; trial < 25; ++trial) {
            MatrixGF a(make_field(q), 2 + gen() % 2, 2 + gen() % 3);
            MatrixGF b(make_field(q), 2 + gen() % 2, 2 + gen() % 3);
            for (auto& e : a.a) e = std::uint32_t(gen() % q);
            for (auto& e : b.a) e = std::uint32_t(gen() % q);
            CHECK(rref(kronecker(a, b)).rank == rref(a).rank * rref(b).rank);
        }
}

TEST_CASE("direct_product_code") {
    auto f2 = make_field(2);
    LinearCode full2(mat(2, 2, 2, {1, 0, 0, 1}));
    LinearCode prod = direct_product_code(full2, full2);
    CHECK(prod.n() == 4);
    CHECK(prod.k() == 4);

    LinearCode c32(mat(2, 2, 3, {1, 0, 1, 0, 1, 1}));
    LinearCode p94 = direct_product_code(c32, c32);
    CHECK(p94.n() == 9);
    CHECK(p94.k() == 4);

    LinearCode rep(mat(2, 1, 2, {1, 1}));
    LinearCode rep4 = direct_product_code(rep, rep);
    CHECK(rep4.basis() == mat(2, 1, 4, {1, 1, 1, 1}));
}

TEST_CASE("min_distance examples, cross-checked by the exhaustive oracle") {
    LinearCode c32(mat(2, 2, 3, {1, 0, 1, 0, 1, 1}));
    CHECK(min_distance(c32) == 2);
    CHECK(oracle_min_distance(c32) == 2);

    LinearCode rep(mat(3, 1, 4, {1, 1, 1, 1}));
    CHECK(min_distance(rep) == 4);
    CHECK(oracle_min_distance(rep) == 4);

    LinearCode p94 = direct_product_code(c32, c32);
    CHECK(min_distance(p94) == 4);
    CHECK(oracle_min_distance(p94) == 4);
}

TEST_CASE("min_distance budget is a hard error") {
    LinearCode c32(mat(2, 2, 3, {1, 0, 1, 0, 1, 1}));
    CHECK_THROWS_AS(min_distance(c32, 2), BudgetExceeded); // 3 projective messages > 2
}

TEST_CASE("ghw examples") {
    LinearCode c32(mat(2, 2, 3, {1, 0, 1, 0, 1, 1}));
    CHECK(ghw(c32, 1) == min_distance(c32));
    CHECK(ghw(c32, 2) == 3);
    CHECK(oracle_ghw2(c32) == 3);

    LinearCode p94 = direct_product_code(c32, c32);
    CHECK(ghw(p94, 2) == 6);
    CHECK(oracle_ghw2(p94) == 6);
    CHECK_THROWS_AS(ghw(p94, 5, kDefaultSubspaceBudget), Error); // r > k
}

TEST_CASE("ghw matches min_distance at r = 1 across random codes") {
    std::mt19937_64 gen(13);
    for (std::uint32_t q : {2u, 3u})
        for (int trial = 0; trial < 10; ++trial) {
            MatrixGF g(make_field(q), 2, 5);
            for (auto& e : g.a) e = std::uint32_t(gen() % q);
            LinearCode c(g);
            if (c.k() == 0) continue;
            CHECK(ghw(c, 1) == min_distance(c));
        }
}

TEST_CASE("gaussian binomial counts") {
    CHECK(gaussian_binomial(2, 1, 2, UINT64_MAX) == 3);
    CHECK(gaussian_binomial(4, 2, 2, UINT64_MAX) == 35);
    CHECK(gaussian_binomial(9, 2, 3, UINT64_MAX) == 8069620);
    CHECK(gaussian_binomial(3, 3, 5, UINT64_MAX) == 1);
    CHECK(projective_message_count(2, 3, UINT64_MAX) == 7);
    CHECK(projective_message_count(3, 9, UINT64_MAX) == 9841);
}

TEST_CASE("support") {
    CHECK(support({{1, 0, 1}}) == std::vector<std::size_t>{0, 2});
    CHECK(support({{1, 0, 0}, {0, 0, 1}}) == std::vector<std::size_t>{0, 2});
    CHECK(support({{1, 1, 0}, {0, 1, 1}}) == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("weight hierarchy is strictly increasing within the Singleton-type bound") {
    LinearCode c32(mat(2, 2, 3, {1, 0, 1, 0, 1, 1}));
    LinearCode p94 = direct_product_code(c32, c32);
    for (const LinearCode* c : {&c32, &p94}) {
        auto wp = weight_profile(*c, c->k());
        for (std::size_t r = 1; r <= wp.hierarchy.size(); ++r) {
            if (r > 1) CHECK(wp.hierarchy[r - 1] > wp.hierarchy[r - 2]);
            CHECK(wp.hierarchy[r - 1] <= c->n() - c->k() + r);
        }
    }
}

TEST_CASE("min_distance is monomial-equivalence invariant") {
    std::mt19937_64 gen(17);
    LinearCode c32(mat(2, 2, 3, {1, 0, 1, 0, 1, 1}));
    LinearCode base(mat(3, 2, 4, {1, 0, 1, 2, 0, 1, 1, 1}));
    for (const LinearCode* c : {&c32, &base}) {
        const Field& f = c->field();
        const std::size_t n = c->n();
        const std::size_t d0 = min_distance(*c);
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<std::size_t> perm(n);
            std::iota(perm.begin(), perm.end(), 0);
            for (std::size_t i = n; i-- > 1;) std::swap(perm[i], perm[gen() % (i + 1)]);
            MatrixGF g(c->field_ptr(), c->basis().rows, n);
            std::vector<std::uint32_t> scales(n);
            for (auto& s : scales) s = 1 + std::uint32_t(gen() % (f.q() - 1));
            for (std::size_t i = 0; i < g.rows; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    g.at(i, j) = f.mul(scales[j], c->basis().at(i, perm[j]));
            LinearCode tc(g);
            CHECK(tc.k() == c->k());
            CHECK(min_distance(tc) == d0);
        }
    }
}

TEST_CASE("matrix file round-trip") {
    auto m = mat(4, 2, 3, {1, 2, 3, 0, 1, 2});
    std::stringstream ss;
    save_matrix(m, ss);
    CHECK(load_matrix(ss) == m);
    std::stringstream bad("q=2 rows=1 cols=2\n5,0\n");
    CHECK_THROWS_AS(load_matrix(bad), ParseError);
}
