#include "segrecodes/matcodes.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

namespace segrecodes {

namespace {

std::uint64_t mul_sat(std::uint64_t a, std::uint64_t b, std::uint64_t sat) {
    if (a == 0 || b == 0) return 0;
    if (a > sat / b) return sat;
    return a * b;
}

std::uint64_t add_sat(std::uint64_t a, std::uint64_t b, std::uint64_t sat) {
    return (a > sat - b) ? sat : a + b;
}

// out[t] = cur[t] + c * src[t], c nonzero.
void axpy(const Field& f, std::uint32_t c, const std::uint32_t* src, const std::uint32_t* cur,
          std::uint32_t* out, std::size_t n) {
    if (const std::uint32_t* mr = f.mul_row(c)) {
        for (std::size_t t = 0; t < n; ++t) out[t] = f.add(cur[t], mr[src[t]]);
    } else {
        for (std::size_t t = 0; t < n; ++t) out[t] = f.add(cur[t], f.mul(c, src[t]));
    }
}

} // namespace

RowSpace::RowSpace(FieldPtr field, std::size_t cols) : field_(std::move(field)), cols_(cols) {}

bool RowSpace::add_row(std::vector<std::uint32_t> row) {
    const Field& f = *field_;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        const std::uint32_t c = row[lead_[i]];
        if (c == 0) continue;
        const std::uint32_t* b = basis_[i].data();
        if (const std::uint32_t* mr = f.mul_row(c)) {
            for (std::size_t t = lead_[i]; t < cols_; ++t) row[t] = f.sub(row[t], mr[b[t]]);
        } else {
            for (std::size_t t = lead_[i]; t < cols_; ++t) row[t] = f.sub(row[t], f.mul(c, b[t]));
        }
    }
    std::size_t lead = cols_;
    for (std::size_t t = 0; t < cols_; ++t)
        if (row[t] != 0) {
            lead = t;
            break;
        }
    if (lead == cols_) return false;
    if (row[lead] != 1) {
        const std::uint32_t li = f.inv(row[lead]);
        for (std::size_t t = lead; t < cols_; ++t) row[t] = f.mul(li, row[t]);
    }
    basis_.push_back(std::move(row));
    lead_.push_back(lead);
    return true;
}

MatrixGF RowSpace::reduced_basis() const {
    const Field& f = *field_;
    std::vector<std::size_t> order(basis_.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return lead_[a] < lead_[b]; });

    std::vector<std::vector<std::uint32_t>> rows;
    std::vector<std::size_t> leads;
    rows.reserve(basis_.size());
    for (std::size_t idx : order) {
        rows.push_back(basis_[idx]);
        leads.push_back(lead_[idx]);
    }
    // Clear every pivot column in the other rows.
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows.size(); ++j) {
            if (i == j) continue;
            const std::uint32_t c = rows[j][leads[i]];
            if (c == 0) continue;
            if (const std::uint32_t* mr = f.mul_row(c)) {
                for (std::size_t t = leads[i]; t < cols_; ++t) rows[j][t] = f.sub(rows[j][t], mr[rows[i][t]]);
            } else {
                for (std::size_t t = leads[i]; t < cols_; ++t)
                    rows[j][t] = f.sub(rows[j][t], f.mul(c, rows[i][t]));
            }
        }
    MatrixGF out(field_, rows.size(), cols_);
    for (std::size_t i = 0; i < rows.size(); ++i)
        std::copy(rows[i].begin(), rows[i].end(), out.row(i));
    return out;
}

RrefResult rref(const MatrixGF& m) {
    RowSpace rs(m.field, m.cols);
    for (std::size_t i = 0; i < m.rows; ++i)
        rs.add_row(std::vector<std::uint32_t>(m.row(i), m.row(i) + m.cols));
    MatrixGF basis = rs.reduced_basis();
    RrefResult res;
    res.rank = basis.rows;
    res.r = MatrixGF(m.field, m.rows, m.cols);
    for (std::size_t i = 0; i < basis.rows; ++i)
        std::copy(basis.row(i), basis.row(i) + m.cols, res.r.row(i));
    for (std::size_t i = 0; i < basis.rows; ++i)
        for (std::size_t t = 0; t < m.cols; ++t)
            if (basis.at(i, t) != 0) {
                res.pivots.push_back(t);
                break;
            }
    return res;
}

MatrixGF row_basis(const MatrixGF& m) {
    RowSpace rs(m.field, m.cols);
    for (std::size_t i = 0; i < m.rows; ++i)
        rs.add_row(std::vector<std::uint32_t>(m.row(i), m.row(i) + m.cols));
    return rs.reduced_basis();
}

bool rowspace_equal(const MatrixGF& a, const MatrixGF& b) {
    if (!same_field(*a.field, *b.field) || a.cols != b.cols)
        throw DimensionMismatch("rowspace_equal requires a common field and column count");
    return row_basis(a) == row_basis(b);
}

MatrixGF kronecker(const MatrixGF& a, const MatrixGF& b) {
    if (!same_field(*a.field, *b.field)) throw FieldMismatch("kronecker requires a common field");
    const Field& f = *a.field;
    MatrixGF out(a.field, a.rows * b.rows, a.cols * b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < b.rows; ++j) {
            std::uint32_t* dst = out.row(i * b.rows + j);
            for (std::size_t u = 0; u < a.cols; ++u) {
                const std::uint32_t au = a.at(i, u);
                if (au == 0) continue;
                if (const std::uint32_t* mr = f.mul_row(au)) {
                    for (std::size_t v = 0; v < b.cols; ++v) dst[u * b.cols + v] = mr[b.at(j, v)];
                } else {
                    for (std::size_t v = 0; v < b.cols; ++v) dst[u * b.cols + v] = f.mul(au, b.at(j, v));
                }
            }
        }
    return out;
}

LinearCode::LinearCode(MatrixGF generators) : gen_(std::move(generators)), basis_(row_basis(gen_)) {}

LinearCode direct_product_code(const LinearCode& c1, const LinearCode& c2) {
    LinearCode prod(kronecker(c1.basis(), c2.basis()));
    if (prod.k() != c1.k() * c2.k())
        throw Error("direct product dimension mismatch: expected " + std::to_string(c1.k() * c2.k()) +
                    ", got " + std::to_string(prod.k()));
    return prod;
}

std::uint64_t projective_message_count(std::uint32_t q, std::size_t k, std::uint64_t cap) {
    const std::uint64_t sat = cap == UINT64_MAX ? cap : cap + 1;
    std::uint64_t total = 0, power = 1;
    for (std::size_t i = 0; i < k; ++i) {
        total = add_sat(total, power, sat);
        power = mul_sat(power, q, sat);
    }
    return total;
}

std::uint64_t gaussian_binomial(std::size_t k, std::size_t r, std::uint32_t q, std::uint64_t cap) {
    if (r > k) return 0;
    const std::uint64_t sat = cap == UINT64_MAX ? cap : cap + 1;
    // Pascal-type recurrence G(k,r) = G(k-1,r-1) + q^r G(k-1,r).
    std::vector<std::uint64_t> g(r + 1, 0);
    g[0] = 1;
    std::vector<std::uint64_t> qpow(r + 1, 1);
    for (std::size_t i = 1; i <= r; ++i) qpow[i] = mul_sat(qpow[i - 1], q, sat);
    for (std::size_t kk = 1; kk <= k; ++kk)
        for (std::size_t rr = std::min(r, kk); rr >= 1; --rr)
            g[rr] = add_sat(g[rr - 1], mul_sat(qpow[rr], g[rr], sat), sat);
    return g[r];
}

std::size_t min_distance(const LinearCode& c, std::uint64_t budget) {
    const std::size_t k = c.k(), n = c.n();
    if (k == 0) throw Error("min_distance of the zero code");
    if (k == n) return 1; // full space contains weight-1 words
    const Field& f = c.field();
    const std::uint32_t q = f.q();
    const std::uint64_t count = projective_message_count(q, k, budget);
    if (count > budget)
        throw BudgetExceeded("min_distance: " + std::to_string(count) + " projective messages exceed budget " +
                             std::to_string(budget));

    std::size_t best = n + 1;
    // Scratch codeword per recursion level.
    std::vector<std::vector<std::uint32_t>> scratch(k + 1, std::vector<std::uint32_t>(n));
    const MatrixGF& basis = c.basis();

    // Messages with first nonzero entry fixed to 1; Hamming weight is
    // invariant under nonzero scaling.
    auto dfs = [&](auto&& self, std::size_t j, const std::uint32_t* cur) -> void {
        if (best == 1) return;
        if (j == k) {
            std::size_t w = 0;
            for (std::size_t t = 0; t < n; ++t) w += cur[t] != 0;
            if (w < best) best = w;
            return;
        }
        self(self, j + 1, cur); // coefficient 0
        for (std::uint32_t coef = 1; coef < q; ++coef) {
            axpy(f, coef, basis.row(j), cur, scratch[j].data(), n);
            self(self, j + 1, scratch[j].data());
        }
    };

    std::vector<std::uint32_t> zero(n, 0);
    for (std::size_t lead = 0; lead < k && best > 1; ++lead) {
        axpy(f, 1, basis.row(lead), zero.data(), scratch[k].data(), n);
        dfs(dfs, lead + 1, scratch[k].data());
    }
    return best;
}

std::vector<std::size_t> support(const std::vector<std::vector<std::uint32_t>>& rows) {
    std::vector<std::size_t> out;
    if (rows.empty()) return out;
    const std::size_t n = rows[0].size();
    for (std::size_t t = 0; t < n; ++t)
        for (const auto& r : rows)
            if (r[t] != 0) {
                out.push_back(t);
                break;
            }
    return out;
}

std::size_t ghw(const LinearCode& c, std::size_t r, std::uint64_t budget) {
    const std::size_t k = c.k(), n = c.n();
    if (r < 1 || r > k) throw Error("ghw: subcode dimension out of range");
    const Field& f = c.field();
    const std::uint32_t q = f.q();
    const std::uint64_t count = gaussian_binomial(k, r, q, budget);
    if (count > budget)
        throw BudgetExceeded("ghw: " + std::to_string(count) + " subspaces exceed budget " +
                             std::to_string(budget));
    const MatrixGF& basis = c.basis();

    std::size_t best = n + 1;
    // Encoded rows of the current canonical RREF message matrix.
    std::vector<std::vector<std::uint32_t>> enc(r, std::vector<std::uint32_t>(n));
    std::vector<std::vector<std::uint32_t>> saved; // per-depth snapshots

    std::vector<std::size_t> pivots(r);
    for (std::size_t i = 0; i < r; ++i) pivots[i] = i;

    auto run_pivot_set = [&]() {
        // Free slots: (row i, message column j) with j > pivots[i], j not a pivot.
        std::vector<std::pair<std::size_t, std::size_t>> slots;
        std::vector<bool> is_pivot(k, false);
        for (std::size_t p : pivots) is_pivot[p] = true;
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = pivots[i] + 1; j < k; ++j)
                if (!is_pivot[j]) slots.emplace_back(i, j);
        if (saved.size() < slots.size()) saved.resize(slots.size(), std::vector<std::uint32_t>(n));

        for (std::size_t i = 0; i < r; ++i)
            std::copy(basis.row(pivots[i]), basis.row(pivots[i]) + n, enc[i].begin());

        auto dfs = [&](auto&& self, std::size_t t) -> void {
            if (t == slots.size()) {
                std::size_t w = 0;
                for (std::size_t pos = 0; pos < n; ++pos)
                    for (std::size_t i = 0; i < r; ++i)
                        if (enc[i][pos] != 0) {
                            ++w;
                            break;
                        }
                if (w < best) best = w;
                return;
            }
            const auto [row, col] = slots[t];
            self(self, t + 1); // coefficient 0
            saved[t] = enc[row];
            for (std::uint32_t coef = 1; coef < q; ++coef) {
                axpy(f, coef, basis.row(col), saved[t].data(), enc[row].data(), n);
                self(self, t + 1);
            }
            enc[row] = saved[t];
        };
        dfs(dfs, 0);
    };

    // Pivot sets in colexicographic order.
    while (true) {
        run_pivot_set();
        std::size_t i = 0;
        while (i < r) {
            const std::size_t limit = (i + 1 < r) ? pivots[i + 1] : k;
            if (pivots[i] + 1 < limit) break;
            ++i;
        }
        if (i == r) break;
        ++pivots[i];
        for (std::size_t j = 0; j < i; ++j) pivots[j] = j;
    }
    return best;
}

WeightProfile weight_profile(const LinearCode& c, std::size_t r_max, std::uint64_t distance_budget,
                             std::uint64_t subspace_budget) {
    WeightProfile wp;
    wp.code = &c;
    for (std::size_t r = 1; r <= r_max; ++r)
        wp.hierarchy.push_back(r == 1 ? min_distance(c, distance_budget) : ghw(c, r, subspace_budget));
    return wp;
}

void save_matrix(const MatrixGF& m, std::ostream& out) {
    out << "q=" << m.field->q() << " rows=" << m.rows << " cols=" << m.cols << "\n";
    for (std::size_t i = 0; i < m.rows; ++i) {
        for (std::size_t j = 0; j < m.cols; ++j) out << (j ? "," : "") << m.at(i, j);
        out << "\n";
    }
}

MatrixGF load_matrix(std::istream& in) {
    std::string header;
    if (!std::getline(in, header)) throw ParseError("matrix file: missing header");
    std::uint32_t q = 0;
    std::size_t rows = 0, cols = 0;
    if (std::sscanf(header.c_str(), "q=%u rows=%zu cols=%zu", &q, &rows, &cols) != 3)
        throw ParseError("matrix file: bad header '" + header + "'");
    MatrixGF m(make_field(q), rows, cols);
    std::string line;
    for (std::size_t i = 0; i < rows; ++i) {
        if (!std::getline(in, line)) throw ParseError("matrix file: missing row " + std::to_string(i));
        std::stringstream ss(line);
        std::string tok;
        std::size_t j = 0;
        while (std::getline(ss, tok, ',')) {
            if (j >= cols) throw ParseError("matrix file: too many entries in row " + std::to_string(i));
            const long val = std::stol(tok);
            if (val < 0 || std::uint32_t(val) >= q) throw ParseError("matrix file: entry out of range");
            m.at(i, j++) = std::uint32_t(val);
        }
        if (j != cols) throw ParseError("matrix file: too few entries in row " + std::to_string(i));
    }
    return m;
}

} // namespace segrecodes
