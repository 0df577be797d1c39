#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "segrecodes/gf.hpp"

namespace segrecodes {

inline constexpr std::uint64_t kDefaultDistanceBudget = 1ull << 24;
inline constexpr std::uint64_t kDefaultSubspaceBudget = 1ull << 20;

/// Dense row-major matrix over GF(q).
struct MatrixGF {
    FieldPtr field;
    std::size_t rows = 0, cols = 0;
    std::vector<std::uint32_t> a; // rows*cols entries

    MatrixGF() = default;
    MatrixGF(FieldPtr f, std::size_t r, std::size_t c) : field(std::move(f)), rows(r), cols(c), a(r * c, 0) {}

    std::uint32_t& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    std::uint32_t at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
    std::uint32_t* row(std::size_t i) { return a.data() + i * cols; }
    const std::uint32_t* row(std::size_t i) const { return a.data() + i * cols; }

    bool operator==(const MatrixGF& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

struct RrefResult {
    MatrixGF r;                      // same shape as the input, zero rows at the bottom
    std::size_t rank = 0;
    std::vector<std::size_t> pivots; // pivot column per nonzero row
};

/// Unique reduced row-echelon form over GF(q).
RrefResult rref(const MatrixGF& m);

/// Basis of the row space: RREF with zero rows removed.
MatrixGF row_basis(const MatrixGF& m);

bool rowspace_equal(const MatrixGF& a, const MatrixGF& b);

/// Row (i*rowsB + j) is the flattened outer product of row i of A and
/// row j of B; flat column index u*colsB + v holds A[i,u]*B[j,v].
MatrixGF kronecker(const MatrixGF& a, const MatrixGF& b);

/// Incremental row-space tracker: feeds rows one at a time into an
/// echelon basis. Used for streaming rank computations.
class RowSpace {
public:
    explicit RowSpace(FieldPtr field, std::size_t cols);

    /// Returns true when the row was independent of the space so far.
    bool add_row(std::vector<std::uint32_t> row);

    std::size_t rank() const { return basis_.size(); }
    std::size_t cols() const { return cols_; }

    /// Basis rows in reduced row-echelon form.
    MatrixGF reduced_basis() const;

private:
    FieldPtr field_;
    std::size_t cols_;
    std::vector<std::vector<std::uint32_t>> basis_; // each normalized, leading 1
    std::vector<std::size_t> lead_;                 // leading column per basis row
};

/// A linear code presented by a generator matrix; the RREF basis (zero
/// rows removed) and the dimension are computed on construction.
class LinearCode {
public:
    explicit LinearCode(MatrixGF generators);

    const Field& field() const { return *gen_.field; }
    FieldPtr field_ptr() const { return gen_.field; }
    std::size_t n() const { return gen_.cols; }
    std::size_t k() const { return basis_.rows; }
    const MatrixGF& generators() const { return gen_; }
    const MatrixGF& basis() const { return basis_; }

private:
    MatrixGF gen_;
    MatrixGF basis_;
};

/// Direct (Kronecker) product code: generated by the Kronecker product
/// of the factor bases; n = n1*n2, k = k1*k2.
LinearCode direct_product_code(const LinearCode& c1, const LinearCode& c2);

/// (q^k - 1)/(q - 1), saturating at cap + 1.
std::uint64_t projective_message_count(std::uint32_t q, std::size_t k, std::uint64_t cap);

/// Number of r-dimensional subspaces of GF(q)^k, saturating at cap + 1.
std::uint64_t gaussian_binomial(std::size_t k, std::size_t r, std::uint32_t q, std::uint64_t cap);

/// Exact minimum distance by exhaustive enumeration of projectively
/// normalized messages. Throws BudgetExceeded, never estimates.
std::size_t min_distance(const LinearCode& c, std::uint64_t budget = kDefaultDistanceBudget);

/// Exact r-th generalized Hamming weight: enumerates all r-dimensional
/// message subspaces as RREF canonical matrices (pivot sets in colex
/// order, free entries in odometer order).
std::size_t ghw(const LinearCode& c, std::size_t r, std::uint64_t budget = kDefaultSubspaceBudget);

/// Union of the supports of the given rows (1-based positions are not
/// used anywhere; positions are 0-based indices).
std::vector<std::size_t> support(const std::vector<std::vector<std::uint32_t>>& rows);

/// Weight hierarchy (delta_1, ..., delta_r_max).
struct WeightProfile {
    const LinearCode* code = nullptr;
    std::vector<std::size_t> hierarchy;
};
WeightProfile weight_profile(const LinearCode& c, std::size_t r_max,
                             std::uint64_t distance_budget = kDefaultDistanceBudget,
                             std::uint64_t subspace_budget = kDefaultSubspaceBudget);

/// Text format: header `q=<int> rows=<int> cols=<int>`, then rows of
/// comma-separated codes.
void save_matrix(const MatrixGF& m, std::ostream& out);
MatrixGF load_matrix(std::istream& in);

} // namespace segrecodes
