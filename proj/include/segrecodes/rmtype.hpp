#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "segrecodes/matcodes.hpp"
#include "segrecodes/projgeom.hpp"

namespace segrecodes {

struct Monomial {
    std::vector<std::uint32_t> exponents;
    std::uint32_t degree = 0; // sum of exponents
};

/// All monomials in s variables of total degree d, in graded-lex order
/// (exponent vectors descending lexicographically); count C(d+s-1, s-1).
std::vector<Monomial> monomials_of_degree(std::uint32_t s, std::uint32_t d);

/// Product of coordinate powers at the stored representative; 0^0 = 1.
std::uint32_t evaluate_monomial(const Field& f, const Monomial& m, const Coords& point);

/// Projective Reed-Muller-type code C_X(d): row space of the matrix of
/// degree-d monomials evaluated at the points of X in their stored order.
struct EvaluationCode {
    PointSet points;
    std::uint32_t d = 0;
    LinearCode code;
    std::size_t hilbert = 0; // = code.k()
};

EvaluationCode evaluation_code(const PointSet& x, std::uint32_t d);

/// H_X(d): rank of the evaluation matrix, computed by streaming rows with
/// early exit once the rank reaches |X|.
std::size_t hilbert_function(const PointSet& x, std::uint32_t d);

struct QuotientInvariants {
    std::vector<std::size_t> hilbert_values; // H_X(0), ..., H_X(regularity)
    std::uint32_t regularity = 0;            // least d with H_X(d) = |X|
    std::size_t degree = 0;                  // |X|
    std::uint32_t krull_dim = 1;             // always 1 for finite nonempty X
};

QuotientInvariants quotient_invariants(const PointSet& x);

/// Same computation behind a process-wide memo keyed by point-set content;
/// repeated sweeps over the same set pay only once.
const QuotientInvariants& quotient_invariants_cached(const PointSet& x);

/// Matrix file at `path`, JSON sidecar {label,q,s,d,n,k,hilbert} at
/// `path` + ".json".
void save_evaluation_code(const EvaluationCode& ec, const std::string& path);

} // namespace segrecodes
