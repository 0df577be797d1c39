#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "segrecodes/gf.hpp"

namespace segrecodes {

using Coords = std::vector<std::uint32_t>;

/// A point of P^{s-1}(F_q) stored through its canonical representative:
/// the scalar multiple whose first nonzero coordinate is 1.
struct ProjectivePoint {
    FieldPtr field;
    Coords coords;
};

/// An ordered, deduplicated list of canonical points of P^{s-1}(F_q).
/// The order is part of the value: evaluation codes index their
/// coordinates by it.
struct PointSet {
    FieldPtr field;
    std::uint32_t ambient_dim = 0; // points live in P^{ambient_dim - 1}
    std::vector<Coords> points;
    std::string label;

    std::size_t size() const { return points.size(); }
};

/// Scales v so its first nonzero coordinate is 1. Throws ZeroVector.
Coords canonicalize(const Field& f, Coords v);

/// All of P^{s-1}(F_q), canonical vectors in lexicographic order.
PointSet projective_space(std::uint32_t s, FieldPtr field);

/// Points with every coordinate nonzero; size (q-1)^{s-1}.
PointSet projective_torus(std::uint32_t s, FieldPtr field);

/// Image of the algebraic torus (K*)^n under the monomial map given by
/// `exponents` (one exponent vector of length n per coordinate),
/// canonicalized and deduplicated in first-occurrence order.
PointSet parameterized_set(const std::vector<std::vector<std::uint32_t>>& exponents, FieldPtr field);

/// Segre product of X1 and X2: point (i,j) at row-major index i*|X2|+j is
/// the flattened outer product of the representatives of Q_i and R_j.
PointSet segre_embed(const PointSet& x1, const PointSet& x2);

/// User-supplied point list; canonicalizes, errors on duplicates.
PointSet custom_set(FieldPtr field, std::uint32_t s, const std::vector<Coords>& coords);

/// Text format: header `q=<int> s=<int>`, one comma-separated point per line.
void save_point_set(const PointSet& ps, std::ostream& out);
PointSet load_point_set(std::istream& in, const std::string& label = "file");
PointSet load_point_set_file(const std::string& path);
void save_point_set_file(const PointSet& ps, const std::string& path);

} // namespace segrecodes
