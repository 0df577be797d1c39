#include "segrecodes/projgeom.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace segrecodes {

Coords canonicalize(const Field& f, Coords v) {
    std::size_t lead = v.size();
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) {
            lead = i;
            break;
        }
    if (lead == v.size()) throw ZeroVector("cannot canonicalize the zero vector");
    const std::uint32_t lambda = f.inv(v[lead]);
    if (lambda != 1)
        for (std::size_t i = lead; i < v.size(); ++i) v[i] = f.mul(lambda, v[i]);
    return v;
}

PointSet projective_space(std::uint32_t s, FieldPtr field) {
    const std::uint32_t q = field->q();
    PointSet ps{field, s, {}, "P^" + std::to_string(s - 1)};
    // Canonical vectors in lexicographic order: zeros, then a leading 1,
    // then arbitrary entries.
    // Lexicographic order on coordinate vectors: later leading positions
    // (more leading zeros) come first.
    Coords v(s, 0);
    for (std::uint32_t lead = s; lead-- > 0;) {
        std::fill(v.begin(), v.end(), 0);
        v[lead] = 1;
        const std::size_t free = s - lead - 1;
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < free; ++i) count *= q;
        for (std::uint64_t code = 0; code < count; ++code) {
            std::uint64_t c = code;
            for (std::size_t i = free; i-- > 0;) {
                std::uint64_t w = 1;
                for (std::size_t j = 0; j < i; ++j) w *= q;
                v[lead + 1 + (free - 1 - i)] = std::uint32_t(c / w);
                c %= w;
            }
            ps.points.push_back(v);
        }
    }
    return ps;
}

PointSet projective_torus(std::uint32_t s, FieldPtr field) {
    const std::uint32_t q = field->q();
    PointSet ps{field, s, {}, "T^" + std::to_string(s - 1)};
    Coords v(s, 1);
    // Canonical torus points have first coordinate 1, others in 1..q-1.
    while (true) {
        ps.points.push_back(v);
        std::size_t i = s;
        while (i-- > 1) {
            if (v[i] + 1 < q) {
                ++v[i];
                std::fill(v.begin() + std::ptrdiff_t(i) + 1, v.end(), 1);
                break;
            }
            if (i == 1) return ps;
        }
        if (s == 1) return ps;
    }
}

PointSet parameterized_set(const std::vector<std::vector<std::uint32_t>>& exponents, FieldPtr field) {
    if (exponents.empty()) throw Error("parameterized_set needs at least one monomial");
    const std::size_t s = exponents.size();
    const std::size_t n = exponents[0].size();
    for (const auto& e : exponents)
        if (e.size() != n) throw DimensionMismatch("exponent vectors must share a length");
    const std::uint32_t q = field->q();
    PointSet ps{field, std::uint32_t(s), {}, "param"};
    std::set<Coords> seen;
    // Enumerate z in (K*)^n lexicographically; the image point of a
    // monomial map on nonzero values is never the zero vector.
    std::vector<std::uint32_t> z(n, 1);
    while (true) {
        Coords v(s);
        for (std::size_t i = 0; i < s; ++i) {
            std::uint32_t val = 1;
            for (std::size_t j = 0; j < n; ++j) val = field->mul(val, field->pow(z[j], exponents[i][j]));
            v[i] = val;
        }
        v = canonicalize(*field, std::move(v));
        if (seen.insert(v).second) ps.points.push_back(v);
        std::size_t i = n;
        bool done = true;
        while (i-- > 0) {
            if (z[i] + 1 < q) {
                ++z[i];
                std::fill(z.begin() + std::ptrdiff_t(i) + 1, z.end(), 1);
                done = false;
                break;
            }
        }
        if (done) break;
    }
    return ps;
}

PointSet segre_embed(const PointSet& x1, const PointSet& x2) {
    if (!same_field(*x1.field, *x2.field)) throw FieldMismatch("segre_embed requires a common field");
    const Field& f = *x1.field;
    const std::uint32_t a1 = x1.ambient_dim, a2 = x2.ambient_dim;
    PointSet ps{x1.field, a1 * a2, {}, "segre(" + x1.label + "," + x2.label + ")"};
    ps.points.reserve(x1.size() * x2.size());
    for (const auto& alpha : x1.points)
        for (const auto& beta : x2.points) {
            Coords v(std::size_t(a1) * a2);
            for (std::uint32_t k = 0; k < a1; ++k)
                for (std::uint32_t l = 0; l < a2; ++l) v[std::size_t(k) * a2 + l] = f.mul(alpha[k], beta[l]);
            // Outer product of canonical vectors is canonical: the first
            // nonzero flat coordinate is alpha_k * beta_l = 1.
            ps.points.push_back(std::move(v));
        }
    return ps;
}

PointSet custom_set(FieldPtr field, std::uint32_t s, const std::vector<Coords>& coords) {
    PointSet ps{field, s, {}, "custom"};
    std::set<Coords> seen;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (coords[i].size() != s) throw DimensionMismatch("point " + std::to_string(i) + " has wrong length");
        Coords v = canonicalize(*field, coords[i]);
        if (!seen.insert(v).second) {
            std::size_t first = 0;
            for (std::size_t j = 0; j < ps.points.size(); ++j)
                if (ps.points[j] == v) {
                    first = j;
                    break;
                }
            throw DuplicatePoint("points " + std::to_string(first) + " and " + std::to_string(i) +
                                 " are projectively equal");
        }
        ps.points.push_back(std::move(v));
    }
    if (ps.points.empty()) throw Error("custom_set: empty point list");
    return ps;
}

void save_point_set(const PointSet& ps, std::ostream& out) {
    out << "q=" << ps.field->q() << " s=" << ps.ambient_dim << "\n";
    for (const auto& pt : ps.points) {
        for (std::size_t i = 0; i < pt.size(); ++i) out << (i ? "," : "") << pt[i];
        out << "\n";
    }
}

PointSet load_point_set(std::istream& in, const std::string& label) {
    std::string header;
    if (!std::getline(in, header)) throw ParseError("point-set file: missing header");
    std::uint32_t q = 0, s = 0;
    if (std::sscanf(header.c_str(), "q=%u s=%u", &q, &s) != 2)
        throw ParseError("point-set file: bad header '" + header + "'");
    FieldPtr field = make_field(q);
    std::vector<Coords> coords;
    std::string line;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        Coords v;
        std::stringstream ss(line);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            const long val = std::stol(tok);
            if (val < 0 || std::uint32_t(val) >= q)
                throw ParseError("point-set file line " + std::to_string(lineno) + ": code out of range");
            v.push_back(std::uint32_t(val));
        }
        if (v.size() != s)
            throw ParseError("point-set file line " + std::to_string(lineno) + ": expected " + std::to_string(s) +
                             " coordinates");
        coords.push_back(std::move(v));
    }
    PointSet ps = custom_set(field, s, coords);
    ps.label = label;
    return ps;
}

PointSet load_point_set_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open point-set file '" + path + "'");
    return load_point_set(in, path);
}

void save_point_set_file(const PointSet& ps, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write point-set file '" + path + "'");
    save_point_set(ps, out);
}

} // namespace segrecodes
