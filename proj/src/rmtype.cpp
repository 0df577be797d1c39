#include "segrecodes/rmtype.hpp"

#include <fstream>
#include <map>

#include <nlohmann/json.hpp>

namespace segrecodes {

namespace {

void gen_monomials(std::uint32_t s, std::uint32_t d, std::vector<std::uint32_t>& cur,
                   std::vector<Monomial>& out) {
    if (cur.size() + 1 == s) {
        cur.push_back(d);
        std::uint32_t deg = 0;
        for (std::uint32_t e : cur) deg += e;
        out.push_back(Monomial{cur, deg});
        cur.pop_back();
        return;
    }
    for (std::uint32_t e = d + 1; e-- > 0;) {
        cur.push_back(e);
        gen_monomials(s, d - e, cur, out);
        cur.pop_back();
    }
}

// Coordinate powers for every point: pow[point][var * (d+1) + e].
std::vector<std::vector<std::uint32_t>> power_table(const PointSet& x, std::uint32_t d) {
    const Field& f = *x.field;
    const std::uint32_t s = x.ambient_dim;
    std::vector<std::vector<std::uint32_t>> tab(x.size());
    for (std::size_t pi = 0; pi < x.size(); ++pi) {
        auto& t = tab[pi];
        t.resize(std::size_t(s) * (d + 1));
        for (std::uint32_t v = 0; v < s; ++v) {
            t[std::size_t(v) * (d + 1)] = 1; // 0^0 = 1
            for (std::uint32_t e = 1; e <= d; ++e)
                t[std::size_t(v) * (d + 1) + e] = f.mul(t[std::size_t(v) * (d + 1) + e - 1], x.points[pi][v]);
        }
    }
    return tab;
}

std::vector<std::uint32_t> evaluation_row(const Field& f, const Monomial& m, const PointSet& x,
                                          const std::vector<std::vector<std::uint32_t>>& powers,
                                          std::uint32_t d) {
    std::vector<std::uint32_t> row(x.size());
    for (std::size_t pi = 0; pi < x.size(); ++pi) {
        std::uint32_t val = 1;
        const auto& t = powers[pi];
        for (std::size_t v = 0; v < m.exponents.size(); ++v) {
            const std::uint32_t e = m.exponents[v];
            if (e != 0) val = f.mul(val, t[v * (d + 1) + e]);
        }
        row[pi] = val;
    }
    return row;
}

} // namespace

std::vector<Monomial> monomials_of_degree(std::uint32_t s, std::uint32_t d) {
    if (s < 1) throw Error("monomials_of_degree: need at least one variable");
    std::vector<Monomial> out;
    std::vector<std::uint32_t> cur;
    gen_monomials(s, d, cur, out);
    return out;
}

std::uint32_t evaluate_monomial(const Field& f, const Monomial& m, const Coords& point) {
    if (m.exponents.size() != point.size()) throw DimensionMismatch("monomial arity != point length");
    std::uint32_t val = 1;
    for (std::size_t v = 0; v < point.size(); ++v)
        if (m.exponents[v] != 0) val = f.mul(val, f.pow(point[v], m.exponents[v]));
    return val;
}

EvaluationCode evaluation_code(const PointSet& x, std::uint32_t d) {
    if (x.points.empty()) throw Error("evaluation_code: empty point set");
    const Field& f = *x.field;
    const auto monos = monomials_of_degree(x.ambient_dim, d);
    const auto powers = power_table(x, d);
    MatrixGF gen(x.field, monos.size(), x.size());
    for (std::size_t i = 0; i < monos.size(); ++i) {
        auto row = evaluation_row(f, monos[i], x, powers, d);
        std::copy(row.begin(), row.end(), gen.row(i));
    }
    LinearCode code(std::move(gen));
    const std::size_t h = code.k();
    return EvaluationCode{x, d, std::move(code), h};
}

std::size_t hilbert_function(const PointSet& x, std::uint32_t d) {
    if (x.points.empty()) throw Error("hilbert_function: empty point set");
    const Field& f = *x.field;
    const auto monos = monomials_of_degree(x.ambient_dim, d);
    const auto powers = power_table(x, d);
    RowSpace rs(x.field, x.size());
    for (const auto& m : monos) {
        rs.add_row(evaluation_row(f, m, x, powers, d));
        if (rs.rank() == x.size()) break; // H_X(d) <= |X|
    }
    return rs.rank();
}

QuotientInvariants quotient_invariants(const PointSet& x) {
    QuotientInvariants qi;
    qi.degree = x.size();
    qi.krull_dim = 1;
    const std::uint32_t cap = std::uint32_t(x.size()) * x.ambient_dim + 1;
    for (std::uint32_t d = 0;; ++d) {
        if (d > cap) throw Error("quotient_invariants: regularity loop exceeded defensive cap");
        const std::size_t h = hilbert_function(x, d);
        qi.hilbert_values.push_back(h);
        if (h == x.size()) {
            qi.regularity = d;
            break;
        }
    }
    return qi;
}

const QuotientInvariants& quotient_invariants_cached(const PointSet& x) {
    static std::map<std::string, QuotientInvariants> cache;
    std::string key = std::to_string(x.field->q()) + "|" + std::to_string(x.ambient_dim) + "|";
    for (const auto& pt : x.points) {
        for (std::uint32_t c : pt) key += std::to_string(c) + ",";
        key += ";";
    }
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(std::move(key), quotient_invariants(x)).first;
    return it->second;
}

void save_evaluation_code(const EvaluationCode& ec, const std::string& path) {
    {
        std::ofstream out(path);
        if (!out) throw Error("cannot write matrix file '" + path + "'");
        save_matrix(ec.code.generators(), out);
    }
    nlohmann::json j = {
        {"label", ec.points.label}, {"q", ec.points.field->q()}, {"s", ec.points.ambient_dim},
        {"d", ec.d},                {"n", ec.code.n()},          {"k", ec.code.k()},
        {"hilbert", ec.hilbert},
    };
    std::ofstream side(path + ".json");
    if (!side) throw Error("cannot write sidecar '" + path + ".json'");
    side << j.dump(2) << "\n";
}

} // namespace segrecodes
