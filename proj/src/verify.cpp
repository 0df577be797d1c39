#include "segrecodes/verify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

namespace segrecodes {

namespace {

std::vector<std::uint32_t> parse_uint_list(const std::string& text, char sep) {
    std::vector<std::uint32_t> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, sep)) {
        if (tok.empty()) throw ParseError("empty entry in '" + text + "'");
        out.push_back(std::uint32_t(std::stoul(tok)));
    }
    return out;
}

std::vector<std::vector<std::uint32_t>> parse_vector_list(const std::string& text) {
    std::vector<std::vector<std::uint32_t>> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ';'))
        if (!tok.empty()) out.push_back(parse_uint_list(tok, ','));
    if (out.empty()) throw ParseError("no vectors in '" + text + "'");
    return out;
}

std::string point_set_key(const PointSet& x) {
    std::string key = std::to_string(x.field->q()) + "|" + std::to_string(x.ambient_dim) + "|";
    for (const auto& pt : x.points) {
        for (std::uint32_t c : pt) key += std::to_string(c) + ",";
        key += ";";
    }
    return key;
}

struct RegCheck {
    std::uint32_t reg1 = 0, reg2 = 0, regx = 0;
    bool reg_ok = false;
    std::optional<std::size_t> delta_at_r, delta_at_r1;
    std::string note;
};

// Clause (f) is degree-independent; memoize it per (X1, X2) pair so a
// sweep over a d-grid pays for the regularity-degree codes only once.
const RegCheck& reg_check_cached(const PointSet& x1, const PointSet& x2, const PointSet& x,
                                 std::uint64_t distance_budget) {
    static std::map<std::string, RegCheck> cache;
    const std::string key = point_set_key(x1) + "#" + point_set_key(x2);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    RegCheck rc;
    rc.reg1 = quotient_invariants_cached(x1).regularity;
    rc.reg2 = quotient_invariants_cached(x2).regularity;
    rc.regx = quotient_invariants_cached(x).regularity;
    rc.reg_ok = rc.regx == std::max(rc.reg1, rc.reg2);
    const std::uint32_t dstar = std::max(rc.reg1, rc.reg2);
    for (std::uint32_t off = 0; off <= 1; ++off) {
        const std::uint32_t deg = std::max(dstar + off, 1u); // theorem clauses need d >= 1
        try {
            EvaluationCode ec = evaluation_code(x, deg);
            const std::size_t delta = min_distance(ec.code, distance_budget);
            (off == 0 ? rc.delta_at_r : rc.delta_at_r1) = delta;
        } catch (const BudgetExceeded& e) {
            rc.note = e.what();
        }
    }
    return cache.emplace(key, std::move(rc)).first->second;
}

std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string opt_str(const std::optional<std::size_t>& v) {
    return v ? std::to_string(*v) : std::string();
}

} // namespace

SetSpec SetSpec::parse(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw ParseError("set spec '" + text + "' needs kind:params");
    const std::string kind = text.substr(0, colon);
    const std::string rest = text.substr(colon + 1);
    SetSpec spec;
    if (kind == "space" || kind == "torus") {
        spec.kind = kind == "space" ? Kind::Space : Kind::Torus;
        spec.s = std::uint32_t(std::stoul(rest));
        if (spec.s < 1) throw ParseError("ambient dimension must be positive");
    } else if (kind == "param") {
        spec.kind = Kind::Param;
        spec.exponents = parse_vector_list(rest);
    } else if (kind == "custom") {
        spec.kind = Kind::Custom;
        spec.coords = parse_vector_list(rest);
    } else if (kind == "file") {
        spec.kind = Kind::File;
        spec.path = rest;
    } else if (kind == "random") {
        spec.kind = Kind::Random;
        const auto c2 = rest.find(':');
        if (c2 == std::string::npos) throw ParseError("random spec needs s:count");
        spec.s = std::uint32_t(std::stoul(rest.substr(0, c2)));
        spec.count = std::uint32_t(std::stoul(rest.substr(c2 + 1)));
        if (spec.s < 1 || spec.count < 1) throw ParseError("random spec needs positive s and count");
    } else {
        throw ParseError("unknown set kind '" + kind + "'");
    }
    return spec;
}

std::string SetSpec::to_string() const {
    auto join = [](const std::vector<std::vector<std::uint32_t>>& vs) {
        std::string out;
        for (std::size_t i = 0; i < vs.size(); ++i) {
            if (i) out += ";";
            for (std::size_t j = 0; j < vs[i].size(); ++j) out += (j ? "," : "") + std::to_string(vs[i][j]);
        }
        return out;
    };
    switch (kind) {
    case Kind::Space: return "space:" + std::to_string(s);
    case Kind::Torus: return "torus:" + std::to_string(s);
    case Kind::Param: return "param:" + join(exponents);
    case Kind::Custom: return "custom:" + join(coords);
    case Kind::File: return "file:" + path;
    case Kind::Random: return "random:" + std::to_string(s) + ":" + std::to_string(count);
    }
    return "?";
}

PointSet build_point_set(const SetSpec& spec, FieldPtr field, std::uint64_t seed) {
    switch (spec.kind) {
    case SetSpec::Kind::Space: return projective_space(spec.s, field);
    case SetSpec::Kind::Torus: return projective_torus(spec.s, field);
    case SetSpec::Kind::Param: return parameterized_set(spec.exponents, field);
    case SetSpec::Kind::Custom: return custom_set(field, std::uint32_t(spec.coords.at(0).size()), spec.coords);
    case SetSpec::Kind::File: return load_point_set_file(spec.path);
    case SetSpec::Kind::Random: {
        PointSet full = projective_space(spec.s, field);
        if (spec.count > full.size())
            throw Error("random subset larger than P^" + std::to_string(spec.s - 1));
        std::mt19937_64 gen(seed);
        std::vector<std::size_t> idx(full.size());
        std::iota(idx.begin(), idx.end(), 0);
        // Partial Fisher-Yates with modulo draws: deterministic across
        // platforms, unlike uniform_int_distribution.
        for (std::uint32_t i = 0; i < spec.count; ++i) {
            const std::size_t j = i + std::size_t(gen() % (idx.size() - i));
            std::swap(idx[i], idx[j]);
        }
        idx.resize(spec.count);
        std::sort(idx.begin(), idx.end());
        PointSet out{field, spec.s, {}, spec.to_string() + ":seed" + std::to_string(seed)};
        for (std::size_t i : idx) out.points.push_back(full.points[i]);
        return out;
    }
    }
    throw Error("unknown set kind");
}

nlohmann::json SegreConfig::to_json() const {
    return {{"q", q},
            {"x1", x1.to_string()},
            {"x2", x2.to_string()},
            {"d", d},
            {"budget_dist", budgets.distance},
            {"budget_subspaces", budgets.subspaces},
            {"seed", seed}};
}

SegreConfig SegreConfig::from_json(const nlohmann::json& j) {
    SegreConfig c;
    c.q = j.at("q").get<std::uint32_t>();
    c.x1 = SetSpec::parse(j.at("x1").get<std::string>());
    c.x2 = SetSpec::parse(j.at("x2").get<std::string>());
    c.d = j.at("d").get<std::uint32_t>();
    if (j.contains("budget_dist")) c.budgets.distance = j["budget_dist"].get<std::uint64_t>();
    if (j.contains("budget_subspaces")) c.budgets.subspaces = j["budget_subspaces"].get<std::uint64_t>();
    if (j.contains("seed")) c.seed = j["seed"].get<std::uint64_t>();
    return c;
}

std::uint64_t SegreConfig::hash() const { return fnv1a64(to_json().dump()); }

nlohmann::json VerificationReport::to_json() const {
    nlohmann::json clause_list = nlohmann::json::array();
    for (const auto& c : clauses) {
        nlohmann::json jc = {{"name", c.name},
                             {"status", c.status == ClauseStatus::Pass     ? "pass"
                                        : c.status == ClauseStatus::Fail ? "fail"
                                                                         : "skipped"}};
        if (c.predicted) jc["predicted"] = *c.predicted;
        if (c.measured) jc["measured"] = *c.measured;
        if (!c.note.empty()) jc["note"] = c.note;
        clause_list.push_back(std::move(jc));
    }
    nlohmann::json measured = {{"n", n},   {"n1", n1},   {"n2", n2},   {"k", k},
                               {"k1", k1}, {"k2", k2},   {"reg", reg}, {"reg1", reg1},
                               {"reg2", reg2}};
    if (delta) measured["delta"] = *delta;
    if (delta1) measured["delta1"] = *delta1;
    if (delta2) measured["delta2"] = *delta2;
    if (delta2_f1) measured["delta2_factor1"] = *delta2_f1;
    if (delta2_f2) measured["delta2_factor2"] = *delta2_f2;
    if (delta2_prod) measured["delta2_product"] = *delta2_prod;
    nlohmann::json j = {{"config", config.to_json()}, {"measured", measured}, {"clauses", clause_list},
                        {"status", status}};
    if (!error.empty()) j["error"] = error;
    return j;
}

std::string VerificationReport::csv_header() {
    return "q,x1,x2,a1,a2,d,n1,k1,delta1,n2,k2,delta2,n,k,delta,delta2_product,reg,status";
}

std::string VerificationReport::csv_row() const {
    std::ostringstream out;
    out << config.q << ',' << config.x1.to_string() << ',' << config.x2.to_string() << ',' << a1 << ','
        << a2 << ',' << config.d << ',' << n1 << ',' << k1 << ',' << opt_str(delta1) << ',' << n2 << ','
        << k2 << ',' << opt_str(delta2) << ',' << n << ',' << k << ',' << opt_str(delta) << ','
        << opt_str(delta2_prod) << ',' << reg << ',' << status;
    return out.str();
}

VerificationReport verify_segre(const SegreConfig& config) {
    VerificationReport rep;
    rep.config = config;

    FieldPtr field = make_field(config.q);
    const PointSet x1 = build_point_set(config.x1, field, config.seed);
    const PointSet x2 = build_point_set(config.x2, field, config.seed);
    const PointSet x = segre_embed(x1, x2);
    rep.a1 = x1.ambient_dim;
    rep.a2 = x2.ambient_dim;
    rep.n1 = x1.size();
    rep.n2 = x2.size();
    rep.n = x.size();

    auto clause = [&](std::string name) -> ClauseResult& {
        rep.clauses.push_back(ClauseResult{std::move(name)});
        return rep.clauses.back();
    };
    auto check = [&](ClauseResult& c, long long predicted, long long measured) {
        c.predicted = predicted;
        c.measured = measured;
        c.status = predicted == measured ? ClauseStatus::Pass : ClauseStatus::Fail;
    };

    // (a) |X| = |X1||X2| holds for any degree.
    check(clause("a"), (long long)(rep.n1 * rep.n2), (long long)rep.n);

    if (config.d == 0) {
        for (const char* name : {"b", "c", "d", "e", "f"}) {
            auto& c = clause(name);
            c.status = ClauseStatus::Skipped;
            c.note = "theorem clauses require d >= 1";
        }
        rep.status = "pass";
        return rep;
    }

    const EvaluationCode c1 = evaluation_code(x1, config.d);
    const EvaluationCode c2 = evaluation_code(x2, config.d);
    const EvaluationCode cx = evaluation_code(x, config.d);
    rep.k1 = c1.code.k();
    rep.k2 = c2.code.k();
    rep.k = cx.code.k();

    // (b) dimensions multiply.
    check(clause("b"), (long long)(rep.k1 * rep.k2), (long long)rep.k);

    // (c) C_X(d) equals the Kronecker product code; valid as a literal
    // row-space identity because the Segre point order is row-major.
    {
        auto& c = clause("c");
        const bool eq = rowspace_equal(cx.code.basis(), kronecker(c1.code.basis(), c2.code.basis()));
        c.predicted = 1;
        c.measured = eq ? 1 : 0;
        c.status = eq ? ClauseStatus::Pass : ClauseStatus::Fail;
    }

    // (d) minimum distances multiply.
    {
        auto& c = clause("d");
        try {
            rep.delta1 = min_distance(c1.code, config.budgets.distance);
            rep.delta2 = min_distance(c2.code, config.budgets.distance);
            rep.delta = min_distance(cx.code, config.budgets.distance);
            check(c, (long long)(*rep.delta1 * *rep.delta2), (long long)*rep.delta);
        } catch (const BudgetExceeded& e) {
            c.status = ClauseStatus::Skipped;
            c.note = e.what();
        }
    }

    // (e) Wei-Yang second weight.
    {
        auto& c = clause("e");
        if (rep.k < 2) {
            c.status = ClauseStatus::Skipped;
            c.note = "product code has dimension < 2";
        } else if (!rep.delta1 || !rep.delta2) {
            c.status = ClauseStatus::Skipped;
            c.note = "factor minimum distances unavailable (budget)";
        } else {
            try {
                std::optional<std::size_t> t1, t2;
                if (rep.k2 >= 2) {
                    rep.delta2_f2 = ghw(c2.code, 2, config.budgets.subspaces);
                    t1 = *rep.delta1 * *rep.delta2_f2;
                }
                if (rep.k1 >= 2) {
                    rep.delta2_f1 = ghw(c1.code, 2, config.budgets.subspaces);
                    t2 = *rep.delta2_f1 * *rep.delta2;
                }
                std::size_t predicted = SIZE_MAX;
                if (t1) predicted = std::min(predicted, *t1);
                if (t2) predicted = std::min(predicted, *t2);
                rep.delta2_prod = ghw(cx.code, 2, config.budgets.subspaces);
                check(c, (long long)predicted, (long long)*rep.delta2_prod);
            } catch (const BudgetExceeded& e) {
                c.status = ClauseStatus::Skipped;
                c.note = e.what();
            }
        }
    }

    // (f) regularity of the product is the max of the factor regularities,
    // and the code collapses to minimum distance 1 from there on.
    {
        auto& c = clause("f");
        const RegCheck& rc = reg_check_cached(x1, x2, x, config.budgets.distance);
        rep.reg1 = rc.reg1;
        rep.reg2 = rc.reg2;
        rep.reg = rc.regx;
        if (!rc.delta_at_r || !rc.delta_at_r1) {
            c.status = ClauseStatus::Skipped;
            c.note = rc.note.empty() ? "distance at regularity unavailable" : rc.note;
        } else {
            const bool ok = rc.reg_ok && *rc.delta_at_r == 1 && *rc.delta_at_r1 == 1;
            c.predicted = 1;
            c.measured = ok ? 1 : 0;
            c.status = ok ? ClauseStatus::Pass : ClauseStatus::Fail;
            if (!rc.reg_ok)
                c.note = "reg(X) = " + std::to_string(rc.regx) + " != max(" + std::to_string(rc.reg1) +
                         ", " + std::to_string(rc.reg2) + ")";
        }
    }

    rep.status = "pass";
    for (const auto& c : rep.clauses)
        if (c.status == ClauseStatus::Fail) rep.status = "fail";
    return rep;
}

HilbertProductReport verify_hilbert_product(const PointSet& x1, const PointSet& x2, std::uint32_t d_max) {
    HilbertProductReport rep;
    const PointSet x = segre_embed(x1, x2);
    for (std::uint32_t d = 0; d <= d_max; ++d) {
        HilbertProductRow row;
        row.d = d;
        row.h1 = hilbert_function(x1, d);
        row.h2 = hilbert_function(x2, d);
        row.hx = hilbert_function(x, d);
        row.pass = row.h1 * row.h2 == row.hx;
        rep.pass = rep.pass && row.pass;
        rep.rows.push_back(row);
    }
    return rep;
}

ClosureReport verify_parameterized_closure(const std::vector<std::vector<std::uint32_t>>& e1,
                                           const std::vector<std::vector<std::uint32_t>>& e2,
                                           FieldPtr field) {
    const PointSet x1 = parameterized_set(e1, field);
    const PointSet x2 = parameterized_set(e2, field);
    const PointSet segre = segre_embed(x1, x2);

    // Pairwise products z^{v_i} w^{u_j} in disjoint variables, row-major.
    const std::size_t n1 = e1[0].size(), n2 = e2[0].size();
    std::vector<std::vector<std::uint32_t>> combined;
    for (const auto& v : e1)
        for (const auto& u : e2) {
            std::vector<std::uint32_t> exp = v;
            exp.insert(exp.end(), u.begin(), u.end());
            (void)n1;
            (void)n2;
            combined.push_back(std::move(exp));
        }
    const PointSet direct = parameterized_set(combined, field);

    ClosureReport rep;
    rep.segre_size = segre.size();
    rep.param_size = direct.size();
    auto sorted = [](const PointSet& ps) {
        auto pts = ps.points;
        std::sort(pts.begin(), pts.end());
        return pts;
    };
    rep.pass = sorted(segre) == sorted(direct);
    return rep;
}

std::vector<VerificationReport> sweep(const std::vector<SegreConfig>& configs) {
    std::vector<VerificationReport> out;
    out.reserve(configs.size());
    for (const auto& cfg : configs) {
        try {
            out.push_back(verify_segre(cfg));
        } catch (const std::exception& e) {
            VerificationReport rep;
            rep.config = cfg;
            rep.status = "error";
            rep.error = e.what();
            out.push_back(std::move(rep));
        }
    }
    return out;
}

} // namespace segrecodes
