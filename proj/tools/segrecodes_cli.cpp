#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "segrecodes/verify.hpp"

using namespace segrecodes;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitClauseFailure = 1;
constexpr int kExitBadArgs = 2;
constexpr int kExitBudget = 3;

std::uint64_t env_budget_default(std::uint64_t fallback) {
    if (const char* v = std::getenv("SEGRECODES_BUDGET")) return std::strtoull(v, nullptr, 10);
    return fallback;
}

struct OutputTarget {
    std::string path; // empty = stdout
    std::ofstream file;

    std::ostream& open() {
        if (path.empty()) return std::cout;
        file.open(path);
        if (!file) throw Error("cannot open output file '" + path + "'");
        return file;
    }
};

SetSpec spec_from_flags(const std::string& kind, std::uint32_t s, const std::string& exps,
                        const std::string& file) {
    if (kind == "space" || kind == "torus" || kind == "random")
        return SetSpec::parse(kind + ":" + std::to_string(s));
    if (kind == "param") return SetSpec::parse("param:" + exps);
    if (kind == "file") return SetSpec::parse("file:" + file);
    throw ParseError("unknown kind '" + kind + "'");
}

void print_report_text(const VerificationReport& rep, std::ostream& out) {
    out << "config: q=" << rep.config.q << " x1=" << rep.config.x1.to_string()
        << " x2=" << rep.config.x2.to_string() << " d=" << rep.config.d << "\n";
    out << "measured: n=" << rep.n << " (" << rep.n1 << "x" << rep.n2 << ")  k=" << rep.k << " (" << rep.k1
        << "x" << rep.k2 << ")";
    if (rep.delta) out << "  delta=" << *rep.delta;
    if (rep.delta2_prod) out << "  delta2=" << *rep.delta2_prod;
    out << "  reg=" << rep.reg << " (" << rep.reg1 << "," << rep.reg2 << ")\n";
    for (const auto& c : rep.clauses) {
        out << "  clause " << c.name << ": "
            << (c.status == ClauseStatus::Pass     ? "pass"
                : c.status == ClauseStatus::Fail ? "FAIL"
                                                 : "skipped");
        if (c.predicted && c.measured) out << " (predicted " << *c.predicted << ", measured " << *c.measured << ")";
        if (!c.note.empty()) out << " [" << c.note << "]";
        out << "\n";
    }
    out << "status: " << rep.status << "\n";
}

bool report_has_budget_skip(const VerificationReport& rep) {
    for (const auto& c : rep.clauses)
        if (c.status == ClauseStatus::Skipped && c.note.find("budget") != std::string::npos) return true;
    return false;
}

int run_selftest() {
    int failures = 0;
    auto check = [&](const std::string& name, bool ok) {
        std::cout << (ok ? "[pass] " : "[FAIL] ") << name << "\n";
        if (!ok) ++failures;
    };

    for (std::uint32_t q : {2u, 3u, 4u, 5u, 8u, 9u}) {
        FieldPtr f = make_field(q);
        bool ok = true;
        for (std::uint32_t a = 0; a < q && ok; ++a)
            for (std::uint32_t b = 0; b < q && ok; ++b) {
                ok = f->add(a, b) == f->add(b, a) && f->mul(a, b) == f->mul(b, a);
                for (std::uint32_t c = 0; c < q && ok; ++c)
                    ok = f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c));
            }
        for (std::uint32_t a = 1; a < q && ok; ++a) ok = f->mul(a, f->inv(a)) == 1;
        check("field axioms GF(" + std::to_string(q) + ")", ok);
    }

    {
        FieldPtr f = make_field(5);
        bool ok = true;
        for (std::uint32_t a = 0; a < 5 && ok; ++a)
            for (std::uint32_t b = 0; b < 5 && ok; ++b)
                for (std::uint32_t l = 1; l < 5 && ok; ++l) {
                    if (a == 0 && b == 0) continue;
                    Coords v{a, b};
                    Coords w{f->mul(l, a), f->mul(l, b)};
                    ok = canonicalize(*f, v) == canonicalize(*f, w);
                }
        check("canonicalization is scalar-invariant over GF(5)", ok);
    }

    {
        SegreConfig cfg;
        cfg.q = 2;
        cfg.x1 = SetSpec::parse("space:2");
        cfg.x2 = SetSpec::parse("space:2");
        cfg.d = 1;
        const auto rep = verify_segre(cfg);
        check("theorem clauses on P^1 x P^1 over GF(2)", rep.status == "pass");
        check("anchor [9,4,4] with delta2 = 6",
              rep.n == 9 && rep.k == 4 && rep.delta == 4 && rep.delta2_prod == 6);
    }

    {
        FieldPtr f = make_field(3);
        const auto rep = verify_hilbert_product(projective_space(2, f), projective_torus(2, f), 3);
        check("Hilbert product identity, P^1 x T^1 over GF(3)", rep.pass);
    }

    std::cout << (failures == 0 ? "selftest: all checks passed\n"
                                : "selftest: " + std::to_string(failures) + " check(s) failed\n");
    return failures == 0 ? kExitOk : kExitClauseFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"projective Segre code workbench"};
    app.require_subcommand(1);

    const std::uint64_t default_dist = env_budget_default(kDefaultDistanceBudget);
    const std::uint64_t default_sub = env_budget_default(kDefaultSubspaceBudget);

    // ---- points ----
    auto* points_cmd = app.add_subcommand("points", "build a point set and write it out");
    std::string pt_kind = "space", pt_exps, pt_file, pt_out;
    std::uint32_t pt_s = 2, pt_q = 2;
    points_cmd->add_option("--kind", pt_kind, "space|torus|param|file");
    points_cmd->add_option("--s", pt_s, "ambient dimension");
    points_cmd->add_option("--q", pt_q, "field size");
    points_cmd->add_option("--exps", pt_exps, "monomial exponents, e.g. 1,1,0;0,1,1;1,0,1");
    points_cmd->add_option("--file", pt_file, "point-set file to load");
    points_cmd->add_option("--out", pt_out, "output path (default stdout)");

    // ---- code ----
    auto* code_cmd = app.add_subcommand("code", "compute parameters of C_X(d)");
    std::string cd_kind = "space", cd_exps, cd_file, cd_out, cd_format = "text";
    std::uint32_t cd_s = 2, cd_q = 2, cd_d = 1;
    std::uint64_t cd_bdist = default_dist, cd_bsub = default_sub;
    bool cd_strict = false;
    code_cmd->add_option("--kind", cd_kind, "space|torus|param|file");
    code_cmd->add_option("--s", cd_s, "ambient dimension");
    code_cmd->add_option("--q", cd_q, "field size");
    code_cmd->add_option("--d", cd_d, "degree");
    code_cmd->add_option("--exps", cd_exps, "monomial exponents for kind=param");
    code_cmd->add_option("--file", cd_file, "point-set file for kind=file");
    code_cmd->add_option("--format", cd_format, "text|json|csv");
    code_cmd->add_option("--out", cd_out, "output path (default stdout)");
    code_cmd->add_option("--budget-dist", cd_bdist, "distance enumeration budget");
    code_cmd->add_option("--budget-subspaces", cd_bsub, "subspace enumeration budget");
    code_cmd->add_flag("--strict", cd_strict, "exit 3 when a budget is exceeded");

    // ---- segre ----
    auto* segre_cmd = app.add_subcommand("segre", "verify the direct-product theorem on one configuration");
    std::string sg_x1, sg_x2, sg_out, sg_format = "text";
    std::uint32_t sg_q = 2, sg_d = 1;
    std::uint64_t sg_bdist = default_dist, sg_bsub = default_sub, sg_seed = 0;
    bool sg_strict = false;
    segre_cmd->add_option("--q", sg_q, "field size")->required();
    segre_cmd->add_option("--x1", sg_x1, "first factor, kind:params")->required();
    segre_cmd->add_option("--x2", sg_x2, "second factor, kind:params")->required();
    segre_cmd->add_option("--d", sg_d, "degree");
    segre_cmd->add_option("--format", sg_format, "text|json|csv");
    segre_cmd->add_option("--out", sg_out, "output path (default stdout)");
    segre_cmd->add_option("--budget-dist", sg_bdist, "distance enumeration budget");
    segre_cmd->add_option("--budget-subspaces", sg_bsub, "subspace enumeration budget");
    segre_cmd->add_option("--seed", sg_seed, "seed for random set specs");
    segre_cmd->add_flag("--strict", sg_strict, "exit 3 when a budget is exceeded");

    // ---- sweep ----
    auto* sweep_cmd = app.add_subcommand("sweep", "run a list of configurations from a JSON file");
    std::string sw_file, sw_out, sw_cache, sw_format = "csv";
    sweep_cmd->add_option("file", sw_file, "JSON list of configurations")->required();
    sweep_cmd->add_option("--format", sw_format, "csv|json");
    sweep_cmd->add_option("--out", sw_out, "output path (default stdout)");
    sweep_cmd->add_option("--cache", sw_cache, "JSON-lines cache keyed by config hash");

    // ---- selftest ----
    app.add_subcommand("selftest", "run the built-in invariant suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadArgs;
    }

    try {
        if (points_cmd->parsed()) {
            const SetSpec spec = spec_from_flags(pt_kind, pt_s, pt_exps, pt_file);
            const PointSet ps = build_point_set(spec, make_field(pt_q), 0);
            OutputTarget target{pt_out, {}};
            save_point_set(ps, target.open());
            (pt_out.empty() ? std::cerr : std::cout)
                << "label=" << ps.label << " size=" << ps.size() << "\n";
            return kExitOk;
        }

        if (code_cmd->parsed()) {
            const SetSpec spec = spec_from_flags(cd_kind, cd_s, cd_exps, cd_file);
            const PointSet ps = build_point_set(spec, make_field(cd_q), 0);
            const EvaluationCode ec = evaluation_code(ps, cd_d);
            const QuotientInvariants& qi = quotient_invariants_cached(ps);
            std::optional<std::size_t> delta;
            std::string budget_note;
            try {
                delta = min_distance(ec.code, cd_bdist);
            } catch (const BudgetExceeded& e) {
                budget_note = e.what();
                if (cd_strict) {
                    std::cerr << "error: " << e.what() << "\n";
                    return kExitBudget;
                }
            }
            const std::uint32_t q_actual = ps.field->q(); // may differ from --q for kind=file
            OutputTarget target{cd_out, {}};
            std::ostream& out = target.open();
            if (cd_format == "json") {
                nlohmann::json j = {{"label", ps.label}, {"q", q_actual},      {"d", cd_d},
                                    {"n", ec.code.n()}, {"k", ec.code.k()},   {"hilbert", ec.hilbert},
                                    {"regularity", qi.regularity}, {"hilbert_sequence", qi.hilbert_values}};
                if (delta)
                    j["delta"] = *delta;
                else
                    j["delta"] = "budget";
                out << j.dump(2) << "\n";
            } else if (cd_format == "csv") {
                out << "q,d,n,k,delta,reg\n"
                    << q_actual << ',' << cd_d << ',' << ec.code.n() << ',' << ec.code.k() << ','
                    << (delta ? std::to_string(*delta) : "budget") << ',' << qi.regularity << "\n";
            } else {
                out << "X=" << ps.label << " d=" << cd_d << "  n=" << ec.code.n() << " k=" << ec.code.k()
                    << " delta=" << (delta ? std::to_string(*delta) : "budget")
                    << " reg=" << qi.regularity << "\nhilbert:";
                for (std::size_t h : qi.hilbert_values) out << ' ' << h;
                out << "\n";
            }
            if (!budget_note.empty()) std::cerr << "note: " << budget_note << "\n";
            return kExitOk;
        }

        if (segre_cmd->parsed()) {
            SegreConfig cfg;
            cfg.q = sg_q;
            cfg.x1 = SetSpec::parse(sg_x1);
            cfg.x2 = SetSpec::parse(sg_x2);
            cfg.d = sg_d;
            cfg.budgets = {sg_bdist, sg_bsub};
            cfg.seed = sg_seed;
            const VerificationReport rep = verify_segre(cfg);
            OutputTarget target{sg_out, {}};
            std::ostream& out = target.open();
            if (sg_format == "json")
                out << rep.to_json().dump(2) << "\n";
            else if (sg_format == "csv")
                out << VerificationReport::csv_header() << "\n" << rep.csv_row() << "\n";
            else
                print_report_text(rep, out);
            if (rep.status == "fail") return kExitClauseFailure;
            if (sg_strict && report_has_budget_skip(rep)) return kExitBudget;
            return kExitOk;
        }

        if (sweep_cmd->parsed()) {
            std::ifstream in(sw_file);
            if (!in) {
                std::cerr << "error: cannot open config file '" << sw_file << "'\n";
                return kExitBadArgs;
            }
            nlohmann::json jlist;
            try {
                in >> jlist;
            } catch (const nlohmann::json::exception& e) {
                std::cerr << "error: config file parse: " << e.what() << "\n";
                return kExitBadArgs;
            }
            if (!jlist.is_array() || jlist.empty()) {
                std::cerr << "error: config file must hold a nonempty JSON list\n";
                return kExitBadArgs;
            }
            std::vector<SegreConfig> configs;
            for (std::size_t i = 0; i < jlist.size(); ++i) {
                try {
                    configs.push_back(SegreConfig::from_json(jlist[i]));
                } catch (const std::exception& e) {
                    std::cerr << "error: config " << i << ": " << e.what() << "\n";
                    return kExitBadArgs;
                }
            }

            // Warm cache: JSON-lines, one {hash, report} record per config.
            std::map<std::uint64_t, nlohmann::json> cache;
            if (!sw_cache.empty()) {
                std::ifstream cin_(sw_cache);
                std::string line;
                while (std::getline(cin_, line)) {
                    if (line.empty()) continue;
                    auto j = nlohmann::json::parse(line, nullptr, false);
                    if (!j.is_discarded() && j.contains("hash") && j.contains("report"))
                        cache[j["hash"].get<std::uint64_t>()] = j["report"];
                }
            }

            std::vector<nlohmann::json> reports_json;
            std::vector<std::string> csv_rows;
            std::size_t pass = 0, fail = 0, skip = 0, hits = 0;
            std::vector<nlohmann::json> new_cache_records;
            for (const auto& cfg : configs) {
                const std::uint64_t h = cfg.hash();
                nlohmann::json jrep;
                if (auto it = cache.find(h); it != cache.end()) {
                    jrep = it->second;
                    ++hits;
                } else {
                    const VerificationReport rep = sweep({cfg}).front();
                    jrep = rep.to_json();
                    jrep["csv"] = rep.csv_row();
                    new_cache_records.push_back({{"hash", h}, {"report", jrep}});
                }
                reports_json.push_back(jrep);
                const std::string st = jrep.value("status", "error");
                if (st == "pass") ++pass;
                else if (st == "fail" || st == "error") ++fail;
                bool skipped = false;
                for (const auto& c : jrep.value("clauses", nlohmann::json::array()))
                    if (c.value("status", "") == "skipped") skipped = true;
                if (skipped) ++skip;
                csv_rows.push_back(jrep.value("csv", ""));
            }
            if (!sw_cache.empty() && !new_cache_records.empty()) {
                std::ofstream cout_(sw_cache, std::ios::app);
                for (const auto& rec : new_cache_records) cout_ << rec.dump() << "\n";
            }

            OutputTarget target{sw_out, {}};
            std::ostream& out = target.open();
            if (sw_format == "json") {
                out << nlohmann::json(reports_json).dump(2) << "\n";
            } else {
                out << VerificationReport::csv_header() << "\n";
                for (const auto& row : csv_rows) out << row << "\n";
            }
            std::cerr << "sweep: " << pass << " pass, " << fail << " fail, " << skip
                      << " with skipped clauses";
            if (hits) std::cerr << ", " << hits << " cache hits";
            std::cerr << "\n";
            return fail == 0 ? kExitOk : kExitClauseFailure;
        }

        return run_selftest();
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadArgs;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitClauseFailure;
    }
}
