#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "segrecodes/rmtype.hpp"

namespace segrecodes {

/// Recipe for one factor point set of a Segre configuration.
struct SetSpec {
    enum class Kind { Space, Torus, Param, Custom, File, Random };
    Kind kind = Kind::Space;
    std::uint32_t s = 0;                                    // ambient dimension (space/torus/random)
    std::vector<std::vector<std::uint32_t>> exponents;      // param
    std::vector<Coords> coords;                             // custom
    std::string path;                                       // file
    std::uint32_t count = 0;                                // random: number of points drawn from P^{s-1}

    /// Compact syntax: "space:2", "torus:3", "param:1,1,0;0,1,1;1,0,1",
    /// "file:/path", "random:3:4".
    static SetSpec parse(const std::string& text);
    std::string to_string() const;
};

/// Builds the point set; `seed` feeds the random kind only.
PointSet build_point_set(const SetSpec& spec, FieldPtr field, std::uint64_t seed);

struct Budgets {
    std::uint64_t distance = kDefaultDistanceBudget;
    std::uint64_t subspaces = kDefaultSubspaceBudget;
};

struct SegreConfig {
    std::uint32_t q = 2;
    SetSpec x1, x2;
    std::uint32_t d = 1;
    Budgets budgets;
    std::uint64_t seed = 0;

    nlohmann::json to_json() const;
    static SegreConfig from_json(const nlohmann::json& j);
    /// Stable content hash, used as the sweep cache key.
    std::uint64_t hash() const;
};

enum class ClauseStatus { Pass, Fail, Skipped };

struct ClauseResult {
    std::string name; // "a".."f"
    ClauseStatus status = ClauseStatus::Skipped;
    std::optional<long long> predicted, measured;
    std::string note;
};

struct VerificationReport {
    SegreConfig config;
    std::uint32_t a1 = 0, a2 = 0; // ambient dimensions of the factors
    std::size_t n = 0, n1 = 0, n2 = 0, k = 0, k1 = 0, k2 = 0;
    std::optional<std::size_t> delta, delta1, delta2;              // minimum distances: product, factors
    std::optional<std::size_t> delta2_f1, delta2_f2, delta2_prod;  // second weights
    std::uint32_t reg = 0, reg1 = 0, reg2 = 0;
    std::vector<ClauseResult> clauses;
    std::string status; // "pass" | "fail" | "error"
    std::string error;  // set when the configuration itself could not be built

    nlohmann::json to_json() const;
    std::string csv_row() const;
    static std::string csv_header();
};

/// Checks every clause of the direct-product theorem on one configuration.
/// BudgetExceeded surfaces as a skipped clause, never as a failure.
VerificationReport verify_segre(const SegreConfig& config);

struct HilbertProductRow {
    std::uint32_t d = 0;
    std::size_t h1 = 0, h2 = 0, hx = 0;
    bool pass = false;
};
struct HilbertProductReport {
    std::vector<HilbertProductRow> rows;
    bool pass = true;
};

/// H_X(d) = H_X1(d) * H_X2(d) for d = 0..d_max.
HilbertProductReport verify_hilbert_product(const PointSet& x1, const PointSet& x2, std::uint32_t d_max);

struct ClosureReport {
    std::size_t segre_size = 0, param_size = 0;
    bool pass = false;
};

/// Segre image of two parameterized sets equals, as a set, the
/// parameterization by pairwise monomial products in disjoint variables.
ClosureReport verify_parameterized_closure(const std::vector<std::vector<std::uint32_t>>& e1,
                                           const std::vector<std::vector<std::uint32_t>>& e2,
                                           FieldPtr field);

/// Runs verify_segre per config, in input order, collecting all results.
std::vector<VerificationReport> sweep(const std::vector<SegreConfig>& configs);

} // namespace segrecodes
