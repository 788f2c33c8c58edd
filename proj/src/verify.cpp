#include "obound/verify.hpp"

#include <atomic>
#include <chrono>
#include <functional>
#include <thread>

namespace obound {

namespace {

struct Finding {
    std::optional<Int> input;
    std::optional<Int> oracle;
    std::optional<Int> formula;
    std::string detail;
};

using CheckBody = std::function<std::optional<Finding>()>;

Finding value_mismatch(Int input, Int oracle, Int formula)
{
    return {input, oracle, formula, "closed form disagrees with the oracle"};
}

/// First index in [first, last] where formula(i) != oracle(i).
std::optional<Finding> compare_range(Int first, Int last, const std::function<Int(Int)>& oracle,
                                     const std::function<Int(Int)>& formula)
{
    for (Int i = first; i <= last; ++i) {
        const Int expected = oracle(i);
        const Int actual = formula(i);
        if (expected != actual) return value_mismatch(i, expected, actual);
    }
    return std::nullopt;
}

std::optional<Finding> compare_semigroups(const NumericalSemigroup& oracle, const NumericalSemigroup& closed)
{
    if (oracle.conductor() != closed.conductor())
        return Finding{std::nullopt, oracle.conductor(), closed.conductor(), "conductors differ"};
    const auto a = oracle.members_below_conductor();
    const auto b = closed.members_below_conductor();
    for (std::size_t k = 0; k < std::max(a.size(), b.size()); ++k) {
        const Int left = k < a.size() ? a[k] : oracle.conductor();
        const Int right = k < b.size() ? b[k] : closed.conductor();
        if (left != right) return Finding{static_cast<Int>(k), left, right, "members differ at this rank"};
    }
    return std::nullopt;
}

std::optional<Finding> check_blocks(const TowerParams& p)
{
    const auto blocks = scaled_blocks(p);
    Int total = 0;
    for (std::size_t k = 0; k < blocks.size(); ++k) {
        total = checked_add(total, blocks[k].length);
        if (k + 1 < blocks.size() && blocks[k].scaled_max() >= blocks[k + 1].scaled_min())
            return Finding{blocks[k].i, blocks[k + 1].scaled_min(), blocks[k].scaled_max(),
                           "scaled block overlaps its successor"};
    }
    const Int c = conductor_formula(p);
    if (!blocks.empty() && blocks.back().scaled_max() >= c)
        return Finding{blocks.back().i, c, blocks.back().scaled_max(), "scaled blocks reach the conductor"};
    const Int expected = checked_pow(p.q(), p.m() / 2) - 1;
    if (total != expected) return Finding{std::nullopt, expected, total, "block cardinalities do not sum up"};
    return std::nullopt;
}

} // namespace

bool LevelResult::passed() const
{
    if (checks.size() != kCheckNames.size()) return false;
    for (std::size_t k = 0; k < checks.size(); ++k)
        if (checks[k].name != kCheckNames[k] || !checks[k].passed) return false;
    return true;
}

bool VerificationReport::passed() const
{
    for (const auto& level : levels)
        if (!level.passed()) return false;
    return true;
}

std::optional<Mismatch> VerificationReport::first_mismatch() const
{
    for (const auto& level : levels) {
        if (level.first_mismatch) return level.first_mismatch;
        if (!level.passed()) return Mismatch{"completeness", level.params, {}, {}, {}, "check list is incomplete"};
    }
    return std::nullopt;
}

LevelResult verify_level(const TowerParams& p, Int index_margin, Int budget)
{
    const auto started = std::chrono::steady_clock::now();
    LevelResult result{p, {}, std::nullopt, 0.0};

    if (index_margin < 0) throw Error(Errc::InvalidArgument, "index margin must be non-negative");

    const Int c = conductor_formula(p);
    const Int g = genus_formula(p);
    std::optional<IndexRange> index_range;
    std::optional<IndexRange> floor_range;
    std::optional<IndexRange> block_range;
    try {
        index_range = IndexRange{0, checked_add(checked_sub(checked_mul(2, c), g), index_margin)};
        floor_range = IndexRange{0, checked_mul(2, c)};
    } catch (const Error&) {
    }
    if (p.m() >= 2) block_range = IndexRange{1, p.m() / 2};

    // Oracle data shared by several checks; a failure to build it fails each of them.
    std::optional<NumericalSemigroup> oracle;
    std::vector<Int> nu_oracle;
    std::vector<Int> delta_oracle;
    std::string oracle_error;
    try {
        oracle = build_recursive(p, budget);
        if (!index_range) throw Error(Errc::Overflow, "index range does not fit in 64 bits");
        nu_oracle = nu_sequence(*oracle, index_range->last + 1);
        delta_oracle = order_bound_sequence(*oracle, index_range->last + 1);
    } catch (const Error& e) {
        oracle.reset();
        oracle_error = e.what();
    }

    const auto needs_oracle = [&](CheckBody body) -> CheckBody {
        return [&, body]() -> std::optional<Finding> {
            if (!oracle) throw Error(Errc::BudgetExceeded, oracle_error);
            return body();
        };
    };

    const auto at = [](const std::vector<Int>& v, Int i) { return v[static_cast<std::size_t>(i)]; };

    const std::array<std::pair<std::optional<IndexRange>, CheckBody>, kCheckNames.size()> plan = {{
        {std::nullopt, needs_oracle([&] { return compare_semigroups(*oracle, build_closed(p, budget)); })},
        {std::nullopt, needs_oracle([&]() -> std::optional<Finding> {
             if (oracle->conductor() != c) return Finding{std::nullopt, oracle->conductor(), c, "conductor formula"};
             return std::nullopt;
         })},
        {std::nullopt, needs_oracle([&]() -> std::optional<Finding> {
             if (oracle->genus() != g) return Finding{std::nullopt, oracle->genus(), g, "genus formula"};
             return std::nullopt;
         })},
        {index_range, needs_oracle([&] {
             return compare_range(
                 0, index_range->last, [&](Int t) { return oracle->enumerate(t); },
                 [&](Int t) { return lambda_closed(p, t); });
         })},
        {floor_range, needs_oracle([&] {
             return compare_range(
                 0, floor_range->last, [&](Int k) { return oracle->inverse_enumerate(oracle->floor(k)); },
                 [&](Int k) { return inverse_floor_closed(p, k); });
         })},
        {index_range, needs_oracle([&] {
             return compare_range(
                 0, index_range->last, [&](Int i) { return at(nu_oracle, i); },
                 [&](Int i) { return nu_closed(p, i); });
         })},
        {index_range, needs_oracle([&] {
             return compare_range(
                 0, index_range->last, [&](Int i) { return at(delta_oracle, i); },
                 [&](Int i) { return order_bound_via_nu(p, i); });
         })},
        {index_range, needs_oracle([&] {
             return compare_range(
                 0, index_range->last, [&](Int i) { return at(delta_oracle, i); },
                 [&](Int i) { return order_bound_closed(p, i); });
         })},
        {block_range, [&] { return check_blocks(p); }},
    }};

    for (std::size_t k = 0; k < plan.size(); ++k) {
        const auto& [range, body] = plan[k];
        CheckResult check{std::string(kCheckNames[k]), false, range, std::nullopt};
        std::optional<Finding> finding;
        try {
            finding = body();
        } catch (const std::exception& e) {
            finding = Finding{std::nullopt, std::nullopt, std::nullopt, e.what()};
            check.error = e.what();
        }
        check.passed = !finding.has_value();
        if (finding && !result.first_mismatch)
            result.first_mismatch =
                Mismatch{check.name, p, finding->input, finding->oracle, finding->formula, finding->detail};
        result.checks.push_back(std::move(check));
    }

    result.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
    return result;
}

VerificationReport verify_grid(std::span<const TowerParams> grid, Int index_margin, Int budget, unsigned threads)
{
    if (grid.empty()) throw Error(Errc::InvalidArgument, "verification grid is empty");
    const auto started = std::chrono::steady_clock::now();

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(grid.size()));

    std::vector<std::optional<LevelResult>> slots(grid.size());
    std::atomic<std::size_t> next{0};
    {
        std::vector<std::jthread> workers;
        for (unsigned w = 0; w < threads; ++w) {
            workers.emplace_back([&] {
                for (std::size_t k = next++; k < grid.size(); k = next++)
                    slots[k] = verify_level(grid[k], index_margin, budget);
            });
        }
    }

    VerificationReport report;
    for (auto& slot : slots) report.levels.push_back(std::move(*slot));
    report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
    return report;
}

std::vector<TowerParams> default_grid()
{
    constexpr Int limit = Int{1} << 20;
    std::vector<TowerParams> grid;
    for (Int q = 2; q <= 9; ++q)
        for (Int m = 1; conductor_at(q, m) <= limit; ++m) grid.emplace_back(q, m);
    return grid;
}

namespace {

nlohmann::ordered_json mismatch_json(const Mismatch& m)
{
    nlohmann::ordered_json j;
    j["check"] = m.check;
    j["q"] = m.params.q();
    j["m"] = m.params.m();
    j["input"] = m.input ? nlohmann::ordered_json(*m.input) : nlohmann::ordered_json(nullptr);
    j["oracle"] = m.oracle ? nlohmann::ordered_json(*m.oracle) : nlohmann::ordered_json(nullptr);
    j["formula"] = m.formula ? nlohmann::ordered_json(*m.formula) : nlohmann::ordered_json(nullptr);
    j["detail"] = m.detail;
    return j;
}

} // namespace

nlohmann::ordered_json to_json(const VerificationReport& report)
{
    nlohmann::ordered_json out;
    out["status"] = report.passed() ? "pass" : "fail";

    auto grid = nlohmann::ordered_json::array();
    auto checks = nlohmann::ordered_json::array();
    for (const auto& level : report.levels) {
        grid.push_back({{"q", level.params.q()}, {"m", level.params.m()}});

        nlohmann::ordered_json entry;
        entry["q"] = level.params.q();
        entry["m"] = level.params.m();
        entry["status"] = level.passed() ? "pass" : "fail";
        auto results = nlohmann::ordered_json::array();
        for (const auto& check : level.checks) {
            nlohmann::ordered_json r;
            r["name"] = check.name;
            r["status"] = check.passed ? "pass" : "fail";
            r["range"] = check.range ? nlohmann::ordered_json::array({check.range->first, check.range->last})
                                     : nlohmann::ordered_json(nullptr);
            if (check.error) r["error"] = *check.error;
            results.push_back(std::move(r));
        }
        entry["results"] = std::move(results);
        entry["elapsed_ms"] = level.elapsed_ms;
        checks.push_back(std::move(entry));
    }
    out["grid"] = std::move(grid);
    out["checks"] = std::move(checks);
    if (auto mismatch = report.first_mismatch()) out["first_mismatch"] = mismatch_json(*mismatch);
    out["elapsed_ms"] = report.elapsed_ms;
    return out;
}

} // namespace obound
