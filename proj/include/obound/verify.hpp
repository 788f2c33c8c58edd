#ifndef OBOUND_VERIFY_HPP
#define OBOUND_VERIFY_HPP

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "obound/tower.hpp"

namespace obound {

/// Names of the nine checks run at every grid point, in report order.
inline constexpr std::array<std::string_view, 9> kCheckNames = {
    "set-equality", "conductor", "genus",        "lambda",             "inverse-floor",
    "nu",           "delta-lemma", "delta-closed", "block-disjointness",
};

inline constexpr Int kDefaultIndexMargin = 64;

/// Inclusive index interval a check compared over.
struct IndexRange {
    Int first = 0;
    Int last = 0;
};

struct CheckResult {
    std::string name;
    bool passed = false;
    std::optional<IndexRange> range;
    std::optional<std::string> error;
};

struct Mismatch {
    std::string check;
    TowerParams params;
    std::optional<Int> input;
    std::optional<Int> oracle;
    std::optional<Int> formula;
    std::string detail;
};

struct LevelResult {
    TowerParams params;
    std::vector<CheckResult> checks;
    std::optional<Mismatch> first_mismatch;
    double elapsed_ms = 0.0;

    [[nodiscard]] bool passed() const;
};

struct VerificationReport {
    std::vector<LevelResult> levels;
    double elapsed_ms = 0.0;

    /// True iff every level holds exactly the nine checks and all passed.
    [[nodiscard]] bool passed() const;
    /// First mismatch in grid order, if any.
    [[nodiscard]] std::optional<Mismatch> first_mismatch() const;
};

/// Runs all nine checks at one grid point. Nothing short-circuits; errors
/// such as BudgetExceeded turn into failed checks rather than exceptions.
[[nodiscard]] LevelResult verify_level(const TowerParams& p, Int index_margin = kDefaultIndexMargin,
                                       Int budget = kDefaultMemberBudget);

/// verify_level over every grid point, fanned out over `threads` workers
/// (0 picks the hardware concurrency). Levels keep the input order.
[[nodiscard]] VerificationReport verify_grid(std::span<const TowerParams> grid, Int index_margin = kDefaultIndexMargin,
                                             Int budget = kDefaultMemberBudget, unsigned threads = 0);

/// All (q, m) with 2 <= q <= 9 and c_m <= 2^20.
[[nodiscard]] std::vector<TowerParams> default_grid();

/// Structured report with fixed key order. Elapsed times are the only
/// fields that vary between runs over the same grid.
[[nodiscard]] nlohmann::ordered_json to_json(const VerificationReport& report);

} // namespace obound

#endif // OBOUND_VERIFY_HPP
