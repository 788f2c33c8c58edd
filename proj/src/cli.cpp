#include "obound/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "obound/verify.hpp"

namespace obound::cli {

namespace {

const std::vector<std::string> kColumns = {"i", "lambda", "nu", "delta"};

struct TableOptions {
    Int q = 0;
    Int m = 0;
    Int rows = 10;
    std::vector<std::string> columns = kColumns;
    std::string format = "csv";
    std::string source = "closed";
};

struct BoundsOptions {
    Int q = 0;
    Int m = 0;
    Int i = 0;
};

struct VerifyOptions {
    std::vector<Int> qs = {2, 3, 4, 5, 6, 7, 8, 9};
    std::optional<Int> m_max;
    Int margin = kDefaultIndexMargin;
    std::string report_path;
    unsigned threads = 0;
};

BoundTable closed_table(const TowerParams& p, Int rows)
{
    BoundTable table;
    for (Int i = 0; i < rows; ++i)
        table.rows.push_back({i, lambda_closed(p, i), nu_closed(p, i), order_bound_closed(p, i)});
    return table;
}

Int column_value(const BoundRow& row, const std::string& column)
{
    if (column == "i") return row.i;
    if (column == "lambda") return row.lambda;
    if (column == "nu") return row.nu;
    return row.delta;
}

void write_table(std::ostream& out, const TowerParams& p, const BoundTable& table, const TableOptions& opt)
{
    if (opt.format == "json") {
        nlohmann::ordered_json doc;
        doc["q"] = p.q();
        doc["m"] = p.m();
        doc["columns"] = opt.columns;
        auto rows = nlohmann::ordered_json::array();
        for (const auto& row : table.rows) {
            nlohmann::ordered_json r;
            for (const auto& column : opt.columns) r[column] = column_value(row, column);
            rows.push_back(std::move(r));
        }
        doc["rows"] = std::move(rows);
        out << doc.dump(2) << '\n';
        return;
    }

    const char sep = opt.format == "tsv" ? '\t' : ',';
    for (std::size_t k = 0; k < opt.columns.size(); ++k) out << (k ? std::string(1, sep) : "") << opt.columns[k];
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t k = 0; k < opt.columns.size(); ++k) {
            if (k) out << sep;
            out << column_value(row, opt.columns[k]);
        }
        out << '\n';
    }
}

int cmd_table(const TableOptions& opt, std::ostream& out)
{
    const TowerParams p(opt.q, opt.m);
    const BoundTable table =
        opt.source == "oracle" ? bound_table(build_recursive(p, member_budget_from_env()), opt.rows)
                               : closed_table(p, opt.rows);
    // buffer so a late overflow leaves no partial table behind
    std::ostringstream buffer;
    write_table(buffer, p, table, opt);
    out << buffer.str();
    return kExitOk;
}

int cmd_bounds(const BoundsOptions& opt, std::ostream& out)
{
    const TowerParams p(opt.q, opt.m);
    out << "delta=" << order_bound_closed(p, opt.i) << '\n';
    return kExitOk;
}

int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err)
{
    const Int budget = member_budget_from_env();
    constexpr Int kDefaultConductorLimit = Int{1} << 20;

    std::vector<TowerParams> grid;
    for (Int q : opt.qs) {
        if (q < 2) throw Error(Errc::InvalidArgument, "q must be at least 2, got " + std::to_string(q));
        for (Int m = 1; !opt.m_max || m <= *opt.m_max; ++m) {
            Int c = 0;
            try {
                c = conductor_formula(TowerParams(q, m));
            } catch (const Error& e) {
                if (e.code() != Errc::Overflow) throw;
                break;
            }
            if (c > budget || (!opt.m_max && c > kDefaultConductorLimit)) {
                if (opt.m_max) err << "skipping (q=" << q << ", m=" << m << "): conductor exceeds the member budget\n";
                break;
            }
            grid.emplace_back(q, m);
        }
    }
    if (grid.empty()) throw Error(Errc::BudgetExceeded, "no grid point fits within the member budget");

    const auto report = verify_grid(grid, opt.margin, budget, opt.threads);
    const std::string text = to_json(report).dump(2) + "\n";
    if (opt.report_path.empty()) {
        out << text;
    } else {
        std::ofstream file(opt.report_path);
        if (!file) {
            err << "error: cannot write report to " << opt.report_path << '\n';
            return kExitResource;
        }
        file << text;
        out << (report.passed() ? "pass" : "fail") << ": " << report.levels.size() << " grid points\n";
    }
    if (!report.passed()) {
        const auto mismatch = report.first_mismatch();
        err << "mismatch: " << mismatch->check << " at (q=" << mismatch->params.q() << ", m=" << mismatch->params.m()
            << "): " << mismatch->detail << '\n';
        return kExitMismatch;
    }
    return kExitOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Weierstrass semigroups of the Garcia-Stichtenoth tower and their order bounds", "obound"};
    app.require_subcommand(1);

    TableOptions table;
    auto* table_cmd = app.add_subcommand("table", "Print (i, lambda, nu, delta) rows for one level");
    table_cmd->add_option("--q", table.q, "Base parameter q >= 2")->required();
    table_cmd->add_option("--m", table.m, "Tower level m >= 1")->required();
    table_cmd->add_option("--rows", table.rows, "Number of rows")->check(CLI::PositiveNumber);
    table_cmd->add_option("--columns", table.columns, "Subset of i,lambda,nu,delta")
        ->delimiter(',')
        ->check(CLI::IsMember(kColumns));
    table_cmd->add_option("--format", table.format, "csv, json or tsv")->check(CLI::IsMember({"csv", "json", "tsv"}));
    table_cmd->add_option("--source", table.source, "closed forms or brute-force oracle")
        ->check(CLI::IsMember({"closed", "oracle"}));

    BoundsOptions bounds;
    auto* bounds_cmd = app.add_subcommand("bounds", "Print the order bound delta_i");
    bounds_cmd->add_option("--q", bounds.q, "Base parameter q >= 2")->required();
    bounds_cmd->add_option("--m", bounds.m, "Tower level m >= 1")->required();
    bounds_cmd->add_option("--i", bounds.i, "Index i >= 0")->required()->check(CLI::NonNegativeNumber);

    VerifyOptions verify;
    auto* verify_cmd = app.add_subcommand("verify", "Check every closed form against the oracle");
    verify_cmd->add_option("--q", verify.qs, "Comma-separated base parameters")->delimiter(',');
    verify_cmd->add_option("--m-max", verify.m_max, "Largest level (default: every level with c_m <= 2^20)")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--margin", verify.margin, "Indices probed past 2c-g")->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--report", verify.report_path, "Write the JSON report here instead of stdout");
    verify_cmd->add_option("--threads", verify.threads, "Worker threads (0 = hardware concurrency)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (table_cmd->parsed()) return cmd_table(table, out);
        if (bounds_cmd->parsed()) return cmd_bounds(bounds, out);
        return cmd_verify(verify, out, err);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return e.code() == Errc::InvalidArgument ? kExitUsage : kExitResource;
    }
}

} // namespace obound::cli
