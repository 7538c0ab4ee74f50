#include "amalg/dsl.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

bool write_text(const std::string& path, const std::string& text)
{
    if (path == "-") {
        std::cout << text;
        return true;
    }
    std::ofstream out(path, std::ios::binary);
    out << text;
    if (!out) {
        std::cerr << "error: cannot write " << path << "\n";
        return false;
    }
    return true;
}

int run_check(const std::string& file, const std::string& json_path, std::size_t guard)
{
    std::ifstream in(file, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot read " << file << "\n";
        return 2;
    }
    std::stringstream buf;
    buf << in.rdbuf();

    std::vector<amalg::VerificationReport> reports;
    try {
        const amalg::dsl::Script script = amalg::dsl::parse(buf.str());
        amalg::ScopedSizeGuard scoped(guard);
        reports = amalg::dsl::evaluate(script);
    } catch (const amalg::dsl::DslError& e) {
        std::cerr << file << ":" << e.what() << "\n";
        return 2;
    }

    std::cout << amalg::reports_to_table(reports);
    const auto failed = std::count_if(reports.begin(), reports.end(),
                                      [](const auto& r) { return r.status == amalg::Status::fail; });
    std::cout << reports.size() << " checks, " << failed << " failed\n";
    if (!json_path.empty() && !write_text(json_path, amalg::reports_to_json(reports)))
        return 2;
    return failed ? 1 : 0;
}

int run_explain(const std::string& name)
{
    const auto text = amalg::dsl::explain(name);
    if (!text) {
        std::cerr << "unknown check '" << name << "'; known checks:";
        for (const auto& n : amalg::dsl::check_names())
            std::cerr << " " << n;
        std::cerr << "\n";
        return 2;
    }
    for (const auto& shape : amalg::dsl::check_shapes(name))
        std::cout << "check " << shape << "\n";
    std::cout << "\n" << *text << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Finite commutative ring amalgamation engine"};
    app.require_subcommand(1);

    std::string file, json_path;
    std::size_t guard = amalg::default_size_guard;
    std::uint64_t seed = 0;
    auto* check = app.add_subcommand("check", "Evaluate the checks of a script");
    check->add_option("file", file, "Script file")->required();
    check->add_option("--json", json_path, "Write the JSON report here ('-' for stdout)");
    check->add_option("--guard", guard, "Largest ring order a construction may build")->check(CLI::PositiveNumber);
    check->add_option("--seed", seed, "Recorded for reproducibility; evaluation is deterministic");

    std::uint64_t cat_seed = 0;
    std::size_t budget = 256;
    std::string out_path = "-";
    auto* catalog = app.add_subcommand("catalog", "Write the generated instance catalog as a script");
    catalog->add_option("--seed", cat_seed, "Sampling seed");
    catalog->add_option("--budget", budget, "Bound on |A|*|J| and |A|*|B|");
    catalog->add_option("--out", out_path, "Output file ('-' for stdout)");

    std::string check_name;
    auto* explain = app.add_subcommand("explain", "Describe what a check verifies");
    explain->add_option("check", check_name, "Check name")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (check->parsed())
        return run_check(file, json_path, guard);
    if (catalog->parsed()) {
        const amalg::dsl::Script script = amalg::dsl::generate_catalog(cat_seed, budget);
        for (const auto& w : script.warnings)
            std::cerr << "warning: " << w << "\n";
        return write_text(out_path, amalg::dsl::render(script)) ? 0 : 2;
    }
    return run_explain(check_name);
}
