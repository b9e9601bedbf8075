#include "lrc/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

// overlay --grid / --max-degree onto the parsed problem
void apply_overrides(lrc::ProblemFile& problem, const std::string& grid, long max_degree,
                     bool have_max_degree) {
    if (have_max_degree) problem.task.max_degree = max_degree;
    if (grid.empty()) return;
    problem.task.grid.clear();
    std::stringstream ss(grid);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("bad --grid item '" + item + "'");
        std::string name = item.substr(0, eq);
        std::string range = item.substr(eq + 1);
        auto dots = range.find("..");
        int lo, hi;
        if (dots == std::string::npos) {
            lo = hi = std::stoi(range);
        } else {
            lo = std::stoi(range.substr(0, dots));
            hi = std::stoi(range.substr(dots + 2));
        }
        problem.task.grid.emplace_back(name, std::make_pair(lo, hi));
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Lie-Rinehart cohomology, matrix-factorization connections and "
                 "Gauss-Manin actions over weighted-graded rings"};
    app.name("lrcohom");

    std::string command, problem_path, out_path, grid;
    long max_degree = 0;
    app.add_option("command", command,
                   "verify-mf | verify-syzygies | check-connection | complex-check | cohomology | "
                   "horizontal | gauss-manin | gysin | cusp")
        ->required();
    app.add_option("problem-file", problem_path, "problem file path")->required();
    auto* md = app.add_option("--max-degree", max_degree, "override the task's max_degree");
    app.add_option("--grid", grid, "override the task's grid, e.g. m=1..5,n=1..5");
    app.add_option("--out", out_path, "write the report here instead of stdout");

    CLI11_PARSE(app, argc, argv);

    std::ifstream in(problem_path);
    if (!in) {
        std::cerr << "lrcohom: cannot open '" << problem_path << "'\n";
        return 2;
    }
    std::stringstream buf;
    buf << in.rdbuf();

    lrc::ProblemFile problem;
    try {
        problem = lrc::parse_problem(buf.str());
        apply_overrides(problem, grid, max_degree, md->count() > 0);
    } catch (const std::exception& e) {
        std::cerr << "lrcohom: " << e.what() << "\n";
        return 2;
    }

    if (command != problem.task.command) {
        std::cerr << "lrcohom: command '" << command << "' does not match the problem's task '"
                  << problem.task.command << "'\n";
        return 2;
    }

    lrc::Report report;
    try {
        report = lrc::run_command(command, problem);
    } catch (const std::exception& e) {
        report.command = command;
        report.ok = false;
        report.body.add("error", e.what());
    }

    std::string text = report.str();
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "lrcohom: cannot write '" << out_path << "'\n";
            return 2;
        }
        out << text;
    }
    return report.ok ? 0 : 1;
}
