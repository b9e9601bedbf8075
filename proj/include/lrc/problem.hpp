#pragma once

#include "lrc/connection.hpp"
#include "lrc/gauss_manin.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lrc {

// Parsed problem file. Sections: [ring], [lie NAME]..., [module NAME],
// [connection NAME]..., [invariant], [hgen NAME]..., [task]. Flat key = value
// entries; '#' starts a comment; parameters from the task section substitute
// into weights, exponents and coefficients at parse time.
struct ProblemFile {
    struct RingSection {
        RingPtr ring;
        std::optional<std::string> relation_text;  // canonical printed form
        std::optional<std::string> reduce_text;    // "var^exp"
    };
    struct LieSection {
        std::string name;
        LieAlgebra algebra;
    };
    struct ModuleSection {
        std::string name;
        Module module;
    };
    struct ConnectionSection {
        std::string name;
        std::string algebra_name;
        std::string module_name;
        bool explicit_matrices = false;
        Connection connection;
    };
    struct HGenSection {
        std::string name;
        std::vector<Polynomial> action;
        std::vector<Polynomial> lift_coeffs;
    };
    struct TaskSection {
        std::string command;
        std::vector<std::pair<std::string, long>> params;  // insertion order
        std::optional<Degree> max_degree;
        std::optional<std::string> connection_name;
        std::optional<std::string> kernel_name;
        std::optional<int> index;
        // grid ranges in insertion order: name -> [lo, hi]
        std::vector<std::pair<std::string, std::pair<int, int>>> grid;
    };

    std::optional<RingSection> ring;
    std::vector<LieSection> lies;
    std::optional<ModuleSection> module;
    std::vector<ConnectionSection> connections;
    std::vector<Polynomial> invariants;
    std::vector<HGenSection> hgens;
    TaskSection task;

    const LieAlgebra* find_lie(const std::string& name) const;
    const ConnectionSection* find_connection(const std::string& name) const;
};

ProblemFile parse_problem(const std::string& text);
std::string print_problem(const ProblemFile& problem);

}  // namespace lrc
