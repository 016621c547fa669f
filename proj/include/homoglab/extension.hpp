#pragma once
// Extension problems: realize prescribed types over parameter tuples by one
// new tuple. Problems reduce to chains of two-type steps which are solved
// against existing elements first, then one-point extensions.

#include <optional>
#include <string>
#include <vector>

#include "homoglab/indep.hpp"

namespace homoglab {

struct ExtensionTarget {
    std::vector<int> a;  // model tuple whose type is wanted
    std::vector<int> b;  // parameters
};

struct ExtensionProblem {
    std::vector<ExtensionTarget> targets;  // all constrain the same new tuple
};

// A replay reference: >= 0 is a fragment element, -(s+1) is the output of
// chain step s.
struct StepRef {
    int model = -1;   // element the demanded type is read from
    int replay = -1;  // where the demand applies when the chain runs
};

// Realize tp(a_model / c) and tp(b / dbar) by one element. The second type is
// read from b_model when b_replay names a fragment element, and live from the
// materialized output otherwise.
struct TwoTypeStep {
    int a_model = -1;
    StepRef c;
    int b_model = -1;
    int b_replay = -1;
    std::vector<StepRef> dbar;
    int coord = 0;  // output coordinate this step builds toward
};

struct ReducedChain {
    int width = 1;
    std::vector<TwoTypeStep> steps;
    std::vector<int> coord_step;  // final step index per output coordinate
    std::vector<std::string> notes;
};

// Coordinate-splits every target, then merges targets per coordinate by
// parameter-splitting, last parameter first. Solving the steps in order
// solves the original problem.
ReducedChain reduce_extension_problem(const Workbench& wb, const ExtensionProblem& p);

enum class SolveVerdict { sat, unsat, inconclusive };

struct SolveResult {
    SolveVerdict verdict = SolveVerdict::inconclusive;
    std::vector<int> witness;                   // ids in the extended workbench
    std::vector<std::string> witness_names;
    std::vector<std::string> conflict;          // minimized demand literals
    std::string note;
    Workbench extended;                         // fragment after materialization
    int steps_solved = 0;
};

// Single two-type problem: tp(e,c) = tp(a,c) and tp(e,dbar) = tp(b,dbar).
SolveResult solve_two_type(const Workbench& wb, int a, int c, int b, const std::vector<int>& dbar);

// Full pipeline: reduce, run the chain with backtracking over candidate
// realizations, verify the witness against every original target.
SolveResult extension_solve(const Workbench& wb, const ExtensionProblem& p);

ExtensionProblem extension_problem_from_json(const std::string& text);
std::string extension_problem_to_json(const ExtensionProblem& p);
std::string solve_result_to_json(const SolveResult& r);

// Omegapede pair-code bits; the other families use dense small codes.
constexpr int kOmEq = 1, kOmE0 = 2, kOmE1 = 4, kOmLxy = 8, kOmLyx = 16, kOmFx = 32,
              kOmFy = 64;

// Family-native atomic pair code; equal codes over shared parameters mean
// equal binary atomic types.
int pair_code(const Workbench& wb, int x, int y);
int transpose_pair_code(const Workbench& wb, int code);
int point_kind(const Workbench& wb, int x);  // family-native 1-type code
std::string element_name(const Workbench& wb, int x);
std::string pair_code_literal(const Workbench& wb, int code, const std::string& x,
                              const std::string& y);

// Mutual codes a fresh uniform copy family may use, given the copied
// element's kind; never contains the equality code.
std::vector<int> copy_pair_codes(const Workbench& wb, int kind);

// Requirements on one new point: a 1-type kind (-1 = unconstrained), per-target
// allowed code sets, and for bipede optional foot pins (foot, 0 blue / 1 red /
// -1 must not contain). prefer_late flips the candidate order, which changes
// which realization gets materialized but never whether one exists.
struct PointSpec {
    int kind = -1;
    std::vector<std::pair<int, std::vector<int>>> demands;
    std::vector<std::pair<int, int>> foot_pins;
    bool prefer_late = false;
};

// Family axioms decide whether some fresh element can realize the demands;
// free relations take the most generic value available.
bool point_feasible(const Workbench& wb, const PointSpec& spec);
std::optional<int> try_append_point(Workbench& wb, const PointSpec& spec);

// Whether an element already present realizes the demands.
bool spec_satisfied_by(const Workbench& wb, const PointSpec& spec, int x);

}  // namespace homoglab
