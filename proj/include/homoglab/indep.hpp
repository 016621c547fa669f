#pragma once
// Dividing: closed-form rules per family, the brute-force copies oracle, and the
// premise gate for the two-type extension theorem.

#include <optional>
#include <string>
#include <vector>

#include "homoglab/bipede.hpp"
#include "homoglab/crosscut.hpp"
#include "homoglab/metric_space.hpp"
#include "homoglab/omegapede.hpp"

namespace homoglab {

enum class Family { urysohn, crosscut, bipede, omegapede };

Family family_from_name(const std::string& name);
std::string family_name(Family f);

// One of the four fragment kinds, tagged. Queries address elements the family's
// native way: points (urysohn, crosscut), body indices (bipede), global point ids
// (omegapede).
struct Workbench {
    Family family = Family::urysohn;
    RMetricSpace space;
    Crosscut crosscut;
    BipedeFragment bipede;
    OmegapedeFragment omegapede;

    int size() const;  // number of addressable elements
};

Workbench make_workbench(RMetricSpace s);
Workbench make_workbench(Crosscut c);
Workbench make_workbench(BipedeFragment b);
Workbench make_workbench(OmegapedeFragment o);

// A conceded class object: a definable equivalence relation named the family's way
// ("d_<label>", "P"/"Q"/"PQ"/"EQ", "EB"/"ER", "E0"/"E1", or "TOTAL") plus a
// representative element.
struct ImaginaryBase {
    std::string relation;
    int representative = -1;
};

struct IndependenceQuery {
    std::vector<int> a;
    std::vector<int> b;
    std::vector<int> base;
    std::vector<ImaginaryBase> imaginary;
};

enum class Tri { yes, no, inconclusive };

// Copies-of-b argument with pairwise-uniform atomic types, joint admissibility,
// extendability to mult+1 copies, and an infeasible demand conjunction; kcons <= mult
// bounds the witnessed k-inconsistency. Singleton a-side only; wider tuples come
// back inconclusive rather than wrong.
Tri divides_bruteforce(const Workbench& wb, const IndependenceQuery& q, int mult = 3,
                       int kcons = 3);

// Closed-form dividing over a real base, dispatched per family.
bool divides_closed(const Workbench& wb, int a, int b, const std::vector<int>& base);

// Closed-form dividing of tp(a / bbar) over an imaginary class base.
bool divides_over_class(const Workbench& wb, int a, const std::vector<int>& bbar,
                        const ImaginaryBase& cls);

// The coarsest conceded relation making c independent from dbar, as the premise
// setup demands; for urysohn this is d_{r*} with r* = min 2d(c,d).
ImaginaryBase find_independence_relation(const Workbench& wb, int c,
                                         const std::vector<int>& dbar);

struct PremiseReport {
    bool a_indep = false;  // a independent from c over the conceded class
    bool b_indep = false;  // b independent from dbar over the conceded class
    bool type_eq = false;  // tp(a/acl(class)) == tp(b/acl(class))
    bool type_eq_class_level = false;  // comparison over the bare class object
    std::string detail;

    bool all() const { return a_indep && b_indep && type_eq; }
};

PremiseReport check_premises(const Workbench& wb, int a, int b, int c,
                             const std::vector<int>& dbar, const ImaginaryBase& cls);

}  // namespace homoglab
