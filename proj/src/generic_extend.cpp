#include "homoglab/generic_extend.hpp"

#include <algorithm>

#include "homoglab/bipede.hpp"
#include "homoglab/crosscut.hpp"
#include "homoglab/metric_space.hpp"
#include "homoglab/omegapede.hpp"

namespace homoglab {

Workbench generic_workbench(const FamilyHandle& h, int n, int k, int mult) {
    switch (h.family) {
        case Family::urysohn:
            return make_workbench(build_urysohn_space(h.monoid, n, k, mult));
        case Family::crosscut: {
            CrosscutSpec spec;
            spec.np = 3;
            spec.nq = 3;
            spec.cell = std::max(1, n / (spec.np * spec.nq));
            return make_workbench(build_crosscut(spec));
        }
        case Family::bipede:
            return make_workbench(build_bipede(n, k, mult));
        case Family::omegapede:
            return make_workbench(build_omegapede(3, 2, n, k, mult));
    }
    return {};
}

FinStructure generic_extend(const FamilyHandle& h, int n, int k, int mult) {
    const Workbench wb = generic_workbench(h, n, k, mult);
    switch (wb.family) {
        case Family::urysohn: return space_to_structure(wb.space);
        case Family::crosscut: return crosscut_to_structure(wb.crosscut);
        case Family::bipede: return bipede_to_structure(wb.bipede);
        case Family::omegapede: return omegapede_to_structure(wb.omegapede);
    }
    return {};
}

}  // namespace homoglab
