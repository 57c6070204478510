#pragma once

#include <string>
#include <vector>

namespace potdyn {

// Two self-consistent constant sets; computations never mix them. The
// approximate set reproduces rounded desk constants verbatim.
enum class ConstantSet { Exact, PaperApproximate };

enum class Dimension { Energy, Power, Time };

enum class Provenance { Exact, PaperApproximate };

struct UnitDef {
    std::string name;
    Dimension dimension;
    double to_si;  // multiplier into J, W, or s
    Provenance provenance;
    std::string citation;
};

const char* constant_set_name(ConstantSet set);
const char* dimension_name(Dimension dim);

const std::vector<UnitDef>& unit_registry(ConstantSet set);

const UnitDef& unit_lookup(const std::string& name, ConstantSet set);

// value * (to_si(from) / to_si(to)); dimensions must match.
double convert(double value, const std::string& from_unit, const std::string& to_unit,
               ConstantSet set = ConstantSet::Exact);

}  // namespace potdyn
