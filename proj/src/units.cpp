#include "hhg1d/units.hpp"

#include <stdexcept>
#include <string>

namespace hhg1d::units {

Unit parse_unit(std::string_view tag) {
    if (tag == "nm") return Unit::nm;
    if (tag == "um" || tag == "µm" || tag == "μm") return Unit::um;
    if (tag == "eV") return Unit::eV;
    if (tag == "fs") return Unit::fs;
    if (tag == "GV/m") return Unit::gv_per_m;
    throw std::invalid_argument("unknown unit tag: '" + std::string(tag) + "'");
}

namespace {
double factor(Unit u) {
    switch (u) {
        case Unit::nm: return bohr_per_nm;
        case Unit::um: return bohr_per_um;
        case Unit::eV: return hartree_per_eV;
        case Unit::fs: return au_time_per_fs;
        case Unit::gv_per_m: return au_field_per_GVm;
    }
    throw std::invalid_argument("unknown unit tag");
}
}  // namespace

double to_internal(double value, Unit u) { return value * factor(u); }

double from_internal(double value, Unit u) { return value / factor(u); }

}  // namespace hhg1d::units
