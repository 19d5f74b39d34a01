#include "tfcycle/gas.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

namespace tfcycle {

namespace {

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return s;
}

// Strip separators so "natural gas", "natural-gas" and "NaturalGas" agree.
std::string canonical(const std::string& name) {
    std::string out;
    for (char c : name) {
        if (c == ' ' || c == '-' || c == '_') continue;
        out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    return out;
}

}  // namespace

AmbientState isa_ambient(double altitude_m) {
    if (!(altitude_m >= 0.0 && altitude_m <= kTropopauseAltitudeM)) {
        std::ostringstream os;
        os << "altitude " << altitude_m
           << " m outside the modeled troposphere [0, 11000] m";
        throw PreconditionError(os.str());
    }
    AmbientState a;
    a.altitude_m = altitude_m;
    a.t_k = kSeaLevelTempK - kIsaLapseKPerM * altitude_m;
    a.p_kpa = kSeaLevelPressureKPa *
              std::pow(a.t_k / kSeaLevelTempK, kIsaPressureExponent);
    a.rho_kg_m3 = a.p_kpa * 1000.0 / (kAirGasConstant * a.t_k);
    return a;
}

InletState apply_inlet_cooling(const AmbientState& ambient, double delta_t_k,
                               double mass_flow_kgps, double cop) {
    if (!(cop > 0.0)) throw PreconditionError("chiller COP must be positive");
    if (mass_flow_kgps < 0.0)
        throw PreconditionError("mass flow must be nonnegative");
    InletState in;
    in.p_kpa = ambient.p_kpa;
    in.t_k = ambient.t_k + delta_t_k;
    in.delta_t_k = delta_t_k;
    const double cp = standard_air().cp_j_per_kgk;
    in.chiller_load_kw =
        mass_flow_kgps * cp * std::max(0.0, -delta_t_k) / 1000.0;
    return in;
}

double chemical_exergy_correlation(const Fuel& fuel) {
    if (fuel.carbon_atoms < 1)
        throw PreconditionError(
            "chemical exergy correlation applies to hydrocarbons only (c >= 1); "
            "use the tabulated value for " + fuel.name);
    const double c = static_cast<double>(fuel.carbon_atoms);
    const double h = static_cast<double>(fuel.hydrogen_atoms);
    return fuel.fhv_mj_per_kg * (1.04224 + 0.11925 * c / h - 0.042 / c);
}

const std::vector<Fuel>& builtin_fuels() {
    static const std::vector<Fuel> fuels = {
        {"JP10", 10, 16, 42.075, 44.921, 136.0},
        {"natural-gas", 1, 4, 49.736, 55.168, 16.0},
        {"hydrogen", 0, 2, 118.429, 134.778, 2.0},
    };
    return fuels;
}

Fuel fuel_lookup(const std::string& name, const std::vector<Fuel>& extra) {
    const std::string key = canonical(name);
    for (const Fuel& f : extra) {
        if (canonical(f.name) == key) return f;
    }
    for (const Fuel& f : builtin_fuels()) {
        if (canonical(f.name) == key) return f;
    }
    if (key == "ng") return fuel_lookup("natural-gas", extra);
    if (key == "h2") return fuel_lookup("hydrogen", extra);

    std::ostringstream os;
    os << "unknown fuel '" << name << "'; available:";
    for (const Fuel& f : extra) os << " " << lower(f.name);
    for (const Fuel& f : builtin_fuels()) os << " " << lower(f.name);
    throw NotFoundError(os.str());
}

}  // namespace tfcycle
