#pragma once

#include <string>
#include <vector>

#include "tfcycle/errors.hpp"

namespace tfcycle {

// Gas constant used for all air density bookkeeping [J/(kg K)].
inline constexpr double kAirGasConstant = 287.05;

// ISA sea-level reference and troposphere parameters.
inline constexpr double kSeaLevelTempK = 288.15;
inline constexpr double kSeaLevelPressureKPa = 101.325;
inline constexpr double kIsaLapseKPerM = 0.0065;
inline constexpr double kIsaPressureExponent = 5.2561;
inline constexpr double kTropopauseAltitudeM = 11000.0;

/// Ambient atmosphere at a given altitude. rho is always consistent with
/// the ideal-gas law at (t, p).
struct AmbientState {
    double altitude_m = 0.0;
    double t_k = kSeaLevelTempK;
    double p_kpa = kSeaLevelPressureKPa;
    double rho_kg_m3 = 1.225;
};

/// Engine inlet condition after the (optional) inlet-air chiller.
/// The chiller removes heat only; pressure is passed through unchanged.
struct InletState {
    double t_k = kSeaLevelTempK;
    double p_kpa = kSeaLevelPressureKPa;
    double delta_t_k = 0.0;           // t_inlet - t_ambient
    double chiller_load_kw = 0.0;     // heat removed from the stream, >= 0
};

/// Constant-property working gas. The gas constant is derived:
/// R = cp (k - 1) / k.
struct GasProperties {
    double cp_j_per_kgk = 1005.0;
    double k = 1.4;

    double gas_constant() const { return cp_j_per_kgk * (k - 1.0) / k; }
};

inline GasProperties standard_air() { return GasProperties{1005.0, 1.4}; }

/// Fuel record: composition, heating value and tabulated chemical exergy.
struct Fuel {
    std::string name;
    int carbon_atoms = 0;
    int hydrogen_atoms = 0;
    double fhv_mj_per_kg = 0.0;          // specific heating value
    double chem_exergy_mj_per_kg = 0.0;  // tabulated, used for all audits
    double molecular_weight_g_mol = 0.0;
};

/// ISA troposphere state at altitude in [0, 11000] m.
/// Throws PreconditionError above the tropopause.
AmbientState isa_ambient(double altitude_m);

/// Inlet state for a chiller temperature shift delta_t (negative = cooling).
/// The chiller load is mass_flow * cp_air * max(0, -delta_t); the shaft
/// off-take needed to drive it is chiller_load / cop (charged by the cycle's
/// power balance, not here).
InletState apply_inlet_cooling(const AmbientState& ambient, double delta_t_k,
                               double mass_flow_kgps, double cop);

/// Diagnostic correlation for hydrocarbon specific chemical exergy
/// [MJ/kg]. Only valid for c >= 1; use Fuel::chem_exergy_mj_per_kg for
/// anything authoritative (the built-in table values do not match this
/// correlation for all fuels).
double chemical_exergy_correlation(const Fuel& fuel);

/// Built-in fuel database (JP10, natural gas, hydrogen).
const std::vector<Fuel>& builtin_fuels();

/// Case-insensitive lookup into the built-in database plus any extra
/// user-supplied records. Throws NotFoundError listing what is available.
Fuel fuel_lookup(const std::string& name,
                 const std::vector<Fuel>& extra = {});

}  // namespace tfcycle
