#pragma once

// Dumbbell-core harvester coil model: effective permeability, core flux
// density, induced open-circuit voltage, matched-load power, and the
// diagnostic loss estimates (eddy current, hysteresis bound).

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "mfeh/common.hpp"
#include "mfeh/magnetics.hpp"

namespace mfeh {

/// Core rod material properties.
struct CoreMaterial {
    double mu_r;         ///< relative permeability
    double resistivity;  ///< [ohm m]
    double loss_tangent; ///< upper bound, dimensionless

    CoreMaterial(double mu_r_, double resistivity_, double loss_tangent_)
        : mu_r(mu_r_), resistivity(resistivity_), loss_tangent(loss_tangent_) {
        if (mu_r < 1.0)
            throw std::domain_error("CoreMaterial: mu_r must be >= 1");
        if (resistivity <= 0.0)
            throw std::domain_error("CoreMaterial: resistivity must be > 0");
        if (loss_tangent < 0.0)
            throw std::domain_error("CoreMaterial: loss_tangent must be >= 0");
    }
};

/// Ferroxcube 4B1 ferrite (rod material of both built coils).
inline CoreMaterial material_4b1() { return CoreMaterial(250.0, 1.0e5, 90.0e-6); }

/// Harvester coil parameters. mu_e is the effective permeability of the
/// assembled core, taken as an input (from measurement or external FEM).
struct CoilSpec {
    long turns;          ///< winding count N
    double area;         ///< mean enclosed core area A [m^2]
    double resistance;   ///< coil resistance R [ohm]
    double inductance;   ///< coil inductance L [H]; unused by the power model
    CoreMaterial material;
    double mu_e;         ///< effective permeability of the core
    double rod_diameter; ///< ferrite rod diameter [m]

    CoilSpec(long turns_, double area_, double resistance_, double inductance_,
             CoreMaterial material_, double mu_e_, double rod_diameter_)
        : turns(turns_), area(area_), resistance(resistance_), inductance(inductance_),
          material(material_), mu_e(mu_e_), rod_diameter(rod_diameter_) {
        if (turns < 1)
            throw std::domain_error("CoilSpec: turns must be >= 1");
        if (area <= 0.0)
            throw std::domain_error("CoilSpec: area must be > 0");
        if (resistance <= 0.0)
            throw std::domain_error("CoilSpec: resistance must be > 0");
        if (mu_e < 1.0 || mu_e > material.mu_r)
            throw std::domain_error("CoilSpec: mu_e must lie in [1, mu_r]");
        if (rod_diameter < 0.0)
            throw std::domain_error("CoilSpec: rod_diameter must be >= 0");
    }
};

/// Coil A: seven 8 mm rods, 80000 turns, 17.2 kohm, 1000 H, mu_e 23.5.
inline CoilSpec coil_a() {
    return CoilSpec(80000, 590.0e-6, 17.2e3, 1000.0, material_4b1(), 23.5, 8.0e-3);
}

/// Coil B: three 8 mm rods, 62000 turns, 9.2 kohm, 500 H, mu_e 31.3.
inline CoilSpec coil_b() {
    return CoilSpec(62000, 334.0e-6, 9.2e3, 500.0, material_4b1(), 31.3, 8.0e-3);
}

/// Look up a built-in preset by name ("coil-a", "coil-b").
inline std::optional<CoilSpec> coil_preset(std::string_view name) {
    if (name == "coil-a") return coil_a();
    if (name == "coil-b") return coil_b();
    return std::nullopt;
}

/// Demagnetised-core state: internal field reduced by n_d times the
/// magnetisation.
struct DemagState {
    double n_d;           ///< demagnetisation factor, in [0,1]
    double magnetisation; ///< core magnetisation M [A/m]
    double h_core;        ///< internal field strength [A/m]
    double b_core;        ///< core flux density [T]

    static DemagState from_applied(double n_d, double h_applied, double magnetisation) {
        if (n_d < 0.0 || n_d > 1.0)
            throw std::domain_error("DemagState: n_d must be in [0,1]");
        const double h_core = h_applied - n_d * magnetisation;
        const double b_core = mu0 * (h_core + magnetisation);
        return DemagState{n_d, magnetisation, h_core, b_core};
    }
};

/// mu_e = mu_r / (1 + n_d (mu_r - 1)); decreasing in n_d, in [1, mu_r].
inline double effective_permeability(double mu_r, double n_d) {
    if (mu_r < 1.0)
        throw std::domain_error("effective_permeability: mu_r must be >= 1");
    if (n_d < 0.0 || n_d > 1.0)
        throw std::domain_error("effective_permeability: n_d must be in [0,1]");
    return mu_r / (1.0 + n_d * (mu_r - 1.0));
}

/// Algebraic inverse of effective_permeability.
inline double demag_factor(double mu_r, double mu_e) {
    if (mu_r <= 1.0)
        throw std::domain_error("demag_factor: mu_r must be > 1");
    if (mu_e < 1.0 || mu_e > mu_r)
        throw std::domain_error("demag_factor: mu_e must lie in [1, mu_r]");
    return (mu_r / mu_e - 1.0) / (mu_r - 1.0);
}

/// Core flux density in the linear-response regime: b = mu_e mu0 h.
inline double core_flux_density(double mu_e, const FieldStrength& h0) {
    return mu_e * mu0 * h0.h_rms;
}

/// Open-circuit voltage magnitude |V_oc| = N A mu_e mu0 omega h_rms [V RMS].
/// The 90 degree phase lead is not represented.
inline double open_circuit_voltage(const CoilSpec& coil, const FieldStrength& h0,
                                   double frequency) {
    if (frequency <= 0.0)
        throw std::domain_error("open_circuit_voltage: frequency must be > 0");
    const double omega = 2.0 * pi * frequency;
    return static_cast<double>(coil.turns) * coil.area * coil.mu_e * mu0 * omega * h0.h_rms;
}

/// Power dissipated in an impedance-matched load: |V_oc|^2 / (4 R) [W].
inline double matched_load_power(const CoilSpec& coil, const FieldStrength& h0,
                                 double frequency) {
    const double v_oc = open_circuit_voltage(coil, h0, frequency);
    return v_oc * v_oc / (4.0 * coil.resistance);
}

/// Power into a general resistive load with reactance compensated.
/// Maximized at r_load == r_coil, where it equals v_oc^2 / (4 r_coil).
inline double load_power(double v_oc, double r_coil, double r_load) {
    if (r_coil <= 0.0)
        throw std::domain_error("load_power: r_coil must be > 0");
    if (r_load <= 0.0)
        throw std::domain_error("load_power: r_load must be > 0");
    const double sum = r_coil + r_load;
    return v_oc * v_oc * r_load / (sum * sum);
}

/// Empirical eddy-current loss figure for a cylindrical rod:
/// pi^2 B_p^2 d^2 f^2 / (16 rho). The source model does not state its
/// units; the raw value is returned (it reads as a loss density per unit
/// volume). Diagnostic only, not subtracted from the power prediction.
inline double eddy_loss(double b_peak, double rod_diameter, double frequency,
                        double resistivity) {
    if (b_peak < 0.0 || rod_diameter < 0.0 || frequency < 0.0)
        throw std::domain_error("eddy_loss: arguments must be >= 0");
    if (resistivity <= 0.0)
        throw std::domain_error("eddy_loss: resistivity must be > 0");
    return pi * pi * b_peak * b_peak * rod_diameter * rod_diameter * frequency * frequency
           / (16.0 * resistivity);
}

struct HysteresisCheck {
    bool negligible;
    double bound; ///< the threshold the loss tangent was compared against
};

/// Conservative linear-response check on the material's loss tangent.
inline HysteresisCheck hysteresis_negligible(const CoreMaterial& material,
                                             double threshold = 1.0e-3) {
    return HysteresisCheck{material.loss_tangent < threshold, threshold};
}

} // namespace mfeh
