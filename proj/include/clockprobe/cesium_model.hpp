#pragma once

#include "clockprobe/angular_momentum.hpp"

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace clockprobe {

namespace constants {
inline constexpr double kPlanck = 6.62607015e-34;       // J s (exact, SI)
inline constexpr double kSpeedOfLight = 299792458.0;    // m/s (exact, SI)
}  // namespace constants

/// Thrown when a requested run is physically inconsistent (no balance root,
/// unbalanced probe colors, ...). The CLI maps this to exit code 3.
class PhysicsError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Cesium D2 hyperfine structure: 6S_1/2 (F = 3, 4) to 6P_3/2 (F' = 2..5).
/// Frequencies are plain MHz; only ratios and differences enter the model,
/// so the angular/ordinary distinction cancels as long as the unit is used
/// uniformly.
struct LevelScheme {
    HalfInt nuclear_spin = HalfInt::halves(7);
    HalfInt ground_j = HalfInt::halves(1);
    HalfInt excited_j = HalfInt::halves(3);

    double ground_splitting_mhz = 9192.631770;  // F=3 <-> F=4 clock splitting
    // 6P_3/2 hyperfine intervals, MHz.
    double interval_23_mhz = 151.2;
    double interval_34_mhz = 201.3;
    double interval_45_mhz = 251.1;
    double linewidth_mhz = 5.22;        // natural linewidth gamma
    double wavelength_m = 852.34727582e-9;

    static LevelScheme cs_d2() { return {}; }
    /// Load overrides from a key-value text file (keys as in
    /// data/cs_d2.conf); unknown keys are rejected.
    static LevelScheme from_key_value_file(const std::string& path);

    std::array<int, 2> ground_f_values() const { return {3, 4}; }
    std::array<int, 4> excited_f_values() const { return {2, 3, 4, 5}; }

    bool ground_f_valid(int f) const { return f == 3 || f == 4; }
    bool excited_f_valid(int f) const { return f >= 2 && f <= 5; }

    /// Energy of F' relative to F' = 5, MHz (negative below).
    double excited_offset_mhz(int f_excited) const;
    /// Energy of F relative to F = 4, MHz.
    double ground_offset_mhz(int f_ground) const;
    /// Frequency of the F -> F' line relative to the 4 -> 5 line, MHz.
    double transition_offset_mhz(int f_ground, int f_excited) const;

    void validate() const;  // throws std::invalid_argument on bad data
};

/// One probe color: a detuning relative to a reference transition, a
/// polarization component q, and a photon budget. `sign` weights the color
/// in two-color combinations.
struct ProbeColor {
    int ref_ground_f = 4;
    int ref_excited_f = 5;
    double detuning_mhz = 160.0;
    int polarization_q = 0;
    double photon_number = 3e5;
    double sign = +1.0;
};

/// Cylindrical sample geometry; the single-pass phase scale is
/// phi0 = 3 l lambda^2 (2J'+1) / (4 pi V).
struct ProbeGeometry {
    double sample_length_m = 60e-6;
    double sample_diameter_m = 60e-6;
    double wavelength_m = 852.34727582e-9;

    double volume_m3() const;
    double phi0(const LevelScheme& scheme) const;
};

/// Mean atom number per hyperfine Zeeman sublevel (F, m_F).
class ZeemanPopulations {
public:
    double at(int f, int m) const;
    void set(int f, int m, double n);
    void add(int f, int m, double n);
    double total() const;
    bool operator==(const ZeemanPopulations&) const = default;

private:
    static std::size_t index(int f, int m);
    // F=3 occupies slots 0..6, F=4 slots 7..15.
    std::array<double, 16> counts_{};
};

/// (2F'+1)(2F+1) [3j]^2 [6j]^2 for the F, m_F -> F', m_F + q line, exact.
/// Zero when selection rules forbid the transition.
BigRational coupling_coefficient(const LevelScheme& scheme, int f_ground, int m_f,
                                 int f_excited, int q);

/// (gamma/2) Delta / (Delta^2 + (gamma/2)^2); odd in Delta, extrema +-1/2 at
/// Delta = +-gamma/2.
double dispersive_lineshape(double detuning_mhz, double gamma_mhz);

/// Detuning of `color` from the F -> F' transition, MHz.
double color_detuning_mhz(const LevelScheme& scheme, const ProbeColor& color,
                          int f_ground, int f_excited);

/// Per-atom dispersive response of one probe color, summed over allowed F'
/// for every ground sublevel. Multiply by phi0 and the populations to get a
/// phase. Precompute once and reuse in hot loops.
class DispersiveResponse {
public:
    DispersiveResponse(const LevelScheme& scheme, const ProbeColor& color);
    double at(int f, int m) const;
    const ProbeColor& color() const { return color_; }

private:
    ProbeColor color_;
    std::array<double, 7> f3_{};
    std::array<double, 9> f4_{};
};

/// Multi-color phase model with photon-fraction weights and color signs
/// baked in; phase() is the full dispersive phase of the combined probe.
class ProbePhaseModel {
public:
    ProbePhaseModel(const LevelScheme& scheme, const ProbeGeometry& geom,
                    std::vector<ProbeColor> colors);
    double phase(const ZeemanPopulations& pops) const;
    /// Weighted per-atom phase for one sublevel (phi0 included).
    double per_atom_phase(int f, int m) const;
    /// Contribution of color k alone (weight and sign included).
    double color_phase(std::size_t k, const ZeemanPopulations& pops) const;
    std::size_t n_colors() const { return responses_.size(); }

private:
    std::vector<DispersiveResponse> responses_;
    std::vector<double> weights_;  // sign * photon fraction
    double phi0_ = 0.0;
};

/// Dispersive phase shift of one probe color from the given populations.
double phase_shift(const ZeemanPopulations& pops, const ProbeColor& color,
                   const ProbeGeometry& geom, const LevelScheme& scheme);

/// Clock-state (F=4, m_F=0 -> F'=5) term alone: (5/36) phi0 N40 L(Delta_45).
double phase_shift_f4(double n40, const ProbeColor& color,
                      const ProbeGeometry& geom, const LevelScheme& scheme);

/// Photon-fraction-weighted sum of the two per-color phase shifts.
double two_color_phase(const ZeemanPopulations& pops, const ProbeColor& color_a,
                       const ProbeColor& color_b, const ProbeGeometry& geom,
                       const LevelScheme& scheme);

struct BalanceOptions {
    double window_lo_mhz = -500.0;
    double window_hi_mhz = -5.0;
    double hint_mhz = -135.0;   // pick the root nearest this detuning
    int scan_points = 600;
};

struct BalanceResult {
    double detuning_mhz = 0.0;        // solved color-B detuning
    double residual_phase = 0.0;      // two-color phase at the root, equal populations
    double residual_over_single = 0.0;  // residual / |color-A phase contribution|
    ProbeColor color_b;               // color B with the solved detuning
};

/// Solve for the color-B detuning (referenced to F=3 -> F'=2) that zeroes the
/// two-color phase for equal clock-state populations, by bracketing the sign
/// change on a scan grid and bisecting to machine precision. Throws
/// PhysicsError with a diagnostic scan when no sign change is found.
BalanceResult solve_balance(const ProbeColor& color_a, const LevelScheme& scheme,
                            const ProbeGeometry& geom, const BalanceOptions& opts = {});

/// Photon count P tau lambda / (h c).
double photons_from_power(double power_w, double duration_s, double wavelength_m);

}  // namespace clockprobe
