#pragma once

#include <span>
#include <vector>

#include "qrobust/density_matrix.hpp"

namespace qrob {

/// A quantum channel given by Kraus operators K_i (each 2^arity x 2^arity,
/// row-major), with sum_i K_i^dagger K_i = I.
struct KrausChannel {
    int arity = 1;
    std::vector<std::vector<cplx>> operators;

    /// max |sum K_i^dagger K_i - I| entry.
    double completeness_defect() const;
};

enum class NoiseKind { per_qubit, global };

/// Sentinel position meaning "after the last layer, before measurement".
inline constexpr int kBeforeMeasurement = -1;

/// One noise channel family inserted into a circuit: `kind` chooses between
/// single-qubit Kraus channels on every wire and the analytic whole-register
/// channel; `p` is the probability per channel instance; `positions` lists
/// the layer indices after which an instance acts (or kBeforeMeasurement).
struct NoiseSpec {
    NoiseKind kind = NoiseKind::per_qubit;
    double p = 0.0;
    std::vector<int> positions = {kBeforeMeasurement};
};

/// Single-qubit depolarizing channel:
/// {sqrt(1-p) I, sqrt(p/3) X, sqrt(p/3) Y, sqrt(p/3) Z}.
/// Throws std::domain_error for p outside [0, 1].
KrausChannel depolarizing_kraus(double p);

/// rho <- sum_i K_i rho K_i^dagger, embedded on the given wires.
/// Throws std::invalid_argument on arity/wire mismatch or an incomplete channel.
void apply_kraus(DensityMatrix& rho, const KrausChannel& ch, std::span<const int> wires);

/// rho <- (1-p) rho + p I/2^n, evaluated analytically.
void apply_global_depolarizing(DensityMatrix& rho, double p);

/// p = 1 - prod_i (1 - p_i). Empty list composes to 0.
/// Throws std::domain_error if any p_i is outside [0, 1].
double compose_noise_probability(std::span<const double> p_list);

}  // namespace qrob
