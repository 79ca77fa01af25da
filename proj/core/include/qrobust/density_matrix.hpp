#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qrobust/gates.hpp"
#include "qrobust/statevector.hpp"

namespace qrob {

/// Mixed n-qubit state as a dense 2^n x 2^n matrix, row-major.
struct DensityMatrix {
    int n_qubits = 0;
    std::vector<cplx> matrix;

    DensityMatrix() = default;
    /// |00...0><00...0| on n qubits.
    explicit DensityMatrix(int n);
    /// |psi><psi| of a pure state.
    static DensityMatrix from_pure(const StateVector& psi);

    std::size_t dim() const { return std::size_t{1} << n_qubits; }
    cplx& at(std::size_t row, std::size_t col) { return matrix[row * dim() + col]; }
    const cplx& at(std::size_t row, std::size_t col) const { return matrix[row * dim() + col]; }

    double trace_real() const;
    /// max |rho - rho^dagger| entry, for invariant checks.
    double hermiticity_defect() const;
};

/// rho <- U rho U^dagger for the gate's unitary.
void apply_gate_dm(DensityMatrix& rho, const GateOp& g);

/// Marginal outcome probabilities over the listed wires (diagonal of the
/// partial trace). Same wire-to-bit convention as the statevector overload.
std::vector<double> measure_probs(const DensityMatrix& rho, std::span<const int> wires);

}  // namespace qrob
