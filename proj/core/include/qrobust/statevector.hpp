#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qrobust/gates.hpp"

namespace qrob {

/// Pure n-qubit state as a dense amplitude vector of length 2^n.
/// Qubit 0 is the most significant bit of the basis-state index;
/// every module in this library shares that convention.
struct StateVector {
    int n_qubits = 0;
    std::vector<cplx> amplitudes;

    StateVector() = default;
    /// |00...0> on n qubits.
    explicit StateVector(int n);

    std::size_t dim() const { return std::size_t{1} << n_qubits; }
    double norm_sq() const;
};

/// Amplitude-encode a real feature vector: pad with zeros to the next
/// power of two and divide by the L2 norm. Throws DataError on an
/// all-zero input (the encoding is undefined there).
StateVector init_amplitude_state(std::span<const double> x);

/// Apply the gate's unitary in place. Throws std::out_of_range on bad wires.
void apply_gate(StateVector& state, const GateOp& g);

/// Marginal computational-basis probabilities over the listed wires,
/// tracing out everything else. wires[0] is the most significant bit of
/// the outcome index. Entries sum to 1 for a normalized state.
std::vector<double> measure_probs(const StateVector& state, std::span<const int> wires);

}  // namespace qrob
