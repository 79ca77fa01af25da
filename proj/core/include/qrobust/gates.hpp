#pragma once

#include <array>
#include <complex>
#include <cstdint>

namespace qrob {

using cplx = std::complex<double>;

enum class GateKind : std::uint8_t { RZ, RY, RX, CNOT };

/// A single circuit operation. Rotations use wires[0]; CNOT uses
/// wires[0] as control and wires[1] as target. theta is ignored for CNOT.
struct GateOp {
    GateKind kind;
    std::array<int, 2> wires;
    double theta = 0.0;

    static GateOp rz(int wire, double theta) { return {GateKind::RZ, {wire, -1}, theta}; }
    static GateOp ry(int wire, double theta) { return {GateKind::RY, {wire, -1}, theta}; }
    static GateOp rx(int wire, double theta) { return {GateKind::RX, {wire, -1}, theta}; }
    static GateOp cnot(int control, int target) { return {GateKind::CNOT, {control, target}, 0.0}; }

    bool is_rotation() const { return kind != GateKind::CNOT; }
    /// Gate applying the inverse unitary (negated angle; CNOT is self-inverse).
    GateOp inverse() const { return {kind, wires, -theta}; }
};

/// 2x2 unitary of a rotation gate, row-major (u[0] u[1]; u[2] u[3]).
std::array<cplx, 4> rotation_matrix(GateKind kind, double theta);

/// Elementwise derivative of rotation_matrix with respect to theta.
std::array<cplx, 4> rotation_matrix_deriv(GateKind kind, double theta);

}  // namespace qrob
