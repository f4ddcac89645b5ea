#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace qsvr {

enum class GateKind { RY, RZ, CRZ };

// One parametrized rotation gate. CRZ carries a control qubit; RY/RZ do not.
struct Gate {
    GateKind kind = GateKind::RY;
    double angle = 0.0;  // radians
    int target = 0;
    int control = -1;  // valid (>= 0) iff kind == CRZ

    static Gate ry(double angle, int target) { return {GateKind::RY, angle, target, -1}; }
    static Gate rz(double angle, int target) { return {GateKind::RZ, angle, target, -1}; }
    static Gate crz(double angle, int control, int target) {
        return {GateKind::CRZ, angle, target, control};
    }

    bool operator==(const Gate&) const = default;
};

// An ordered gate list on a fixed register.
struct Circuit {
    int num_qubits = 0;
    std::vector<Gate> gates;

    bool operator==(const Circuit&) const = default;
};

// Dense complex amplitudes over the computational basis. Basis index
// convention: qubit 0 is the most significant bit, so for two qubits
// |00> = 0, |01> = 1, |10> = 2, |11> = 3.
struct StateVector {
    std::vector<std::complex<double>> amplitudes;

    int num_qubits() const;
    double norm() const;
};

// Throws std::invalid_argument when a gate's indices do not fit the register
// or a CRZ control collides with its target.
void validate_gate(const Gate& gate, int num_qubits);
void validate_circuit(const Circuit& circuit);

StateVector ground_state(int num_qubits);

StateVector apply_gate(const StateVector& state, const Gate& gate);

StateVector apply_circuit(const StateVector& state, const Circuit& circuit);

// Reversed gate order, negated angles.
Circuit adjoint(const Circuit& circuit);

double outcome_probability(const StateVector& state, std::size_t basis_index);

// Measurement counts per basis index from repeated sampling of |amplitude|^2.
// Identical (state, shots, seed) give identical counts.
std::vector<std::uint64_t> sample_outcomes(const StateVector& state, std::uint64_t shots,
                                           std::uint64_t seed);

}  // namespace qsvr
