#include "qsvr/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qsvr/rng.hpp"

namespace qsvr {

namespace {

constexpr int kMaxQubits = 24;  // dense amplitudes; 2^24 complex doubles = 256 MiB

// Bit position of qubit q under the q0-most-significant convention.
inline int bit_of(int qubit, int num_qubits) { return num_qubits - 1 - qubit; }

}  // namespace

int StateVector::num_qubits() const {
    int n = 0;
    while ((std::size_t{1} << n) < amplitudes.size()) ++n;
    return n;
}

double StateVector::norm() const {
    double s = 0.0;
    for (const auto& a : amplitudes) s += std::norm(a);
    return std::sqrt(s);
}

void validate_gate(const Gate& gate, int num_qubits) {
    if (gate.target < 0 || gate.target >= num_qubits)
        throw std::invalid_argument("gate target qubit out of range");
    if (gate.kind == GateKind::CRZ) {
        if (gate.control < 0 || gate.control >= num_qubits)
            throw std::invalid_argument("gate control qubit out of range");
        if (gate.control == gate.target)
            throw std::invalid_argument("gate control equals target");
    } else if (gate.control >= 0) {
        throw std::invalid_argument("control qubit set on a non-controlled gate");
    }
}

void validate_circuit(const Circuit& circuit) {
    if (circuit.num_qubits < 1) throw std::invalid_argument("circuit needs at least one qubit");
    if (circuit.num_qubits > kMaxQubits)
        throw std::invalid_argument("circuit exceeds the dense simulator qubit limit");
    for (const Gate& g : circuit.gates) validate_gate(g, circuit.num_qubits);
}

StateVector ground_state(int num_qubits) {
    if (num_qubits < 1) throw std::invalid_argument("ground_state: num_qubits must be >= 1");
    if (num_qubits > kMaxQubits)
        throw std::invalid_argument("ground_state: exceeds the dense simulator qubit limit");
    StateVector s;
    s.amplitudes.assign(std::size_t{1} << num_qubits, {0.0, 0.0});
    s.amplitudes[0] = {1.0, 0.0};
    return s;
}

StateVector apply_gate(const StateVector& state, const Gate& gate) {
    const int n = state.num_qubits();
    if (state.amplitudes.size() != (std::size_t{1} << n))
        throw std::invalid_argument("apply_gate: amplitude length is not a power of two");
    validate_gate(gate, n);

    StateVector out = state;
    auto& amp = out.amplitudes;
    const std::size_t dim = amp.size();
    const std::size_t tmask = std::size_t{1} << bit_of(gate.target, n);

    switch (gate.kind) {
        case GateKind::RY: {
            const double c = std::cos(gate.angle / 2.0);
            const double s = std::sin(gate.angle / 2.0);
            for (std::size_t i = 0; i < dim; ++i) {
                if (i & tmask) continue;  // i has target bit 0; partner has it 1
                const std::size_t j = i | tmask;
                const auto a0 = amp[i];
                const auto a1 = amp[j];
                amp[i] = c * a0 - s * a1;
                amp[j] = s * a0 + c * a1;
            }
            break;
        }
        case GateKind::RZ: {
            const std::complex<double> ph0 = std::polar(1.0, -gate.angle / 2.0);
            const std::complex<double> ph1 = std::polar(1.0, gate.angle / 2.0);
            for (std::size_t i = 0; i < dim; ++i) amp[i] *= (i & tmask) ? ph1 : ph0;
            break;
        }
        case GateKind::CRZ: {
            const std::size_t cmask = std::size_t{1} << bit_of(gate.control, n);
            const std::complex<double> ph0 = std::polar(1.0, -gate.angle / 2.0);
            const std::complex<double> ph1 = std::polar(1.0, gate.angle / 2.0);
            for (std::size_t i = 0; i < dim; ++i) {
                if (!(i & cmask)) continue;
                amp[i] *= (i & tmask) ? ph1 : ph0;
            }
            break;
        }
    }
    return out;
}

StateVector apply_circuit(const StateVector& state, const Circuit& circuit) {
    validate_circuit(circuit);
    if (state.amplitudes.size() != (std::size_t{1} << circuit.num_qubits))
        throw std::invalid_argument("apply_circuit: state and circuit qubit counts differ");
    StateVector out = state;
    for (const Gate& g : circuit.gates) out = apply_gate(out, g);
    return out;
}

Circuit adjoint(const Circuit& circuit) {
    Circuit out;
    out.num_qubits = circuit.num_qubits;
    out.gates.reserve(circuit.gates.size());
    for (auto it = circuit.gates.rbegin(); it != circuit.gates.rend(); ++it) {
        Gate g = *it;
        g.angle = -g.angle;
        out.gates.push_back(g);
    }
    return out;
}

double outcome_probability(const StateVector& state, std::size_t basis_index) {
    if (basis_index >= state.amplitudes.size())
        throw std::invalid_argument("outcome_probability: basis index out of range");
    return std::norm(state.amplitudes[basis_index]);
}

std::vector<std::uint64_t> sample_outcomes(const StateVector& state, std::uint64_t shots,
                                           std::uint64_t seed) {
    if (shots == 0) throw std::invalid_argument("sample_outcomes: shots must be >= 1");
    const std::size_t dim = state.amplitudes.size();
    if (dim == 0) throw std::invalid_argument("sample_outcomes: empty state");

    std::vector<double> cdf(dim);
    double total = 0.0;
    std::size_t last_positive = 0;
    for (std::size_t i = 0; i < dim; ++i) {
        const double p = std::norm(state.amplitudes[i]);
        if (p > 0.0) last_positive = i;
        total += p;
        cdf[i] = total;
    }

    std::vector<std::uint64_t> counts(dim, 0);
    ShotRng rng(seed);
    for (std::uint64_t s = 0; s < shots; ++s) {
        // scale the draw by the achieved total so trailing zero-probability
        // indices can never be selected
        const double u = uniform01(rng) * total;
        auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        std::size_t idx = (it == cdf.end()) ? last_positive
                                            : static_cast<std::size_t>(it - cdf.begin());
        counts[std::min(idx, last_positive)]++;
    }
    return counts;
}

}  // namespace qsvr
