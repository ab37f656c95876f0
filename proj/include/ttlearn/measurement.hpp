#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "ttlearn/rng.hpp"
#include "ttlearn/tt.hpp"

namespace ttlearn {

// Bloch-sphere rotation by `angle` around the unit vector `axis`:
// R = cos(angle/2) I - i sin(angle/2) (axis . sigma).
struct RotationParams {
  std::array<double, 3> axis;
  double angle;
};

// 2x2 unitary, row-major.
using Gate = std::array<cplx, 4>;

Gate rotation_gate(const RotationParams& p);

struct RandomRotation {
  RotationParams params;
  Gate gate;
};

// Axis uniform on the sphere (z-cosine uniform, azimuth uniform), angle
// uniform on [0, 2pi).
RandomRotation random_rotation(Rng& rng);

// One factorized projective measurement E = (x)_k |psi_k><psi_k|, stored as
// the N single-qubit state vectors. `probability` is NaN until the dataset
// generator fills in the acceptance probability.
struct MeasurementRecord {
  std::vector<std::array<cplx, 2>> qubit_states;
  double probability = std::numeric_limits<double>::quiet_NaN();

  std::size_t n_qubits() const { return qubit_states.size(); }
};

MeasurementRecord random_measurement(std::size_t n_qubits, Rng& rng);

// The measurement's pure state as a rank-1 MPS.
Mps measurement_state(const MeasurementRecord& m);

// Random mixed state L L^dag / Tr(L L^dag) with L drawn core-wise from
// standard normal real and imaginary parts; interior ranks chi_s, so the
// output density operator has interior ranks chi_s^2 and unit trace.
Mpo random_density_mpo(std::size_t n_qubits, std::size_t chi_s, Rng& rng);

// Tr(E rho) = <psi|rho|psi>. Throws numeric_error when the value has an
// imaginary part or sits outside [0, 1] by more than 1e-10; smaller
// violations are clamped away.
double exact_probability(const Mpo& rho, const MeasurementRecord& m);

struct DatasetMeta {
  std::size_t n_qubits = 0;
  std::size_t chi_s = 0;  // provenance of the measured state; 0 when unknown
  std::uint64_t seed = 0;
  std::string generator;
};

struct Dataset {
  DatasetMeta meta;
  std::vector<MeasurementRecord> records;

  std::size_t size() const { return records.size(); }
};

// m_size independent measurements of rho with exact probabilities. Record k
// uses the substream derive_seed(seed, k), so records do not depend on
// evaluation order.
Dataset generate_dataset(const Mpo& rho, std::size_t m_size,
                         std::uint64_t seed, std::size_t chi_s_meta = 0);

}  // namespace ttlearn
