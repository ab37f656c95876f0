#include "ttlearn/measurement.hpp"

#include <cmath>
#include <string>

#include "ttlearn/numfmt.hpp"

namespace ttlearn {

Gate rotation_gate(const RotationParams& p) {
  const double c = std::cos(p.angle / 2.0);
  const double s = std::sin(p.angle / 2.0);
  const double nx = p.axis[0];
  const double ny = p.axis[1];
  const double nz = p.axis[2];
  // cos I - i sin (n . sigma)
  return Gate{cplx{c, -s * nz}, cplx{-s * ny, -s * nx},
              cplx{s * ny, -s * nx}, cplx{c, s * nz}};
}

RandomRotation random_rotation(Rng& rng) {
  const double z = rng.uniform(-1.0, 1.0);
  const double azimuth = rng.uniform(0.0, 2.0 * M_PI);
  const double angle = rng.uniform(0.0, 2.0 * M_PI);
  const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
  RotationParams p{{rho * std::cos(azimuth), rho * std::sin(azimuth), z},
                   angle};
  return RandomRotation{p, rotation_gate(p)};
}

MeasurementRecord random_measurement(std::size_t n_qubits, Rng& rng) {
  if (n_qubits == 0) {
    throw shape_error("random_measurement: need at least one qubit");
  }
  MeasurementRecord m;
  m.qubit_states.reserve(n_qubits);
  for (std::size_t k = 0; k < n_qubits; ++k) {
    const Gate u = random_rotation(rng).gate;
    // U |0> is the first column.
    m.qubit_states.push_back({u[0], u[2]});
  }
  return m;
}

Mps measurement_state(const MeasurementRecord& m) {
  return product_state(m.qubit_states);
}

Mpo random_density_mpo(std::size_t n_qubits, std::size_t chi_s, Rng& rng) {
  if (n_qubits == 0 || chi_s == 0) {
    throw shape_error("random_density_mpo: n_qubits and chi_s must be >= 1");
  }
  Mpo l;
  l.cores.reserve(n_qubits);
  for (std::size_t n = 0; n < n_qubits; ++n) {
    const std::size_t rl = (n == 0) ? 1 : chi_s;
    const std::size_t rr = (n + 1 == n_qubits) ? 1 : chi_s;
    DenseTensor c({rl, 2, 2, rr});
    for (std::size_t f = 0; f < c.size(); ++f) {
      const double re = rng.normal();
      const double im = rng.normal();
      c[f] = cplx{re, im};
    }
    l.cores.push_back(std::move(c));
  }
  Mpo rho = mpo_multiply(l, adjointed(l));
  const double trace = mpo_trace(rho).real();
  return scaled_geometric(rho, 1.0 / trace);
}

double exact_probability(const Mpo& rho, const MeasurementRecord& m) {
  const cplx v = sandwich(measurement_state(m), rho);
  if (std::abs(v.imag()) > 1e-10) {
    throw numeric_error("exact_probability: imaginary part " +
                        g17(v.imag()) + " exceeds 1e-10");
  }
  const double p = v.real();
  if (p < -1e-10 || p > 1.0 + 1e-10) {
    throw numeric_error("exact_probability: value " + g17(p) +
                        " outside [0, 1] beyond 1e-10");
  }
  return std::min(1.0, std::max(0.0, p));
}

Dataset generate_dataset(const Mpo& rho, std::size_t m_size,
                         std::uint64_t seed, std::size_t chi_s_meta) {
  rho.validate();
  if (m_size == 0) {
    throw shape_error("generate_dataset: m_size must be >= 1");
  }
  Dataset d;
  d.meta = DatasetMeta{rho.n_sites(), chi_s_meta, seed, Rng::kVersion};
  d.records.reserve(m_size);
  for (std::size_t k = 0; k < m_size; ++k) {
    Rng rec_rng(derive_seed(seed, k));
    MeasurementRecord rec = random_measurement(rho.n_sites(), rec_rng);
    rec.probability = exact_probability(rho, rec);
    d.records.push_back(std::move(rec));
  }
  return d;
}

}  // namespace ttlearn
