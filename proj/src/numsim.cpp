// Copyright 2026 The cpdd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cpdd/numsim.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>
#include <unsupported/Eigen/MatrixFunctions>

namespace cpdd::numsim {

namespace {

using Complex = std::complex<double>;

// Pauli string on n qubits given as one axis per site (qubit 0 is the leading factor).
Matrix pauli_string(const std::vector<PauliAxis>& axes) {
  Matrix out = Matrix::Identity(1, 1);
  for (PauliAxis a : axes) {
    out = kron(out, pauli_matrix(PhasedPauli(a)));
  }
  return out;
}

// All Pauli strings of weight 1 and 2, in a fixed order.
std::vector<Matrix> local_pauli_strings(int n) {
  std::vector<Matrix> strings;
  for (int i = 0; i < n; ++i) {
    for (PauliAxis a : kTransverseAxes) {
      std::vector<PauliAxis> axes(static_cast<std::size_t>(n), PauliAxis::I);
      axes[static_cast<std::size_t>(i)] = a;
      strings.push_back(pauli_string(axes));
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (PauliAxis a : kTransverseAxes) {
        for (PauliAxis b : kTransverseAxes) {
          std::vector<PauliAxis> axes(static_cast<std::size_t>(n), PauliAxis::I);
          axes[static_cast<std::size_t>(i)] = a;
          axes[static_cast<std::size_t>(j)] = b;
          strings.push_back(pauli_string(axes));
        }
      }
    }
  }
  return strings;
}

Matrix random_combination(const std::vector<Matrix>& strings, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix out = Matrix::Zero(strings.front().rows(), strings.front().cols());
  for (const auto& s : strings) {
    out += gauss(rng) * s;
  }
  return out;
}

Matrix system_embedded(const PhasedPauli& p, Eigen::Index bath_dim) {
  return kron(pauli_matrix(p), Matrix::Identity(bath_dim, bath_dim));
}

Matrix word_matrix(const symbolic::BathWord& word, const SpinBathModel& model) {
  Matrix out = Matrix::Identity(model.bath_dim(), model.bath_dim());
  for (auto s : word) {
    out = out * model.bath_operator(s);
  }
  return out;
}

// Frames U_{j-1}^dagger H0 U_{j-1} as matrices, one per free interval.
std::vector<Matrix> interval_frame_matrices(const PulseSequence& seq, const SpinBathModel& model) {
  std::vector<Matrix> frames;
  frames.reserve(seq.size());
  Matrix u = Matrix::Identity(2, 2);
  for (const auto& p : seq.pulses()) {
    const Matrix full = kron(u, Matrix::Identity(model.bath_dim(), model.bath_dim()));
    frames.push_back(full.adjoint() * model.h0 * full);
    u = pauli_matrix(p) * u;
  }
  return frames;
}

}  // namespace

const Matrix& SpinBathModel::bath_operator(symbolic::BathSymbol s) const {
  switch (s) {
    case symbolic::BathSymbol::Bx:
      return bx;
    case symbolic::BathSymbol::By:
      return by;
    case symbolic::BathSymbol::Bz:
      return bz;
    default:
      return hb;
  }
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Matrix pauli_matrix(const PhasedPauli& p) {
  Matrix m = Matrix::Zero(2, 2);
  const Complex i(0, 1);
  switch (p.axis) {
    case PauliAxis::I:
      m << 1, 0, 0, 1;
      break;
    case PauliAxis::X:
      m << 0, 1, 1, 0;
      break;
    case PauliAxis::Y:
      m << 0, -i, i, 0;
      break;
    case PauliAxis::Z:
      m << 1, 0, 0, -1;
      break;
  }
  static constexpr std::array<Complex, 4> kPhases = {Complex(1, 0), Complex(0, 1), Complex(-1, 0),
                                                     Complex(0, -1)};
  return kPhases[static_cast<std::size_t>(p.phase.power())] * m;
}

double operator_norm(const Matrix& m) {
  if (m.size() == 0) {
    return 0;
  }
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues()(0);
}

double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

SpinBathModel build_model(int n_bath, double coupling, double beta, std::uint64_t seed) {
  if (n_bath < 1 || n_bath > kMaxBathSpins) {
    throw std::invalid_argument("bath size must be between 1 and " + std::to_string(kMaxBathSpins) +
                                " spins, got " + std::to_string(n_bath));
  }
  if (!(coupling > 0) || !(beta >= 0)) {
    throw std::invalid_argument("coupling must be positive and beta non-negative");
  }
  SpinBathModel model;
  model.n_bath = n_bath;
  model.coupling = coupling;
  model.beta = beta;
  model.seed = seed;

  std::mt19937_64 rng(seed);
  const auto strings = local_pauli_strings(n_bath);
  model.bx = random_combination(strings, rng);
  model.by = random_combination(strings, rng);
  model.bz = random_combination(strings, rng);
  model.hb = random_combination(strings, rng);

  const double bmax =
      std::max({operator_norm(model.bx), operator_norm(model.by), operator_norm(model.bz)});
  model.bx *= coupling / bmax;
  model.by *= coupling / bmax;
  model.bz *= coupling / bmax;
  model.hb *= beta / operator_norm(model.hb);

  model.h0 = reassemble(model);

  Eigen::SelfAdjointEigenSolver<Matrix> eig(model.h0);
  if (eig.info() != Eigen::Success) {
    throw NumericError("eigendecomposition of H0 failed");
  }
  model.energies = eig.eigenvalues();
  model.eigenvectors = eig.eigenvectors();
  return model;
}

Matrix reassemble(const SpinBathModel& model) {
  return kron(pauli_matrix(PhasedPauli(PauliAxis::X)), model.bx) +
         kron(pauli_matrix(PhasedPauli(PauliAxis::Y)), model.by) +
         kron(pauli_matrix(PhasedPauli(PauliAxis::Z)), model.bz) +
         kron(Matrix::Identity(2, 2), model.hb);
}

Matrix free_propagator(const SpinBathModel& model, double tau_d) {
  if (!(tau_d > 0) || !std::isfinite(tau_d)) {
    throw std::invalid_argument("pulse interval must be positive and finite");
  }
  if (model.energies.size() != model.dim() || !model.energies.allFinite()) {
    throw NumericError("model has no valid spectral decomposition");
  }
  Eigen::VectorXcd phases(model.energies.size());
  for (Eigen::Index k = 0; k < phases.size(); ++k) {
    phases(k) = std::polar(1.0, -model.energies(k) * tau_d);
  }
  return model.eigenvectors * phases.asDiagonal() * model.eigenvectors.adjoint();
}

Propagator evolve(const PulseSequence& seq, const SpinBathModel& model, double tau_d) {
  const Matrix step = free_propagator(model, tau_d);
  const Eigen::Index d = model.bath_dim();
  Matrix u = Matrix::Identity(model.dim(), model.dim());
  for (const auto& p : seq.pulses()) {
    u = step * u;
    if (p.axis != PauliAxis::I || p.phase != Phase::one()) {
      u = system_embedded(p, d) * u;
    }
  }
  return {std::move(u), tau_d, seq};
}

double distance(const Matrix& u) {
  if (u.rows() != u.cols() || u.rows() % 2 != 0 || u.rows() == 0) {
    throw std::invalid_argument("distance needs a square operator of even dimension");
  }
  const Eigen::Index d = u.rows() / 2;
  const Matrix diff = u.topLeftCorner(d, d) - u.bottomRightCorner(d, d);
  const Matrix lower = u.bottomLeftCorner(d, d);
  const Matrix upper = u.topRightCorner(d, d);
  Matrix m =
      (diff.adjoint() * diff + 2.0 * lower.adjoint() * lower + 2.0 * upper.adjoint() * upper) / 4.0;
  m = (0.5 * (m + m.adjoint())).eval();
  Eigen::SelfAdjointEigenSolver<Matrix> eig(m, Eigen::EigenvaluesOnly);
  if (eig.info() != Eigen::Success) {
    throw NumericError("eigendecomposition in distance failed");
  }
  double sum = 0;
  for (Eigen::Index k = 0; k < d; ++k) {
    const double lam = std::clamp(eig.eigenvalues()(k), 0.0, 1.0);
    sum += lam / (1.0 + std::sqrt(1.0 - lam));
  }
  return std::clamp(std::sqrt(sum / static_cast<double>(d)), 0.0, 1.0);
}

std::vector<double> log_grid(double lo, double hi, int points) {
  if (!(lo > 0) || !(hi > lo) || points < 2) {
    throw std::invalid_argument("log grid needs 0 < lo < hi and at least 2 points");
  }
  std::vector<double> grid(static_cast<std::size_t>(points));
  const double a = std::log(lo);
  const double b = std::log(hi);
  for (int k = 0; k < points; ++k) {
    grid[static_cast<std::size_t>(k)] = std::exp(a + (b - a) * k / (points - 1));
  }
  grid.front() = lo;
  grid.back() = hi;
  return grid;
}

std::pair<double, double> fit_line_slope(std::span<const double> x, std::span<const double> y) {
  const auto n = static_cast<double>(x.size());
  double mx = 0;
  double my = 0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    mx += x[k];
    my += y[k];
  }
  mx /= n;
  my /= n;
  double sxx = 0;
  double sxy = 0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    sxx += (x[k] - mx) * (x[k] - mx);
    sxy += (x[k] - mx) * (y[k] - my);
  }
  const double slope = sxy / sxx;
  double ss = 0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    const double r = y[k] - (my + slope * (x[k] - mx));
    ss += r * r;
  }
  return {slope, std::sqrt(ss / n)};
}

SlopeEstimate estimate_order(const PulseSequence& seq, const SpinBathModel& model,
                             std::span<const double> grid) {
  if (grid.size() < 4) {
    throw std::invalid_argument("slope estimation needs at least 4 grid points");
  }
  for (std::size_t k = 0; k < grid.size(); ++k) {
    if (!(grid[k] > 0) || (k > 0 && !(grid[k] > grid[k - 1]))) {
      throw std::invalid_argument("slope grid must be positive and strictly increasing");
    }
  }
  SlopeEstimate est;
  est.grid.assign(grid.begin(), grid.end());
  est.distances.reserve(grid.size());
  std::vector<double> log_tau;
  std::vector<double> log_d;
  for (double tau : grid) {
    const double d = distance(evolve(seq, model, tau));
    est.distances.push_back(d);
    if (d > kDistanceFloor) {
      est.window.push_back(tau);
      log_tau.push_back(std::log(tau));
      log_d.push_back(std::log(d));
    }
  }
  if (log_tau.size() < 3) {
    throw NumericError("only " + std::to_string(log_tau.size()) +
                       " grid points lie above the distance floor; need 3");
  }
  std::tie(est.slope, est.residual) = fit_line_slope(log_tau, log_d);
  est.order_estimate = est.slope - 1.0;
  return est;
}

Matrix instantiate(const symbolic::SBOperator& op, const SpinBathModel& model, double tau_d) {
  const Eigen::Index d = model.bath_dim();
  Matrix out = Matrix::Zero(2 * d, 2 * d);
  for (PauliAxis mu : kAllAxes) {
    const auto& poly = op[mu];
    if (poly.empty()) {
      continue;
    }
    Matrix bath = Matrix::Zero(d, d);
    for (const auto& [mono, c] : poly.terms()) {
      const Complex coeff(boost::rational_cast<double>(c.re), boost::rational_cast<double>(c.im));
      bath += coeff * std::pow(tau_d, mono.grade) * word_matrix(mono.word, model);
    }
    out += kron(pauli_matrix(PhasedPauli(mu)), bath);
  }
  return out;
}

Matrix direct_average(const PulseSequence& seq, const SpinBathModel& model) {
  const Eigen::Index d = model.bath_dim();
  Matrix sum = Matrix::Zero(model.dim(), model.dim());
  Matrix u = Matrix::Identity(2, 2);
  for (const auto& p : seq.pulses()) {
    u = pauli_matrix(p) * u;
    const Matrix full = kron(u, Matrix::Identity(d, d));
    sum += full.adjoint() * model.h0 * full;
  }
  return sum / static_cast<double>(seq.size());
}

double numeric_check_h0(const PulseSequence& seq, const SpinBathModel& model) {
  using namespace symbolic;
  const SBOperator avg = avg_h0(toggling_frames(seq, h0_generic()));
  return max_abs(instantiate(avg, model) - direct_average(seq, model)) / max_abs(model.h0);
}

double numeric_check_h1(const PulseSequence& seq, const SpinBathModel& model, double tau_d) {
  using namespace symbolic;
  const SBOperator h1 = avg_h1(interval_frames(seq, h0_generic()));
  const auto frames = interval_frame_matrices(seq, model);
  Matrix sum = Matrix::Zero(model.dim(), model.dim());
  Matrix prefix = frames.front();
  for (std::size_t j = 1; j < frames.size(); ++j) {
    sum += frames[j] * prefix - prefix * frames[j];
    prefix += frames[j];
  }
  const double k = static_cast<double>(frames.size());
  const Matrix direct = Complex(0, -tau_d / (2 * k)) * sum;
  const double scale = std::max(max_abs(direct), tau_d * max_abs(model.h0) * max_abs(model.h0));
  return max_abs(instantiate(h1, model, tau_d) - direct) / scale;
}

Matrix magnus_log_oracle(const PulseSequence& seq, const SpinBathModel& model, double tau_d) {
  const double k = static_cast<double>(seq.size());
  const double tau_c = k * tau_d;
  if (!(operator_norm(model.h0) * tau_c < std::numbers::pi)) {
    throw NumericError("||H0|| K tau_d must stay below pi for the principal matrix logarithm");
  }
  const Propagator prop = evolve(seq, model, tau_d);
  const Matrix control = system_embedded(total_product(seq), model.bath_dim());
  const Matrix toggle = control.adjoint() * prop.u;

  Eigen::ComplexEigenSolver<Matrix> eig(toggle, false);
  for (Eigen::Index j = 0; j < eig.eigenvalues().size(); ++j) {
    if (std::abs(std::arg(eig.eigenvalues()(j))) >= std::numbers::pi - 1e-9) {
      throw NumericError("propagator eigenvalue on the logarithm branch cut");
    }
  }
  const Matrix effective = Complex(0, 1) * toggle.log() / tau_c;

  const Matrix h0bar =
      instantiate(symbolic::avg_h0(symbolic::interval_frames(seq, symbolic::h0_generic())), model);
  return (effective - h0bar) / tau_d;
}

}  // namespace cpdd::numsim
