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

#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "cpdd/pauli.hpp"
#include "cpdd/sequence.hpp"
#include "cpdd/symbolic.hpp"

namespace cpdd::numsim {

using Matrix = Eigen::MatrixXcd;

/// Numerical failures: eigensolver breakdown, too few usable points, branch cuts.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kMaxBathSpins = 6;
/// Distances at or below this are treated as double-precision noise.
inline constexpr double kDistanceFloor = 1e-12;

/// One qubit coupled to n_bath bath spins:
///   H0 = sigma_x (x) Bx + sigma_y (x) By + sigma_z (x) Bz + 1 (x) HB.
/// The system is the leading tensor factor. Immutable once built.
struct SpinBathModel {
  int n_bath = 0;
  double coupling = 0;  // J: max operator norm of Bx, By, Bz
  double beta = 0;      // operator norm of HB
  std::uint64_t seed = 0;

  Matrix bx, by, bz, hb;
  Matrix h0;

  // Spectral decomposition of h0, computed once at build time.
  Eigen::VectorXd energies;
  Matrix eigenvectors;

  Eigen::Index bath_dim() const { return hb.rows(); }
  Eigen::Index dim() const { return h0.rows(); }
  const Matrix& bath_operator(symbolic::BathSymbol s) const;
};

/// Random model with seeded Gaussian coefficients on all bath Pauli strings of
/// weight 1 and 2, rescaled so max_a ||B_a|| = coupling and ||HB|| = beta.
/// Throws std::invalid_argument unless 1 <= n_bath <= 6.
SpinBathModel build_model(int n_bath, double coupling, double beta, std::uint64_t seed);

/// sum_a sigma_a (x) B_a + 1 (x) HB, rebuilt from the stored constituents.
Matrix reassemble(const SpinBathModel& model);

Matrix kron(const Matrix& a, const Matrix& b);
/// 2x2 matrix of phase * sigma_axis.
Matrix pauli_matrix(const PhasedPauli& p);
double operator_norm(const Matrix& m);
double max_abs(const Matrix& m);

/// exp(-i H0 tau) from the stored spectrum.
Matrix free_propagator(const SpinBathModel& model, double tau_d);

struct Propagator {
  Matrix u;
  double tau_d = 0;
  PulseSequence seq;
};

/// U = (P_K (x) 1) e^{-i H0 tau} ... (P_1 (x) 1) e^{-i H0 tau}.
Propagator evolve(const PulseSequence& seq, const SpinBathModel& model, double tau_d);

/// D(U, 1_S) = sqrt(1 - ||Tr_S U||_Tr / d_H) for a unitary U on C^2 (x) H_B.
///
/// Evaluated through the positive matrix
///   M = 1 - G^dagger G,  G = (U00 + U11)/2,
/// which by unitarity equals (D^dagger D + 2 U10^dagger U10 + 2 U01^dagger U01)/4
/// with D = U00 - U11. Each singular value s of G satisfies 1 - s = lam/(1 + sqrt(1 - lam))
/// for the matching eigenvalue lam of M, so small distances are resolved well
/// below sqrt(machine epsilon). Throws std::invalid_argument for odd dimensions.
double distance(const Matrix& u);
inline double distance(const Propagator& p) { return distance(p.u); }

struct SlopeEstimate {
  std::vector<double> grid;
  std::vector<double> distances;
  /// Grid points that passed the floor filter and entered the fit.
  std::vector<double> window;
  double slope = 0;
  double order_estimate = 0;  // slope - 1
  double residual = 0;        // RMS of the log-log fit residuals
};

/// Least-squares slope of log D against log tau_d over the points with
/// D > kDistanceFloor. The grid must hold at least 4 strictly increasing
/// positive values; fewer than 3 usable points raises NumericError.
SlopeEstimate estimate_order(const PulseSequence& seq, const SpinBathModel& model,
                             std::span<const double> grid);

/// `points` log-spaced values from lo to hi inclusive.
std::vector<double> log_grid(double lo, double hi, int points);

/// Ordinary least-squares slope and RMS residual of y against x.
std::pair<double, double> fit_line_slope(std::span<const double> x, std::span<const double> y);

/// Substitutes the model's matrices for B0 (= HB), Bx, By, Bz and tau_d for the grade.
Matrix instantiate(const symbolic::SBOperator& op, const SpinBathModel& model, double tau_d = 0);

/// (1/K) sum_j U_j^dagger H0 U_j from explicit pulse matrices.
Matrix direct_average(const PulseSequence& seq, const SpinBathModel& model);

/// Max-norm gap between the instantiated symbolic H-bar^(0) and direct_average,
/// relative to max|H0|.
double numeric_check_h0(const PulseSequence& seq, const SpinBathModel& model);

/// Same bridge for H-bar^(1) at interval tau_d, both sides built from interval frames.
double numeric_check_h1(const PulseSequence& seq, const SpinBathModel& model, double tau_d);

/// (i log(U_toggle) / tau_c - H-bar^(0)) / tau_d, where U_toggle strips the net
/// control rotation from the evolved propagator. Requires ||H0|| K tau_d < pi
/// so the principal logarithm is valid; otherwise NumericError.
Matrix magnus_log_oracle(const PulseSequence& seq, const SpinBathModel& model, double tau_d);

}  // namespace cpdd::numsim
