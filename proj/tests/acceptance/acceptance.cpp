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

// Runs every acceptance criterion at its stated tolerance and prints one
// PASS/FAIL line per criterion. Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "../generators.hpp"
#include "cpdd/commands.hpp"
#include "cpdd/dsl.hpp"
#include "cpdd/numsim.hpp"
#include "cpdd/sequence.hpp"
#include "cpdd/symbolic.hpp"

namespace {

using namespace cpdd;
using cpdd::testing::Rng;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

Outcome catalog_fidelity() {
  const auto start = Clock::now();
  const auto c = cli::cmd_catalog();
  std::map<std::string, std::pair<std::uint64_t, int>> expected{
      {"Projection", {2, 0}}, {"PDD(CDD_1)", {4, 1}}, {"GA8_a", {8, 2}}};
  for (int l = 1; l <= 4; ++l) {
    expected["CDD_" + std::to_string(l)] = {std::uint64_t{1} << (2 * l), l};
  }
  for (int l = 1; l <= 3; ++l) {
    expected["GA8_" + std::to_string(l)] = {std::uint64_t{1} << (3 * l), 2 * l};
  }
  std::size_t matched = 0;
  std::string bad;
  for (const auto& row : c["schemes"]) {
    const auto it = expected.find(row["name"].get<std::string>());
    if (it == expected.end()) {
      continue;
    }
    if (row["K"].get<std::uint64_t>() == it->second.first &&
        row["N"].get<int>() == it->second.second) {
      ++matched;
    } else {
      bad += " " + it->first;
    }
  }
  const double t = seconds_since(start);
  return {matched == expected.size() && bad.empty() && t < 1.0,
          std::to_string(matched) + "/" + std::to_string(expected.size()) + " rows exact" +
              (bad.empty() ? "" : ", mismatched:" + bad) + ", " + fmt("%.3f s", t)};
}

Outcome kmin_series() {
  const auto start = Clock::now();
  const std::uint64_t series[] = {4, 8, 32, 64, 256};
  bool ok = true;
  std::string got;
  for (int n = 1; n <= 5; ++n) {
    got += (n > 1 ? "," : "") + std::to_string(k_min(n));
    ok = ok && k_min(n) == series[n - 1];
  }
  // Exhaustive: the smallest projection count over all classes reaching order N.
  for (int n = 1; n <= 6; ++n) {
    int fewest = -1;
    for (int total = 0; fewest < 0; ++total) {
      for (int x = 0; x <= total && fewest < 0; ++x) {
        for (int y = 0; x + y <= total; ++y) {
          if (CpddClass{x, y, total - x - y}.suppression_order() >= n) {
            fewest = total;
            break;
          }
        }
      }
    }
    ok = ok && k_min(n) == (std::uint64_t{1} << fewest);
  }
  const double t = seconds_since(start);
  return {ok && t < 1.0, "k_min(1..5) = " + got + ", minimal for N <= 6, " + fmt("%.3f s", t)};
}

Outcome worked_examples() {
  const std::string a = dsl::print(dsl::elaborate("px[py]"));
  const std::string b = dsl::print(dsl::elaborate("px[py[pz]]"));
  return {a == "ZYZY" && b == "IZXZIZXZ", "px[py] -> " + a + ", px[py[pz]] -> " + b};
}

Outcome projection_average() {
  using namespace symbolic;
  int ok = 0;
  for (PauliAxis j : kTransverseAxes) {
    SBOperator expected;
    expected[PauliAxis::I] = BathPoly::symbol(BathSymbol::B0);
    expected[j] = BathPoly::symbol(coupled_symbol(j));
    ok += avg_h0(toggling_frames(projection(j), h0_generic())) == expected ? 1 : 0;
  }
  return {ok == 3, std::to_string(ok) + "/3 projections give 1⊗B0 + σ_j⊗B_j exactly"};
}

Outcome lemma1() {
  const auto start = Clock::now();
  Rng rng(20261018);
  int ok = 0;
  int total = 0;
  for (int t = 0; t < 30; ++t) {
    const auto inner = cpdd::testing::random_provenance_sequence(rng, 1, 4);
    for (PauliAxis a : kTransverseAxes) {
      ++total;
      ok += symbolic::verify_concatenation_lemma(projection(a), inner) ? 1 : 0;
    }
  }
  const double t = seconds_since(start);
  return {ok == total && t < 10.0,
          std::to_string(ok) + "/" + std::to_string(total) + " exact, " + fmt("%.3f s", t)};
}

Outcome numeric_bridge() {
  const auto model = numsim::build_model(3, 1.0, 1.0, 42);
  Rng rng(7);
  double worst = 0;
  for (int t = 0; t < 20; ++t) {
    const auto seq = t % 2 == 0 ? cpdd::testing::random_pulses(rng, 1, 16)
                                : cpdd::testing::random_provenance_sequence(rng, 1, 5);
    worst = std::max(worst, numsim::numeric_check_h0(seq, model));
  }
  return {worst <= 1e-12, "worst relative residual " + fmt("%.2e", worst) + " over 20 sequences"};
}

Outcome magnus_oracle() {
  using namespace symbolic;
  using Complex = std::complex<double>;
  const auto model = numsim::build_model(3, 1.0, 1.0, 42);
  const auto zz = PulseSequence::from_written_order("ZZ");
  const SBOperator h1 = avg_h1(interval_frames(zz, h0_generic()));
  const double tau = 1e-3 / model.coupling;

  const numsim::Matrix oracle = numsim::magnus_log_oracle(zz, model, tau) * tau;
  const numsim::Matrix predicted = numsim::instantiate(h1, model, tau);

  // Convention factor: least-squares scalar, snapped to the nearest simple value.
  const Complex fitted =
      (predicted.adjoint() * oracle).trace() / (predicted.adjoint() * predicted).trace();
  const Complex candidates[] = {{1, 0}, {-1, 0}, {0, 1},   {0, -1},
                                {2, 0}, {-2, 0}, {0.5, 0}, {-0.5, 0}};
  Complex factor = candidates[0];
  for (const auto& c : candidates) {
    if (std::abs(c - fitted) < std::abs(factor - fitted)) {
      factor = c;
    }
  }
  const numsim::Matrix fixed = factor * predicted;
  const double mismatch = numsim::max_abs(oracle - fixed) / numsim::max_abs(fixed);

  auto residual = [&](double t) {
    return numsim::max_abs(numsim::magnus_log_oracle(zz, model, t) * t -
                           factor * numsim::instantiate(h1, model, t));
  };
  const double ratio = residual(tau) / residual(tau / 2);
  const bool scaling = std::abs(ratio - 4.0) <= 0.4;

  // Informational: Richardson extrapolation removes the leading tau_d^2 contamination.
  const numsim::Matrix half = numsim::magnus_log_oracle(zz, model, tau / 2) * tau;
  const numsim::Matrix richardson = 2 * half - oracle;
  const double extrapolated = numsim::max_abs(richardson - fixed) / numsim::max_abs(fixed);

  std::ostringstream d;
  d << "factor (" << factor.real() << (factor.imag() < 0 ? "" : "+") << factor.imag()
    << "i), fitted (" << fmt("%.6f", fitted.real()) << fmt("%+.1e", fitted.imag())
    << "i); relative mismatch " << fmt("%.2e", mismatch)
    << " (tolerance 1e-05); residual ratio under halving " << fmt("%.3f", ratio)
    << " (target 4 +/- 10%: " << (scaling ? "ok" : "off")
    << "); [info] Richardson-extrapolated mismatch " << fmt("%.2e", extrapolated);
  return {mismatch <= 1e-5 && scaling, d.str()};
}

Outcome slope_reproduction() {
  const auto start = Clock::now();
  const auto model = numsim::build_model(4, 1.0, 1.0, 42);
  const auto grid = numsim::log_grid(1e-3, 3e-2, 12);
  const double a = numsim::estimate_order(ga8a(), model, grid).order_estimate;
  const double b = numsim::estimate_order(ga8b(), model, grid).order_estimate;
  const double t = seconds_since(start);
  const bool ok = a >= 1.8 && a <= 2.4 && b >= 0.8 && b <= 1.4 && a - b >= 0.7 && t < 120;
  return {ok, "N_est(GA8_a) = " + fmt("%.4f", a) + ", N_est(GA8_b) = " + fmt("%.4f", b) + ", gap " +
                  fmt("%.4f", a - b) + ", " + fmt("%.2f s", t)};
}

Outcome class_equivalence() {
  const auto model = numsim::build_model(4, 1.0, 1.0, 42);
  const auto grid = numsim::log_grid(1e-3, 3e-2, 12);
  Rng rng(99);
  double worst = 0;
  std::string worst_pair;
  for (int t = 0; t < 10; ++t) {
    std::vector<PauliAxis> order;
    do {
      order = cpdd::testing::random_order(rng, 2, 4);
    } while (std::set<PauliAxis>(order.begin(), order.end()).size() < 2);
    std::vector<PauliAxis> other = order;
    do {
      std::shuffle(other.begin(), other.end(), rng);
    } while (other == order);
    const auto s1 = cpdd_from_order(order);
    const auto s2 = cpdd_from_order(other);
    const double gap = std::abs(numsim::estimate_order(s1, model, grid).order_estimate -
                                numsim::estimate_order(s2, model, grid).order_estimate);
    if (gap >= worst) {
      worst = gap;
      worst_pair = s1.cpdd_class()->str();
    }
  }
  return {worst <= 0.2,
          "10 pairs, worst |dN_est| = " + fmt("%.4f", worst) + " (class " + worst_pair + ")"};
}

Outcome structural() {
  Rng rng(2026);
  int failures = 0;
  for (int t = 0; t < 100; ++t) {
    const auto seq = cpdd::testing::random_provenance_sequence(rng, 1, 8);
    failures += check_odd_sites(seq) && check_half_repeat(seq) ? 0 : 1;
  }
  int cyclic_failures = 0;
  for (int t = 0; t < 100; ++t) {
    const auto a = cpdd::testing::random_cyclic(rng, 1, 8);
    const auto b = cpdd::testing::random_cyclic(rng, 1, 8);
    cyclic_failures += is_cyclic(concat(a, b)) ? 0 : 1;
  }
  return {failures == 0 && cyclic_failures == 0,
          std::to_string(failures) + " structural failures in 100 sequences, " +
              std::to_string(cyclic_failures) + " cyclicity failures in 100 pairs"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 catalog fidelity", catalog_fidelity},
      {"2 K_min series", kmin_series},
      {"3 worked-example sequences", worked_examples},
      {"4 projection zeroth-order average", projection_average},
      {"5 concatenation lemma", lemma1},
      {"6 numeric zeroth-order bridge", numeric_bridge},
      {"7 first-order Magnus oracle", magnus_oracle},
      {"8 GA8_a vs GA8_b slope reproduction", slope_reproduction},
      {"9 class-equivalence of extracted order", class_equivalence},
      {"10 structural properties", structural},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += o.pass ? 0 : 1;
    std::printf("[%s] criterion %s: %s\n", o.pass ? "PASS" : "FAIL", name.c_str(),
                o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
