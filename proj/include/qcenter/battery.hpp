#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "qcenter/builders.hpp"
#include "qcenter/hopf.hpp"

namespace qcenter {

inline constexpr double classical_time_limit_s = 60.0;
inline constexpr double kac_paljutkin_time_limit_s = 120.0;
inline constexpr size_t coideal_samples = 10;

struct Fixture {
  std::string name;
  std::shared_ptr<const QGRealization> realization;
};

/// F(G) and C[G] for Z4, Z2xZ2, S3, D4, Q8, then Kac-Paljutkin.
std::vector<Fixture> standard_fixtures();

/// alpha_L(rho_s) against sum_t delta_t (x) rho_{t^-1 s t}, with rho built from the table.
bool alpha_left_matches_conjugation(const QGRealization& f_of_g, const GroupTable& g, size_t s);

/// Delta(b) = W(b (x) 1)W^* on every basis element of pi(A), and the pentagon.
bool realization_structurally_valid(const QGRealization& r);

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  double seconds = 0;
  std::string detail;
};
std::string format_result(const CriterionResult& c);

struct BatteryOptions {
  uint64_t seed = 1;
  /// Called as soon as each criterion finishes.
  std::function<void(const CriterionResult&)> on_result;
};

std::vector<CriterionResult> run_battery(const BatteryOptions& opts);

}  // namespace qcenter
