#pragma once

#include "eprb/sim_config.hpp"

namespace eprb {

/// Single- and two-particle expectation values predicted by quantum theory.
struct QuantumPrediction {
  double p_plus_1 = 0.5;   // P+(alpha) at station 1
  double p_minus_2 = 0.5;  // P-(beta) at station 2
  double e1 = 0.0;         // E1(alpha)
  double e2 = 0.0;         // E2(beta)
  double e12 = 0.0;        // E(alpha, beta)
};

/// Experiment I (singlet): (1/2, 1/2, 0, 0, -cos 2(alpha - beta)).
/// Experiment II (product state with polarizer angles eta1, eta2):
/// (cos^2(alpha - eta1), sin^2(beta - eta2), cos 2(alpha - eta1),
///  cos 2(beta - eta2), e1 * e2). eta1/eta2 are ignored for Experiment I.
QuantumPrediction predict(Experiment experiment, double alpha, double beta, double eta1 = 0.0,
                          double eta2 = 0.0);

/// 3 cos 2 theta - cos 6 theta.
double singlet_s_theta(double theta);

struct ChshBounds {
  double bell = 2.0;
  double tsirelson = 2.8284271247461903;
  double algebraic = 4.0;
};

constexpr ChshBounds bounds() { return ChshBounds{}; }

}  // namespace eprb
