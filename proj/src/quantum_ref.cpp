#include "eprb/quantum_ref.hpp"

#include <cmath>

namespace eprb {

QuantumPrediction predict(Experiment experiment, double alpha, double beta, double eta1, double eta2) {
  if (experiment == Experiment::kI) {
    return QuantumPrediction{0.5, 0.5, 0.0, 0.0, -std::cos(2.0 * (alpha - beta))};
  }
  const double c1 = std::cos(alpha - eta1);
  const double s2 = std::sin(beta - eta2);
  const double e1 = std::cos(2.0 * (alpha - eta1));
  const double e2 = std::cos(2.0 * (beta - eta2));
  return QuantumPrediction{c1 * c1, s2 * s2, e1, e2, e1 * e2};
}

double singlet_s_theta(double theta) { return 3.0 * std::cos(2.0 * theta) - std::cos(6.0 * theta); }

}  // namespace eprb
