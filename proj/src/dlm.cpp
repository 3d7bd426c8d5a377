#include "eprb/dlm.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace eprb {

namespace {

struct Growth {
  double x;  // sqrt(1 - l^2 + l^2 x^2)
  double y;  // sqrt(1 - l^2 + l^2 y^2)
};

// Rescaling one coordinate by l and re-solving the other keeps the norm at 1.
Growth growth(const DlmState& state) {
  const double l2 = state.learning * state.learning;
  return {std::sqrt(1.0 - l2 + l2 * state.internal.x * state.internal.x),
          std::sqrt(1.0 - l2 + l2 * state.internal.y * state.internal.y)};
}

// Trial i in the order (delta, s, s') = (+,+,+), (+,+,-), ..., (-,-,-).
Vec2 trial(const DlmState& state, Growth g, int i) {
  const double s = (i & 2) ? -1.0 : 1.0;
  const double s_prime = (i & 1) ? -1.0 : 1.0;
  const double l = state.learning;
  if (i < 4) return {l * s_prime * state.internal.x, s * g.y};
  return {s * g.x, l * s_prime * state.internal.y};
}

}  // namespace

std::array<TrialVector, 8> trial_vectors(const DlmState& state) {
  const Growth g = growth(state);
  std::array<TrialVector, 8> out{};
  for (int i = 0; i < 8; ++i) {
    out[i] = TrialVector{trial(state, g, i), i < 4 ? 1 : -1, (i & 2) ? -1 : 1, (i & 1) ? -1 : 1};
  }
  return out;
}

StepResult step(const DlmState& state, Vec2 input) {
  // |norm^2 - 1| <= 2e-9 is |norm - 1| <= 1e-9 to first order.
  if (!(std::fabs(input.x * input.x + input.y * input.y - 1.0) <= 2e-9)) {
    throw std::invalid_argument("DLM input must be a unit vector");
  }
  const Growth g = growth(state);
  int best = 0;
  Vec2 best_vector{};
  double best_dist = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 8; ++i) {
    const Vec2 v = trial(state, g, i);
    const double dx = input.x - v.x;
    const double dy = input.y - v.y;
    const double dist = dx * dx + dy * dy;
    if (dist < best_dist) {
      best_dist = dist;
      best = i;
      best_vector = v;
    }
  }
  // The delta = -1 rules (i >= 4) map to channel +1.
  return StepResult{best < 4 ? -1 : 1, DlmState{best_vector, state.learning}};
}

StepResult polarizer_response(const DlmState& state, Angle polarization, Angle orientation) {
  const double rel = polarization.value() - orientation.value();
  return step(state, Vec2{std::cos(rel), std::sin(rel)});
}

}  // namespace eprb
