#pragma once

#include <array>
#include <cmath>

#include "eprb/angle.hpp"

namespace eprb {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(Vec2, Vec2) = default;
};

inline double norm(Vec2 v) { return std::hypot(v.x, v.y); }

/// Internal state of a deterministic learning machine modelling one polarizer.
struct DlmState {
  Vec2 internal{1.0, 0.0};
  double learning = 0.999;

  static DlmState initial(double learning) { return DlmState{{1.0, 0.0}, learning}; }

  friend bool operator==(const DlmState&, const DlmState&) = default;
};

/// A candidate update. `delta` = +1 rescales the x coordinate by l, -1 the y
/// coordinate; `s` and `s_prime` pick the quadrant.
struct TrialVector {
  Vec2 vector;
  int delta = 1;
  int s = 1;
  int s_prime = 1;
};

/// The eight candidates, ordered lexicographically over (delta, s, s_prime)
/// with +1 before -1.
std::array<TrialVector, 8> trial_vectors(const DlmState& state);

struct StepResult {
  int channel = 1;
  DlmState state;
};

/// Moves the internal vector to the trial vector nearest `input` (first one in
/// enumeration order on ties) and reports channel = -delta of that trial.
///
/// With that mapping a fixed input (cos psi, sin psi) yields a mean channel of
/// cos 2 psi, i.e. Malus' law. Throws std::invalid_argument unless |input| = 1
/// within 1e-9.
StepResult step(const DlmState& state, Vec2 input);

/// Rotates the polarization into the polarizer frame, Y = (cos(xi - theta),
/// sin(xi - theta)), and steps.
StepResult polarizer_response(const DlmState& state, Angle polarization, Angle orientation);

/// A polarizer with fixed orientation owning its DLM state.
class Polarizer {
 public:
  Polarizer(Angle orientation, double learning)
      : orientation_(orientation), state_(DlmState::initial(learning)) {}

  int respond(Angle polarization) {
    StepResult r = polarizer_response(state_, polarization, orientation_);
    state_ = r.state;
    return r.channel;
  }

  /// Same as respond() for an input already rotated into the polarizer frame,
  /// (cos(xi - theta), sin(xi - theta)).
  int respond_relative(Vec2 input) {
    StepResult r = step(state_, input);
    state_ = r.state;
    return r.channel;
  }

  Angle orientation() const noexcept { return orientation_; }
  const DlmState& state() const noexcept { return state_; }

 private:
  Angle orientation_;
  DlmState state_;
};

}  // namespace eprb
