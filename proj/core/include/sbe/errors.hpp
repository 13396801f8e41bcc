// Error taxonomy for the harness exit codes: configuration problems (exit 2)
// and numeric blow-up during time stepping (exit 3).
#pragma once

#include <stdexcept>
#include <string>

namespace sbe {

class ConfigError : public std::runtime_error {
  public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

class BlowUpError : public std::runtime_error {
  public:
    BlowUpError(double time, double norm)
        : std::runtime_error("numeric blow-up at t = " + std::to_string(time) +
                             " (H norm " + std::to_string(norm) + " > 1e6); "
                             "the step-size rule was likely bypassed"),
          time_(time),
          norm_(norm) {}
    double time() const { return time_; }
    double h_norm() const { return norm_; }

  private:
    double time_;
    double norm_;
};

}  // namespace sbe
