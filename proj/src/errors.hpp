#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lvx {

enum class errc {
  invalid_input = 1,
  out_of_domain = 2,
  solver_failure = 3,
  non_convergence = 4,
  consistency = 5,
  diagnostic = 6,
  io = 7,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
 public:
  error(errc code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

// Inner linear solve failed to reach its residual contract.
class solver_error : public error {
 public:
  solver_error(std::string message, double residual, int iterations)
      : error(errc::solver_failure, std::move(message)),
        residual_(residual),
        iterations_(iterations) {}
  double residual() const { return residual_; }
  int iterations() const { return iterations_; }

 private:
  double residual_;
  int iterations_;
};

// Outer fixed-point loop ran out of iterations; carries the sup-difference
// trace so callers can see whether it was stalling or still contracting.
class convergence_error : public error {
 public:
  convergence_error(std::string message, std::vector<double> trace)
      : error(errc::non_convergence, std::move(message)),
        trace_(std::move(trace)) {}
  const std::vector<double>& trace() const { return trace_; }

 private:
  std::vector<double> trace_;
};

[[noreturn]] inline void throw_invalid(std::string message) {
  throw error(errc::invalid_input, std::move(message));
}

}  // namespace lvx
