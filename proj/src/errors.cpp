#include "errors.hpp"

namespace lvx {

const char* errc_name(errc c) {
  switch (c) {
    case errc::invalid_input: return "invalid_input";
    case errc::out_of_domain: return "out_of_domain";
    case errc::solver_failure: return "solver_failure";
    case errc::non_convergence: return "non_convergence";
    case errc::consistency: return "consistency";
    case errc::diagnostic: return "diagnostic";
    case errc::io: return "io";
  }
  return "unknown";
}

}  // namespace lvx
