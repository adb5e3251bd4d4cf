#pragma once

#include <stdexcept>

namespace gasket {

// CLI exit code 2
struct config_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// CLI exit code 3
struct numeric_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct degeneracy_error : numeric_error {
  using numeric_error::numeric_error;
};

// CLI exit code 4
struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace gasket
