#include "critpoint/errors.hpp"

namespace critpoint {

int cli_exit_code(const std::exception& e) {
  if (dynamic_cast<const numerical_error*>(&e)) return 3;
  if (dynamic_cast<const parse_error*>(&e)) return 2;
  if (dynamic_cast<const std::invalid_argument*>(&e)) return 2;
  if (dynamic_cast<const std::domain_error*>(&e)) return 2;
  return 3;
}

}  // namespace critpoint
