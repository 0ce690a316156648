#ifndef BRAID_CHECK_HPP
#define BRAID_CHECK_HPP

#include <stdexcept>
#include <string>

// Internal invariant checks that stay active in release builds; a failure
// here is a bug, not a user error.
#define BRAID_CHECK(cond, msg)                                             \
  do {                                                                     \
    if (!(cond))                                                           \
      throw std::logic_error(std::string("internal invariant violated: ") + \
                             (msg) + " [" #cond "]");                      \
  } while (0)

#endif
