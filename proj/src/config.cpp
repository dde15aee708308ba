#include "rigidity/config.hpp"

#include <cstdlib>
#include <stdexcept>

namespace rigidity {

namespace {

int initial_cap() {
  if (const char *env = std::getenv("RIGIDITY_CAP")) {
    int v = std::atoi(env);
    if (v >= 1)
      return v;
  }
  return 64;
}

int &cap_ref() {
  static int cap = initial_cap();
  return cap;
}

} // namespace

int universe_cap() { return cap_ref(); }

void set_universe_cap(int cap) {
  if (cap < 1)
    throw std::invalid_argument("universe cap must be >= 1");
  cap_ref() = cap;
}

} // namespace rigidity
