#pragma once
// Shared world for the unit tests, loaded from the cache built by the
// fixture (E6F4_CACHE), or built in memory when that is unset.

#include <algorithm>
#include <cstdlib>
#include <vector>

#include "e6/suites.hpp"

namespace e6::test {

inline World& world() {
  static World w([] {
    Options o;
    if (const char* c = std::getenv("E6F4_CACHE")) o.cache_dir = c;
    return o;
  }());
  return w;
}

template <class C, class T>
bool has(const C& sorted, const T& x) {
  return std::binary_search(sorted.begin(), sorted.end(), x);
}

}  // namespace e6::test
