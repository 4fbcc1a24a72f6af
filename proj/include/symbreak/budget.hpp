#pragma once

#include <cstdint>

namespace symbreak {

// Resource limits shared by every enumeration in the library.
struct Budget {
  int max_vertices = 64;
  std::uint64_t max_automorphisms = 10'000'000;
  std::uint64_t max_colorings = 10'000'000;
};

}  // namespace symbreak
