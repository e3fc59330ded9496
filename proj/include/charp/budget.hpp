#ifndef CHARP_BUDGET_HPP
#define CHARP_BUDGET_HPP

#include <cstdint>
#include <string>

namespace charp {

// Degree/size guards for the Groebner engine. Bracket powers inflate degrees
// quickly (q = 16 on a degree-15 generator already reaches 240), so
// computations fail loudly with ResourceLimitError instead of hanging.
struct ResourceBudget {
  std::size_t max_basis_size = 5000;
  std::uint32_t max_degree = 512;
  std::size_t max_saturation_steps = 128;

  // Process-wide default. Set once at startup (the CLI honors the
  // CHARP_RESOURCE_BUDGET environment variable) before spawning workers.
  static ResourceBudget current();
  static void set_current(const ResourceBudget& b);

  // Parses "degree=N,basis=M" (either key optional) on top of defaults.
  static ResourceBudget from_string(const std::string& text);
  static ResourceBudget from_env();
};

}  // namespace charp

#endif
