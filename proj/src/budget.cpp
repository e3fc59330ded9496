#include "charp/budget.hpp"

#include <cstdlib>
#include <mutex>
#include <sstream>

#include "charp/errors.hpp"

namespace charp {

namespace {
std::mutex g_mu;
ResourceBudget g_current;
}  // namespace

ResourceBudget ResourceBudget::current() {
  std::lock_guard<std::mutex> lk(g_mu);
  return g_current;
}

void ResourceBudget::set_current(const ResourceBudget& b) {
  std::lock_guard<std::mutex> lk(g_mu);
  g_current = b;
}

ResourceBudget ResourceBudget::from_string(const std::string& text) {
  ResourceBudget b;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos)
      throw InvalidArgumentError("bad budget spec '" + item +
                                 "', expected key=value");
    std::string key = item.substr(0, eq);
    unsigned long long value = std::stoull(item.substr(eq + 1));
    if (key == "degree")
      b.max_degree = static_cast<std::uint32_t>(value);
    else if (key == "basis")
      b.max_basis_size = static_cast<std::size_t>(value);
    else if (key == "saturation")
      b.max_saturation_steps = static_cast<std::size_t>(value);
    else
      throw InvalidArgumentError("unknown budget key '" + key + "'");
  }
  return b;
}

ResourceBudget ResourceBudget::from_env() {
  const char* env = std::getenv("CHARP_RESOURCE_BUDGET");
  if (env == nullptr || *env == '\0') return ResourceBudget{};
  return from_string(env);
}

}  // namespace charp
