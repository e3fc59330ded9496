#include "charp/field.hpp"

#include <set>

#include "charp/errors.hpp"

namespace charp {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

FieldDescriptor::FieldDescriptor(std::uint32_t p,
                                 std::vector<std::string> parameters)
    : p_(p), params_(std::move(parameters)) {
  if (!is_prime(p)) throw NotPrimeError(p);
  std::set<std::string> seen;
  for (const auto& name : params_) {
    if (name.empty())
      throw InvalidArgumentError("empty parameter name");
    if (!seen.insert(name).second)
      throw InvalidArgumentError("duplicate parameter name '" + name + "'");
  }
}

int FieldDescriptor::parameter_index(const std::string& name) const {
  for (std::size_t i = 0; i < params_.size(); ++i)
    if (params_[i] == name) return static_cast<int>(i);
  return -1;
}

std::string FieldDescriptor::to_string() const {
  std::string s = "F(" + std::to_string(p_);
  if (!params_.empty()) {
    s += ", [";
    for (std::size_t i = 0; i < params_.size(); ++i) {
      if (i) s += ",";
      s += params_[i];
    }
    s += "]";
  }
  s += ")";
  return s;
}

FieldPtr make_field(std::uint32_t p, std::vector<std::string> parameters) {
  return std::make_shared<const FieldDescriptor>(p, std::move(parameters));
}

std::uint32_t fp_add(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  std::uint64_t s = std::uint64_t(a) + b;
  return static_cast<std::uint32_t>(s >= p ? s - p : s);
}

std::uint32_t fp_sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return a >= b ? a - b : a + p - b;
}

std::uint32_t fp_mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>((std::uint64_t(a) * b) % p);
}

std::uint32_t fp_neg(std::uint32_t a, std::uint32_t p) {
  return a == 0 ? 0 : p - a;
}

std::uint32_t fp_pow(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
  std::uint64_t base = a % p, acc = 1 % p;
  while (e) {
    if (e & 1) acc = (acc * base) % p;
    base = (base * base) % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(acc);
}

std::uint32_t fp_inverse(std::uint32_t a, std::uint32_t p) {
  a %= p;
  if (a == 0) throw ZeroInverseError();
  return fp_pow(a, p - 2, p);
}

std::uint32_t fp_from_ll(long long v, std::uint32_t p) {
  long long r = v % static_cast<long long>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

}  // namespace charp
