#ifndef CHARP_FIELD_HPP
#define CHARP_FIELD_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace charp {

// Coefficient field F_p or F_p(u_1,...,u_m). Holds the characteristic and the
// ordered parameter names; parameter order is fixed at construction and is
// what fraction normalization is canonical against.
class FieldDescriptor {
public:
  explicit FieldDescriptor(std::uint32_t p,
                           std::vector<std::string> parameters = {});

  std::uint32_t characteristic() const { return p_; }
  const std::vector<std::string>& parameters() const { return params_; }
  std::size_t parameter_count() const { return params_.size(); }
  bool prime_field() const { return params_.empty(); }
  int parameter_index(const std::string& name) const;  // -1 if absent

  bool operator==(const FieldDescriptor& o) const {
    return p_ == o.p_ && params_ == o.params_;
  }
  bool operator!=(const FieldDescriptor& o) const { return !(*this == o); }

  std::string to_string() const;

private:
  std::uint32_t p_;
  std::vector<std::string> params_;
};

using FieldPtr = std::shared_ptr<const FieldDescriptor>;

FieldPtr make_field(std::uint32_t p, std::vector<std::string> parameters = {});

bool is_prime(std::uint64_t n);

// Arithmetic in F_p on canonical representatives [0, p).
std::uint32_t fp_add(std::uint32_t a, std::uint32_t b, std::uint32_t p);
std::uint32_t fp_sub(std::uint32_t a, std::uint32_t b, std::uint32_t p);
std::uint32_t fp_mul(std::uint32_t a, std::uint32_t b, std::uint32_t p);
std::uint32_t fp_neg(std::uint32_t a, std::uint32_t p);
// Throws ZeroInverseError on a = 0.
std::uint32_t fp_inverse(std::uint32_t a, std::uint32_t p);
std::uint32_t fp_pow(std::uint32_t a, std::uint64_t e, std::uint32_t p);
std::uint32_t fp_from_ll(long long v, std::uint32_t p);

}  // namespace charp

#endif
