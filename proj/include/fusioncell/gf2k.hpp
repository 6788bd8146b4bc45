#pragma once

#include <cstdint>
#include <vector>

namespace fusioncell {

// GF(2^k) in the polynomial basis; elements are bit vectors < 2^k.
class GF2k {
 public:
  // modulus == 0 selects the default primitive polynomial for k (1 <= k <= 16).
  explicit GF2k(unsigned k, std::uint32_t modulus = 0);

  unsigned degree() const { return k_; }
  std::uint32_t modulus() const { return modulus_; }
  std::uint32_t size() const { return std::uint32_t{1} << k_; }

  static std::uint32_t add(std::uint32_t a, std::uint32_t b) { return a ^ b; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
  // Throws InvalidInput for zero.
  std::uint32_t inv(std::uint32_t a) const;

  static std::uint32_t default_modulus(unsigned k);

 private:
  std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b) const;

  unsigned k_;
  std::uint32_t modulus_;
  std::vector<std::uint8_t> table_;  // full product table for k <= 8
};

}  // namespace fusioncell
