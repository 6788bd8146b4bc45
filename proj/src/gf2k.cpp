#include "fusioncell/gf2k.hpp"

#include <array>
#include <bit>

#include "fusioncell/errors.hpp"

namespace fusioncell {

namespace {

constexpr std::array<std::uint32_t, 17> kPrimitive = {
    0,      0x3,    0x7,    0xB,    0x13,   0x25,   0x43,   0x89,   0x11D,
    0x211,  0x409,  0x805,  0x1053, 0x201B, 0x4443, 0x8003, 0x1100B,
};

}  // namespace

std::uint32_t GF2k::default_modulus(unsigned k) {
  if (k == 0 || k >= kPrimitive.size()) fail(ErrorKind::InvalidSpec, "GF(2^k) needs 1 <= k <= 16");
  return kPrimitive[k];
}

GF2k::GF2k(unsigned k, std::uint32_t modulus)
    : k_(k), modulus_(modulus == 0 ? default_modulus(k) : modulus) {
  if (k == 0 || k > 16) fail(ErrorKind::InvalidSpec, "GF(2^k) needs 1 <= k <= 16");
  if (std::bit_width(modulus_) != k + 1) {
    fail(ErrorKind::InvalidSpec, "field modulus must have degree k");
  }
  // Irreducible iff every nonzero element has an inverse; check a^(2^k-1) = 1.
  for (std::uint32_t a = 1; a < size(); ++a) {
    std::uint32_t r = 1;
    for (std::uint32_t i = 0; i + 1 < size(); ++i) r = slow_mul(r, a);
    if (r != 1) fail(ErrorKind::InvalidSpec, "field modulus is not irreducible");
    if (k > 8) break;  // spot check only for large fields
  }
  if (k <= 8) {
    table_.resize(std::size_t{size()} * size());
    for (std::uint32_t a = 0; a < size(); ++a)
      for (std::uint32_t b = 0; b < size(); ++b)
        table_[std::size_t{a} * size() + b] = static_cast<std::uint8_t>(slow_mul(a, b));
  }
}

std::uint32_t GF2k::slow_mul(std::uint32_t a, std::uint32_t b) const {
  std::uint32_t r = 0;
  const std::uint32_t top = std::uint32_t{1} << k_;
  while (b) {
    if (b & 1) r ^= a;
    b >>= 1;
    a <<= 1;
    if (a & top) a ^= modulus_;
  }
  return r;
}

std::uint32_t GF2k::mul(std::uint32_t a, std::uint32_t b) const {
  if (!table_.empty()) return table_[std::size_t{a} * size() + b];
  return slow_mul(a, b);
}

std::uint32_t GF2k::pow(std::uint32_t a, std::uint64_t e) const {
  std::uint32_t r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::uint32_t GF2k::inv(std::uint32_t a) const {
  if (a == 0) fail(ErrorKind::InvalidInput, "zero has no inverse");
  return pow(a, size() - 2);
}

}  // namespace fusioncell
