#include "hashchain/hash.hpp"

#include <stdexcept>
#include <string>

#include "hashchain/error.hpp"

namespace hashchain {

HcParams HcParams::make(std::size_t q, unsigned alpha) {
  if (q < 1) throw Error(ErrorKind::invalid_parameters, "q must be at least 1");
  if (alpha < 1 || alpha > kMaxAlpha)
    throw Error(ErrorKind::invalid_parameters,
                "alpha must be in [1, " + std::to_string(kMaxAlpha) + "], got " + std::to_string(alpha));
  HcParams p;
  p.q = q;
  p.alpha = alpha;
  p.s = derive_shift(alpha, q);
  p.mask = (std::size_t{1} << alpha) - 1;
  p.w = kWordBits;
  return p;
}

bool HcParams::consistent() const noexcept {
  return q >= 1 && alpha >= 1 && alpha <= kMaxAlpha && s == alpha / q &&
         mask == (std::size_t{1} << alpha) - 1 && w >= 8 && (w & (w - 1)) == 0;
}

unsigned derive_shift(unsigned alpha, std::size_t q) {
  return static_cast<unsigned>(alpha / q);
}

std::size_t hash_qgram(ByteView bytes, std::size_t p, std::size_t q, unsigned s, std::size_t mask) {
  if (q == 0 || p + 1 < q || p >= bytes.size())
    throw std::out_of_range("hash_qgram: q-gram ending at " + std::to_string(p) + " with q=" +
                            std::to_string(q) + " is outside a buffer of " + std::to_string(bytes.size()));
  std::size_t v = 0;
  for (std::size_t i = 0; i < q; ++i) v = (v << s) + bytes[p - i];
  return v & mask;
}

}  // namespace hashchain
