#pragma once

#include <string>
#include <vector>

#include "charvar/monodromy.hpp"

namespace charvar {

// Reduced word in the free group <a, b>, stored as blocks g^e with nonzero
// exponents and adjacent blocks on different generators.
struct FBlock {
  uint8_t g;  // 0 = a, 1 = b
  long e;
  bool operator==(const FBlock&) const = default;
  auto operator<=>(const FBlock&) const = default;
};

class FreeWord {
 public:
  FreeWord() = default;
  explicit FreeWord(std::vector<FBlock> blocks) : blocks_(std::move(blocks)) { reduce(); }

  static FreeWord gen(int g, long e = 1) {
    return e == 0 ? FreeWord() : FreeWord({FBlock{static_cast<uint8_t>(g), e}});
  }

  const std::vector<FBlock>& blocks() const { return blocks_; }
  bool empty() const { return blocks_.empty(); }
  long length() const;

  FreeWord operator*(const FreeWord& o) const;
  FreeWord inverse() const;
  FreeWord power(long k) const;
  FreeWord conjugated(const FreeWord& g) const { return g * *this * g.inverse(); }

  bool operator==(const FreeWord&) const = default;
  auto operator<=>(const FreeWord&) const = default;

  std::string str() const;  // e.g. "a^2*b^-1"

 private:
  void reduce();
  std::vector<FBlock> blocks_;
};

// image of u under the automorphism given by a twist word (and the involution)
FreeWord apply_twist(const TwistWord& w, const FreeWord& u);
FreeWord apply_twist_generator(Gen g, long e, const FreeWord& u);
FreeWord apply_involution(const FreeWord& u);

}  // namespace charvar
