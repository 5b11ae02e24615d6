#include "charvar/freeword.hpp"

#include <sstream>

namespace charvar {

void FreeWord::reduce() {
  std::vector<FBlock> out;
  for (const FBlock& b : blocks_) {
    if (b.e == 0) continue;
    if (!out.empty() && out.back().g == b.g) {
      out.back().e += b.e;
      if (out.back().e == 0) out.pop_back();
    } else {
      out.push_back(b);
    }
  }
  blocks_ = std::move(out);
}

long FreeWord::length() const {
  long n = 0;
  for (const FBlock& b : blocks_) n += std::abs(b.e);
  return n;
}

FreeWord FreeWord::operator*(const FreeWord& o) const {
  std::vector<FBlock> bs = blocks_;
  bs.insert(bs.end(), o.blocks_.begin(), o.blocks_.end());
  return FreeWord(std::move(bs));
}

FreeWord FreeWord::inverse() const {
  std::vector<FBlock> bs;
  for (auto it = blocks_.rbegin(); it != blocks_.rend(); ++it) bs.push_back({it->g, -it->e});
  return FreeWord(std::move(bs));
}

FreeWord FreeWord::power(long k) const {
  FreeWord base = k < 0 ? inverse() : *this;
  if (k < 0) k = -k;
  FreeWord r;
  for (long i = 0; i < k; ++i) r = r * base;
  return r;
}

std::string FreeWord::str() const {
  if (blocks_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const FBlock& b : blocks_) {
    if (!first) os << "*";
    first = false;
    os << (b.g == 0 ? "a" : "b");
    if (b.e != 1) os << "^" << b.e;
  }
  return os.str();
}

FreeWord apply_twist_generator(Gen g, long e, const FreeWord& u) {
  // alpha^e: a -> a, b -> b a^e ; beta^e: a -> a b^-e, b -> b
  std::vector<FBlock> out;
  for (const FBlock& blk : u.blocks()) {
    bool image_trivial = (g == Gen::Alpha && blk.g == 0) || (g == Gen::Beta && blk.g == 1);
    if (image_trivial) {
      out.push_back(blk);
      continue;
    }
    // image of the base letter is a two-letter word w1 w2
    FBlock w1, w2;
    if (g == Gen::Alpha) {
      w1 = {1, 1};   // b
      w2 = {0, e};   // a^e
    } else {
      w1 = {0, 1};   // a
      w2 = {1, -e};  // b^-e
    }
    long n = std::abs(blk.e);
    if (blk.e > 0) {
      for (long i = 0; i < n; ++i) {
        out.push_back(w1);
        out.push_back(w2);
      }
    } else {
      for (long i = 0; i < n; ++i) {
        out.push_back({w2.g, -w2.e});
        out.push_back({w1.g, -w1.e});
      }
    }
  }
  return FreeWord(std::move(out));
}

FreeWord apply_involution(const FreeWord& u) {
  // a -> b a^-1 b^-1, b -> b a b^-1 a^-1 b^-1
  FreeWord out;
  const FreeWord ia = FreeWord({{1, 1}, {0, -1}, {1, -1}});
  const FreeWord ib = FreeWord({{1, 1}, {0, 1}, {1, -1}, {0, -1}, {1, -1}});
  for (const FBlock& blk : u.blocks()) {
    if (blk.g == 0) {
      // conjugate of a power: b a^-e b^-1
      out = out * FreeWord({{1, 1}, {0, -blk.e}, {1, -1}});
    } else {
      out = out * ib.power(blk.e);
    }
  }
  return out;
}

FreeWord apply_twist(const TwistWord& w, const FreeWord& u) {
  // w = g1 g2 ... gk acts as the composition g1 o g2 o ... o gk
  FreeWord r = u;
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
    r = apply_twist_generator(it->g, it->e, r);
  if (w.iota()) r = apply_involution(r);
  return r;
}

}  // namespace charvar
