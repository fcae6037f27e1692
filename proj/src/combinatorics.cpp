#include "monsched/combinatorics.hpp"

#include <limits>

#include "monsched/errors.hpp"

namespace monsched {

std::uint64_t binomial(int n, int r) {
  if (r < 0 || n < 0 || r > n) return 0;
  if (r > n - r) r = n - r;
  unsigned __int128 acc = 1;
  for (int i = 1; i <= r; ++i) {
    acc = acc * static_cast<unsigned>(n - r + i) / static_cast<unsigned>(i);
    if (acc > std::numeric_limits<std::uint64_t>::max()) {
      return std::numeric_limits<std::uint64_t>::max();
    }
  }
  return static_cast<std::uint64_t>(acc);
}

std::uint64_t subset_rank(LabelMask mask) {
  std::uint64_t rank = 0;
  int i = 0;
  while (mask != 0) {
    const int c = __builtin_ctzll(mask);
    rank += binomial(c, i + 1);
    mask &= mask - 1;
    ++i;
  }
  return rank;
}

LabelMask subset_unrank(std::uint64_t rank, int k, int sigma) {
  if (rank >= binomial(k, sigma)) throw InputError("subset rank out of range");
  LabelMask mask = 0;
  int c = k - 1;
  for (int i = sigma; i >= 1; --i) {
    while (binomial(c, i) > rank) --c;
    rank -= binomial(c, i);
    mask |= LabelMask{1} << c;
    --c;
  }
  return mask;
}

LabelMask next_subset(LabelMask mask, int k) {
  if (mask == 0) return 0;
  const LabelMask c = mask & (~mask + 1);
  const LabelMask r = mask + c;
  if (r == 0) return 0;  // wrapped past bit 63
  const LabelMask next = (((r ^ mask) >> 2) / c) | r;
  if (k < 64 && (next >> k) != 0) return 0;
  return next;
}

std::vector<LabelMask> all_subsets(int k, int sigma) {
  std::vector<LabelMask> out;
  if (sigma == 0) return {0};
  for (LabelMask m = full_mask(sigma); m != 0; m = next_subset(m, k)) out.push_back(m);
  return out;
}

}  // namespace monsched
