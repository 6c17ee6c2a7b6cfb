#include "hts/index_codec.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hts {

RadixSpec RadixSpec::uniform(std::int64_t radix, std::size_t num_levels,
                             bool leading) {
  RadixSpec spec;
  spec.levels.assign(num_levels, radix);
  spec.leading_factor = leading;
  return spec;
}

std::int64_t RadixSpec::block() const {
  std::int64_t prod = 1;
  for (std::int64_t radix : levels) {
    if (__builtin_mul_overflow(prod, radix, &prod))
      throw std::domain_error("RadixSpec::block: product exceeds 64-bit range");
  }
  return prod;
}

void RadixSpec::validate() const {
  if (levels.empty())
    throw std::invalid_argument("RadixSpec: at least one level is required");
  for (std::int64_t radix : levels) {
    if (radix < 2)
      throw std::invalid_argument("RadixSpec: radix " + std::to_string(radix) +
                                  " is invalid, every radix must be >= 2");
  }
}

void encode_into(std::int64_t n, const RadixSpec& spec, IndexTuple& out) {
  spec.validate();
  if (n < 0)
    throw std::domain_error("encode: n must be non-negative (negative k is "
                            "not supported)");
  out.n = n;
  out.digits.resize(spec.depth());
  std::int64_t rest = n;
  for (std::size_t i = spec.depth(); i-- > 0;) {
    const std::int64_t radix = spec.levels[i];
    out.digits[i] = rest % radix;
    rest /= radix;
  }
  if (spec.leading_factor) {
    out.k = rest;
  } else {
    out.k = 0;
    if (rest != 0)
      throw std::domain_error("encode: n = " + std::to_string(n) +
                              " does not fit a Fockian spec of block size " +
                              std::to_string(spec.block()));
  }
}

IndexTuple encode(std::int64_t n, const RadixSpec& spec) {
  IndexTuple t;
  encode_into(n, spec, t);
  return t;
}

std::int64_t decode(const IndexTuple& t, const RadixSpec& spec) {
  spec.validate();
  if (t.digits.size() != spec.depth())
    throw std::domain_error("decode: tuple has " +
                            std::to_string(t.digits.size()) +
                            " digits but the spec has " +
                            std::to_string(spec.depth()) + " levels");
  std::int64_t n = 0;
  if (spec.leading_factor) {
    if (t.k < 0)
      throw std::domain_error("decode: negative k is not supported");
    n = t.k;
  }
  for (std::size_t i = 0; i < spec.depth(); ++i) {
    const std::int64_t radix = spec.levels[i];
    const std::int64_t digit = t.digits[i];
    if (digit < 0 || digit >= radix)
      throw std::domain_error("decode: digit " + std::to_string(digit) +
                              " out of range for radix " +
                              std::to_string(radix));
    if (__builtin_mul_overflow(n, radix, &n) ||
        __builtin_add_overflow(n, digit, &n))
      throw std::domain_error("decode: index exceeds 64-bit range");
  }
  return n;
}

std::vector<std::int64_t> fockian_digits(std::int64_t n, std::int64_t radix) {
  if (radix < 2)
    throw std::invalid_argument("fockian_digits: radix must be >= 2");
  if (n < 0) throw std::domain_error("fockian_digits: n must be non-negative");
  std::vector<std::int64_t> digits;
  do {
    digits.push_back(n % radix);
    n /= radix;
  } while (n > 0);
  std::reverse(digits.begin(), digits.end());
  return digits;
}

std::pair<IndexTuple, RadixSpec> nest(const IndexTuple& t, const RadixSpec& spec,
                                      std::size_t extra_levels) {
  spec.validate();
  if (!spec.leading_factor)
    throw std::domain_error("nest: requires a modular spec (leading factor)");
  if (t.k < 0) throw std::domain_error("nest: negative k is not supported");

  const std::int64_t radix = spec.levels.front();
  RadixSpec expanded = spec;
  expanded.levels.insert(expanded.levels.begin(), extra_levels, radix);

  IndexTuple out;
  out.n = t.n;
  out.digits.resize(extra_levels + t.digits.size());
  std::copy(t.digits.begin(), t.digits.end(),
            out.digits.begin() + static_cast<std::ptrdiff_t>(extra_levels));
  std::int64_t rest = t.k;
  for (std::size_t i = extra_levels; i-- > 0;) {
    out.digits[i] = rest % radix;
    rest /= radix;
  }
  out.k = rest;
  return {out, expanded};
}

}  // namespace hts
