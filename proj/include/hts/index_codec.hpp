#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace hts {

/// Radix layout for the index bijection
///
///   n = k * prod(N_j)  +  sum_j l_j * (product of radices below position j)
///
/// Radices are stored outermost-first: levels[0] = N_{M-1}, ..., levels[M-1] = N_0,
/// so the uniform two-level case N=3, M=2 reads n = 9k + 3*l_1 + l_0.
/// With leading_factor the tuple carries an unbounded non-negative integer k in
/// front (modular form); without it the digits alone label the index and n must
/// fit inside prod(N_j) (Fockian form).
struct RadixSpec {
  std::vector<std::int64_t> levels;
  bool leading_factor = true;

  static RadixSpec uniform(std::int64_t radix, std::size_t num_levels,
                           bool leading = true);

  std::size_t depth() const { return levels.size(); }
  std::int64_t block() const;  // product of all radices

  /// Throws std::invalid_argument if any radix is < 2 or no level is present.
  void validate() const;
};

/// A non-negative integer together with its decomposition under some RadixSpec.
/// digits are most-significant-first: digits[0] = l_{M-1}, ..., digits[M-1] = l_0.
/// k is meaningful only when the spec has a leading factor.
struct IndexTuple {
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::vector<std::int64_t> digits;
};

IndexTuple encode(std::int64_t n, const RadixSpec& spec);

/// Allocation-free variant of encode for hot loops; reuses out.digits storage.
void encode_into(std::int64_t n, const RadixSpec& spec, IndexTuple& out);

/// Exact inverse of encode. Throws std::domain_error on digits out of range,
/// negative k, or 64-bit overflow.
std::int64_t decode(const IndexTuple& t, const RadixSpec& spec);

/// Minimal base-radix digit list of n, most significant digit first.
/// n = 0 yields {0} so every index has a representable label.
std::vector<std::int64_t> fockian_digits(std::int64_t n, std::int64_t radix);

/// Re-expands the leading factor k into extra_levels further (k', l') pairs,
/// using the spec's outermost radix for every new level. Existing digits are
/// untouched and decode of the result equals decode of the input. Returns the
/// expanded tuple together with the spec describing it.
std::pair<IndexTuple, RadixSpec> nest(const IndexTuple& t, const RadixSpec& spec,
                                      std::size_t extra_levels);

}  // namespace hts
