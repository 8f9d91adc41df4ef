#pragma once

// Exact arithmetic in the lamplighter group H = (sum_{i in Z} Z/2) x| Z.
//
// An element is a finite set of lit lamps together with the lamplighter's
// position ("shift").  Multiplication uses the convention
//
//   (f, m) * (g, n) = (f xor shift_m(g), m + n),
//
// where shift_m moves lamp k to lamp k + m.  The generators are
// a = (lamp at 0, shift 0) and t = (no lamps, shift 1); under this
// convention t^-1 a t lights the lamp at -1.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace lampspec {

// Finitely supported Z -> Z/2 configuration, stored as the sorted set of
// lit positions.  Set semantics: adding a position twice removes it.
class LampConfig {
 public:
  LampConfig() = default;

  // Positions may repeat; repeats cancel in pairs.
  explicit LampConfig(std::vector<int32_t> positions);

  static LampConfig single(int32_t position);

  const std::vector<int32_t>& support() const { return support_; }
  bool empty() const { return support_.empty(); }
  std::size_t size() const { return support_.size(); }
  bool lit(int32_t position) const;

  // Symmetric difference (addition over Z/2).
  LampConfig operator^(const LampConfig& other) const;

  // Every lamp moved by the given amount.
  LampConfig shifted(int32_t by) const;

  bool operator==(const LampConfig&) const = default;

 private:
  std::vector<int32_t> support_;
};

struct HElement {
  LampConfig lamps;
  int32_t shift = 0;

  bool operator==(const HElement&) const = default;
};

// Total order (shift first, then support lexicographically); used only to
// make serialized output deterministic.
bool h_less(const HElement& x, const HElement& y);

struct HHash {
  std::size_t operator()(const HElement& x) const;
};

HElement h_identity();
HElement h_a();  // lamp at 0
HElement h_t();  // shift by 1

HElement h_mul(const HElement& x, const HElement& y);
HElement h_inv(const HElement& x);
HElement h_pow(const HElement& x, long exponent);

enum class Letter : uint8_t { a, t, a_inv, t_inv };

Letter letter_inverse(Letter l);
HElement letter_value(Letter l);

// Product of the letters, left to right.
HElement h_eval_word(std::span<const Letter> word);

// One character per letter: 'a', 't', 'A' = a^-1, 'T' = t^-1.
std::vector<Letter> parse_word(const std::string& text);
std::string word_to_string(std::span<const Letter> word);

// The endomorphism determined by a -> a t^-1 a t, t -> t.  On lamp
// configurations it doubles every lamp leftward: lamp k becomes lamps
// {k-1, k}; the shift is unchanged.
HElement alpha(const HElement& x);

// Image of alpha = elements with evenly many lit lamps.
bool in_image_alpha(const HElement& x);

// Unique preimage under alpha; parameter_error when x is not in the image.
HElement alpha_preimage(const HElement& x);

// alpha^k for k >= 0; for k < 0 applies alpha_preimage |k| times
// (parameter_error as soon as an intermediate value leaves the image).
HElement alpha_pow(const HElement& x, long k);

// Canonical text form "lamps{k1,k2,...};shift=m" and its inverse.
std::string h_to_string(const HElement& x);
HElement h_from_string(const std::string& text);

}  // namespace lampspec
