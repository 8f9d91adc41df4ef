#include "lampspec/lamplighter.hpp"

#include <algorithm>
#include <sstream>

#include "lampspec/errors.hpp"

namespace lampspec {

LampConfig::LampConfig(std::vector<int32_t> positions) : support_(std::move(positions)) {
  std::sort(support_.begin(), support_.end());
  // Cancel equal positions in pairs.
  std::vector<int32_t> out;
  out.reserve(support_.size());
  for (std::size_t i = 0; i < support_.size();) {
    std::size_t j = i;
    while (j < support_.size() && support_[j] == support_[i]) ++j;
    if ((j - i) % 2 == 1) out.push_back(support_[i]);
    i = j;
  }
  support_ = std::move(out);
}

LampConfig LampConfig::single(int32_t position) {
  LampConfig c;
  c.support_.push_back(position);
  return c;
}

bool LampConfig::lit(int32_t position) const {
  return std::binary_search(support_.begin(), support_.end(), position);
}

LampConfig LampConfig::operator^(const LampConfig& other) const {
  LampConfig out;
  out.support_.reserve(support_.size() + other.support_.size());
  std::size_t i = 0, j = 0;
  while (i < support_.size() && j < other.support_.size()) {
    if (support_[i] < other.support_[j]) {
      out.support_.push_back(support_[i++]);
    } else if (other.support_[j] < support_[i]) {
      out.support_.push_back(other.support_[j++]);
    } else {
      ++i;
      ++j;
    }
  }
  out.support_.insert(out.support_.end(), support_.begin() + i, support_.end());
  out.support_.insert(out.support_.end(), other.support_.begin() + j, other.support_.end());
  return out;
}

LampConfig LampConfig::shifted(int32_t by) const {
  LampConfig out;
  out.support_.reserve(support_.size());
  for (int32_t k : support_) out.support_.push_back(k + by);
  return out;
}

bool h_less(const HElement& x, const HElement& y) {
  if (x.shift != y.shift) return x.shift < y.shift;
  return std::lexicographical_compare(x.lamps.support().begin(), x.lamps.support().end(),
                                      y.lamps.support().begin(), y.lamps.support().end());
}

std::size_t HHash::operator()(const HElement& x) const {
  // FNV-1a over the shift and the support.
  uint64_t h = 1469598103934665603ull;
  auto mix = [&h](uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(static_cast<uint32_t>(x.shift));
  for (int32_t k : x.lamps.support()) mix(static_cast<uint32_t>(k));
  return static_cast<std::size_t>(h);
}

HElement h_identity() { return HElement{}; }
HElement h_a() { return HElement{LampConfig::single(0), 0}; }
HElement h_t() { return HElement{LampConfig{}, 1}; }

HElement h_mul(const HElement& x, const HElement& y) {
  return HElement{x.lamps ^ y.lamps.shifted(x.shift), x.shift + y.shift};
}

HElement h_inv(const HElement& x) {
  return HElement{x.lamps.shifted(-x.shift), -x.shift};
}

HElement h_pow(const HElement& x, long exponent) {
  HElement base = exponent < 0 ? h_inv(x) : x;
  unsigned long e = exponent < 0 ? -static_cast<unsigned long>(exponent) : exponent;
  HElement acc = h_identity();
  while (e > 0) {
    if (e & 1) acc = h_mul(acc, base);
    base = h_mul(base, base);
    e >>= 1;
  }
  return acc;
}

Letter letter_inverse(Letter l) {
  switch (l) {
    case Letter::a: return Letter::a_inv;
    case Letter::a_inv: return Letter::a;
    case Letter::t: return Letter::t_inv;
    case Letter::t_inv: return Letter::t;
  }
  throw invariant_error("letter_inverse: bad letter");
}

HElement letter_value(Letter l) {
  switch (l) {
    case Letter::a:
    case Letter::a_inv: return h_a();  // a has order 2
    case Letter::t: return h_t();
    case Letter::t_inv: return h_inv(h_t());
  }
  throw invariant_error("letter_value: bad letter");
}

HElement h_eval_word(std::span<const Letter> word) {
  HElement acc = h_identity();
  for (Letter l : word) acc = h_mul(acc, letter_value(l));
  return acc;
}

std::vector<Letter> parse_word(const std::string& text) {
  std::vector<Letter> out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case 'a': out.push_back(Letter::a); break;
      case 't': out.push_back(Letter::t); break;
      case 'A': out.push_back(Letter::a_inv); break;
      case 'T': out.push_back(Letter::t_inv); break;
      case ' ': break;
      default:
        throw parameter_error(std::string("parse_word: bad character '") + c + "'");
    }
  }
  return out;
}

std::string word_to_string(std::span<const Letter> word) {
  std::string out;
  out.reserve(word.size());
  for (Letter l : word) {
    switch (l) {
      case Letter::a: out += 'a'; break;
      case Letter::t: out += 't'; break;
      case Letter::a_inv: out += 'A'; break;
      case Letter::t_inv: out += 'T'; break;
    }
  }
  return out;
}

HElement alpha(const HElement& x) {
  // Lamp k contributes lamps {k-1, k}; supports of distinct lamps may
  // overlap, so go through LampConfig's cancelling constructor.
  std::vector<int32_t> doubled;
  doubled.reserve(2 * x.lamps.size());
  for (int32_t k : x.lamps.support()) {
    doubled.push_back(k - 1);
    doubled.push_back(k);
  }
  return HElement{LampConfig(std::move(doubled)), x.shift};
}

bool in_image_alpha(const HElement& x) { return x.lamps.size() % 2 == 0; }

HElement alpha_preimage(const HElement& x) {
  if (!in_image_alpha(x))
    throw parameter_error("alpha_preimage: element has odd support, not in the image");
  // Division by (1 + u^-1) over Z/2: multiply by u, then divide by (1 + u).
  // With the support of u*f sorted as s1 < s2 < ... the quotient's support is
  // the union of the intervals [s1, s2-1], [s3, s4-1], ...
  const auto& s = x.lamps.support();
  std::vector<int32_t> out;
  for (std::size_t i = 0; i + 1 < s.size(); i += 2) {
    for (int32_t k = s[i] + 1; k <= s[i + 1]; ++k) out.push_back(k);
  }
  return HElement{LampConfig(std::move(out)), x.shift};
}

HElement alpha_pow(const HElement& x, long k) {
  HElement out = x;
  for (; k > 0; --k) out = alpha(out);
  for (; k < 0; ++k) out = alpha_preimage(out);
  return out;
}

std::string h_to_string(const HElement& x) {
  std::ostringstream os;
  os << "lamps{";
  bool first = true;
  for (int32_t k : x.lamps.support()) {
    if (!first) os << ',';
    os << k;
    first = false;
  }
  os << "};shift=" << x.shift;
  return os.str();
}

HElement h_from_string(const std::string& text) {
  auto fail = [&text]() -> void {
    throw parameter_error("h_from_string: cannot parse \"" + text + "\"");
  };
  const std::string prefix = "lamps{";
  if (text.rfind(prefix, 0) != 0) fail();
  std::size_t close = text.find('}', prefix.size());
  if (close == std::string::npos) fail();
  const std::string tail = text.substr(close + 1);
  const std::string shift_key = ";shift=";
  if (tail.rfind(shift_key, 0) != 0) fail();

  auto to_long = [&fail](const std::string& item) -> long {
    try {
      std::size_t used = 0;
      long v = std::stol(item, &used);
      if (used != item.size()) fail();
      return v;
    } catch (const std::logic_error&) {  // invalid_argument / out_of_range
      fail();
      return 0;
    }
  };

  std::vector<int32_t> lamps;
  std::string inner = text.substr(prefix.size(), close - prefix.size());
  if (!inner.empty()) {
    std::istringstream is(inner);
    std::string item;
    while (std::getline(is, item, ',')) lamps.push_back(static_cast<int32_t>(to_long(item)));
  }
  long shift = to_long(tail.substr(shift_key.size()));

  // Round-trips of canonical output never cancel; explicit input may.
  return HElement{LampConfig(std::move(lamps)), static_cast<int32_t>(shift)};
}

}  // namespace lampspec
