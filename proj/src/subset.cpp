#include "matchless/subset.hpp"

#include "matchless/errors.hpp"

namespace matchless {

namespace {

std::size_t blocks_for(std::size_t n) { return (n + SubsetWord::kWordBits - 1) / SubsetWord::kWordBits; }

}  // namespace

SubsetWord::SubsetWord(std::size_t n) {
  if (n < 1 || n > kMaxGround)
    throw RangeError("ground-set size " + std::to_string(n) + " outside [1, 1024]");
  n_ = static_cast<std::uint16_t>(n);
  blocks_ = static_cast<std::uint16_t>(blocks_for(n));
}

SubsetWord SubsetWord::from_elements(std::size_t n, std::span<const std::size_t> elements) {
  SubsetWord s(n);
  for (auto e : elements) s.insert(e);
  return s;
}

SubsetWord SubsetWord::from_mask(std::size_t n, std::uint64_t mask) {
  SubsetWord s(n);
  if (n > kWordBits) throw RangeError("from_mask needs n <= 64");
  if (n < kWordBits && (mask >> n) != 0) throw RangeError("mask has bits above the ground set");
  s.bits_[0] = mask;
  return s;
}

SubsetWord SubsetWord::interval(std::size_t n, std::size_t lo, std::size_t hi) {
  SubsetWord s(n);
  if (lo < 1) lo = 1;
  for (std::size_t e = lo; e <= hi; ++e) s.insert(e);
  return s;
}

void SubsetWord::insert(std::size_t e) {
  if (e == 0 || e > n_)
    throw RangeError("element " + std::to_string(e) + " outside [1, " + std::to_string(n_) + "]");
  bits_[(e - 1) / kWordBits] |= std::uint64_t{1} << ((e - 1) % kWordBits);
}

void SubsetWord::erase(std::size_t e) {
  if (e == 0 || e > n_) return;
  bits_[(e - 1) / kWordBits] &= ~(std::uint64_t{1} << ((e - 1) % kWordBits));
}

std::vector<std::size_t> SubsetWord::elements() const {
  std::vector<std::size_t> out;
  out.reserve(size());
  for (std::size_t b = 0; b < blocks_; ++b) {
    std::uint64_t w = bits_[b];
    while (w) {
      out.push_back(b * kWordBits + static_cast<std::size_t>(std::countr_zero(w)) + 1);
      w &= w - 1;
    }
  }
  return out;
}

std::size_t SubsetWord::min_element() const noexcept {
  for (std::size_t b = 0; b < blocks_; ++b)
    if (bits_[b]) return b * kWordBits + static_cast<std::size_t>(std::countr_zero(bits_[b])) + 1;
  return 0;
}

SubsetWord SubsetWord::operator&(const SubsetWord& o) const noexcept {
  SubsetWord r = *this;
  for (std::size_t b = 0; b < blocks_; ++b) r.bits_[b] &= o.bits_[b];
  return r;
}

SubsetWord SubsetWord::operator|(const SubsetWord& o) const noexcept {
  SubsetWord r = *this;
  for (std::size_t b = 0; b < blocks_; ++b) r.bits_[b] |= o.bits_[b];
  return r;
}

SubsetWord SubsetWord::operator-(const SubsetWord& o) const noexcept {
  SubsetWord r = *this;
  for (std::size_t b = 0; b < blocks_; ++b) r.bits_[b] &= ~o.bits_[b];
  return r;
}

SubsetWord SubsetWord::rebased(std::size_t new_n) const {
  SubsetWord r(new_n);
  for (auto e : elements()) r.insert(e);
  return r;
}

std::string SubsetWord::to_string() const {
  if (empty()) return "-";
  std::string out;
  for (auto e : elements()) {
    if (!out.empty()) out += ',';
    out += std::to_string(e);
  }
  return out;
}

std::strong_ordering operator<=>(const SubsetWord& a, const SubsetWord& b) noexcept {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  std::size_t nb = a.blocks_ > b.blocks_ ? a.blocks_ : b.blocks_;
  for (std::size_t i = nb; i-- > 0;) {
    std::uint64_t x = i < a.blocks_ ? a.bits_[i] : 0;
    std::uint64_t y = i < b.blocks_ ? b.bits_[i] : 0;
    if (x != y) return x <=> y;
  }
  return a.n_ <=> b.n_;
}

}  // namespace matchless
