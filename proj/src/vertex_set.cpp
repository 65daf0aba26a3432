#include "gpgame/vertex_set.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstring>

#include "gpgame/errors.hpp"

namespace gpgame {

namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ull;

std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xbf58476d1ce4e5b9ull;
  z ^= z >> 27;
  z *= 0x94d049bb133111ebull;
  z ^= z >> 31;
  return z;
}

int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

VertexSet::VertexSet(int width) {
  if (width < 0) throw ParameterError("vertex set width must be >= 0");
  width_ = static_cast<std::uint32_t>(width);
  nwords_ = (width_ + 63) / 64;
  if (inline_storage()) {
    inline_.fill(0);
  } else {
    heap_ = new std::uint64_t[nwords_]();
  }
}

VertexSet::VertexSet(const VertexSet& other)
    : width_(other.width_), nwords_(other.nwords_) {
  if (inline_storage()) {
    inline_ = other.inline_;
  } else {
    heap_ = new std::uint64_t[nwords_];
    std::memcpy(heap_, other.heap_, nwords_ * sizeof(std::uint64_t));
  }
}

VertexSet::VertexSet(VertexSet&& other) noexcept
    : width_(other.width_), nwords_(other.nwords_) {
  if (inline_storage()) {
    inline_ = other.inline_;
  } else {
    heap_ = other.heap_;
    other.width_ = 0;
    other.nwords_ = 0;
  }
}

VertexSet& VertexSet::operator=(const VertexSet& other) {
  if (this == &other) return *this;
  VertexSet copy(other);
  *this = std::move(copy);
  return *this;
}

VertexSet& VertexSet::operator=(VertexSet&& other) noexcept {
  if (this == &other) return *this;
  if (!inline_storage()) delete[] heap_;
  width_ = other.width_;
  nwords_ = other.nwords_;
  if (inline_storage()) {
    inline_ = other.inline_;
  } else {
    heap_ = other.heap_;
    other.width_ = 0;
    other.nwords_ = 0;
  }
  return *this;
}

VertexSet::~VertexSet() {
  if (!inline_storage()) delete[] heap_;
}

VertexSet VertexSet::full(int width) {
  VertexSet s(width);
  std::uint64_t* w = s.words();
  for (std::uint32_t i = 0; i < s.nwords_; ++i) w[i] = ~0ull;
  if (width % 64 != 0 && s.nwords_ > 0) {
    w[s.nwords_ - 1] &= (1ull << (width % 64)) - 1;
  }
  return s;
}

VertexSet VertexSet::of(int width, std::initializer_list<int> members) {
  VertexSet s(width);
  for (int v : members) s.add(v);
  return s;
}

VertexSet VertexSet::of(int width, const std::vector<int>& members) {
  VertexSet s(width);
  for (int v : members) s.add(v);
  return s;
}

bool VertexSet::contains(int v) const {
  assert(v >= 0 && v < width());
  return (words()[v >> 6] >> (v & 63)) & 1;
}

void VertexSet::add(int v) {
  assert(v >= 0 && v < width());
  words()[v >> 6] |= 1ull << (v & 63);
}

void VertexSet::remove(int v) {
  assert(v >= 0 && v < width());
  words()[v >> 6] &= ~(1ull << (v & 63));
}

void VertexSet::clear() {
  std::uint64_t* w = words();
  for (std::uint32_t i = 0; i < nwords_; ++i) w[i] = 0;
}

int VertexSet::size() const {
  const std::uint64_t* w = words();
  int count = 0;
  for (std::uint32_t i = 0; i < nwords_; ++i) count += std::popcount(w[i]);
  return count;
}

bool VertexSet::empty() const {
  const std::uint64_t* w = words();
  for (std::uint32_t i = 0; i < nwords_; ++i) {
    if (w[i] != 0) return false;
  }
  return true;
}

int VertexSet::first() const { return next_after(-1); }

int VertexSet::next_after(int v) const {
  const std::uint64_t* w = words();
  std::uint32_t start = static_cast<std::uint32_t>(v + 1);
  if (start >= width_) return -1;
  std::uint32_t wi = start >> 6;
  std::uint64_t word = w[wi] & (~0ull << (start & 63));
  while (true) {
    if (word != 0) {
      return static_cast<int>((wi << 6) + std::countr_zero(word));
    }
    if (++wi >= nwords_) return -1;
    word = w[wi];
  }
}

std::vector<int> VertexSet::to_vector() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (int v = first(); v != -1; v = next_after(v)) out.push_back(v);
  return out;
}

void VertexSet::drop_upto(int v) {
  if (v < 0) return;
  if (v >= width() - 1) {
    clear();
    return;
  }
  std::uint64_t* w = words();
  std::uint32_t wi = static_cast<std::uint32_t>(v) >> 6;
  for (std::uint32_t i = 0; i < wi; ++i) w[i] = 0;
  int b = v & 63;
  w[wi] &= (b == 63) ? 0ull : (~0ull << (b + 1));
}

void VertexSet::check_same_width(const VertexSet& other) const {
  if (width_ != other.width_) {
    throw PreconditionError("vertex sets have different widths");
  }
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  check_same_width(other);
  std::uint64_t* a = words();
  const std::uint64_t* b = other.words();
  for (std::uint32_t i = 0; i < nwords_; ++i) a[i] |= b[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  check_same_width(other);
  std::uint64_t* a = words();
  const std::uint64_t* b = other.words();
  for (std::uint32_t i = 0; i < nwords_; ++i) a[i] &= b[i];
  return *this;
}

VertexSet& VertexSet::subtract(const VertexSet& other) {
  check_same_width(other);
  std::uint64_t* a = words();
  const std::uint64_t* b = other.words();
  for (std::uint32_t i = 0; i < nwords_; ++i) a[i] &= ~b[i];
  return *this;
}

bool VertexSet::intersects(const VertexSet& other) const {
  check_same_width(other);
  const std::uint64_t* a = words();
  const std::uint64_t* b = other.words();
  for (std::uint32_t i = 0; i < nwords_; ++i) {
    if ((a[i] & b[i]) != 0) return true;
  }
  return false;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  check_same_width(other);
  const std::uint64_t* a = words();
  const std::uint64_t* b = other.words();
  for (std::uint32_t i = 0; i < nwords_; ++i) {
    if ((a[i] & ~b[i]) != 0) return false;
  }
  return true;
}

VertexSet VertexSet::complement() const {
  VertexSet out = full(width());
  out.subtract(*this);
  return out;
}

bool VertexSet::operator==(const VertexSet& other) const {
  if (width_ != other.width_) return false;
  const std::uint64_t* a = words();
  const std::uint64_t* b = other.words();
  for (std::uint32_t i = 0; i < nwords_; ++i) {
    if (a[i] != b[i]) return false;
  }
  return true;
}

bool VertexSet::lex_less(const VertexSet& other) const {
  int a = first();
  int b = other.first();
  while (a != -1 && b != -1) {
    if (a != b) return a < b;
    a = next_after(a);
    b = other.next_after(b);
  }
  return a == -1 && b != -1;
}

std::size_t VertexSet::hash() const {
  std::uint64_t h = kGolden ^ width_;
  const std::uint64_t* w = words();
  for (std::uint32_t i = 0; i < nwords_; ++i) h = mix64(h ^ w[i]);
  return static_cast<std::size_t>(h);
}

std::string VertexSet::to_hex() const {
  static const char* digits = "0123456789abcdef";
  std::string out;
  const std::uint64_t* w = words();
  bool started = false;
  for (std::uint32_t i = nwords_; i-- > 0;) {
    for (int nib = 15; nib >= 0; --nib) {
      int d = static_cast<int>((w[i] >> (nib * 4)) & 0xf);
      if (!started && d == 0) continue;
      started = true;
      out.push_back(digits[d]);
    }
  }
  if (!started) out = "0";
  return out;
}

VertexSet VertexSet::from_hex(int width, std::string_view hex) {
  if (hex.empty()) throw ParameterError("empty hex string");
  VertexSet s(width);
  std::uint64_t* w = s.words();
  int bit = 0;
  for (std::size_t i = hex.size(); i-- > 0;) {
    int d = hex_digit(hex[i]);
    if (d < 0) {
      throw ParameterError(std::string("invalid hex digit '") + hex[i] + "'");
    }
    if (d != 0 && bit + 4 > static_cast<int>(s.nwords_) * 64) {
      throw ParameterError("hex value too wide for vertex set");
    }
    if (d != 0) w[bit >> 6] |= static_cast<std::uint64_t>(d) << (bit & 63);
    bit += 4;
  }
  // Bits at or above `width` are invalid even inside the last word.
  VertexSet valid = full(width);
  for (std::uint32_t i = 0; i < s.nwords_; ++i) {
    if ((w[i] & ~valid.words()[i]) != 0) {
      throw ParameterError("hex value has bits outside the vertex range");
    }
  }
  return s;
}

std::string VertexSet::to_string() const {
  std::string out = "{";
  bool sep = false;
  for (int v = first(); v != -1; v = next_after(v)) {
    if (sep) out += ", ";
    out += std::to_string(v);
    sep = true;
  }
  out += "}";
  return out;
}

VertexSet operator|(VertexSet a, const VertexSet& b) {
  a |= b;
  return a;
}

VertexSet operator&(VertexSet a, const VertexSet& b) {
  a &= b;
  return a;
}

}  // namespace gpgame
