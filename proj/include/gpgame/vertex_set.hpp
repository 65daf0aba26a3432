#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace gpgame {

// Packed bit-vector over a fixed vertex range [0, width). Equality and
// hashing act on the packed words, which makes VertexSet directly usable as
// a transposition-table key. Widths up to 128 stay inline; wider sets spill
// to a heap block.
class VertexSet {
 public:
  VertexSet() noexcept : width_(0), nwords_(0) {}
  explicit VertexSet(int width);
  VertexSet(const VertexSet& other);
  VertexSet(VertexSet&& other) noexcept;
  VertexSet& operator=(const VertexSet& other);
  VertexSet& operator=(VertexSet&& other) noexcept;
  ~VertexSet();

  static VertexSet full(int width);
  static VertexSet of(int width, std::initializer_list<int> members);
  static VertexSet of(int width, const std::vector<int>& members);

  int width() const { return static_cast<int>(width_); }
  bool contains(int v) const;
  void add(int v);
  void remove(int v);
  void clear();
  int size() const;
  bool empty() const;

  // Smallest member, or -1 when empty.
  int first() const;
  // Smallest member strictly greater than v, or -1; v may be -1.
  int next_after(int v) const;
  std::vector<int> to_vector() const;

  // Removes every member <= v; v may be -1 (no-op) or >= width (clears).
  void drop_upto(int v);

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  // Removes every member of other from this set.
  VertexSet& subtract(const VertexSet& other);
  bool intersects(const VertexSet& other) const;
  bool is_subset_of(const VertexSet& other) const;
  // All non-members within [0, width).
  VertexSet complement() const;

  bool operator==(const VertexSet& other) const;
  bool operator!=(const VertexSet& other) const { return !(*this == other); }

  // Orders sets by their ascending member lists (shorter prefix first).
  bool lex_less(const VertexSet& other) const;

  std::size_t hash() const;

  // Packed value in lowercase hex, vertex 0 = least significant bit.
  std::string to_hex() const;
  // Inverse of to_hex; throws ParameterError on bad digits or bits >= width.
  static VertexSet from_hex(int width, std::string_view hex);

  // "{0, 2, 5}" — for diagnostics and test failure messages.
  std::string to_string() const;

 private:
  static constexpr std::uint32_t kInlineWords = 2;

  bool inline_storage() const { return nwords_ <= kInlineWords; }
  std::uint64_t* words() { return inline_storage() ? inline_.data() : heap_; }
  const std::uint64_t* words() const {
    return inline_storage() ? inline_.data() : heap_;
  }
  void check_same_width(const VertexSet& other) const;

  std::uint32_t width_;
  std::uint32_t nwords_;
  union {
    std::array<std::uint64_t, kInlineWords> inline_;
    std::uint64_t* heap_;
  };
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

VertexSet operator|(VertexSet a, const VertexSet& b);
VertexSet operator&(VertexSet a, const VertexSet& b);

}  // namespace gpgame

template <>
struct std::hash<gpgame::VertexSet> {
  std::size_t operator()(const gpgame::VertexSet& s) const { return s.hash(); }
};
