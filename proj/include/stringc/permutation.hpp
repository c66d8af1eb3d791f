#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "stringc/error.hpp"

namespace stringc {

using point_t = std::uint16_t;

// Group orders overflow 64 bits from degree 21 on.
using Order = unsigned __int128;

std::string to_string(Order value);

// A bijection of {0..n-1}. Points are 0-based internally and 1-based in
// every textual form. Products act on the right: (p * q)(x) = q(p(x)).
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::size_t degree);

  // images[x] is the image of x (0-based); throws unless a bijection.
  static Permutation from_images(std::vector<point_t> images);
  static Permutation transposition(std::size_t degree, point_t a, point_t b);

  std::size_t degree() const { return images_.size(); }
  point_t operator[](std::size_t x) const { return images_[x]; }
  const std::vector<point_t>& images() const { return images_; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  Permutation pow(long long e) const;
  point_t preimage(point_t y) const;

  bool is_identity() const;
  bool is_involution() const; // order exactly 2
  std::size_t order() const;
  bool commutes_with(const Permutation& other) const;
  std::vector<std::size_t> moved_points() const;
  std::size_t smallest_moved_point() const; // degree() when identity
  bool is_even() const;

  // Nontrivial cycles, each starting at its least point, sorted by that point.
  std::vector<std::vector<point_t>> cycles() const;
  // Multiset of nontrivial cycle lengths, descending.
  std::vector<std::size_t> cycle_type() const;
  // 1-based cycle notation, "()" for the identity.
  std::string str() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
  std::vector<point_t> images_;
};

// Grammar: perm := "id" | "()" | cycle+ ; cycle := "(" int ("," int)+ ")".
Permutation parse_perm(std::string_view text, std::size_t degree);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

} // namespace stringc
