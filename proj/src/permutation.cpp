#include "stringc/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace stringc {

std::string to_string(Order value)
{
  if (value == 0)
    return "0";
  std::string digits;
  while (value > 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  std::reverse(digits.begin(), digits.end());
  return digits;
}

Permutation::Permutation(std::size_t degree) : images_(degree)
{
  std::iota(images_.begin(), images_.end(), point_t{0});
}

Permutation Permutation::from_images(std::vector<point_t> images)
{
  std::vector<bool> seen(images.size(), false);
  for (point_t y : images) {
    if (y >= images.size() || seen[y])
      throw Error("image table is not a bijection");
    seen[y] = true;
  }
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::transposition(std::size_t degree, point_t a, point_t b)
{
  if (a >= degree || b >= degree || a == b)
    throw Error("bad transposition");
  Permutation p(degree);
  std::swap(p.images_[a], p.images_[b]);
  return p;
}

Permutation Permutation::operator*(const Permutation& rhs) const
{
  if (degree() != rhs.degree())
    throw Error("degree mismatch in product");
  Permutation r;
  r.images_.resize(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x)
    r.images_[x] = rhs.images_[images_[x]];
  return r;
}

Permutation Permutation::inverse() const
{
  Permutation r;
  r.images_.resize(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x)
    r.images_[images_[x]] = static_cast<point_t>(x);
  return r;
}

Permutation Permutation::pow(long long e) const
{
  Permutation base = e < 0 ? inverse() : *this;
  unsigned long long k = e < 0 ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
  Permutation acc(degree());
  while (k > 0) {
    if (k & 1)
      acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

point_t Permutation::preimage(point_t y) const
{
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] == y)
      return static_cast<point_t>(x);
  throw Error("point out of range");
}

bool Permutation::is_identity() const
{
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != x)
      return false;
  return true;
}

bool Permutation::is_involution() const
{
  bool moved = false;
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (images_[images_[x]] != x)
      return false;
    moved = moved || images_[x] != x;
  }
  return moved;
}

std::size_t Permutation::order() const
{
  std::size_t result = 1;
  for (auto len : cycle_type())
    result = std::lcm(result, len);
  return result;
}

bool Permutation::commutes_with(const Permutation& other) const
{
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (other.images_[images_[x]] != images_[other.images_[x]])
      return false;
  return true;
}

std::vector<std::size_t> Permutation::moved_points() const
{
  std::vector<std::size_t> pts;
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != x)
      pts.push_back(x);
  return pts;
}

std::size_t Permutation::smallest_moved_point() const
{
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != x)
      return x;
  return images_.size();
}

bool Permutation::is_even() const
{
  std::size_t transpositions = 0;
  for (auto len : cycle_type())
    transpositions += len - 1;
  return transpositions % 2 == 0;
}

std::vector<std::vector<point_t>> Permutation::cycles() const
{
  std::vector<std::vector<point_t>> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (seen[x] || images_[x] == x)
      continue;
    std::vector<point_t> cyc;
    for (std::size_t y = x; !seen[y]; y = images_[y]) {
      seen[y] = true;
      cyc.push_back(static_cast<point_t>(y));
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

std::vector<std::size_t> Permutation::cycle_type() const
{
  std::vector<std::size_t> t;
  for (const auto& c : cycles())
    t.push_back(c.size());
  std::sort(t.rbegin(), t.rend());
  return t;
}

std::string Permutation::str() const
{
  auto cyc = cycles();
  if (cyc.empty())
    return "()";
  std::ostringstream os;
  for (const auto& c : cyc) {
    os << '(';
    for (std::size_t k = 0; k < c.size(); ++k)
      os << (k ? "," : "") << c[k] + 1;
    os << ')';
  }
  return os.str();
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept
{
  std::size_t h = 1469598103934665603ULL;
  for (point_t y : p.images())
    h = (h ^ y) * 1099511628211ULL;
  return h;
}

namespace {

class CycleParser {
public:
  CycleParser(std::string_view text, std::size_t degree) : s_(text), n_(degree) {}

  Permutation run()
  {
    skip_ws();
    if (s_.substr(pos_, 2) == "id") {
      pos_ += 2;
      expect_end();
      return Permutation(n_);
    }
    std::vector<point_t> images(n_);
    std::iota(images.begin(), images.end(), point_t{0});
    std::vector<bool> used(n_, false);
    bool any = false;
    while (true) {
      skip_ws();
      if (pos_ == s_.size())
        break;
      expect('(');
      skip_ws();
      if (peek() == ')') {
        // "()" is the identity and may only stand alone
        ++pos_;
        if (any)
          fail("empty cycle inside a product");
        expect_end();
        return Permutation(n_);
      }
      std::vector<point_t> cyc;
      cyc.push_back(read_point(used));
      skip_ws();
      while (peek() == ',') {
        ++pos_;
        cyc.push_back(read_point(used));
        skip_ws();
      }
      expect(')');
      if (cyc.size() < 2)
        fail("cycle needs at least two points");
      for (std::size_t k = 0; k < cyc.size(); ++k)
        images[cyc[k]] = cyc[(k + 1) % cyc.size()];
      any = true;
    }
    if (!any)
      fail("empty permutation text");
    return Permutation::from_images(std::move(images));
  }

private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  void skip_ws()
  {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  void expect(char c)
  {
    skip_ws();
    if (peek() != c)
      fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void expect_end()
  {
    skip_ws();
    if (pos_ != s_.size())
      fail("trailing characters");
  }

  point_t read_point(std::vector<bool>& used)
  {
    skip_ws();
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      fail("expected a point");
    unsigned long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + static_cast<unsigned long>(peek() - '0');
      if (v > 100000)
        fail("point out of range");
      ++pos_;
    }
    if (v == 0 || v > n_)
      fail("point " + std::to_string(v) + " outside 1.." + std::to_string(n_));
    if (used[v - 1])
      fail("point " + std::to_string(v) + " repeated");
    used[v - 1] = true;
    return static_cast<point_t>(v - 1);
  }

  [[noreturn]] void fail(const std::string& msg) const
  {
    throw Error("cycle notation: " + msg + " at offset " + std::to_string(pos_));
  }

  std::string_view s_;
  std::size_t n_;
  std::size_t pos_ = 0;
};

} // namespace

Permutation parse_perm(std::string_view text, std::size_t degree)
{
  if (degree == 0)
    throw Error("degree must be positive");
  return CycleParser(text, degree).run();
}

} // namespace stringc
