#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "nsurf/types.hpp"

namespace nsurf {

// Permutation of the four vertex labels of a tetrahedron.
class Perm4 {
 public:
  Perm4() : image_{0, 1, 2, 3} {}
  Perm4(int a, int b, int c, int d) : image_{a, b, c, d} {
    int seen = 0;
    for (int x : image_) {
      require(x >= 0 && x < 4, ErrorCode::MalformedTable, "permutation entry out of range");
      seen |= 1 << x;
    }
    require(seen == 0xF, ErrorCode::MalformedTable, "permutation is not a bijection");
  }

  int operator[](int i) const { return image_[i]; }

  Perm4 inverse() const {
    Perm4 p;
    for (int i = 0; i < 4; ++i) p.image_[image_[i]] = i;
    return p;
  }

  // Composition: (this * other)[i] == this[other[i]].
  Perm4 operator*(const Perm4& other) const {
    Perm4 p;
    for (int i = 0; i < 4; ++i) p.image_[i] = image_[other.image_[i]];
    return p;
  }

  bool is_identity() const { return image_ == std::array<int, 4>{0, 1, 2, 3}; }

  int sign() const {
    int inv = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (image_[i] > image_[j]) ++inv;
    return (inv % 2 == 0) ? 1 : -1;
  }

  bool operator==(const Perm4& o) const { return image_ == o.image_; }
  bool operator!=(const Perm4& o) const { return image_ != o.image_; }
  bool operator<(const Perm4& o) const { return image_ < o.image_; }

  std::string str() const {
    std::string s = "(";
    for (int i = 0; i < 4; ++i) s += std::to_string(image_[i]) + (i < 3 ? "," : ")");
    return s;
  }

 private:
  std::array<int, 4> image_;
};

}  // namespace nsurf
