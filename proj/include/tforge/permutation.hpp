#ifndef TFORGE_PERMUTATION_HPP
#define TFORGE_PERMUTATION_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "tforge/error.hpp"

namespace tforge {

// Permutation of {0, ..., n-1} (0-based internally; printed 1-based to match
// the variable naming x1..xn).
class Permutation {
 public:
  explicit Permutation(std::vector<int> images) : img_(std::move(images)) {
    std::vector<char> seen(img_.size(), 0);
    for (int v : img_) {
      if (v < 0 || v >= static_cast<int>(img_.size()) || seen[static_cast<std::size_t>(v)])
        throw Error("permutation images are not a bijection");
      seen[static_cast<std::size_t>(v)] = 1;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 0);
    return Permutation(std::move(v));
  }

  static Permutation transposition(int n, int a, int b) {
    Permutation p = identity(n);
    std::swap(p.img_[static_cast<std::size_t>(a)], p.img_[static_cast<std::size_t>(b)]);
    return p;
  }

  int n() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& images() const { return img_; }

  Permutation inverse() const {
    std::vector<int> v(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i)
      v[static_cast<std::size_t>(img_[i])] = static_cast<int>(i);
    return Permutation(std::move(v));
  }

  // Composition (a*b)(i) = a(b(i)).
  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.n() != b.n()) throw Error("permutation sizes differ");
    std::vector<int> v(a.img_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a(b(static_cast<int>(i)));
    return Permutation(std::move(v));
  }

  bool operator==(const Permutation& o) const { return img_ == o.img_; }
  bool operator<(const Permutation& o) const { return img_ < o.img_; }

  bool is_identity() const {
    for (std::size_t i = 0; i < img_.size(); ++i)
      if (img_[i] != static_cast<int>(i)) return false;
    return true;
  }

  // Cycle lengths, sorted descending; conjugacy class invariant.
  std::vector<int> cycle_type() const {
    std::vector<char> seen(img_.size(), 0);
    std::vector<int> cycles;
    for (std::size_t i = 0; i < img_.size(); ++i) {
      if (seen[i]) continue;
      int len = 0;
      std::size_t j = i;
      while (!seen[j]) {
        seen[j] = 1;
        j = static_cast<std::size_t>(img_[j]);
        ++len;
      }
      cycles.push_back(len);
    }
    std::sort(cycles.rbegin(), cycles.rend());
    return cycles;
  }

  int order() const {
    int o = 1;
    for (int c : cycle_type()) o = std::lcm(o, c);
    return o;
  }

  int sign() const {
    int s = 1;
    for (int c : cycle_type())
      if (c % 2 == 0) s = -s;
    return s;
  }

  // 1-based cycle notation, e.g. "(1 2)(3 5 4)".
  std::string str() const {
    std::vector<char> seen(img_.size(), 0);
    std::string out;
    for (std::size_t i = 0; i < img_.size(); ++i) {
      if (seen[i] || img_[i] == static_cast<int>(i)) {
        seen[i] = 1;
        continue;
      }
      out += "(";
      std::size_t j = i;
      bool first = true;
      while (!seen[j]) {
        seen[j] = 1;
        if (!first) out += " ";
        out += std::to_string(j + 1);
        first = false;
        j = static_cast<std::size_t>(img_[j]);
      }
      out += ")";
    }
    return out.empty() ? "()" : out;
  }

  // Rank in [0, n!) via the Lehmer code; used to index small lookup tables.
  std::uint32_t rank() const {
    std::uint32_t r = 0;
    for (std::size_t i = 0; i < img_.size(); ++i) {
      std::uint32_t smaller = 0;
      for (std::size_t j = i + 1; j < img_.size(); ++j)
        if (img_[j] < img_[i]) ++smaller;
      r = r * static_cast<std::uint32_t>(img_.size() - i) + smaller;
    }
    return r;
  }

 private:
  std::vector<int> img_;
};

}  // namespace tforge

#endif
