#pragma once

#include <array>
#include <cstddef>
#include <map>

#include "downup/scalar.hpp"

namespace downup {

/// Coefficients indexed by a fixed-size tuple of exponents, with zero entries
/// never stored. `Tag` keeps tables over different bases from mixing.
template <class Tag, std::size_t N>
class SparseTable {
 public:
  using Index = std::array<unsigned, N>;
  using Terms = std::map<Index, Scalar>;

  SparseTable() = default;

  static SparseTable single(const Index& index, const Scalar& c = 1) {
    SparseTable t;
    t.add(index, c);
    return t;
  }

  void add(const Index& index, const Scalar& c) {
    if (downup::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(index, c);
    if (!inserted) {
      it->second += c;
      if (downup::is_zero(it->second)) terms_.erase(it);
    }
  }

  Scalar coefficient(const Index& index) const {
    auto it = terms_.find(index);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  SparseTable& operator+=(const SparseTable& other) {
    for (const auto& [k, c] : other.terms_) add(k, c);
    return *this;
  }
  SparseTable& operator-=(const SparseTable& other) {
    for (const auto& [k, c] : other.terms_) add(k, -c);
    return *this;
  }
  friend SparseTable operator+(SparseTable a, const SparseTable& b) { return a += b; }
  friend SparseTable operator-(SparseTable a, const SparseTable& b) { return a -= b; }
  friend SparseTable operator*(const Scalar& c, const SparseTable& a) {
    SparseTable out;
    for (const auto& [k, v] : a.terms_) out.add(k, c * v);
    return out;
  }
  friend bool operator==(const SparseTable&, const SparseTable&) = default;

 private:
  Terms terms_;
};

}  // namespace downup
