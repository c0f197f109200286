// Fixed-capacity inline vector for short neighbor lists.

#ifndef SLLS_SMALL_VECTOR_H_
#define SLLS_SMALL_VECTOR_H_

#include <array>
#include <cassert>
#include <cstddef>
#include <span>

namespace slls {

template <typename T, std::size_t N>
class SmallVector {
 public:
  using value_type = T;
  using iterator = T*;
  using const_iterator = const T*;

  constexpr SmallVector() = default;
  constexpr SmallVector(std::initializer_list<T> init) {
    for (const T& v : init) push_back(v);
  }

  constexpr void push_back(const T& v) {
    assert(size_ < N);
    data_[size_++] = v;
  }

  constexpr std::size_t size() const { return size_; }
  constexpr bool empty() const { return size_ == 0; }
  static constexpr std::size_t capacity() { return N; }

  constexpr T& operator[](std::size_t i) { return data_[i]; }
  constexpr const T& operator[](std::size_t i) const { return data_[i]; }

  constexpr iterator begin() { return data_.data(); }
  constexpr iterator end() { return data_.data() + size_; }
  constexpr const_iterator begin() const { return data_.data(); }
  constexpr const_iterator end() const { return data_.data() + size_; }

  constexpr std::span<const T> span() const { return {data_.data(), size_}; }

  friend constexpr bool operator==(const SmallVector& a, const SmallVector& b) {
    if (a.size_ != b.size_) return false;
    for (std::size_t i = 0; i < a.size_; ++i) {
      if (!(a.data_[i] == b.data_[i])) return false;
    }
    return true;
  }

 private:
  std::array<T, N> data_{};
  std::size_t size_ = 0;
};

}  // namespace slls

#endif  // SLLS_SMALL_VECTOR_H_
