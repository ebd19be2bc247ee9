#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace pcastream {

// Fixed-capacity circular buffer. push() evicts the oldest element once full.
template <typename T>
class RingBuffer {
 public:
  explicit RingBuffer(std::size_t capacity) : capacity_(capacity) {
    if (capacity == 0) throw std::invalid_argument("RingBuffer capacity must be positive");
    data_.reserve(capacity);
  }

  void push(const T& value) {
    if (data_.size() < capacity_) {
      data_.push_back(value);
    } else {
      data_[head_] = value;
      head_ = (head_ + 1) % capacity_;
    }
  }

  std::size_t size() const { return data_.size(); }
  std::size_t capacity() const { return capacity_; }
  bool empty() const { return data_.empty(); }
  bool full() const { return data_.size() == capacity_; }

  void clear() {
    data_.clear();
    head_ = 0;
  }

  // Element i in insertion order, 0 = oldest. head_ stays 0 until the first
  // eviction, so the wrap-around index is valid in both regimes.
  const T& operator[](std::size_t i) const { return data_[(head_ + i) % capacity_]; }

  std::vector<T> to_vector() const {
    std::vector<T> out;
    out.reserve(data_.size());
    for (std::size_t i = 0; i < data_.size(); ++i) out.push_back((*this)[i]);
    return out;
  }

 private:
  std::size_t capacity_;
  std::size_t head_ = 0;
  std::vector<T> data_;
};

}  // namespace pcastream
