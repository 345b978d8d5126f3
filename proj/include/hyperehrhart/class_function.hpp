#ifndef HYPEREHRHART_CLASS_FUNCTION_HPP
#define HYPEREHRHART_CLASS_FUNCTION_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "hyperehrhart/arith.hpp"
#include "hyperehrhart/symgroup.hpp"

namespace hyperehrhart {

/// An integer-valued class function on S_n: one value per cycle type,
/// stored in the order of class_list(n).
class ClassFunction {
 public:
  ClassFunction() = default;
  explicit ClassFunction(int n) : n_(n), values_(class_list(n).size()) {}

  static ClassFunction constant(int n, const BigInt& value) {
    ClassFunction f(n);
    for (auto& v : f.values_) v = value;
    return f;
  }

  template <typename Fn>
  static ClassFunction from(int n, Fn&& fn) {
    ClassFunction f(n);
    const auto& classes = class_list(n);
    for (std::size_t i = 0; i < classes.size(); ++i) f.values_[i] = fn(classes[i]);
    return f;
  }

  int n() const { return n_; }
  std::size_t size() const { return values_.size(); }
  const std::vector<CycleType>& classes() const { return class_list(n_); }
  const std::vector<BigInt>& values() const { return values_; }

  const BigInt& operator[](std::size_t index) const { return values_[index]; }
  BigInt& operator[](std::size_t index) { return values_[index]; }

  const BigInt& operator()(const CycleType& ct) const { return values_[checked_index(ct)]; }
  void set(const CycleType& ct, BigInt value) { values_[checked_index(ct)] = std::move(value); }

  bool is_zero() const {
    for (const auto& v : values_) {
      if (v != 0) return false;
    }
    return true;
  }

  ClassFunction& operator+=(const ClassFunction& other) {
    require_same_degree(other);
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
    return *this;
  }
  ClassFunction& operator-=(const ClassFunction& other) {
    require_same_degree(other);
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= other.values_[i];
    return *this;
  }
  friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
  friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }
  friend ClassFunction operator*(const BigInt& c, ClassFunction a) {
    for (auto& v : a.values_) v *= c;
    return a;
  }

  friend bool operator==(const ClassFunction&, const ClassFunction&) = default;

  std::string to_string() const {
    std::string out;
    const auto& classes = class_list(n_);
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (i) out += ' ';
      out += "(" + classes[i].to_string() + "):" + values_[i].str();
    }
    return out;
  }

 private:
  std::size_t checked_index(const CycleType& ct) const {
    if (ct.n() != n_) throw InputError("class function of degree " + std::to_string(n_) +
                                       " evaluated at a cycle type of degree " + std::to_string(ct.n()));
    return class_index(ct);
  }
  void require_same_degree(const ClassFunction& other) const {
    if (other.n_ != n_) throw InputError("class functions have different degrees");
  }

  int n_ = 0;
  std::vector<BigInt> values_;
};

}  // namespace hyperehrhart

#endif  // HYPEREHRHART_CLASS_FUNCTION_HPP
