#pragma once

#include <map>
#include <utility>

#include "dglift/field.hpp"

namespace dglift {

/// Finite formal sum of keys with nonzero scalar coefficients, ordered by Key.
/// Zero coefficients are never stored, so equality is structural.
template <class Key>
class LinearCombination {
 public:
  using Map = std::map<Key, Scalar>;
  using const_iterator = typename Map::const_iterator;

  void add(const Key& key, const Scalar& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  LinearCombination& operator+=(const LinearCombination& other) {
    for (const auto& [k, c] : other.terms_) add(k, c);
    return *this;
  }
  LinearCombination& operator-=(const LinearCombination& other) {
    for (const auto& [k, c] : other.terms_) add(k, -c);
    return *this;
  }
  LinearCombination& scale(const Scalar& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
  }

  Scalar coefficient(const Key& key, const Scalar& zero) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? zero : it->second;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const Map& map() const { return terms_; }

  friend bool operator==(const LinearCombination&, const LinearCombination&) = default;

 private:
  Map terms_;
};

}  // namespace dglift
