#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "savlie/rational.hpp"

namespace savlie {

// Finite map from keys to nonzero rational coefficients, stored as a vector
// sorted by key. Zero coefficients are never stored; iteration order is the
// key order, which keeps every downstream report deterministic.
template <class K>
class SparseVec {
 public:
  using Entry = std::pair<K, Rational>;

  SparseVec() = default;

  static SparseVec unit(const K& key, Rational coeff = Rational(1)) {
    SparseVec v;
    if (!is_zero(coeff)) v.entries_.emplace_back(key, std::move(coeff));
    return v;
  }

  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  const std::vector<Entry>& entries() const { return entries_; }

  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  const Rational* find(const K& key) const {
    auto it = std::lower_bound(
        entries_.begin(), entries_.end(), key,
        [](const Entry& e, const K& k) { return e.first < k; });
    if (it != entries_.end() && it->first == key) return &it->second;
    return nullptr;
  }

  Rational coeff(const K& key) const {
    const Rational* c = find(key);
    return c ? *c : Rational(0);
  }

  void add_term(const K& key, const Rational& coeff) {
    if (is_zero(coeff)) return;
    auto it = std::lower_bound(
        entries_.begin(), entries_.end(), key,
        [](const Entry& e, const K& k) { return e.first < k; });
    if (it != entries_.end() && it->first == key) {
      it->second += coeff;
      if (is_zero(it->second)) entries_.erase(it);
    } else {
      entries_.insert(it, Entry(key, coeff));
    }
  }

  // this += scale * other
  void add_scaled(const SparseVec& other, const Rational& scale) {
    if (is_zero(scale) || other.empty()) return;
    std::vector<Entry> merged;
    merged.reserve(entries_.size() + other.entries_.size());
    auto a = entries_.begin();
    auto b = other.entries_.begin();
    while (a != entries_.end() || b != other.entries_.end()) {
      if (b == other.entries_.end() ||
          (a != entries_.end() && a->first < b->first)) {
        merged.push_back(*a++);
      } else if (a == entries_.end() || b->first < a->first) {
        Rational c = scale * b->second;
        if (!is_zero(c)) merged.emplace_back(b->first, std::move(c));
        ++b;
      } else {
        Rational c = a->second + scale * b->second;
        if (!is_zero(c)) merged.emplace_back(a->first, std::move(c));
        ++a;
        ++b;
      }
    }
    entries_ = std::move(merged);
  }

  SparseVec& operator+=(const SparseVec& other) {
    add_scaled(other, Rational(1));
    return *this;
  }
  SparseVec& operator-=(const SparseVec& other) {
    add_scaled(other, Rational(-1));
    return *this;
  }
  friend SparseVec operator+(SparseVec a, const SparseVec& b) {
    a += b;
    return a;
  }
  friend SparseVec operator-(SparseVec a, const SparseVec& b) {
    a -= b;
    return a;
  }

  SparseVec scaled(const Rational& s) const {
    SparseVec out;
    if (is_zero(s)) return out;
    out.entries_.reserve(entries_.size());
    for (const Entry& e : entries_) out.entries_.emplace_back(e.first, s * e.second);
    return out;
  }

  void scale_in_place(const Rational& s) {
    if (is_zero(s)) {
      entries_.clear();
      return;
    }
    for (Entry& e : entries_) e.second *= s;
  }

  bool operator==(const SparseVec& other) const {
    return entries_ == other.entries_;
  }

 private:
  std::vector<Entry> entries_;
};

}  // namespace savlie
