// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace conelift {

enum class MonomialOrder { Grevlex, Lex };

// Tuple of nonnegative exponents, one per variable of some VarSet.
class ExponentVector {
 public:
  explicit ExponentVector(std::vector<int> exps) : e_(std::move(exps)) {
    for (int v : e_)
      if (v < 0) throw std::invalid_argument("negative exponent");
  }

  static ExponentVector zero(std::size_t n) { return ExponentVector(std::vector<int>(n, 0)); }

  static ExponentVector unit(std::size_t n, std::size_t i, int e = 1) {
    std::vector<int> v(n, 0);
    v.at(i) = e;
    return ExponentVector(std::move(v));
  }

  std::size_t size() const { return e_.size(); }
  int operator[](std::size_t i) const { return e_[i]; }

  int total_degree() const { return std::accumulate(e_.begin(), e_.end(), 0); }
  bool is_constant() const {
    return std::all_of(e_.begin(), e_.end(), [](int v) { return v == 0; });
  }

  ExponentVector times(const ExponentVector& o) const {
    std::vector<int> v(e_);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += o.e_[i];
    return ExponentVector(std::move(v));
  }

  bool divides(const ExponentVector& o) const {
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > o.e_[i]) return false;
    return true;
  }

  // other / this, requires divides(other)
  ExponentVector quotient_of(const ExponentVector& other) const {
    std::vector<int> v(other.e_);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] -= e_[i];
    return ExponentVector(std::move(v));
  }

  static ExponentVector lcm(const ExponentVector& a, const ExponentVector& b) {
    std::vector<int> v(a.e_);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = std::max(v[i], b.e_[i]);
    return ExponentVector(std::move(v));
  }

  // Disjoint supports.
  bool coprime_with(const ExponentVector& o) const {
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > 0 && o.e_[i] > 0) return false;
    return true;
  }

  ExponentVector with_entry(std::size_t i, int e) const {
    std::vector<int> v(e_);
    v.at(i) = e;
    return ExponentVector(std::move(v));
  }

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;

 private:
  std::vector<int> e_;
};

// Three-way comparison of monomials: >0 when a is larger under the order.
inline int compare(const ExponentVector& a, const ExponentVector& b, MonomialOrder order) {
  switch (order) {
    case MonomialOrder::Lex:
      for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
      return 0;
    case MonomialOrder::Grevlex: {
      const int da = a.total_degree();
      const int db = b.total_degree();
      if (da != db) return da > db ? 1 : -1;
      // equal degree: the rightmost differing exponent decides, smaller wins
      for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
      return 0;
    }
  }
  return 0;
}

// Descending comparator: leading monomial first.
struct MonomialCompareDesc {
  MonomialOrder order;
  bool operator()(const ExponentVector& a, const ExponentVector& b) const {
    return compare(a, b, order) > 0;
  }
};

}  // namespace conelift
