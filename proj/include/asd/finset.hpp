#pragma once

#include <algorithm>
#include <initializer_list>
#include <vector>

namespace asd {

// Finite set stored as a sorted, deduplicated vector.
template <class T>
class FinSet {
 public:
  using value_type = T;
  using const_iterator = typename std::vector<T>::const_iterator;

  FinSet() = default;
  FinSet(std::initializer_list<T> items) : items_(items) { normalize(); }
  explicit FinSet(std::vector<T> items) : items_(std::move(items)) { normalize(); }

  const std::vector<T>& items() const { return items_; }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  const_iterator begin() const { return items_.begin(); }
  const_iterator end() const { return items_.end(); }

  bool contains(const T& x) const { return std::binary_search(items_.begin(), items_.end(), x); }

  bool subset_of(const FinSet& other) const {
    return std::includes(other.items_.begin(), other.items_.end(), items_.begin(), items_.end());
  }

  FinSet unite(const FinSet& other) const {
    std::vector<T> out;
    out.reserve(items_.size() + other.items_.size());
    std::set_union(items_.begin(), items_.end(), other.items_.begin(), other.items_.end(),
                   std::back_inserter(out));
    FinSet r;
    r.items_ = std::move(out);
    return r;
  }

  FinSet insert(const T& x) const {
    FinSet r = *this;
    auto it = std::lower_bound(r.items_.begin(), r.items_.end(), x);
    if (it == r.items_.end() || *it != x) r.items_.insert(it, x);
    return r;
  }

  friend bool operator==(const FinSet& a, const FinSet& b) { return a.items_ == b.items_; }
  friend bool operator!=(const FinSet& a, const FinSet& b) { return !(a == b); }
  friend bool operator<(const FinSet& a, const FinSet& b) {
    return std::lexicographical_compare(a.items_.begin(), a.items_.end(), b.items_.begin(),
                                        b.items_.end());
  }

 private:
  void normalize() {
    std::sort(items_.begin(), items_.end());
    items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
  }

  std::vector<T> items_;
};

// A formal sum of formal products.
template <class T>
using FormalDNF = FinSet<FinSet<T>>;

template <class T>
FormalDNF<T> dnf_plus(const FormalDNF<T>& r, const FormalDNF<T>& s) {
  return r.unite(s);
}

template <class T>
FormalDNF<T> dnf_meet(const FormalDNF<T>& r, const FormalDNF<T>& s) {
  std::vector<FinSet<T>> out;
  out.reserve(r.size() * s.size());
  for (const auto& a : r)
    for (const auto& b : s) out.push_back(a.unite(b));
  return FormalDNF<T>(std::move(out));
}

// ∀ℓ∈L. ∃ℓ'∈R. ℓ' ⊆ ℓ
template <class T>
bool upper_order(const FormalDNF<T>& r, const FormalDNF<T>& l) {
  return std::all_of(l.begin(), l.end(), [&](const FinSet<T>& a) {
    return std::any_of(r.begin(), r.end(), [&](const FinSet<T>& b) { return b.subset_of(a); });
  });
}

template <class T>
bool dnf_congruent(const FormalDNF<T>& l, const FormalDNF<T>& r) {
  return upper_order(r, l) && upper_order(l, r);
}

}  // namespace asd
