#include "asd/code_algebra.hpp"

namespace asd {

int FiniteAlgebra::index_of(std::string_view name) const {
  for (int i = 0; i < size(); ++i)
    if (names[i] == name) return i;
  throw std::invalid_argument("unknown code name: " + std::string(name));
}

CodeAlgebra<int> FiniteAlgebra::as_code_algebra() const {
  CodeAlgebra<int> alg;
  alg.zero = zero;
  alg.one = one;
  alg.plus = [this](int a, int b) { return plus(a, b); };
  alg.star = [this](int a, int b) { return star(a, b); };
  return alg;
}

int FiniteAlgebra::ev(const FormalDNF<int>& l) const {
  bool first_term = true;
  int sum = zero;
  for (const auto& product : l) {
    int p = one;
    bool first = true;
    for (int c : product) {
      p = first ? c : star(p, c);
      first = false;
    }
    sum = first_term ? p : plus(sum, p);
    first_term = false;
  }
  return sum;
}

ImposedOrder ImposedOrder::saturate(const FiniteAlgebra& alg) {
  const std::size_t n = static_cast<std::size_t>(alg.size());
  ImposedOrder out;
  out.size_ = n;
  out.rel_.assign(n * n, 0);
  auto& r = out.rel_;
  bool changed = false;
  auto set = [&](std::size_t a, std::size_t b) {
    char& cell = r[a * n + b];
    if (!cell) {
      cell = 1;
      changed = true;
    }
  };
  auto get = [&](std::size_t a, std::size_t b) { return r[a * n + b] != 0; };

  for (std::size_t a = 0; a < n; ++a) {
    set(alg.zero, a);
    set(a, a);
    set(a, alg.one);
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        int lhs = alg.plus(alg.star(k, a), alg.star(k, b));
        int rhs = alg.star(k, alg.plus(a, b));
        set(lhs, rhs);
      }

  do {
    changed = false;
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        if (get(i, k))
          for (std::size_t j = 0; j < n; ++j)
            if (get(k, j)) set(i, j);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
          std::size_t meet = alg.star(a, b);
          std::size_t join = alg.plus(a, b);
          if (get(k, a) && get(k, b)) set(k, meet);
          if (get(k, meet)) {
            set(k, a);
            set(k, b);
          }
          if (get(a, k) && get(b, k)) set(join, k);
          if (get(join, k)) {
            set(a, k);
            set(b, k);
          }
        }
  } while (changed);
  return out;
}

bool imposed_leq(const FiniteAlgebra& alg, int n, int m) {
  return ImposedOrder::saturate(alg).leq(n, m);
}

}  // namespace asd
