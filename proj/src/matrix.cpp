#include "asd/matrix.hpp"

#include <algorithm>

namespace asd {

namespace {

void require_small(const FiniteBasis& b) {
  if (b.size() > NucleusEngine::kReducedMax)
    throw std::invalid_argument(b.name + ": carrier too large for subset tables");
}

SigmaNPoint down_set(const FiniteBasis& b, int m) {
  SigmaNPoint out = 0;
  for (int k = 0; k < b.size(); ++k)
    if (b.waybelow(k, m)) out |= 1U << k;
  return out;
}

}  // namespace

Matrix<int, int> matrix_of_hom(std::shared_ptr<const FiniteBasis> src, std::shared_ptr<const FiniteBasis> tgt,
                               const HomTable& h) {
  require_small(*src);
  require_small(*tgt);
  if (h.size() != (std::size_t{1} << tgt->size()))
    throw std::invalid_argument("matrix_of_hom: H table must list every subset of " + tgt->name);
  const int ns = src->size(), nt = tgt->size();
  std::vector<char> table(static_cast<std::size_t>(ns) * nt, 0);
  for (int m = 0; m < nt; ++m) {
    SigmaNPoint image = h[down_set(*tgt, m)];
    for (int n = 0; n < ns; ++n)
      for (int n2 = 0; n2 < ns; ++n2)
        if (src->waybelow(n, n2) && ((image >> n2) & 1U)) table[n * nt + m] = 1;
  }
  Matrix<int, int> r;
  r.name = "hom(" + src->name + "->" + tgt->name + ")";
  r.source = std::make_shared<const AbstractBasis<int>>(to_abstract(src));
  r.target = std::make_shared<const AbstractBasis<int>>(to_abstract(tgt));
  r.rel = [table, nt](int n, int m) { return from_bool(table[n * nt + m] != 0); };
  r.forward = [table, nt](int n, int) {
    std::vector<int> out;
    for (int m = 0; m < nt; ++m)
      if (table[n * nt + m]) out.push_back(m);
    return out;
  };
  return r;
}

HomTable hom_of_matrix(const Matrix<int, int>& rho, const FiniteBasis& src, const FiniteBasis& tgt) {
  require_small(src);
  require_small(tgt);
  const std::size_t subsets = std::size_t{1} << tgt.size();
  std::vector<SigmaNPoint> per_m(tgt.size(), 0);
  for (int m = 0; m < tgt.size(); ++m)
    for (int n = 0; n < src.size(); ++n)
      if (rho(n, m) == Verdict::yes) per_m[m] |= down_set(src, n);
  HomTable h(subsets, 0);
  for (std::size_t s = 0; s < subsets; ++s)
    for (int m = 0; m < tgt.size(); ++m)
      if ((s >> m) & 1U) h[s] |= per_m[m];
  return h;
}

Matrix<int, int> pair_list_matrix(std::string name, std::shared_ptr<const FiniteBasis> src,
                                  std::shared_ptr<const FiniteBasis> tgt, std::vector<std::pair<int, int>> pairs) {
  const int nt = tgt->size();
  std::vector<char> table(static_cast<std::size_t>(src->size()) * nt, 0);
  for (auto [n, m] : pairs) {
    if (n < 0 || n >= src->size() || m < 0 || m >= nt) throw std::invalid_argument(name + ": pair out of range");
    table[n * nt + m] = 1;
  }
  Matrix<int, int> r;
  r.name = std::move(name);
  r.source = std::make_shared<const AbstractBasis<int>>(to_abstract(src));
  r.target = std::make_shared<const AbstractBasis<int>>(to_abstract(tgt));
  r.rel = [table, nt](int n, int m) { return from_bool(table[n * nt + m] != 0); };
  r.forward = [table, nt](int n, int) {
    std::vector<int> out;
    for (int m = 0; m < nt; ++m)
      if (table[n * nt + m]) out.push_back(m);
    return out;
  };
  return r;
}

}  // namespace asd
