#include "asd/presets.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <functional>
#include <optional>
#include <map>
#include "json.hpp"
#include <sstream>

#include "asd/interval_basis.hpp"

namespace asd {

namespace {

using json = nlohmann::json;

std::vector<FinSet<int>> all_subsets(int k) {
  std::vector<FinSet<int>> out;
  for (int mask = 0; mask < (1 << k); ++mask) {
    std::vector<int> v;
    for (int i = 0; i < k; ++i)
      if (mask & (1 << i)) v.push_back(i);
    out.push_back(FinSet<int>(v));
  }
  return out;
}

FinSet<int> full_set(int k) {
  std::vector<int> v(k);
  for (int i = 0; i < k; ++i) v[i] = i;
  return FinSet<int>(v);
}

FinSet<int> intersect(const FinSet<int>& a, const FinSet<int>& b) {
  std::vector<int> v;
  for (int x : a)
    if (b.contains(x)) v.push_back(x);
  return FinSet<int>(v);
}

FiniteBasis from_lattice(std::string name, std::vector<std::string> names, int zero, int one,
                         const std::function<int(int, int)>& join,
                         const std::function<int(int, int)>& meet) {
  FiniteAlgebra alg;
  alg.names = std::move(names);
  alg.zero = zero;
  alg.one = one;
  const int n = alg.size();
  alg.plus_table.resize(n * n);
  alg.star_table.resize(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      alg.plus_table[a * n + b] = join(a, b);
      alg.star_table[a * n + b] = meet(a, b);
    }
  return FiniteBasis::order_as_waybelow(std::move(name), std::move(alg));
}

std::size_t skip_ws(std::string_view t, std::size_t pos) {
  while (pos < t.size() && t[pos] == ' ') ++pos;
  return pos;
}

FinSet<int> parse_set_at(std::string_view t, std::size_t& pos) {
  pos = skip_ws(t, pos);
  if (pos >= t.size() || t[pos] != '{') throw ParseError("expected '{'", pos);
  ++pos;
  std::vector<int> items;
  pos = skip_ws(t, pos);
  if (pos < t.size() && t[pos] == '}') {
    ++pos;
    return FinSet<int>(items);
  }
  while (true) {
    pos = skip_ws(t, pos);
    std::size_t start = pos;
    while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) ++pos;
    if (start == pos) throw ParseError("expected element", pos);
    items.push_back(std::stoi(std::string(t.substr(start, pos - start))));
    pos = skip_ws(t, pos);
    if (pos < t.size() && t[pos] == ',') {
      ++pos;
      continue;
    }
    if (pos < t.size() && t[pos] == '}') {
      ++pos;
      return FinSet<int>(items);
    }
    throw ParseError("expected ',' or '}'", pos);
  }
}

}  // namespace

std::string show_set(const FinSet<int>& s) {
  std::string out = "{";
  bool first = true;
  for (int x : s) {
    if (!first) out += ",";
    out += std::to_string(x);
    first = false;
  }
  return out + "}";
}

std::string show_dnf(const FormalDNF<int>& l) {
  std::string out = "{";
  bool first = true;
  for (const auto& s : l) {
    if (!first) out += ",";
    out += show_set(s);
    first = false;
  }
  return out + "}";
}

FinSet<int> parse_int_set(std::string_view text) {
  std::size_t pos = 0;
  auto s = parse_set_at(text, pos);
  if (skip_ws(text, pos) != text.size()) throw ParseError("trailing characters", pos);
  return s;
}

FormalDNF<int> parse_dnf(std::string_view t) {
  std::size_t pos = skip_ws(t, 0);
  if (pos >= t.size() || t[pos] != '{') throw ParseError("expected '{'", pos);
  ++pos;
  std::vector<FinSet<int>> items;
  pos = skip_ws(t, pos);
  if (pos < t.size() && t[pos] == '}') {
    ++pos;
  } else {
    while (true) {
      items.push_back(parse_set_at(t, pos));
      pos = skip_ws(t, pos);
      if (pos < t.size() && t[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < t.size() && t[pos] == '}') {
        ++pos;
        break;
      }
      throw ParseError("expected ',' or '}'", pos);
    }
  }
  if (skip_ws(t, pos) != t.size()) throw ParseError("trailing characters", pos);
  return FormalDNF<int>(items);
}

AbstractBasis<FinSet<int>> discrete_basis(int k) {
  if (k < 1 || k > 16) throw std::invalid_argument("discrete_basis: k out of range");
  using Set = FinSet<int>;
  AbstractBasis<Set> b;
  b.name = "discrete-" + std::to_string(k);
  b.algebra.zero = Set{};
  b.algebra.one = full_set(k);
  b.algebra.plus = [](const Set& x, const Set& y) { return x.unite(y); };
  b.algebra.star = [](const Set& x, const Set& y) { return intersect(x, y); };
  b.algebra.leq = [](const Set& x, const Set& y) { return x.subset_of(y); };
  b.waybelow = [](const Set& x, const Set& y) { return x.subset_of(y); };
  b.carrier = all_subsets(k);
  b.show = show_set;
  b.inhabited = [](const Set& x) { return !x.empty(); };
  b.sample = [k](std::mt19937_64& rng) {
    int mask = std::uniform_int_distribution<int>(0, (1 << k) - 1)(rng);
    std::vector<int> v;
    for (int i = 0; i < k; ++i)
      if (mask & (1 << i)) v.push_back(i);
    return Set(v);
  };
  b.perturb = [s = b.sample](const Set&, std::mt19937_64& rng) { return s(rng); };
  b.waybelow_within_order = true;
  return b;
}

AbstractBasis<FormalDNF<int>> sigma_basis(int k) {
  if (k < 1 || k > 3) throw std::invalid_argument("sigma_basis: k must be 1, 2 or 3");
  using Dnf = FormalDNF<int>;
  AbstractBasis<Dnf> b;
  b.name = "sigma-" + std::to_string(k);
  b.algebra.zero = Dnf{};
  b.algebra.one = Dnf{FinSet<int>{}};
  b.algebra.plus = [](const Dnf& x, const Dnf& y) { return dnf_plus(x, y); };
  b.algebra.star = [](const Dnf& x, const Dnf& y) { return dnf_meet(x, y); };
  b.algebra.leq = [](const Dnf& x, const Dnf& y) { return upper_order(y, x); };
  b.waybelow = [](const Dnf& x, const Dnf& y) { return upper_order(y, x); };
  auto subsets = all_subsets(k);
  std::vector<Dnf> carrier;
  const std::size_t count = std::size_t{1} << subsets.size();
  for (std::size_t mask = 0; mask < count; ++mask) {
    std::vector<FinSet<int>> v;
    for (std::size_t i = 0; i < subsets.size(); ++i)
      if (mask & (std::size_t{1} << i)) v.push_back(subsets[i]);
    carrier.push_back(Dnf(v));
  }
  b.carrier = carrier;
  b.show = show_dnf;
  b.sample = [carrier](std::mt19937_64& rng) {
    return carrier[std::uniform_int_distribution<std::size_t>(0, carrier.size() - 1)(rng)];
  };
  b.perturb = [s = b.sample](const Dnf&, std::mt19937_64& rng) { return s(rng); };
  b.waybelow_within_order = true;
  return b;
}

FiniteBasis chain_basis(int k) {
  if (k < 2) throw std::invalid_argument("chain needs at least 2 elements");
  std::vector<std::string> names;
  for (int i = 0; i < k; ++i) names.push_back(i == 0 ? "0" : i == k - 1 ? "1" : "c" + std::to_string(i));
  return from_lattice("chain-" + std::to_string(k), names, 0, k - 1,
                      [](int a, int b) { return std::max(a, b); },
                      [](int a, int b) { return std::min(a, b); });
}

FiniteBasis diamond_basis() {
  // 0, a, b, 1 with a+b = 1 and a⋆b = 0.
  auto join = [](int a, int b) {
    if (a == b) return a;
    if (a == 0) return b;
    if (b == 0) return a;
    return 3;
  };
  auto meet = [](int a, int b) {
    if (a == b) return a;
    if (a == 3) return b;
    if (b == 3) return a;
    return 0;
  };
  return from_lattice("diamond", {"0", "a", "b", "1"}, 0, 3, join, meet);
}

FiniteBasis free_dl_basis(int k) {
  if (k < 0 || k > 3) throw std::invalid_argument("free-dl: k must be between 0 and 3");
  const int inputs = 1 << k;
  std::vector<unsigned> fns;
  for (unsigned f = 0; f < (1U << inputs); ++f) {
    bool mono = true;
    for (int x = 0; x < inputs && mono; ++x)
      for (int y = 0; y < inputs && mono; ++y)
        if ((x & y) == x && ((f >> x) & 1U) && !((f >> y) & 1U)) mono = false;
    if (mono) fns.push_back(f);
  }
  std::sort(fns.begin(), fns.end(), [](unsigned a, unsigned b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  static const char* gen1[] = {"g"};
  static const char* gens[] = {"a", "b", "c"};
  std::vector<std::string> names;
  for (unsigned f : fns) {
    if (f == 0) {
      names.push_back("0");
      continue;
    }
    if (f == (1U << inputs) - 1) {
      names.push_back("1");
      continue;
    }
    std::string name;
    for (int x = 0; x < inputs; ++x) {
      if (!((f >> x) & 1U)) continue;
      bool minimal = true;
      for (int y = 0; y < inputs; ++y)
        if (y != x && (x & y) == y && ((f >> y) & 1U)) minimal = false;
      if (!minimal) continue;
      std::string term;
      for (int i = 0; i < k; ++i)
        if (x & (1 << i)) term += std::string(term.empty() ? "" : "*") + (k == 1 ? gen1[i] : gens[i]);
      name += std::string(name.empty() ? "" : "+") + term;
    }
    names.push_back(name);
  }
  auto index = [&](unsigned f) {
    return static_cast<int>(std::find(fns.begin(), fns.end(), f) - fns.begin());
  };
  return from_lattice("free-dl-" + std::to_string(k), names, index(0), index((1U << inputs) - 1),
                      [&](int a, int b) { return index(fns[a] | fns[b]); },
                      [&](int a, int b) { return index(fns[a] & fns[b]); });
}

FiniteBasis preset_basis(std::string_view name) {
  auto suffix = [&](std::string_view prefix) -> std::optional<int> {
    if (name.substr(0, prefix.size()) != prefix) return std::nullopt;
    std::string rest(name.substr(prefix.size()));
    if (rest.empty() || !std::all_of(rest.begin(), rest.end(), ::isdigit)) return std::nullopt;
    return std::stoi(rest);
  };
  if (name == "two-point") {
    auto b = free_dl_basis(0);
    b.name = "two-point";
    return b;
  }
  if (name == "diamond") return diamond_basis();
  if (name == "strict-chain-2") {
    FiniteBasis b = chain_basis(2);
    b.name = "strict-chain-2";
    b.wb = {0, 1, 0, 0};
    return b;
  }
  if (auto k = suffix("chain-")) return chain_basis(*k);
  if (auto k = suffix("free-dl-")) return free_dl_basis(*k);
  if (auto k = suffix("discrete-")) return tabulate(discrete_basis(*k));
  if (auto k = suffix("sigma-")) return tabulate(sigma_basis(*k));
  throw std::invalid_argument("unknown basis: " + std::string(name));
}

std::vector<std::string> preset_names() {
  return {"two-point", "chain-K", "diamond", "free-dl-K", "strict-chain-2", "discrete-K", "sigma-K"};
}

FiniteBasis load_finite_basis(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed basis document: ") + e.what(), e.byte);
  }
  auto need = [&](const char* key) -> const json& {
    if (!doc.is_object() || !doc.contains(key))
      throw std::invalid_argument(std::string("basis document lacks '") + key + "'");
    return doc.at(key);
  };
  FiniteAlgebra alg;
  for (const auto& n : need("carrier")) alg.names.push_back(n.get<std::string>());
  const int size = alg.size();
  if (size == 0) throw std::invalid_argument("empty carrier");
  std::map<std::string, int> idx;
  for (int i = 0; i < size; ++i)
    if (!idx.emplace(alg.names[i], i).second)
      throw std::invalid_argument("duplicate carrier name: " + alg.names[i]);
  auto lookup = [&](const json& v) {
    auto it = idx.find(v.get<std::string>());
    if (it == idx.end()) throw std::invalid_argument("unknown code: " + v.get<std::string>());
    return it->second;
  };
  alg.zero = lookup(need("zero"));
  alg.one = lookup(need("one"));
  auto table = [&](const char* key) {
    std::vector<int> t(static_cast<std::size_t>(size) * size, -1);
    for (const auto& row : need(key)) {
      if (!row.is_array() || row.size() != 3) throw std::invalid_argument(std::string(key) + ": rows are [left, right, result]");
      int a = lookup(row[0]), b = lookup(row[1]), r = lookup(row[2]);
      int& cell = t[static_cast<std::size_t>(a) * size + b];
      if (cell >= 0 && cell != r) throw std::invalid_argument(std::string(key) + ": conflicting entries");
      cell = r;
    }
    for (std::size_t i = 0; i < t.size(); ++i)
      if (t[i] < 0)
        throw std::invalid_argument(std::string(key) + " table is partial: missing (" +
                                    alg.names[i / size] + ", " + alg.names[i % size] + ")");
    return t;
  };
  alg.plus_table = table("plus");
  alg.star_table = table("star");

  std::vector<char> wb(static_cast<std::size_t>(size) * size, 0);
  const json& rule = need("waybelow");
  if (rule.is_array()) {
    for (const auto& pair : rule) {
      if (!pair.is_array() || pair.size() != 2) throw std::invalid_argument("waybelow pairs are [n, m]");
      wb[static_cast<std::size_t>(lookup(pair[0])) * size + lookup(pair[1])] = 1;
    }
  } else {
    const std::string r = rule.get<std::string>();
    auto fill = [&](auto parse, auto rel) {
      std::vector<decltype(parse(std::string_view{}))> codes;
      try {
        for (const auto& n : alg.names) codes.push_back(parse(n));
      } catch (const std::exception&) {
        throw std::invalid_argument("waybelow rule '" + r + "' does not fit this carrier");
      }
      for (int a = 0; a < size; ++a)
        for (int b = 0; b < size; ++b) wb[static_cast<std::size_t>(a) * size + b] = rel(codes[a], codes[b]);
    };
    if (r == "equality") {
      for (int a = 0; a < size; ++a) wb[static_cast<std::size_t>(a) * size + a] = 1;
    } else if (r == "imposed_order") {
      wb = ImposedOrder::saturate(alg).table();
    } else if (r == "subset") {
      fill(parse_int_set, [](const FinSet<int>& a, const FinSet<int>& b) { return a.subset_of(b); });
    } else if (r == "superset") {
      fill(parse_int_set, [](const FinSet<int>& a, const FinSet<int>& b) { return b.subset_of(a); });
    } else if (r == "upper_order") {
      fill(parse_dnf, [](const FormalDNF<int>& a, const FormalDNF<int>& b) { return upper_order(b, a); });
    } else if (r == "interval") {
      IntervalGeometry g(Domain::real_line);
      fill(parse_interval_code, [&](const IntervalCode& a, const IntervalCode& b) { return g.waybelow(a, b); });
    } else {
      throw std::invalid_argument("unknown waybelow rule: " + r);
    }
  }
  std::string name = doc.contains("name") ? doc.at("name").get<std::string>() : std::string("file");
  return FiniteBasis::with_imposed_order(name, std::move(alg), std::move(wb));
}

FiniteBasis load_finite_basis_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open basis file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return load_finite_basis(buf.str());
}

}  // namespace asd
