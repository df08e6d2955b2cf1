#include "heaplie/group.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "heaplie/sweep.hpp"

namespace heaplie {

AbelianGroup AbelianGroup::cyclic_product(std::vector<int> orders) {
  std::size_t n = 1;
  for (int o : orders) {
    require(o >= 2, ErrorKind::malformed, "cyclic factor orders must be >= 2");
    n *= static_cast<std::size_t>(o);
    require(n <= kMaxGroupOrder, ErrorKind::budget,
            "group order exceeds " + std::to_string(kMaxGroupOrder));
  }
  AbelianGroup g;
  g.n_ = n;
  g.zero_ = 0;
  g.orders_ = std::move(orders);
  g.add_.assign(n * n, 0);
  g.neg_.assign(n, 0);
  for (Elem a = 0; a < n; ++a) {
    const auto da = g.digits(a);
    std::vector<int> dn(da.size());
    for (std::size_t i = 0; i < da.size(); ++i) dn[i] = (g.orders_[i] - da[i]) % g.orders_[i];
    g.neg_[a] = g.encode(dn);
    for (Elem b = 0; b < n; ++b) {
      const auto db = g.digits(b);
      std::vector<int> ds(da.size());
      for (std::size_t i = 0; i < da.size(); ++i) ds[i] = (da[i] + db[i]) % g.orders_[i];
      g.add_[a * n + b] = g.encode(ds);
    }
  }
  return g;
}

ViolationReport AbelianGroup::validate_table(std::size_t n, std::span<const Elem> add, Elem zero) {
  require(n >= 1 && add.size() == n * n, ErrorKind::malformed, "group table must have n*n entries");
  require(zero < n, ErrorKind::malformed, "group zero out of range");
  for (Elem v : add) require(v < n, ErrorKind::malformed, "group table entry out of range");

  auto op = [&](Elem a, Elem b) { return add[a * n + b]; };
  ReportBuilder rb(SweepOptions::serial());
  rb.run(n, [&](Elem a, WitnessSink& s) {
    if (op(zero, a) != a) s.add({"g.identity", {a}, op(zero, a), a});
  });
  rb.run(n, [&](Elem a, WitnessSink& s) {
    for (Elem b = 0; b < n; ++b)
      if (op(a, b) != op(b, a) && s.add({"g.comm", {a, b}, op(a, b), op(b, a)})) return;
  });
  rb.run(n, [&](Elem a, WitnessSink& s) {
    for (Elem b = 0; b < n; ++b)
      if (op(a, b) == zero) return;
    s.add({"g.inverse", {a}, a, zero});
  });
  rb.run(n, [&](Elem a, WitnessSink& s) {
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c) {
        const Elem l = op(op(a, b), c), r = op(a, op(b, c));
        if (l != r && s.add({"g.assoc", {a, b, c}, l, r})) return;
      }
  });
  return rb.take();
}

AbelianGroup AbelianGroup::from_table(std::size_t n, std::vector<Elem> add, Elem zero) {
  require(n <= kMaxGroupOrder, ErrorKind::budget, "group order exceeds " + std::to_string(kMaxGroupOrder));
  auto report = validate_table(n, add, zero);
  if (!report.ok()) throw InvalidStructure("table is not an abelian group", std::move(report));
  AbelianGroup g;
  g.n_ = n;
  g.zero_ = zero;
  g.add_ = std::move(add);
  g.neg_.assign(n, 0);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (g.add(a, b) == zero) g.neg_[a] = b;
  return g;
}

Elem AbelianGroup::times(Elem a, long long k) const noexcept {
  const long long m = static_cast<long long>(n_);
  k %= m;
  if (k < 0) k += m;
  Elem acc = zero_, base = a;
  auto e = static_cast<unsigned long long>(k);
  while (e) {
    if (e & 1u) acc = add(acc, base);
    base = add(base, base);
    e >>= 1u;
  }
  return acc;
}

std::vector<int> AbelianGroup::digits(Elem a) const {
  std::vector<int> d(orders_.size());
  for (std::size_t i = orders_.size(); i-- > 0;) {
    d[i] = static_cast<int>(a % static_cast<Elem>(orders_[i]));
    a /= static_cast<Elem>(orders_[i]);
  }
  return d;
}

Elem AbelianGroup::encode(std::span<const int> d) const {
  Elem a = 0;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    const int o = orders_[i];
    a = a * static_cast<Elem>(o) + static_cast<Elem>(((d[i] % o) + o) % o);
  }
  return a;
}

std::vector<Elem> AbelianGroup::basis() const {
  std::vector<Elem> out;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    std::vector<int> d(orders_.size(), 0);
    d[i] = 1;
    out.push_back(encode(d));
  }
  return out;
}

int AbelianGroup::element_order(Elem a) const {
  int k = 1;
  for (Elem x = a; x != zero_; x = add(x, a)) ++k;
  return k;
}

int AbelianGroup::exponent() const {
  int e = 1;
  for (Elem a = 0; a < n_; ++a) e = std::lcm(e, element_order(a));
  return e;
}

namespace {

// Generating set plus, for every element, integer coordinates over it.
struct Presentation {
  std::vector<Elem> gens;
  std::vector<std::vector<int>> coords;
};

Presentation present(const AbelianGroup& g) {
  Presentation p;
  const std::size_t n = g.order();
  if (g.has_basis()) {
    p.gens = g.basis();
    for (Elem a = 0; a < n; ++a) p.coords.push_back(g.digits(a));
    return p;
  }
  std::vector<char> reached(n, 0);
  std::vector<std::vector<int>> coords(n);
  reached[g.zero()] = 1;
  std::vector<Elem> span{g.zero()};
  coords[g.zero()] = {};
  for (Elem cand = 0; cand < n; ++cand) {
    if (reached[cand]) continue;
    p.gens.push_back(cand);
    const std::size_t gi = p.gens.size() - 1;
    for (auto& c : coords) c.resize(p.gens.size(), 0);
    // close the span under adding multiples of the new generator
    std::vector<Elem> next;
    for (Elem s : span) {
      Elem x = s;
      int k = 0;
      do {
        if (!reached[x]) {
          reached[x] = 1;
          coords[x] = coords[s];
          coords[x][gi] = k;
          next.push_back(x);
        }
        x = g.add(x, cand);
        ++k;
      } while (x != s);
    }
    span.insert(span.end(), next.begin(), next.end());
  }
  for (auto& c : coords) c.resize(p.gens.size(), 0);
  p.coords = std::move(coords);
  return p;
}

template <class Accept>
std::vector<ElementMap> additive_maps(const AbelianGroup& g, std::size_t limit, Accept&& accept) {
  const std::size_t n = g.order();
  const auto pres = present(g);
  const std::size_t r = pres.gens.size();
  std::vector<std::vector<Elem>> choices(r);
  std::size_t total = 1;
  for (std::size_t i = 0; i < r; ++i) {
    const int oi = g.element_order(pres.gens[i]);
    for (Elem h = 0; h < n; ++h)
      if (oi % g.element_order(h) == 0) choices[i].push_back(h);
    total *= choices[i].size();
    require(total <= limit, ErrorKind::budget, "endomorphism enumeration exceeds limit");
  }
  std::vector<ElementMap> out;
  std::vector<std::size_t> idx(r, 0);
  ElementMap f(n);
  for (std::size_t t = 0; t < total; ++t) {
    for (Elem x = 0; x < n; ++x) {
      Elem y = g.zero();
      for (std::size_t i = 0; i < r; ++i) y = g.add(y, g.times(choices[i][idx[i]], pres.coords[x][i]));
      f[x] = y;
    }
    if (is_additive(g, f) && accept(f)) out.push_back(f);
    for (std::size_t i = r; i-- > 0;) {
      if (++idx[i] < choices[i].size()) break;
      idx[i] = 0;
    }
  }
  return out;
}

}  // namespace

std::vector<ElementMap> AbelianGroup::endomorphisms(std::size_t limit) const {
  return additive_maps(*this, limit, [](const ElementMap&) { return true; });
}

std::vector<ElementMap> AbelianGroup::automorphisms(std::size_t limit) const {
  return additive_maps(*this, limit, [&](const ElementMap& f) {
    std::vector<char> hit(n_, 0);
    for (Elem y : f) hit[y] = 1;
    return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
  });
}

std::string AbelianGroup::describe() const {
  if (orders_.empty()) return n_ == 1 ? "Z1" : "table(" + std::to_string(n_) + ")";
  std::ostringstream os;
  for (std::size_t i = 0; i < orders_.size(); ++i) os << (i ? "x" : "") << 'Z' << orders_[i];
  return os.str();
}

AbelianGroup parse_group_spec(const std::string& spec) {
  std::vector<int> orders;
  std::size_t i = 0;
  auto fail = [&] { throw Error(ErrorKind::malformed, "bad group spec '" + spec + "' (expected e.g. Z2xZ2)"); };
  while (i < spec.size()) {
    if (std::toupper(static_cast<unsigned char>(spec[i])) != 'Z') fail();
    ++i;
    std::size_t j = i;
    while (j < spec.size() && std::isdigit(static_cast<unsigned char>(spec[j]))) ++j;
    if (j == i || j - i > 4) fail();
    const int o = std::stoi(spec.substr(i, j - i));
    if (o < 1) fail();
    if (o > 1) orders.push_back(o);
    i = j;
    if (i < spec.size()) {
      const char sep = static_cast<char>(std::tolower(static_cast<unsigned char>(spec[i])));
      if (sep != 'x' && sep != '+') fail();
      ++i;
      if (i == spec.size()) fail();
    }
  }
  if (spec.empty()) fail();
  return AbelianGroup::cyclic_product(std::move(orders));
}

bool is_additive(const AbelianGroup& g, std::span<const Elem> f) {
  const std::size_t n = g.order();
  if (f.size() != n) return false;
  for (Elem a = 0; a < n; ++a)
    for (Elem b = a; b < n; ++b)
      if (f[g.add(a, b)] != g.add(f[a], f[b])) return false;
  return true;
}

}  // namespace heaplie
