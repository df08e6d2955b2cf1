#include <algorithm>
#include <exception>
#include <limits>
#include <numeric>
#include <stdexcept>

#include <omp.h>

#include "heaplie/search.hpp"

namespace heaplie {

SearchKind parse_search_kind(const std::string& name) {
  if (name == "truss") return SearchKind::truss;
  if (name == "ring") return SearchKind::ring;
  if (name == "lie-truss" || name == "lie_truss") return SearchKind::lie_truss;
  if (name == "derivation" || name == "derivations") return SearchKind::derivation;
  throw Error(ErrorKind::malformed, "unknown search kind '" + name + "' (truss, ring, lie-truss, derivation)");
}

std::string search_kind_name(SearchKind k) {
  switch (k) {
    case SearchKind::truss:
      return "truss";
    case SearchKind::ring:
      return "ring";
    case SearchKind::lie_truss:
      return "lie-truss";
    case SearchKind::derivation:
      return "derivation";
  }
  return "?";
}

namespace {

// Runs fn(i, out) for i in [0, count) in parallel chunks and concatenates the
// per-chunk outputs in index order. The first exception (by chunk) is rethrown.
template <class T, class Fn>
std::vector<T> parallel_collect(std::size_t count, int workers, Fn&& fn) {
  const std::size_t chunks = std::min<std::size_t>(count, 4096);
  std::vector<std::vector<T>> parts(chunks);
  std::vector<std::exception_ptr> errors(chunks);
  const int threads = std::max(workers, 1);
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (std::ptrdiff_t c = 0; c < static_cast<std::ptrdiff_t>(chunks); ++c) {
    const std::size_t lo = count * static_cast<std::size_t>(c) / chunks;
    const std::size_t hi = count * static_cast<std::size_t>(c + 1) / chunks;
    try {
      for (std::size_t i = lo; i < hi; ++i) fn(i, parts[static_cast<std::size_t>(c)]);
    } catch (...) {
      errors[static_cast<std::size_t>(c)] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<T> out;
  for (auto& p : parts)
    for (auto& x : p) out.push_back(std::move(x));
  return out;
}

// Multilinear forms on a cyclic product, fixed by their values on basis tuples.
// A value v is admissible on a tuple when gcd(orders of the tuple) * v = 0.
class Coordinates {
 public:
  explicit Coordinates(const AbelianGroup& g) : g_(g), n_(g.order()), r_(g.orders().size()), basis_(g.basis()) {
    require(g.has_basis(), ErrorKind::malformed, "structured search needs a cyclic-product group");
    digits_.resize(n_);
    for (Elem x = 0; x < n_; ++x) digits_[x] = g.digits(x);
  }

  std::size_t rank() const { return r_; }
  std::size_t size() const { return n_; }
  Elem e(std::size_t i) const { return basis_[i]; }
  int digit(Elem x, std::size_t i) const { return digits_[x][i]; }

  std::vector<Elem> admissible(std::initializer_list<std::size_t> slots) const {
    int d = 0;
    for (auto s : slots) d = std::gcd(d, g_.orders()[s]);
    std::vector<Elem> out;
    for (Elem v = 0; v < n_; ++v)
      if (g_.times(v, d) == g_.zero()) out.push_back(v);
    return out;
  }

  // sum over i,j of a_i b_j vals[i*r + j]
  std::vector<Elem> bilinear_table(const std::vector<Elem>& vals) const {
    std::vector<Elem> t(n_ * n_);
    for (Elem a = 0; a < n_; ++a)
      for (Elem b = 0; b < n_; ++b) {
        Elem acc = g_.zero();
        for (std::size_t i = 0; i < r_; ++i) {
          const int ai = digits_[a][i];
          if (!ai) continue;
          for (std::size_t j = 0; j < r_; ++j) {
            const long long k = static_cast<long long>(ai) * digits_[b][j];
            if (k) acc = g_.add(acc, g_.times(vals[i * r_ + j], k));
          }
        }
        t[a * n_ + b] = acc;
      }
    return t;
  }

 private:
  const AbelianGroup& g_;
  std::size_t n_, r_;
  std::vector<Elem> basis_;
  std::vector<std::vector<int>> digits_;
};

// Mixed-radix odometer over independent choice lists.
std::size_t product_size(const std::vector<std::vector<Elem>>& choices, std::size_t budget, bool allow_large) {
  std::size_t total = 1;
  for (const auto& c : choices) {
    if (c.empty()) return 0;
    if (total > std::numeric_limits<std::size_t>::max() / c.size())
      throw Error(ErrorKind::budget, "search space overflows");
    total *= c.size();
    if (!allow_large && total > budget)
      throw Error(ErrorKind::budget, "search space exceeds " + std::to_string(budget) +
                                         " candidates; pass --allow-large to run it anyway");
  }
  return total;
}

std::vector<Elem> decode(const std::vector<std::vector<Elem>>& choices, std::size_t idx) {
  std::vector<Elem> out(choices.size());
  for (std::size_t i = choices.size(); i-- > 0;) {
    out[i] = choices[i][idx % choices[i].size()];
    idx /= choices[i].size();
  }
  return out;
}

template <class S, class Table>
Enumeration<S> finish(std::vector<S> found, const SearchSpec& spec, int arity, Table&& table_of) {
  const std::size_t n = spec.group.order();
  const auto autos = heap_automorphisms(spec.group);
  std::vector<CanonicalForm> forms(found.size());
  const int threads = std::max(spec.workers, 1);
#pragma omp parallel for schedule(dynamic, 16) num_threads(threads)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(found.size()); ++i)
    forms[static_cast<std::size_t>(i)] = canonical_form(table_of(found[static_cast<std::size_t>(i)]), n, arity, autos);

  std::vector<std::size_t> order(found.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    if (forms[x] != forms[y]) return forms[x] < forms[y];
    return table_of(found[x]) < table_of(found[y]);
  });

  Enumeration<S> out;
  out.total = found.size();
  const CanonicalForm* last = nullptr;
  for (std::size_t i : order) {
    const bool fresh = last == nullptr || *last != forms[i];
    if (fresh) ++out.classes;
    last = &forms[i];
    if (spec.up_to_iso && !fresh) continue;
    if (spec.limit && out.structures.size() >= *spec.limit) {
      out.truncated = true;
      continue;
    }
    out.structures.push_back(found[i]);
  }
  return out;
}

void check_order(const SearchSpec& spec, std::size_t max_n, const char* what) {
  require(spec.workers >= 1, ErrorKind::malformed, "workers must be at least 1");
  if (!spec.allow_large)
    require(spec.group.order() <= max_n, ErrorKind::budget,
            std::string(what) + " search is limited to groups of order " + std::to_string(max_n) + "; got " +
                spec.group.describe());
}

std::vector<std::vector<Elem>> structured_truss_tables(const SearchSpec& spec, bool rings_only) {
  const AbelianGroup& g = spec.group;
  const Coordinates co(g);
  const std::size_t n = co.size(), r = co.rank();
  if (n == 1) return {{0}};

  std::vector<std::vector<Elem>> choices;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) choices.push_back(co.admissible({i, j}));
  const std::size_t total = product_size(choices, kSearchBudget, spec.allow_large);
  const auto ends = rings_only ? std::vector<ElementMap>{} : g.endomorphisms();
  if (!rings_only && !spec.allow_large)
    require(ends.size() * ends.size() <= kSearchBudget, ErrorKind::budget, "too many endomorphism pairs");

  std::vector<Elem> frame{g.zero()};
  for (std::size_t i = 0; i < r; ++i) frame.push_back(co.e(i));

  return parallel_collect<std::vector<Elem>>(total, spec.workers, [&](std::size_t idx, auto& out) {
    const auto B = co.bilinear_table(decode(choices, idx));
    auto b = [&](Elem x, Elem y) { return B[x * n + y]; };
    // The trilinear part of associativity: B is itself associative.
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j)
        for (std::size_t k = 0; k < r; ++k)
          if (b(b(co.e(i), co.e(j)), co.e(k)) != b(co.e(i), b(co.e(j), co.e(k)))) return;
    if (rings_only) {
      out.push_back(B);
      return;
    }
    // Bilinear parts: L(B(a,b)) = B(a,Lb), B(Rb,c) = R(B(b,c)), B(La,c) = B(a,Rc).
    std::vector<const ElementMap*> Ls, Rs;
    for (const auto& f : ends) {
      bool okL = true, okR = true;
      for (std::size_t i = 0; i < r && (okL || okR); ++i)
        for (std::size_t j = 0; j < r; ++j) {
          const Elem x = co.e(i), y = co.e(j);
          if (f[b(x, y)] != b(x, f[y])) okL = false;
          if (b(f[x], y) != f[b(x, y)]) okR = false;
        }
      if (okL) Ls.push_back(&f);
      if (okR) Rs.push_back(&f);
    }
    for (const auto* Lp : Ls)
      for (const auto* Rp : Rs) {
        const auto& L = *Lp;
        const auto& R = *Rp;
        bool ok = true;
        for (std::size_t i = 0; i < r && ok; ++i) {
          const Elem x = co.e(i);
          if (L[R[x]] != R[L[x]]) ok = false;
          for (std::size_t j = 0; j < r && ok; ++j)
            if (b(L[x], co.e(j)) != b(x, R[co.e(j)])) ok = false;
        }
        if (!ok) continue;
        // Linear and constant parts: LLa = B(a,k) + La, B(k,c) + Rc = RRc, Lk = Rk.
        for (Elem k = 0; k < n; ++k) {
          if (L[k] != R[k]) continue;
          bool okk = true;
          for (std::size_t i = 0; i < r && okk; ++i) {
            const Elem x = co.e(i);
            if (L[L[x]] != g.add(b(x, k), L[x]) || g.add(b(k, x), R[x]) != R[R[x]]) okk = false;
          }
          if (!okk) continue;
          std::vector<Elem> mul(n * n);
          for (Elem x = 0; x < n; ++x)
            for (Elem y = 0; y < n; ++y) mul[x * n + y] = g.add(g.add(b(x, y), L[x]), g.add(R[y], k));
          auto m = [&](Elem x, Elem y) { return mul[x * n + y]; };
          for (Elem x : frame)
            for (Elem y : frame)
              for (Elem z : frame)
                if (m(m(x, y), z) != m(x, m(y, z)))
                  throw std::logic_error("truss parametrisation produced a non-associative table");
          out.push_back(std::move(mul));
        }
      }
  });
}

Enumeration<TrussStructure> truss_like(const SearchSpec& spec, bool rings_only) {
  check_order(spec, 9, rings_only ? "ring" : "truss");
  auto tables = structured_truss_tables(spec, rings_only);
  const FiniteHeap heap = heap_from_group(spec.group);
  std::vector<TrussStructure> found;
  found.reserve(tables.size());
  for (auto& t : tables) found.push_back(TrussStructure{heap, std::move(t)});
  return finish(std::move(found), spec, 2, [](const TrussStructure& t) -> const std::vector<Elem>& { return t.mul; });
}

}  // namespace

Enumeration<TrussStructure> enumerate_trusses(const SearchSpec& spec) { return truss_like(spec, false); }

Enumeration<TrussStructure> enumerate_rings(const SearchSpec& spec) { return truss_like(spec, true); }

Enumeration<LieTernary> enumerate_lie_brackets(const SearchSpec& spec) {
  check_order(spec, 8, "Lie bracket");
  const AbelianGroup& g = spec.group;
  const Coordinates co(g);
  const std::size_t n = co.size(), r = co.rank();
  const FiniteHeap heap = heap_from_group(g);

  // Slot-affine brackets meeting {a,b,a} = b and antisymmetry have the form
  //   {a,b,c} = T(a,b,c) + B(a,b) - B(c,b) + C(a,c) + P(a) + b - P(c)
  // with T, C alternating in a and c, B bilinear and P additive.
  struct Slot {
    std::size_t i, j, k;
  };
  std::vector<Slot> t_slots, c_slots;
  std::vector<std::vector<Elem>> choices;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = i + 1; k < r; ++k)
      for (std::size_t j = 0; j < r; ++j) {
        t_slots.push_back({i, j, k});
        choices.push_back(co.admissible({i, j, k}));
      }
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) choices.push_back(co.admissible({i, j}));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = i + 1; k < r; ++k) {
      c_slots.push_back({i, 0, k});
      choices.push_back(co.admissible({i, k}));
    }
  const auto ends = g.endomorphisms();
  std::vector<Elem> end_index(ends.size());
  std::iota(end_index.begin(), end_index.end(), 0);
  choices.push_back(end_index);
  const std::size_t total = product_size(choices, kSearchBudget, spec.allow_large);

  std::vector<Elem> frame{g.zero()};
  for (std::size_t i = 0; i < r; ++i) frame.push_back(co.e(i));

  auto found = parallel_collect<LieTernary>(total, spec.workers, [&](std::size_t idx, auto& out) {
    const auto vals = decode(choices, idx);
    std::size_t at = 0;
    const std::vector<Elem> tv(vals.begin(), vals.begin() + static_cast<std::ptrdiff_t>(t_slots.size()));
    at += t_slots.size();
    const std::vector<Elem> bv(vals.begin() + static_cast<std::ptrdiff_t>(at),
                               vals.begin() + static_cast<std::ptrdiff_t>(at + r * r));
    at += r * r;
    const std::vector<Elem> cv(vals.begin() + static_cast<std::ptrdiff_t>(at),
                               vals.begin() + static_cast<std::ptrdiff_t>(at + c_slots.size()));
    at += c_slots.size();
    const ElementMap& P = ends[vals[at]];
    const auto B = co.bilinear_table(bv);

    std::vector<Elem> br(n * n * n);
    for (Elem a = 0; a < n; ++a)
      for (Elem c = 0; c < n; ++c) {
        Elem ac = g.sub(P[a], P[c]);
        for (std::size_t s = 0; s < c_slots.size(); ++s) {
          const auto& sl = c_slots[s];
          const long long w = static_cast<long long>(co.digit(a, sl.i)) * co.digit(c, sl.k) -
                              static_cast<long long>(co.digit(a, sl.k)) * co.digit(c, sl.i);
          if (w) ac = g.add(ac, g.times(cv[s], w));
        }
        for (Elem b = 0; b < n; ++b) {
          Elem v = g.add(ac, g.add(b, g.sub(B[a * n + b], B[c * n + b])));
          for (std::size_t s = 0; s < t_slots.size(); ++s) {
            const auto& sl = t_slots[s];
            const long long w = (static_cast<long long>(co.digit(a, sl.i)) * co.digit(c, sl.k) -
                                 static_cast<long long>(co.digit(a, sl.k)) * co.digit(c, sl.i)) *
                                co.digit(b, sl.j);
            if (w) v = g.add(v, g.times(tv[s], w));
          }
          br[(a * n + b) * n + c] = v;
        }
      }
    auto L = [&](Elem a, Elem b, Elem c) { return br[(a * n + b) * n + c]; };
    // Jacobi is affine in a, b, c for each fixed o: test it on the frame first.
    for (Elem o = 0; o < n; ++o)
      for (Elem a : frame)
        for (Elem b : frame)
          for (Elem c : frame) {
            const Elem lhs = L(L(a, o, b), o, c);
            const Elem rhs = g.add(g.sub(g.add(g.sub(L(o, o, a), L(L(b, o, c), o, a)), L(o, o, b)),
                                         L(L(c, o, a), o, b)),
                                   L(o, o, c));
            if (lhs != rhs) return;
          }
    LieTernary lie{heap, std::nullopt, std::move(br)};
    if (!validate_lie_truss(lie, SweepOptions::serial()).ok())
      throw std::logic_error("bracket parametrisation passed the frame test but fails validation");
    out.push_back(std::move(lie));
  });
  return finish(std::move(found), spec, 3, [](const LieTernary& l) -> const std::vector<Elem>& { return l.bracket; });
}

std::vector<ElementMap> enumerate_derivations(const TrussStructure& t, std::optional<std::size_t> limit) {
  const AbelianGroup& g = t.heap.group();
  const std::size_t n = g.order();
  require(n <= 64, ErrorKind::budget, "derivation search is limited to carriers of at most 64 points");
  const auto ends = g.endomorphisms();
  require(ends.size() * n <= kSearchBudget, ErrorKind::budget, "too many affine self-maps to search");
  std::vector<ElementMap> out;
  for (const auto& e : ends)
    for (Elem s = 0; s < n; ++s) {
      ElementMap d(n);
      for (Elem x = 0; x < n; ++x) d[x] = g.add(e[x], s);
      if (validate_derivation(d, t, SweepOptions::serial()).ok()) out.push_back(std::move(d));
    }
  std::sort(out.begin(), out.end());
  if (limit && out.size() > *limit) out.resize(*limit);
  return out;
}

std::vector<WeakNotStrong> search_weak_not_strong(const SearchSpec& spec) {
  SearchSpec all = spec;
  all.limit.reset();
  const auto brackets = enumerate_lie_brackets(all);
  std::vector<WeakNotStrong> out;
  for (const auto& l : brackets.structures) {
    const auto rep = validate_strong_jacobi(l);
    if (!rep.ok()) out.push_back({l, rep.violations.front()});
  }
  return out;
}

}  // namespace heaplie
