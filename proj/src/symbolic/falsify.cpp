#include "heaplie/symbolic/falsify.hpp"

#include <map>
#include <random>

#include "heaplie/search.hpp"

namespace heaplie::symbolic {

namespace {

std::vector<NamedTruss> build_pool() {
  std::vector<NamedTruss> pool;
  for (const char* spec : {"Z2", "Z3", "Z4", "Z2xZ2"}) {
    SearchSpec s;
    s.group = parse_group_spec(spec);
    const auto all = enumerate_trusses(s);
    for (std::size_t i = 0; i < all.structures.size(); ++i)
      pool.push_back({std::string(spec) + "#" + std::to_string(i), all.structures[i]});
  }
  for (int n = 5; n <= 8; ++n) {
    const auto g = AbelianGroup::cyclic_product({n});
    std::vector<Elem> ring(n * n), sum(n * n), left(n * n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        ring[a * n + b] = static_cast<Elem>(a * b % n);
        sum[a * n + b] = static_cast<Elem>((a + b) % n);
        left[a * n + b] = static_cast<Elem>(a);
      }
    const std::string name = "Z" + std::to_string(n);
    pool.push_back({name + " ring", TrussStructure::make(heap_from_group(g), ring)});
    pool.push_back({name + " a+b", TrussStructure::make(heap_from_group(g), sum)});
    pool.push_back({name + " left-zero", TrussStructure::make(heap_from_group(g), left)});
  }
  pool.push_back({"UT2(F2)", upper_triangular_f2()});
  return pool;
}

}  // namespace

const std::vector<NamedTruss>& default_model_pool() {
  static const std::vector<NamedTruss> pool = build_pool();
  return pool;
}

std::optional<Counterexample> random_falsify(const Expr& lhs, const Expr& rhs, std::size_t samples,
                                             std::uint64_t seed, const std::vector<NamedTruss>* pool) {
  std::set<std::string> names = lhs.variables();
  for (const auto& v : rhs.variables()) names.insert(v);
  require(names.size() <= 8, ErrorKind::malformed, "random falsification takes at most 8 variables");
  const auto& models = pool ? *pool : default_model_pool();
  require(!models.empty(), ErrorKind::malformed, "empty model pool");

  // Sample a carrier group first, then a model on it, so that the many
  // trusses on Z2xZ2 do not crowd out the odd-order carriers.
  std::map<std::string, std::vector<std::size_t>> families;
  for (std::size_t i = 0; i < models.size(); ++i) families[models[i].truss.heap.group().describe()].push_back(i);
  std::vector<const std::vector<std::size_t>*> family_list;
  for (const auto& [name, members] : families) family_list.push_back(&members);

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick_family(0, family_list.size() - 1);
  for (std::size_t s = 0; s < samples; ++s) {
    const auto& members = *family_list[pick_family(rng)];
    const auto& m = models[members[std::uniform_int_distribution<std::size_t>(0, members.size() - 1)(rng)]];
    std::uniform_int_distribution<Elem> value(0, static_cast<Elem>(m.truss.size() - 1));
    Assignment env;
    for (const auto& v : names) env[v] = value(rng);
    const Elem l = evaluate(lhs, m.truss, env), r = evaluate(rhs, m.truss, env);
    if (l != r) return Counterexample{m.name, m.truss, std::move(env), l, r};
  }
  return std::nullopt;
}

}  // namespace heaplie::symbolic
