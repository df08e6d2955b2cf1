#include <algorithm>

#include "heaplie/search.hpp"

namespace heaplie {

namespace {

constexpr int kUnknown = -1;

class CellSolver {
 public:
  CellSolver(const AbelianGroup& g, bool rings_only, std::size_t node_limit)
      : g_(g), n_(g.order()), rings_(rings_only), node_limit_(node_limit) {}

  std::vector<std::vector<Elem>> run() {
    std::vector<int> m(n_ * n_, kUnknown);
    if (rings_) {
      const int z = static_cast<int>(g_.zero());
      for (Elem x = 0; x < n_; ++x) m[g_.zero() * n_ + x] = m[x * n_ + g_.zero()] = z;
    }
    if (settle(m)) descend(m);
    std::sort(found_.begin(), found_.end());
    return std::move(found_);
  }

 private:
  void descend(std::vector<int>& m) {
    require(++nodes_ <= node_limit_, ErrorKind::budget, "propagated search exceeded its node limit");
    const auto it = std::find(m.begin(), m.end(), kUnknown);
    if (it == m.end()) {
      found_.emplace_back(m.begin(), m.end());
      return;
    }
    const auto cell = static_cast<std::size_t>(it - m.begin());
    for (Elem v = 0; v < n_; ++v) {
      std::vector<int> next = m;
      next[cell] = static_cast<int>(v);
      if (settle(next)) descend(next);
    }
  }

  // Sets `slot` to v if unknown; false on a clash with a known value.
  static bool force(int& slot, Elem v, bool& changed) {
    if (slot == kUnknown) {
      slot = static_cast<int>(v);
      changed = true;
      return true;
    }
    return slot == static_cast<int>(v);
  }

  // Fixpoint of the affine rules f(x - y + z) = f(x) - f(y) + f(z) on every row
  // and column, and of associativity. False on contradiction.
  bool settle(std::vector<int>& m) const {
    for (bool changed = true; changed;) {
      changed = false;
      for (int dir = 0; dir < 2; ++dir)
        for (Elem line = 0; line < n_; ++line) {
          auto at = [&](Elem x) -> int& { return dir == 0 ? m[line * n_ + x] : m[x * n_ + line]; };
          std::vector<Elem> known;
          for (Elem x = 0; x < n_; ++x)
            if (at(x) != kUnknown) known.push_back(x);
          for (Elem x : known)
            for (Elem y : known)
              for (Elem z : known) {
                const Elem t = g_.add(g_.sub(x, y), z);
                const Elem v = g_.add(g_.sub(static_cast<Elem>(at(x)), static_cast<Elem>(at(y))),
                                      static_cast<Elem>(at(z)));
                if (!force(at(t), v, changed)) return false;
              }
        }
      for (Elem a = 0; a < n_; ++a)
        for (Elem b = 0; b < n_; ++b) {
          const int ab = m[a * n_ + b];
          for (Elem c = 0; c < n_; ++c) {
            const int bc = m[b * n_ + c];
            if (ab == kUnknown || bc == kUnknown) continue;
            int& left = m[static_cast<Elem>(ab) * n_ + c];
            int& right = m[a * n_ + static_cast<Elem>(bc)];
            if (left != kUnknown) {
              if (!force(right, static_cast<Elem>(left), changed)) return false;
            } else if (right != kUnknown) {
              force(left, static_cast<Elem>(right), changed);
            }
          }
        }
    }
    return true;
  }

  const AbelianGroup& g_;
  std::size_t n_;
  bool rings_;
  std::size_t node_limit_;
  std::size_t nodes_ = 0;
  std::vector<std::vector<Elem>> found_;
};

}  // namespace

std::vector<std::vector<Elem>> truss_tables_by_propagation(const AbelianGroup& g, bool rings_only,
                                                           std::size_t node_limit) {
  require(g.order() <= 9, ErrorKind::budget, "propagated truss search is limited to order 9");
  return CellSolver(g, rings_only, node_limit).run();
}

}  // namespace heaplie
