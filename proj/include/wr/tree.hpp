#pragma once

// Rooted ball V_n of a Cayley tree, stored in breadth-first order.
// The root has `root_degree` direct successors (k for the recursion
// picture, k+1 when the root stands for a bulk vertex of the
// (k+1)-regular tree); every other non-leaf vertex has exactly k.

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace wr {

class TreeIndex {
 public:
  TreeIndex(int k, int depth, int root_degree)
      : k_(k), depth_(depth), root_degree_(root_degree) {
    if (k < 1) throw std::invalid_argument("TreeIndex: k must be >= 1");
    if (depth < 0) throw std::invalid_argument("TreeIndex: depth must be >= 0");
    if (root_degree < 0)
      throw std::invalid_argument("TreeIndex: root_degree must be >= 0");
    shell_begin_.push_back(0);
    shell_begin_.push_back(1);
    std::int64_t shell = (depth >= 1) ? root_degree : 0;
    std::int64_t total = 1;
    for (int m = 1; m <= depth; ++m) {
      total += shell;
      shell_begin_.push_back(total);
      shell *= k;
      if (total > (std::int64_t{1} << 40))
        throw std::invalid_argument("TreeIndex: ball too large");
    }
    parent_.assign(static_cast<std::size_t>(total), -1);
    child_begin_.assign(static_cast<std::size_t>(total) + 1, 0);
    std::int64_t next = 1;
    for (std::int64_t v = 0; v < total; ++v) {
      child_begin_[static_cast<std::size_t>(v)] = next;
      const int nc = num_children(v);
      for (int c = 0; c < nc; ++c)
        parent_[static_cast<std::size_t>(next + c)] = v;
      next += nc;
    }
    child_begin_[static_cast<std::size_t>(total)] = next;
  }

  int k() const { return k_; }
  int depth() const { return depth_; }
  int root_degree() const { return root_degree_; }
  std::int64_t num_vertices() const { return shell_begin_.back(); }

  // Shell W_m = vertices at distance m from the root.
  std::int64_t shell_begin(int m) const { return shell_begin_.at(m); }
  std::int64_t shell_end(int m) const { return shell_begin_.at(m + 1); }
  std::int64_t shell_size(int m) const {
    return shell_end(m) - shell_begin(m);
  }

  int level_of(std::int64_t v) const {
    int m = 0;
    while (shell_end(m) <= v) ++m;
    return m;
  }

  std::int64_t parent(std::int64_t v) const {
    return parent_[static_cast<std::size_t>(v)];
  }

  int num_children(std::int64_t v) const {
    if (level_of(v) >= depth_) return 0;
    return (v == 0) ? root_degree_ : k_;
  }

  // Direct successors S(v) as a contiguous id range [first, last).
  std::int64_t child_first(std::int64_t v) const {
    return child_begin_[static_cast<std::size_t>(v)];
  }
  std::int64_t child_last(std::int64_t v) const {
    return child_begin_[static_cast<std::size_t>(v) + 1];
  }

  bool is_leaf(std::int64_t v) const { return num_children(v) == 0; }

 private:
  int k_;
  int depth_;
  int root_degree_;
  std::vector<std::int64_t> shell_begin_;
  std::vector<std::int64_t> parent_;
  std::vector<std::int64_t> child_begin_;
};

}  // namespace wr
