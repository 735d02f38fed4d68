#include "lpi/path_search.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace lpi {
namespace {

// Depth-first extension over a flat bitset copy of the adjacency. Both
// phases prune with the reachable-vertex bound: from head h with used set U,
// no extension can add more edges than the number of vertices reachable
// from h in G - U.
class PathSearcher {
 public:
  PathSearcher(const Graph& g, const Deadline& deadline)
      : n_(g.order()), words_((n_ + 63) / 64), deadline_(deadline) {
    adj_.assign(n_ * words_, 0);
    for (Vertex v = 0; v < n_; ++v) {
      const auto row = g.neighbors(v).words();
      std::copy(row.begin(), row.end(), adj_.begin() + static_cast<std::ptrdiff_t>(v * words_));
    }
    used_.assign(words_, 0);
    seen_.assign(words_, 0);
    frontier_.assign(words_, 0);
    next_.assign(words_, 0);
  }

  std::size_t longest(std::size_t stop_at) {
    best_ = 0;
    done_ = stop_at == 0;
    for (Vertex s = 0; s < n_ && !done_; ++s) {
      set_used(s);
      extend_best(s, 0, stop_at);
      clear_used(s);
    }
    return best_;
  }

  void collect(std::size_t target, std::size_t cap, std::vector<Path>& out, bool& truncated) {
    target_ = target;
    cap_ = cap;
    out_ = &out;
    truncated_ = false;
    for (Vertex s = 0; s < n_ && !truncated_; ++s) {
      stack_.assign(1, s);
      set_used(s);
      extend_collect(s, 0);
      clear_used(s);
    }
    truncated = truncated_;
  }

 private:
  bool used(Vertex v) const { return ((used_[v >> 6] >> (v & 63)) & 1U) != 0; }
  void set_used(Vertex v) { used_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void clear_used(Vertex v) { used_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  const std::uint64_t* row(Vertex v) const { return adj_.data() + v * words_; }

  void tick() {
    if ((++nodes_ & 0xFFF) == 0) deadline_.check("longest path search");
  }

  // Vertices reachable from head in G - used, head excluded.
  std::size_t reach(Vertex head) {
    std::fill(seen_.begin(), seen_.end(), 0);
    std::fill(frontier_.begin(), frontier_.end(), 0);
    frontier_[head >> 6] |= std::uint64_t{1} << (head & 63);
    std::size_t count = 0;
    for (;;) {
      std::fill(next_.begin(), next_.end(), 0);
      for (std::size_t i = 0; i < words_; ++i) {
        for (auto w = frontier_[i]; w != 0; w &= w - 1) {
          const auto v = static_cast<Vertex>(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
          const auto* r = row(v);
          for (std::size_t j = 0; j < words_; ++j) next_[j] |= r[j];
        }
      }
      bool grew = false;
      for (std::size_t j = 0; j < words_; ++j) {
        next_[j] &= ~used_[j] & ~seen_[j];
        seen_[j] |= next_[j];
        count += static_cast<std::size_t>(std::popcount(next_[j]));
        grew = grew || next_[j] != 0;
      }
      if (!grew) return count;
      frontier_.swap(next_);
    }
  }

  template <class Fn>
  void for_each_free_neighbor(Vertex head, Fn&& fn) {
    const auto* r = row(head);
    for (std::size_t i = 0; i < words_; ++i) {
      for (auto w = r[i] & ~used_[i]; w != 0; w &= w - 1) {
        const auto v = static_cast<Vertex>(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        // used_ can change during the callback's recursion but is restored
        // before control returns here.
        if (!fn(v)) return;
      }
    }
  }

  void extend_best(Vertex head, std::size_t len, std::size_t stop_at) {
    tick();
    if (len > best_) {
      best_ = len;
      if (best_ >= stop_at) {
        done_ = true;
        return;
      }
    }
    if (len + reach(head) <= best_) return;
    for_each_free_neighbor(head, [&](Vertex w) {
      set_used(w);
      extend_best(w, len + 1, stop_at);
      clear_used(w);
      return !done_;
    });
  }

  void extend_collect(Vertex head, std::size_t len) {
    tick();
    if (len == target_) {
      if (len == 0 || stack_.front() < head) record();
      return;
    }
    if (len + reach(head) < target_) return;
    for_each_free_neighbor(head, [&](Vertex w) {
      set_used(w);
      stack_.push_back(w);
      extend_collect(w, len + 1);
      stack_.pop_back();
      clear_used(w);
      return !truncated_;
    });
  }

  void record() {
    if (out_->size() == cap_) {
      truncated_ = true;
      return;
    }
    out_->emplace_back(stack_);
  }

  std::size_t n_;
  std::size_t words_;
  const Deadline& deadline_;
  std::vector<std::uint64_t> adj_;
  std::vector<std::uint64_t> used_, seen_, frontier_, next_;
  std::vector<Vertex> stack_;
  std::uint64_t nodes_ = 0;

  std::size_t best_ = 0;
  bool done_ = false;

  std::size_t target_ = 0;
  std::size_t cap_ = 0;
  std::vector<Path>* out_ = nullptr;
  bool truncated_ = false;
};

std::size_t largest_component_order(const Graph& g) {
  VertexSet remaining = VertexSet::full(g.order());
  std::size_t largest = 0;
  while (!remaining.empty()) {
    const auto start = remaining.to_vector().front();
    const auto dist = distances_from_set(g, VertexSet::of(g.order(), {start}));
    std::size_t size = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
      if (dist.reachable(v)) {
        ++size;
        remaining.erase(v);
      }
    }
    largest = std::max(largest, size);
  }
  return largest;
}

void oracle_extend(const Graph& g, std::vector<Vertex>& stack, std::vector<bool>& used,
                   std::vector<Path>& out) {
  if (stack.size() == 1 || stack.front() < stack.back()) out.emplace_back(stack);
  for (Vertex w = 0; w < g.order(); ++w) {
    if (used[w] || !g.adjacent(stack.back(), w)) continue;
    used[w] = true;
    stack.push_back(w);
    oracle_extend(g, stack, used, out);
    stack.pop_back();
    used[w] = false;
  }
}

}  // namespace

std::size_t longest_path_length(const Graph& g, const Deadline& deadline) {
  PathSearcher searcher(g, deadline);
  return searcher.longest(largest_component_order(g) - 1);
}

LongestPathSet enumerate_longest_paths(const Graph& g, std::size_t cap, const Deadline& deadline) {
  if (cap == 0) throw InvalidArgument("enumeration cap must be at least 1");
  LongestPathSet result;
  PathSearcher searcher(g, deadline);
  result.length = searcher.longest(largest_component_order(g) - 1);
  searcher.collect(result.length, cap, result.paths, result.truncated);
  std::sort(result.paths.begin(), result.paths.end());
  return result;
}

std::vector<Path> enumerate_all_simple_paths_oracle(const Graph& g) {
  std::vector<Path> out;
  std::vector<bool> used(g.order(), false);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.order(); ++s) {
    used[s] = true;
    stack.assign(1, s);
    oracle_extend(g, stack, used, out);
    used[s] = false;
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool has_hamiltonian_path_dp(const Graph& g) {
  const std::size_t n = g.order();
  if (n > 24) throw InvalidArgument("Hamiltonian path DP limited to n <= 24");
  std::vector<std::uint32_t> nbr(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    g.neighbors(v).for_each([&](Vertex w) { nbr[v] |= std::uint32_t{1} << w; });
  }
  // ends[mask]: vertices v such that some path visits exactly `mask` and ends at v.
  std::vector<std::uint32_t> ends(std::size_t{1} << n, 0);
  for (Vertex v = 0; v < n; ++v) ends[std::size_t{1} << v] = std::uint32_t{1} << v;
  const std::uint32_t full = static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1);
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    for (auto e = ends[mask]; e != 0; e &= e - 1) {
      const auto v = static_cast<std::size_t>(std::countr_zero(e));
      for (auto next = nbr[v] & ~mask; next != 0; next &= next - 1) {
        const auto w = static_cast<std::size_t>(std::countr_zero(next));
        ends[mask | (std::uint32_t{1} << w)] |= std::uint32_t{1} << w;
      }
    }
    if (mask == full) break;
  }
  return ends[full] != 0;
}

bool has_hamiltonian_path(const Graph& g, const Deadline& deadline) {
  const std::size_t n = g.order();
  if (n == 1) return true;
  if (!is_connected(g)) return false;
  std::size_t leaves = 0;
  for (Vertex v = 0; v < n; ++v) leaves += g.degree(v) == 1 ? 1 : 0;
  if (leaves > 2) return false;
  if (n <= 20) return has_hamiltonian_path_dp(g);
  PathSearcher searcher(g, deadline);
  return searcher.longest(n - 1) == n - 1;
}

}  // namespace lpi
