#include "hyperset/bisimulation.hpp"

#include <algorithm>
#include <cstddef>
#include <limits>

namespace hyperset {
namespace {

constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

// Partition refinement state. Fine blocks ("Q") are contiguous ranges of
// `elems_`; coarse blocks ("X") are linked lists of fine blocks. Every X
// block with two or more fine blocks is on the compound stack. Each edge
// points at a shared counter holding the number of edges from its source
// into the X block containing its target.
class Refiner {
 public:
  explicit Refiner(const Digraph& g) : n_(static_cast<std::uint32_t>(g.size())) {
    std::vector<std::uint32_t> indeg(n_, 0);
    std::uint32_t m = 0;
    for (NodeId v = 0; v < n_; ++v) {
      for (NodeId c : g.children(v)) {
        ++indeg[c];
        ++m;
      }
    }
    src_.resize(m);
    edge_count_.resize(m);
    in_begin_.assign(n_ + 1, 0);
    for (NodeId v = 0; v < n_; ++v) in_begin_[v + 1] = in_begin_[v] + indeg[v];
    in_edges_.resize(m);
    std::vector<std::uint32_t> fill(in_begin_.begin(), in_begin_.end() - 1);

    std::uint32_t e = 0;
    std::vector<NodeId> has_children;
    for (NodeId v = 0; v < n_; ++v) {
      const auto kids = g.children(v);
      if (kids.empty()) continue;
      has_children.push_back(v);
      const auto rec = static_cast<std::uint32_t>(counts_.size());
      counts_.push_back(static_cast<std::uint32_t>(kids.size()));
      for (NodeId c : kids) {
        src_[e] = v;
        edge_count_[e] = rec;
        in_edges_[fill[c]++] = e;
        ++e;
      }
    }

    elems_.resize(n_);
    pos_.resize(n_);
    block_of_.assign(n_, 0);
    for (std::uint32_t i = 0; i < n_; ++i) elems_[i] = pos_[i] = i;
    blocks_.push_back({0, n_, 0, 0, kNone, kNone});
    xblocks_.push_back({0, 1, false});

    cnt_b_.assign(n_, 0);
    rec_s_.assign(n_, 0);
    new_rec_.assign(n_, 0);

    split(has_children);
  }

  void run() {
    std::vector<NodeId> b_nodes;
    std::vector<NodeId> pre_b;
    std::vector<NodeId> only_b;
    while (!compound_.empty()) {
      const std::uint32_t s = compound_.back();
      if (xblocks_[s].count < 2) {
        xblocks_[s].queued = false;
        compound_.pop_back();
        continue;
      }
      // Smaller of the first two fine blocks: |B| <= |S| / 2.
      const std::uint32_t b1 = xblocks_[s].first;
      const std::uint32_t b2 = blocks_[b1].next;
      const std::uint32_t b = block_size(b1) <= block_size(b2) ? b1 : b2;
      unlink(b);
      if (xblocks_[s].count < 2) {
        xblocks_[s].queued = false;
        compound_.pop_back();
      }
      const auto xb = static_cast<std::uint32_t>(xblocks_.size());
      xblocks_.push_back({kNone, 0, false});
      link(b, xb);

      b_nodes.assign(elems_.begin() + blocks_[b].begin, elems_.begin() + blocks_[b].end);

      pre_b.clear();
      for (NodeId y : b_nodes) {
        for (std::uint32_t k = in_begin_[y]; k < in_begin_[y + 1]; ++k) {
          const std::uint32_t e = in_edges_[k];
          const NodeId x = src_[e];
          if (cnt_b_[x] == 0) {
            pre_b.push_back(x);
            rec_s_[x] = edge_count_[e];
          }
          ++cnt_b_[x];
        }
      }
      split(pre_b);

      // Nodes whose every edge into S lands in B.
      only_b.clear();
      for (NodeId x : pre_b) {
        if (counts_[rec_s_[x]] == cnt_b_[x]) only_b.push_back(x);
      }
      split(only_b);

      for (NodeId x : pre_b) {
        new_rec_[x] = static_cast<std::uint32_t>(counts_.size());
        counts_.push_back(cnt_b_[x]);
      }
      for (NodeId y : b_nodes) {
        for (std::uint32_t k = in_begin_[y]; k < in_begin_[y + 1]; ++k) {
          const std::uint32_t e = in_edges_[k];
          --counts_[edge_count_[e]];
          edge_count_[e] = new_rec_[src_[e]];
        }
      }
      for (NodeId x : pre_b) cnt_b_[x] = 0;
    }
  }

  std::vector<std::uint32_t> classes() const {
    std::vector<std::uint32_t> renumber(blocks_.size(), kNone);
    std::vector<std::uint32_t> out(n_);
    std::uint32_t next = 0;
    for (NodeId v = 0; v < n_; ++v) {
      auto& id = renumber[block_of_[v]];
      if (id == kNone) id = next++;
      out[v] = id;
    }
    return out;
  }

 private:
  struct Block {
    std::uint32_t begin;
    std::uint32_t end;
    std::uint32_t marked;
    std::uint32_t xblock;
    std::uint32_t prev;
    std::uint32_t next;
  };
  struct XBlock {
    std::uint32_t first;
    std::uint32_t count;
    bool queued;
  };

  std::uint32_t block_size(std::uint32_t b) const { return blocks_[b].end - blocks_[b].begin; }

  void unlink(std::uint32_t b) {
    Block& blk = blocks_[b];
    XBlock& x = xblocks_[blk.xblock];
    if (blk.prev != kNone) blocks_[blk.prev].next = blk.next;
    else x.first = blk.next;
    if (blk.next != kNone) blocks_[blk.next].prev = blk.prev;
    blk.prev = blk.next = kNone;
    --x.count;
  }

  void link(std::uint32_t b, std::uint32_t xb) {
    Block& blk = blocks_[b];
    XBlock& x = xblocks_[xb];
    blk.xblock = xb;
    blk.prev = kNone;
    blk.next = x.first;
    if (x.first != kNone) blocks_[x.first].prev = b;
    x.first = b;
    if (++x.count >= 2 && !x.queued) {
      x.queued = true;
      compound_.push_back(xb);
    }
  }

  // Splits every fine block D into D ∩ nodes and D \ nodes. `nodes` must
  // not contain repeats.
  void split(const std::vector<NodeId>& nodes) {
    touched_.clear();
    for (NodeId v : nodes) {
      const std::uint32_t b = block_of_[v];
      Block& blk = blocks_[b];
      if (blk.marked == 0) touched_.push_back(b);
      const std::uint32_t p = pos_[v];
      const std::uint32_t q = blk.begin + blk.marked;
      const NodeId w = elems_[q];
      elems_[q] = v;
      elems_[p] = w;
      pos_[v] = q;
      pos_[w] = p;
      ++blk.marked;
    }
    for (std::uint32_t b : touched_) {
      const std::uint32_t marked = blocks_[b].marked;
      blocks_[b].marked = 0;
      if (marked == block_size(b)) continue;
      const auto nb = static_cast<std::uint32_t>(blocks_.size());
      const std::uint32_t begin = blocks_[b].begin;
      blocks_.push_back({begin, begin + marked, 0, kNone, kNone, kNone});
      blocks_[b].begin = begin + marked;
      for (std::uint32_t i = begin; i < begin + marked; ++i) block_of_[elems_[i]] = nb;
      link(nb, blocks_[b].xblock);
    }
  }

  std::uint32_t n_;
  std::vector<NodeId> src_;
  std::vector<std::uint32_t> edge_count_;
  std::vector<std::uint32_t> in_begin_;
  std::vector<std::uint32_t> in_edges_;
  std::vector<std::uint32_t> counts_;

  std::vector<NodeId> elems_;
  std::vector<std::uint32_t> pos_;
  std::vector<std::uint32_t> block_of_;
  std::vector<Block> blocks_;
  std::vector<XBlock> xblocks_;
  std::vector<std::uint32_t> compound_;

  std::vector<std::uint32_t> cnt_b_;
  std::vector<std::uint32_t> rec_s_;
  std::vector<std::uint32_t> new_rec_;
  std::vector<std::uint32_t> touched_;
};

}  // namespace

std::vector<std::uint32_t> bisimulation_classes(const Digraph& g) {
  if (g.size() == 0) return {};
  Refiner r(g);
  r.run();
  return r.classes();
}

Digraph quotient(const Digraph& g, const std::vector<std::uint32_t>& classes) {
  std::uint32_t k = 0;
  for (auto c : classes) k = std::max(k, c + 1);
  Digraph q(k);
  for (NodeId v = 0; v < g.size(); ++v) {
    for (NodeId c : g.children(v)) q.add_edge(classes[v], classes[c]);
  }
  q.normalize();
  return q;
}

}  // namespace hyperset
