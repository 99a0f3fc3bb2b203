#include "cyclesys/bijection.hpp"

#include <algorithm>
#include <sstream>

#include "cyclesys/errors.hpp"

namespace cyclesys {

namespace {

IndexMask all_indices(std::size_t g) { return g == 0 ? 0 : (~IndexMask{0} >> (64 - g)); }

struct StallSignal {
  DCStall stall;
};

class TreeBuilder {
 public:
  TreeBuilder(const GroundOrdering& xi, bool strict) : xi_(xi), strict_(strict) {}

  std::vector<DCNode> build(DCNode root) {
    nodes_.clear();
    nodes_.push_back(std::move(root));
    expand(0);
    return std::move(nodes_);
  }

 private:
  void stall(int id, IndexMask sigma, const std::string& reason) {
    const DCNode& node = nodes_[static_cast<std::size_t>(id)];
    IndexMask root_sigma = 0;
    for (int k : ElementSubset{sigma}) root_sigma |= IndexMask{1} << node.origin[static_cast<std::size_t>(k)];
    if (strict_) throw InternalError("DC-tree construction stalled: " + reason);
    throw StallSignal{DCStall{id, node.minor.ground(), root_sigma, reason}};
  }

  void expand(int id) {
    {
      const DCNode& node = nodes_[static_cast<std::size_t>(id)];
      const auto lb = loops_and_bridges(node.minor);
      if ((lb.loops | lb.bridges) == node.minor.ground()) return;
    }
    const DCNode& node = nodes_[static_cast<std::size_t>(id)];
    IndexMask sigma = all_indices(node.cycles.size());
    // Loops met while looking for the branch element. Each one is deleted
    // together with its container, so the children never see either again.
    ElementSubset skipped_loops;
    int e = -1, i = -1;
    while (true) {
      if (sigma == 0) stall(id, sigma, "every candidate container was dropped");
      const ElementSubset u = unique_union(node.cycles, sigma);
      if (u.empty()) stall(id, sigma, "unique union is empty");
      e = xi_.max_of(u);
      i = unique_container(node.cycles, e, sigma);
      if (node.minor.rank_unchecked(ElementSubset::singleton(e)) != 0) break;
      skipped_loops.insert(e);
      sigma &= ~(IndexMask{1} << i);
    }
    if (node.minor.rank_unchecked(node.minor.ground().without(e)) < node.minor.rank()) {
      stall(id, sigma, "branch element " + node.minor.universe().label(e) + " is a bridge");
    }

    const ElementSubset single = ElementSubset::singleton(e);
    const Matroid base = skipped_loops.empty() ? node.minor : deletion(node.minor, skipped_loops);
    DCNode left{deletion(base, single), {}, {}, node.contracted, node.counts};
    DCNode right{contraction(base, single), {}, {}, node.contracted.with(e), node.counts};
    for (std::size_t k = 0; k < node.cycles.size(); ++k) {
      if (!((sigma >> k) & 1U)) continue;
      right.cycles.push_back(node.cycles[k].without(e));
      right.origin.push_back(node.origin[k]);
      if (static_cast<int>(k) == i) continue;
      left.cycles.push_back(node.cycles[k]);
      left.origin.push_back(node.origin[k]);
    }
    const int container = node.origin[static_cast<std::size_t>(i)];
    ++right.counts[static_cast<std::size_t>(container)];

    left.parent = right.parent = id;
    nodes_[static_cast<std::size_t>(id)].pivot = e;
    nodes_[static_cast<std::size_t>(id)].container = container;
    // `node` may dangle after these push_backs.
    const int left_id = static_cast<int>(nodes_.size());
    nodes_.push_back(std::move(left));
    const int right_id = static_cast<int>(nodes_.size());
    nodes_.push_back(std::move(right));
    nodes_[static_cast<std::size_t>(id)].left = left_id;
    nodes_[static_cast<std::size_t>(id)].right = right_id;
    expand(left_id);
    expand(right_id);
  }

  const GroundOrdering& xi_;
  bool strict_;
  std::vector<DCNode> nodes_;
};

DCNode make_root(const Matroid& m, std::vector<ElementSubset> cycles) {
  DCNode root{m, std::move(cycles), {}, ElementSubset{}, {}};
  root.origin.resize(root.cycles.size());
  for (std::size_t k = 0; k < root.origin.size(); ++k) root.origin[k] = static_cast<int>(k);
  root.counts.assign(root.cycles.size(), 0);
  return root;
}

}  // namespace

GroundOrdering GroundOrdering::natural(const Matroid& m) {
  GroundOrdering xi;
  xi.position_.fill(-1);
  for (int e : m.ground()) {
    xi.position_[static_cast<std::size_t>(e)] = static_cast<int>(xi.elements_.size());
    xi.elements_.push_back(e);
  }
  return xi;
}

GroundOrdering GroundOrdering::from_labels(const Matroid& m, std::span<const std::string> labels) {
  GroundOrdering xi;
  xi.position_.fill(-1);
  ElementSubset seen;
  for (const auto& label : labels) {
    const int e = m.universe().index_of(label);
    if (!m.ground().contains(e)) throw DomainError("ordering names '" + label + "', which is not in the ground set");
    if (seen.contains(e)) throw DomainError("ordering repeats '" + label + "'");
    seen.insert(e);
    xi.position_[static_cast<std::size_t>(e)] = static_cast<int>(xi.elements_.size());
    xi.elements_.push_back(e);
  }
  if (seen != m.ground()) throw DomainError("ordering misses " + m.format(m.ground() - seen));
  return xi;
}

int GroundOrdering::max_of(ElementSubset s) const {
  int best = -1;
  for (int e : s) {
    if (best < 0 || position(e) > position(best)) best = e;
  }
  return best;
}

CoparkingFunction basis_to_coparking(const CycleSystem& cs, const GroundOrdering& xi, ElementSubset basis) {
  if (!is_basis(cs.matroid(), basis)) throw DomainError(cs.matroid().format(basis) + " is not a basis");
  std::vector<ElementSubset> c = cs.cycles();
  CoparkingFunction a(c.size(), 0);
  IndexMask sigma = all_indices(c.size());
  while (sigma != 0) {
    const ElementSubset u = unique_union(c, sigma);
    if (u.empty()) throw InternalError("basis-to-coparking reached an empty unique union");
    const int e = xi.max_of(u);
    const int i = unique_container(c, e, sigma);
    if (!basis.contains(e)) {
      sigma &= ~(IndexMask{1} << i);
    } else {
      ++a[static_cast<std::size_t>(i)];
      c[static_cast<std::size_t>(i)].erase(e);
    }
  }
  return a;
}

ElementSubset coparking_to_basis(const CycleSystem& cs, const GroundOrdering& xi, std::span<const int> a_in) {
  if (!verify(cs, a_in)) throw DomainError(format_vector(a_in) + " is not a coparking function");
  std::vector<ElementSubset> c = cs.cycles();
  CoparkingFunction a(a_in.begin(), a_in.end());
  ElementSubset basis = cs.matroid().ground();
  IndexMask sigma = all_indices(c.size());
  while (sigma != 0) {
    const ElementSubset u = unique_union(c, sigma);
    if (u.empty()) throw InternalError("coparking-to-basis reached an empty unique union");
    const int e = xi.max_of(u);
    const int i = unique_container(c, e, sigma);
    if (--a[static_cast<std::size_t>(i)] < 0) {
      sigma &= ~(IndexMask{1} << i);
      basis.erase(e);
    } else {
      c[static_cast<std::size_t>(i)].erase(e);
    }
  }
  return basis;
}

std::vector<DCLeaf> DCTree::leaves() const {
  std::vector<DCLeaf> out;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    const int id = stack.back();
    stack.pop_back();
    const DCNode& node = nodes_[static_cast<std::size_t>(id)];
    if (node.is_leaf()) {
      out.push_back({loops_and_bridges(node.minor).bridges | node.contracted, node.counts, id});
    } else {
      stack.push_back(node.right);
      stack.push_back(node.left);
    }
  }
  return out;
}

std::string DCTree::to_dot() const {
  const Matroid& m = root().minor;
  std::ostringstream out;
  out << "digraph dctree {\n  node [shape=box];\n";
  for (std::size_t id = 0; id < nodes_.size(); ++id) {
    const DCNode& node = nodes_[id];
    out << "  n" << id << " [label=\"" << m.format(node.minor.ground());
    if (node.is_leaf()) {
      out << "\\nB=" << m.format(loops_and_bridges(node.minor).bridges | node.contracted)
          << "\\na=" << format_vector(node.counts);
    }
    out << "\"];\n";
  }
  for (std::size_t id = 0; id < nodes_.size(); ++id) {
    const DCNode& node = nodes_[id];
    if (node.is_leaf()) continue;
    out << "  n" << id << " -> n" << node.left << ";\n";
    out << "  n" << id << " -> n" << node.right << " [label=\"" << m.universe().label(node.pivot) << ":C_"
        << node.container + 1 << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string DCTree::to_tsv() const {
  const Matroid& m = root().minor;
  std::string out;
  for (const auto& leaf : leaves()) {
    out += m.format(leaf.basis) + '\t' + format_vector(leaf.a) + '\t' + std::to_string(degree(leaf.a)) + '\n';
  }
  return out;
}

DCTree build_dc_tree(const CycleSystem& cs, const GroundOrdering& xi) {
  return DCTree(TreeBuilder(xi, true).build(make_root(cs.matroid(), cs.cycles())));
}

GeneralizedDCResult generalized_dc_tree(const Matroid& m, std::vector<ElementSubset> cycles,
                                        const GroundOrdering& xi) {
  if (static_cast<int>(cycles.size()) != m.corank()) {
    throw DomainError("expected " + std::to_string(m.corank()) + " cycles, got " + std::to_string(cycles.size()));
  }
  for (auto c : cycles) {
    if (!c.is_subset_of(m.ground())) throw DomainError("cycle " + m.format(c) + " leaves the ground set");
  }
  GeneralizedDCResult result;
  try {
    DCTree tree(TreeBuilder(xi, false).build(make_root(m, std::move(cycles))));
    for (const auto& leaf : tree.leaves()) result.vectors.push_back(leaf.a);
    result.tree = std::move(tree);
  } catch (const StallSignal& signal) {
    result.stall = signal.stall;
  }
  return result;
}

}  // namespace cyclesys
