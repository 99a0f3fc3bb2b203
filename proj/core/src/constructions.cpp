#include "cyclesys/constructions.hpp"

#include <algorithm>

#include "cyclesys/errors.hpp"

namespace cyclesys {

namespace {

std::vector<ElementSubset> fundamental_circuits(const Matroid& m, ElementSubset basis) {
  std::vector<ElementSubset> out;
  for (int e : m.ground() - basis) out.push_back(fundamental_circuit(m, basis, e));
  return out;
}

ElementSubset relabel(const Matroid& from, ElementSubset s, const Matroid& to) {
  ElementSubset out;
  for (int e : s) out.insert(to.universe().index_of(from.universe().label(e)));
  return out;
}

}  // namespace

CycleSystem cone_circuit_system(const MultiGraph& g, const std::string& prefix) {
  for (const auto& e : g.edges()) {
    if (e.u == e.v) throw DomainError("cone construction does not accept the loop '" + e.label + "'");
  }
  const MultiGraph coned = cone(g, prefix);
  Matroid m = Matroid::graphic(coned);
  std::vector<ElementSubset> cycles;
  for (const auto& e : g.edges()) {
    cycles.push_back(m.subset({prefix + std::to_string(e.u), e.label, prefix + std::to_string(e.v)}));
  }
  try {
    return CycleSystem(std::move(m), std::move(cycles));
  } catch (const InvalidSystemError& err) {
    throw InternalError(std::string("cone construction failed verification: ") + err.what());
  }
}

CycleSystem cographic_circuit_system(const MultiGraph& g, int root) {
  if (root < 0 || root >= g.vertex_count()) throw DomainError("root vertex out of range");
  if (!g.is_connected()) throw DomainError("cographic construction needs a connected graph");
  Matroid m = dual(Matroid::graphic(g));
  std::vector<ElementSubset> cycles;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (v == root) continue;
    ElementSubset cut;
    for (int e = 0; e < g.edge_count(); ++e) {
      const auto& edge = g.edge(e);
      if ((edge.u == v) != (edge.v == v)) cut.insert(e);
    }
    cycles.push_back(cut);
  }
  return CycleSystem(std::move(m), std::move(cycles));
}

CycleSystem two_sum_cycle_system(const CycleSystem& m, const CycleSystem& n, std::string_view p) {
  const auto pm = m.matroid().universe().find(p);
  const auto pn = n.matroid().universe().find(p);
  if (!pm || !pn) throw PreconditionError("element '" + std::string(p) + "' must lie in both matroids");
  const int i = unique_container(m.cycles(), *pm);
  if (i < 0) throw PreconditionError("'" + std::string(p) + "' is not in the unique union of the first system");
  if (std::none_of(n.cycles().begin(), n.cycles().end(), [&](ElementSubset d) { return d.contains(*pn); })) {
    throw PreconditionError("'" + std::string(p) + "' lies in no cycle of the second system");
  }

  Matroid sum = two_sum(m.matroid(), n.matroid(), p);
  const ElementSubset ci = relabel(m.matroid(), m.cycle(i).without(*pm), sum);
  std::vector<ElementSubset> cycles;
  for (int j = 0; j < m.size(); ++j) {
    if (j != i) cycles.push_back(relabel(m.matroid(), m.cycle(j), sum));
  }
  for (auto d : n.cycles()) {
    if (d.contains(*pn)) {
      cycles.push_back(ci | relabel(n.matroid(), d.without(*pn), sum));
    } else {
      cycles.push_back(relabel(n.matroid(), d, sum));
    }
  }
  try {
    return CycleSystem(std::move(sum), std::move(cycles));
  } catch (const InvalidSystemError& err) {
    throw InternalError(std::string("two-sum system failed verification: ") + err.what());
  }
}

std::optional<ElementSubset> fundamental_basis(const CycleSystem& cs) {
  const Matroid& m = cs.matroid();
  auto wanted = cs.cycles();
  sort_canonical(wanted);
  std::optional<ElementSubset> found;
  for_each_basis(m, [&](ElementSubset b) {
    auto fc = fundamental_circuits(m, b);
    sort_canonical(fc);
    if (fc == wanted) {
      found = b;
      return false;
    }
    return true;
  });
  return found;
}

bool is_fundamental(const CycleSystem& cs) { return fundamental_basis(cs).has_value(); }

std::optional<CycleSystem> find_fundamental_circuit_system(const Matroid& m) {
  std::optional<CycleSystem> found;
  for_each_basis(m, [&](ElementSubset b) {
    auto fc = fundamental_circuits(m, b);
    if (has_unique_union_property(m, fc)) {
      found = CycleSystem::trusted(m, std::move(fc));
      return false;
    }
    return true;
  });
  return found;
}

}  // namespace cyclesys
