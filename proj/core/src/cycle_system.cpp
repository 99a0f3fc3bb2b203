#include "cyclesys/cycle_system.hpp"

#include "cyclesys/errors.hpp"

namespace cyclesys {

namespace {

std::string sigma_string(IndexMask sigma) {
  std::string out = "{";
  bool first = true;
  for (int i : ElementSubset{sigma}) {
    if (!first) out += ',';
    out += std::to_string(i + 1);
    first = false;
  }
  return out + "}";
}

}  // namespace

ElementSubset unique_union(std::span<const ElementSubset> family) {
  ElementSubset once, twice;
  for (auto a : family) {
    twice |= once & a;
    once = (once - a) | (a - once - twice);
  }
  return once;
}

ElementSubset unique_union(std::span<const ElementSubset> family, IndexMask sigma) {
  ElementSubset once, twice;
  for (int i : ElementSubset{sigma}) {
    const ElementSubset a = family[static_cast<std::size_t>(i)];
    twice |= once & a;
    once = (once - a) | (a - once - twice);
  }
  return once;
}

int unique_container(std::span<const ElementSubset> family, int e, IndexMask sigma) {
  int found = -1;
  for (std::size_t i = 0; i < family.size() && i < 64; ++i) {
    if (!((sigma >> i) & 1U) || !family[i].contains(e)) continue;
    if (found >= 0) return -1;
    found = static_cast<int>(i);
  }
  return found;
}

bool is_cycle(const Matroid& m, ElementSubset k) {
  const int r = m.rank(k);
  for (int e : k) {
    if (m.rank_unchecked(k.without(e)) < r) return false;
  }
  return true;
}

std::optional<IndexMask> independent_unique_union(const Matroid& m, std::span<const ElementSubset> family) {
  if (family.size() >= 63) throw DomainError("families are limited to 62 members");
  const IndexMask end = IndexMask{1} << family.size();
  for (IndexMask sigma = 1; sigma < end; ++sigma) {
    if (m.independent_unchecked(unique_union(family, sigma))) return sigma;
  }
  return std::nullopt;
}

bool has_unique_union_property(const Matroid& m, std::span<const ElementSubset> family) {
  for (auto c : family) {
    if (!c.is_subset_of(m.ground())) return false;
  }
  return !independent_unique_union(m, family).has_value();
}

std::optional<SystemDefect> cycle_system_defect(const Matroid& m, std::span<const ElementSubset> family) {
  if (static_cast<int>(family.size()) != m.corank()) {
    return SystemDefect{"expected " + std::to_string(m.corank()) + " cycles (the corank), got " +
                        std::to_string(family.size())};
  }
  for (std::size_t i = 0; i < family.size(); ++i) {
    const auto c = family[i];
    if (!c.is_subset_of(m.ground())) {
      return SystemDefect{"cycle " + std::to_string(i + 1) + " uses elements outside the ground set"};
    }
    if (c.empty() || !is_cycle(m, c)) {
      return SystemDefect{"member " + std::to_string(i + 1) + " " + m.format(c) + " is not a cycle"};
    }
  }
  if (auto sigma = independent_unique_union(m, family)) {
    return SystemDefect{"unique union over sigma=" + sigma_string(*sigma) + " is independent: " +
                            m.format(unique_union(family, *sigma)),
                        *sigma};
  }
  return std::nullopt;
}

bool is_cycle_system(const Matroid& m, std::span<const ElementSubset> family) {
  return !cycle_system_defect(m, family).has_value();
}

CycleSystem::CycleSystem(Matroid m, std::vector<ElementSubset> cycles)
    : matroid_(std::move(m)), cycles_(std::move(cycles)) {
  if (auto defect = cycle_system_defect(matroid_, cycles_)) {
    throw InvalidSystemError("not a cycle system: " + defect->reason, defect->sigma);
  }
}

CycleSystem::CycleSystem(Matroid m, std::vector<ElementSubset> cycles, Trusted)
    : matroid_(std::move(m)), cycles_(std::move(cycles)) {}

CycleSystem CycleSystem::trusted(Matroid m, std::vector<ElementSubset> cycles) {
  return CycleSystem(std::move(m), std::move(cycles), Trusted{});
}

std::string CycleSystem::format() const {
  std::string out;
  for (std::size_t i = 0; i < cycles_.size(); ++i) {
    if (i) out += ' ';
    out += matroid_.format(cycles_[i]);
  }
  return out;
}

DeletedSystem delete_transform(const CycleSystem& cs, int e) {
  const int i = unique_container(cs.cycles(), e);
  if (i < 0 || !cs.matroid().ground().contains(e)) {
    throw PreconditionError("element " + cs.matroid().format(ElementSubset::singleton(e)) +
                            " is not in the unique union of the system");
  }
  std::vector<ElementSubset> cycles;
  cycles.reserve(cs.cycles().size());
  for (int j = 0; j < cs.size(); ++j) {
    if (j != i) cycles.push_back(cs.cycle(j));
  }
  return {CycleSystem::trusted(deletion(cs.matroid(), ElementSubset::singleton(e)), std::move(cycles)), i};
}

CycleSystem contract_transform(const CycleSystem& cs, int e) {
  const Matroid& m = cs.matroid();
  if (!m.ground().contains(e)) throw DomainError("element #" + std::to_string(e) + " is not in the ground set");
  if (m.rank_unchecked(ElementSubset::singleton(e)) == 0) {
    throw PreconditionError("cannot contract the loop " + m.universe().label(e));
  }
  std::vector<ElementSubset> cycles;
  cycles.reserve(cs.cycles().size());
  for (auto c : cs.cycles()) cycles.push_back(c.without(e));
  return CycleSystem::trusted(contraction(m, ElementSubset::singleton(e)), std::move(cycles));
}

}  // namespace cyclesys
