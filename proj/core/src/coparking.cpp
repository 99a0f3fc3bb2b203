#include "cyclesys/coparking.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "cyclesys/errors.hpp"

namespace cyclesys {

namespace {

void check_vector(std::span<const ElementSubset> cycles, std::span<const int> a) {
  if (a.size() != cycles.size()) {
    throw DomainError("vector has length " + std::to_string(a.size()) + ", the system has " +
                      std::to_string(cycles.size()) + " cycles");
  }
  if (cycles.size() > 62) throw DomainError("systems are limited to 62 cycles");
  for (int x : a) {
    if (x < 0) throw DomainError("coparking vectors have non-negative entries");
  }
}

bool canonical_vector_less(const CoparkingFunction& x, const CoparkingFunction& y) {
  const int dx = degree(x), dy = degree(y);
  if (dx != dy) return dx < dy;
  return x < y;
}

bool dominated_by(const CoparkingFunction& x, const CoparkingFunction& y) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] > y[i]) return false;
  }
  return true;
}

}  // namespace

int degree(std::span<const int> a) { return std::accumulate(a.begin(), a.end(), 0); }

VerifyResult verify_with_choice(std::span<const ElementSubset> cycles, std::span<const int> a,
                                const std::function<int(IndexMask)>& choose) {
  check_vector(cycles, a);
  VerifyResult result;
  IndexMask sigma = cycles.empty() ? 0 : (~IndexMask{0} >> (64 - cycles.size()));
  while (sigma != 0) {
    const ElementSubset u = unique_union(cycles, sigma);
    IndexMask eligible = 0;
    for (int i : ElementSubset{sigma}) {
      if (a[static_cast<std::size_t>(i)] < (cycles[static_cast<std::size_t>(i)] & u).size()) {
        eligible |= IndexMask{1} << i;
      }
    }
    if (eligible == 0) {
      result.stuck = sigma;
      result.removal_order.clear();
      return result;
    }
    const int i = choose(eligible);
    if (!((eligible >> i) & 1U)) throw InternalError("removal choice outside the eligible set");
    sigma &= ~(IndexMask{1} << i);
    result.removal_order.push_back(i);
  }
  result.coparking = true;
  return result;
}

VerifyResult verify(std::span<const ElementSubset> cycles, std::span<const int> a) {
  return verify_with_choice(cycles, a, [](IndexMask eligible) { return ElementSubset{eligible}.min(); });
}

std::vector<CoparkingFunction> enumerate_coparking(std::span<const ElementSubset> cycles) {
  const std::size_t g = cycles.size();
  std::set<CoparkingFunction> seen;
  std::deque<CoparkingFunction> frontier;
  CoparkingFunction zero(g, 0);
  if (!verify(cycles, zero)) return {};
  seen.insert(zero);
  frontier.push_back(zero);
  while (!frontier.empty()) {
    CoparkingFunction a = std::move(frontier.front());
    frontier.pop_front();
    for (std::size_t i = 0; i < g; ++i) {
      if (a[i] + 1 >= cycles[i].size()) continue;
      ++a[i];
      if (!seen.count(a) && verify(cycles, a)) {
        seen.insert(a);
        frontier.push_back(a);
      }
      --a[i];
    }
  }
  std::vector<CoparkingFunction> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), canonical_vector_less);
  return out;
}

std::vector<std::uint64_t> degree_vector(std::span<const CoparkingFunction> set) {
  std::vector<std::uint64_t> d;
  for (const auto& a : set) {
    const auto k = static_cast<std::size_t>(degree(a));
    if (d.size() <= k) d.resize(k + 1, 0);
    ++d[k];
  }
  return d;
}

std::vector<std::uint64_t> degree_vector(const CycleSystem& cs) {
  const auto set = enumerate_coparking(cs);
  return degree_vector(set);
}

std::vector<CoparkingFunction> maximal_elements(std::span<const CoparkingFunction> set) {
  std::vector<CoparkingFunction> out;
  for (const auto& a : set) {
    bool maximal = true;
    for (const auto& b : set) {
      if (a != b && dominated_by(a, b)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(a);
  }
  return out;
}

std::vector<CoparkingFunction> maximal_elements(const CycleSystem& cs) {
  const auto set = enumerate_coparking(cs);
  return maximal_elements(set);
}

int max_degree(const CycleSystem& cs) {
  return cs.matroid().rank() - loops_and_bridges(cs.matroid()).bridges.size();
}

bool is_pure(const CycleSystem& cs) {
  const int d = max_degree(cs);
  const auto top = maximal_elements(cs);
  return std::all_of(top.begin(), top.end(), [&](const CoparkingFunction& a) { return degree(a) == d; });
}

bool is_pure(std::span<const CoparkingFunction> set) {
  const auto top = maximal_elements(set);
  return std::all_of(top.begin(), top.end(),
                     [&](const CoparkingFunction& a) { return degree(a) == degree(top.front()); });
}

bool is_order_ideal(std::span<const CoparkingFunction> set) {
  std::set<CoparkingFunction> members(set.begin(), set.end());
  for (const auto& a : set) {
    auto b = a;
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (b[i] == 0) continue;
      --b[i];
      if (!members.count(b)) return false;
      ++b[i];
    }
  }
  return true;
}

CoparkingFunction maximal_from_run(const CycleSystem& cs, std::span<const int> a) {
  const auto run = verify(cs, a);
  if (!run) throw DomainError(format_vector(a) + " is not a coparking function");
  CoparkingFunction c(a.size(), 0);
  IndexMask rest = cs.size() == 0 ? 0 : (~IndexMask{0} >> (64 - cs.size()));
  for (int i : run.removal_order) {
    const ElementSubset u = cs.cycle(i) & unique_union(cs.cycles(), rest);
    c[static_cast<std::size_t>(i)] = u.size() - 1;
    rest &= ~(IndexMask{1} << i);
  }
  return c;
}

CoparkingFunction lift_from_deletion(const CycleSystem& cs, int i, std::span<const int> a) {
  if (i < 0 || i > static_cast<int>(a.size())) throw DomainError("lift position out of range");
  CoparkingFunction out(a.begin(), a.end());
  out.insert(out.begin() + i, 0);
  if (!verify(cs, out)) throw InternalError("deletion lift " + format_vector(out) + " is not coparking");
  return out;
}

CoparkingFunction lift_from_contraction(const CycleSystem& cs, int i, std::span<const int> a) {
  if (i < 0 || i >= static_cast<int>(a.size())) throw DomainError("lift position out of range");
  CoparkingFunction out(a.begin(), a.end());
  ++out[static_cast<std::size_t>(i)];
  if (!verify(cs, out)) throw InternalError("contraction lift " + format_vector(out) + " is not coparking");
  return out;
}

std::string format_vector(std::span<const int> a) {
  std::string out = "(";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(a[i]);
  }
  return out + ")";
}

std::string hasse_dot(std::span<const CoparkingFunction> set) {
  std::set<CoparkingFunction> members(set.begin(), set.end());
  std::string out = "digraph coparking {\n  rankdir=BT;\n";
  for (const auto& a : set) out += "  \"" + format_vector(a) + "\";\n";
  for (const auto& a : set) {
    auto b = a;
    for (std::size_t i = 0; i < b.size(); ++i) {
      ++b[i];
      if (members.count(b)) out += "  \"" + format_vector(a) + "\" -> \"" + format_vector(b) + "\";\n";
      --b[i];
    }
  }
  return out + "}\n";
}

}  // namespace cyclesys
