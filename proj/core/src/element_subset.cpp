#include "cyclesys/element_subset.hpp"

#include <algorithm>

#include "cyclesys/errors.hpp"

namespace cyclesys {

ElementSubset ElementSubset::of(std::initializer_list<int> elements) {
  ElementSubset s;
  for (int e : elements) s.insert(e);
  return s;
}

ElementSubset ElementSubset::from_indices(std::span<const int> elements) {
  ElementSubset s;
  for (int e : elements) {
    if (e < 0 || e >= kMaxElements) throw DomainError("element index out of range: " + std::to_string(e));
    s.insert(e);
  }
  return s;
}

std::vector<int> ElementSubset::indices() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (int e : *this) out.push_back(e);
  return out;
}

void sort_canonical(std::vector<ElementSubset>& sets) {
  std::sort(sets.begin(), sets.end(), CanonicalLess{});
}

GroundSet::GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.size() > static_cast<std::size_t>(kMaxElements)) {
    throw DomainError("ground sets are limited to " + std::to_string(kMaxElements) + " elements, got " +
                      std::to_string(labels_.size()));
  }
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i].empty()) throw DomainError("empty element label");
    if (!index_.emplace(labels_[i], static_cast<int>(i)).second) {
      throw DomainError("duplicate element label '" + labels_[i] + "'");
    }
  }
}

GroundSet GroundSet::numbered(int count, int first) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) labels.push_back(std::to_string(first + i));
  return GroundSet(std::move(labels));
}

std::optional<int> GroundSet::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int GroundSet::index_of(std::string_view label) const {
  if (auto e = find(label)) return *e;
  throw DomainError("unknown element '" + std::string(label) + "'");
}

ElementSubset GroundSet::subset(std::span<const std::string> labels) const {
  ElementSubset s;
  for (const auto& l : labels) s.insert(index_of(l));
  return s;
}

ElementSubset GroundSet::subset(std::initializer_list<std::string_view> labels) const {
  ElementSubset s;
  for (auto l : labels) s.insert(index_of(l));
  return s;
}

std::vector<std::string> GroundSet::labels_of(ElementSubset s) const {
  std::vector<std::string> out;
  for (int e : s) out.push_back(label(e));
  return out;
}

std::string GroundSet::format(ElementSubset s) const {
  std::string out = "{";
  bool first = true;
  for (int e : s) {
    if (!first) out += ',';
    out += e < size() ? label(e) : "#" + std::to_string(e);
    first = false;
  }
  return out + "}";
}

}  // namespace cyclesys
