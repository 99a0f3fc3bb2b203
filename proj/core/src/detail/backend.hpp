#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "cyclesys/matroid.hpp"

namespace cyclesys::detail {

/// Rank oracle behind a Matroid. All subset arguments are over the shared
/// universe and lie inside `ground`. Backends are immutable.
class Backend : public std::enable_shared_from_this<Backend> {
 public:
  virtual ~Backend() = default;
  virtual BackendKind kind() const = 0;
  virtual int rank(ElementSubset s, ElementSubset ground) const = 0;
  virtual bool independent(ElementSubset s, ElementSubset ground) const { return rank(s, ground) == s.size(); }
  /// Backend for M \ s (new ground = ground − s).
  virtual std::shared_ptr<const Backend> deletion(ElementSubset s, ElementSubset ground) const = 0;
  /// Backend for M / s (new ground = ground − s).
  virtual std::shared_ptr<const Backend> contraction(ElementSubset s, ElementSubset ground) const = 0;
  /// Backend-specific circuit enumeration, unsorted; nullopt selects the
  /// generic search.
  virtual std::optional<std::vector<ElementSubset>> circuits(ElementSubset /*ground*/) const { return std::nullopt; }
  virtual const std::vector<std::pair<int, int>>* graph_ends() const { return nullptr; }
};

class GraphicBackend final : public Backend {
 public:
  /// `ends` is indexed by universe element; entries outside the ground set
  /// are ignored.
  GraphicBackend(std::vector<std::pair<int, int>> ends, ElementSubset ground);

  BackendKind kind() const override { return BackendKind::graphic; }
  int rank(ElementSubset s, ElementSubset ground) const override;
  bool independent(ElementSubset s, ElementSubset ground) const override;
  std::shared_ptr<const Backend> deletion(ElementSubset s, ElementSubset ground) const override;
  std::shared_ptr<const Backend> contraction(ElementSubset s, ElementSubset ground) const override;
  std::optional<std::vector<ElementSubset>> circuits(ElementSubset ground) const override;
  const std::vector<std::pair<int, int>>* graph_ends() const override { return &ends_; }

  int vertex_count() const { return vertex_count_; }

 private:
  std::vector<std::pair<int, int>> ends_;
  int vertex_count_ = 0;
};

class UniformBackend final : public Backend {
 public:
  explicit UniformBackend(int rank) : rank_(rank) {}
  BackendKind kind() const override { return BackendKind::uniform; }
  int rank(ElementSubset s, ElementSubset) const override { return std::min(s.size(), rank_); }
  std::shared_ptr<const Backend> deletion(ElementSubset s, ElementSubset ground) const override;
  std::shared_ptr<const Backend> contraction(ElementSubset s, ElementSubset ground) const override;

 private:
  int rank_;
};

class CircuitBackend final : public Backend {
 public:
  explicit CircuitBackend(std::vector<ElementSubset> circuits) : circuits_(std::move(circuits)) {}
  BackendKind kind() const override { return BackendKind::circuit_defined; }
  int rank(ElementSubset s, ElementSubset ground) const override;
  bool independent(ElementSubset s, ElementSubset ground) const override;
  std::shared_ptr<const Backend> deletion(ElementSubset s, ElementSubset ground) const override;
  std::shared_ptr<const Backend> contraction(ElementSubset s, ElementSubset ground) const override;
  std::optional<std::vector<ElementSubset>> circuits(ElementSubset) const override { return circuits_; }

 private:
  std::vector<ElementSubset> circuits_;
};

class DualBackend final : public Backend {
 public:
  explicit DualBackend(std::shared_ptr<const Backend> inner) : inner_(std::move(inner)) {}
  BackendKind kind() const override { return BackendKind::dual; }
  int rank(ElementSubset s, ElementSubset ground) const override;
  std::shared_ptr<const Backend> deletion(ElementSubset s, ElementSubset ground) const override;
  std::shared_ptr<const Backend> contraction(ElementSubset s, ElementSubset ground) const override;
  const std::shared_ptr<const Backend>& inner() const { return inner_; }

 private:
  std::shared_ptr<const Backend> inner_;
};

class DirectSumBackend final : public Backend {
 public:
  struct Part {
    Matroid matroid;
    ElementSubset span;        // elements of the sum that belong to this part
    std::vector<int> to_part;  // sum element -> part element, -1 elsewhere
  };

  explicit DirectSumBackend(std::vector<Part> parts) : parts_(std::move(parts)) {}
  BackendKind kind() const override { return BackendKind::direct_sum; }
  int rank(ElementSubset s, ElementSubset ground) const override;
  std::shared_ptr<const Backend> deletion(ElementSubset s, ElementSubset ground) const override;
  std::shared_ptr<const Backend> contraction(ElementSubset s, ElementSubset ground) const override;

 private:
  static ElementSubset to_part(const Part& p, ElementSubset s);
  std::vector<Part> parts_;
};

}  // namespace cyclesys::detail
