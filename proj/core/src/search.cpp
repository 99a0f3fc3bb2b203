#include "cyclesys/search.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cyclesys/errors.hpp"

namespace cyclesys {

namespace {

namespace fs = std::filesystem;

constexpr int kMaxTableCorank = 24;

class Deadline {
 public:
  explicit Deadline(std::int64_t ms) : ms_(ms), start_(std::chrono::steady_clock::now()) {}

  bool expired() {
    if (ms_ <= 0 || (++ticks_ & 0x3ff) != 0) return false;
    return std::chrono::steady_clock::now() - start_ > std::chrono::milliseconds(ms_);
  }

 private:
  std::int64_t ms_;
  std::chrono::steady_clock::time_point start_;
  std::uint64_t ticks_ = 0;
};

// A level L_k: families of k circuit indices, each sorted, stored back to
// back in lexicographic order.
struct Level {
  int k = 0;
  std::vector<std::uint16_t> keys;

  std::size_t size() const { return k == 0 ? 0 : keys.size() / static_cast<std::size_t>(k); }
  const std::uint16_t* at(std::size_t i) const { return keys.data() + i * static_cast<std::size_t>(k); }

  bool contains(const std::uint16_t* key) const {
    std::size_t lo = 0, hi = size();
    while (lo < hi) {
      const std::size_t mid = (lo + hi) / 2;
      const std::uint16_t* probe = at(mid);
      if (std::lexicographical_compare(probe, probe + k, key, key + k)) {
        lo = mid + 1;
      } else {
        hi = mid;
      }
    }
    return lo < size() && std::equal(key, key + k, at(lo));
  }
};

std::string fingerprint(const Matroid& m, const std::vector<ElementSubset>& circuits) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xff;
      h *= 1099511628211ULL;
    }
  };
  for (int e : m.ground()) {
    for (char ch : m.universe().label(e)) mix(static_cast<unsigned char>(ch));
    mix(0xff);
  }
  for (auto c : circuits) mix(c.bits());
  std::ostringstream out;
  out << std::hex << h;
  return out.str();
}

class Checkpoint {
 public:
  Checkpoint(std::string dir, std::string fingerprint, int corank)
      : dir_(std::move(dir)), fingerprint_(std::move(fingerprint)), corank_(corank) {}

  bool enabled() const { return !dir_.empty(); }

  // Highest completed level stored for this matroid, if any.
  std::optional<Level> load(std::vector<std::size_t>& sizes) const {
    if (!enabled()) return std::nullopt;
    std::ifstream meta(fs::path(dir_) / "meta.txt");
    if (!meta) return std::nullopt;
    std::string key, fp;
    int corank = -1, completed = 0;
    std::vector<std::size_t> stored;
    std::string line;
    while (std::getline(meta, line)) {
      std::istringstream in(line);
      in >> key;
      if (key == "fingerprint") in >> fp;
      else if (key == "corank") in >> corank;
      else if (key == "completed") in >> completed;
      else if (key == "sizes") {
        std::size_t s;
        while (in >> s) stored.push_back(s);
      }
    }
    if (fp != fingerprint_ || corank != corank_ || completed <= 0) return std::nullopt;
    std::ifstream data(fs::path(dir_) / ("level_" + std::to_string(completed) + ".txt"));
    if (!data) return std::nullopt;
    Level level;
    level.k = completed;
    while (std::getline(data, line)) {
      std::istringstream in(line);
      int v, n = 0;
      while (in >> v) {
        level.keys.push_back(static_cast<std::uint16_t>(v));
        ++n;
      }
      if (n != completed) throw ParseError("corrupt checkpoint level file in " + dir_);
    }
    sizes = stored;
    return level;
  }

  void save(const Level& level, const std::vector<std::size_t>& sizes) const {
    if (!enabled()) return;
    fs::create_directories(dir_);
    const fs::path data = fs::path(dir_) / ("level_" + std::to_string(level.k) + ".txt");
    {
      std::ofstream out(data.string() + ".tmp");
      for (std::size_t i = 0; i < level.size(); ++i) {
        const auto* key = level.at(i);
        for (int j = 0; j < level.k; ++j) out << (j ? " " : "") << key[j];
        out << '\n';
      }
    }
    fs::rename(data.string() + ".tmp", data);
    const fs::path meta = fs::path(dir_) / "meta.txt";
    {
      std::ofstream out(meta.string() + ".tmp");
      out << "fingerprint " << fingerprint_ << "\ncorank " << corank_ << "\ncompleted " << level.k << "\nsizes";
      for (auto s : sizes) out << ' ' << s;
      out << '\n';
    }
    fs::rename(meta.string() + ".tmp", meta);
  }

 private:
  std::string dir_;
  std::string fingerprint_;
  int corank_;
};

class Searcher {
 public:
  Searcher(const Matroid& m, const SearchOptions& options, SearchResult& result)
      : m_(m), options_(options), result_(result), circuits_(result.circuits), g_(m.corank()),
        deadline_(options.budget.time_ms) {}

  void run() {
    if (g_ == 0) {
      report({});
      return;
    }
    if (static_cast<int>(circuits_.size()) < g_) return;
    if (options_.mode == SearchMode::first || options_.strategy == SearchStrategy::depth_first) {
      depth_first();
    } else {
      levels();
    }
  }

 private:
  // Returns false when the caller should stop.
  bool report(const std::vector<int>& family) {
    ++result_.count;
    if (options_.mode != SearchMode::count) result_.systems.push_back(family);
    if (options_.on_system && !options_.on_system(family)) return false;
    return options_.mode != SearchMode::first;
  }

  void check_time(int completed) {
    if (deadline_.expired()) {
      throw ResourceError("search time budget of " + std::to_string(options_.budget.time_ms) + " ms exhausted",
                          completed);
    }
  }

  bool dependent_union(const std::uint16_t* key, int k, std::uint16_t extra) const {
    ElementSubset once, twice;
    auto add = [&](ElementSubset a) {
      twice |= once & a;
      once = (once - a) | (a - once - twice);
    };
    for (int j = 0; j < k; ++j) add(circuits_[key[j]]);
    add(circuits_[extra]);
    return !once.empty() && !m_.independent_unchecked(once);
  }

  void levels() {
    Checkpoint checkpoint(options_.checkpoint_dir, fingerprint(m_, circuits_), g_);
    Level current;
    if (auto loaded = checkpoint.load(result_.level_sizes)) {
      current = std::move(*loaded);
      result_.resumed_level = current.k;
    } else {
      current.k = 1;
      for (std::size_t i = 0; i < circuits_.size(); ++i) current.keys.push_back(static_cast<std::uint16_t>(i));
      result_.level_sizes = {current.size()};
      checkpoint.save(current, result_.level_sizes);
    }

    if (g_ == 1) {
      for (std::size_t i = 0; i < current.size(); ++i) {
        if (!report({current.at(i)[0]})) return;
      }
      return;
    }

    std::vector<std::uint16_t> probe;
    while (current.k < g_) {
      const int k = current.k;
      const bool last = k + 1 == g_;
      Level next;
      next.k = k + 1;
      probe.assign(static_cast<std::size_t>(k), 0);
      const std::size_t n = current.size();
      std::size_t block_start = 0;
      while (block_start < n) {
        // Families sharing the first k-1 indices are contiguous.
        std::size_t block_end = block_start + 1;
        while (block_end < n && std::equal(current.at(block_start), current.at(block_start) + (k - 1),
                                           current.at(block_end))) {
          ++block_end;
        }
        for (std::size_t a = block_start; a < block_end; ++a) {
          const std::uint16_t* key = current.at(a);
          for (std::size_t b = a + 1; b < block_end; ++b) {
            check_time(k);
            const std::uint16_t c = current.at(b)[k - 1];
            bool subsets_ok = true;
            for (int drop = 0; drop + 1 < k && subsets_ok; ++drop) {
              int w = 0;
              for (int j = 0; j < k; ++j) {
                if (j != drop) probe[static_cast<std::size_t>(w++)] = key[j];
              }
              probe[static_cast<std::size_t>(w)] = c;
              subsets_ok = current.contains(probe.data());
            }
            if (!subsets_ok || !dependent_union(key, k, c)) continue;
            if (last) {
              std::vector<int> family(key, key + k);
              family.push_back(c);
              if (!report(family)) return;
              continue;
            }
            next.keys.insert(next.keys.end(), key, key + k);
            next.keys.push_back(c);
            if (options_.budget.max_level_size > 0 && next.size() > options_.budget.max_level_size) {
              throw ResourceError("level " + std::to_string(k + 1) + " exceeds " +
                                      std::to_string(options_.budget.max_level_size) + " families",
                                  k);
            }
          }
        }
        block_start = block_end;
      }
      if (last) {
        result_.level_sizes.push_back(result_.count);
        return;
      }
      result_.level_sizes.push_back(next.size());
      checkpoint.save(next, result_.level_sizes);
      if (next.size() == 0) return;
      current = std::move(next);
    }
  }

  void depth_first() {
    if (g_ > kMaxTableCorank) {
      throw ResourceError("depth-first search supports corank up to " + std::to_string(kMaxTableCorank));
    }
    const std::size_t n = circuits_.size();
    suffix_union_.assign(n + 1, ElementSubset{});
    for (std::size_t i = n; i-- > 0;) suffix_union_[i] = suffix_union_[i + 1] | circuits_[i];
    non_bridges_ = m_.ground() - loops_and_bridges(m_).bridges;
    once_.assign(std::size_t{1} << g_, ElementSubset{});
    twice_.assign(std::size_t{1} << g_, ElementSubset{});
    chosen_.clear();
    extend(0, ElementSubset{});
  }

  // Returns false when the search should stop.
  bool extend(std::size_t start, ElementSubset covered) {
    const int k = static_cast<int>(chosen_.size());
    if (k == g_) return report(chosen_);
    const std::size_t n = circuits_.size();
    const std::size_t half = std::size_t{1} << k;
    for (std::size_t c = start; c + static_cast<std::size_t>(g_ - k) <= n; ++c) {
      check_time(0);
      if (!non_bridges_.is_subset_of(covered | suffix_union_[c])) break;
      const ElementSubset circuit = circuits_[c];
      bool ok = true;
      for (std::size_t mask = 0; mask < half; ++mask) {
        const ElementSubset once = once_[mask], twice = twice_[mask];
        const ElementSubset u = (once - circuit) | (circuit - once - twice);
        if (u.empty() || m_.independent_unchecked(u)) {
          ok = false;
          break;
        }
        once_[half + mask] = u;
        twice_[half + mask] = twice | (once & circuit);
      }
      if (!ok) continue;
      chosen_.push_back(static_cast<int>(c));
      const bool keep_going = extend(c + 1, covered | circuit);
      chosen_.pop_back();
      if (!keep_going) return false;
    }
    return true;
  }

  const Matroid& m_;
  const SearchOptions& options_;
  SearchResult& result_;
  const std::vector<ElementSubset>& circuits_;
  int g_;
  Deadline deadline_;

  std::vector<ElementSubset> suffix_union_;
  ElementSubset non_bridges_;
  std::vector<ElementSubset> once_, twice_;
  std::vector<int> chosen_;
};

}  // namespace

std::vector<ElementSubset> SearchResult::system(std::size_t i) const {
  std::vector<ElementSubset> out;
  for (int c : systems.at(i)) out.push_back(circuits.at(static_cast<std::size_t>(c)));
  return out;
}

SearchResult search_circuit_systems(const Matroid& m, const SearchOptions& options) {
  SearchResult result;
  result.circuits = circuits(m);
  if (result.circuits.size() > 0xffff) throw ResourceError("too many circuits for the search");
  Searcher(m, options, result).run();
  return result;
}

std::optional<CycleSystem> find_circuit_system(const Matroid& m, const SearchBudget& budget) {
  std::vector<ElementSubset> joined;
  for (auto component : components(m)) {
    const Matroid part = restriction(m, component);
    if (part.corank() == 0) continue;
    SearchOptions options;
    options.mode = SearchMode::first;
    options.budget = budget;
    auto found = search_circuit_systems(part, options);
    if (found.systems.empty()) return std::nullopt;
    auto system = found.system(0);
    joined.insert(joined.end(), system.begin(), system.end());
  }
  return CycleSystem::trusted(m, std::move(joined));
}

}  // namespace cyclesys
