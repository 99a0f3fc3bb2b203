#include "cyclesys/io.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cyclesys/errors.hpp"

namespace cyclesys {

namespace {

using nlohmann::json;

int parse_vertex(std::string_view token, int line, int column) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc{} || ptr != token.data() + token.size() || v < 0) {
    throw ParseError("expected a non-negative vertex index, got '" + std::string(token) + "'", line, column);
  }
  return v;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> label_list(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array of labels");
  std::vector<std::string> out;
  for (const auto& item : j) {
    if (item.is_string()) out.push_back(item.get<std::string>());
    else if (item.is_number_integer()) out.push_back(std::to_string(item.get<long long>()));
    else throw ParseError(std::string(what) + " entries must be strings or integers");
  }
  return out;
}

Matroid matroid_from_json(const json& j, const std::string& base_dir);

Matroid matroid_ref(const json& j, const std::string& base_dir) {
  if (j.is_string()) {
    std::string ref = j.get<std::string>();
    if (ref.find(':') == std::string::npos && std::filesystem::path(ref).is_relative()) {
      ref = (std::filesystem::path(base_dir) / ref).string();
    }
    return load_matroid(ref);
  }
  return matroid_from_json(j, base_dir);
}

Matroid matroid_from_json(const json& j, const std::string& base_dir) {
  if (!j.is_object()) throw ParseError("matroid must be a JSON object");
  if (j.contains("circuits")) {
    if (!j.contains("ground")) throw ParseError("circuit-defined matroid needs \"ground\"");
    GroundSet ground(label_list(j.at("ground"), "ground"));
    std::vector<ElementSubset> circuits;
    for (const auto& c : j.at("circuits")) {
      const auto labels = label_list(c, "circuit");
      circuits.push_back(ground.subset(labels));
    }
    return Matroid::from_circuits(std::move(ground), std::move(circuits));
  }
  const std::string type = j.value("type", "");
  if (type == "graphic") {
    MultiGraph g;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 3) throw ParseError("graphic edges are [label, u, v]");
      const std::string label = e[0].is_string() ? e[0].get<std::string>() : std::to_string(e[0].get<long long>());
      g.add_edge(e[1].get<int>(), e[2].get<int>(), label);
    }
    return Matroid::graphic(g);
  }
  if (type == "uniform") return Matroid::uniform(j.at("rank").get<int>(), j.at("size").get<int>());
  if (type == "graph6") return Matroid::graphic(parse_graph6(j.at("data").get<std::string>()));
  if (type == "dual") return dual(matroid_ref(j.at("of"), base_dir));
  throw ParseError("unknown matroid type '" + type + "'");
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& err) {
    // nlohmann reports a byte offset; convert it to line and column.
    const std::size_t offset = std::min<std::size_t>(err.byte > 0 ? err.byte - 1 : 0, text.size());
    int line = 1, column = 1;
    for (std::size_t i = 0; i < offset; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError("invalid JSON", line, column);
  }
}

template <typename F>
auto wrap_json_errors(F&& f) {
  try {
    return f();
  } catch (const json::exception& err) {
    throw ParseError(std::string("malformed input: ") + err.what());
  }
}

}  // namespace

MultiGraph parse_edge_list(std::string_view text) {
  MultiGraph g;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::vector<std::pair<std::string_view, int>> tokens;  // token, 1-based column
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
      if (i >= line.size()) break;
      const std::size_t start = i;
      while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
      tokens.emplace_back(line.substr(start, i - start), static_cast<int>(start) + 1);
    }
    if (!tokens.empty()) {
      if (tokens.size() != 3) {
        throw ParseError("expected 'label u v', found " + std::to_string(tokens.size()) + " fields", line_no,
                         tokens.front().second);
      }
      const int u = parse_vertex(tokens[1].first, line_no, tokens[1].second);
      const int v = parse_vertex(tokens[2].first, line_no, tokens[2].second);
      try {
        g.add_edge(u, v, std::string(tokens[0].first));
      } catch (const DomainError& err) {
        throw ParseError(err.what(), line_no, tokens[0].second);
      }
    }
    if (end == text.size()) break;
    pos = end + 1;
  }
  if (g.edge_count() > kMaxElements) {
    throw ParseError("graphs are limited to " + std::to_string(kMaxElements) + " edges");
  }
  return g;
}

MultiGraph parse_graph6(std::string_view line) {
  line = trim(line);
  if (line.starts_with(">>graph6<<")) line.remove_prefix(10);
  if (line.empty()) throw ParseError("empty graph6 string", 1, 1);
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] < 63 || line[i] > 126) throw ParseError("invalid graph6 character", 1, static_cast<int>(i) + 1);
  }
  std::size_t pos = 0;
  int n = 0;
  if (line[0] != 126) {
    n = line[0] - 63;
    pos = 1;
  } else {
    if (line.size() < 4 || line[1] == 126) throw ParseError("graph6 vertex counts above 258047 are unsupported", 1, 1);
    n = ((line[1] - 63) << 12) | ((line[2] - 63) << 6) | (line[3] - 63);
    pos = 4;
  }
  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (line.size() - pos != bytes) {
    throw ParseError("graph6 string for " + std::to_string(n) + " vertices needs " + std::to_string(bytes) +
                         " data bytes, found " + std::to_string(line.size() - pos),
                     1, static_cast<int>(pos) + 1);
  }
  const bool short_labels = n <= 10;
  MultiGraph g(n);
  std::size_t k = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++k) {
      const int byte = line[pos + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) {
        g.add_edge(u, v, short_labels ? std::to_string(u) + std::to_string(v)
                                      : std::to_string(u) + "-" + std::to_string(v));
      }
    }
  }
  if (g.edge_count() > kMaxElements) throw ParseError("graphs are limited to " + std::to_string(kMaxElements) + " edges");
  return g;
}

std::string to_graph6(const MultiGraph& g) {
  const int n = g.vertex_count();
  if (n > 62) throw DomainError("to_graph6 supports at most 62 vertices");
  std::vector<std::vector<bool>> adj(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)));
  for (const auto& e : g.edges()) {
    if (e.u == e.v) throw DomainError("graph6 cannot encode loops");
    adj[e.u][e.v] = adj[e.v][e.u] = true;
  }
  std::string out(1, static_cast<char>(63 + n));
  int acc = 0, filled = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (adj[u][v] ? 1 : 0);
      if (++filled == 6) {
        out += static_cast<char>(63 + acc);
        acc = filled = 0;
      }
    }
  }
  if (filled > 0) out += static_cast<char>(63 + (acc << (6 - filled)));
  return out;
}

Matroid parse_matroid_json(std::string_view text) {
  const json j = parse_json(text);
  return wrap_json_errors([&] { return matroid_from_json(j, "."); });
}

Matroid load_matroid(const std::string& ref) {
  if (ref.starts_with("uniform:")) {
    const auto rest = std::string_view(ref).substr(8);
    const auto colon = rest.find(':');
    int m = 0, n = 0;
    if (colon == std::string_view::npos) throw ParseError("expected uniform:RANK:SIZE");
    auto r1 = std::from_chars(rest.data(), rest.data() + colon, m);
    auto r2 = std::from_chars(rest.data() + colon + 1, rest.data() + rest.size(), n);
    if (r1.ec != std::errc{} || r1.ptr != rest.data() + colon || r2.ec != std::errc{} ||
        r2.ptr != rest.data() + rest.size()) {
      throw ParseError("expected uniform:RANK:SIZE, got '" + ref + "'");
    }
    return Matroid::uniform(m, n);
  }
  if (ref.starts_with("graph6:")) return Matroid::graphic(parse_graph6(ref.substr(7)));
  const std::string text = read_file(ref);
  if (ref.ends_with(".json")) {
    const json j = parse_json(text);
    const std::string base = std::filesystem::path(ref).parent_path().string();
    return wrap_json_errors([&] { return matroid_from_json(j, base.empty() ? "." : base); });
  }
  if (ref.ends_with(".g6")) return Matroid::graphic(parse_graph6(text));
  return Matroid::graphic(parse_edge_list(text));
}

CycleSystem parse_cycle_system_json(std::string_view text, const std::string& base_dir) {
  const json j = parse_json(text);
  return wrap_json_errors([&] {
    if (!j.is_object() || !j.contains("matroid") || !j.contains("cycles")) {
      throw ParseError("cycle system needs \"matroid\" and \"cycles\"");
    }
    Matroid m = matroid_ref(j.at("matroid"), base_dir);
    std::vector<ElementSubset> cycles;
    for (const auto& c : j.at("cycles")) cycles.push_back(m.universe().subset(label_list(c, "cycle")));
    return CycleSystem(std::move(m), std::move(cycles));
  });
}

CycleSystem load_cycle_system(const std::string& path) {
  const std::string base = std::filesystem::path(path).parent_path().string();
  return parse_cycle_system_json(read_file(path), base.empty() ? "." : base);
}

std::vector<std::string> split_labels(std::string_view text) {
  std::vector<std::string> out;
  std::string current;
  for (char ch : text) {
    if (ch == ',' || ch == '<' || ch == ' ') {
      if (!current.empty()) out.push_back(std::move(current));
      current.clear();
    } else {
      current += ch;
    }
  }
  if (!current.empty()) out.push_back(std::move(current));
  return out;
}

std::vector<ElementSubset> parse_cycle_list(const Matroid& m, std::string_view text) {
  std::vector<ElementSubset> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find(';', pos), text.size());
    const auto labels = split_labels(text.substr(pos, end - pos));
    if (labels.empty()) throw ParseError("empty cycle in list", 1, static_cast<int>(pos) + 1);
    out.push_back(m.subset(labels));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace cyclesys
