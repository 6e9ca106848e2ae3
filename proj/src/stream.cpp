#include "adsv/stream.hpp"

#include <cstring>
#include <fstream>
#include <sstream>
#include <unordered_set>

namespace adsv {

std::string to_string(StreamModel m) {
  switch (m) {
    case StreamModel::turnstile: return "turnstile";
    case StreamModel::vanilla: return "vanilla";
    case StreamModel::weighted: return "weighted";
    case StreamModel::adjlist: return "adjlist";
  }
  return "?";
}

StreamModel model_from_string(const std::string& s) {
  if (s == "turnstile") return StreamModel::turnstile;
  if (s == "vanilla") return StreamModel::vanilla;
  if (s == "weighted") return StreamModel::weighted;
  if (s == "adjlist") return StreamModel::adjlist;
  throw std::invalid_argument("unknown stream model '" + s + "'");
}

namespace {

TokenKind kind_for(StreamModel m) {
  switch (m) {
    case StreamModel::turnstile: return TokenKind::turnstile_edge;
    case StreamModel::vanilla: return TokenKind::vanilla_edge;
    case StreamModel::weighted: return TokenKind::weighted_edge;
    case StreamModel::adjlist: return TokenKind::adjlist_entry;
  }
  return TokenKind::vanilla_edge;
}

std::int64_t parse_int(const std::string& s, std::size_t line) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError(line, "bad integer '" + s + "'");
  }
}

Vertex parse_vertex(const std::string& s, std::uint32_t n, std::size_t line) {
  std::int64_t v = parse_int(s, line);
  if (v < 1 || v > static_cast<std::int64_t>(n)) {
    throw ParseError(line, "vertex " + s + " outside [1," + std::to_string(n) + "]");
  }
  return static_cast<Vertex>(v);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

InstanceHeader parse_header(const std::string& line, std::size_t lineno) {
  InstanceHeader h;
  bool have_n = false, have_model = false;
  for (const auto& kv : split_ws(line)) {
    auto eq = kv.find('=');
    if (eq == std::string::npos) throw ParseError(lineno, "expected key=value, got '" + kv + "'");
    std::string key = kv.substr(0, eq), val = kv.substr(eq + 1);
    if (key == "n") {
      std::int64_t n = parse_int(val, lineno);
      if (n < 1 || n > (1 << 24)) throw ParseError(lineno, "n out of range");
      h.n = static_cast<std::uint32_t>(n);
      have_n = true;
    } else if (key == "model") {
      try {
        h.model = model_from_string(val);
      } catch (const std::invalid_argument& e) {
        throw ParseError(lineno, e.what());
      }
      have_model = true;
    } else if (key == "W") {
      h.W = parse_int(val, lineno);
      if (h.W < 1) throw ParseError(lineno, "W must be positive");
    } else if (key == "source") {
      h.source = static_cast<Vertex>(parse_int(val, lineno));
    } else if (key == "target") {
      h.target = static_cast<Vertex>(parse_int(val, lineno));
    } else if (key == "directed") {
      h.directed = parse_int(val, lineno) != 0;
    } else {
      throw ParseError(lineno, "unknown header key '" + key + "'");
    }
  }
  if (!have_n || !have_model) throw ParseError(lineno, "header needs n= and model=");
  for (auto v : {h.source, h.target}) {
    if (v && (*v < 1 || *v > h.n)) throw ParseError(lineno, "source/target outside [1,n]");
  }
  return h;
}

std::vector<Vertex> parse_vertex_list(const std::vector<std::string>& words, std::size_t from,
                                      std::size_t to, std::uint32_t n, std::size_t line) {
  std::vector<Vertex> out;
  for (std::size_t i = from; i < to; ++i) out.push_back(parse_vertex(words[i], n, line));
  return out;
}

}  // namespace

void GraphInstance::add_edge(Vertex u, Vertex v, std::int64_t value) {
  tokens.push_back({kind_for(header.model), u, v, value, tokens.size()});
}

void GraphInstance::add_adjlist(Vertex owner, const std::vector<Vertex>& nbrs) {
  for (Vertex w : nbrs) tokens.push_back({TokenKind::adjlist_entry, owner, w, 1, tokens.size()});
}

GraphInstance parse_stream(const std::string& text) {
  GraphInstance g;
  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  bool have_header = false;
  std::unordered_set<Vertex> owners_seen;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw.substr(0, raw.find('#'));
    auto words = split_ws(line);
    if (words.empty()) continue;
    if (!have_header) {
      g.header = parse_header(line, lineno);
      have_header = true;
      continue;
    }
    const auto n = g.header.n;
    if (words[0] == "set:") {
      g.sets.push_back(parse_vertex_list(words, 1, words.size(), n, lineno));
      continue;
    }
    if (words[0] == "pair:") {
      std::size_t bar = 1;
      while (bar < words.size() && words[bar] != "|") ++bar;
      if (bar == words.size()) throw ParseError(lineno, "pair line needs '|'");
      g.set_pairs.emplace_back(parse_vertex_list(words, 1, bar, n, lineno),
                               parse_vertex_list(words, bar + 1, words.size(), n, lineno));
      continue;
    }
    if (!g.sets.empty() || !g.set_pairs.empty()) throw ParseError(lineno, "edge lines must precede set lines");
    switch (g.header.model) {
      case StreamModel::adjlist: {
        if (words[0].back() != ':') throw ParseError(lineno, "adjacency line must start with 'v:'");
        Vertex owner = parse_vertex(words[0].substr(0, words[0].size() - 1), n, lineno);
        if (!owners_seen.insert(owner).second) {
          throw ParseError(lineno, "neighbor list of vertex " + std::to_string(owner) + " is not contiguous");
        }
        auto nbrs = parse_vertex_list(words, 1, words.size(), n, lineno);
        for (Vertex w : nbrs) {
          if (w == owner) throw ParseError(lineno, "self-loop");
        }
        g.add_adjlist(owner, nbrs);
        break;
      }
      case StreamModel::vanilla: {
        if (words.size() != 2) throw ParseError(lineno, "vanilla line is 'u v'");
        Vertex u = parse_vertex(words[0], n, lineno), v = parse_vertex(words[1], n, lineno);
        if (u == v) throw ParseError(lineno, "self-loop");
        g.add_edge(u, v, 1);
        break;
      }
      case StreamModel::turnstile:
      case StreamModel::weighted: {
        if (words.size() != 3) throw ParseError(lineno, "edge line is 'u v value'");
        Vertex u = parse_vertex(words[0], n, lineno), v = parse_vertex(words[1], n, lineno);
        if (u == v) throw ParseError(lineno, "self-loop");
        std::string val = words[2];
        if (!val.empty() && val[0] == '+') val = val.substr(1);
        std::int64_t x = parse_int(val, lineno);
        if (g.header.model == StreamModel::weighted && (x < 1 || x > g.header.W)) {
          throw ParseError(lineno, "weight outside [1,W]");
        }
        g.add_edge(u, v, x);
        break;
      }
    }
  }
  if (!have_header) throw ParseError(lineno, "missing header line");
  return g;
}

GraphInstance load_stream_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  std::string data = ss.str();
  if (data.rfind("ADSVSTR1", 0) == 0) return decode_binary(data);
  return parse_stream(data);
}

std::string format_stream(const GraphInstance& g) {
  std::ostringstream out;
  const auto& h = g.header;
  out << "n=" << h.n << " model=" << to_string(h.model);
  if (h.W != 1 || h.model == StreamModel::weighted) out << " W=" << h.W;
  if (h.source) out << " source=" << *h.source;
  if (h.target) out << " target=" << *h.target;
  if (h.directed) out << " directed=1";
  out << "\n";
  if (h.model == StreamModel::adjlist) {
    std::size_t i = 0;
    while (i < g.tokens.size()) {
      Vertex owner = g.tokens[i].u;
      out << owner << ":";
      while (i < g.tokens.size() && g.tokens[i].u == owner) out << " " << g.tokens[i++].v;
      out << "\n";
    }
  } else {
    for (const auto& t : g.tokens) {
      out << t.u << " " << t.v;
      if (h.model == StreamModel::turnstile) out << " " << (t.value >= 0 ? "+" : "") << t.value;
      if (h.model == StreamModel::weighted) out << " " << t.value;
      out << "\n";
    }
  }
  for (const auto& s : g.sets) {
    out << "set:";
    for (Vertex v : s) out << " " << v;
    out << "\n";
  }
  for (const auto& [a, b] : g.set_pairs) {
    out << "pair:";
    for (Vertex v : a) out << " " << v;
    out << " |";
    for (Vertex v : b) out << " " << v;
    out << "\n";
  }
  return out.str();
}

namespace {

template <class T>
void put(std::string& out, T v) {
  char buf[sizeof(T)];
  std::memcpy(buf, &v, sizeof(T));
  out.append(buf, sizeof(T));
}

class ByteReader {
 public:
  explicit ByteReader(const std::string& s) : s_(s) {}
  template <class T>
  T get() {
    if (pos_ + sizeof(T) > s_.size()) throw std::runtime_error("truncated binary stream");
    T v;
    std::memcpy(&v, s_.data() + pos_, sizeof(T));
    pos_ += sizeof(T);
    return v;
  }

 private:
  const std::string& s_;
  std::size_t pos_ = 0;
};

void put_list(std::string& out, const std::vector<Vertex>& l) {
  put<std::uint32_t>(out, static_cast<std::uint32_t>(l.size()));
  for (Vertex v : l) put<std::uint32_t>(out, v);
}

std::vector<Vertex> get_list(ByteReader& in, std::uint32_t n) {
  auto len = in.get<std::uint32_t>();
  std::vector<Vertex> l(len);
  for (auto& v : l) {
    v = in.get<std::uint32_t>();
    if (v < 1 || v > n) throw std::runtime_error("binary stream: vertex out of range");
  }
  return l;
}

}  // namespace

std::string encode_binary(const GraphInstance& g) {
  std::string out = "ADSVSTR1";
  const auto& h = g.header;
  put<std::uint32_t>(out, h.n);
  put<std::uint8_t>(out, static_cast<std::uint8_t>(h.model));
  put<std::uint8_t>(out, h.directed);
  put<std::int64_t>(out, h.W);
  put<std::uint32_t>(out, h.source.value_or(0));
  put<std::uint32_t>(out, h.target.value_or(0));
  put<std::uint64_t>(out, g.tokens.size());
  for (const auto& t : g.tokens) {
    put<std::uint32_t>(out, t.u);
    put<std::uint32_t>(out, t.v);
    put<std::int64_t>(out, t.value);
  }
  put<std::uint32_t>(out, static_cast<std::uint32_t>(g.sets.size()));
  for (const auto& s : g.sets) put_list(out, s);
  put<std::uint32_t>(out, static_cast<std::uint32_t>(g.set_pairs.size()));
  for (const auto& [a, b] : g.set_pairs) {
    put_list(out, a);
    put_list(out, b);
  }
  return out;
}

GraphInstance decode_binary(const std::string& bytes) {
  if (bytes.rfind("ADSVSTR1", 0) != 0) throw std::runtime_error("not a binary stream file");
  std::string body = bytes.substr(8);
  ByteReader in(body);
  GraphInstance g;
  auto& h = g.header;
  h.n = in.get<std::uint32_t>();
  auto model = in.get<std::uint8_t>();
  if (model > 3) throw std::runtime_error("binary stream: bad model");
  h.model = static_cast<StreamModel>(model);
  h.directed = in.get<std::uint8_t>() != 0;
  h.W = in.get<std::int64_t>();
  if (auto s = in.get<std::uint32_t>()) h.source = s;
  if (auto t = in.get<std::uint32_t>()) h.target = t;
  auto count = in.get<std::uint64_t>();
  for (std::uint64_t i = 0; i < count; ++i) {
    auto u = in.get<std::uint32_t>();
    auto v = in.get<std::uint32_t>();
    auto x = in.get<std::int64_t>();
    if (u < 1 || u > h.n || v < 1 || v > h.n || u == v) throw std::runtime_error("binary stream: bad edge");
    g.tokens.push_back({kind_for(h.model), u, v, x, i});
  }
  auto nsets = in.get<std::uint32_t>();
  for (std::uint32_t i = 0; i < nsets; ++i) g.sets.push_back(get_list(in, h.n));
  auto npairs = in.get<std::uint32_t>();
  for (std::uint32_t i = 0; i < npairs; ++i) {
    auto a = get_list(in, h.n);
    auto b = get_list(in, h.n);
    g.set_pairs.emplace_back(std::move(a), std::move(b));
  }
  return g;
}

std::vector<StreamToken> set_stream(const GraphInstance& g) {
  std::vector<StreamToken> out;
  std::uint64_t pos = g.tokens.size();
  auto push = [&](TokenKind k, Vertex v, std::int64_t side) { out.push_back({k, v, 0, side, pos++}); };
  for (const auto& s : g.sets) {
    for (auto v : s) push(TokenKind::set_vertex, v, 0);
    push(TokenKind::set_end, 0, 0);
  }
  for (const auto& [a, b] : g.set_pairs) {
    for (auto v : a) push(TokenKind::set_vertex, v, 0);
    for (auto v : b) push(TokenKind::set_vertex, v, 1);
    push(TokenKind::set_end, 0, 0);
  }
  return out;
}

void replay(const GraphInstance& g, const std::vector<TokenObserver>& observers) {
  for (const auto& t : g.tokens) {
    for (const auto& obs : observers) obs(t);
  }
}

std::vector<std::vector<std::int64_t>> final_matrix(const GraphInstance& g) {
  const auto n = g.header.n;
  std::vector<std::vector<std::int64_t>> a(n + 1, std::vector<std::int64_t>(n + 1, 0));
  const bool sym = !g.header.directed && g.header.model != StreamModel::adjlist;
  for (const auto& t : g.tokens) {
    if (g.header.model == StreamModel::weighted) {
      a[t.u][t.v] = t.value;
      if (sym) a[t.v][t.u] = t.value;
    } else {
      a[t.u][t.v] += t.value;
      if (sym) a[t.v][t.u] += t.value;
    }
  }
  return a;
}

}  // namespace adsv
