#include "xint/graph.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <string_view>

#include "xint/random.hpp"

namespace xint {

namespace {

void check_order(int n, int min_order, const char* what) {
  if (n < min_order || n > kMaxVertices)
    throw std::invalid_argument(std::string(what) + ": order " + std::to_string(n) + " out of range");
}

void check_vertex(const Graph& g, Vertex v) {
  if (v < 0 || v >= g.order())
    throw std::out_of_range("vertex " + std::to_string(v) + " not in graph of order " + std::to_string(g.order()));
}

}  // namespace

VertexSet VertexSet::of(std::initializer_list<Vertex> vertices) {
  return of(std::span<const Vertex>(vertices.begin(), vertices.size()));
}

VertexSet VertexSet::of(std::span<const Vertex> vertices) {
  VertexSet s;
  for (Vertex v : vertices) {
    if (v < 0 || v >= kMaxVertices) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
    s = s.with(v);
  }
  return s;
}

std::vector<Vertex> VertexSet::elements() const {
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(size()));
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n)) {}

void Graph::connect(Vertex u, Vertex v) {
  adj_[static_cast<std::size_t>(u)] = adj_[static_cast<std::size_t>(u)].with(v);
  adj_[static_cast<std::size_t>(v)] = adj_[static_cast<std::size_t>(v)].with(u);
}

Graph Graph::empty(int n) {
  check_order(n, 0, "empty");
  return Graph(n);
}

Graph Graph::path(int n) {
  check_order(n, 1, "path");
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.connect(v, v + 1);
  return g;
}

Graph Graph::cycle(int n) {
  check_order(n, 2, "cycle");
  Graph g = path(n);
  if (n >= 3) g.connect(n - 1, 0);
  return g;
}

Graph Graph::matching(int edges) {
  if (edges < 1 || 2 * edges > kMaxVertices)
    throw std::invalid_argument("matching: edge count " + std::to_string(edges) + " out of range");
  Graph g(2 * edges);
  for (Vertex i = 0; i < edges; ++i) g.connect(2 * i, 2 * i + 1);
  return g;
}

Graph Graph::clique(int n) {
  check_order(n, 1, "clique");
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.connect(u, v);
  return g;
}

Graph Graph::clique_union(std::span<const int> sizes) {
  if (sizes.empty()) throw std::invalid_argument("clique_union: no components");
  int total = 0;
  for (int s : sizes) {
    if (s < 1) throw std::invalid_argument("clique_union: component size must be at least 1");
    total += s;
  }
  check_order(total, 1, "clique_union");
  Graph g(total);
  int base = 0;
  for (int s : sizes) {
    for (Vertex u = base; u < base + s; ++u)
      for (Vertex v = u + 1; v < base + s; ++v) g.connect(u, v);
    base += s;
  }
  return g;
}

Graph Graph::from_edges(int n, std::span<const std::pair<Vertex, Vertex>> edges) {
  check_order(n, 0, "from_edges");
  Graph g(n);
  for (auto [u, v] : edges) {
    check_vertex(g, u);
    check_vertex(g, v);
    if (u == v) throw std::invalid_argument("from_edges: loop at vertex " + std::to_string(u));
    g.connect(u, v);
  }
  return g;
}

Graph Graph::from_adjacency(std::vector<VertexSet> rows) {
  const int n = static_cast<int>(rows.size());
  check_order(n, 0, "from_adjacency");
  Graph g(n);
  for (Vertex v = 0; v < n; ++v) {
    const VertexSet row = rows[static_cast<std::size_t>(v)];
    if (!row.is_subset_of(VertexSet::range(n))) throw std::invalid_argument("from_adjacency: neighbor out of range");
    if (row.contains(v)) throw std::invalid_argument("from_adjacency: loop");
    row.for_each([&](Vertex u) {
      if (!rows[static_cast<std::size_t>(u)].contains(v)) throw std::invalid_argument("from_adjacency: asymmetric rows");
    });
  }
  g.adj_ = std::move(rows);
  return g;
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (VertexSet row : adj_) twice += static_cast<std::size_t>(row.size());
  return twice / 2;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < n_; ++u)
    neighbors(u).for_each([&](Vertex v) {
      if (u < v) out.emplace_back(u, v);
    });
  return out;
}

bool Graph::is_independent(VertexSet s) const {
  bool ok = true;
  s.for_each([&](Vertex v) { ok = ok && !neighbors(v).intersects(s); });
  return ok;
}

Graph Graph::induced(VertexSet keep) const { return delete_vertices(*this, vertices() - keep).graph; }

VertexMap::VertexMap(std::vector<Vertex> image, int target_order)
    : image_(std::move(image)), target_order_(target_order) {
  std::vector<bool> hit(static_cast<std::size_t>(std::max(target_order, 0)), false);
  for (Vertex v : image_) {
    if (v == kDeleted) continue;
    if (v < 0 || v >= target_order) throw std::invalid_argument("VertexMap: image out of range");
    hit[static_cast<std::size_t>(v)] = true;
  }
  if (!std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }))
    throw std::invalid_argument("VertexMap: image does not cover target");
}

VertexMap VertexMap::identity(int n) {
  std::vector<Vertex> image(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) image[static_cast<std::size_t>(v)] = v;
  return VertexMap(std::move(image), n);
}

VertexSet VertexMap::apply(VertexSet s) const {
  VertexSet out;
  s.for_each([&](Vertex v) {
    if (v >= source_order()) throw std::invalid_argument("VertexMap::apply: vertex outside source");
    const Vertex w = image_[static_cast<std::size_t>(v)];
    if (w == kDeleted) throw std::invalid_argument("VertexMap::apply: set contains deleted vertex " + std::to_string(v));
    out = out.with(w);
  });
  if (out.size() != s.size()) throw std::invalid_argument("VertexMap::apply: two members merged");
  return out;
}

VertexMap VertexMap::then(const VertexMap& next) const {
  if (next.source_order() != target_order_) throw std::invalid_argument("VertexMap::then: order mismatch");
  std::vector<Vertex> image(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) image[i] = image_[i] == kDeleted ? kDeleted : next(image_[i]);
  return VertexMap(std::move(image), next.target_order());
}

Transformed delete_vertices(const Graph& g, VertexSet removed) {
  const int n = g.order();
  std::vector<Vertex> image(static_cast<std::size_t>(n), VertexMap::kDeleted);
  Vertex next = 0;
  for (Vertex v = 0; v < n; ++v)
    if (!removed.contains(v)) image[static_cast<std::size_t>(v)] = next++;
  VertexMap map(std::move(image), next);
  std::vector<VertexSet> rows(static_cast<std::size_t>(next));
  for (Vertex v = 0; v < n; ++v)
    if (!map.deleted(v)) rows[static_cast<std::size_t>(map(v))] = map.apply(g.neighbors(v) - removed);
  return {Graph::from_adjacency(std::move(rows)), std::move(map)};
}

Transformed delete_vertex(const Graph& g, Vertex v) {
  check_vertex(g, v);
  return delete_vertices(g, VertexSet::single(v));
}

Transformed delete_closed_neighborhood(const Graph& g, Vertex v) {
  check_vertex(g, v);
  return delete_vertices(g, g.closed_neighborhood(v));
}

Transformed contract_edge(const Graph& g, Vertex u, Vertex v) {
  check_vertex(g, u);
  check_vertex(g, v);
  if (!g.adjacent(u, v))
    throw std::invalid_argument("contract_edge: {" + std::to_string(u) + "," + std::to_string(v) + "} is not an edge");
  const Vertex keep = std::min(u, v);
  const Vertex gone = std::max(u, v);
  const int n = g.order();
  std::vector<Vertex> image(static_cast<std::size_t>(n));
  for (Vertex w = 0; w < n; ++w) image[static_cast<std::size_t>(w)] = w < gone ? w : w - 1;
  image[static_cast<std::size_t>(gone)] = keep;
  VertexMap map(std::move(image), n - 1);

  std::vector<VertexSet> rows(static_cast<std::size_t>(n - 1));
  for (Vertex w = 0; w < n; ++w) {
    const Vertex target = map(w);
    g.neighbors(w).for_each([&](Vertex x) {
      const Vertex y = map(x);
      if (y != target) rows[static_cast<std::size_t>(target)] = rows[static_cast<std::size_t>(target)].with(y);
    });
  }
  return {Graph::from_adjacency(std::move(rows)), std::move(map)};
}

VertexSet closed_neighborhood(const Graph& g, Vertex v) {
  check_vertex(g, v);
  return g.closed_neighborhood(v);
}

bool is_dominated(const Graph& g, Vertex v1, Vertex v2) {
  check_vertex(g, v1);
  check_vertex(g, v2);
  if (v1 == v2) throw std::invalid_argument("is_dominated: vertices must differ");
  const bool dominated = g.closed_neighborhood(v1).is_subset_of(g.closed_neighborhood(v2));
  if (dominated && !g.adjacent(v1, v2)) throw std::logic_error("is_dominated: dominated pair not adjacent");
  return dominated;
}

namespace {

// Rows are compared as integers; adjacency to earlier positions weighs more.
struct CanonicalSearch {
  const Graph& g;
  std::vector<std::uint64_t> best;
  std::vector<std::uint64_t> cur;
  std::vector<Vertex> placed;

  std::uint64_t row_for(Vertex v) const {
    std::uint64_t row = 0;
    for (std::size_t j = 0; j < placed.size(); ++j)
      if (g.adjacent(v, placed[j])) row |= std::uint64_t{1} << (63 - j);
    return row;
  }

  void run(VertexSet unused, bool tied) {
    const std::size_t i = placed.size();
    if (unused.empty()) {
      if (best.empty() || cur > best) best = cur;
      return;
    }
    std::uint64_t top = 0;
    unused.for_each([&](Vertex v) { top = std::max(top, row_for(v)); });
    if (tied && !best.empty()) {
      if (top < best[i]) return;
      if (top > best[i]) tied = false;
    }
    // Twins (same neighbours apart from each other) are interchangeable here.
    VertexSet tried;
    unused.for_each([&](Vertex v) {
      if (row_for(v) != top) return;
      bool twin = false;
      tried.for_each([&](Vertex w) {
        twin = twin || (g.neighbors(v).without(w) == g.neighbors(w).without(v));
      });
      if (twin) return;
      tried = tried.with(v);
      cur.push_back(top);
      placed.push_back(v);
      run(unused.without(v), tied);
      placed.pop_back();
      cur.pop_back();
    });
  }
};

}  // namespace

std::vector<std::uint64_t> canonical_form(const Graph& g) {
  CanonicalSearch search{g, {}, {}, {}};
  search.run(g.vertices(), true);
  return search.best;
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

Graph random_graph(int n, double p, Rng& rng) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.chance(p)) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

namespace {

int parse_int(std::string_view text, const std::string& spec) {
  int value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) throw std::invalid_argument("bad graph spec '" + spec + "'");
  return value;
}

std::vector<int> parse_int_list(std::string_view text, const std::string& spec) {
  std::vector<int> out;
  while (true) {
    const auto comma = text.find(',');
    out.push_back(parse_int(text.substr(0, comma), spec));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace

Graph parse_graph_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("bad graph spec '" + spec + "': expected kind:params");
  const std::string kind = spec.substr(0, colon);
  const std::string_view params = std::string_view(spec).substr(colon + 1);
  if (kind == "cliques") {
    const auto sizes = parse_int_list(params, spec);
    return Graph::clique_union(sizes);
  }
  const int n = parse_int(params, spec);
  if (kind == "empty") return Graph::empty(n);
  if (kind == "path") return Graph::path(n);
  if (kind == "cycle") return Graph::cycle(n);
  if (kind == "clique") return Graph::clique(n);
  if (kind == "matching") return Graph::matching(n);
  throw std::invalid_argument("unknown graph kind '" + kind + "'");
}

}  // namespace xint
