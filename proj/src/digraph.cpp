#include "orchard/digraph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace orchard {

std::string ValidationReport::to_string() const {
  std::ostringstream os;
  for (const auto& v : violations) {
    os << v.message;
    if (!v.vertices.empty()) {
      os << " [vertices:";
      for (VertexId id : v.vertices) os << ' ' << id;
      os << ']';
    }
    os << '\n';
  }
  return os.str();
}

ValidationError::ValidationError(ValidationReport r)
    : std::runtime_error("invalid network:\n" + r.to_string()), report(std::move(r)) {}

namespace {

void sorted_insert(std::vector<VertexId>& xs, VertexId v) {
  xs.insert(std::lower_bound(xs.begin(), xs.end(), v), v);
}

void sorted_erase_one(std::vector<VertexId>& xs, VertexId v) {
  auto it = std::lower_bound(xs.begin(), xs.end(), v);
  if (it == xs.end() || *it != v) throw std::invalid_argument("arc endpoint not present");
  xs.erase(it);
}

}  // namespace

VertexId TrackedDigraph::add_vertex() { return add_vertex_with_id(next_id_); }

VertexId TrackedDigraph::add_leaf(const std::string& label) {
  return add_vertex_with_id(next_id_, label);
}

VertexId TrackedDigraph::add_vertex_with_id(VertexId id, std::optional<std::string> label) {
  if (id < 0) throw std::invalid_argument("vertex id must be non-negative");
  if (contains(id)) throw std::invalid_argument("vertex id already in use");
  Vertex v;
  v.label = std::move(label);
  v.absorbed.insert(id);
  vertices_.emplace(id, std::move(v));
  next_id_ = std::max(next_id_, id + 1);
  return id;
}

void TrackedDigraph::add_arc(VertexId tail, VertexId head) {
  if (!contains(tail) || !contains(head)) throw std::invalid_argument("arc endpoint not present");
  sorted_insert(vertices_[tail].children, head);
  sorted_insert(vertices_[head].parents, tail);
}

void TrackedDigraph::remove_arc(VertexId tail, VertexId head) {
  if (!contains(tail) || !contains(head)) throw std::invalid_argument("arc endpoint not present");
  sorted_erase_one(vertices_[tail].children, head);
  sorted_erase_one(vertices_[head].parents, tail);
}

void TrackedDigraph::remove_vertex(VertexId v) {
  const Vertex& rec = at(v);
  // Copies: remove_arc mutates the adjacency we iterate.
  std::vector<VertexId> ps = rec.parents;
  std::vector<VertexId> cs = rec.children;
  for (VertexId p : ps) remove_arc(p, v);
  for (VertexId c : cs) remove_arc(v, c);
  vertices_.erase(v);
}

VertexId TrackedDigraph::subdivide_arc(VertexId tail, VertexId head) {
  remove_arc(tail, head);
  VertexId w = add_vertex();
  add_arc(tail, w);
  add_arc(w, head);
  return w;
}

void TrackedDigraph::suppress(VertexId v) {
  const Vertex& rec = at(v);
  if (rec.parents.size() != 1 || rec.children.size() != 1)
    throw std::invalid_argument("suppress requires in-degree 1 and out-degree 1");
  VertexId p = rec.parents[0];
  VertexId c = rec.children[0];
  std::set<VertexId> absorbed = rec.absorbed;
  remove_arc(p, v);
  remove_arc(v, c);
  vertices_.erase(v);
  add_arc(p, c);
  vertices_[p].absorbed.insert(absorbed.begin(), absorbed.end());
}

const TrackedDigraph::Vertex& TrackedDigraph::at(VertexId v) const {
  auto it = vertices_.find(v);
  if (it == vertices_.end()) throw std::invalid_argument("no such vertex: " + std::to_string(v));
  return it->second;
}

bool TrackedDigraph::has_arc(VertexId tail, VertexId head) const {
  const auto& cs = at(tail).children;
  return std::binary_search(cs.begin(), cs.end(), head);
}

std::vector<VertexId> TrackedDigraph::vertex_ids() const {
  std::vector<VertexId> ids;
  ids.reserve(vertices_.size());
  for (const auto& [id, rec] : vertices_) ids.push_back(id);
  return ids;
}

std::size_t TrackedDigraph::arc_count() const {
  std::size_t n = 0;
  for (const auto& [id, rec] : vertices_) n += rec.children.size();
  return n;
}

std::size_t TrackedDigraph::reticulation_count() const {
  std::size_t n = 0;
  for (const auto& [id, rec] : vertices_)
    if (rec.parents.size() >= 2) ++n;
  return n;
}

std::optional<VertexId> TrackedDigraph::single_root() const {
  std::optional<VertexId> root;
  for (const auto& [id, rec] : vertices_) {
    if (!rec.parents.empty()) continue;
    if (root) return std::nullopt;
    root = id;
  }
  return root;
}

VertexId TrackedDigraph::holder_of(VertexId source) const {
  for (const auto& [id, rec] : vertices_)
    if (rec.absorbed.count(source)) return id;
  return kNoVertex;
}

std::vector<VertexId> TrackedDigraph::reachable_from(VertexId from) const {
  std::set<VertexId> seen{from};
  std::deque<VertexId> queue{from};
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (VertexId c : at(v).children)
      if (seen.insert(c).second) queue.push_back(c);
  }
  return {seen.begin(), seen.end()};
}

bool TrackedDigraph::reaches(VertexId from, VertexId to) const {
  if (from == to) return contains(from);
  std::set<VertexId> seen{from};
  std::deque<VertexId> queue{from};
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (VertexId c : at(v).children) {
      if (c == to) return true;
      if (seen.insert(c).second) queue.push_back(c);
    }
  }
  return false;
}

std::map<VertexId, std::set<VertexId>> TrackedDigraph::leaf_descendant_sets() const {
  // Reverse topological accumulation; cycles leave entries incomplete, which
  // only validate() cares about and it checks acyclicity separately.
  std::map<VertexId, std::size_t> pending;
  std::deque<VertexId> ready;
  for (const auto& [id, rec] : vertices_) {
    pending[id] = rec.children.size();
    if (rec.children.empty()) ready.push_back(id);
  }
  std::map<VertexId, std::set<VertexId>> out;
  while (!ready.empty()) {
    VertexId v = ready.front();
    ready.pop_front();
    auto& acc = out[v];
    if (at(v).label) acc.insert(v);
    for (VertexId c : at(v).children) acc.insert(out[c].begin(), out[c].end());
    std::set<VertexId> parents_once(at(v).parents.begin(), at(v).parents.end());
    for (VertexId p : parents_once) {
      std::size_t mult =
          std::count(at(v).parents.begin(), at(v).parents.end(), p);
      pending[p] -= mult;
      if (pending[p] == 0) ready.push_back(p);
    }
  }
  return out;
}

std::vector<Reduction> TrackedDigraph::available_reductions() const {
  std::vector<Reduction> out;
  for (const auto& [id, rec] : vertices_)
    if (rec.parents.size() == 1 && rec.children.size() == 1)
      out.push_back({Reduction::Kind::Suppress, id, kNoVertex, kNoVertex});
  for (const auto& [id, rec] : vertices_)
    for (std::size_t i = 0; i + 1 < rec.children.size(); ++i)
      if (rec.children[i] == rec.children[i + 1] &&
          (i == 0 || rec.children[i - 1] != rec.children[i]))
        out.push_back({Reduction::Kind::DropParallelArc, kNoVertex, id, rec.children[i]});
  return out;
}

void TrackedDigraph::apply(const Reduction& r) {
  if (r.kind == Reduction::Kind::Suppress)
    suppress(r.vertex);
  else
    remove_arc(r.tail, r.head);
}

void TrackedDigraph::fully_simplify() {
  for (;;) {
    std::vector<Reduction> moves = available_reductions();
    if (moves.empty()) return;
    apply(moves.front());
  }
}

void TrackedDigraph::delete_barren_vertices() {
  for (;;) {
    VertexId victim = kNoVertex;
    for (const auto& [id, rec] : vertices_) {
      if (rec.children.empty() && !rec.label) {
        victim = id;
        break;
      }
    }
    if (victim == kNoVertex) return;
    remove_vertex(victim);
  }
}

void TrackedDigraph::trim_root_chain() {
  for (;;) {
    auto root = single_root();
    if (!root) return;
    const Vertex& rec = at(*root);
    if (rec.label || rec.children.size() != 1) return;
    remove_vertex(*root);
  }
}

namespace {

bool label_token_ok(const std::string& s) {
  if (s.empty()) return false;
  for (char ch : s) {
    switch (ch) {
      case '(': case ')': case ',': case ';': case ':': case '#':
      case '[': case ']': case ' ': case '\t': case '\n': case '\r':
        return false;
      default:
        break;
    }
  }
  return true;
}

}  // namespace

ValidationReport TrackedDigraph::validate() const {
  ValidationReport report;
  auto flag = [&](std::string msg, std::vector<VertexId> vs = {}) {
    report.violations.push_back({std::move(msg), std::move(vs)});
  };

  if (vertices_.empty()) {
    flag("network has no vertices");
    return report;
  }

  // Root.
  std::vector<VertexId> roots;
  for (const auto& [id, rec] : vertices_)
    if (rec.parents.empty()) roots.push_back(id);
  if (roots.size() != 1) {
    flag("expected exactly one in-degree-0 vertex, found " + std::to_string(roots.size()), roots);
  }

  // Parallel arcs.
  for (const auto& [id, rec] : vertices_)
    for (std::size_t i = 0; i + 1 < rec.children.size(); ++i)
      if (rec.children[i] == rec.children[i + 1] &&
          (i == 0 || rec.children[i - 1] != rec.children[i]))
        flag("parallel arcs", {id, rec.children[i]});

  // Acyclicity (Kahn).
  {
    std::map<VertexId, std::size_t> indeg;
    std::deque<VertexId> ready;
    for (const auto& [id, rec] : vertices_) {
      indeg[id] = rec.parents.size();
      if (rec.parents.empty()) ready.push_back(id);
    }
    std::size_t seen = 0;
    while (!ready.empty()) {
      VertexId v = ready.front();
      ready.pop_front();
      ++seen;
      for (VertexId c : at(v).children)
        if (--indeg[c] == 0) ready.push_back(c);
    }
    if (seen != vertices_.size()) {
      flag("directed cycle present");
      return report;  // degree/reachability diagnostics below assume a DAG
    }
  }

  bool single = vertices_.size() == 1;
  const bool have_root = roots.size() == 1;

  // Degrees and labels.
  std::map<std::string, VertexId> seen_labels;
  std::size_t leaves = 0, retics = 0;
  for (const auto& [id, rec] : vertices_) {
    std::size_t in = rec.parents.size(), out = rec.children.size();
    if (rec.label) {
      ++leaves;
      if (!label_token_ok(*rec.label))
        flag("leaf label empty or contains a reserved character: \"" + *rec.label + "\"", {id});
      auto [it, fresh] = seen_labels.emplace(*rec.label, id);
      if (!fresh) flag("duplicate leaf label \"" + *rec.label + "\"", {it->second, id});
      if (out != 0) flag("labeled vertex has out-degree " + std::to_string(out), {id});
      if (!(in == 1 || (in == 0 && single)))
        flag("leaf must have in-degree 1", {id});
      continue;
    }
    if (in == 0) {
      if (out != 2) flag("root must have out-degree 2, has " + std::to_string(out), {id});
    } else if (in == 1) {
      if (out != 2) flag("tree vertex must have out-degree 2, has " + std::to_string(out), {id});
    } else if (in == 2) {
      ++retics;
      if (out != 1)
        flag("reticulation must have out-degree 1, has " + std::to_string(out), {id});
    } else {
      flag("vertex has in-degree " + std::to_string(in), {id});
    }
  }

  // Reachability.
  if (have_root) {
    std::vector<VertexId> seen = reachable_from(roots[0]);
    if (seen.size() != vertices_.size()) {
      std::vector<VertexId> stranded;
      std::size_t i = 0;
      for (const auto& [id, rec] : vertices_) {
        while (i < seen.size() && seen[i] < id) ++i;
        if (i >= seen.size() || seen[i] != id) stranded.push_back(id);
      }
      flag("vertices unreachable from the root", stranded);
    }
  }

  // Count identity |V| = 2(|X| + r) - 1; redundant given the degree checks
  // but cheap, and an independent guard against miscounted degrees.
  if (report.ok() && vertices_.size() != 2 * (leaves + retics) - 1)
    flag("vertex count violates |V| = 2(|X| + r) - 1");

  return report;
}

}  // namespace orchard
