#include "orchard/isomorphism.hpp"

#include <algorithm>
#include <sstream>

namespace orchard {

namespace {

// Dense view of the graph for the search: vertices renamed 0..n-1.
struct Dense {
  std::vector<VertexId> ids;                    // index -> original id
  std::vector<std::vector<int>> children;      // sorted, with multiplicity
  std::vector<std::vector<int>> parents;       // sorted, with multiplicity
  std::vector<int> label_rank;                 // -1 if unlabeled
  std::vector<std::string> labels;             // rank -> label text
};

Dense densify(const TrackedDigraph& g) {
  Dense d;
  d.ids = g.vertex_ids();
  std::map<VertexId, int> index;
  for (std::size_t i = 0; i < d.ids.size(); ++i) index[d.ids[i]] = static_cast<int>(i);

  for (VertexId v : d.ids)
    if (g.at(v).label) d.labels.push_back(*g.at(v).label);
  std::sort(d.labels.begin(), d.labels.end());

  d.children.resize(d.ids.size());
  d.parents.resize(d.ids.size());
  d.label_rank.assign(d.ids.size(), -1);
  for (std::size_t i = 0; i < d.ids.size(); ++i) {
    const auto& rec = g.at(d.ids[i]);
    for (VertexId c : rec.children) d.children[i].push_back(index[c]);
    for (VertexId p : rec.parents) d.parents[i].push_back(index[p]);
    std::sort(d.children[i].begin(), d.children[i].end());
    std::sort(d.parents[i].begin(), d.parents[i].end());
    if (rec.label)
      d.label_rank[i] = static_cast<int>(
          std::lower_bound(d.labels.begin(), d.labels.end(), *rec.label) - d.labels.begin());
  }
  return d;
}

// Refines colors to a fixed point: two vertices keep the same color only if
// their colors, child color multisets, and parent color multisets agree.
// Signatures contain no vertex indices, so the result is invariant under
// isomorphism.
void refine(const Dense& d, std::vector<int>& colors) {
  const std::size_t n = d.ids.size();
  for (;;) {
    using Sig = std::tuple<int, std::vector<int>, std::vector<int>>;
    std::vector<Sig> sigs(n);
    for (std::size_t v = 0; v < n; ++v) {
      std::vector<int> cs, ps;
      cs.reserve(d.children[v].size());
      ps.reserve(d.parents[v].size());
      for (int c : d.children[v]) cs.push_back(colors[c]);
      for (int p : d.parents[v]) ps.push_back(colors[p]);
      std::sort(cs.begin(), cs.end());
      std::sort(ps.begin(), ps.end());
      sigs[v] = {colors[v], std::move(cs), std::move(ps)};
    }
    std::vector<Sig> uniq = sigs;
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    int old_count = 1 + *std::max_element(colors.begin(), colors.end());
    for (std::size_t v = 0; v < n; ++v)
      colors[v] = static_cast<int>(
          std::lower_bound(uniq.begin(), uniq.end(), sigs[v]) - uniq.begin());
    if (static_cast<int>(uniq.size()) == old_count) return;
  }
}

std::string encode(const Dense& d, const std::vector<int>& position) {
  const std::size_t n = d.ids.size();
  std::vector<int> at(n);  // position -> vertex index
  for (std::size_t v = 0; v < n; ++v) at[position[v]] = static_cast<int>(v);
  std::ostringstream os;
  os << n << ';';
  for (std::size_t i = 0; i < n; ++i) {
    int v = at[i];
    if (d.label_rank[v] >= 0) os << d.labels[d.label_rank[v]];
    os << ':';
    std::vector<int> cs;
    for (int c : d.children[v]) cs.push_back(position[c]);
    std::sort(cs.begin(), cs.end());
    for (std::size_t k = 0; k < cs.size(); ++k) os << (k ? "," : "") << cs[k];
    os << ';';
  }
  return os.str();
}

struct Search {
  const Dense& d;
  std::string best_key;
  std::vector<int> best_position;
  bool have_best = false;

  void run(std::vector<int> colors) {
    refine(d, colors);
    const std::size_t n = d.ids.size();

    // Smallest color with more than one member, if any.
    std::map<int, std::vector<int>> classes;
    for (std::size_t v = 0; v < n; ++v) classes[colors[v]].push_back(static_cast<int>(v));
    const std::vector<int>* target = nullptr;
    for (const auto& [color, members] : classes) {
      if (members.size() > 1) {
        target = &members;
        break;
      }
    }

    if (!target) {
      std::vector<int> position(n);
      for (std::size_t v = 0; v < n; ++v) position[v] = colors[v];
      std::string key = encode(d, position);
      if (!have_best || key < best_key) {
        best_key = std::move(key);
        best_position = std::move(position);
        have_best = true;
      }
      return;
    }

    // Individualize each member of the target class in turn; exploring the
    // whole class keeps the minimum isomorphism-invariant.
    int fresh = 1 + *std::max_element(colors.begin(), colors.end());
    for (int v : *target) {
      std::vector<int> branch = colors;
      branch[v] = fresh;
      run(std::move(branch));
    }
  }
};

CanonicalForm canonical_of_dense(const Dense& d) {
  CanonicalForm out;
  const std::size_t n = d.ids.size();
  if (n == 0) {
    out.key = "0;";
    return out;
  }

  std::vector<int> colors(n);
  {
    using Init = std::tuple<std::size_t, std::size_t, int>;
    std::vector<Init> sigs(n), uniq;
    for (std::size_t v = 0; v < n; ++v)
      sigs[v] = {d.parents[v].size(), d.children[v].size(), d.label_rank[v]};
    uniq = sigs;
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    for (std::size_t v = 0; v < n; ++v)
      colors[v] = static_cast<int>(
          std::lower_bound(uniq.begin(), uniq.end(), sigs[v]) - uniq.begin());
  }

  Search search{d, {}, {}, false};
  search.run(std::move(colors));

  out.key = std::move(search.best_key);
  out.order.resize(n);
  for (std::size_t v = 0; v < n; ++v) out.order[search.best_position[v]] = d.ids[v];
  return out;
}

}  // namespace

CanonicalForm canonical_form(const TrackedDigraph& g) { return canonical_of_dense(densify(g)); }

std::string canonical_key(const TrackedDigraph& g) { return canonical_form(g).key; }

std::string canonical_key(const PhyloNetwork& net) { return canonical_key(net.digraph()); }

std::optional<std::map<VertexId, VertexId>> find_isomorphism(const TrackedDigraph& a,
                                                             const TrackedDigraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.arc_count() != b.arc_count())
    return std::nullopt;
  CanonicalForm ca = canonical_form(a);
  CanonicalForm cb = canonical_form(b);
  if (ca.key != cb.key) return std::nullopt;
  // Equal keys mean equal adjacency and labels position-by-position, so
  // pairing the canonical orders is a label-preserving isomorphism.
  std::map<VertexId, VertexId> out;
  for (std::size_t i = 0; i < ca.order.size(); ++i) out[ca.order[i]] = cb.order[i];
  return out;
}

std::optional<std::map<VertexId, VertexId>> find_isomorphism(const PhyloNetwork& a,
                                                             const PhyloNetwork& b) {
  return find_isomorphism(a.digraph(), b.digraph());
}

bool is_isomorphic(const PhyloNetwork& a, const PhyloNetwork& b) {
  return find_isomorphism(a, b).has_value();
}

}  // namespace orchard
