#include "dgt/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>
#include <utility>

namespace dgt {

namespace {

double entropy(const std::map<Label, std::size_t>& counts, double total) {
  double h = 0.0;
  for (const auto& [label, c] : counts) {
    const double p = static_cast<double>(c) / total;
    h -= p * std::log(p);
  }
  return h;
}

const Label& label_of(const Partition& p, NodeId v) {
  auto it = p.find(v);
  if (it == p.end()) {
    throw PreconditionError("partition has no label for node " + std::to_string(v));
  }
  return it->second;
}

}  // namespace

double nmi(const Partition& x, const Partition& y) {
  if (x.empty() || y.empty()) throw PreconditionError("nmi requires non-empty partitions");
  if (x.size() != y.size()) throw PreconditionError("nmi requires identical node sets");

  std::map<Label, std::size_t> cx;
  std::map<Label, std::size_t> cy;
  std::map<std::pair<Label, Label>, std::size_t> joint;
  auto iy = y.begin();
  for (const auto& [v, lx] : x) {
    if (iy->first != v) throw PreconditionError("nmi requires identical node sets");
    ++cx[lx];
    ++cy[iy->second];
    ++joint[{lx, iy->second}];
    ++iy;
  }

  const double total = static_cast<double>(x.size());
  const double hx = entropy(cx, total);
  const double hy = entropy(cy, total);
  if (cx.size() == 1 && cy.size() == 1) return 1.0;
  if (cx.size() == 1 || cy.size() == 1) return 0.0;

  double mi = 0.0;
  for (const auto& [key, c] : joint) {
    // P(x,y) / (P(x) P(y)) with the counts combined before dividing.
    const double ratio = static_cast<double>(c) * total /
                         (static_cast<double>(cx[key.first]) * static_cast<double>(cy[key.second]));
    mi += static_cast<double>(c) / total * std::log(ratio);
  }
  const double result = 2.0 * mi / (hx + hy);
  return std::clamp(result, 0.0, 1.0);
}

double modularity_directed(const SnapshotGraph& g, const Partition& p) {
  if (g.m() == 0) throw Error("modularity of an empty graph");
  const double m = static_cast<double>(g.m());

  // Per community: internal edges, summed in-degree and summed out-degree.
  std::map<Label, double> internal;
  std::map<Label, double> din;
  std::map<Label, double> dout;
  for (NodeId v : g.nodes()) {
    const Label c = label_of(p, v);
    din[c] += static_cast<double>(g.in_degree(v));
    dout[c] += static_cast<double>(g.out_degree(v));
    for (NodeId u : g.out_neighbors(v)) {
      if (label_of(p, u) == c) internal[c] += 1.0;
    }
  }
  double q = 0.0;
  for (const auto& [c, in_sum] : din) {
    q += internal[c] / m - in_sum * dout[c] / (m * m);
  }
  return q;
}

double modularity_undirected(const SnapshotGraph& g, const Partition& p) {
  if (g.m() == 0) throw Error("modularity of an empty graph");
  for (const auto& [i, j] : g.edges()) {
    if (!g.has_edge(j, i)) {
      throw PreconditionError("modularity_undirected needs a symmetric graph; edge " +
                              std::to_string(i) + "->" + std::to_string(j) + " has no reverse");
    }
  }
  const double two_m = static_cast<double>(g.m());

  std::map<Label, double> internal;
  std::map<Label, double> degree;
  for (NodeId v : g.nodes()) {
    const Label c = label_of(p, v);
    degree[c] += static_cast<double>(g.out_degree(v));
    for (NodeId u : g.out_neighbors(v)) {
      if (label_of(p, u) == c) internal[c] += 1.0;
    }
  }
  double q = 0.0;
  for (const auto& [c, d] : degree) {
    q += internal[c] / two_m - (d / two_m) * (d / two_m);
  }
  return q;
}

std::uint64_t count_error(std::span<const std::size_t> predicted,
                          std::span<const std::size_t> actual) {
  if (predicted.size() != actual.size()) {
    throw PreconditionError("count_error needs equal-length series");
  }
  std::uint64_t total = 0;
  for (std::size_t t = 0; t < predicted.size(); ++t) {
    total += predicted[t] > actual[t] ? predicted[t] - actual[t] : actual[t] - predicted[t];
  }
  return total;
}

std::size_t community_count(const Partition& p) {
  std::set<Label> labels;
  for (const auto& [v, label] : p) labels.insert(label);
  return labels.size();
}

Partition restrict_to(const Partition& p, const Partition& domain) {
  Partition out;
  for (const auto& [v, unused] : domain) {
    if (auto it = p.find(v); it != p.end()) out.emplace_hint(out.end(), v, it->second);
  }
  return out;
}

Partition with_unlabeled_community(const Partition& truth, const SnapshotGraph& g) {
  Label extra = 0;
  for (const auto& [v, label] : truth) extra = std::max(extra, label + 1);
  Partition out;
  for (NodeId v : g.nodes()) {
    auto it = truth.find(v);
    out.emplace_hint(out.end(), v, it == truth.end() ? extra : it->second);
  }
  return out;
}

}  // namespace dgt
