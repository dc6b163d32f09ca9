#pragma once

// Second pass: a signed graph over targets plus the event node. Targets
// linked directly to the event take that edge's sign; others inherit
// sign(edge) * sign(neighbour) until nothing changes, and any left over take
// the sign product along a shortest path to the event.

#include <deque>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "stancenet/error.hpp"
#include "stancenet/pass1.hpp"
#include "stancenet/targets.hpp"

namespace stancenet {

using NodePair = std::pair<std::string, std::string>;

inline NodePair make_pair_key(std::string a, std::string b) {
  if (b < a) std::swap(a, b);
  return {std::move(a), std::move(b)};
}

struct SignedEdge {
  Sign sign = Sign::Pos;
  std::size_t pos_count = 0;
  std::size_t neg_count = 0;
  bool conflicted = false;
  // Inferred target-to-event edge added during path resolution.
  bool hypothetical = false;
};

enum class Resolution { EventEdge, Neighbor, Path };

inline std::string_view to_string(Resolution r) {
  switch (r) {
    case Resolution::EventEdge: return "event-edge";
    case Resolution::Neighbor: return "neighbor";
    case Resolution::Path: return "path";
  }
  return "event-edge";
}

struct SignedNetwork {
  std::set<std::string> nodes{std::string(kEventId)};
  std::map<NodePair, SignedEdge> edges;
  // Pairs whose evidence was an exact tie; no edge is kept for them.
  std::set<NodePair> tied_pairs;
  std::map<std::string, Sign> resolved;
  std::map<std::string, Resolution> resolved_by;
  // Target nodes without a resolved sign.
  std::set<std::string> unresolved;
  // Targets whose derivations disagreed; never resolved.
  std::set<std::string> contradicted;
  std::vector<std::string> log;

  void add_node(const std::string& id) {
    nodes.insert(id);
    if (id != kEventId && !resolved.contains(id)) unresolved.insert(id);
  }

  void set_edge(const std::string& a, const std::string& b, SignedEdge e) {
    if (a == b) throw input_error("self-loop on " + a);
    add_node(a);
    add_node(b);
    edges[make_pair_key(a, b)] = e;
  }

  // Evidence edge shortcut for tests and tools.
  void add_edge(const std::string& a, const std::string& b, Sign s) {
    set_edge(a, b, {s, s == Sign::Pos ? 1u : 0u, s == Sign::Neg ? 1u : 0u, false, false});
  }

  const SignedEdge* edge(const std::string& a, const std::string& b) const {
    auto it = edges.find(make_pair_key(a, b));
    return it == edges.end() ? nullptr : &it->second;
  }

  // Neighbours over evidence edges, in id order.
  std::vector<std::pair<std::string, Sign>> neighbors(const std::string& id) const {
    std::vector<std::pair<std::string, Sign>> out;
    for (const auto& [key, e] : edges) {
      if (e.hypothetical) continue;
      if (key.first == id) out.emplace_back(key.second, e.sign);
      else if (key.second == id) out.emplace_back(key.first, e.sign);
    }
    return out;
  }

  std::vector<std::string> targets() const {
    std::vector<std::string> out;
    for (const auto& n : nodes) {
      if (n != kEventId) out.push_back(n);
    }
    return out;
  }

  void resolve(const std::string& id, Sign s, Resolution how) {
    resolved[id] = s;
    resolved_by[id] = how;
    unresolved.erase(id);
  }

  std::optional<Sign> polarity(const std::string& id) const {
    if (id == kEventId) return Sign::Pos;
    auto it = resolved.find(id);
    if (it == resolved.end()) return std::nullopt;
    return it->second;
  }
};

// One edge per unordered pair, signed by majority vote; an exact tie drops
// the pair into tied_pairs.
inline SignedNetwork build_network(const std::vector<PolarityAssertion>& assertions,
                                   const TargetSet& targets) {
  for (const auto* t : targets.all()) {
    if (t->id == kEventId) throw input_error("target id \"EVENT\" is reserved");
  }
  std::map<NodePair, std::pair<std::size_t, std::size_t>> votes;
  for (const auto& a : assertions) {
    for (const auto* id : {&a.from, &a.to}) {
      if (*id != kEventId && targets.find(*id) == nullptr)
        throw input_error("assertion references unknown target \"" + *id + "\"");
    }
    if (a.from == a.to) throw input_error("assertion from a node to itself: " + a.from);
    auto& v = votes[make_pair_key(a.from, a.to)];
    (a.sign == Sign::Pos ? v.first : v.second)++;
  }
  SignedNetwork net;
  for (const auto& [key, v] : votes) {
    net.add_node(key.first);
    net.add_node(key.second);
    if (v.first == v.second) {
      net.tied_pairs.insert(key);
      net.log.push_back("tied evidence between " + key.first + " and " + key.second +
                        "; pair dropped");
      continue;
    }
    SignedEdge e;
    e.sign = v.first > v.second ? Sign::Pos : Sign::Neg;
    e.pos_count = v.first;
    e.neg_count = v.second;
    e.conflicted = v.first > 0 && v.second > 0;
    net.edges[key] = e;
  }
  return net;
}

// Direct event edges, then rounds of R(E,g_i) = R(g_i,g_j) * R(E,g_j) over
// already-resolved neighbours until a fixpoint. All derivations in a round
// are computed before any is applied; disagreeing derivations mark the
// target contradicted instead of picking one.
inline void resolve_direct(SignedNetwork& net) {
  const std::string event(kEventId);
  for (const auto& [id, s] : net.neighbors(event)) {
    if (!net.resolved.contains(id)) net.resolve(id, s, Resolution::EventEdge);
  }
  while (true) {
    std::map<std::string, std::set<Sign>> derived;
    for (const auto& id : net.unresolved) {
      if (net.contradicted.contains(id)) continue;
      for (const auto& [other, s] : net.neighbors(id)) {
        if (other == event) continue;
        if (auto it = net.resolved.find(other); it != net.resolved.end())
          derived[id].insert(multiply(s, it->second));
      }
    }
    if (derived.empty()) break;
    for (const auto& [id, signs] : derived) {
      if (signs.size() == 1) {
        net.resolve(id, *signs.begin(), Resolution::Neighbor);
      } else {
        net.contradicted.insert(id);
        net.log.push_back("contradictory derivations for " + id + "; left unresolved");
      }
    }
  }
}

// Breadth-first shortest evidence path from `target` to the event (ties
// broken by id order). Returns the node sequence including both ends.
inline std::optional<std::vector<std::string>> shortest_event_path(const SignedNetwork& net,
                                                                   const std::string& target) {
  const std::string event(kEventId);
  std::map<std::string, std::string> parent;
  std::deque<std::string> queue{target};
  parent[target] = target;
  while (!queue.empty()) {
    auto cur = queue.front();
    queue.pop_front();
    if (cur == event) break;
    for (const auto& [next, s] : net.neighbors(cur)) {
      if (parent.contains(next)) continue;
      parent[next] = cur;
      queue.push_back(next);
    }
  }
  if (!parent.contains(event)) return std::nullopt;
  std::vector<std::string> path{event};
  while (path.back() != target) path.push_back(parent[path.back()]);
  return std::vector<std::string>(path.rbegin(), path.rend());
}

// Sign product along the shortest path to the event. The target is resolved
// and every target on the path without an event edge gets a hypothetical
// one carrying the product of its remaining path.
inline std::optional<Sign> resolve_path(SignedNetwork& net, const std::string& target) {
  if (auto it = net.resolved.find(target); it != net.resolved.end()) return it->second;
  if (target == kEventId || !net.nodes.contains(target)) return std::nullopt;
  auto path = shortest_event_path(net, target);
  if (!path) return std::nullopt;

  // suffix[i] = product of edge signs from path[i] to the event.
  const auto k = path->size();
  std::vector<Sign> suffix(k, Sign::Pos);
  for (std::size_t i = k - 1; i-- > 0;) {
    suffix[i] = multiply(net.edge((*path)[i], (*path)[i + 1])->sign, suffix[i + 1]);
  }
  net.resolve(target, suffix[0], Resolution::Path);
  const std::string event(kEventId);
  for (std::size_t i = 0; i + 1 < k; ++i) {
    const auto& node = (*path)[i];
    if (net.edge(node, event) != nullptr || net.contradicted.contains(node)) continue;
    if (auto it = net.resolved.find(node); it != net.resolved.end() && it->second != suffix[i])
      continue;
    net.set_edge(node, event, {suffix[i], 0, 0, false, true});
  }
  return suffix[0];
}

inline void propagate(SignedNetwork& net) {
  resolve_direct(net);
  std::vector<std::string> pending(net.unresolved.begin(), net.unresolved.end());
  for (const auto& id : pending) {
    if (net.contradicted.contains(id)) continue;
    resolve_path(net, id);
  }
}

struct BalanceViolation {
  std::string a;
  std::string b;
  Sign sign = Sign::Pos;
};

struct Partition {
  std::set<std::string> g_plus;
  std::set<std::string> g_minus;
  std::vector<BalanceViolation> violations;
};

// Splits resolved targets by sign and checks every evidence edge between
// resolved nodes (the event counts as positive): positive edges must stay
// inside a group, negative ones must cross.
inline Partition partition(const SignedNetwork& net) {
  Partition p;
  for (const auto& [id, s] : net.resolved) (s == Sign::Pos ? p.g_plus : p.g_minus).insert(id);
  for (const auto& [key, e] : net.edges) {
    if (e.hypothetical) continue;
    auto a = net.polarity(key.first);
    auto b = net.polarity(key.second);
    if (!a || !b) continue;
    if (multiply(*a, *b) != e.sign) p.violations.push_back({key.first, key.second, e.sign});
  }
  return p;
}

// Share of network targets resolved by a direct event edge, by propagation,
// or not at all.
struct Coverage {
  std::size_t targets = 0;
  std::size_t pass1 = 0;
  std::size_t pass2 = 0;
  std::size_t unresolved = 0;

  double fraction(std::size_t n) const {
    return targets == 0 ? 0.0 : static_cast<double>(n) / static_cast<double>(targets);
  }
  double pass1_fraction() const { return fraction(pass1); }
  double pass2_fraction() const { return fraction(pass2); }
  double unresolved_fraction() const { return fraction(unresolved); }

  bool operator==(const Coverage&) const = default;
};

inline Coverage coverage_report(const SignedNetwork& net) {
  Coverage c;
  for (const auto& id : net.targets()) {
    ++c.targets;
    auto it = net.resolved_by.find(id);
    if (it == net.resolved_by.end()) ++c.unresolved;
    else if (it->second == Resolution::EventEdge) ++c.pass1;
    else ++c.pass2;
  }
  return c;
}

// Graphviz rendering; edge colour and label carry the sign, hypothetical
// edges are dashed.
inline std::string to_dot(const SignedNetwork& net) {
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    return out + "\"";
  };
  std::ostringstream os;
  os << "graph signed_network {\n";
  for (const auto& n : net.nodes) {
    os << "  " << quote(n);
    if (n == kEventId) {
      os << " [shape=box]";
    } else if (auto s = net.polarity(n)) {
      os << " [polarity=\"" << to_string(*s) << "\"]";
    } else {
      os << " [polarity=\"?\"]";
    }
    os << ";\n";
  }
  for (const auto& [key, e] : net.edges) {
    os << "  " << quote(key.first) << " -- " << quote(key.second) << " [sign=\""
       << to_string(e.sign) << "\", color=" << (e.sign == Sign::Pos ? "green" : "red");
    if (e.hypothetical) os << ", style=dashed";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace stancenet
