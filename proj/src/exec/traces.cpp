#include <deque>
#include <map>
#include <unordered_map>

#include "tock2ta/exec/executor.hpp"

namespace tock2ta::exec {

namespace {

struct KeyHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = v.size();
    for (int x : v) h = h * 1000003u ^ static_cast<std::size_t>(x + 7);
    return h;
  }
};

// Configurations interned to dense ids, with memoised successor lists.
class StateSpace {
 public:
  StateSpace(const ta::NetworkModel& net, std::size_t cap) : exec_(net), cap_(cap) {}

  int intern(const Configuration& c) {
    std::vector<int> key = c.locations;
    key.insert(key.end(), c.ints.begin(), c.ints.end());
    key.insert(key.end(), c.clocks.begin(), c.clocks.end());
    auto it = ids_.find(key);
    if (it != ids_.end()) return it->second;
    if (configs_.size() >= cap_) {
      throw BoundExceeded("configuration budget of " + std::to_string(cap_) + " exceeded");
    }
    int id = static_cast<int>(configs_.size());
    configs_.push_back(c);
    succ_.emplace_back();
    done_.push_back(false);
    ids_.emplace(std::move(key), id);
    return id;
  }

  struct Move {
    std::string label;  // empty for internal steps
    int target;
  };

  const std::vector<Move>& moves(int id, const std::set<std::string>& erased) {
    if (!done_[id]) {
      std::vector<Move> out;
      const Configuration cfg = configs_[id];
      for (const auto& s : exec_.enabledSteps(cfg)) {
        std::string label;
        if ((s.kind == NetStep::Kind::Binary || s.kind == NetStep::Kind::Broadcast) && !erased.count(s.channel)) {
          label = s.channel;
        }
        int t = intern(exec_.apply(cfg, s));
        out.push_back({std::move(label), t});
      }
      succ_[id] = std::move(out);
      done_[id] = true;
    }
    return succ_[id];
  }

  const Configuration& config(int id) const { return configs_[id]; }
  const Executor& executor() const { return exec_; }

 private:
  Executor exec_;
  std::size_t cap_;
  std::vector<Configuration> configs_;
  std::unordered_map<std::vector<int>, int, KeyHash> ids_;
  std::vector<std::vector<Move>> succ_;
  std::vector<bool> done_;
};

class Determiniser {
 public:
  Determiniser(StateSpace& space, const std::set<std::string>& erased, std::size_t cap)
      : space_(space), erased_(erased), cap_(cap) {}

  int closure(std::vector<int> seed) {
    std::set<int> seen(seed.begin(), seed.end());
    std::vector<int> stack(seen.begin(), seen.end());
    while (!stack.empty()) {
      int s = stack.back();
      stack.pop_back();
      for (const auto& m : space_.moves(s, erased_)) {
        if (m.label.empty() && seen.insert(m.target).second) stack.push_back(m.target);
      }
    }
    std::vector<int> key(seen.begin(), seen.end());
    auto it = ids_.find(key);
    if (it != ids_.end()) return it->second;
    if (sets_.size() >= cap_) throw BoundExceeded("determinised state budget exceeded");
    int id = static_cast<int>(sets_.size());
    sets_.push_back(key);
    next_.emplace_back();
    done_.push_back(false);
    ids_.emplace(std::move(key), id);
    return id;
  }

  std::vector<std::pair<std::string, int>> moves(int set) {
    if (!done_[set]) {
      std::map<std::string, std::vector<int>> groups;
      for (int c : sets_[set]) {
        for (const auto& m : space_.moves(c, erased_)) {
          if (!m.label.empty()) groups[m.label].push_back(m.target);
        }
      }
      std::vector<std::pair<std::string, int>> out;
      for (auto& [label, targets] : groups) out.emplace_back(label, closure(std::move(targets)));
      next_[set] = std::move(out);
      done_[set] = true;
    }
    return next_[set];
  }

  void explore(int set, Trace& trace, std::size_t depth, TraceSet& out) {
    out.traces.insert(trace);
    if (trace.size() == depth) return;
    for (const auto& [label, next] : moves(set)) {
      trace.push_back(label);
      explore(next, trace, depth, out);
      trace.pop_back();
    }
  }

  const std::vector<int>& members(int set) const { return sets_[set]; }

 private:
  StateSpace& space_;
  const std::set<std::string>& erased_;
  std::size_t cap_;
  std::vector<std::vector<int>> sets_;
  std::map<std::vector<int>, int> ids_;
  std::vector<std::vector<std::pair<std::string, int>>> next_;
  std::vector<bool> done_;
};

}  // namespace

TraceSet tracesErasing(const ta::NetworkModel& net, std::size_t depth, const std::set<std::string>& erased,
                       std::size_t stateCap) {
  StateSpace space(net, stateCap);
  Determiniser det(space, erased, stateCap);
  TraceSet out;
  out.depth = depth;
  Trace trace;
  det.explore(det.closure({space.intern(space.executor().initial())}), trace, depth, out);
  return out;
}

TraceSet tracesTAPrime(const ta::NetworkModel& net, std::size_t depth, std::size_t stateCap) {
  return tracesErasing(net, depth, {}, stateCap);
}

TraceSet tracesTA(const ta::NetworkModel& net, std::size_t depth, std::size_t stateCap) {
  return tracesErasing(net, depth, ta::erasureSet(net), stateCap);
}

LivenessReport checkTimeLiveness(const ta::NetworkModel& net, std::size_t observableDepth,
                                 std::size_t internalSteps, std::size_t stateCap) {
  const std::set<std::string> erased = ta::erasureSet(net);
  StateSpace space(net, stateCap);
  Determiniser det(space, erased, stateCap);

  // Every configuration inside a determinised state reached within the depth.
  std::set<int> configs;
  std::set<int> visited;
  std::deque<std::pair<int, std::size_t>> queue;
  int root = det.closure({space.intern(space.executor().initial())});
  queue.emplace_back(root, 0);
  visited.insert(root);
  while (!queue.empty()) {
    auto [set, d] = queue.front();
    queue.pop_front();
    configs.insert(det.members(set).begin(), det.members(set).end());
    if (d == observableDepth) continue;
    for (const auto& [label, next] : det.moves(set)) {
      if (visited.insert(next).second) queue.emplace_back(next, d + 1);
    }
  }

  LivenessReport report;
  std::set<int> live;  // configurations known to reach a time step
  for (int c : configs) {
    ++report.configurations;
    std::set<int> seen{c};
    std::vector<int> frontier{c};
    bool found = false;
    for (std::size_t step = 0; step <= internalSteps && !found && !frontier.empty(); ++step) {
      std::vector<int> nextFrontier;
      for (int x : frontier) {
        if (live.count(x) || space.executor().timeCanPass(space.config(x))) {
          found = true;
          break;
        }
        if (step == internalSteps) continue;
        for (const auto& m : space.moves(x, erased)) {
          if (seen.insert(m.target).second) nextFrontier.push_back(m.target);
        }
      }
      frontier = std::move(nextFrontier);
    }
    if (found) {
      live.insert(c);
    } else {
      report.ok = false;
      report.witness = space.executor().describe(space.config(c));
      return report;
    }
  }
  return report;
}

}  // namespace tock2ta::exec
