#include "lookup.hpp"

#include <algorithm>

namespace selfie {

const char* node_kind_name(NodeKind k) {
  switch (k) {
    case NodeKind::Constant: return "constant";
    case NodeKind::Free: return "free";
    case NodeKind::Bound: return "bound";
    case NodeKind::Lambda: return "lambda";
    case NodeKind::Application: return "application";
  }
  return "?";
}

namespace {

NodeKind node_kind_of(const TermPtr& t) {
  switch (t->kind) {
    case Term::Kind::Constant: return NodeKind::Constant;
    case Term::Kind::Free: return NodeKind::Free;
    case Term::Kind::Bound: return NodeKind::Bound;
    case Term::Kind::Lambda: return NodeKind::Lambda;
    case Term::Kind::App: return NodeKind::Application;
  }
  return NodeKind::Constant;
}

std::string display_symbol(const TermPtr& t) {
  switch (t->kind) {
    case Term::Kind::Constant:
    case Term::Kind::Free:
      return t->name;
    case Term::Kind::Bound:
      return "#" + std::to_string(t->index);
    case Term::Kind::Lambda:
      return "%";
    case Term::Kind::App:
      return display_symbol(flatten_spine(t).front());
  }
  return "?";
}

}  // namespace

LookupTable LookupTable::build(TermPtr root) {
  LookupTable tbl;
  tbl.root_ = std::move(root);

  // Walk the flattened tree in path order so subterm ids come out in a
  // deterministic first-visit order.
  struct Frame {
    Path path;
    TermPtr node;
  };
  std::vector<Frame> stack;
  stack.push_back({Path{}, tbl.root_});
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    auto children = flattened_child_terms(f.node);
    std::string key = term_key(f.node);
    auto [it, inserted] = tbl.id_by_key_.emplace(key, static_cast<int>(tbl.representative_.size()));
    if (inserted) {
      tbl.representative_.push_back(f.node);
      tbl.paths_by_id_.emplace_back();
    }
    int id = it->second;
    NodeInfo info{node_kind_of(f.node), display_symbol(f.node), static_cast<int>(children.size()),
                  static_cast<int>(f.path.size()), id};
    tbl.max_depth_ = std::max(tbl.max_depth_, info.depth);
    tbl.max_children_ = std::max(tbl.max_children_, info.child_count);
    tbl.paths_by_id_[static_cast<size_t>(id)].push_back(f.path);
    tbl.by_path_.emplace(f.path, std::move(info));
    // Push children in reverse so they pop in order; the id assignment
    // above already happened for this node.
    for (size_t i = children.size(); i-- > 0;) {
      Path p = f.path;
      p.push_back(static_cast<int>(i) + 1);
      stack.push_back({std::move(p), children[i]});
    }
  }

  // Ids were assigned in DFS visit order, which for a stack-based
  // preorder with ordered children is exactly lexicographic path order
  // of first occurrence. Sort each occurrence list for determinism.
  for (auto& v : tbl.paths_by_id_) std::sort(v.begin(), v.end());
  tbl.paths_.reserve(tbl.by_path_.size());
  for (const auto& [p, _] : tbl.by_path_) tbl.paths_.push_back(p);
  return tbl;
}

const NodeInfo* LookupTable::info_at(const Path& p) const {
  ++query_count_;
  auto it = by_path_.find(p);
  return it == by_path_.end() ? nullptr : &it->second;
}

const std::vector<Path>& LookupTable::occurrences_of(const TermPtr& t) const {
  ++query_count_;
  static const std::vector<Path> kEmpty;
  auto it = id_by_key_.find(term_key(t));
  if (it == id_by_key_.end()) return kEmpty;
  return paths_by_id_[static_cast<size_t>(it->second)];
}

const std::vector<TermPtr>& LookupTable::all_subterms() const {
  ++query_count_;
  return representative_;
}

const std::vector<Path>& LookupTable::all_paths() const {
  ++query_count_;
  return paths_;
}

std::vector<int> LookupTable::number_domain() const {
  ++query_count_;
  int hi = std::max(max_children_, max_depth_);
  std::vector<int> out;
  out.reserve(static_cast<size_t>(hi) + 1);
  for (int i = 0; i <= hi; ++i) out.push_back(i);
  return out;
}

std::vector<std::string> LookupTable::dump_lines() const {
  std::vector<std::string> out;
  out.reserve(by_path_.size());
  for (const auto& [p, info] : by_path_) {
    out.push_back(format_path(p) + "\t" + node_kind_name(info.kind) + "\t" + info.symbol + "\t" +
                  std::to_string(info.child_count));
  }
  return out;
}

}  // namespace selfie
