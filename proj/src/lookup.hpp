#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "term.hpp"

namespace selfie {

enum class NodeKind { Constant, Free, Bound, Lambda, Application };

const char* node_kind_name(NodeKind k);

struct NodeInfo {
  NodeKind kind;
  std::string symbol;  // name of the node, or of the spine head
  int child_count;     // flattened
  int depth;           // path length
  int subterm_id;      // equal subterms share an id within one table
};

/// Path-indexed view of one root term. Built once, then queried in
/// constant time instead of re-traversing the tree.
class LookupTable {
 public:
  static LookupTable build(TermPtr root);

  const TermPtr& root() const { return root_; }

  /// Node info at a path; nullptr if the path does not resolve.
  const NodeInfo* info_at(const Path& p) const;

  /// All paths whose subterm structurally equals `t`; empty if absent.
  const std::vector<Path>& occurrences_of(const TermPtr& t) const;

  /// One representative per distinct subterm, in id order.
  const std::vector<TermPtr>& all_subterms() const;

  /// Every path of the tree in lexicographic order.
  const std::vector<Path>& all_paths() const;

  /// 0..max(max_children, max_depth) inclusive.
  std::vector<int> number_domain() const;

  int max_depth() const { return max_depth_; }
  int max_children() const { return max_children_; }
  size_t node_count() const { return paths_.size(); }

  /// One line per path: `path TAB kind TAB symbol TAB child_count`.
  std::vector<std::string> dump_lines() const;

  /// Total number of queries answered; used by tests to verify which
  /// table an evaluation touched.
  std::uint64_t query_count() const { return query_count_; }

 private:
  TermPtr root_;
  std::map<Path, NodeInfo> by_path_;
  std::map<std::string, int> id_by_key_;
  std::vector<std::vector<Path>> paths_by_id_;
  std::vector<TermPtr> representative_;
  std::vector<Path> paths_;
  int max_depth_ = 0;
  int max_children_ = 0;
  mutable std::uint64_t query_count_ = 0;
};

}  // namespace selfie
