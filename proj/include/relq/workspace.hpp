#pragma once

#include <string>
#include <utility>
#include <vector>

#include "relq/completion.hpp"
#include "relq/tensor.hpp"

namespace relq {

struct WorkspaceFamily {
  std::string poset;
  SubsetFamily family;
};

// rel is indexed by the full carriers of both posets but only touches the
// truncated carriers; it is down-closed within them on load.
struct WorkspaceRelation {
  std::string left, right;
  Rel rel;
};

struct WorkspaceMap {
  std::string from, to;
  std::vector<int> values;
};

struct Workspace {
  std::vector<std::pair<std::string, FinitePoset>> posets;
  std::vector<std::pair<std::string, ClosureSpace>> spaces;
  std::vector<std::pair<std::string, WorkspaceFamily>> families;
  std::vector<std::pair<std::string, WorkspaceRelation>> relations;
  std::vector<std::pair<std::string, WorkspaceMap>> maps;

  const FinitePoset& poset(const std::string& name) const;
  const ClosureSpace& space(const std::string& name) const;
  const WorkspaceFamily& family(const std::string& name) const;
  const WorkspaceRelation& relation(const std::string& name) const;
  const WorkspaceMap& map(const std::string& name) const;
};

// Line-oriented format: '#' comments; blocks opened by
// "poset|space|family|relation|map <name>" and closed by "end"; sets are
// written {a b}, pairs (a,b).  Throws RelqError with a line number on
// malformed input, dangling references, or pairs touching a bottom element.
Workspace parse_workspace(const std::string& text);
std::string emit_workspace(const Workspace& w);

std::string dot_poset(const std::string& name, const FinitePoset& p);
std::string dot_space(const std::string& name, const ClosureSpace& s);

}  // namespace relq
