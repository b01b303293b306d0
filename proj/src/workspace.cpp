#include "relq/workspace.hpp"

#include <algorithm>
#include <sstream>

namespace relq {

namespace {

[[noreturn]] void fail(int line, const std::string& msg) {
  throw RelqError("line " + std::to_string(line) + ": " + msg);
}

template <typename T>
const T& find_named(const std::vector<std::pair<std::string, T>>& v,
                    const std::string& name, const char* kind) {
  for (const auto& [n, x] : v)
    if (n == name) return x;
  throw RelqError(std::string("unknown ") + kind + " '" + name + "'");
}

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
    } else if (line[i] == '#') {
      break;
    } else if (line[i] == '{' || line[i] == '(') {
      char close = line[i] == '{' ? '}' : ')';
      auto j = line.find(close, i);
      if (j == std::string::npos)
        throw RelqError(std::string("unterminated '") + line[i] + "'");
      out.push_back(line.substr(i, j - i + 1));
      i = j + 1;
    } else {
      auto j = i;
      while (j < line.size() &&
             !std::isspace(static_cast<unsigned char>(line[j])) &&
             line[j] != '#')
        ++j;
      out.push_back(line.substr(i, j - i));
      i = j;
    }
  }
  return out;
}

Mask parse_set(const std::string& tok, const FinitePoset& p, int line) {
  if (tok.size() < 2 || tok.front() != '{' || tok.back() != '}')
    fail(line, "expected a set like {a b}, got '" + tok + "'");
  std::istringstream in(tok.substr(1, tok.size() - 2));
  Mask m = 0;
  std::string label;
  while (in >> label) m |= bit(p.index_of(label));
  return m;
}

std::pair<std::string, std::string> parse_pair(const std::string& tok,
                                               int line) {
  if (tok.size() < 3 || tok.front() != '(' || tok.back() != ')')
    fail(line, "expected a pair like (a,b), got '" + tok + "'");
  auto comma = tok.find(',');
  if (comma == std::string::npos) fail(line, "pair lacks a comma: " + tok);
  auto trim = [](std::string s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
      s.erase(s.begin());
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
      s.pop_back();
    return s;
  };
  return {trim(tok.substr(1, comma - 1)),
          trim(tok.substr(comma + 1, tok.size() - comma - 2))};
}

}  // namespace

const FinitePoset& Workspace::poset(const std::string& name) const {
  return find_named(posets, name, "poset");
}
const ClosureSpace& Workspace::space(const std::string& name) const {
  return find_named(spaces, name, "space");
}
const WorkspaceFamily& Workspace::family(const std::string& name) const {
  return find_named(families, name, "family");
}
const WorkspaceRelation& Workspace::relation(const std::string& name) const {
  return find_named(relations, name, "relation");
}
const WorkspaceMap& Workspace::map(const std::string& name) const {
  return find_named(maps, name, "map");
}

Workspace parse_workspace(const std::string& text) {
  Workspace w;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;

  // block state
  std::string kind, name;
  int opened = 0;
  std::vector<std::vector<std::string>> body;

  auto close_block = [&]() {
    int line = opened;
    if (kind == "poset") {
      std::vector<std::string> elements;
      std::vector<std::pair<std::string, std::string>> covers;
      for (const auto& toks : body) {
        if (toks[0] == "elements")
          elements.insert(elements.end(), toks.begin() + 1, toks.end());
        else if (toks[0] == "covers")
          for (std::size_t i = 1; i < toks.size(); ++i) {
            auto lt = toks[i].find('<');
            if (lt == std::string::npos)
              fail(line, "cover must look like a<b: " + toks[i]);
            covers.emplace_back(toks[i].substr(0, lt), toks[i].substr(lt + 1));
          }
        else
          fail(line, "unknown poset directive '" + toks[0] + "'");
      }
      w.posets.emplace_back(name, FinitePoset::from_covers(elements, covers));
    } else if (kind == "space") {
      std::vector<std::string> points;
      std::vector<std::string> closed_toks;
      for (const auto& toks : body) {
        if (toks[0] == "points")
          points.insert(points.end(), toks.begin() + 1, toks.end());
        else if (toks[0] == "closed")
          closed_toks.insert(closed_toks.end(), toks.begin() + 1, toks.end());
        else
          fail(line, "unknown space directive '" + toks[0] + "'");
      }
      const int n = static_cast<int>(points.size());
      std::vector<std::string> labels = points;
      std::vector<Mask> sets;
      for (const auto& tok : closed_toks) {
        std::istringstream ss(tok.substr(1, tok.size() - 2));
        if (tok.size() < 2 || tok.front() != '{' || tok.back() != '}')
          fail(line, "closed sets are written {a b}: " + tok);
        Mask m = 0;
        std::string lab;
        while (ss >> lab) {
          auto it = std::find(points.begin(), points.end(), lab);
          if (it == points.end()) fail(line, "unknown point '" + lab + "'");
          m |= bit(static_cast<int>(it - points.begin()));
        }
        sets.push_back(m);
      }
      w.spaces.emplace_back(
          name, ClosureSpace::from_generators(n, std::move(sets),
                                              std::move(labels)));
    } else if (kind == "family") {
      std::string over;
      bool have_sets = false, builtin = false;
      std::vector<std::string> set_toks;
      std::string builtin_name;
      for (const auto& toks : body) {
        if (toks[0] == "poset" && toks.size() == 2)
          over = toks[1];
        else if (toks[0] == "sets") {
          have_sets = true;
          set_toks.insert(set_toks.end(), toks.begin() + 1, toks.end());
        } else if (toks[0] == "builtin" && toks.size() == 2) {
          builtin = true;
          builtin_name = toks[1];
        } else
          fail(line, "unknown family directive '" + toks[0] + "'");
      }
      if (over.empty()) fail(line, "family needs a poset reference");
      const FinitePoset& p = w.poset(over);
      if (builtin == have_sets)
        fail(line, "family needs exactly one of 'sets' or 'builtin'");
      SubsetFamily fam = builtin ? builtin_family(builtin_name, p)
                                 : SubsetFamily::explicit_family([&] {
                                     std::vector<Mask> ms;
                                     for (const auto& t : set_toks)
                                       ms.push_back(parse_set(t, p, line));
                                     return ms;
                                   }());
      w.families.emplace_back(name, WorkspaceFamily{over, std::move(fam)});
    } else if (kind == "relation") {
      std::string lp, rp;
      std::vector<std::string> pair_toks;
      for (const auto& toks : body) {
        if (toks[0] == "posets" && toks.size() == 3) {
          lp = toks[1];
          rp = toks[2];
        } else if (toks[0] == "pairs")
          pair_toks.insert(pair_toks.end(), toks.begin() + 1, toks.end());
        else
          fail(line, "unknown relation directive '" + toks[0] + "'");
      }
      if (lp.empty()) fail(line, "relation needs 'posets <left> <right>'");
      const FinitePoset& l = w.poset(lp);
      const FinitePoset& r = w.poset(rp);
      Rel rel = rel_empty(l.size(), r.size());
      for (const auto& tok : pair_toks) {
        auto [a, b] = parse_pair(tok, line);
        int x = l.index_of(a), y = r.index_of(b);
        if (has(l.bottom_mask(), x) || has(r.bottom_mask(), y))
          fail(line, "pair (" + a + "," + b +
                         ") touches a bottom element; relations live on the "
                         "truncated carriers");
        rel_add(rel, x, y);
      }
      // down-close within the truncated carriers (lower-relation convention)
      Rel closed = rel_empty(l.size(), r.size());
      for (auto [x, y] : rel_pairs(rel))
        for_bits(l.below(x) & l.truncated_carrier(), [&](int x2) {
          closed.rows[x2] |= r.below(y) & r.truncated_carrier();
        });
      w.relations.emplace_back(name, WorkspaceRelation{lp, rp, closed});
    } else if (kind == "map") {
      std::string fp, tp;
      std::vector<std::string> val_toks;
      for (const auto& toks : body) {
        if (toks[0] == "posets" && toks.size() == 3) {
          fp = toks[1];
          tp = toks[2];
        } else if (toks[0] == "values")
          val_toks.insert(val_toks.end(), toks.begin() + 1, toks.end());
        else
          fail(line, "unknown map directive '" + toks[0] + "'");
      }
      if (fp.empty()) fail(line, "map needs 'posets <from> <to>'");
      const FinitePoset& f = w.poset(fp);
      const FinitePoset& t = w.poset(tp);
      std::vector<int> values(f.size(), -1);
      for (const auto& tok : val_toks) {
        auto colon = tok.find(':');
        if (colon == std::string::npos)
          fail(line, "map values are written from:to, got '" + tok + "'");
        values[f.index_of(tok.substr(0, colon))] =
            t.index_of(tok.substr(colon + 1));
      }
      for (int i = 0; i < f.size(); ++i)
        if (values[i] < 0)
          fail(line, "map misses a value for '" + f.label(i) + "'");
      w.maps.emplace_back(name, WorkspaceMap{fp, tp, std::move(values)});
    }
    kind.clear();
    body.clear();
  };

  while (std::getline(in, raw)) {
    ++lineno;
    std::vector<std::string> toks;
    try {
      toks = tokenize(raw);
    } catch (const RelqError& e) {
      fail(lineno, e.what());
    }
    if (toks.empty()) continue;
    if (kind.empty()) {
      if (toks.size() != 2 ||
          (toks[0] != "poset" && toks[0] != "space" && toks[0] != "family" &&
           toks[0] != "relation" && toks[0] != "map"))
        fail(lineno, "expected a block header like 'poset <name>'");
      kind = toks[0];
      name = toks[1];
      opened = lineno;
    } else if (toks.size() == 1 && toks[0] == "end") {
      try {
        close_block();
      } catch (const RelqError& e) {
        std::string what = e.what();
        if (what.rfind("line ", 0) == 0) throw;
        fail(lineno, what);
      }
    } else {
      body.push_back(std::move(toks));
    }
  }
  if (!kind.empty()) fail(lineno, "unterminated '" + kind + "' block");
  return w;
}

namespace {

std::string set_text(const FinitePoset& p, Mask m) {
  std::string out = "{";
  bool first = true;
  for_bits(m, [&](int i) {
    if (!first) out += ' ';
    out += p.label(i);
    first = false;
  });
  return out + "}";
}

}  // namespace

std::string emit_workspace(const Workspace& w) {
  std::ostringstream out;
  for (const auto& [name, p] : w.posets) {
    out << "poset " << name << "\n  elements";
    for (int i = 0; i < p.size(); ++i) out << ' ' << p.label(i);
    out << "\n  covers";
    for (int y = 0; y < p.size(); ++y)
      for_bits(p.below(y) & ~bit(y), [&](int x) {
        // cover: nothing strictly between x and y
        Mask between = p.below(y) & p.above(x) & ~bit(x) & ~bit(y);
        if (between == 0) out << ' ' << p.label(x) << '<' << p.label(y);
      });
    out << "\nend\n";
  }
  for (const auto& [name, s] : w.spaces) {
    out << "space " << name << "\n  points";
    for (int i = 0; i < s.size(); ++i) out << ' ' << s.label(i);
    out << "\n  closed";
    for (Mask m : s.closed()) {
      out << " {";
      bool first = true;
      for_bits(m, [&](int i) {
        if (!first) out << ' ';
        out << s.label(i);
        first = false;
      });
      out << '}';
    }
    out << "\nend\n";
  }
  for (const auto& [name, f] : w.families) {
    out << "family " << name << "\n  poset " << f.poset << "\n";
    const FinitePoset& p = w.poset(f.poset);
    switch (f.family.kind) {
      case SubsetFamily::Kind::Powerset:
        out << "  builtin @powerset\n";
        break;
      case SubsetFamily::Kind::PowersetNonempty:
        // no builtin spells this one; write it out
        out << "  sets";
        for (Mask m : f.family.materialize(p.size())) out << ' ' << set_text(p, m);
        out << "\n";
        break;
      case SubsetFamily::Kind::Explicit:
        out << "  sets";
        for (Mask m : f.family.members) out << ' ' << set_text(p, m);
        out << "\n";
        break;
    }
    out << "end\n";
  }
  for (const auto& [name, r] : w.relations) {
    out << "relation " << name << "\n  posets " << r.left << ' ' << r.right
        << "\n  pairs";
    const FinitePoset& l = w.poset(r.left);
    const FinitePoset& rp = w.poset(r.right);
    for (auto [x, y] : rel_pairs(r.rel))
      out << " (" << l.label(x) << ',' << rp.label(y) << ')';
    out << "\nend\n";
  }
  for (const auto& [name, m] : w.maps) {
    out << "map " << name << "\n  posets " << m.from << ' ' << m.to
        << "\n  values";
    const FinitePoset& f = w.poset(m.from);
    const FinitePoset& t = w.poset(m.to);
    for (int i = 0; i < f.size(); ++i)
      out << ' ' << f.label(i) << ':' << t.label(m.values[i]);
    out << "\nend\n";
  }
  return out.str();
}

std::string dot_poset(const std::string& name, const FinitePoset& p) {
  std::ostringstream out;
  out << "digraph \"" << name << "\" {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  for (int i = 0; i < p.size(); ++i)
    out << "  n" << i << " [label=\"" << p.label(i) << "\"];\n";
  for (int y = 0; y < p.size(); ++y)
    for_bits(p.below(y) & ~bit(y), [&](int x) {
      Mask between = p.below(y) & p.above(x) & ~bit(x) & ~bit(y);
      if (between == 0) out << "  n" << x << " -> n" << y << ";\n";
    });
  out << "}\n";
  return out.str();
}

std::string dot_space(const std::string& name, const ClosureSpace& s) {
  // Hasse diagram of the closed-set lattice
  const auto& cs = s.closed();
  auto label = [&](Mask m) {
    std::string out = "{";
    bool first = true;
    for_bits(m, [&](int i) {
      if (!first) out += ' ';
      out += s.label(i);
      first = false;
    });
    return out + "}";
  };
  std::ostringstream out;
  out << "digraph \"" << name << "\" {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  for (std::size_t i = 0; i < cs.size(); ++i)
    out << "  n" << i << " [label=\"" << label(cs[i]) << "\"];\n";
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (std::size_t j = 0; j < cs.size(); ++j) {
      if (i == j || !subset(cs[i], cs[j])) continue;
      bool covered = true;
      for (std::size_t k = 0; k < cs.size() && covered; ++k)
        if (k != i && k != j && subset(cs[i], cs[k]) && subset(cs[k], cs[j]))
          covered = false;
      if (covered) out << "  n" << i << " -> n" << j << ";\n";
    }
  out << "}\n";
  return out.str();
}

}  // namespace relq
