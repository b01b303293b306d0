#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "relq/corpus.hpp"
#include "relq/quantale.hpp"
#include "relq/suites.hpp"
#include "relq/workspace.hpp"

using namespace relq;

namespace {

struct Ctx {
  std::string workspace_file;
  std::optional<Workspace> ws;
  Corpus corpus = curated_corpus();

  void load() {
    if (workspace_file.empty()) return;
    std::ifstream in(workspace_file);
    if (!in) throw RelqError("cannot open workspace '" + workspace_file + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    ws = parse_workspace(buf.str());
  }

  const FinitePoset& poset(const std::string& name) const {
    if (ws)
      for (const auto& [n, p] : ws->posets)
        if (n == name) return p;
    for (const auto& m : corpus.posets)
      if (m.name == name) return m.poset;
    throw RelqError("unknown poset '" + name + "'");
  }

  const ClosureSpace& space(const std::string& name) const {
    if (ws)
      for (const auto& [n, s] : ws->spaces)
        if (n == name) return s;
    for (const auto& m : corpus.spaces)
      if (m.name == name) return m.space;
    throw RelqError("unknown space '" + name + "'");
  }

  SubsetFamily family(const std::string& spec, const FinitePoset& p) const {
    if (!spec.empty() && spec[0] == '@') return builtin_family(spec, p);
    if (ws) return ws->family(spec).family;
    throw RelqError("unknown family '" + spec + "'");
  }

  const WorkspaceRelation& relation(const std::string& name) const {
    if (!ws) throw RelqError("relation '" + name + "' needs --workspace");
    return ws->relation(name);
  }
};

std::string yn(bool b) { return b ? "yes" : "no"; }

Rel to_truncated(const Truncation& tl, const Truncation& tr, const Rel& full) {
  Rel out = rel_empty(tl.truncated.poset.size(), tr.truncated.poset.size());
  for (auto [x, y] : rel_pairs(full)) {
    int nx = tl.new_of_old[x], ny = tr.new_of_old[y];
    if (nx >= 0 && ny >= 0) rel_add(out, nx, ny);
  }
  return out;
}

std::string rel_text(const Truncation& tl, const Truncation& tr, const Rel& t) {
  std::string out = "{";
  bool first = true;
  for (auto [x, y] : rel_pairs(t)) {
    if (!first) out += " ";
    first = false;
    out += "(" + tl.full.poset.label(tl.old_of_new[x]) + "," +
           tr.full.poset.label(tr.old_of_new[y]) + ")";
  }
  return out + "}";
}

void print_poset_report(const std::string& name, const FinitePoset& p) {
  const PosetProps& props = p.props();
  std::cout << "poset " << name << ": " << p.size() << " elements\n";
  std::cout << "complete lattice: " << yn(props.complete_lattice) << "\n";
  std::cout << "distributive: " << yn(props.distributive) << "\n";
  std::cout << "boolean: " << yn(props.boolean) << "\n";
  std::cout << "atomistic: " << yn(props.atomistic) << "\n";
  std::cout << "pseudocomplemented: " << yn(props.pseudocomplemented);
  if (!props.pseudocomplemented) {
    for (int x = 0; x < p.size(); ++x)
      if (!pseudocomplement(p, x)) {
        std::cout << ", witness element " << p.label(x);
        break;
      }
  }
  std::cout << "\n";
  std::cout << "bottom: "
            << (props.bottom ? p.label(*props.bottom) : std::string("none"))
            << ", top: "
            << (props.top ? p.label(*props.top) : std::string("none")) << "\n";
  std::cout << "atoms: " << subset_to_string(p, props.atoms) << "\n";
}

void print_space_report(const std::string& name, const ClosureSpace& s) {
  const SpaceProps& props = s.props();
  std::cout << "space " << name << ": " << s.size() << " points, "
            << s.closed().size() << " closed sets\n";
  std::cout << "unbounded: " << yn(props.unbounded) << "\n";
  std::cout << "T0: " << yn(props.t0) << "\n";
  std::cout << "polarized: " << yn(props.polarized) << "\n";
  std::cout << "discrete: "
            << yn(s.closed().size() == (std::size_t{1} << s.size())) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tensor products of closure spaces and relation quantales"};
  app.require_subcommand(1);
  app.fallthrough();

  Ctx ctx;
  int max_tensors = 0;
  app.add_option("--workspace", ctx.workspace_file, "workspace file to load");
  app.add_option("--max-tensors", max_tensors,
                 "enumeration guard (overrides RELQ_MAX_TENSORS)");

  // check
  auto* check = app.add_subcommand("check", "report structural properties");
  std::string check_kind, check_name;
  check->add_option("kind", check_kind, "poset|space")->required();
  check->add_option("name", check_name)->required();

  // tensor
  auto* tensor = app.add_subcommand("tensor", "enumerate a tensor product");
  std::string t_left, t_right, t_faml = "@powerset", t_famr = "@powerset";
  bool t_list = false, t_count = false;
  tensor->add_option("left", t_left)->required();
  tensor->add_option("right", t_right)->required();
  tensor->add_option("--family-left", t_faml);
  tensor->add_option("--family-right", t_famr);
  tensor->add_flag("--list", t_list, "print every tensor");
  tensor->add_flag("--count", t_count, "print the count only");

  // closure
  auto* closure = app.add_subcommand("closure", "t, t^2 and the least tensor");
  std::string c_rel, c_faml = "@powerset", c_famr = "@powerset";
  closure->add_option("relation", c_rel)->required();
  closure->add_option("--family-left", c_faml);
  closure->add_option("--family-right", c_famr);

  // compose
  auto* compose = app.add_subcommand("compose", "tensor-closed product R (.) S");
  std::string k_r, k_s, k_faml = "@powerset", k_famm = "@powerset",
                        k_famr = "@powerset";
  bool k_degen = false;
  compose->add_option("r", k_r)->required();
  compose->add_option("s", k_s)->required();
  compose->add_option("--family-left", k_faml);
  compose->add_option("--family-mid", k_famm);
  compose->add_option("--family-right", k_famr);
  compose->add_flag("--demonstrate-degenerate", k_degen,
                    "also close the product over the full, untruncated "
                    "carriers, where it collapses to the largest tensor");

  // mult
  auto* mult = app.add_subcommand("mult", "multiplication table of a square");
  std::string m_poset, m_faml = "@powerset", m_famr = "@powerset";
  bool m_table = false;
  mult->add_option("poset", m_poset)->required();
  mult->add_option("--family-left", m_faml);
  mult->add_option("--family-right", m_famr);
  mult->add_flag("--table", m_table);

  // galois
  auto* galois = app.add_subcommand("galois", "map <-> tensor round trip");
  std::string g_poset, g_map;
  galois->add_option("poset", g_poset)->required();
  galois->add_option("--map", g_map, "comma-separated label:label pairs")
      ->required();

  // verify
  auto* verify = app.add_subcommand("verify", "run an oracle suite");
  std::string v_suite;
  int v_max_size = 0;
  unsigned v_seed = 1;
  verify->add_option("--suite", v_suite)->required();
  verify->add_option("--max-size", v_max_size,
                     "also sweep every lattice of at most this size");
  verify->add_option("--seed", v_seed);

  // dot
  auto* dot = app.add_subcommand("dot", "DOT diagram of a poset or space");
  std::string d_kind, d_name;
  dot->add_option("kind", d_kind, "poset|space")->required();
  dot->add_option("name", d_name)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (max_tensors > 0)
      setenv("RELQ_MAX_TENSORS", std::to_string(max_tensors).c_str(), 1);
    ctx.load();

    if (*check) {
      if (check_kind == "poset")
        print_poset_report(check_name, ctx.poset(check_name));
      else if (check_kind == "space")
        print_space_report(check_name, ctx.space(check_name));
      else
        throw RelqError("check expects 'poset' or 'space'");
      return 0;
    }

    if (*tensor) {
      const FinitePoset& pl = ctx.poset(t_left);
      const FinitePoset& pr = ctx.poset(t_right);
      AugmentedPoset al{pl, ctx.family(t_faml, pl)};
      AugmentedPoset ar{pr, ctx.family(t_famr, pr)};
      TensorBase tb = TensorBase::truncated(al, ar);
      Truncation tl = make_truncation(al), tr = make_truncation(ar);
      auto ts = tb.enumerate_tensors();
      std::cout << ts.size() << " tensors\n";
      if (t_list && !t_count) {
        int i = 0;
        for (const Rel& t : ts)
          std::cout << "R" << i++ << " = " << rel_text(tl, tr, t) << "\n";
      }
      return 0;
    }

    if (*closure) {
      const WorkspaceRelation& wr = ctx.relation(c_rel);
      const FinitePoset& pl = ctx.poset(wr.left);
      const FinitePoset& pr = ctx.poset(wr.right);
      AugmentedPoset al{pl, ctx.family(c_faml, pl)};
      AugmentedPoset ar{pr, ctx.family(c_famr, pr)};
      TensorBase tb = TensorBase::truncated(al, ar);
      Truncation tl = make_truncation(al), tr = make_truncation(ar);
      Rel r = tb.down_close(to_truncated(tl, tr, wr.rel));
      Rel t1 = tb.t_step(r);
      std::cout << "R      = " << rel_text(tl, tr, r) << "\n";
      std::cout << "t(R)   = " << rel_text(tl, tr, t1) << "\n";
      std::cout << "t^2(R) = " << rel_text(tl, tr, tb.t_step(t1)) << "\n";
      std::cout << "tbar(R) = " << rel_text(tl, tr, tb.tensor_closure(r))
                << "\n";
      return 0;
    }

    if (*compose) {
      const WorkspaceRelation& wr = ctx.relation(k_r);
      const WorkspaceRelation& ws_ = ctx.relation(k_s);
      if (wr.right != ws_.left)
        throw RelqError("middle posets differ: '" + wr.right + "' vs '" +
                        ws_.left + "'");
      const FinitePoset& pa = ctx.poset(wr.left);
      const FinitePoset& pb = ctx.poset(wr.right);
      const FinitePoset& pc = ctx.poset(ws_.right);
      AugmentedPoset aa{pa, ctx.family(k_faml, pa)};
      AugmentedPoset ab{pb, ctx.family(k_famm, pb)};
      AugmentedPoset ac{pc, ctx.family(k_famr, pc)};
      Truncation ta = make_truncation(aa), tb_ = make_truncation(ab),
                 tc = make_truncation(ac);
      TensorBase base_ab = TensorBase::truncated(aa, ab);
      TensorBase base_ac = TensorBase::truncated(aa, ac);
      TensorBase base_bc = TensorBase::truncated(ab, ac);
      Rel r = base_ab.down_close(to_truncated(ta, tb_, wr.rel));
      Rel s = base_bc.down_close(to_truncated(tb_, tc, ws_.rel));
      Rel prod = relation_product(r, s);
      std::cout << "R.S     = " << rel_text(ta, tc, prod) << "\n";
      std::cout << "R (.) S = " << rel_text(ta, tc, odot(base_ac, r, s))
                << "\n";
      if (k_degen) {
        TensorBase full_ab(aa, ab), full_bc(ab, ac), full_ac(aa, ac);
        // over the full carriers every tensor contains the obligatory
        // cross, so the product already relates everything through the
        // middle bottom and the closure collapses
        Rel closed = full_ac.tensor_closure(
            relation_product(full_ab.tensor_closure(wr.rel),
                             full_bc.tensor_closure(ws_.rel)));
        bool largest =
            closed == full_ac.tensor_closure(rel_full(pa.size(), pc.size()));
        std::cout << "full-carrier closure of R.S has " << rel_size(closed)
                  << " of " << pa.size() * pc.size()
                  << " pairs; largest tensor: " << yn(largest) << "\n";
      }
      return 0;
    }

    if (*mult) {
      const FinitePoset& p = ctx.poset(m_poset);
      AugmentedPoset al{p, ctx.family(m_faml, p)};
      AugmentedPoset ar{p, ctx.family(m_famr, p)};
      std::cout << mult_table_text(TensorBase::truncated(al, ar));
      return 0;
    }

    if (*galois) {
      const FinitePoset& p = ctx.poset(g_poset);
      AugmentedPoset ap{p, family_powerset()};
      Truncation tr = make_truncation(ap);
      std::vector<int> f(p.size(), -1);
      std::stringstream ss(g_map);
      for (std::string item; std::getline(ss, item, ',');) {
        auto colon = item.find(':');
        if (colon == std::string::npos)
          throw RelqError("map entries look like label:label");
        f[p.index_of(item.substr(0, colon))] =
            p.index_of(item.substr(colon + 1));
      }
      for (int x = 0; x < p.size(); ++x)
        if (f[x] < 0)
          throw RelqError("map misses element " + p.label(x));
      std::cout << "antitone: " << yn(is_antitone(p, p, f))
                << ", galois: " << yn(is_galois_map(p, p, f)) << "\n";
      Rel t = map_to_tensor(tr, tr, f);
      std::cout << "tensor: " << rel_text(tr, tr, t) << "\n";
      std::vector<int> back = tensor_to_map(tr, tr, t);
      std::cout << "map of the tensor:";
      for (int x = 0; x < p.size(); ++x)
        std::cout << " " << p.label(x) << ":" << p.label(back[x]);
      std::cout << "\nround trip exact: " << yn(back == f) << "\n";
      return 0;
    }

    if (*verify) {
      Corpus corpus = v_max_size > 0 ? generate_corpus(v_max_size) : ctx.corpus;
      SuiteReport sr = run_suite(v_suite, corpus, v_seed);
      std::cout << sr.to_text();
      return sr.ok() ? 0 : 1;
    }

    if (*dot) {
      if (d_kind == "poset")
        std::cout << dot_poset(d_name, ctx.poset(d_name));
      else if (d_kind == "space")
        std::cout << dot_space(d_name, ctx.space(d_name));
      else
        throw RelqError("dot expects 'poset' or 'space'");
      return 0;
    }
  } catch (const RelqError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
