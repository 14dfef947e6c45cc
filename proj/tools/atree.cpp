// atree: command line front end for the arithmetree library
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "arithmetree/errors.hpp"
#include "arithmetree/grove.hpp"
#include "arithmetree/hopf.hpp"
#include "arithmetree/json_io.hpp"
#include "arithmetree/lattice.hpp"
#include "arithmetree/verify.hpp"

using namespace atree;
using nlohmann::json;

namespace {

struct Options {
  std::string format = "text";
  bool ascii = false;
  std::string out;
  int degree = -1;
  std::vector<std::string> args;
  std::string kind;
  std::string mode = "closed";
  std::string suite = "all";
  int max_degree = 4;
  int n = 0, m = 0;
};

std::string tree_of(const Name& v) { return decode_name(v).str(); }

void emit_names(std::ostream& os, const Options& o, const std::vector<Name>& vs) {
  if (o.format == "json") {
    json a = json::array();
    for (const auto& v : vs) a.push_back(to_json(v));
    os << a.dump(2) << "\n";
    return;
  }
  for (const auto& v : vs) os << tree_of(v) << "\n";
}

void emit_name(std::ostream& os, const Options& o, const Name& v) {
  if (o.format == "json")
    os << to_json(v).dump(2) << "\n";
  else
    os << tree_of(v) << "\n";
}

void emit_sum(std::ostream& os, const Options& o, const LinComb& x) {
  if (o.format == "json")
    os << to_json(x).dump(2) << "\n";
  else
    os << to_text(x) << "\n";
}

void emit_grove(std::ostream& os, const Options& o, const Grove& g) {
  if (o.format == "json")
    os << to_json(g).dump(2) << "\n";
  else
    os << g.str(o.ascii) << "\n";
}

int need_degree(const Options& o) {
  if (o.degree < 0) throw PreconditionError("--degree is required");
  return o.degree;
}

Op op_kind(const std::string& k) {
  if (k == "prec" || k == "<") return Op::Prec;
  if (k == "succ" || k == ">") return Op::Succ;
  if (k == "bullet" || k == ".") return Op::Bullet;
  throw PreconditionError("unknown --kind '" + k + "'");
}

GroveOp grove_kind(const std::string& k) {
  if (k == "left" || k == "dashv") return GroveOp::Left;
  if (k == "right" || k == "vdash") return GroveOp::Right;
  if (k == "mid" || k == "perp") return GroveOp::Mid;
  throw PreconditionError("unknown --kind '" + k + "'");
}

int run(const std::string& cmd, const Options& o, std::ostream& os) {
  const auto& a = o.args;
  if (cmd == "enumerate") {
    const int n = need_degree(o);
    const auto& ts = trees_of_degree(n);
    if (o.format == "json") {
      json arr = json::array();
      for (const auto& t : ts) arr.push_back(to_json(encode_name(t)));
      os << arr.dump(2) << "\n";
    } else {
      for (const auto& t : ts) os << t.str() << "\n";
    }
  } else if (cmd == "encode") {
    Name v = encode_name(Tree::parse(a.at(0)));
    if (o.format == "json")
      os << to_json(v).dump(2) << "\n";
    else
      os << v.str() << "\n";
  } else if (cmd == "decode") {
    emit_name(os, o, parse_literal(a.at(0)));
  } else if (cmd == "order") {
    const int n = need_degree(o);
    if (o.format == "json") {
      const auto& p = Poset::of_degree(n);
      json nodes = json::array(), edges = json::array();
      for (int i = 0; i < p.size(); ++i) {
        nodes.push_back(to_json(p.name(i)));
        for (int k : p.upper_covers(i)) edges.push_back({i, k});
      }
      os << json{{"degree", n}, {"nodes", nodes}, {"covers", edges}}.dump(2) << "\n";
    } else {
      os << hasse_dot(n);
    }
  } else if (cmd == "meet" || cmd == "join") {
    Name v = parse_literal(a.at(0)), w = parse_literal(a.at(1));
    emit_name(os, o, cmd == "meet" ? meet(v, w) : join(v, w));
  } else if (cmd == "covers") {
    auto cs = covers(parse_literal(a.at(0)));
    std::vector<Name> vs(cs.begin(), cs.end());
    std::sort(vs.begin(), vs.end(), name_literal_less);
    emit_names(os, o, vs);
  } else if (cmd == "moebius") {
    if (o.mode != "closed" && o.mode != "brute") throw PreconditionError("--mode is closed or brute");
    Name v = parse_literal(a.at(0));
    int mu = moebius(v, o.mode == "closed" ? MoebiusMode::Closed : MoebiusMode::Brute);
    if (o.format == "json")
      os << json{{"name", v.str()}, {"tree", tree_of(v)}, {"moebius", mu}}.dump(2) << "\n";
    else
      os << mu << "\n";
  } else if (cmd == "atoms") {
    emit_names(os, o, atoms(need_degree(o)));
  } else if (cmd == "chain") {
    emit_names(os, o, left_modular_chain(need_degree(o)));
  } else if (cmd == "charpoly") {
    auto cp = characteristic_polynomial(need_degree(o));
    if (o.format == "json") {
      json r = json::object();
      for (auto [root, mult] : cp.roots) r[std::to_string(root)] = mult;
      os << json{{"polynomial", cp.str()}, {"roots", r}}.dump(2) << "\n";
    } else {
      os << cp.str() << "\n";
    }
  } else if (cmd == "star") {
    emit_sum(os, o, star(parse_lincomb(a.at(0)), parse_lincomb(a.at(1))));
  } else if (cmd == "op") {
    emit_sum(os, o, tri_op(op_kind(o.kind), parse_lincomb(a.at(0)), parse_lincomb(a.at(1))));
  } else if (cmd == "omega") {
    Tree t = Tree::parse(a.at(0));
    auto e = universal_expression(t);
    if (o.format == "json")
      os << json{{"tree", t.str()}, {"expression", e.str()}, {"generators", e.gen_count()}}.dump(2)
         << "\n";
    else
      os << e.str() << "\n";
  } else if (cmd == "add") {
    emit_grove(os, o, dend_add(Grove::parse(a.at(0)), Grove::parse(a.at(1))));
  } else if (cmd == "groveop") {
    emit_grove(os, o, grove_op(grove_kind(o.kind), Grove::parse(a.at(0)), Grove::parse(a.at(1))));
  } else if (cmd == "mul") {
    emit_grove(os, o, dend_mul(Grove::parse(a.at(0)), Grove::parse(a.at(1))));
  } else if (cmd == "total") {
    emit_grove(os, o, total_grove(need_degree(o)));
  } else if (cmd == "decompose") {
    auto [u, v] = decompose_pair(parse_literal(a.at(0)), o.n, o.m);
    if (o.format == "json")
      os << json{{"left", to_json(u)}, {"right", to_json(v)}}.dump(2) << "\n";
    else
      os << tree_of(u) << "\n" << tree_of(v) << "\n";
  } else if (cmd == "coproduct") {
    auto d = coproduct(parse_lincomb(a.at(0)));
    if (o.format == "json")
      os << to_json(d).dump(2) << "\n";
    else
      os << to_text(d) << "\n";
  } else if (cmd == "primcheck") {
    bool p = is_primitive(parse_lincomb(a.at(0)));
    if (o.format == "json")
      os << json{{"primitive", p}}.dump(2) << "\n";
    else
      os << (p ? "primitive" : "not primitive") << "\n";
  } else if (cmd == "invariants") {
    const int n = need_degree(o);
    auto c = invariant_count(n);
    if (o.format == "json")
      os << json{{"degree", n}, {"invariant_count", c}}.dump(2) << "\n";
    else
      os << c << "\n";
  } else if (cmd == "verify") {
    std::vector<std::string> suites =
        o.suite == "all" ? suite_names() : std::vector<std::string>{o.suite};
    bool ok = true;
    json j = json::array();
    for (const auto& s : suites) {
      auto r = run_suite(s, o.max_degree);
      ok = ok && r.ok();
      for (const auto& c : r.checks) {
        if (o.format == "json")
          j.push_back({{"suite", s}, {"check", c.name}, {"ok", c.ok}, {"detail", c.detail}});
        else
          os << (c.ok ? "ok   " : "FAIL ") << s << ": " << c.name
             << (c.detail.empty() ? "" : " (" + c.detail + ")") << "\n";
      }
    }
    if (o.format == "json") os << j.dump(2) << "\n";
    return ok ? 0 : 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Planar rooted trees, their names, lattices, trialgebra and arithmetree"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "text, json or dot")
      ->check(CLI::IsMember({"text", "json", "dot"}));
  app.add_flag("--ascii", o.ascii, "write u instead of the union sign");
  app.add_option("--out", o.out, "write the output to a file");

  auto sub = [&](const char* name, const char* help, int nargs) {
    auto* s = app.add_subcommand(name, help);
    if (nargs > 0) s->add_option("args", o.args, "tree, name, sum or grove literals")->expected(nargs)->required();
    return s;
  };
  auto with_degree = [&](CLI::App* s) {
    s->add_option("--degree,-n", o.degree, "degree n (trees with n+1 leaves)")->required();
    return s;
  };
  with_degree(sub("enumerate", "list T_n in literal order", 0));
  sub("encode", "tree literal to name", 1);
  sub("decode", "name literal to tree", 1);
  with_degree(sub("order", "Hasse diagram of T_n as DOT", 0));
  sub("meet", "meet of two trees", 2);
  sub("join", "join of two trees", 2);
  sub("covers", "upper covers of a tree", 1);
  sub("moebius", "mu(0, v)", 1)->add_option("--mode", o.mode, "closed or brute");
  with_degree(sub("atoms", "atoms of T_n", 0));
  with_degree(sub("chain", "left-modular maximal chain of T_n", 0));
  with_degree(sub("charpoly", "characteristic polynomial of T_n", 0));
  sub("star", "v * w", 2);
  sub("op", "v < w, v > w or v . w", 2)->add_option("--kind", o.kind, "prec, succ or bullet")->required();
  sub("omega", "universal expression of a tree", 1);
  sub("add", "dendriform addition of groves", 2);
  sub("groveop", "left, right or mid grove operation", 2)
      ->add_option("--kind", o.kind, "left, right or mid")
      ->required();
  sub("mul", "dendriform multiplication of groves", 2);
  with_degree(sub("total", "the grove of all of T_n", 0));
  auto* dec = sub("decompose", "sandwich pair of w for a split n+m", 1);
  dec->add_option("--n", o.n, "left degree")->required();
  dec->add_option("--m", o.m, "right degree")->required();
  sub("coproduct", "coproduct of a sum", 1);
  sub("primcheck", "is a sum primitive", 1);
  with_degree(sub("invariants", "number of trees of T_n fixed by the involution", 0));
  auto* ver = sub("verify", "run property suites", 0);
  ver->add_option("--suite", o.suite, "counting, lattice, trialgebra, grove, hopf or all")
      ->check(CLI::IsMember({"all", "counting", "lattice", "trialgebra", "grove", "hopf"}));
  ver->add_option("--max-degree", o.max_degree, "degree bound")->check(CLI::Range(1, 7));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  std::ostringstream os;
  int code = 0;
  try {
    code = run(cmd, o, os);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  if (o.out.empty()) {
    std::cout << os.str();
  } else {
    std::ofstream f(o.out, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot write " << o.out << "\n";
      return 1;
    }
    f << os.str();
  }
  return code;
}
