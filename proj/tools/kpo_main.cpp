// kpo: command-line front end for oriented-poset generating functions.
//
// Subcommands mirror the library: show/k/eq/invariants/filter work on poset
// files, transform/compose/skew build new posets (printed in the same text
// format, so they pipe back in via '-'), census and verify run the
// exhaustive small-n machinery.
//
// Exit codes: 0 success or "true", 1 negative result, 2 usage or input
// error, 3 size limit exceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "kpo/census.hpp"
#include "kpo/invariants.hpp"
#include "kpo/kgen.hpp"
#include "kpo/poset.hpp"
#include "kpo/qsym.hpp"
#include "kpo/transforms.hpp"

namespace {

kpo::OrientedPoset load(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw kpo::poset_error(kpo::Errc::ParseError, "cannot open " + path);
    buf << in.rdbuf();
  }
  return kpo::parse_poset(buf.str());
}

int exit_code_for(const kpo::poset_error& e) {
  return e.code() == kpo::Errc::SizeLimitExceeded ? 3 : 2;
}

std::string dot_of(const kpo::OrientedPoset& p, bool with_labels) {
  std::ostringstream out;
  out << "digraph poset {\n  rankdir=BT;\n  node [shape=circle];\n";
  auto lab = kpo::realize_labeling(p);
  for (int v = 0; v < p.size(); v++) {
    out << "  n" << v << " [label=\"" << v;
    if (with_labels && lab) out << "\\n#" << lab->labels[v];
    out << "\"];\n";
  }
  for (const kpo::Cover& c : p.covers()) {
    out << "  n" << c.lo << " -> n" << c.hi;
    if (c.kind == kpo::EdgeKind::Strict)
      out << " [color=\"black:invis:black\"]";  // double line, strict
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"generating functions of labeled and oriented posets"};
  app.require_subcommand(1);

  std::string file, file_b, basis = "M", op, out_path, shape_text;
  std::vector<std::string> files;
  bool dot = false, with_labels = false, natural = false;
  int census_n = 5, verify_n = 5;
  int jobs = 1;
  if (const char* env = std::getenv("KPO_JOBS")) jobs = std::max(1, std::atoi(env));

  auto* show = app.add_subcommand("show", "pretty-print a poset");
  show->add_option("file", file)->required();
  show->add_flag("--dot", dot, "emit graphviz (strict edges doubled)");
  show->add_flag("--labels", with_labels, "annotate a witness labeling");

  auto* cmd_k = app.add_subcommand("k", "generating function of a poset");
  cmd_k->add_option("file", file)->required();
  cmd_k->add_option("--basis", basis)->check(CLI::IsMember({"M", "F"}));

  auto* eq = app.add_subcommand("eq", "exit 0 when generating functions agree");
  eq->add_option("a", file)->required();
  eq->add_option("b", file_b)->required();

  auto* inv = app.add_subcommand("invariants", "invariant profile as JSON");
  inv->add_option("file", file)->required();

  auto* filter = app.add_subcommand("filter", "necessary-condition battery");
  filter->add_option("a", file)->required();
  filter->add_option("b", file_b)->required();

  auto* transform = app.add_subcommand("transform", "apply a unary operation");
  transform->add_option("file", file)->required();
  transform->add_option("--op", op)
      ->required()
      ->check(CLI::IsMember({"bar", "star", "remove-jump0", "add-top:w", "add-top:s",
                             "add-bottom:w", "add-bottom:s"}));

  auto* compose = app.add_subcommand("compose", "combine posets");
  compose->add_option("--op", op)
      ->required()
      ->check(CLI::IsMember(
          {"du", "up", "Up", "ne", "Ne", "nenw", "NeNw", "neNw", "layered"}));
  compose->add_option("files", files,
                      "two inputs, or five for layered ('none' = empty block)")
      ->required();

  auto* skew = app.add_subcommand("skew", "poset of a skew diagram");
  skew->add_option("shape", shape_text, "e.g. 443/21 or 10,9,2/3")->required();

  auto* census = app.add_subcommand("census", "exhaustive classification at size n");
  census->add_option("-n", census_n)->required();
  census->add_flag("--natural", natural, "naturally labeled posets only");
  census->add_option("--jobs", jobs, "worker shards (default $KPO_JOBS or 1)");
  census->add_option("--out", out_path, "write JSONL here instead of stdout");

  auto* verify = app.add_subcommand("verify", "few-extension classification checks");
  verify->add_option("-n", verify_n)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (show->parsed()) {
      kpo::OrientedPoset p = load(file);
      if (dot) {
        std::cout << dot_of(p, with_labels);
      } else {
        std::cout << kpo::print_poset(p);
        auto lab = kpo::realize_labeling(p);
        if (lab && with_labels) {
          std::cout << "# labeling:";
          for (int v = 0; v < p.size(); v++) std::cout << " " << lab->labels[v];
          std::cout << "\n";
        }
        if (!lab) std::cout << "# not realizable by any labeling\n";
      }
      return 0;
    }
    if (cmd_k->parsed()) {
      kpo::OrientedPoset p = load(file);
      if (basis == "F")
        std::cout << kpo::fexp_to_json(kpo::k_f_route(p)) << "\n";
      else
        std::cout << kpo::mexp_to_json(kpo::k_m_route(p)) << "\n";
      return 0;
    }
    if (eq->parsed())
      return kpo::k_equal(load(file), load(file_b)) ? 0 : 1;
    if (inv->parsed()) {
      std::cout << kpo::InvariantProfile::compute(load(file)).to_json() << "\n";
      return 0;
    }
    if (filter->parsed()) {
      kpo::Verdict v = kpo::filter_battery(load(file), load(file_b));
      std::cout << v.to_json() << "\n";
      return 0;
    }
    if (transform->parsed()) {
      kpo::OrientedPoset p = load(file);
      kpo::OrientedPoset q;
      if (op == "bar") q = kpo::bar(p);
      else if (op == "star") q = kpo::star(p);
      else if (op == "remove-jump0") q = kpo::remove_jump0(p);
      else if (op == "add-top:w") q = kpo::add_top(p, kpo::EdgeKind::Weak);
      else if (op == "add-top:s") q = kpo::add_top(p, kpo::EdgeKind::Strict);
      else if (op == "add-bottom:w") q = kpo::add_bottom(p, kpo::EdgeKind::Weak);
      else q = kpo::add_bottom(p, kpo::EdgeKind::Strict);
      std::cout << kpo::print_poset(q);
      return 0;
    }
    if (compose->parsed()) {
      auto block = [&](size_t i) {
        return i < files.size() && files[i] != "none" ? load(files[i])
                                                      : kpo::OrientedPoset();
      };
      if (op == "layered") {
        if (files.size() != 5)
          throw kpo::poset_error(kpo::Errc::ParseError, "layered takes five inputs");
        std::cout << kpo::print_poset(kpo::layered_compose(
            block(0), block(1), block(2), block(3), block(4)));
        return 0;
      }
      if (files.size() != 2)
        throw kpo::poset_error(kpo::Errc::ParseError, "binary op takes two inputs");
      kpo::OrientedPoset a = load(files[0]), b = load(files[1]);
      if (op == "du") {
        std::cout << kpo::print_poset(kpo::disjoint_union(a, b));
      } else if (op == "up" || op == "Up") {
        std::cout << kpo::print_poset(kpo::ordinal_sum(
            a, b, op == "up" ? kpo::EdgeKind::Weak : kpo::EdgeKind::Strict));
      } else {
        kpo::CombineResult r = kpo::combine(kpo::combine_op_of(op), a, b);
        if (!r.realizable) std::cerr << "note: result not realizable\n";
        std::cout << kpo::print_poset(r.poset);
      }
      return 0;
    }
    if (skew->parsed()) {
      std::cout << kpo::print_poset(
          kpo::skew_to_poset(kpo::SkewShape::parse(shape_text)));
      return 0;
    }
    if (census->parsed()) {
      kpo::CensusOptions opts;
      opts.jobs = jobs;
      opts.natural_only = natural;
      auto records = kpo::run_census(census_n, opts);
      std::string jsonl = kpo::census_to_jsonl(records);
      if (out_path.empty()) {
        std::cout << jsonl;
      } else {
        std::ofstream out(out_path);
        out << jsonl;
      }
      std::cerr << kpo::census_summary(records);
      return 0;
    }
    if (verify->parsed()) {
      kpo::ClassificationReport rep = kpo::verify_classification(verify_n);
      std::cout << rep.to_string();
      return rep.ok() ? 0 : 1;
    }
  } catch (const kpo::poset_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
