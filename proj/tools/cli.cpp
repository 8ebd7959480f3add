#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "hypercat/complete.hpp"
#include "hypercat/model_io.hpp"
#include "hypercat/polynomial.hpp"
#include "hypercat/term.hpp"

namespace hypercat::cli {

namespace {

nlohmann::json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(path + ": " + e.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
}

template <class S>
void print_matrix(std::ostream& out, const Matrix<S>& m, const Word& dom, const Word& cod, const std::string& format) {
  if (format == "json") {
    out << nlohmann::json{{"semiring", SemiringTraits<S>::name},
                          {"dom", dom},
                          {"cod", cod},
                          {"matrix", matrix_to_json(m)}}
               .dump(2)
        << '\n';
    return;
  }
  out << m.rows() << "x" << m.cols() << " over " << SemiringTraits<S>::name << ", " << to_string(dom) << " -> "
      << to_string(cod) << '\n';
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) out << (c ? " " : "") << SemiringTraits<S>::to_string(m(r, c));
    out << '\n';
  }
}

struct EvalInput {
  Signature sig;
  nlohmann::json model;
  std::optional<Term> term;
  std::optional<DotDiagram> diagram;
  std::string path;
  std::string format;
};

template <class S>
void eval_with(const EvalInput& in, std::ostream& out) {
  const Model<S> model = model_from_json<S>(in.model, in.sig);
  if (in.term) {
    const Matrix<S> m = in.path == "contraction" ? eval_contraction(model, elaborate(*in.term, in.sig).rep())
                                                 : eval_compositional(model, *in.term);
    print_matrix(out, m, in.term->dom(), in.term->cod(), in.format);
  } else {
    in.diagram->validate(in.sig);
    print_matrix(out, eval_contraction(model, *in.diagram), in.diagram->dom(), in.diagram->cod(), in.format);
  }
}

void print_report(std::ostream& out, const DistinguisherReport& r) {
  out << "verdict: " << to_string(r.verdict) << '\n';
  out << "route: " << (r.route ? to_string(*r.route) : "none") << '\n';
  for (const auto& s : r.stages) out << "stage " << s.name << ": " << s.result << '\n';
  if (!r.witness) return;
  const Witness& w = *r.witness;
  out << "witness field: " << w.field << '\n';
  if (w.point) {
    out << "witness point:";
    for (const auto& [k, v] : *w.point) out << " X_b" << k << "=" << to_string(v);
    out << '\n';
  }
  if (w.difference) out << "polynomial difference: " << to_string(*w.difference) << '\n';
  out << "lhs value: " << to_string(w.lhs_value) << '\n';
  out << "rhs value: " << to_string(w.rhs_value) << '\n';
}

}  // namespace

std::string export_graph(const DotDiagram& f) {
  std::ostringstream out;
  out << "digraph diagram {\n  rankdir=LR;\n";
  for (BoxId b = 0; b < f.box_count(); ++b)
    out << "  b" << b << " [shape=box, label=\"" << f.box(b).label << "\"];\n";
  for (DotId d = 0; d < f.dot_count(); ++d)
    out << "  d" << d << " [shape=circle, style=filled, width=0.15, label=\"\", xlabel=\"" << f.dot_label(d)
        << "\"];\n";
  for (std::size_t k = 0; k < f.inputs().size(); ++k)
    out << "  in" << k << " [shape=plaintext, label=\"in " << k << "\"];\n  in" << k << " -> d" << f.inputs()[k]
        << ";\n";
  for (std::size_t k = 0; k < f.outputs().size(); ++k)
    out << "  out" << k << " [shape=plaintext, label=\"out " << k << "\"];\n  d" << f.outputs()[k] << " -> out"
        << k << ";\n";
  for (BoxId b = 0; b < f.box_count(); ++b) {
    const Box& box = f.box(b);
    for (std::size_t i = 0; i < box.ins.size(); ++i)
      out << "  d" << box.ins[i] << " -> b" << b << " [headlabel=\"" << i << "\"];\n";
    for (std::size_t j = 0; j < box.outs.size(); ++j)
      out << "  b" << b << " -> d" << box.outs[j] << " [taillabel=\"" << j << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Free hypergraph categories: diagrams, matrix models and equality decisions", "hypercat"};
  app.require_subcommand(1);

  std::string sig_path, model_path, term_text, diagram_path, lhs_text, rhs_text, format = "text",
                                                                                 semiring = "int",
                                                                                 eval_path = "compositional",
                                                                                 out_path, report_path;
  std::string first_path, second_path;
  bool dagger = false;
  std::uint64_t seed = 0;

  auto* iso = app.add_subcommand("iso", "Test two diagram files for boundary-fixing isomorphism");
  iso->add_option("first", first_path)->required()->check(CLI::ExistingFile);
  iso->add_option("second", second_path)->required()->check(CLI::ExistingFile);
  iso->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* decide = app.add_subcommand("decide", "Decide equality of two terms in the free hypergraph category");
  decide->add_option("--sig", sig_path)->required()->check(CLI::ExistingFile);
  decide->add_option("--lhs", lhs_text)->required();
  decide->add_option("--rhs", rhs_text)->required();
  decide->add_flag("--dagger", dagger, "Work in the free dagger hypergraph category");
  decide->add_option("--seed", seed);
  decide->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  decide->add_option("--report", report_path, "Also write the full JSON report to this file");

  auto* normalize = app.add_subcommand("normalize", "Elaborate a term and print its canonical expansion");
  normalize->add_option("--sig", sig_path)->required()->check(CLI::ExistingFile);
  normalize->add_option("term", term_text)->required();
  normalize->add_option("--out", out_path, "Write the diagram file here instead of standard output");

  auto* eval = app.add_subcommand("eval", "Evaluate a term or diagram in a matrix model");
  eval->add_option("--sig", sig_path)->required()->check(CLI::ExistingFile);
  eval->add_option("--model", model_path)->required()->check(CLI::ExistingFile);
  auto* term_opt = eval->add_option("--term", term_text);
  auto* diagram_opt = eval->add_option("--diagram", diagram_path)->check(CLI::ExistingFile);
  term_opt->excludes(diagram_opt);
  eval->add_option("--semiring", semiring)->check(CLI::IsMember({"int", "rat", "gauss", "poly"}));
  eval->add_option("--path", eval_path, "Evaluation path for terms")
      ->check(CLI::IsMember({"compositional", "contraction"}));
  eval->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* replay = app.add_subcommand("replay", "Re-evaluate the witness of a JSON report");
  replay->add_option("report", report_path)->required()->check(CLI::ExistingFile);

  auto* graph = app.add_subcommand("export-graph", "Print a diagram file or term as Graphviz");
  graph->add_option("diagram", diagram_path)->check(CLI::ExistingFile);
  graph->add_option("--sig", sig_path)->check(CLI::ExistingFile);
  graph->add_option("--term", term_text);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (iso->parsed()) {
      const DotDiagram f = load_diagram_file(first_path);
      const DotDiagram g = load_diagram_file(second_path);
      const auto h = is_isomorphic(f, g);
      if (format == "json") {
        nlohmann::json doc{{"isomorphic", h.has_value()}};
        if (h) doc.update({{"box_map", h->box_map}, {"dot_map", h->dot_map}});
        out << doc.dump(2) << '\n';
      } else {
        out << (h ? "isomorphic" : "not isomorphic") << '\n';
      }
      return h ? 0 : 1;
    }

    if (decide->parsed()) {
      const Signature sig = load_signature_file(sig_path);
      const Term lhs = parse_term(lhs_text, sig);
      const Term rhs = parse_term(rhs_text, sig);
      const DistinguisherReport r = decide_equal(elaborate(lhs, sig), elaborate(rhs, sig), sig, dagger, seed);
      const std::string json = to_json(r).dump(2) + "\n";
      if (!report_path.empty()) write_text(report_path, json);
      if (format == "json")
        out << json;
      else
        print_report(out, r);
      return r.verdict == Verdict::Equal ? 0 : 1;
    }

    if (normalize->parsed()) {
      const Signature sig = load_signature_file(sig_path);
      const Morphism f = elaborate(parse_term(term_text, sig), sig);
      const DotDiagram canonical = canonical_form(f.rep());
      out << to_string(expand(Morphism(canonical), sig)) << '\n';
      const std::string doc = to_json(canonical).dump(2) + "\n";
      if (out_path.empty())
        out << doc;
      else
        write_text(out_path, doc);
      return 0;
    }

    if (eval->parsed()) {
      if (term_text.empty() == diagram_path.empty()) throw Error("eval needs exactly one of --term and --diagram");
      EvalInput in;
      in.sig = load_signature_file(sig_path);
      in.model = read_json(model_path);
      if (!term_text.empty()) in.term = parse_term(term_text, in.sig);
      if (!diagram_path.empty()) in.diagram = load_diagram_file(diagram_path);
      in.path = eval_path;
      in.format = format;
      if (semiring == "int")
        eval_with<Integer>(in, out);
      else if (semiring == "rat")
        eval_with<Rational>(in, out);
      else if (semiring == "gauss")
        eval_with<GaussianRational>(in, out);
      else
        eval_with<Polynomial>(in, out);
      return 0;
    }

    if (replay->parsed()) {
      const DistinguisherReport r = report_from_json(read_json(report_path));
      if (!r.witness) {
        out << "no witness (verdict " << to_string(r.verdict) << ")\n";
        return 0;
      }
      const bool ok = replay_witness(*r.witness);
      out << (ok ? "witness reproduced: " : "witness NOT reproduced: ") << to_string(r.witness->lhs_value)
          << " vs " << to_string(r.witness->rhs_value) << '\n';
      return ok ? 1 : 2;
    }

    if (graph->parsed()) {
      if (!diagram_path.empty()) {
        out << export_graph(load_diagram_file(diagram_path));
      } else {
        if (sig_path.empty() || term_text.empty()) throw Error("export-graph needs a diagram file or --sig and --term");
        const Signature sig = load_signature_file(sig_path);
        out << export_graph(elaborate(parse_term(term_text, sig), sig).rep());
      }
      return 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace hypercat::cli
