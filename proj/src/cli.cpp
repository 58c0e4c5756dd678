#include "auglink/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "auglink/report.hpp"
#include "auglink/svg.hpp"

namespace auglink::cli {

namespace {

using report::Json;

struct Options {
  std::string command;
  std::string input;
  std::string output;
  std::string format = "structured";
  bool require_hypotheses = false;
  int max_boundary_visits = -1;
  std::string svg_path;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const Options& opt, const std::string& text, std::ostream& out) {
  if (opt.output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(opt.output);
  if (!f) throw std::runtime_error("cannot write output file: " + opt.output);
  f << text;
}

std::string hypotheses_text(const HypothesisReport& h) {
  std::ostringstream s;
  s << "connected=" << h.connected << " prime=" << h.prime
    << " twist_reduced=" << h.twist_reduced << " knot=" << h.is_knot << " t=" << h.t
    << " h=" << h.h << " hypotheses_met=" << h.hypotheses_met << "\n";
  return s.str();
}

int run_command(const Options& opt, std::ostream& out) {
  Diagram d = parse_pd(slurp(opt.input));
  const bool structured = opt.format == "structured";

  if (!opt.svg_path.empty() || opt.command == "render") {
    SvgOverlays ov;
    ov.twist_regions = true;
    ov.crossing_circles = opt.command != "analyze";
    std::string svg = render_svg(d, ov);
    std::ofstream f(opt.svg_path.empty() ? opt.output : opt.svg_path);
    if (!f) throw std::runtime_error("cannot write svg output");
    f << svg;
    if (opt.command == "render") return 0;
  }

  Json body;
  std::ostringstream text;

  if (opt.command == "analyze") {
    TwistAnalysis ta = twist_regions(d);
    HypothesisReport h = check_hypotheses(d);
    body["diagram"] = report::diagram_json(d);
    body["twist"] = report::twist_json(ta);
    body["hypotheses"] = report::hypotheses_json(h);
    text << serialize_pd(d) << "\n"
         << "V=" << d.num_crossings() << " E=" << d.num_edges << " F=" << d.faces.size()
         << " components=" << d.num_components << "\n"
         << "t=" << ta.t << " h=" << ta.h << "\n"
         << hypotheses_text(h);
    if (opt.require_hypotheses && !h.hypotheses_met) {
      emit(opt, structured ? report::envelope(opt.command, body).dump(2) + "\n" : text.str(),
           out);
      return 1;
    }
  } else if (opt.command == "augment") {
    AugmentedStructure a = flatten(augment(d));
    body["diagram"] = report::diagram_json(d);
    body["augmented"] = report::augmented_json(a);
    text << "circles=" << a.circles.size() << "\n";
    for (size_t i = 0; i < a.circles.size(); ++i)
      text << "circle " << i << ": n=" << a.circles[i].n << " parity=" << a.parity[i]
           << " slope=(1," << a.circles[i].n << ")\n";
  } else if (opt.command == "decompose") {
    Decomposition dec = decompose(flatten(augment(d)));
    ValidationReport vr = validate(dec);
    body["decomposition"] = report::decomposition_json(dec);
    body["validation"] = report::validation_json(vr);
    text << "P: V=" << dec.P.vertices.size() << " E=" << dec.P.edges.size()
         << " F=" << dec.P.faces.size() << " shaded=" << dec.P.num_shaded() << "\n"
         << "validation " << (vr.all_pass ? "PASS" : "FAIL") << "\n";
  } else if (opt.command == "enumerate") {
    Decomposition dec = decompose(flatten(augment(d)));
    BoundaryComplex bc = boundary_complex(dec.P);
    EnumerationConstraints cons;
    cons.max_boundary_visits = opt.max_boundary_visits;
    auto curves = enumerate_normal_curves(bc, cons);
    body["curves"] = report::enumeration_json(curves);
    text << curves.size() << " normal curves\n";
    for (const auto& c : curves)
      text << "  " << c.word() << "  area=" << area(c).half_pi_units << "/2 pi\n";
  } else if (opt.command == "verify") {
    Decomposition dec = decompose(flatten(augment(d)));
    BoundaryComplex bc = boundary_complex(dec.P);
    Json ev = Json::array();
    std::vector<LemmaEvidence> all = {verify_must_meet_circle(bc), verify_one_cusp_forces_K(bc),
                                      verify_three_circles(bc)};
    for (const auto& e : all) {
      ev.push_back(report::evidence_json(e));
      text << e.lemma_id << ": "
           << (e.verified() ? "verified"
                            : std::to_string(e.counterexamples.size()) + " counterexample(s)")
           << "\n";
    }
    body["evidence"] = ev;
  } else if (opt.command == "certify") {
    BoundCertificate cert = certify(d);
    body = report::certificate_json(cert);
    text << hypotheses_text(cert.hypotheses) << "closed: chi <= "
         << report::rational_str(cert.chi_closed) << ", genus >= " << cert.genus_closed << "\n"
         << "binding=" << cert.binding << "\n";
    if (opt.require_hypotheses && !cert.binding) {
      emit(opt, structured ? report::envelope(opt.command, body).dump(2) + "\n" : text.str(),
           out);
      return 1;
    }
  } else {
    throw CLI::ValidationError("unknown command " + opt.command);
  }

  emit(opt, structured ? report::envelope(opt.command, body).dump(2) + "\n" : text.str(), out);
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"augmented-link twist structure and surface bound analyzer"};
  app.require_subcommand(1);
  Options opt;

  std::vector<CLI::App*> subs;
  for (const char* name : {"analyze", "augment", "decompose", "enumerate", "verify", "certify",
                           "render"}) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("-i,--input", opt.input, "PD-code input file")->required();
    sub->add_option("-o,--output", opt.output, "output path (default stdout)");
    sub->add_option("--format", opt.format, "text|structured")
        ->check(CLI::IsMember({"text", "structured"}));
    sub->add_flag("--require-hypotheses", opt.require_hypotheses,
                  "exit 1 when the height/twist hypotheses fail");
    sub->add_option("--max-boundary-visits", opt.max_boundary_visits,
                    "enumeration cap on boundary-face visits");
    sub->add_option("--svg", opt.svg_path, "also write an SVG rendering");
    subs.push_back(sub);
  }

  std::vector<const char*> cargv;
  cargv.push_back("auglink");
  for (const auto& a : argv) cargv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(cargv.size()), cargv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }
  for (CLI::App* sub : subs)
    if (sub->parsed()) opt.command = sub->get_name();

  try {
    return run_command(opt, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    std::string msg = e.what();
    if (msg.rfind("cannot read", 0) == 0) {
      err << "error: " << msg << "\n";
      return 2;
    }
    err << "error: " << msg << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace auglink::cli
