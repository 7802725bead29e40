#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "qhb/classify.hpp"
#include "qhb/dinv.hpp"
#include "qhb/lattice.hpp"
#include "qhb/obstruct.hpp"
#include "qhb/plumbing.hpp"
#include "serialize.hpp"

namespace qhb::cli {

namespace {

using io::json;

// "LO..HI" or a single integer.
std::pair<Int, Int> parse_range(const std::string& s) {
  auto dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      Int v = std::stoll(s);
      return {v, v};
    }
    return {std::stoll(s.substr(0, dots)), std::stoll(s.substr(dots + 2))};
  } catch (const std::exception&) {
    throw CLI::ValidationError("range", "expected LO..HI, got '" + s + "'");
  }
}

std::pair<Int, Int> parse_pair(const std::string& s) {
  auto comma = s.find(',');
  try {
    if (comma == std::string::npos) throw std::invalid_argument(s);
    return {std::stoll(s.substr(0, comma)), std::stoll(s.substr(comma + 1))};
  } catch (const std::exception&) {
    throw CLI::ValidationError("--torus", "expected p,q, got '" + s + "'");
  }
}

Rational parse_slope(const std::string& s) {
  try {
    return Rational::parse(s);
  } catch (const DomainError& e) {
    throw CLI::ValidationError("--slope", e.what());
  }
}

KnotModel parse_knot(const std::string& s) {
  try {
    return KnotModel::parse(s);
  } catch (const DomainError& e) {
    throw CLI::ValidationError("--knot", e.what());
  }
}

json read_json(const std::string& path) {
  try {
    if (path == "-") return json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open graph file '" + path + "'");
    return json::parse(in);
  } catch (const json::exception& e) {
    throw DomainError(std::string("invalid JSON: ") + e.what());
  }
}

unsigned default_threads() { return std::max(1u, std::thread::hardware_concurrency()); }

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Obstructions to Dehn surgeries bounding rational homology balls", "qhb"};
  app.require_subcommand(1);
  unsigned threads = default_threads();
  app.add_option("--threads", threads, "Worker threads for classify")
      ->envname("QHB_THREADS")
      ->check(CLI::Range(1u, 1024u));

  // dlens
  auto* dlens = app.add_subcommand("dlens", "Correction terms d(L(p,q), i)");
  Int dl_p = 0, dl_q = 0, dl_i = 0;
  bool dl_all = false;
  dlens->add_option("-p", dl_p)->required();
  dlens->add_option("-q", dl_q)->required();
  auto* dl_iopt = dlens->add_option("-i", dl_i, "Label in [0, p+q)");
  auto* dl_allf = dlens->add_flag("--all", dl_all, "Table over labels [0, p)");
  dl_iopt->excludes(dl_allf);

  // vseq
  auto* vseq = app.add_subcommand("vseq", "V-invariants of a knot model");
  std::string vs_knot;
  Int vs_max = -1;
  vseq->add_option("--knot", vs_knot, "torus:p,q | thin:tau | v:[...]")->required();
  vseq->add_option("--max", vs_max, "Number of entries to print")->check(CLI::NonNegativeNumber);

  // dsurg
  auto* dsurg = app.add_subcommand("dsurg", "Correction terms of S^3_{p/q}(K)");
  Int ds_p = 0, ds_q = 1, ds_n = 0, ds_i = 0;
  std::string ds_slope, ds_knot, ds_conv = "lens-recursion";
  bool ds_all = false;
  auto* ds_popt = dsurg->add_option("-p", ds_p);
  auto* ds_qopt = dsurg->add_option("-q", ds_q)->needs(ds_popt);
  auto* ds_nopt = dsurg->add_option("-n", ds_n, "Integral slope");
  auto* ds_sopt = dsurg->add_option("--slope", ds_slope, "Slope a/b");
  ds_popt->excludes(ds_nopt)->excludes(ds_sopt);
  ds_qopt->excludes(ds_nopt)->excludes(ds_sopt);
  ds_nopt->excludes(ds_sopt);
  dsurg->add_option("--knot", ds_knot)->required();
  auto* ds_iopt = dsurg->add_option("-i", ds_i, "Label in [0, p)");
  ds_iopt->excludes(dsurg->add_flag("--all", ds_all, "Table over all labels (default)"));
  dsurg->add_option("--convention", ds_conv)->check(CLI::IsMember({"lens-recursion", "shift-2"}));

  // verdict
  auto* verdict = app.add_subcommand("verdict", "Run every applicable obstruction");
  std::string vd_knot, vd_slope;
  VerdictOptions vd_opts;
  bool vd_no_lattice = false;
  verdict->add_option("--knot", vd_knot)->required();
  verdict->add_option("--slope", vd_slope)->required();
  verdict->add_option("--node-budget", vd_opts.node_budget, "Per embedding search; 0 is unlimited");
  verdict->add_flag("--gamma-strict", vd_opts.gamma.strict, "Strict second Gamma inequality");
  verdict->add_flag("--no-lattice", vd_no_lattice, "Skip the lattice embedding predicates");

  // embed
  auto* embed = app.add_subcommand("embed", "Rank-equal embedding of a plumbing lattice");
  std::string em_graph, em_sign;
  std::uint64_t em_budget = 0;
  embed->add_option("--graph", em_graph, "Graph JSON file, '-' for stdin")->required();
  embed->add_option("--sign", em_sign, "Form sign; inferred from definiteness if omitted")
      ->check(CLI::IsMember({"pos", "neg"}));
  embed->add_option("--node-budget", em_budget, "0 is unlimited");

  // seifert
  auto* seifert = app.add_subcommand("seifert", "Seifert invariants and plumbings of S^3_r(T_{p,q})");
  std::string sf_torus, sf_slope;
  bool sf_canonical = false, sf_dual = false;
  seifert->add_option("--torus", sf_torus, "p,q")->required();
  seifert->add_option("--slope", sf_slope)->required();
  auto* sf_c = seifert->add_flag("--canonical", sf_canonical, "Positive canonical star graph");
  sf_c->excludes(seifert->add_flag("--dual", sf_dual, "Canonical graph of the reversed orientation"));

  // classify
  auto* classify = app.add_subcommand("classify", "Sweep p = kq +- 1 torus knots");
  classify->fallthrough();  // --threads may follow the subcommand
  std::string cl_q = "2..12", cl_k = "1..9", cl_emit = "csv", cl_family = "integral";
  int cl_sign = 0;
  bool cl_quiet = false;
  std::uint64_t cl_budget = VerdictOptions{}.node_budget;
  classify->add_option("--q", cl_q, "LO..HI");
  classify->add_option("--k", cl_k, "LO..HI");
  classify->add_option("--sign", cl_sign, "+1 or -1 (default both)")->check(CLI::IsMember({1, -1}));
  classify->add_option("--emit", cl_emit)->check(CLI::IsMember({"csv", "json"}));
  classify->add_option("--family", cl_family)->check(CLI::IsMember({"integral", "half", "third"}));
  classify->add_option("--node-budget", cl_budget, "Per embedding search; 0 is unlimited");
  classify->add_flag("--quiet", cl_quiet, "No progress on stderr");

  std::vector<std::string> args;
  for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*dlens) {
      if (!*dl_iopt && !*dl_allf) throw CLI::RequiredError("dlens needs -i or --all");
      if (dl_all) out << io::to_json(d_lens_table(dl_p, dl_q)).dump() << "\n";
      else out << json{{"d", d_lens(dl_p, dl_q, dl_i).str()}}.dump() << "\n";
    } else if (*vseq) {
      auto k = parse_knot(vs_knot);
      Int len = vs_max >= 0 ? vs_max : k.nu() + 1;
      std::vector<Int> v;
      for (Int i = 0; i < len; ++i) v.push_back(k.v()[i]);
      out << json{{"knot", k.str()}, {"nu_plus", k.nu()}, {"V", v}}.dump() << "\n";
    } else if (*dsurg) {
      auto k = parse_knot(ds_knot);
      Rational r = *ds_nopt ? Rational(ds_n) : *ds_sopt ? parse_slope(ds_slope) : Rational(ds_p, ds_q);
      if (!*ds_nopt && !*ds_sopt && !*ds_popt) throw CLI::RequiredError("one of -p/-q, -n, --slope");
      if (r.sign() <= 0) throw DomainError("surgery slope must be positive");
      Int p = r.num().get_si(), q = r.den().get_si();
      auto conv = parse_convention(ds_conv);
      if (*ds_iopt) out << json{{"d", d_surgery(p, q, ds_i, k.v(), conv).str()}}.dump() << "\n";
      else out << io::to_json(d_surgery_table(p, q, k.v(), conv)).dump() << "\n";
    } else if (*verdict) {
      vd_opts.lattice = !vd_no_lattice;
      auto rep = rhb_verdict(parse_knot(vd_knot), parse_slope(vd_slope), vd_opts);
      out << io::to_json(rep).dump(2) << "\n";
    } else if (*embed) {
      auto g = io::graph_from_json(read_json(em_graph));
      EmbedOptions eo{em_budget};
      auto res = em_sign.empty() ? embed_graph(g, eo)
                                 : embed_lattice(intersection_matrix(g), em_sign == "pos" ? 1 : -1, eo);
      out << io::to_json(res).dump() << "\n";
    } else if (*seifert) {
      auto [p, q] = parse_pair(sf_torus);
      auto r = parse_slope(sf_slope);
      if (p < q) std::swap(p, q);
      if (r == Rational(p * q)) {
        if (sf_canonical || sf_dual) throw DomainError("slope pq gives a connected sum; no star graph");
        auto [a, b] = torus_surgery_connected_sum(p, q);
        out << json{{"connected_sum", {{{"p", a.p}, {"q", a.q}}, {{"p", b.p}, {"q", b.q}}}}}.dump() << "\n";
      } else if (sf_canonical) {
        out << io::to_json(torus_surgery_canonical_graph(p, q, r)).dump() << "\n";
      } else if (sf_dual) {
        auto s = torus_surgery_seifert(p, q, r);
        out << io::to_json(seifert_to_graph(normalize(reverse_orientation(s)))).dump() << "\n";
      } else {
        out << io::to_json(normalize(torus_surgery_seifert(p, q, r))).dump() << "\n";
      }
    } else if (*classify) {
      SearchSpace space;
      std::tie(space.q_lo, space.q_hi) = parse_range(cl_q);
      std::tie(space.k_lo, space.k_hi) = parse_range(cl_k);
      if (cl_sign != 0) space.signs = {cl_sign};
      space.family = cl_family == "half" ? SlopeFamily::Half : cl_family == "third" ? SlopeFamily::Third
                                                                                      : SlopeFamily::Integral;
      SweepOptions so;
      so.threads = threads;
      so.progress = !cl_quiet;
      so.verdict.node_budget = cl_budget;
      auto rows = classify_sweep(space, so);
      if (cl_emit == "csv") {
        out << io::csv_header() << "\n";
        for (const auto& e : rows) out << io::csv_row(e) << "\n";
      } else {
        for (const auto& e : rows) out << io::to_json(e).dump() << "\n";
      }
    }
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return 1;
  } catch (const UnsupportedError& e) {
    err << "unsupported: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"qhb"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace qhb::cli
