// Copyright 2026 The vogankm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "vogankm/catalog.h"
#include "vogankm/diagram_io.h"
#include "vogankm/dynkin.h"
#include "vogankm/error.h"
#include "vogankm/gcm.h"
#include "vogankm/hypersearch.h"
#include "vogankm/orbit.h"
#include "vogankm/render.h"

namespace vogankm::cli {
namespace {

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> SplitList(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto b = item.find_first_not_of(' ');
    const auto e = item.find_last_not_of(' ');
    if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

Involution ParseInvolution(const CartanMatrix& g, const std::string& text) {
  Permutation perm;
  for (const std::string& item : SplitList(text)) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) {
      throw Error(ErrorCode::kInvalidInvolution,
                  "involution entry '" + item + "' is not an integer");
    }
    perm.push_back(v);
  }
  return Involution::Create(g, perm);
}

std::string Colored(const std::string& text, const char* code, bool color) {
  if (!color) return text;
  return std::string("\x1b[") + code + "m" + text + "\x1b[0m";
}

std::string Verdict(bool match, bool color) {
  return match ? Colored("Match", "32", color)
               : Colored("Mismatch", "31", color);
}

std::string VertexList(const std::vector<int>& vs,
                       const std::vector<std::string>& labels) {
  std::string out;
  for (int v : vs) {
    if (!out.empty()) out += ' ';
    out += labels[v];
  }
  return out;
}

std::string DescribePerm(const Involution& sigma,
                         const std::vector<std::string>& labels) {
  if (sigma.IsIdentity()) return "identity";
  std::string out;
  for (int v = 0; v < sigma.size(); ++v) {
    if (sigma(v) > v) {
      if (!out.empty()) out += ", ";
      out += labels[v] + "<->" + labels[sigma(v)];
    }
  }
  return out;
}

// --- classify -------------------------------------------------------------

int Classify(const std::string& source, std::ostream& out) {
  const VoganFile f = LoadSource(source);
  const CartanMatrix& g = f.diagram.matrix;
  const auto& labels = f.diagram.labels;
  const AlgebraType t = vogankm::Classify(g);
  out << "diagram: " << (g.name().empty() ? "(unnamed)" : g.name())
      << " (rank " << g.rank() << ")\n";
  out << "type: " << TypeTagName(t.tag);
  if (t.hyperbolic) out << ", hyperbolic";
  out << '\n';
  if (!t.hyperbolic && t.tag == TypeTag::kIndefinite) {
    out << "hyperbolic: no (" << HyperbolicStatusName(t.status) << ")\n";
  }
  SymmetrizerFailure failure;
  if (const auto s = TrySymmetrizer(g, &failure)) {
    out << "symmetrizer:";
    for (const Rational& d : s->d) out << ' ' << d;
    out << '\n';
  } else {
    out << "symmetrizer: none (cycle edge " << labels[failure.edge.first]
        << "-" << labels[failure.edge.second] << ")\n";
  }
  if (t.components.size() > 1) {
    out << "components:\n";
    for (const ComponentType& c : t.components) {
      out << "  " << TypeTagName(c.tag) << " {" << VertexList(c.vertices, labels)
          << "}\n";
    }
  }
  const auto deletions = DeletionSummary(g);
  if (!deletions.empty()) out << "deletions:\n";
  for (const VertexDeletion& del : deletions) {
    out << "  delete " << labels[del.vertex] << " ->";
    for (std::size_t k = 0; k < del.components.size(); ++k) {
      out << (k ? "," : "") << ' ' << TypeTagName(del.components[k].tag)
          << " {" << VertexList(del.components[k].vertices, labels) << '}';
    }
    out << '\n';
  }
  return kExitOk;
}

// --- orbits ---------------------------------------------------------------

struct OrbitsArgs {
  std::string source;
  std::string involution;
  bool compare = false;
  bool json = false;
};

void PrintPaintings(std::ostream& out, const std::vector<Painting>& ps,
                    const std::vector<std::string>& labels) {
  std::size_t col = 4;
  out << "   ";
  for (Painting p : ps) {
    const std::string s = FormatPainting(p, labels);
    if (col + s.size() + 1 > 78 && col > 4) {
      out << "\n   ";
      col = 4;
    }
    out << ' ' << s;
    col += s.size() + 1;
  }
  out << '\n';
}

int Orbits(const OrbitsArgs& a, std::ostream& out, bool color) {
  const VoganFile f = LoadSource(a.source);
  const CartanMatrix& g = f.diagram.matrix;
  const Involution sigma =
      a.involution.empty() ? f.sigma : ParseInvolution(g, a.involution);
  OrbitReport report = AllClasses(g, sigma);
  report.labels = f.diagram.labels;
  if (a.compare) {
    if (!sigma.IsIdentity()) {
      throw InputError("--compare-paper applies to the trivial involution");
    }
    if (!Contains(g.name())) {
      throw InputError("--compare-paper needs a catalog diagram, got '" +
                       g.name() + "'");
    }
    AttachClaims(report, Expectations(g.name()));
  }
  if (a.json) {
    out << SerializeOrbitReport(report);
  } else {
    const auto& labels = report.labels;
    out << "diagram: " << report.diagram_name << '\n';
    out << "involution: " << DescribePerm(report.sigma, labels)
        << " (class representative: "
        << DescribePerm(report.sigma_representative, labels) << ")\n";
    out << "fixed vertices: " << VertexList(report.fixed_vertices, labels)
        << '\n';
    out << "paintings: " << report.class_index.size()
        << ", classes: " << report.classes.size() << '\n';
    for (std::size_t k = 0; k < report.classes.size(); ++k) {
      const OrbitClass& c = report.classes[k];
      out << "class " << k << ": size " << c.members.size() << ", minimal";
      for (Painting p : c.minimal_reps) out << ' ' << FormatPainting(p, labels);
      out << ", witness "
          << (c.bds_witness ? FormatPainting(*c.bds_witness, labels)
                            : std::string("none"))
          << '\n';
      PrintPaintings(out, c.members, labels);
    }
    const BdsResult bds = VerifyBorelDeSiebenthal(report);
    out << "Borel-de Siebenthal: " << (bds.holds ? "holds" : "fails") << " ("
        << bds.nonempty_paintings << " nonempty paintings, "
        << bds.nonempty_orbits << " orbits)";
    for (Painting p : bds.counterexamples) {
      out << (p == bds.counterexamples.front() ? "; counterexamples:" : "")
          << ' ' << FormatPainting(p, labels);
    }
    out << '\n';
    if (a.compare) {
      out << "claims:\n";
      for (std::size_t k = 0; k < report.verdicts.size(); ++k) {
        const ClaimVerdict& v = report.verdicts[k];
        out << "  " << std::left << std::setw(6) << v.id << ' '
            << Verdict(v.match, color) << "  " << report.expectation[k].quote
            << '\n';
        if (!v.match) out << "        " << v.details << '\n';
      }
    }
  }
  return a.compare && !report.AllMatch() ? kExitMismatch : kExitOk;
}

// --- reduce ---------------------------------------------------------------

struct ReduceArgs {
  std::string source;
  std::string involution;
  std::optional<std::string> paint;
};

int Reduce(const ReduceArgs& a, std::ostream& out, std::ostream& err) {
  const VoganFile f = LoadSource(a.source);
  const CartanMatrix& g = f.diagram.matrix;
  const auto& labels = f.diagram.labels;
  const Involution sigma =
      a.involution.empty() ? f.sigma : ParseInvolution(g, a.involution);
  Painting start = f.painted;
  if (a.paint) start = PaintingFromLabels(labels, SplitList(*a.paint));
  const VoganDiagram v = VoganDiagram::Create(g, sigma, start);
  const Reduction r = ReduceToMinimal(v);
  const Painting replayed = Replay(g, sigma, start, r.trace);
  if (replayed != r.representative) {
    err << "error: trace replay ended at " << FormatPainting(replayed, labels)
        << " instead of " << FormatPainting(r.representative, labels) << '\n';
    return kExitMismatch;
  }
  out << "start: " << FormatPainting(start, labels) << '\n';
  out << "representative: " << FormatPainting(r.representative, labels)
      << '\n';
  out << "trace:" << (r.trace.empty() ? " (empty)" : "") << '\n';
  Painting p = start;
  for (std::size_t k = 0; k < r.trace.size(); ++k) {
    p = Replay(g, sigma, p, {r.trace[k]});
    out << "  " << k + 1 << ". " << FormatMove(r.trace[k], labels) << " -> "
        << FormatPainting(p, labels) << '\n';
  }
  out << "replay: ok\n";
  return kExitOk;
}

// --- render ---------------------------------------------------------------

struct RenderArgs {
  std::string source;
  std::string format = "ascii";
  std::string involution;
  std::optional<std::string> paint;
  bool no_labels = false;
};

int RenderCmd(const RenderArgs& a, std::ostream& out, bool color) {
  RenderSpec spec;
  spec.format = ParseRenderFormat(a.format);
  spec.show_labels = !a.no_labels;
  spec.color = color;
  const VoganFile f = LoadSource(a.source);
  const CartanMatrix& g = f.diagram.matrix;
  const Involution sigma =
      a.involution.empty() ? f.sigma : ParseInvolution(g, a.involution);
  Painting painted = f.painted;
  if (a.paint) {
    painted = PaintingFromLabels(f.diagram.labels, SplitList(*a.paint));
  }
  VoganDiagram::Create(g, sigma, painted);
  out << Render(g, f.diagram.labels, sigma, painted, spec);
  return kExitOk;
}

// --- search ---------------------------------------------------------------

struct SearchArgs {
  std::string base;
  int rank = 0;
  int max_label = 4;
  std::string out_dir;
};

std::string EdgeSummary(const CartanMatrix& g) {
  std::string out;
  const DynkinDiagram d = DynkinDiagram::FromMatrix(g);
  for (const DynkinEdge& e : d.edges()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(e.first) + "-" + std::to_string(e.second);
    if (e.label_first != 1 || e.label_second != 1) {
      out += "(" + std::to_string(e.label_first) + "," +
             std::to_string(e.label_second) + ")";
    }
  }
  return out;
}

int Search(const SearchArgs& a, std::ostream& out) {
  if (a.base.empty() == (a.rank == 0)) {
    throw InputError("search needs exactly one of --base or --rank");
  }
  if (a.max_label < 1) throw InputError("--max-label must be positive");
  std::vector<CartanMatrix> found;
  std::string stem;
  if (!a.base.empty()) {
    const VoganFile f = LoadSource(a.base);
    found = Extend(f.diagram.matrix, a.max_label);
    stem = "extension";
  } else {
    found = Census(a.rank, a.max_label);
    stem = "rank" + std::to_string(a.rank);
  }
  if (!a.out_dir.empty()) {
    std::filesystem::create_directories(a.out_dir);
  }
  out << "results: " << found.size() << '\n';
  out << std::left << std::setw(6) << "#" << std::setw(6) << "rank"
      << std::setw(7) << "det" << "edges\n";
  for (std::size_t k = 0; k < found.size(); ++k) {
    CartanMatrix g = found[k];
    std::ostringstream name;
    name << stem << '-' << std::setw(3) << std::setfill('0') << k + 1;
    g.set_name(name.str());
    std::vector<int> all(g.rank());
    for (int v = 0; v < g.rank(); ++v) all[v] = v;
    std::ostringstream det;
    det << PrincipalMinor(g, all);
    out << std::left << std::setfill(' ') << std::setw(6) << k + 1
        << std::setw(6) << g.rank() << std::setw(7) << det.str()
        << EdgeSummary(g) << '\n';
    if (!a.out_dir.empty()) {
      const auto path =
          std::filesystem::path(a.out_dir) / (name.str() + ".json");
      std::ofstream file(path);
      if (!file) throw InputError("cannot write " + path.string());
      file << SerializeDiagram(g, IndexLabels(g.rank()));
    }
  }
  return kExitOk;
}

// --- catalog --------------------------------------------------------------

int CatalogList(std::ostream& out) {
  out << std::left << std::setw(20) << "name" << std::setw(6) << "rank"
      << std::setw(17) << "provenance" << "claims\n";
  for (const CatalogEntry& e : Catalog()) {
    out << std::left << std::setw(20) << e.name << std::setw(6)
        << e.matrix.rank() << std::setw(17) << ProvenanceName(e.provenance)
        << e.claims.size() << '\n';
  }
  return kExitOk;
}

int CatalogExport(const std::string& name, std::ostream& out) {
  const CatalogEntry& e = Lookup(name);
  out << SerializeDiagram(e.matrix, e.labels);
  return kExitOk;
}

// --- verify-paper ---------------------------------------------------------

int VerifyPaper(const std::vector<std::string>& only, std::ostream& out,
                bool color) {
  out << std::left << std::setw(20) << "entry" << std::setw(8) << "claim"
      << std::setw(10) << "verdict" << std::setw(17) << "provenance"
      << "claim text\n";
  int rows = 0, mismatches = 0, certain_mismatches = 0;
  for (const CatalogEntry& e : Catalog()) {
    if (!only.empty() &&
        std::find(only.begin(), only.end(), e.name) == only.end()) {
      continue;
    }
    if (e.claims.empty() && e.lemma_instances.empty()) continue;
    const Involution id = Involution::Identity(e.matrix.rank());
    OrbitReport report = AllClasses(e.matrix, id);
    report.labels = e.labels;
    AttachClaims(report, e.claims);
    auto row = [&](const std::string& claim, bool match,
                   const std::string& text, const std::string& details) {
      ++rows;
      if (!match) {
        ++mismatches;
        if (e.provenance == Provenance::kFigureCertain) ++certain_mismatches;
      }
      const std::string v = Verdict(match, color);
      out << std::left << std::setw(20) << e.name << std::setw(8) << claim
          << v << std::string(10 - (match ? 5 : 8), ' ') << std::setw(17)
          << ProvenanceName(e.provenance) << text << '\n';
      if (!match) out << std::string(28, ' ') << "evidence: " << details << '\n';
    };
    for (std::size_t k = 0; k < report.verdicts.size(); ++k) {
      const ClaimVerdict& v = report.verdicts[k];
      row(v.id, v.match, report.expectation[k].quote, v.details);
    }
    const auto lemmas =
        VerifyLemmaInstances(e.matrix, id, e.labels, e.lemma_instances);
    for (std::size_t k = 0; k < lemmas.size(); ++k) {
      const LemmaVerdict& l = lemmas[k];
      const int left = report.ClassOf(l.left);
      const int right = report.ClassOf(l.right);
      row("L" + std::to_string(k + 1), l.same_orbit, l.instance.description,
          FormatPainting(l.left, e.labels) + " in class " +
              std::to_string(left) + ", " + FormatPainting(l.right, e.labels) +
              " in class " + std::to_string(right));
    }
  }
  out << "rows: " << rows << ", mismatches: " << mismatches
      << " (figure-certain: " << certain_mismatches << ")\n";
  return certain_mismatches > 0 ? kExitMismatch : kExitOk;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err, const CliOptions& options) {
  CLI::App app{"Generalized Cartan matrices and Vogan diagrams", "vogankm"};
  app.require_subcommand(1);

  std::string classify_source;
  auto* classify = app.add_subcommand("classify", "Classify a diagram");
  classify->add_option("source", classify_source, "Diagram file or catalog name")
      ->required();

  OrbitsArgs orbits_args;
  auto* orbits = app.add_subcommand("orbits", "Equivalence classes of paintings");
  orbits->add_option("source", orbits_args.source, "Diagram or Vogan file, or catalog name")
      ->required();
  orbits->add_option("--involution", orbits_args.involution,
                     "Comma-separated permutation of vertex indices");
  orbits->add_flag("--compare-paper", orbits_args.compare,
                   "Compare with the catalog's claimed classes");
  orbits->add_flag("--json", orbits_args.json, "Emit the report as JSON");

  ReduceArgs reduce_args;
  auto* reduce = app.add_subcommand("reduce", "Reduce a painting to a minimal representative");
  reduce->add_option("source", reduce_args.source, "Diagram or Vogan file, or catalog name")
      ->required();
  reduce->add_option("--paint", reduce_args.paint,
                     "Comma-separated vertex labels to paint");
  reduce->add_option("--involution", reduce_args.involution,
                     "Comma-separated permutation of vertex indices");

  RenderArgs render_args;
  auto* render = app.add_subcommand("render", "Draw a diagram");
  render->add_option("source", render_args.source, "Diagram or Vogan file, or catalog name")
      ->required();
  render->add_option("--format", render_args.format, "ascii or dot");
  render->add_option("--paint", render_args.paint,
                     "Comma-separated vertex labels to paint");
  render->add_option("--involution", render_args.involution,
                     "Comma-separated permutation of vertex indices");
  render->add_flag("--no-labels", render_args.no_labels, "Omit vertex labels");

  SearchArgs search_args;
  auto* search = app.add_subcommand("search", "Search for hyperbolic diagrams");
  search->add_option("--base", search_args.base, "Diagram to extend by one vertex");
  search->add_option("--rank", search_args.rank, "Census rank");
  search->add_option("--max-label", search_args.max_label,
                     "Largest off-diagonal magnitude");
  search->add_option("--out", search_args.out_dir,
                     "Directory for one diagram file per result");

  std::vector<std::string> catalog_args;
  auto* catalog = app.add_subcommand("catalog", "List or export built-in diagrams");
  catalog->add_option("action", catalog_args, "'list' or 'export <name>'");

  std::vector<std::string> only;
  auto* verify = app.add_subcommand("verify-paper",
                                    "Audit the catalog's claimed classes");
  verify->add_option("--only", only, "Restrict to these catalog entries");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInputError;
  }

  try {
    if (*classify) return Classify(classify_source, out);
    if (*orbits) return Orbits(orbits_args, out, options.color);
    if (*reduce) return Reduce(reduce_args, out, err);
    if (*render) return RenderCmd(render_args, out, options.color);
    if (*search) return Search(search_args, out);
    if (*catalog) {
      if (catalog_args.empty() ||
          (catalog_args.size() == 1 && catalog_args[0] == "list")) {
        return CatalogList(out);
      }
      if (catalog_args.size() == 2 && catalog_args[0] == "export") {
        return CatalogExport(catalog_args[1], out);
      }
      throw InputError("usage: catalog [list | export <name>]");
    }
    if (*verify) return VerifyPaper(only, out, options.color);
  } catch (const Error& e) {
    err << "error: " << ErrorCodeName(e.code()) << ": " << e.what() << '\n';
    return kExitInputError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace vogankm::cli
