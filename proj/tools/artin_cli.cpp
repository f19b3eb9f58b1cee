#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "artin/errors.hpp"
#include "artin/parallel.hpp"
#include "artin/report.hpp"

using namespace artin;

namespace {

struct Options {
  std::string type;
  int threads = default_thread_count();
  std::uint64_t seed = 0;
  std::string json_path;
  std::string format = "table";
  std::string expect_path;
  std::string mode = "conjugacy";
  std::uint64_t bound = kDefaultBruteForceBound;
  std::string name;
  std::string images;
  std::string matrix_path;
  std::string stage = "table1";
  std::uint64_t class_size = 0;
  int n = 3;
  std::string phi;
};

// Words are separated by ';' or '/'.
std::vector<std::string> split_words(const std::string& text) {
  std::vector<std::string> out(1);
  for (char ch : text) {
    if (ch == ';' || ch == '/')
      out.emplace_back();
    else
      out.back() += ch;
  }
  return out;
}

std::string scalar(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  return v.dump();
}

void print_table(std::ostream& out, const Json& j) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const Json& v = it.value();
    bool rows = v.is_array() && !v.empty() && v.front().is_object();
    if (!rows) {
      if (v.is_object()) {
        out << it.key() << ":\n";
        for (auto jt = v.begin(); jt != v.end(); ++jt) out << "  " << jt.key() << ": " << scalar(jt.value()) << '\n';
      } else {
        out << it.key() << ": " << scalar(v) << '\n';
      }
      continue;
    }
    out << it.key() << ":\n";
    std::vector<std::string> cols;
    for (auto jt = v.front().begin(); jt != v.front().end(); ++jt) cols.push_back(jt.key());
    std::vector<std::vector<std::string>> cells{cols};
    for (const auto& row : v) {
      std::vector<std::string> line;
      for (const auto& c : cols) line.push_back(row.contains(c) ? scalar(row[c]) : "-");
      cells.push_back(line);
    }
    std::vector<std::size_t> width(cols.size(), 0);
    for (const auto& line : cells)
      for (std::size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());
    for (const auto& line : cells) {
      out << ' ';
      for (std::size_t c = 0; c < line.size(); ++c) {
        out << ' ' << line[c];
        if (c + 1 < line.size()) out << std::string(width[c] - line[c].size(), ' ');
      }
      out << '\n';
    }
  }
}

WHom parse_images(const CoxeterGroup& w, const std::string& text) {
  auto words = split_words(text);
  if (words.size() != static_cast<std::size_t>(w.rank()))
    throw CLI::ValidationError("--images", "expected " + std::to_string(w.rank()) + " words separated by ';' or '/'");
  return hom_from_words(w, words);
}

WHom catalog_hom(const CoxeterGroup& w, const std::string& name) {
  for (const auto& e : catalog(w))
    if (e.name == name) return e.hom;
  throw NoCatalogEntry("no catalog entry '" + name + "' for " + w.graph().code());
}

Json run_command(const std::string& cmd, const Options& o) {
  auto group = [&] { return CoxeterGroup(CoxeterGraph::parse(o.type)); };
  if (cmd == "info") return info_json(group(), o.seed);
  if (cmd == "exists-proper") {
    auto w = group();
    return existence_json(w, exists_proper_ucep(w));
  }
  if (cmd == "classify") {
    auto w = group();
    HomSpace space(w, o.bound, o.seed);
    auto mode = o.mode == "equivalence" ? GroupingMode::equivalence : GroupingMode::conjugacy;
    return classes_json(w, classify_uceps(space, mode, o.threads));
  }
  if (cmd == "catalog") {
    auto w = group();
    return catalog_json(w, catalog(w));
  }
  if (cmd == "obstruct") {
    auto w = group();
    if (o.name.empty() == o.images.empty()) throw CLI::ValidationError("obstruct", "give exactly one of --name, --images");
    WHom psi = o.name.empty() ? parse_images(w, o.images) : catalog_hom(w, o.name);
    auto system = offset_system(w, psi, o.threads);
    auto result = solve_obstruction(system);
    if (!o.matrix_path.empty()) {
      std::ofstream m(o.matrix_path);
      if (!m) throw CLI::ValidationError("--matrix", "cannot write " + o.matrix_path);
      m << dump_matrix(system);
    }
    Json out = obstruction_json(result);
    out["graph"] = w.graph().code();
    out["target"] = o.name.empty() ? Json(nullptr) : Json(o.name);
    out["images"] = hom_json(w, psi);
    out["certificate_verified"] = result.verdict == Verdict::obstructed && verify_certificate(system, result.certificate);
    return out;
  }
  if (cmd == "theorem31") {
    auto w = group();
    return theorem31_json(w, theorem31_report(w, o.threads, o.bound));
  }
  if (cmd == "h3") return h3_json(h3_search(o.threads));
  if (cmd == "e7") {
    CoxeterGroup w(CoxeterGraph::parse("E7"));
    ConjugacyClasses classes(w, o.seed);
    std::optional<std::uint64_t> size;
    if (o.class_size) size = o.class_size;
    auto report = e7_table1(w, classes, size, o.threads);
    if (o.stage == "table2") report = e7_table2(w, classes, report, o.threads);
    report.seed = o.seed;
    return search_json(report);
  }
  if (cmd == "bn-verify") return bn_json(bn_verify(o.n, o.bound, o.threads));
  if (cmd == "preserves-coloured") {
    auto w = group();
    std::vector<ArtinWord> phi;
    for (const auto& word : split_words(o.phi)) phi.push_back(ArtinWord::parse(word, w.rank()));
    if (phi.size() != static_cast<std::size_t>(w.rank()))
      throw CLI::ValidationError("--phi", "expected " + std::to_string(w.rank()) + " words separated by ';' or '/'");
    Json out;
    out["graph"] = w.graph().code();
    out["preserves"] = preserves_coloured(w, phi);
    return out;
  }
  throw CLI::ValidationError("command", "unknown subcommand " + cmd);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Artin group endomorphism and up-to-center-epimorphism toolkit"};
  app.require_subcommand(1, 1);
  Options o;

  auto common = [&](CLI::App* sub, bool typed) {
    if (typed) sub->add_option("--type", o.type, "Coxeter graph, e.g. E7, I2:10, B3xA1, n=3;1-2:5,2-3:3")->required();
    sub->add_option("--threads", o.threads, "worker threads (default: ARTIN_THREADS or 1)")->check(CLI::PositiveNumber);
    sub->add_option("--seed", o.seed, "seed for class discovery");
    sub->add_option("--json", o.json_path, "also write the JSON report here");
    sub->add_option("--format", o.format, "stdout format")->check(CLI::IsMember({"table", "json"}));
    sub->add_option("--expect", o.expect_path, "compare against a JSON report, ignoring timings");
  };

  auto* info = app.add_subcommand("info", "order, w0, xi, center, Delta, h, |T|, class count");
  common(info, true);
  auto* exists = app.add_subcommand("exists-proper", "whether a proper up-to-center-epimorphism exists");
  common(exists, true);
  auto* classify = app.add_subcommand("classify", "brute-force classification of up-to-center-epimorphisms");
  common(classify, true);
  classify->add_option("--mode", o.mode)->check(CLI::IsMember({"conjugacy", "equivalence"}));
  classify->add_option("--bound", o.bound, "largest |W| for brute force");
  auto* cat = app.add_subcommand("catalog", "named homomorphisms for the type");
  common(cat, true);
  auto* obstruct = app.add_subcommand("obstruct", "parity obstruction for a target homomorphism");
  common(obstruct, true);
  obstruct->add_option("--name", o.name, "catalog entry, e.g. nu_8^1");
  obstruct->add_option("--images", o.images, "images as words in the s_i, e.g. \"1/2 1\"");
  obstruct->add_option("--matrix", o.matrix_path, "write the GF(2) matrix here");
  auto* thm = app.add_subcommand("theorem31", "obstruction run over every extraordinary class");
  common(thm, true);
  thm->add_option("--bound", o.bound, "largest |W| for brute force");
  auto* h3 = app.add_subcommand("h3", "H3 triple search");
  common(h3, false);
  auto* e7 = app.add_subcommand("e7", "E7 class statistics (tables 1 and 2)");
  common(e7, false);
  e7->add_option("--stage", o.stage)->check(CLI::IsMember({"table1", "table2"}));
  e7->add_option("--class-size", o.class_size, "only classes of this size");
  auto* bn = app.add_subcommand("bn-verify", "B_n classification check, n odd");
  common(bn, false);
  bn->add_option("--n", o.n, "rank");
  bn->add_option("--bound", o.bound, "largest |W| for brute force");
  auto* coloured = app.add_subcommand("preserves-coloured", "whether phi maps the coloured Artin group into itself");
  common(coloured, true);
  coloured->add_option("--phi", o.phi, "images as Artin words, e.g. \"1/2 1 -2\"")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  std::string cmd = app.get_subcommands().front()->get_name();
  Json report;
  try {
    report = run_command(cmd, o);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }

  if (o.format == "json")
    std::cout << report.dump(2) << '\n';
  else
    print_table(std::cout, report);
  if (!o.json_path.empty()) {
    std::ofstream f(o.json_path);
    if (!f) {
      std::cerr << "error: cannot write " << o.json_path << '\n';
      return 1;
    }
    f << report.dump(2) << '\n';
  }
  if (!o.expect_path.empty()) {
    std::ifstream f(o.expect_path);
    if (!f) {
      std::cerr << "error: cannot read " << o.expect_path << '\n';
      return 1;
    }
    Json expected;
    try {
      expected = Json::parse(f);
    } catch (const Json::parse_error& e) {
      std::cerr << "error: " << e.what() << '\n';
      return 1;
    }
    auto diff = Json::diff(without_timings(expected), without_timings(report));
    if (!diff.empty()) {
      std::cerr << "mismatch against " << o.expect_path << ":\n" << diff.dump(2) << '\n';
      return 2;
    }
  }
  return 0;
}
