#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "orchard/cherries.hpp"
#include "orchard/dot.hpp"
#include "orchard/enewick.hpp"
#include "orchard/exhibit.hpp"
#include "orchard/generator.hpp"
#include "orchard/isomorphism.hpp"
#include "orchard/reconstruct.hpp"

namespace fs = std::filesystem;
using namespace orchard;

namespace {

// 0 success; 1 negative answer (invalid network, not orchard, not
// isomorphic, not the trinet set of an orchard network); 2 bad input or
// usage.
constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kBadInput = 2;

struct Options {
  std::string format = "enewick";
  bool quiet = false;
  bool trace = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

PhyloNetwork load_network(const std::string& path) {
  return parse_enewick(read_file(path));
}

std::string render(const PhyloNetwork& net, const Options& opt) {
  return opt.format == "dot" ? write_dot(net) : write_enewick(net) + "\n";
}

// Filesystem-safe spelling of a leaf label: bytes outside [A-Za-z0-9._-]
// are written %XX.
std::string safe_component(const std::string& label) {
  static const char* hex = "0123456789ABCDEF";
  std::string out;
  for (unsigned char c : label) {
    if (std::isalnum(c) || c == '.' || c == '_' || c == '-') {
      out.push_back(static_cast<char>(c));
    } else {
      out.push_back('%');
      out.push_back(hex[c >> 4]);
      out.push_back(hex[c & 15]);
    }
  }
  return out;
}

int cmd_validate(const std::string& file, const Options& opt) {
  std::string text;
  try {
    text = read_file(file);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }
  try {
    PhyloNetwork net = parse_enewick(text);
    if (!opt.quiet)
      std::cout << "valid: " << net.vertex_count() << " vertices, " << net.arc_count()
                << " arcs, " << net.leaf_count() << " leaves, " << net.reticulation_count()
                << " reticulations\n";
    return kOk;
  } catch (const EnewickError& e) {
    std::cerr << file << ": " << e.what() << "\n";
    return kNegative;
  }
}

int cmd_check_orchard(const std::string& file, const Options& opt) {
  PhyloNetwork net = load_network(file);
  auto seq = orchard_sequence(net);
  if (!seq) {
    std::cout << "not an orchard network\n";
    return kNegative;
  }
  std::cout << "orchard network\n";
  if (!opt.quiet) {
    for (const auto& step : *seq) {
      if (step.kind == PairKind::Cherry)
        std::cout << "reduce " << step.b << " of cherry {" << step.a << "," << step.b << "}\n";
      else
        std::cout << "cut reticulated cherry (" << step.a << "," << step.b << ")\n";
    }
  }
  return kOk;
}

int cmd_exhibit(const std::string& file, const std::string& leaves, const Options& opt) {
  PhyloNetwork net = load_network(file);
  std::vector<std::string> labels;
  std::stringstream ss(leaves);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) labels.push_back(item);
  if (labels.empty()) throw std::invalid_argument("--leaves needs at least one label");
  if (!is_recoverable(net)) throw std::invalid_argument("network is not recoverable");
  std::cout << render(exhibit(net, labels), opt);
  return kOk;
}

int cmd_trinets(const std::string& file, const std::string& out_dir, const Options& opt) {
  PhyloNetwork net = load_network(file);
  TrinetSet ts = trinet_set(net);
  fs::create_directories(out_dir);
  std::string ext = opt.format == "dot" ? ".dot" : ".enwk";
  for (const auto& [triple, trinet] : ts) {
    fs::path path = fs::path(out_dir) / (safe_component(triple[0]) + "_" +
                                         safe_component(triple[1]) + "_" +
                                         safe_component(triple[2]) + ext);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << render(trinet, opt);
  }
  if (!opt.quiet)
    std::cout << "wrote " << ts.size() << " trinets to " << out_dir << "\n";
  return kOk;
}

int cmd_reconstruct(const std::string& dir, const std::string& leaves_file, const Options& opt) {
  std::vector<std::string> labels;
  {
    std::istringstream in(read_file(leaves_file));
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty()) labels.push_back(line);
    }
  }

  TrinetSet ts;
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".enwk")
      files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  for (const auto& path : files) {
    PhyloNetwork trinet = parse_enewick(read_file(path.string()));
    const auto& ls = trinet.leaf_labels();
    if (ls.size() != 3)
      throw std::runtime_error(path.string() + ": expected 3 leaves, found " +
                               std::to_string(ls.size()));
    LeafTriple triple{ls[0], ls[1], ls[2]};
    if (!ts.emplace(triple, trinet).second)
      throw std::runtime_error(path.string() + ": duplicate trinet on {" + ls[0] + "," + ls[1] +
                               "," + ls[2] + "}");
  }

  TraceSink sink;
  if (opt.trace) sink = [](const std::string& line) { std::cerr << line << "\n"; };
  try {
    PhyloNetwork net = construct_orchard(labels, ts, sink);
    std::cout << render(net, opt);
    return kOk;
  } catch (const ReconstructError& e) {
    std::cerr << "not reconstructible: " << e.what() << "\n";
    return kNegative;
  }
}

int cmd_iso(const std::string& file1, const std::string& file2) {
  PhyloNetwork a = load_network(file1);
  PhyloNetwork b = load_network(file2);
  if (is_isomorphic(a, b)) {
    std::cout << "isomorphic\n";
    return kOk;
  }
  std::cout << "not isomorphic\n";
  return kNegative;
}

int cmd_gen(std::size_t leaves, std::size_t retics, std::uint64_t seed, const Options& opt) {
  std::cout << render(random_orchard(leaves, retics, seed), opt);
  return kOk;
}

// Two non-isomorphic recoverable networks exhibiting the same trinets: proof
// that trinet sets do not determine general (non-orchard) networks. The
// claimed properties are re-verified on every run.
int cmd_counterexample(const Options& opt) {
  PhyloNetwork a = parse_enewick(
      "(((((x2)#H2,(x1)#H1),((x3)#H3,(x4)#H4)),x5),((#H4,#H1),(#H2,#H3)));");
  PhyloNetwork b = parse_enewick(
      "((((x2)#H2,(x1)#H1),((x3)#H3,(x4)#H4)),(((#H4,#H1),(#H2,#H3)),x5));");
  if (is_isomorphic(a, b)) throw std::logic_error("counterexample pair is isomorphic");
  if (!trinet_sets_equal(trinet_set(a), trinet_set(b)))
    throw std::logic_error("counterexample pair has different trinet sets");
  std::cout << render(a, opt) << render(b, opt);
  if (!opt.quiet)
    std::cerr << "verified: two non-isomorphic networks with identical trinet sets\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rooted binary phylogenetic networks: orchard reconstruction from trinets"};
  app.require_subcommand(1);
  // Lets --format/--quiet/--trace be written after the subcommand as well.
  app.fallthrough();

  Options opt;
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"enewick", "dot"}))
      ->capture_default_str();
  app.add_flag("--quiet", opt.quiet, "suppress summaries and notes");
  app.add_flag("--trace", opt.trace, "trace reconstruction levels to stderr");

  std::string file, file2, leaves_csv, out_dir, trinet_dir, leaves_file;
  std::size_t gen_leaves = 0, gen_retics = 0;
  std::uint64_t gen_seed = 0;

  auto* validate = app.add_subcommand("validate", "check a file for structural validity");
  validate->add_option("file", file)->required();

  auto* check = app.add_subcommand("check-orchard", "test whether a network is orchard");
  check->add_option("file", file)->required();

  auto* exhibit_cmd = app.add_subcommand("exhibit", "network exhibited on a leaf subset");
  exhibit_cmd->add_option("file", file)->required();
  exhibit_cmd->add_option("--leaves", leaves_csv, "comma-separated leaf labels")->required();

  auto* trinets_cmd = app.add_subcommand("trinets", "write all exhibited trinets to a directory");
  trinets_cmd->add_option("file", file)->required();
  trinets_cmd->add_option("--out", out_dir, "output directory")->required();

  auto* reconstruct_cmd =
      app.add_subcommand("reconstruct", "rebuild an orchard network from its trinets");
  reconstruct_cmd->add_option("dir", trinet_dir, "directory of .enwk trinet files")->required();
  reconstruct_cmd->add_option("--leaves-file", leaves_file, "file with one leaf label per line")
      ->required();

  auto* iso = app.add_subcommand("iso", "test two networks for isomorphism");
  iso->add_option("file1", file)->required();
  iso->add_option("file2", file2)->required();

  auto* gen = app.add_subcommand("gen", "generate a random orchard network");
  gen->add_option("--leaves", gen_leaves, "number of leaves")->required();
  gen->add_option("--retics", gen_retics, "number of reticulations")->required();
  gen->add_option("--seed", gen_seed, "generator seed")->required();

  auto* counter = app.add_subcommand(
      "counterexample", "print two non-isomorphic networks with identical trinet sets");
  (void)counter;

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (app.got_subcommand(validate)) return cmd_validate(file, opt);
    if (app.got_subcommand(check)) return cmd_check_orchard(file, opt);
    if (app.got_subcommand(exhibit_cmd)) return cmd_exhibit(file, leaves_csv, opt);
    if (app.got_subcommand(trinets_cmd)) return cmd_trinets(file, out_dir, opt);
    if (app.got_subcommand(reconstruct_cmd)) return cmd_reconstruct(trinet_dir, leaves_file, opt);
    if (app.got_subcommand(iso)) return cmd_iso(file, file2);
    if (app.got_subcommand(gen)) return cmd_gen(gen_leaves, gen_retics, gen_seed, opt);
    if (app.got_subcommand(counter)) return cmd_counterexample(opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }
  return kBadInput;
}
