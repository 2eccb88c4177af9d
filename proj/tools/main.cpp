#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "splitcyc/bounds.hpp"
#include "splitcyc/enumerate.hpp"
#include "splitcyc/error.hpp"
#include "splitcyc/families.hpp"
#include "splitcyc/report.hpp"
#include "splitcyc/rotmap_io.hpp"
#include "splitcyc/surgery.hpp"
#include "splitcyc/voltage.hpp"
#include "splitcyc/voltmap_io.hpp"

using namespace splitcyc;

namespace {

constexpr int kExitValidation = 1;
constexpr int kExitInternal = 2;

struct Inconsistency : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MapSource {
  std::string rotmap;
  int gross_tucker = 0;
  std::string voltmap;
  std::string bundled;

  void attach(CLI::App* cmd) {
    auto* pos = cmd->add_option("map", rotmap, "rotmap file");
    auto* gt = cmd->add_option("--gross-tucker", gross_tucker, "derive the Gross-Tucker map for s");
    auto* vm = cmd->add_option("--voltmap", voltmap, "derive from a voltmap file");
    auto* bb = cmd->add_option("--bundled", bundled, "derive a bundled Z_19 base: A, B or C");
    pos->excludes(gt, vm, bb);
    gt->excludes(vm, bb);
    vm->excludes(bb);
  }

  bool derived() const { return rotmap.empty(); }

  std::string name() const {
    if (!rotmap.empty()) return rotmap;
    if (!voltmap.empty()) return voltmap;
    if (!bundled.empty()) return to_string(parse_bundled_name(bundled));
    return "gross-tucker s=" + std::to_string(gross_tucker);
  }

  RotationMap load() const {
    if (!rotmap.empty()) return read_rotmap_file(rotmap);
    if (!voltmap.empty()) return derive(read_voltmap_file(voltmap));
    if (!bundled.empty()) return derive(bundled_base(parse_bundled_name(bundled)));
    return derive(gross_tucker_base(gross_tucker));
  }
};

struct Output {
  std::string path;
  void attach(CLI::App* cmd) { cmd->add_option("--out", path, "write to a file instead of stdout"); }
  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::IoError, "cannot write " + path);
    out << text;
  }
};

std::vector<Vertex> parse_cycle(const std::string& text) {
  std::vector<Vertex> out;
  std::string tok;
  std::istringstream ss(text);
  while (std::getline(ss, tok, ',')) {
    auto b = tok.find_first_not_of(" ()");
    auto e = tok.find_last_not_of(" ()");
    if (b == std::string::npos) continue;
    tok = tok.substr(b, e - b + 1);
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw Error(ErrorCode::NotACycle, "bad vertex '" + tok + "'");
    }
    if (used != tok.size()) throw Error(ErrorCode::NotACycle, "bad vertex '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

std::string describe(const SplitVerdict& v, int genus) {
  if (!v.separating) return "not separating";
  std::string s = "separating, sides " + std::to_string(v.side_genus) + "/" + std::to_string(genus - v.side_genus);
  if (v.contractible) return s + ", type 0 (contractible)";
  return s + ", splitting, type " + std::to_string(v.type);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Splitting cycles in triangulations of complete graphs"};
  app.require_subcommand(1);

  MapSource build_src, genus_src, search_src, cycle_src;
  Output build_out, search_out, family_out;

  auto* build = app.add_subcommand("build", "derive a map and write it as rotmap");
  build_src.attach(build);
  build_out.attach(build);
  std::string build_volt_out;
  build->add_option("--voltmap-out", build_volt_out, "also write the base map as voltmap");

  auto* genus_cmd = app.add_subcommand("genus", "print V, E, F and genus");
  genus_src.attach(genus_cmd);

  auto* search = app.add_subcommand("search", "enumerate splitting cycles through a root");
  search_src.attach(search);
  search_out.attach(search);
  int root = 0;
  std::optional<int> max_length;
  std::string seam = "on";
  std::string transitive;
  bool no_test4 = false, no_remark2 = false;
  int workers = 1;
  std::string format = "text";
  search->add_option("--root", root, "root vertex")->capture_default_str();
  search->add_option("--max-length", max_length, "longest cycle to consider");
  search->add_option("--seam-remark2", seam, "skip cycles with a facial corner at the closing seam")
      ->check(CLI::IsMember({"on", "off"}))
      ->capture_default_str();
  search->add_option("--assume-transitive", transitive, "require i -> i+1 to be an automorphism (default on for derived maps)")
      ->check(CLI::IsMember({"on", "off"}));
  search->add_flag("--no-test4", no_test4, "disable the interleaving test");
  search->add_flag("--no-remark2", no_remark2, "keep paths with facial corners");
  search->add_option("--workers", workers, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  search->add_option("--format", format)->check(CLI::IsMember({"text", "csv", "json"}))->capture_default_str();

  auto* verify = app.add_subcommand("verify-cycle", "fast verdict and cut oracle for one cycle");
  cycle_src.attach(verify);
  std::string cycle_text;
  verify->add_option("--cycle", cycle_text, "comma separated vertices")->required();

  auto* fam = app.add_subcommand("verify-families", "check the explicit cycle families on a Gross-Tucker map");
  family_out.attach(fam);
  int fam_s = 3;
  bool oracle_all = false;
  int fam_workers = 1;
  std::string fam_format = "text";
  fam->add_option("--s", fam_s, "family parameter s")->required();
  fam->add_flag("--oracle-all", oracle_all, "cross-check every member with the cut oracle");
  fam->add_option("--workers", fam_workers)->check(CLI::PositiveNumber);
  fam->add_option("--format", fam_format)->check(CLI::IsMember({"text", "csv", "json"}));

  auto* bound = app.add_subcommand("bound", "shortest cycle bounding a side of genus g with no interior vertex");
  int bound_g = 0;
  bound->add_option("g", bound_g, "side genus")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitValidation;
  }

  try {
    if (*build) {
      if (build_src.rotmap.empty() && build_src.voltmap.empty() && build_src.bundled.empty() &&
          build_src.gross_tucker == 0)
        throw Error(ErrorCode::InvalidParameter, "give --gross-tucker, --voltmap, --bundled or a rotmap file");
      const RotationMap m = build_src.load();
      std::ostringstream text;
      write_rotmap(text, m);
      build_out.write(text.str());
      if (!build_volt_out.empty()) {
        if (build_src.rotmap.size()) throw Error(ErrorCode::InvalidParameter, "--voltmap-out needs a derived map");
        VoltageBaseMap b = !build_src.voltmap.empty() ? read_voltmap_file(build_src.voltmap)
                           : !build_src.bundled.empty() ? bundled_base(parse_bundled_name(build_src.bundled))
                                                        : gross_tucker_base(build_src.gross_tucker);
        std::ofstream vo(build_volt_out);
        if (!vo) throw Error(ErrorCode::IoError, "cannot write " + build_volt_out);
        write_voltmap(vo, b);
      }
      std::ostream& log = build_out.path.empty() ? std::cerr : std::cout;
      log << "V=" << m.vertex_count() << " E=" << m.edge_count() << " F=" << m.face_count()
          << " genus=" << m.genus() << '\n';
      return 0;
    }
    if (*genus_cmd) {
      const RotationMap m = genus_src.load();
      std::cout << "V=" << m.vertex_count() << " E=" << m.edge_count() << " F=" << m.face_count()
                << " chi=" << m.euler_characteristic() << " genus=" << m.genus()
                << " triangulation=" << (is_simplicial_triangulation(m) ? "yes" : "no") << '\n';
      return 0;
    }
    if (*search) {
      const RotationMap m = search_src.load();
      SearchOptions opt;
      opt.max_length = max_length;
      opt.seam_remark2 = seam == "on";
      opt.remark2 = !no_remark2;
      opt.test4 = !no_test4;
      opt.workers = workers;
      opt.assume_transitive = transitive.empty() ? search_src.derived() : transitive == "on";
      const auto t0 = std::chrono::steady_clock::now();
      SearchReport rep;
      rep.embedding = search_src.name();
      rep.options = opt;
      rep.table = enumerate(m, root, opt);
      rep.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
      search_out.write(render(rep, parse_format(format)));
      return 0;
    }
    if (*verify) {
      const RotationMap m = cycle_src.load();
      const auto cycle = parse_cycle(cycle_text);
      const int g = m.genus();
      const auto parts = cut_along(m, cycle);
      SplitVerdict oracle;
      oracle.separating = parts.size() == 2;
      if (oracle.separating) {
        oracle.side_genus = std::min(parts[0].genus, parts[1].genus);
        oracle.type = oracle.side_genus;
        oracle.contractible = oracle.type == 0;
      }
      std::cout << "oracle: " << describe(oracle, g) << '\n';
      const CloseResult fast = verdict_for_cycle(m, cycle);
      const bool corner = fast.status == CloseStatus::SeamCorner;
      if (fast.status != CloseStatus::Closed && !corner)
        throw Error(ErrorCode::NotACycle, "cycle cannot be closed");
      if (!is_simplicial_triangulation(m)) {
        std::cout << "fast: skipped (not a simplicial triangulation)\n";
        return 0;
      }
      SplitVerdict v = fast.verdict;
      if (v.separating) {
        const int other_side = g - v.side_genus;
        v.side_genus = std::min(v.side_genus, other_side);
      }
      std::cout << "fast: " << describe(v, g);
      if (!v.separating && v.pruned_by != PruneReason::None) std::cout << " (" << to_string(v.pruned_by) << ")";
      std::cout << '\n';
      if (v.separating != oracle.separating || (v.separating && v.type != oracle.type))
        throw Inconsistency("fast verdict and cut oracle disagree");
      return 0;
    }
    if (*fam) {
      const FamilyReport rep = verify_families(fam_s, oracle_all, fam_workers);
      family_out.write(render(rep, parse_format(fam_format)));
      for (const auto& m : rep.members)
        if (m.oracle_type != -1 && !m.agrees) return kExitInternal;
      return rep.all_passed() ? 0 : kExitValidation;
    }
    if (*bound) {
      std::cout << no_interior_bound(bound_g) << '\n';
      return 0;
    }
  } catch (const Inconsistency& e) {
    std::cerr << "internal inconsistency: " << e.what() << '\n';
    return kExitInternal;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::NonIntegralGenus ? kExitInternal : kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  return 0;
}
