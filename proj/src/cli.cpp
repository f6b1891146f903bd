// Copyright 2026 The Anyon Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "anyon/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <numeric>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "anyon/braidrep.hpp"
#include "anyon/catalog.hpp"
#include "anyon/errors.hpp"
#include "anyon/fsolve.hpp"
#include "anyon/gatelab.hpp"
#include "anyon/parallel.hpp"

namespace anyon {

namespace {

namespace fs = std::filesystem;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

nlohmann::json read_json(const std::string& path) {
  try {
    return nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw IoError("cannot parse " + path + ": " + e.what());
  }
}

void write_file(const std::string& path, const std::string& text) {
  const fs::path p(path);
  std::error_code ec;
  if (p.has_parent_path()) fs::create_directories(p.parent_path(), ec);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out || !(out << text)) throw IoError("cannot write " + path);
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) h = (h ^ c) * 1099511628211ULL;
  return h;
}

FusionRing load_ring(const RunConfig& cfg) {
  if (!cfg.ring_file.empty()) return ring_from_json(read_json(cfg.ring_file));
  if (cfg.ring.empty()) throw DomainError("one of --ring or --ring-file is required");
  return builtin(cfg.ring);
}

SolverOptions solver_options(const RunConfig& cfg, std::ostream& err) {
  SolverOptions opt;
  opt.max_component_size = cfg.max_component_size;
  opt.workers = cfg.workers;
  opt.sign_enumeration = cfg.sign_enumeration;
  if (cfg.verbose) opt.log = &err;
  return opt;
}

/** Cache file of a ring: name plus a digest of its JSON form. */
std::string cache_path(const RunConfig& cfg, const FusionRing& ring) {
  std::ostringstream name;
  name << ring.name() << "-" << std::hex << std::setw(16) << std::setfill('0') << fnv1a(ring_to_json(ring).dump())
       << ".json";
  return (fs::path(cfg.cache_dir) / name.str()).string();
}

/** The table from --table, the cache, or a fresh solve (stored in the cache). */
FSymbolTable obtain_table(const RunConfig& cfg, std::ostream& err) {
  if (!cfg.table_file.empty()) {
    FSymbolTable t = table_from_json(read_json(cfg.table_file));
    if (!cfg.ring.empty() && cfg.ring_file.empty() && t.ring().name() != cfg.ring) {
      throw DomainError("table " + cfg.table_file + " holds ring " + t.ring().name() + ", not " + cfg.ring);
    }
    return t;
  }
  FusionRing ring = load_ring(cfg);
  const std::string path = cache_path(cfg, ring);
  if (!cfg.no_cache && fs::exists(path)) {
    if (cfg.verbose) err << "using cached F-symbols " << path << "\n";
    return table_from_json(read_json(path));
  }
  FSymbolTable t = solve(ring, solver_options(cfg, err));
  if (!cfg.no_cache) write_file(path, table_to_json(t).dump(1) + "\n");
  return t;
}

int default_anyon(const FusionRing& ring) {
  for (int a = 0; a < ring.rank(); ++a)
    if (a != ring.vacuum()) return a;
  return ring.vacuum();
}

BraidRep rep_from_config(const RunConfig& cfg, const FSymbolTable& table) {
  const FusionRing& ring = table.ring();
  const int a = cfg.anyon.empty() ? default_anyon(ring) : ring.label_index(cfg.anyon);
  const int b = cfg.root.empty() ? a : ring.label_index(cfg.root);
  return build_rep(table, a, b, cfg.strands);
}

Rational parse_rational(const std::string& s) {
  try {
    Rational q(s);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw DomainError("not a rational number: " + s);
  }
}

int cmd_list_rings(std::ostream& out) {
  for (const auto& name : builtin_names()) {
    FusionRing ring = builtin(name);
    const int n = ring.rank();
    long admissible = 0;
    Sextuple s;
    for (s[0] = 0; s[0] < n; ++s[0])
      for (s[1] = 0; s[1] < n; ++s[1])
        for (s[2] = 0; s[2] < n; ++s[2])
          for (s[3] = 0; s[3] < n; ++s[3])
            for (s[4] = 0; s[4] < n; ++s[4])
              for (s[5] = 0; s[5] < n; ++s[5]) admissible += ring.is_admissible_sextuple(s) ? 1 : 0;
    out << name << "  labels=" << n << " [";
    for (int a = 0; a < n; ++a) out << (a ? " " : "") << ring.label_names()[a];
    out << "]  admissible_sextuples=" << admissible << "\n";
  }
  out << "su2-k is available for every level k >= 1\n";
  return kExitOk;
}

int cmd_solve(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  FusionRing ring = load_ring(cfg);
  const std::string path = cfg.output.empty() ? ring.name() + ".json" : cfg.output;
  nlohmann::json summary;
  summary["ring"] = ring.name();
  summary["output"] = path;
  if (cfg.check && fs::exists(path)) {
    FSymbolTable t = table_from_json(read_json(path));
    VerifyReport rep = verify(t);
    summary["checked_existing"] = true;
    summary["verify"] = rep.to_json();
    out << summary.dump(2) << "\n";
    return rep.ok() ? kExitOk : kExitUnsolvable;
  }
  SolveStats stats;
  FSymbolTable t = solve(ring, solver_options(cfg, err), &stats);
  write_file(path, table_to_json(t).dump(1) + "\n");
  VerifyReport rep = verify(t);
  summary["checked_existing"] = false;
  summary["stats"] = stats.to_json();
  summary["verify"] = rep.to_json();
  out << summary.dump(2) << "\n";
  return rep.ok() ? kExitOk : kExitUnsolvable;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  if (cfg.table_file.empty()) throw DomainError("--table is required");
  FSymbolTable t = table_from_json(read_json(cfg.table_file));
  VerifyOptions opt;
  opt.numeric = cfg.numeric;
  VerifyReport rep = verify(t, opt);
  nlohmann::json j;
  j["ring"] = t.ring().name();
  j["real"] = t.is_real();
  j["verify"] = rep.to_json();
  out << j.dump(2) << "\n";
  return rep.ok() ? kExitOk : kExitUnsolvable;
}

int cmd_braid(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.strands < 3) throw DomainError("--strands must be at least 3");
  FSymbolTable t = obtain_table(cfg, err);
  BraidRep rep = rep_from_config(cfg, t);
  out << rep_to_text(rep, std::min(cfg.digits, 12));
  if (!cfg.output.empty()) write_file(cfg.output, rep_to_json(rep, cfg.digits).dump(1) + "\n");
  return kExitOk;
}

std::vector<BigMatrix> generators_from_json(const nlohmann::json& j) {
  std::vector<BigMatrix> out;
  try {
    for (const auto& m : j.at("generators")) {
      BigMatrix g;
      g.n = static_cast<int>(m.size());
      for (const auto& row : m) {
        if (static_cast<int>(row.size()) != g.n) throw DomainError("generators must be square");
        for (const auto& z : row) {
          if (z.is_number()) {
            g.a.emplace_back(BigReal(z.get<double>()));
          } else {
            auto part = [](const nlohmann::json& x) {
              return x.is_string() ? BigReal(x.get<std::string>()) : BigReal(x.get<double>());
            };
            g.a.emplace_back(part(z.at(0)), part(z.at(1)));
          }
        }
      }
      out.push_back(std::move(g));
    }
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("generators file: ") + e.what());
  }
  return out;
}

int cmd_gate_order(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  nlohmann::json j;
  ClosureResult c;
  if (!cfg.generators_file.empty()) {
    std::vector<BigMatrix> gens = generators_from_json(read_json(cfg.generators_file));
    if (!cfg.phase.empty()) {
      const Rational q = parse_rational(cfg.phase);
      const BigComplex p = big_unit_root(q.get_num().get_si(), 2 * q.get_den().get_si());
      const BigComplex s = BigComplex(BigReal(1)) / p;
      for (auto& g : gens)
        for (auto& z : g.a) z = z * s;
    }
    c = group_closure_numeric(gens, cfg.cap);
    j["source"] = cfg.generators_file;
  } else {
    if (cfg.strands < 3) throw DomainError("--strands must be at least 3");
    FSymbolTable t = obtain_table(cfg, err);
    BraidRep rep = rep_from_config(cfg, t);
    if (cfg.phase.empty()) {
      c = group_closure(rep.generators, cfg.cap);
    } else {
      // e^{i pi q} = e^{2 pi i (q/2)}.
      const Rational half = parse_rational(cfg.phase) / 2;
      const long den = half.get_den().get_si();
      long m = std::lcm(static_cast<long>(t.ring().cyclo_order()), den);
      c = group_closure(rep.generators, TowerNumber(CycloNumber::root_of_unity(static_cast<int>(m), half)), cfg.cap);
    }
    j["ring"] = t.ring().name();
    j["dimension"] = rep.dim();
  }
  if (!cfg.phase.empty()) j["phase"] = cfg.phase;
  if (c.exceeded) {
    j["order"] = nullptr;
    j["exceeds_cap"] = cfg.cap;
  } else {
    j["order"] = c.order;
  }
  out << j.dump(2) << "\n";
  return kExitOk;
}

int cmd_gate_weave(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.target_file.empty()) throw DomainError("--target is required");
  if (!(cfg.tol > 0)) throw DomainError("--tol must be positive");
  if (cfg.strands < 3) throw DomainError("--strands must be at least 3");
  GateTarget target = GateTarget::from_json(read_json(cfg.target_file));
  FSymbolTable t = obtain_table(cfg, err);
  BraidRep rep = rep_from_config(cfg, t);
  WeaveOptions opt;
  opt.max_len = cfg.max_len;
  opt.tol = cfg.tol;
  opt.exponents = cfg.exponents;
  opt.workers = cfg.workers;
  auto w = weave_search(rep, target, opt);
  nlohmann::json j;
  j["found"] = w.has_value();
  if (w) j.update(w->to_json(cfg.digits));
  out << j.dump(2) << "\n";
  return kExitOk;
}

void ring_flags(CLI::App* c, RunConfig& cfg) {
  c->add_option("--ring", cfg.ring, "Catalog ring name");
  c->add_option("--ring-file", cfg.ring_file, "Ring JSON file");
}

void solver_flags(CLI::App* c, RunConfig& cfg) {
  c->add_option("--max-component-size", cfg.max_component_size, "Step-1 component cutoff")->check(CLI::PositiveNumber);
  c->add_option("--workers", cfg.workers, "Worker threads")->check(CLI::PositiveNumber);
  c->add_flag("--sign-enumeration", cfg.sign_enumeration, "Enumerate Step-3 branches until verify passes");
  c->add_flag("-v,--verbose", cfg.verbose, "Progress on stderr");
}

void rep_flags(CLI::App* c, RunConfig& cfg) {
  ring_flags(c, cfg);
  solver_flags(c, cfg);
  c->add_option("--table", cfg.table_file, "Solved F-symbol JSON");
  c->add_option("--anyon", cfg.anyon, "Strand label (default: first non-vacuum label)");
  c->add_option("--root", cfg.root, "Root label (default: the anyon)");
  c->add_option("--strands", cfg.strands, "Strand count m >= 3");
  c->add_option("--cache-dir", cfg.cache_dir, "Directory of solved tables");
  c->add_flag("--no-cache", cfg.no_cache, "Solve without reading or writing the cache");
  c->add_option("--digits", cfg.digits, "Significant digits of exported values")->check(CLI::Range(1, 70));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  cfg.workers = default_workers();
  CLI::App app{"Anyon toolkit: F-symbol solver, braid representations and gate search", "anyon"};
  app.require_subcommand(1);
  auto* list = app.add_subcommand("list-rings", "List catalog rings");
  auto* solve_cmd = app.add_subcommand("solve", "Solve the pentagon and hexagon equations of a ring");
  ring_flags(solve_cmd, cfg);
  solver_flags(solve_cmd, cfg);
  solve_cmd->add_option("-o,--out", cfg.output, "Output JSON (default <ring>.json)");
  solve_cmd->add_flag("--check", cfg.check, "Reverify an existing output instead of solving");
  auto* verify_cmd = app.add_subcommand("verify", "Check a solved table");
  verify_cmd->add_option("--table", cfg.table_file, "Solved F-symbol JSON")->required();
  verify_cmd->add_flag("--numeric", cfg.numeric, "Compare embeddings instead of exact zero tests");
  auto* braid_cmd = app.add_subcommand("braid", "Computational basis and braid generators");
  rep_flags(braid_cmd, cfg);
  braid_cmd->add_option("--json", cfg.output, "Write the representation as JSON");
  auto* gate_cmd = app.add_subcommand("gate", "Group orders and weave search");
  gate_cmd->require_subcommand(1);
  auto* order_cmd = gate_cmd->add_subcommand("order", "Order of the group generated by the braid generators");
  rep_flags(order_cmd, cfg);
  order_cmd->add_option("--phase", cfg.phase, "Quotient phase e^{i pi q}, given as q (e.g. 1/12)");
  order_cmd->add_option("--cap", cfg.cap, "Largest group order explored");
  order_cmd->add_option("--generators", cfg.generators_file, "JSON {generators: [matrix, ...]} instead of a rep");
  auto* weave_cmd = gate_cmd->add_subcommand("weave", "Brute-force weave search for a target gate");
  rep_flags(weave_cmd, cfg);
  weave_cmd->add_option("--target", cfg.target_file, "Target gate JSON")->required();
  weave_cmd->add_option("--max-len", cfg.max_len, "Largest number of weave factors")->check(CLI::PositiveNumber);
  weave_cmd->add_option("--tol", cfg.tol, "Phase-distance tolerance");
  weave_cmd->add_option("--exponents", cfg.exponents, "Exponent alphabet in search order")->delimiter(',');

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }

  try {
    if (list->parsed()) return cmd_list_rings(out);
    if (solve_cmd->parsed()) return cmd_solve(cfg, out, err);
    if (verify_cmd->parsed()) return cmd_verify(cfg, out);
    if (braid_cmd->parsed()) return cmd_braid(cfg, out, err);
    if (order_cmd->parsed()) return cmd_gate_order(cfg, out, err);
    if (weave_cmd->parsed()) return cmd_gate_weave(cfg, out, err);
  } catch (const UnsolvableError& e) {
    err << "unsolvable: " << e.what() << "\n";
    return kExitUnsolvable;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << "\n";
    return kExitIo;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitDomain;
}

}  // namespace anyon
