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


// Acceptance checks: one PASS/FAIL line per criterion; exit status 1 if any fails.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "anyon/braidrep.hpp"
#include "anyon/cli.hpp"
#include "anyon/fsolve.hpp"
#include "anyon/gatelab.hpp"
#include "support.hpp"

using namespace anyon;
using namespace anyon::testing;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

int failures = 0;

void report(int n, bool ok, const std::string& detail) {
  std::cout << "criterion " << n << ": " << (ok ? "PASS" : "FAIL") << " | " << detail << std::endl;
  if (!ok) ++failures;
}

std::string fmt(double x, int prec = 3) {
  std::ostringstream os;
  os.precision(prec);
  os << x;
  return os.str();
}

TowerNumber z48(long e) { return TowerNumber(CycloNumber::zeta(48, e)); }

void criterion1() {
  auto t0 = Clock::now();
  FSymbolTable t = solve(builtin("fibonacci"));
  VerifyReport rep = verify(t);
  const double sec = since(t0);
  bool ok = rep.ok();
  std::string missing;
  for (const char* k : {"pentagon", "hexagon+", "hexagon-", "orthogonality", "rigidity", "pivotal"}) {
    if (rep.checked.count(k) == 0 || rep.checked.at(k) == 0) {
      ok = false;
      missing += std::string(" ") + k;
    }
  }
  const int tau = t.ring().label_index("tau");
  auto b = t.block(tau, tau, tau, tau);
  bool block_ok = b.size() == 2 && b[0].size() == 2;
  if (block_ok) {
    TowerMatrix f(2, 2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) f(i, j) = b[i][j];
    block_ok = f.transpose() * f == TowerMatrix::identity(2);
    const TowerNumber x = f(0, 0), y = f(0, 1);
    // x = 1/phi and y^2 = x: the golden relation of the top-left entry.
    block_ok = block_ok && (x * x + x - TowerNumber(1L)).is_zero() && y * y == x;
  }
  ok = ok && block_ok && sec < 10;
  std::ostringstream d;
  d << "fibonacci solve+verify " << fmt(sec) << "s; checks:";
  for (const auto& [k, v] : rep.checked) d << " " << k << "=" << v;
  d << "; issues=" << rep.issues.size() << "; F^{ttt}_t orthogonal with x^2+x-1=0 and y^2=x: "
    << (block_ok ? "yes" : "no");
  if (!missing.empty()) d << "; unchecked:" << missing;
  report(1, ok, d.str());
}

void criterion2() {
  auto t0 = Clock::now();
  const FSymbolTable& t = solved("su2-4");
  const FusionRing& ring = t.ring();
  const int xe = ring.label_index("X_e"), y = ring.label_index("Y");
  std::ostringstream d;
  bool ok = true;

  auto basis = comp_basis(ring, xe, y, 4);
  std::string b;
  for (const auto& s : basis) b += state_str(ring, s);
  const bool basis_ok = b == "(Y,Y)(Y,one)(one,Y)";
  ok = ok && basis_ok;
  d << "basis " << b << (basis_ok ? " ok" : " WRONG");

  BraidRep rep = build_rep(t, xe, y, 4);
  const TowerMatrix T = swap_last_two();
  std::vector<TowerMatrix> s;
  for (const auto& g : rep.generators) s.push_back(T * g * T);
  const TowerNumber one(1L), omega = z48(8) - one;
  auto odd_ok = [&](const TowerNumber& gamma) {
    return s[0].scaled(gamma.inv()) == TowerMatrix::diagonal({one, omega, one}) &&
           s[2].scaled(gamma.inv()) == TowerMatrix::diagonal({one, one, omega});
  };
  const bool g2 = odd_ok(z48(2)), g4 = odd_ok(z48(4));
  ok = ok && g2;
  d << "; sigma1/gamma, sigma3/gamma exact with gamma=zeta48^2=e^{i pi/12}: " << (g2 ? "yes" : "no")
    << " (gamma=zeta48^4: " << (g4 ? "yes" : "no") << ")";

  // Hadamard: the reference matrix lives in the gauge where |YY> carries the opposite sign.
  FSymbolTable gauged = apply_gauge(t, {{{y, y, y}, TowerNumber(-1L)}});
  const bool gauged_ok = verify(gauged).ok();
  auto hadamard = [&](const FSymbolTable& table) {
    BraidRep r = build_rep(table, xe, y, 4);
    for (auto& g : r.generators) g = T * g * T;
    for (auto& g : r.inverses) g = T * g * T;
    TowerMatrix p = word_matrix(r, {1, 2, 1}, z48(2));
    TowerMatrix q = word_matrix(r, {3, 2, 3}, z48(2));
    return TowerMatrix(q * q * p * q * q).scaled(z48(12) * *tower_sqrt(TowerNumber(3L), 48));
  };
  TowerMatrix reference(3, 3);
  const TowerNumber mz = -z48(8);
  reference(0, 0) = one, reference(0, 1) = one, reference(0, 2) = one;
  reference(1, 0) = one, reference(1, 1) = omega, reference(1, 2) = mz;
  reference(2, 0) = one, reference(2, 1) = mz, reference(2, 2) = omega;
  const TowerMatrix d_sign = TowerMatrix::diagonal({-one, one, one});
  const bool h_gauge = hadamard(gauged) == reference;
  const bool h_raw = hadamard(t) == reference;
  const bool h_raw_sign = d_sign * hadamard(t) * d_sign == reference;
  ok = ok && gauged_ok && h_gauge && h_raw_sign;
  d << "; i*sqrt3*q^2pq^2 exact in gauge f^{YY}_Y=-1: " << (h_gauge ? "yes" : "no")
    << " (solver gauge: exact " << (h_raw ? "yes" : "no") << ", after basis sign diag(-1,1,1) "
    << (h_raw_sign ? "yes" : "no") << ")";

  ClosureResult c = group_closure(rep.generators, z48(2), 5000);
  const bool order_ok = !c.exceeded && c.order == 648;
  ok = ok && order_ok;
  d << "; |<sigma_j/gamma>| = " << (c.exceeded ? std::string("exceeds cap") : std::to_string(c.order));
  const double sec = since(t0);
  ok = ok && sec < 300;
  d << "; " << fmt(sec) << "s";
  report(2, ok, d.str());
}

/** Criterion 7 detail, filled in by criterion 3 over the same reps. */
bool unitary_ok = false;
std::string unitary_detail;

void criterion3() {
  int reps = 0, bad = 0;
  std::string first_bad;
  BigReal worst(0);
  for (const auto& rc : braid_cases()) {
    BraidRep rep = build_rep(solved(rc.ring), rc.a, rc.b, rc.m);
    ++reps;
    std::string why;
    if (!braid_relations_hold(rep.generators, &why)) {
      ++bad;
      if (first_bad.empty()) first_bad = rc.ring + " m=" + std::to_string(rc.m) + " " + why;
    }
    for (const auto& g : rep.generators) {
      BigMatrix u = to_big(g);
      BigReal e = distance_from_identity_inf(u.adjoint() * u);
      if (e > worst) worst = e;
    }
  }
  report(3, bad == 0 && reps > 0,
         std::to_string(reps) + " reps (all catalog rings, m=3..6, dim<=40); exact braid-relation failures: " +
             std::to_string(bad) + (first_bad.empty() ? "" : " first: " + first_bad));
  unitary_ok = reps > 0 && worst < BigReal(1e-10);
  std::ostringstream d;
  d << "max ||s^H s - I||_inf over " << reps << " reps at " << kBigPrecisionBits
    << "-bit precision: " << worst.str(3, std::ios_base::scientific);
  unitary_detail = d.str();
}

void criterion7() { report(7, unitary_ok, unitary_detail); }

void criterion4() {
  bool step1 = true, quad = true, residual = true;
  std::ostringstream d;
  for (const auto& name : builtin_names()) {
    SolveStats st;
    solve(builtin(name), {}, &st);
    const double f1 = static_cast<double>(st.step1_solved) / st.nvars;
    step1 = step1 && f1 > 0.5;
    d << name << ": step1 " << st.step1_solved << "/" << st.nvars;
    if (name == "fibonacci" || name == "ising" || name == "su2-4") {
      const double rf = st.residual_fraction_with_squares();
      residual = residual && rf < 0.0025;
      quad = quad && st.step3_univariate_quadratic;
      d << ", remaining " << st.residual + st.known_squares << "/" << st.pentagons_raw << " = " << fmt(100 * rf)
        << "% (ideal basis alone " << st.residual << "), step3 univariate deg<=2: "
        << (st.step3_univariate_quadratic ? "yes" : "no");
    }
    d << "; ";
  }
  d << "sub-checks: step1>50% " << (step1 ? "ok" : "FAILED") << ", residual<0.25% "
    << (residual ? "ok" : "FAILED (the remaining x^2-alpha relations are counted)") << ", univariate "
    << (quad ? "ok" : "FAILED");
  report(4, step1 && quad && residual, d.str());
}

/** Traces of all words of length 1..max_len over +-1..+-k, by prefix products. */
void word_traces(const BraidRep& rep, int max_len, std::vector<TowerNumber>& out) {
  const int k = static_cast<int>(rep.generators.size());
  std::function<void(const TowerMatrix&, int)> go = [&](const TowerMatrix& m, int depth) {
    if (depth == max_len) return;
    for (int g = 1; g <= k; ++g)
      for (int s : {1, -1}) {
        TowerMatrix next = m * rep.generator(s * g);
        out.push_back(next.trace());
        go(next, depth + 1);
      }
  };
  go(TowerMatrix::identity(rep.dim()), 0);
}

void criterion5() {
  std::mt19937 rng(20260);
  int gauges = 0, verified = 0, reps = 0, mismatches = 0;
  std::size_t words = 0;
  for (const std::string name : {"fibonacci", "ising"}) {
    const FSymbolTable& t = solved(name);
    const int a = 1;
    std::vector<int> roots;
    for (int b = 0; b < t.ring().rank(); ++b)
      if (fusion_multiplicity(t.ring(), a, b, 4) > 0) roots.push_back(b);
    std::vector<std::vector<TowerNumber>> base;
    for (int b : roots) {
      base.emplace_back();
      word_traces(build_rep(t, a, b, 4), 4, base.back());
    }
    for (int trial = 0; trial < 20; ++trial) {
      FSymbolTable g = apply_gauge(t, random_sign_gauge(t.ring(), rng));
      ++gauges;
      if (verify(g).ok()) ++verified;
      for (std::size_t i = 0; i < roots.size(); ++i) {
        std::vector<TowerNumber> tr;
        word_traces(build_rep(g, a, roots[i], 4), 4, tr);
        ++reps;
        words += tr.size();
        for (std::size_t w = 0; w < tr.size(); ++w) mismatches += tr[w] != base[i][w];
      }
    }
  }
  report(5, verified == gauges && mismatches == 0,
         std::to_string(gauges) + " symmetric sign gauges (fibonacci, ising): " + std::to_string(verified) +
             " verify-clean; " + std::to_string(words) + " word traces (length<=4, " + std::to_string(reps) +
             " gauged B_4 reps) with " + std::to_string(mismatches) + " mismatches");
}

void criterion6() {
  BraidRep rep = build_rep(solved("fibonacci"), 1, 1, 3);
  GateTarget target;
  target.matrix = CMatrix(2, 2);
  target.matrix << 0.0, std::complex<double>(0, 1), std::complex<double>(0, 1), 0.0;
  WeaveOptions opt;
  opt.max_len = 11;
  opt.tol = 1e-2;
  auto t0 = Clock::now();
  auto w = weave_search(rep, target, opt);
  const double sec = since(t0);
  opt.workers = 4;
  auto w2 = weave_search(rep, target, opt);
  const bool same = w && w2 && w->pattern == w2->pattern;
  std::ostringstream d;
  if (w) {
    const double check = phase_distance(to_complex(word_matrix(rep, w->word)), target.matrix);
    d << "pattern [";
    for (std::size_t i = 0; i < w->pattern.size(); ++i) d << (i ? "," : "") << w->pattern[i];
    d << "] (" << w->word.size() << " letters), distance " << fmt(check, 4) << ", " << fmt(sec) << "s"
      << ", identical with 4 workers: " << (same ? "yes" : "no");
    report(6, check < 1e-2 && same && sec < 120, d.str());
  } else {
    report(6, false, "no weave found up to 11 factors");
  }
}

void criterion8() {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "anyon-acceptance";
  fs::remove_all(dir);
  fs::create_directories(dir);
  bool ok = true;
  std::ostringstream d;
  for (const std::string name : {"fibonacci", "ising", "su2-3", "su2-4"}) {
    std::vector<std::string> files;
    std::vector<std::string> digests;
    bool clean = true;
    for (int w : {1, 2, 8}) {
      const std::string out = (dir / (name + "-" + std::to_string(w) + ".json")).string();
      std::ostringstream so, se;
      int code = run_cli({"solve", "--ring", name, "--workers", std::to_string(w), "-o", out}, so, se);
      if (code != 0) {
        clean = false;
        continue;
      }
      auto summary = nlohmann::json::parse(so.str());
      clean = clean && summary["verify"]["ok"] == true;
      digests.push_back(summary["stats"]["step1_digest"].dump());
      std::ifstream in(out);
      files.emplace_back(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    }
    bool same_step1 = digests.size() == 3 && digests[0] == digests[1] && digests[1] == digests[2];
    bool same_table = files.size() == 3 && files[0] == files[1] && files[1] == files[2];
    ok = ok && clean && same_step1;
    d << name << ": verify " << (clean ? "clean" : "FAILED") << ", step1 digest " << (same_step1 ? "equal" : "DIFFERS")
      << ", tables " << (same_table ? "byte-identical" : "differ (step-3 signs)") << "; ";
  }
  d << "workers 1, 2, 8";
  report(8, ok, d.str());
}

}  // namespace

int main() {
  auto t0 = Clock::now();
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  std::cout << "acceptance: " << (7 + 1 - failures) << "/8 criteria pass, " << fmt(since(t0)) << "s" << std::endl;
  return failures == 0 ? 0 : 1;
}
