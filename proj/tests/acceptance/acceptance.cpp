// One PASS/FAIL line per primary acceptance criterion. Exit status 1 if any line fails.
// Every comparison is exact (integers and rationals); time limits are wall clock.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gsp/gsp.h"
#include "harness/counterexample.hpp"
#include "harness/json_io.hpp"
#include "harness/ops.hpp"
#include "harness/verify.hpp"
#include "oracles/group_basis.hpp"
#include "potential/path_algebra.hpp"
#include "species/species.hpp"

using nlohmann::json;
using namespace gsp::harness;
using gsp::mutation::GSP;
using gsp::seed::ExchangeMatrix;

namespace {

std::string data_dir;
int failed = 0;

struct Outcome {
  bool ok;
  std::string detail;
};

void line(const std::string& name, double limit_s, const std::function<Outcome()>& f) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o{false, ""};
  try {
    o = f();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit_s > 0 && s >= limit_s) {
    o.ok = false;
    o.detail += " (over the time limit)";
  }
  char t[64];
  std::snprintf(t, sizeof t, "%.3fs", s);
  std::printf("%s %-22s %s; %s%s\n", o.ok ? "PASS" : "FAIL", name.c_str(), o.detail.c_str(), t,
              limit_s > 0 ? (", limit " + std::to_string(static_cast<int>(limit_s)) + "s").c_str() : "");
  std::fflush(stdout);
  if (!o.ok) ++failed;
}

json read_json(const std::string& name) {
  std::ifstream in(data_dir + "/" + name);
  if (!in) throw std::runtime_error("cannot read " + name);
  return json::parse(in);
}

std::vector<std::pair<std::string, GSP>> shipped() {
  std::vector<std::pair<std::string, GSP>> out;
  for (const char* f : {"c3_species.json", "cyclic3_potential.json"}) out.emplace_back(f, gsp_from_json(read_json(f)));
  for (const char* f : {"c3.json", "rank2.json"}) out.emplace_back(f, gsp_from_json({{"matrix", read_json(f)}}));
  return out;
}

std::size_t count_failures(const SuiteResult& r, std::string& first) {
  if (!r.failures.empty() && first.empty()) first = r.failures.front().witness.dump().substr(0, 200);
  return r.failures.size();
}

Outcome suite_over_inputs(const std::function<SuiteResult(const GSP&, std::size_t)>& run) {
  std::size_t checked = 0, bad = 0;
  std::string first;
  for (const auto& [name, g] : shipped()) {
    const SuiteResult r = run(g, 4);
    checked += r.checked;
    bad += count_failures(r, first);
  }
  std::mt19937_64 rng(20240601);
  for (int t = 0; t < 100; ++t) {
    const GSP g = random_locally_free_gsp(rng, 3);
    const SuiteResult r = run(g, 2);
    checked += r.checked;
    bad += count_failures(r, first);
  }
  return {bad == 0 && checked > 0, "4 shipped (len<=4) + 100 seeded random rank 3 (len<=2): " + std::to_string(checked) +
                                       " checks, " + std::to_string(bad) + " failures" +
                                       (first.empty() ? "" : ", first " + first)};
}

Outcome report_outcome(const VerificationReport& r, std::size_t want_suites) {
  std::string d;
  bool ok = r.suites.size() == want_suites;
  for (const auto& s : r.suites) {
    d += s.suite + " " + std::to_string(s.checked) + "/" + std::to_string(s.failures.size()) + " ";
    ok = ok && s.checked > 0 && s.failures.empty();
  }
  return {ok, "checked/failed: " + d};
}

VerifyOptions opts(std::vector<std::string> suites, std::size_t len) {
  VerifyOptions o;
  o.suites = std::move(suites);
  o.max_len = len;
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  data_dir = argc > 1 ? argv[1] : "tests/data";
  const GSP c3 = c3_gsp();
  const GSP rank2 = gsp_from_json({{"matrix", {{"labels", {1, 2}}, {"rows", {{0, 1}, {-2, 0}}}}}});

  line("golden-c3", 1.0, [&] {
    // through the public C API, as the CLI does
    char* text = nullptr;
    gsp_gsp* g = nullptr;
    const std::string in = to_json(c3).dump();
    if (gsp_gsp_from_json(in.c_str(), &g) != GSP_OK) return Outcome{false, gsp_last_error()};
    const int seq[] = {2, 1, 3};
    const gsp_status st = gsp_fg(g, seq, 3, 3, GSP_ENGINE_BOTH, &text);
    gsp_gsp_free(g);
    if (st != GSP_OK) return Outcome{false, gsp_last_error()};
    const json r = json::parse(text);
    gsp_string_free(text);
    const bool ok = r.at("f_text") == "1 + z3 + z2*z3 + z1*z2*z3" && r.at("g") == json({0, 0, -1});
    return Outcome{ok, "F = " + r.at("f_text").get<std::string>() + ", g = " + r.at("g").dump()};
  });

  line("b-matrix-c3", 0, [&] {
    const ExchangeMatrix b = gsp::species::exchange_matrix(c3.species);
    const ExchangeMatrix want = ExchangeMatrix::from_rows({{0, -1, 0}, {1, 0, -1}, {0, 2, 0}});
    return Outcome{b == want, "B(A) = " + to_json(b).at("rows").dump()};
  });

  line("dual-engine", 300.0, [&] {
    const auto a = verify(c3, opts({"dual-engine"}, 6));
    const auto b = verify(rank2, opts({"dual-engine"}, 8));
    const Outcome oa = report_outcome(a, 1), ob = report_outcome(b, 1);
    return Outcome{oa.ok && ob.ok, "C3 len<=6 " + oa.detail + "; rank 2 len<=8 " + ob.detail};
  });

  line("involution", 0, [] { return suite_over_inputs(involution_suite); });

  line("b-compatibility", 0, [] { return suite_over_inputs(b_compat_suite); });

  line("conjectures-c3", 0, [&] { return report_outcome(verify_conjectures(gsp::species::exchange_matrix(c3.species), opts({"all"}, 6)), 6); });

  line("e-invariant", 0, [&] {
    const Outcome a = report_outcome(verify(c3, opts({"e-invariant"}, 6)), 1);
    const Outcome b = report_outcome(verify(rank2, opts({"e-invariant"}, 8)), 1);
    return Outcome{a.ok && b.ok, "C3 len<=6 " + a.detail + "; rank 2 len<=8 " + b.detail};
  });

  line("counterexample", 120.0, [] {
    const json r = counterexample_search(2);
    std::string d;
    for (const auto& i : r.at("instances"))
      d += i.at("matrix").get<std::string>() + " m=" + std::to_string(i.at("m").get<int>()) + ": " +
           std::to_string(i.at("satisfying").get<std::size_t>()) + " satisfying; ";
    return Outcome{r.at("obstruction_empty").get<bool>() && r.at("control_nonempty").get<bool>(), d};
  });

  line("oracle-equivalence", 0, [] {
    using namespace gsp::potential;
    using gsp::species::FiniteAbelianGroup;
    using gsp::species::GroupSpecies;
    // every triple of groups of order <= 4, a fixed arrow pattern, every 2- and 3-cycle alone, plus one sum of three
    const std::vector<FiniteAbelianGroup> gs{{{}}, {{2}}, {{3}}, {{4}}, {{2, 2}}};
    std::mt19937_64 rng(7);
    std::size_t species_n = 0, checks = 0, bad = 0;
    for (const auto& g1 : gs)
      for (const auto& g2 : gs)
        for (const auto& g3 : gs) {
          GroupSpecies s = GroupSpecies::empty({1, 2, 3}, {g1, g2, g3});
          auto fill = [&](std::size_t i, std::size_t j) {
            auto m = gsp::species::zero_mult(s.irr(i), s.irr(j));
            for (std::size_t r = 0; r < m.size(); ++r) m[r][(r * 3 + 1) % m[r].size()] = 1;
            m[0][0] += 1;
            s.set_bimodule({i, j, m});
          };
          fill(0, 1);
          fill(1, 0);
          fill(1, 2);
          fill(2, 0);
          ++species_n;
          Quiver q(s);
          oracle::GroupBasisSpecies gb(q, rng);
          std::vector<Path> cycles;
          for (int a = 0; a < static_cast<int>(q.num_arrows()); ++a)
            for (int b : q.out(q.arrow(a).target)) {
              if (q.arrow(b).target == q.arrow(a).source) cycles.push_back({a, b});
              for (int c : q.out(q.arrow(b).target))
                if (q.arrow(c).target == q.arrow(a).source) cycles.push_back({a, b, c});
            }
          std::vector<std::vector<std::size_t>> term_sets;
          for (std::size_t i = 0; i < cycles.size(); ++i) term_sets.push_back({i});
          if (cycles.size() > 2) term_sets.push_back({0, cycles.size() / 2, cycles.size() - 1});
          for (const auto& ts : term_sets) {
            Potential pot{6, Potential::kExact, {}};
            std::map<int, oracle::Tensor> expected;
            for (std::size_t i : ts) {
              Q c(static_cast<long>(i % 3) + 1, static_cast<long>(i % 2) + 1);
              c.canonicalize();
              pot.add_cycle(cycles[i], c);
              for (auto& [xi, t] : gb.derivative(cycles[i], oracle::Cyc::rational(c)))
                for (auto& [k, v] : t) oracle::add_to(expected[xi], k, v);
            }
            for (int a = 0; a < static_cast<int>(q.num_arrows()); ++a) {
              const auto& ar = q.arrow(a);
              const long scale =
                  static_cast<long>(gb.group_order(q.block_of(ar.source)) * gb.group_order(q.block_of(ar.target)));
              oracle::Tensor got;
              for (const auto& [p, c] : cyclic_derivative(pot, a).terms)
                for (const auto& [k, v] : gb.path_tensor(p)) oracle::add_to(got, k, v * oracle::Cyc::rational(c * scale));
              const oracle::Tensor want = expected.count(a) ? expected[a] : oracle::Tensor{};
              ++checks;
              if (!(got == want)) ++bad;
            }
          }
        }
    return Outcome{bad == 0 && checks > 0, std::to_string(species_n) + " species, " + std::to_string(checks) +
                                               " derivatives compared, " + std::to_string(bad) + " mismatches"};
  });

  std::printf("%s: %d failing criteria\n", failed ? "FAIL" : "PASS", failed);
  return failed ? 1 : 0;
}
