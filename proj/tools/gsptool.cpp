// gsptool: command line front end over libgsp.
// Exit codes: 0 ok, 1 domain error (error JSON on stderr), 2 usage.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gsp/gsp.h"

namespace {

using nlohmann::json;

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A failed C call; the error JSON is already in gsp_last_error().
struct Failed {
  gsp_status status;
};

struct GspDeleter {
  void operator()(gsp_gsp* g) const { gsp_gsp_free(g); }
};
using GspPtr = std::unique_ptr<gsp_gsp, GspDeleter>;

std::string format = "json";

void check(gsp_status s) {
  if (s != GSP_OK) throw Failed{s};
}

std::string take(char* s) {
  std::string out(s);
  gsp_string_free(s);
  return out;
}

void print(const std::string& text) {
  if (format == "pretty")
    std::cout << json::parse(text).dump(2) << "\n";
  else
    std::cout << text << "\n";
}

// Inline JSON when it looks like JSON, a file path otherwise.
std::string load(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\n");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) return arg;
  std::ifstream in(arg);
  if (!in) throw Usage("cannot read " + arg);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string shell_quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) out += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return out + "'";
}

std::vector<int> parse_seq(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw Usage("bad vertex label '" + tok + "' in " + s);
    }
  }
  return out;
}

struct Input {
  std::string matrix, species, d;

  void attach(CLI::App* cmd) {
    auto* m = cmd->add_option("--matrix", matrix, "exchange matrix JSON, file or inline");
    auto* s = cmd->add_option("--species", species, "species or GSP JSON, file or inline");
    cmd->add_option("--d", d, "symmetrizer for --matrix, JSON list");
    m->excludes(s);
  }

  std::string flag() const {
    return matrix.empty() ? "--species " + shell_quote(species) : "--matrix " + shell_quote(matrix);
  }

  GspPtr gsp() const {
    if (matrix.empty() && species.empty()) throw Usage("one of --matrix or --species is required");
    std::string text;
    if (!matrix.empty()) {
      json j = {{"matrix", json::parse(load(matrix))}};
      if (!d.empty()) j["d"] = json::parse(d);
      text = j.dump();
    } else {
      text = load(species);
    }
    gsp_gsp* g = nullptr;
    check(gsp_gsp_from_json(text.c_str(), &g));
    return GspPtr(g);
  }
};

int run(int argc, char** argv) {
  CLI::App app{"Group species with potential: mutation, F-polynomials, g-vectors and checks"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "pretty"}));
  std::uint64_t seed = 0;
  app.add_option("--seed", seed, "seed for every random choice");

  Input in;
  std::string seq, at_list, engine = "fg", rep, suites_arg = "all", fault = "none", host = "127.0.0.1";
  int vertex = 0, at = 0, max_m = 2, port = 8080, max_coeff = 2;
  std::size_t max_len = 6, trials = 4;
  unsigned threads = 0;
  bool report = false;

  auto* bm = app.add_subcommand("b-matrix", "B(A) of a locally free species");
  in.attach(bm);

  auto* sfm = app.add_subcommand("species-from-matrix", "locally free species realizing a matrix");
  sfm->add_option("--matrix", in.matrix, "exchange matrix JSON")->required();
  sfm->add_option("--d", in.d, "symmetrizer, JSON list");

  auto* mu = app.add_subcommand("mutate", "mutate and reduce; prints the reduced GSP");
  in.attach(mu);
  mu->add_option("--at", at_list, "vertex label, or a comma list applied left to right")->required();
  mu->add_flag("--report", report, "print the full mutation report of the last step instead");

  auto* fg = app.add_subcommand("fg", "F-polynomial and g-vector of a cluster variable");
  in.attach(fg);
  fg->add_option("--seq", seq, "mutation sequence, comma separated labels");
  fg->add_option("--vertex", vertex, "vertex label")->required();
  fg->add_option("--engine", engine, "fg, rep or both")->check(CLI::IsMember({"fg", "rep", "both"}));

  auto* rm = app.add_subcommand("rep-mutate", "mutate a decorated representation");
  in.attach(rm);
  rm->add_option("--rep", rep, "representation JSON, file or inline")->required();
  rm->add_option("--at", at, "vertex label")->required();

  auto* ver = app.add_subcommand("verify", "run verification suites");
  in.attach(ver);
  ver->add_option("--suite", suites_arg, "comma separated suite names or all");
  ver->add_option("--max-len", max_len, "longest mutation sequence");
  ver->add_option("--fault", fault, "inject a fault")->check(CLI::IsMember({"none", "corrupt-f", "corrupt-g"}));
  ver->add_option("--max-coeff", max_coeff, "coefficient bound for the 7.10(1) collision search");
  ver->add_option("--threads", threads, "worker threads, 0 for all cores");

  app.add_subcommand("example-c3", "the worked C3 example, step by step");

  auto* ce = app.add_subcommand("counterexample", "constraint search on the 6x6 obstruction matrix");
  ce->add_option("--max-m", max_m, "largest m in d = (2m,2m,2m,2m,2m,m)")->check(CLI::Range(1, 3));

  auto* pr = app.add_subcommand("probe", "sample potentials and look for degenerate mutation sequences");
  in.attach(pr);
  pr->add_option("--max-len", max_len, "longest mutation sequence");
  pr->add_option("--trials", trials, "number of sampled potentials");

  auto* sv = app.add_subcommand("serve", "HTTP JSON API for interactive sessions");
  sv->add_option("--host", host, "bind address");
  sv->add_option("--port", port, "port, 0 picks a free one")->check(CLI::Range(0, 65535));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  char* out = nullptr;
  if (*bm) {
    check(gsp_b_matrix(in.gsp().get(), &out));
  } else if (*sfm) {
    const std::string m = load(in.matrix);
    check(gsp_species_from_matrix(m.c_str(), in.d.empty() ? nullptr : in.d.c_str(), &out));
  } else if (*mu) {
    const std::vector<int> ks = parse_seq(at_list);
    if (ks.empty()) throw Usage("--at needs at least one vertex");
    GspPtr g = in.gsp();
    for (int k : ks) {
      gsp_gsp* next = nullptr;
      char* rep_text = nullptr;
      check(gsp_mutate(g.get(), k, &next, &rep_text));
      g.reset(next);
      if (out) gsp_string_free(out);
      out = rep_text;
    }
    if (!report) {
      gsp_string_free(out);
      out = nullptr;
      check(gsp_gsp_to_json(g.get(), &out));
    }
  } else if (*fg) {
    const std::vector<int> s = parse_seq(seq);
    const gsp_engine e = engine == "fg" ? GSP_ENGINE_FG : engine == "rep" ? GSP_ENGINE_REP : GSP_ENGINE_BOTH;
    check(gsp_fg(in.gsp().get(), s.data(), s.size(), vertex, e, &out));
  } else if (*rm) {
    const std::string r = load(rep);
    check(gsp_rep_mutate(in.gsp().get(), r.c_str(), at, &out));
  } else if (*ver) {
    std::vector<std::string> names;
    std::stringstream ss(suites_arg);
    for (std::string t; std::getline(ss, t, ',');)
      if (!t.empty()) names.push_back(t);
    const json opt = {{"suites", names},     {"max_len", max_len}, {"fault", fault},
                      {"max_coeff", max_coeff}, {"threads", threads}, {"reproducer_input", in.flag()}};
    const std::string o = opt.dump();
    check(gsp_verify(in.gsp().get(), o.c_str(), &out));
    const std::string text = take(out);
    print(text);
    const json r = json::parse(text);
    if (!r.at("passed").get<bool>()) {
      std::cerr << json{{"error", "VerificationFailed"}, {"message", "at least one suite reported failures"},
                        {"witness", nullptr}}
                       .dump()
                << "\n";
      return 1;
    }
    return 0;
  } else if (app.got_subcommand("example-c3")) {
    check(gsp_example_c3(&out));
  } else if (*ce) {
    check(gsp_counterexample(max_m, &out));
  } else if (*pr) {
    check(gsp_probe(in.gsp().get(), max_len, trials, seed, &out));
  } else if (*sv) {
    std::cerr << "listening on " << host << ":" << port << "\n";
    check(gsp_serve(host.c_str(), port));
    return 0;
  }
  print(take(out));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Failed&) {
    std::cerr << gsp_last_error() << "\n";
    return 1;
  } catch (const Usage& e) {
    std::cerr << "gsptool: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << json{{"error", "BadInput"}, {"message", e.what()}, {"witness", nullptr}}.dump() << "\n";
    return 1;
  }
}
