#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "mutation/gsp.hpp"
#include "seed/exchange_matrix.hpp"

namespace gsp::harness {

using nlohmann::json;

struct CaseFailure {
  json input;    // species digest, sequence (vertex labels), vertex
  json witness;
  std::string reproducer;
};

struct SuiteResult {
  SuiteResult() = default;
  explicit SuiteResult(std::string name) : suite(std::move(name)) {}
  std::string suite;
  std::size_t checked = 0;
  std::vector<CaseFailure> failures;
  json notes = json::object();
};

struct VerificationReport {
  std::vector<SuiteResult> suites;
  bool passed() const;
  json to_json() const;
};

enum class Fault { None, CorruptF, CorruptG };

struct VerifyOptions {
  std::size_t max_len = 6;
  // Names from conjecture_suites(), rep_suites(), "involution" and "b-compat"; "all" selects
  // the conjecture suites.
  std::vector<std::string> suites{"all"};
  Fault fault = Fault::None;
  // 7.10(1): coefficient vectors with entries 0..max_coeff.
  int max_coeff = 2;
  // Reproducers start with this; defaults to the inline matrix.
  std::string reproducer_input;
  unsigned threads = 0;  // 0 = hardware concurrency
};

const std::vector<std::string>& conjecture_suites();
const std::vector<std::string>& rep_suites();

// All sequences of 0-based vertices up to max_len without immediate repeats, shortest first.
std::vector<std::vector<std::size_t>> enumerate_sequences(std::size_t n, std::size_t max_len);

// FNV-1a of the canonical JSON encoding.
std::string species_digest(const species::GroupSpecies& s);

// Conjecture suites on the combinatorial side only.
VerificationReport verify_conjectures(const seed::ExchangeMatrix& b, const VerifyOptions& opt);
// Conjecture suites on B(A) plus any requested representation suites on the GSP.
VerificationReport verify(const mutation::GSP& g, const VerifyOptions& opt);

// Involution checks at one GSP: matrix, Y-seed, extended Y-seed, GSP invariants and the
// representations X_{v;()} mutated twice, for every vertex k where the mutation is defined.
SuiteResult involution_suite(const mutation::GSP& g, std::size_t max_len);
// mutate_matrix(B) == B(mu_k) wherever mu_k is 2-acyclic, along sequences up to max_len.
SuiteResult b_compat_suite(const mutation::GSP& g, std::size_t max_len);

// Random locally free GSP: skew-symmetrizable B with entries in [-max_c, max_c] scaled by a
// symmetrizer in {1,2,3}, realized by species_from_matrix, with a random potential on 2- and 3-cycles.
mutation::GSP random_locally_free_gsp(std::mt19937_64& rng, std::size_t n, int max_c = 1);

}  // namespace gsp::harness
