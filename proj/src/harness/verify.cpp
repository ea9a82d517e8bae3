#include "harness/verify.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "core/error.hpp"
#include "harness/json_io.hpp"
#include "potential/jacobian.hpp"
#include "reps/decorated_rep.hpp"
#include "reps/invariants.hpp"
#include "seed/fg.hpp"
#include "seed/yseed.hpp"
#include "species/species.hpp"

namespace gsp::harness {

using mutation::GSP;
using reps::DecoratedRep;
using seed::ExchangeMatrix;
using seed::FGState;

bool VerificationReport::passed() const {
  for (const auto& s : suites)
    if (!s.failures.empty()) return false;
  return true;
}

json VerificationReport::to_json() const {
  json out = json::array();
  for (const auto& s : suites) {
    json fails = json::array();
    for (const auto& f : s.failures)
      fails.push_back({{"input", f.input}, {"witness", f.witness}, {"reproducer", f.reproducer}});
    out.push_back({{"suite", s.suite},
                   {"checked", s.checked},
                   {"verdict", s.failures.empty() ? "pass" : "fail"},
                   {"failures", fails},
                   {"notes", s.notes}});
  }
  return {{"passed", passed()}, {"suites", out}};
}

const std::vector<std::string>& conjecture_suites() {
  static const std::vector<std::string> names{"5.4", "5.5", "6.13", "7.10.1", "7.10.2", "7.12"};
  return names;
}

const std::vector<std::string>& rep_suites() {
  static const std::vector<std::string> names{"dual-engine", "e-invariant", "rep-involution"};
  return names;
}

std::vector<std::vector<std::size_t>> enumerate_sequences(std::size_t n, std::size_t max_len) {
  std::vector<std::vector<std::size_t>> out{{}};
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i].size() == max_len) continue;
    for (std::size_t k = 0; k < n; ++k) {
      if (!out[i].empty() && out[i].back() == k) continue;
      auto s = out[i];
      s.push_back(k);
      out.push_back(std::move(s));
    }
  }
  return out;
}

std::string species_digest(const species::GroupSpecies& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : harness::to_json(s).dump()) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

namespace {

struct Context {
  std::vector<int> labels;
  std::string digest;
  std::string input;  // reproducer prefix after the subcommand

  json seq_json(const std::vector<std::size_t>& seq) const {
    json out = json::array();
    for (auto k : seq) out.push_back(labels[k]);
    return out;
  }
  std::string seq_arg(const std::vector<std::size_t>& seq) const {
    std::string s;
    for (std::size_t t = 0; t < seq.size(); ++t) s += (t ? "," : "") + std::to_string(labels[seq[t]]);
    return s;
  }
  json case_input(const std::vector<std::size_t>& seq, long vertex) const {
    json in = {{"species_digest", digest}, {"sequence", seq_json(seq)}};
    in["vertex"] = vertex < 0 ? json(nullptr) : json(labels[static_cast<std::size_t>(vertex)]);
    return in;
  }
  std::string fg_reproducer(const std::vector<std::size_t>& seq, std::size_t vertex) const {
    std::string r = "gsptool fg " + input;
    if (!seq.empty()) r += " --seq " + seq_arg(seq);
    return r + " --vertex " + std::to_string(labels[vertex]);
  }
  std::string verify_reproducer(const std::string& suite, std::size_t max_len) const {
    return "gsptool verify " + input + " --suite " + suite + " --max-len " + std::to_string(max_len);
  }
};

std::string shell_quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) out += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return out + "'";
}

// Seeds of the ball: states[i] holds the matrix mu_{seqs[i]}(B) and the pairs (F, g) of its
// cluster variables, all relative to the initial B.
struct Ball {
  std::vector<std::vector<std::size_t>> seqs;
  std::vector<FGState> states;
};

Ball build_ball(const ExchangeMatrix& b, std::size_t max_len) {
  Ball ball;
  ball.seqs = enumerate_sequences(b.size(), max_len);
  for (const auto& s : ball.seqs) {
    FGState st{b, {}};
    for (auto k : s) st.matrix = seed::mutate_matrix(st.matrix, k);
    for (std::size_t j = 0; j < b.size(); ++j) st.tracked.push_back(seed::compute_fg(b, s, j));
    ball.states.push_back(std::move(st));
  }
  return ball;
}

void inject(Ball& ball, Fault fault) {
  if (fault == Fault::None || ball.states.size() < 2) return;
  auto& p = ball.states[1].tracked[ball.seqs[1].back()];
  if (fault == Fault::CorruptF) p.f += seed::IntPolynomial::constant(p.f.nvars(), 1);
  if (fault == Fault::CorruptG) p.g[0] += 1;
}

bool wants(const VerifyOptions& opt, const std::string& name) {
  for (const auto& s : opt.suites) {
    if (s == name) return true;
    if (s == "all" && std::find(conjecture_suites().begin(), conjecture_suites().end(), name) != conjecture_suites().end())
      return true;
  }
  return false;
}

// Monomials of f that every other monomial divides.
std::vector<std::vector<int>> maximal_monomials(const seed::IntPolynomial& f) {
  std::vector<std::vector<int>> out;
  for (const auto& [e, c] : f.terms()) {
    bool top = true;
    for (const auto& [e2, c2] : f.terms())
      for (std::size_t i = 0; i < e.size() && top; ++i)
        if (e2[i] > e[i]) top = false;
    if (top) out.push_back(e);
  }
  return out;
}

seed::Z integer_det(std::vector<std::vector<int>> rows) {
  const std::size_t n = rows.size();
  std::vector<std::vector<seed::Z>> m(n, std::vector<seed::Z>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = rows[i][j];
  seed::Z prev = 1, sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && m[piv][k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      std::swap(m[piv], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

void conjectures_on_ball(const ExchangeMatrix& b, const Ball& ball, const VerifyOptions& opt, const Context& ctx,
                         VerificationReport& rep) {
  const std::size_t n = b.size();
  if (wants(opt, "5.4")) {
    SuiteResult r{"5.4"};
    for (std::size_t s = 0; s < ball.seqs.size(); ++s)
      for (std::size_t j = 0; j < n; ++j) {
        ++r.checked;
        const auto& f = ball.states[s].tracked[j].f;
        if (f.constant_term() != 1)
          r.failures.push_back({ctx.case_input(ball.seqs[s], static_cast<long>(j)),
                                {{"f", to_json(f)}, {"constant_term", f.constant_term().get_str()}},
                                ctx.fg_reproducer(ball.seqs[s], j)});
      }
    rep.suites.push_back(r);
  }
  if (wants(opt, "5.5")) {
    SuiteResult r{"5.5"};
    for (std::size_t s = 0; s < ball.seqs.size(); ++s)
      for (std::size_t j = 0; j < n; ++j) {
        ++r.checked;
        const auto& f = ball.states[s].tracked[j].f;
        const auto top = maximal_monomials(f);
        if (top.size() != 1 || f.coefficient(top[0]) != 1)
          r.failures.push_back({ctx.case_input(ball.seqs[s], static_cast<long>(j)),
                                {{"f", to_json(f)}, {"maximal_monomials", top}},
                                ctx.fg_reproducer(ball.seqs[s], j)});
      }
    rep.suites.push_back(r);
  }
  if (wants(opt, "6.13")) {
    SuiteResult r{"6.13"};
    for (std::size_t s = 0; s < ball.seqs.size(); ++s) {
      ++r.checked;
      const auto& t = ball.states[s].tracked;
      for (std::size_t c = 0; c < n; ++c) {
        bool pos = false, neg = false;
        for (const auto& p : t) {
          pos |= p.g[c] > 0;
          neg |= p.g[c] < 0;
        }
        if (pos && neg) {
          json gs = json::array();
          for (const auto& p : t) gs.push_back(p.g);
          r.failures.push_back({ctx.case_input(ball.seqs[s], -1),
                                {{"coordinate", ctx.labels[c]}, {"g_vectors", gs}},
                                ctx.verify_reproducer("6.13", ball.seqs[s].size())});
          break;
        }
      }
    }
    rep.suites.push_back(r);
  }
  if (wants(opt, "7.10.2")) {
    SuiteResult r{"7.10.2"};
    for (std::size_t s = 0; s < ball.seqs.size(); ++s) {
      ++r.checked;
      std::vector<std::vector<int>> rows;
      for (const auto& p : ball.states[s].tracked) rows.push_back(p.g);
      const seed::Z d = integer_det(rows);
      if (d != 1 && d != -1)
        r.failures.push_back({ctx.case_input(ball.seqs[s], -1), {{"g_vectors", rows}, {"det", d.get_str()}},
                              ctx.verify_reproducer("7.10.2", ball.seqs[s].size())});
    }
    rep.suites.push_back(r);
  }
  if (wants(opt, "7.10.1")) {
    // Cluster monomial data keyed by its g-vector sum a_1 g_1 + ... + a_n g_n.
    SuiteResult r{"7.10.1"};
    using Entry = std::vector<std::pair<int, std::pair<std::vector<int>, std::string>>>;
    std::map<std::vector<int>, std::pair<Entry, std::size_t>> seen;
    std::size_t collisions = 0;
    std::vector<int> a(n, 0);
    for (std::size_t s = 0; s < ball.seqs.size(); ++s) {
      const auto& t = ball.states[s].tracked;
      std::fill(a.begin(), a.end(), 0);
      for (;;) {
        std::size_t i = 0;
        while (i < n && ++a[i] > opt.max_coeff) a[i++] = 0;
        if (i == n) break;
        std::vector<int> sum(n, 0);
        Entry e;
        for (std::size_t j = 0; j < n; ++j) {
          if (a[j] == 0) continue;
          for (std::size_t c = 0; c < n; ++c) sum[c] += a[j] * t[j].g[c];
          e.push_back({a[j], {t[j].g, to_json(t[j].f).dump()}});
        }
        std::sort(e.begin(), e.end());
        ++r.checked;
        auto it = seen.find(sum);
        if (it == seen.end()) {
          seen.emplace(sum, std::make_pair(e, s));
          continue;
        }
        if (it->second.second != s) ++collisions;
        if (it->second.first != e) {
          r.failures.push_back({ctx.case_input(ball.seqs[s], -1),
                                {{"g_sum", sum},
                                 {"other_sequence", ctx.seq_json(ball.seqs[it->second.second])},
                                 {"coefficients", a}},
                                ctx.verify_reproducer("7.10.1", opt.max_len)});
        }
      }
    }
    r.notes = {{"collisions", collisions}, {"max_coeff", opt.max_coeff}, {"scope", "seeds within the ball"}};
    rep.suites.push_back(r);
  }
  if (wants(opt, "7.12")) {
    // g^{mu_k B}_{j; k i} against g^B_{j; i}, for |k i| <= max_len.
    SuiteResult r{"7.12"};
    for (std::size_t k = 0; k < n; ++k) {
      const ExchangeMatrix bk = seed::mutate_matrix(b, k);
      for (std::size_t s = 0; s < ball.seqs.size(); ++s) {
        const auto& seq = ball.seqs[s];
        if (seq.size() + 1 > opt.max_len) continue;
        auto ki = seq;
        ki.insert(ki.begin(), k);
        for (std::size_t j = 0; j < n; ++j) {
          ++r.checked;
          const auto& g = ball.states[s].tracked[j].g;
          std::vector<int> want(n);
          for (std::size_t i = 0; i < n; ++i)
            want[i] = i == k ? -g[k] : g[i] + std::max(0, b(i, k)) * g[k] - b(i, k) * std::min(g[k], 0);
          const std::vector<int> got = seed::compute_fg(bk, ki, j).g;
          if (got != want) {
            r.failures.push_back({ctx.case_input(seq, static_cast<long>(j)),
                                  {{"k", ctx.labels[k]}, {"g", g}, {"g_prime", got}, {"expected", want},
                                   {"sequence_ki", ctx.seq_json(ki)}},
                                  ctx.verify_reproducer("7.12", opt.max_len)});
          }
        }
      }
    }
    rep.suites.push_back(r);
  }
}

template <class F>
void parallel_for(std::size_t count, unsigned threads, F&& f) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i; (i = next++) < count;) f(i);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

std::vector<int> unit(std::size_t n, std::size_t v) {
  std::vector<int> c(n, 0);
  c[v] = 1;
  return c;
}

json error_witness(const Error& e) { return {{"error", e.code()}, {"message", e.what()}, {"witness", e.witness()}}; }

// Representation suites for one sequence; results land in out[suite index].
void rep_suites_at(const GSP& g, const std::vector<std::size_t>& seq, const FGState& state, const VerifyOptions& opt,
                   const Context& ctx, std::vector<SuiteResult>& out) {
  const auto& sp = g.species;
  const std::size_t nc = sp.num_characters();
  const bool dual = wants(opt, "dual-engine"), einv = wants(opt, "e-invariant"), invo = wants(opt, "rep-involution");
  std::vector<DecoratedRep> x;
  for (std::size_t v = 0; v < nc; ++v) {
    const std::size_t k = sp.character_of(v).vertex;
    try {
      x.push_back(reps::mutate_gspdr_sequence(g, unit(nc, v), seq));
    } catch (const Error& e) {
      // the ball is assumed non-degenerate: report and skip this sequence
      out[0].failures.push_back({ctx.case_input(seq, static_cast<long>(k)), error_witness(e), ctx.fg_reproducer(seq, k)});
      return;
    }
  }
  if (dual) {
    for (std::size_t v = 0; v < nc; ++v) {
      const std::size_t k = sp.character_of(v).vertex;
      ++out[0].checked;
      const auto f = reps::reduced_f(x[v], {true});
      const auto gv = reps::reduce_classes(x[v].gsp.species, reps::g_vector(x[v]));
      if (f != state.tracked[k].f || gv != state.tracked[k].g)
        out[0].failures.push_back({ctx.case_input(seq, static_cast<long>(k)),
                                   {{"character", sp.character_label(v)},
                                    {"rep_f", to_json(f)},
                                    {"rep_g", gv},
                                    {"fg", to_json(state.tracked[k])}},
                                   ctx.fg_reproducer(seq, k)});
    }
  }
  if (!einv && !invo) return;
  const std::size_t n = sp.size();
  // mu[v][k], or nullopt where the mutation is undefined
  std::vector<std::vector<std::optional<DecoratedRep>>> mu(nc, std::vector<std::optional<DecoratedRep>>(n));
  for (std::size_t v = 0; v < nc; ++v)
    for (std::size_t k = 0; k < n; ++k) {
      try {
        mu[v][k] = reps::mutate_rep(x[v], k);
      } catch (const Error&) {
      }
    }
  const std::vector<int> labels = ctx.labels;
  if (einv) {
    auto& r = out[1];
    auto check_rep = [&](const DecoratedRep& y, std::size_t v, const json& where) {
      ++r.checked;
      const int e = reps::e_inv(y), lb = reps::e_lower_bound(y);
      const bool ok = e >= lb && (e != 0 || reps::eics_holds(y));
      if (!ok)
        r.failures.push_back({ctx.case_input(seq, static_cast<long>(sp.character_of(v).vertex)),
                              {{"where", where}, {"E", e}, {"lower_bound", lb}, {"eics", reps::eics_holds(y)}},
                              ctx.verify_reproducer("e-invariant", opt.max_len)});
    };
    for (std::size_t v = 0; v < nc; ++v) {
      ++r.checked;
      const int e = reps::e_inv(x[v]);
      if (e != 0)
        r.failures.push_back({ctx.case_input(seq, static_cast<long>(sp.character_of(v).vertex)),
                              {{"character", sp.character_label(v)}, {"E", e}},
                              ctx.verify_reproducer("e-invariant", opt.max_len)});
      check_rep(x[v], v, {{"character", sp.character_label(v)}});
      for (std::size_t k = 0; k < n; ++k)
        if (mu[v][k]) check_rep(*mu[v][k], v, {{"character", sp.character_label(v)}, {"mutated_at", labels[k]}});
    }
    for (std::size_t v = 0; v < nc; ++v)
      for (std::size_t w = v + 1; w < nc; ++w) {
        if (!(x[v].gsp == x[w].gsp)) continue;
        const int before = reps::e_sym(x[v], x[w]);
        for (std::size_t k = 0; k < n; ++k) {
          if (!mu[v][k] || !mu[w][k]) continue;
          ++r.checked;
          const int after = reps::e_sym(*mu[v][k], *mu[w][k]);
          if (after != before)
            r.failures.push_back({ctx.case_input(seq, -1),
                                  {{"characters", {sp.character_label(v), sp.character_label(w)}},
                                   {"k", labels[k]},
                                   {"e_sym_before", before},
                                   {"e_sym_after", after}},
                                  ctx.verify_reproducer("e-invariant", opt.max_len)});
        }
      }
  }
  if (invo) {
    auto& r = out[2];
    for (std::size_t v = 0; v < nc; ++v)
      for (std::size_t k = 0; k < n; ++k) {
        if (!mu[v][k]) continue;
        ++r.checked;
        json w = {{"character", sp.character_label(v)}, {"k", labels[k]}};
        try {
          const DecoratedRep back = reps::mutate_rep(*mu[v][k], k);
          const bool same = back.gsp.species == x[v].gsp.species && back.dims == x[v].dims &&
                            back.decoration == x[v].decoration && reps::find_isomorphism(back, x[v]).has_value();
          if (!same) r.failures.push_back({ctx.case_input(seq, -1), w, ctx.verify_reproducer("rep-involution", opt.max_len)});
        } catch (const Error& e) {
          w["error"] = error_witness(e);
          r.failures.push_back({ctx.case_input(seq, -1), w, ctx.verify_reproducer("rep-involution", opt.max_len)});
        }
      }
  }
}

Context make_context(const std::vector<int>& labels, const std::string& digest, const std::string& input) {
  return {labels, digest, input};
}

}  // namespace

static void rep_suites_on_ball(const GSP& g, const Ball& ball, const VerifyOptions& opt, const Context& ctx,
                        VerificationReport& rep);

VerificationReport verify_conjectures(const ExchangeMatrix& b, const VerifyOptions& opt) {
  std::string input = opt.reproducer_input.empty() ? "--matrix " + shell_quote(harness::to_json(b).dump()) : opt.reproducer_input;
  Context ctx = make_context(b.labels, species_digest(species::species_from_matrix(b)), input);
  Ball ball = build_ball(b, opt.max_len);
  inject(ball, opt.fault);
  VerificationReport rep;
  conjectures_on_ball(b, ball, opt, ctx, rep);
  return rep;
}

VerificationReport verify(const GSP& g, const VerifyOptions& opt) {
  const auto& sp = g.species;
  const ExchangeMatrix b = species::exchange_matrix(sp);
  std::string input =
      opt.reproducer_input.empty() ? "--species " + shell_quote(harness::to_json(g).dump()) : opt.reproducer_input;
  Context ctx = make_context(sp.labels, species_digest(sp), input);
  Ball ball = build_ball(b, opt.max_len);
  inject(ball, opt.fault);
  VerificationReport rep;
  conjectures_on_ball(b, ball, opt, ctx, rep);

  bool any = false;
  for (const auto& name : rep_suites()) any |= wants(opt, name);
  if (any) rep_suites_on_ball(g, ball, opt, ctx, rep);
  if (wants(opt, "involution")) rep.suites.push_back(involution_suite(g, opt.max_len));
  if (wants(opt, "b-compat")) rep.suites.push_back(b_compat_suite(g, opt.max_len));
  return rep;
}

static void rep_suites_on_ball(const GSP& g, const Ball& ball, const VerifyOptions& opt, const Context& ctx,
                        VerificationReport& rep) {
  std::vector<std::vector<SuiteResult>> parts(ball.seqs.size());
  parallel_for(ball.seqs.size(), opt.threads, [&](std::size_t i) {
    std::vector<SuiteResult> out(3);
    rep_suites_at(g, ball.seqs[i], ball.states[i], opt, ctx, out);
    parts[i] = std::move(out);
  });
  for (std::size_t s = 0; s < 3; ++s) {
    const std::string& name = rep_suites()[s];
    if (!wants(opt, name)) continue;
    SuiteResult merged{name};
    for (auto& p : parts) {
      merged.checked += p[s].checked;
      for (auto& f : p[s].failures) merged.failures.push_back(std::move(f));
    }
    merged.notes = {{"max_len", opt.max_len}, {"sequences", ball.seqs.size()}};
    rep.suites.push_back(std::move(merged));
  }
}

SuiteResult involution_suite(const GSP& g0, std::size_t max_len) {
  SuiteResult r{"involution"};
  std::size_t undefined = 0;
  const auto labels = g0.species.labels;
  auto fail = [&](const std::string& what, const std::vector<std::size_t>& seq, std::size_t k, json extra = json::object()) {
    json seqj = json::array();
    for (auto s : seq) seqj.push_back(labels[s]);
    extra["check"] = what;
    extra["k"] = labels[k];
    r.failures.push_back({{{"species_digest", species_digest(g0.species)}, {"sequence", seqj}}, extra,
                          "gsptool mutate --species " + shell_quote(harness::to_json(g0).dump()) + " --at " +
                              std::to_string(labels[k])});
  };
  for (const auto& seq : enumerate_sequences(g0.species.size(), max_len)) {
    GSP g = g0;
    try {
      for (auto k : seq) {
        auto rep = mutation::mutate(g, k);
        if (!rep.two_acyclic) throw Error("MutationUndefined", "2-cycles after mutation");
        g = rep.reduced;
      }
    } catch (const Error&) {
      ++undefined;
      continue;
    }
    const auto& sp = g.species;
    const bool free = species::is_locally_free(sp);
    for (std::size_t k = 0; k < sp.size(); ++k) {
      mutation::MutationReport m1, m2;
      try {
        m1 = mutation::mutate(g, k);
        if (!m1.two_acyclic) {
          ++undefined;
          continue;
        }
        m2 = mutation::mutate(m1.reduced, k);
      } catch (const Error&) {
        ++undefined;
        continue;
      }
      if (free) {
        const ExchangeMatrix b = species::exchange_matrix(sp);
        ++r.checked;
        if (seed::mutate_matrix(seed::mutate_matrix(b, k), k) != b) fail("matrix", seq, k);
        ++r.checked;
        const auto y0 = seed::YSeed::free(b);
        const auto y2 = seed::y_seed_mutate(seed::y_seed_mutate(y0, k), k);
        if (y2.y != y0.y || y2.matrix != y0.matrix) fail("y-seed", seq, k);
        ++r.checked;
        try {
          const auto e0 = mutation::ExtendedYSeed::free(g);
          const auto e2 = mutation::extended_y_seed_mutate(mutation::extended_y_seed_mutate(e0, k), k);
          if (e2.y != e0.y) fail("extended-y-seed", seq, k);
        } catch (const Error& e) {
          fail("extended-y-seed", seq, k, {{"error", e.code()}});
        }
      }
      ++r.checked;
      {
        potential::Quiver q0(sp), q2(m2.reduced.species);
        const bool same_species = m2.reduced.species == sp;
        const bool same_b = !free || species::exchange_matrix(m2.reduced.species) == species::exchange_matrix(sp);
        const std::size_t d0 = potential::jacobian_basis(q0, g.potential, 4).dimension;
        const std::size_t d2 = potential::jacobian_basis(q2, m2.reduced.potential, 4).dimension;
        if (!same_species || !same_b || d0 != d2)
          fail("gsp-invariants", seq, k, {{"species", same_species}, {"b", same_b}, {"jacobian_dim", {d0, d2}}});
      }
      for (std::size_t v = 0; v < sp.num_characters(); ++v) {
        ++r.checked;
        try {
          const DecoratedRep x = DecoratedRep::positive_simple(g, v);
          const DecoratedRep back = reps::mutate_rep(reps::mutate_rep(x, k), k);
          if (!(back.gsp.species == x.gsp.species) || back.dims != x.dims || back.decoration != x.decoration ||
              !reps::find_isomorphism(back, x))
            fail("gspdr", seq, k, {{"character", sp.character_label(v)}});
        } catch (const Error& e) {
          if (e.code() == "MutationUndefined" || e.code() == "NotTwoAcyclicAtK" || e.code() == "InsufficientPrecision") {
            ++undefined;
            continue;
          }
          fail("gspdr", seq, k, {{"character", sp.character_label(v)}, {"error", e.code()}});
        }
      }
    }
  }
  r.notes = {{"undefined_skipped", undefined}, {"max_len", max_len}};
  return r;
}

SuiteResult b_compat_suite(const GSP& g0, std::size_t max_len) {
  SuiteResult r{"b-compat"};
  std::size_t skipped = 0;
  for (const auto& seq : enumerate_sequences(g0.species.size(), max_len)) {
    GSP g = g0;
    bool ok = true;
    for (auto k : seq) {
      try {
        auto rep = mutation::mutate(g, k);
        if (!rep.two_acyclic) {
          ok = false;
          break;
        }
        g = rep.reduced;
      } catch (const Error&) {
        ok = false;
        break;
      }
    }
    if (!ok || !species::is_locally_free(g.species)) {
      ++skipped;
      continue;
    }
    for (std::size_t k = 0; k < g.species.size(); ++k) {
      mutation::MutationReport m;
      try {
        m = mutation::mutate(g, k);
      } catch (const Error&) {
        ++skipped;
        continue;
      }
      if (!m.two_acyclic || !m.b_before || !m.b_after) {
        ++skipped;
        continue;
      }
      ++r.checked;
      if (seed::mutate_matrix(*m.b_before, k) != *m.b_after) {
        json seqj = json::array();
        for (auto s : seq) seqj.push_back(g0.species.labels[s]);
        r.failures.push_back({{{"species_digest", species_digest(g0.species)}, {"sequence", seqj}},
                              {{"k", g.species.labels[k]},
                               {"mu_k_B", harness::to_json(seed::mutate_matrix(*m.b_before, k))},
                               {"B_mu_k", harness::to_json(*m.b_after)}},
                              "gsptool mutate --species " + shell_quote(harness::to_json(g).dump()) + " --at " +
                                  std::to_string(g.species.labels[k])});
      }
    }
  }
  r.notes = {{"skipped", skipped}, {"max_len", max_len}};
  return r;
}

GSP random_locally_free_gsp(std::mt19937_64& rng, std::size_t n, int max_c) {
  std::uniform_int_distribution<int> dd(1, 3), cc(-max_c, max_c), coeff(1, 4);
  std::vector<int> d(n);
  for (int& x : d) x = dd(rng);
  std::vector<std::vector<int>> b(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const int g = std::gcd(d[i], d[j]);
      const int c = cc(rng);
      b[i][j] = c * d[i] / g;
      b[j][i] = -c * d[j] / g;
    }
  species::GroupSpecies s = species::species_from_matrix(ExchangeMatrix::from_rows(b), d);
  potential::Quiver q(s);
  potential::Potential p{8, potential::Potential::kExact, {}};
  for (const auto& c : mutation::cycle_basis(q, 3)) p.add_cycle(c, coeff(rng));
  return {s, p};
}

}  // namespace gsp::harness
