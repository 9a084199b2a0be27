#include "koszul/runner/run.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <filesystem>
#include <functional>
#include <thread>

#include "koszul/curves/dualizing.hpp"
#include "koszul/curves/sampling.hpp"
#include "koszul/curves/sections.hpp"
#include "koszul/curves/serialization.hpp"
#include "koszul/engine/betti.hpp"
#include "koszul/error.hpp"
#include "koszul/runner/cache.hpp"
#include "koszul/runner/models.hpp"
#include "koszul/runner/version.hpp"
#include "koszul/verify/induction.hpp"
#include "koszul/verify/propositions.hpp"
#include "koszul/verify/quadrics.hpp"
#include "koszul/verify/status.hpp"

namespace koszul::runner {

using curves::LineBundle;
using curves::PointOnCurve;
using nlohmann::json;

namespace {

// Runs fn(i) for i in [0, n) on up to `jobs` threads. The exception of the
// smallest failing index is rethrown so failures are reported deterministically.
void parallel_for(std::size_t n, unsigned jobs, const std::function<void(std::size_t)>& fn) {
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(n)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

json point_json(const PointOnCurve& p) {
  return json::array({p.component, json::array({linalg::format_rat(p.point.a),
                                                 linalg::format_rat(p.point.b)})});
}

LineBundle resolve_model(const RunConfig& config) {
  if (config.model) {
    if (config.model->is_string()) return builtin_model(config.model->get<std::string>(), config.seed);
    return curves::model_from_json(*config.model);
  }
  const Cell& c = *config.cell;
  return model_for_cell(c.g, c.r, c.d, config.seed);
}

// Degree, genus, h^0 and h^1 of the model, cross-checked by Riemann-Roch.
json bookkeeping(const LineBundle& l, const RunConfig& config) {
  const long g = l.curve().arithmetic_genus();
  const long d = l.total_degree();
  const auto h0 = static_cast<long>(curves::h0_basis(l).dimension());
  const auto omega = curves::dualizing_bundle(l.curve_ptr());
  const auto h1 = static_cast<long>(curves::h0_basis(omega.tensor(l.dual())).dimension());
  if (h0 - h1 != d - g + 1) {
    throw InvariantViolation("Riemann-Roch fails on the model: h0 - h1 = " + std::to_string(h0 - h1) +
                             ", d - g + 1 = " + std::to_string(d - g + 1));
  }
  const long r = h0 - 1;
  json out = {{"g", g}, {"r", r}, {"d", d}, {"h0", h0}, {"h1", h1}, {"rho", g - (r + 1) * h1},
              {"components", l.curve().component_count()}};
  if (config.cell) {
    const Cell& c = *config.cell;
    if (c.g != g || c.r != r || c.d != d) {
      throw UsageError("model (g, r, d) = (" + std::to_string(g) + ", " + std::to_string(r) + ", " +
                       std::to_string(d) + ") does not match cell (g, r, d) = (" +
                       std::to_string(c.g) + ", " + std::to_string(c.r) + ", " +
                       std::to_string(c.d) + ")");
    }
  }
  return out;
}

std::size_t checked_p(const RunConfig& config, std::size_t r, std::size_t lo, std::size_t hi) {
  if (config.p < 0 || static_cast<std::size_t>(config.p) < lo || static_cast<std::size_t>(config.p) > hi) {
    throw UsageError("p = " + std::to_string(config.p) + " outside [" + std::to_string(lo) + ", " +
                     std::to_string(hi) + "] for r = " + std::to_string(r));
  }
  return static_cast<std::size_t>(config.p);
}

std::pair<PointOnCurve, PointOnCurve> sample_pair(const LineBundle& l, std::uint64_t seed) {
  curves::Sampler sampler(seed);
  const auto u = sampler.smooth_point(l.curve());
  const auto v = sampler.smooth_point(l.curve(), std::span(&u, 1));
  return {u, v};
}

json run_betti(const LineBundle& l, const RunConfig& config) {
  const engine::KoszulComplex complex(l);
  const auto table = engine::betti_table(complex, config.jobs);
  const auto shape = engine::table_shape(table, complex);
  return {{"betti", engine::betti_to_json(table)},
          {"shape",
           {{"bottom_row", shape.bottom_row},
            {"top_row", shape.top_row},
            {"nonspecial_powers", shape.nonspecial_powers},
            {"general_shape", shape.general_shape()},
            {"h1", shape.h1},
            {"rho", shape.rho},
            {"k_r_minus_1_2", shape.k_r_minus_1_2}}}};
}

json run_secant_witness(const LineBundle& l, const RunConfig& config, int& exit_code) {
  const auto n = static_cast<std::size_t>(config.samples);
  std::vector<json> rows(n);
  std::vector<int> flags(n, 0);  // 1 = inconclusive
  parallel_for(n, config.jobs, [&](std::size_t i) {
    const auto [u, v] = sample_pair(l, curves::mix_seed(config.seed, i));
    const auto rank = verify::eqnrr_check(l, 1, u, v);
    const auto witness = verify::quadric_secant_witness(l, u, v);
    json row = {{"u", point_json(u)},       {"v", point_json(v)},
                {"lhs", rank.lhs},          {"rhs", rank.rhs()},
                {"eqnrr", rank.holds()},    {"witness", witness.has_value()},
                {"degenerate", rank.degenerate}};
    if (witness) row["polar_value"] = linalg::format_rat(witness->polar_value);
    flags[i] = rank.degenerate ? 1 : 0;
    rows[i] = std::move(row);
  });
  const auto inconclusive = static_cast<std::size_t>(std::count(flags.begin(), flags.end(), 1));
  std::size_t agree = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!flags[i] && rows[i]["eqnrr"] == rows[i]["witness"]) ++agree;
  }
  // Above 5% excluded pairs the equivalence was not exercised well enough.
  if (inconclusive * 20 > n) exit_code = kInconclusive;
  return {{"instances", rows},
          {"summary", {{"total", n}, {"agree", agree}, {"inconclusive", inconclusive}}}};
}

json run_noncontainment(const LineBundle& l, const RunConfig& config, int& exit_code) {
  const verify::ProjectiveMap map(curves::h0_basis(l));
  const auto check = verify::secant_noncontainment_check(map, config.seed);
  if (check.outcome == verify::SecantOutcome::PreconditionFailed) {
    throw UsageError("model is degenerate: the linear system satisfies a linear relation");
  }
  if (check.outcome == verify::SecantOutcome::Inconclusive) exit_code = kInconclusive;
  return {{"outcome", verify::to_string(check.outcome)},
          {"quadrics_tested", check.quadrics_tested},
          {"witnessed", check.witnessed},
          {"pairs_tried", check.pairs_tried}};
}

json run_kp1_propagation(const LineBundle& l, const RunConfig& config, std::size_t r) {
  const std::size_t p = checked_p(config, r, 1, r);
  const auto n = static_cast<std::size_t>(config.samples);
  std::vector<json> rows(n);
  std::vector<int> applicable(n, 0);
  parallel_for(n, config.jobs, [&](std::size_t i) {
    const auto seed = curves::mix_seed(config.seed, i);
    const auto [u, v] = sample_pair(l, seed);
    const auto res = verify::prop_kp1_check(l, u, v, p, seed);
    json row = {{"u", point_json(u)}, {"v", point_json(v)}, {"k_y", res.k_y},
                {"precondition", res.precondition_met},
                {"x_hash", curves::hash_hex(res.x_hash)}};
    if (res.k_x) row["k_x"] = *res.k_x;
    applicable[i] = res.precondition_met ? 1 : 0;
    rows[i] = std::move(row);
  });
  const auto checked = static_cast<std::size_t>(std::count(applicable.begin(), applicable.end(), 1));
  return {{"instances", rows}, {"summary", {{"total", n}, {"checked", checked}, {"skipped", n - checked}}}};
}

json run_twisted_quotient(const LineBundle& l, const RunConfig& config, std::size_t r) {
  const std::size_t p = checked_p(config, r, 1, r - 1);
  const auto n = static_cast<std::size_t>(config.samples);
  std::vector<json> rows(n);
  parallel_for(n, config.jobs, [&](std::size_t i) {
    const auto seed = curves::mix_seed(config.seed, i);
    const auto [u, v] = sample_pair(l, seed);
    const auto res = verify::twisted_quotient_check(l, u, v, p, seed);
    if (!res.holds() || !res.agrees_with_rank_condition()) {
      throw InvariantViolation("twisted Koszul group of the attachment (dimension " +
                               std::to_string(res.lhs) + ") differs from the quotient " +
                               std::to_string(res.numerator) + " - " +
                               std::to_string(res.denominator));
    }
    rows[i] = {{"u", point_json(u)},
               {"v", point_json(v)},
               {"lhs", res.lhs},
               {"numerator", res.numerator},
               {"denominator", res.denominator},
               {"twisted_y", res.twisted_y},
               {"rank_condition", res.rank_condition.holds()},
               {"x_hash", curves::hash_hex(res.x_hash)}};
  });
  return {{"instances", rows}, {"summary", {{"total", n}, {"holds", n}}}};
}

json run_induct(const LineBundle& l, const RunConfig& config, std::size_t r, int& exit_code) {
  const std::size_t p = checked_p(config, r, 1, r - 1);
  const auto report = verify::induction_driver(l, static_cast<std::size_t>(config.steps), p,
                                                config.seed, config.timing);
  json steps = json::array();
  json certificates = json::array();
  for (const auto& st : report.steps) {
    steps.push_back(verify::to_json(st));
    certificates.push_back(verify::to_json(st.certificate));
  }
  json out = {{"base", verify::to_json(report.base)},
              {"steps", steps},
              {"certificates", certificates},
              {"complete", report.complete(static_cast<std::size_t>(config.steps))},
              {"exhausted", report.exhausted}};
  if (report.diagnostic) out["diagnostic"] = *report.diagnostic;
  if (!report.complete(static_cast<std::size_t>(config.steps))) exit_code = kInconclusive;
  return out;
}

}  // namespace

json compute_results(const RunConfig& config, int& exit_code) {
  exit_code = kSuccess;
  if (config.timing && config.command != Command::Gv && config.command != Command::Induct) {
    throw UsageError("'timing' applies to gv and induct only");
  }
  const LineBundle l = resolve_model(config);
  json results = {{"model", curves::model_to_json(l)},
                  {"model_hash", curves::hash_hex(curves::model_hash(l))},
                  {"bookkeeping", bookkeeping(l, config)}};
  const auto r = results["bookkeeping"]["r"].get<std::size_t>();
  switch (config.command) {
    case Command::Betti:
      results.update(run_betti(l, config));
      break;
    case Command::Mrc:
      results["mrc"] = verify::to_json(verify::mrc_status(l));
      break;
    case Command::Gv: {
      if (r < 2) throw UsageError("gv needs r >= 2");
      const auto cert = verify::gv_status(l, checked_p(config, r, 1, r - 1), config.timing);
      results["certificates"] = json::array({verify::to_json(cert)});
      break;
    }
    case Command::VerifySecantWitness:
      results["secant_witness"] = run_secant_witness(l, config, exit_code);
      break;
    case Command::VerifyNonContainment:
      results["noncontainment"] = run_noncontainment(l, config, exit_code);
      break;
    case Command::VerifyKp1Propagation:
      results["kp1_propagation"] = run_kp1_propagation(l, config, r);
      break;
    case Command::VerifyTwistedQuotient:
      if (r < 2) throw UsageError("verify-prop14 needs r >= 2");
      results["twisted_quotient"] = run_twisted_quotient(l, config, r);
      break;
    case Command::Induct: {
      if (r < 2) throw UsageError("induct needs r >= 2");
      auto out = run_induct(l, config, r, exit_code);
      results["certificates"] = out["certificates"];
      out.erase("certificates");
      results["induction"] = std::move(out);
      break;
    }
  }
  results["status"] = exit_code == kSuccess ? "ok" : "inconclusive";
  return results;
}

RunOutcome run(const RunConfig& config) {
  RunOutcome outcome;
  json results;
  try {
    const bool cacheable = config.cache_dir && !config.timing;
    std::optional<ResultCache> cache;
    std::uint64_t key = 0;
    if (cacheable) {
      cache.emplace(*config.cache_dir);
      // The cache key covers everything that determines the results.
      key = ResultCache::make_key(config.model ? config.model->dump() : std::string(),
                                  to_string(config.command), config_echo(config));
    }
    std::optional<CacheEntry> hit = cache ? cache->lookup(key) : std::nullopt;
    if (hit) {
      results = json::parse(hit->value);
      outcome.cache_hit = true;
      outcome.exit_code = results.value("status", "ok") == "ok" ? kSuccess : kInconclusive;
      if (ResultCache::audited(key)) {
        int recomputed_code = kSuccess;
        const json fresh = compute_results(config, recomputed_code);
        if (fresh.dump() != hit->value) {
          throw InvariantViolation("cache entry " + curves::hash_hex(key) +
                                   " differs from recomputation");
        }
      }
    } else {
      results = compute_results(config, outcome.exit_code);
      if (cache) cache->store({key, results.dump(), kEngineVersion});
    }
  } catch (const UsageError& e) {
    outcome.exit_code = kUsage;
    outcome.message = std::string("validation error: ") + e.what();
  } catch (const ModelError& e) {
    outcome.exit_code = kUsage;
    outcome.message = std::string("model error: ") + e.what();
  } catch (const SamplingExhausted& e) {
    outcome.exit_code = kInconclusive;
    outcome.message = std::string("inconclusive: ") + e.what();
  } catch (const InvariantViolation& e) {
    outcome.exit_code = kFatal;
    outcome.message = std::string("invariant violation: ") + e.what();
  } catch (const std::out_of_range& e) {
    outcome.exit_code = kUsage;
    outcome.message = std::string("validation error: ") + e.what();
  }
  if (!outcome.message.empty()) {
    results = {{"status", outcome.exit_code == kInconclusive ? "inconclusive"
                          : outcome.exit_code == kFatal    ? "fatal"
                                                           : "invalid"},
               {"message", outcome.message}};
  }
  outcome.envelope = {{"engine_version", kEngineVersion},
                      {"config_echo", config_echo(config)},
                      {"results", results}};
  if (!config.output.empty()) {
    const std::filesystem::path out(config.output);
    write_file_atomic(out, outcome.envelope.dump(2) + "\n");
    outcome.written.push_back(out.string());
    if (results.contains("certificates")) {
      std::string lines;
      for (const auto& c : results["certificates"]) lines += c.dump() + "\n";
      auto jsonl = out;
      jsonl.replace_extension(".jsonl");
      write_file_atomic(jsonl, lines);
      outcome.written.push_back(jsonl.string());
    }
  }
  return outcome;
}

}  // namespace koszul::runner
