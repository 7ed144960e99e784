#pragma once

#include <json.hpp>

#include "ucycle/counting.hpp"
#include "ucycle/spectral.hpp"

namespace ucycle {

// Big counts serialize as decimal strings: they outgrow the 2^53 range JSON
// numbers can carry exactly (already at n=5, k=3).

namespace detail {

inline nlohmann::json json_big(const std::optional<BigInt>& v) {
  return v ? nlohmann::json(v->str()) : nlohmann::json(nullptr);
}

inline nlohmann::json json_flag(const std::optional<bool>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

inline nlohmann::json json_counterexample(const std::optional<Counterexample>& ce) {
  if (!ce) return nullptr;
  return {{"row", ce->row},
          {"col", ce->col},
          {"expected", ce->expected.str()},
          {"got", ce->got.str()}};
}

}  // namespace detail

inline nlohmann::json to_json(const CountReport& r) {
  return {{"n", r.n},
          {"k", r.k},
          {"closed_form", detail::json_big(r.closed_form)},
          {"matrix_tree", detail::json_big(r.matrix_tree)},
          {"brute_force", detail::json_big(r.brute_force)},
          {"agree",
           {{"closed_form_matrix_tree", detail::json_flag(r.agree_closed_matrix)},
            {"closed_form_brute_force", detail::json_flag(r.agree_closed_brute)},
            {"matrix_tree_brute_force", detail::json_flag(r.agree_matrix_brute)},
            {"all", r.all_agree()}}}};
}

inline nlohmann::json to_json(const CheckResult& r) {
  return {{"check", r.check},
          {"params", {{"n", r.n}}},
          {"pass", r.pass},
          {"detail", r.detail},
          {"counterexample", detail::json_counterexample(r.counterexample)}};
}

inline nlohmann::json to_json(const WalkTableResult& r) {
  nlohmann::json cases = nlohmann::json::array();
  for (const auto& c : r.cases) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& e : c.witness_entries) entries.push_back(e.str());
    cases.push_back({{"pattern", c.pattern},
                     {"pass", c.pass},
                     {"witness", {{"row", c.witness_row},
                                  {"col", c.witness_col},
                                  {"entries", entries}}},
                     {"counterexample", detail::json_counterexample(c.counterexample)}});
  }
  return {{"check", "walk-table"},
          {"params", {{"n", r.n}}},
          {"pass", r.pass},
          {"cases", cases}};
}

inline nlohmann::json to_json(const MultiplicityReport& r) {
  return {{"check", "multiplicities"},
          {"params", {{"n", r.n}}},
          {"pass", r.pass()},
          {"s1", r.s1},
          {"s2", r.s2},
          {"s3", r.s3},
          {"traces", {r.trace_a.str(), r.trace_a2.str(), r.trace_a3.str()}},
          {"matches_closed_forms", r.matches_closed_forms},
          {"traces_ok", r.traces_ok},
          {"spectrum_size_ok", r.spectrum_size_ok},
          {"trace_system_ok", r.trace_system_ok}};
}

}  // namespace ucycle
