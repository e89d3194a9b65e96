// Copyright 2026 The rsp-solver Authors
// SPDX-License-Identifier: Apache-2.0

#include "rsp/oracle.hpp"

#include "rsp/errors.hpp"
#include "rsp/policy_eval.hpp"

namespace rsp {

std::vector<Policy> enumerate_policies(const RspGraph& g,
                                       unsigned long long cap) {
  if (policy_count_capped(g, cap) > cap)
    throw EnumerationCapError("policy enumeration cap exceeded (" +
                              std::to_string(cap) + ")");
  std::vector<Policy> out;
  Policy mu = Policy::uniform(g.num_nodes());
  do {
    out.push_back(mu);
  } while (advance_policy(g, mu));
  return out;
}

OracleResult brute_force(const RspGraph& g, int horizon,
                         unsigned long long cap) {
  const int n = g.num_nodes();
  OracleResult out;
  out.j_star_minimax = CostVector::infinite(n);

  for (Policy& mu : enumerate_policies(g, cap)) {
    PolicyRecord rec;
    rec.cls = classify_policy(g, mu);
    rec.cost = rec.cls.proper ? eval_proper(g, mu).cost
                              : eval_limsup(g, mu, horizon).cost;
    rec.policy = std::move(mu);

    for (int i = 1; i <= n; ++i)
      out.j_star_minimax.at(i) =
          min(out.j_star_minimax.at(i), rec.cost.at(i));
    if (rec.cls.proper) {
      if (!out.j_hat) {
        out.j_hat = rec.cost;
      } else {
        for (int i = 1; i <= n; ++i)
          out.j_hat->at(i) = min(out.j_hat->at(i), rec.cost.at(i));
      }
    }
    out.per_policy.push_back(std::move(rec));
  }

  if (out.j_hat) {
    // First proper policy that attains the min at every node simultaneously.
    for (const PolicyRecord& rec : out.per_policy) {
      if (!rec.cls.proper || rec.cost != *out.j_hat) continue;
      out.optimal_proper = rec.policy;
      out.simultaneous = true;
      break;
    }
    if (!out.optimal_proper) {
      // No single proper minimizer; report the first proper policy so callers
      // still get something valid, with the flag down.
      for (const PolicyRecord& rec : out.per_policy)
        if (rec.cls.proper) {
          out.optimal_proper = rec.policy;
          break;
        }
    }
  }
  return out;
}

}  // namespace rsp
