#pragma once

#include <span>
#include <vector>

#include "kidrank/model.hpp"

namespace kidrank {

// One ranked list prepared for cost-sensitive evaluation: gains and costs
// in ranked order, cutoff k. costs default to s_bad upstream and may be
// forced to 1.0 for known-bad rows.
struct RankedEval {
  std::vector<double> gains;
  std::vector<double> costs;
  int k = 10;
};

// Sum over the top min(k, n) positions of gain / log2(i + 1).
double dcg_at_k(std::span<const double> gains, int k);

// dcg normalized by the descending-gain ideal; 0 when the ideal is 0.
double ndcg_at_k(std::span<const double> gains, int k);

// Sum over the top min(k, n) positions of (gain / discount - cost).
double cs_dcg_at_k(const RankedEval& eval);

// cs_dcg of the heuristic ideal ordering: gain descending, ties by cost
// ascending, cut at k.
double ideal_cs_dcg(const RankedEval& eval);

// cs_dcg / ideal when the ideal is positive; the shifted difference
// cs_dcg - ideal otherwise. Clamped to [-1, 1] so it can drive boosting.
double ncs_dcg_at_k(const RankedEval& eval);

// Exact maximum of cs_dcg over every permutation of the list. Test oracle;
// lists longer than 10 throw ListTooLong.
double ideal_cs_dcg_bruteforce(const RankedEval& eval);

// 1/rank of the first resource with label >= relevant_label, 0 if absent.
double reciprocal_rank(const JudgedList& list, int relevant_label = 2);

// 1/rank of the first known-bad resource, 0 if absent. Lower is better.
double reciprocal_rank_bad(const JudgedList& list);

// Means over lists, accumulated in the given order. Callers keep lists
// sorted by query_id for bit-stable results.
double mrr(const std::vector<JudgedList>& lists, int relevant_label = 2);
double mrr_bad(const std::vector<JudgedList>& lists);

struct TTestResult {
  double t = 0.0;
  double df = 0.0;
  double p = 1.0;  // two-tailed
};

// Welch's two-sample t-test. Degenerate inputs (fewer than two values per
// side or zero variance on both sides) collapse to p = 1 when the means
// agree and p = 0 when they differ.
TTestResult welch_t_test(std::span<const double> a, std::span<const double> b);

}  // namespace kidrank
