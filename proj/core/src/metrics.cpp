#include "kidrank/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <boost/math/distributions/students_t.hpp>

#include "kidrank/error.hpp"

namespace kidrank {

namespace {

void check_eval(const RankedEval& eval) {
  if (eval.gains.size() != eval.costs.size()) {
    throw Error(ErrorCode::DomainError, "gains and costs differ in length");
  }
  if (eval.k < 1) throw Error(ErrorCode::DomainError, "cutoff k must be >= 1");
}

double discount(std::size_t position_1based) {
  return std::log2(static_cast<double>(position_1based) + 1.0);
}

double cs_dcg_order(const RankedEval& eval,
                    std::span<const std::size_t> order) {
  std::size_t depth = std::min<std::size_t>(order.size(),
                                            static_cast<std::size_t>(eval.k));
  double total = 0.0;
  for (std::size_t i = 0; i < depth; ++i) {
    total += eval.gains[order[i]] / discount(i + 1) - eval.costs[order[i]];
  }
  return total;
}

}  // namespace

double dcg_at_k(std::span<const double> gains, int k) {
  if (k < 1) throw Error(ErrorCode::DomainError, "cutoff k must be >= 1");
  std::size_t depth =
      std::min<std::size_t>(gains.size(), static_cast<std::size_t>(k));
  double total = 0.0;
  for (std::size_t i = 0; i < depth; ++i) {
    total += gains[i] / discount(i + 1);
  }
  return total;
}

double ndcg_at_k(std::span<const double> gains, int k) {
  std::vector<double> ideal(gains.begin(), gains.end());
  std::sort(ideal.begin(), ideal.end(), std::greater<>());
  double denom = dcg_at_k(ideal, k);
  if (denom <= 0.0) return 0.0;
  return dcg_at_k(gains, k) / denom;
}

double cs_dcg_at_k(const RankedEval& eval) {
  check_eval(eval);
  std::vector<std::size_t> order(eval.gains.size());
  std::iota(order.begin(), order.end(), 0);
  return cs_dcg_order(eval, order);
}

double ideal_cs_dcg(const RankedEval& eval) {
  check_eval(eval);
  std::vector<std::size_t> order(eval.gains.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (eval.gains[a] != eval.gains[b]) return eval.gains[a] > eval.gains[b];
    if (eval.costs[a] != eval.costs[b]) return eval.costs[a] < eval.costs[b];
    return a < b;
  });
  return cs_dcg_order(eval, order);
}

double ncs_dcg_at_k(const RankedEval& eval) {
  double ideal = ideal_cs_dcg(eval);
  double actual = cs_dcg_at_k(eval);
  double value = ideal > 0.0 ? actual / ideal : actual - ideal;
  return std::clamp(value, -1.0, 1.0);
}

double ideal_cs_dcg_bruteforce(const RankedEval& eval) {
  check_eval(eval);
  if (eval.gains.size() > 10) {
    throw Error(ErrorCode::ListTooLong,
                "brute-force ideal limited to 10 documents, got " +
                    std::to_string(eval.gains.size()));
  }
  std::vector<std::size_t> order(eval.gains.size());
  std::iota(order.begin(), order.end(), 0);
  double best = cs_dcg_order(eval, order);
  while (std::next_permutation(order.begin(), order.end())) {
    best = std::max(best, cs_dcg_order(eval, order));
  }
  return best;
}

double reciprocal_rank(const JudgedList& list, int relevant_label) {
  for (std::size_t i = 0; i < list.resources.size(); ++i) {
    const auto& label = list.resources[i].label;
    if (label && *label >= relevant_label) {
      return 1.0 / static_cast<double>(i + 1);
    }
  }
  return 0.0;
}

double reciprocal_rank_bad(const JudgedList& list) {
  for (std::size_t i = 0; i < list.resources.size(); ++i) {
    if (list.resources[i].is_known_bad) {
      return 1.0 / static_cast<double>(i + 1);
    }
  }
  return 0.0;
}

double mrr(const std::vector<JudgedList>& lists, int relevant_label) {
  if (lists.empty()) throw Error(ErrorCode::DomainError, "mrr of no lists");
  double total = 0.0;
  for (const JudgedList& list : lists) {
    total += reciprocal_rank(list, relevant_label);
  }
  return total / static_cast<double>(lists.size());
}

double mrr_bad(const std::vector<JudgedList>& lists) {
  if (lists.empty()) {
    throw Error(ErrorCode::DomainError, "mrr_bad of no lists");
  }
  double total = 0.0;
  for (const JudgedList& list : lists) {
    total += reciprocal_rank_bad(list);
  }
  return total / static_cast<double>(lists.size());
}

TTestResult welch_t_test(std::span<const double> a, std::span<const double> b) {
  auto mean = [](std::span<const double> xs) {
    return std::accumulate(xs.begin(), xs.end(), 0.0) /
           static_cast<double>(xs.size());
  };
  auto variance = [&](std::span<const double> xs, double m) {
    double ss = 0.0;
    for (double x : xs) ss += (x - m) * (x - m);
    return ss / static_cast<double>(xs.size() - 1);
  };

  TTestResult result;
  if (a.size() < 2 || b.size() < 2) {
    bool same = !a.empty() && !b.empty() && mean(a) == mean(b);
    result.p = same ? 1.0 : 0.0;
    return result;
  }
  double ma = mean(a), mb = mean(b);
  double va = variance(a, ma) / static_cast<double>(a.size());
  double vb = variance(b, mb) / static_cast<double>(b.size());
  double denom = std::sqrt(va + vb);
  if (denom == 0.0) {
    result.p = ma == mb ? 1.0 : 0.0;
    result.t = ma == mb ? 0.0 : std::numeric_limits<double>::infinity();
    return result;
  }
  result.t = (ma - mb) / denom;
  result.df = (va + vb) * (va + vb) /
              (va * va / static_cast<double>(a.size() - 1) +
               vb * vb / static_cast<double>(b.size() - 1));
  boost::math::students_t_distribution<double> dist(result.df);
  result.p = 2.0 * boost::math::cdf(dist, -std::abs(result.t));
  return result;
}

}  // namespace kidrank
