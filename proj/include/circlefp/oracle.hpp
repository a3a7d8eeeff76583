#pragma once

// Exhaustive sweep over all fixed point data of a given shape with bounded
// weights: which candidates survive the necessary conditions, which have an
// admissible multigraph of cases A-E, and how they classify.

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "classify.hpp"
#include "constraints.hpp"
#include "core.hpp"
#include "multigraph.hpp"

namespace circlefp {

inline constexpr long kDefaultOracleWeightCap = 4;

struct OracleRow {
  FixedPointData data;
  bool checks_passed = false;
  /// Distinct case tags among the admissible graphs, ascending.
  std::string figure_tags;
  /// Verdict names, ';'-separated, or "n/a" for unsupported shapes.
  std::string classification;
  bool not_classified = false;
};

struct OracleReport {
  std::vector<OracleRow> rows;
  std::size_t survivors = 0;
  std::size_t survivors_with_figure = 0;
  /// Survivors with a case A-E graph that nevertheless are NotInClassification.
  std::size_t unexplained = 0;
};

namespace detail {

inline void weight_multisets(std::size_t arity, long max_weight, long from, std::vector<Integer>& current,
                             std::vector<std::vector<Integer>>& out) {
  if (current.size() == arity) {
    out.push_back(current);
    return;
  }
  for (long w = from; w <= max_weight; ++w) {
    current.emplace_back(w);
    weight_multisets(arity, max_weight, w, current, out);
    current.pop_back();
  }
}

inline std::string classification_summary(const FixedPointData& d, bool& not_classified) {
  Classification c;
  if (d.size() == 2) {
    c = classify_two_fixed_points(d);
  } else if (d.arity() == 2) {
    c = membership_4d(d, false);
  } else if (d.size() == 4 && d.arity() == 3) {
    c = classify_6d4fp(d);
  } else {
    return "n/a";
  }
  not_classified = !c.classified();
  std::string out;
  for (const auto& m : c.matches) out += (out.empty() ? "" : ";") + verdict_name(m);
  return out;
}

}  // namespace detail

/// All data with `points` points of `arity` weights in [1, max_weight], up to
/// reordering of the points, in a deterministic order.
inline std::vector<FixedPointData> enumerate_candidates(std::size_t points, std::size_t arity, long max_weight) {
  std::vector<std::vector<Integer>> multisets;
  std::vector<Integer> current;
  detail::weight_multisets(arity, max_weight, 1, current, multisets);
  std::vector<FixedPointDatum> datums;
  for (const auto& w : multisets) {
    datums.emplace_back(Sign::plus(), w);
    datums.emplace_back(Sign::minus(), w);
  }
  std::sort(datums.begin(), datums.end());

  std::vector<FixedPointData> out;
  std::vector<std::size_t> idx(points, 0);
  // non-decreasing index tuples = multisets of datums
  while (true) {
    std::vector<FixedPointDatum> pts;
    for (auto i : idx) pts.push_back(datums[i]);
    out.emplace_back(std::move(pts));
    std::size_t k = points;
    while (k > 0 && idx[k - 1] == datums.size() - 1) --k;
    if (k == 0) break;
    ++idx[k - 1];
    for (std::size_t j = k; j < points; ++j) idx[j] = idx[k - 1];
  }
  return out;
}

inline OracleReport run_oracle(std::size_t points, std::size_t arity, long max_weight,
                               long weight_cap = kDefaultOracleWeightCap) {
  if (max_weight < 1) throw InvalidInputError("max weight must be positive");
  if (max_weight > weight_cap) {
    throw LimitExceededError("max weight " + std::to_string(max_weight) + " exceeds the cap " +
                             std::to_string(weight_cap));
  }
  if (points == 0 || arity == 0) throw InvalidInputError("points and arity must be positive");
  OracleReport report;
  for (auto& d : enumerate_candidates(points, arity, max_weight)) {
    OracleRow row{d, run_all(d).passed(), "", "", false};
    if (row.checks_passed) {
      ++report.survivors;
      std::set<char> tags;
      std::vector<LabeledMultigraph> graphs;
      try {
        graphs = enumerate_admissible(d);
      } catch (const NoMatchingError&) {
      }
      if (points == 4 && arity == 3) {
        for (const auto& g : graphs) {
          try {
            if (auto fc = match_figure1(g)) tags.insert(to_char(fc->tag));
          } catch (const InvalidInputError&) {
            // sign split other than 2+2
          }
        }
      }
      row.figure_tags = std::string(tags.begin(), tags.end());
      row.classification = detail::classification_summary(d, row.not_classified);
      if (!tags.empty()) {
        ++report.survivors_with_figure;
        if (row.not_classified) ++report.unexplained;
      }
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

/// CSV with header: data,checks_passed,case_tags,classification.
inline std::string oracle_csv(const OracleReport& r) {
  std::string out = "data,checks_passed,case_tags,classification\n";
  for (const auto& row : r.rows) {
    std::string data;
    for (const auto& p : row.data) {
      if (!data.empty()) data += ' ';
      data += p.sign().symbol();
      for (std::size_t i = 0; i < p.weights().size(); ++i) data += (i ? "." : "") + p.weights()[i].get_str();
    }
    out += data + "," + (row.checks_passed ? "true" : "false") + "," +
           (row.figure_tags.empty() ? "-" : row.figure_tags) + "," +
           (row.classification.empty() ? "-" : row.classification) + "\n";
  }
  return out;
}

}  // namespace circlefp
