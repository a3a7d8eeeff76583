#pragma once

// Necessary conditions on the fixed point data of a circle action with
// isolated fixed points. Every check returns a three-valued verdict so that a
// check whose hypotheses do not hold is reported as inapplicable rather than
// silently skipped.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "core.hpp"
#include "io.hpp"
#include "series.hpp"

namespace circlefp {

enum class Verdict { pass, fail, inapplicable };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::inapplicable: return "inapplicable";
  }
  return "?";
}

struct CheckReport {
  std::string name;
  Verdict verdict = Verdict::pass;
  /// Human-readable explanation; never empty for a failed check.
  std::string witness;
  nlohmann::json detail = nlohmann::json::object();

  bool passed() const { return verdict == Verdict::pass; }
  bool failed() const { return verdict == Verdict::fail; }
};

inline nlohmann::json to_json(const CheckReport& r) {
  return {{"check", r.name}, {"verdict", to_string(r.verdict)}, {"witness", r.witness}, {"detail", r.detail}};
}

/// Localization of the class 1: sum_p eps(p) / prod_i w_pi. Vanishes in positive dimension.
inline Rational abbv_integral_one(const FixedPointData& d) {
  Rational total = 0;
  for (const auto& p : d) {
    Integer prod = 1;
    for (const auto& w : p.weights()) prod *= w;
    Rational term(Integer(p.sign().value()), prod);
    term.canonicalize();
    total += term;
  }
  return total;
}

inline CheckReport check_abbv(const FixedPointData& d) {
  Rational value = abbv_integral_one(d);
  CheckReport r{"abbv_integral_one", sgn(value) == 0 ? Verdict::pass : Verdict::fail,
                "sum of eps(p)/prod w_pi = " + value.get_str(), {{"value", rational_to_json(value)}}};
  return r;
}

inline CheckReport check_weight_parity(const FixedPointData& d) {
  std::vector<Integer> odd;
  nlohmann::json counts = nlohmann::json::object();
  for (const auto& [w, n] : weight_counts(d)) {
    counts[w.get_str()] = n;
    if (n % 2 != 0) odd.push_back(w);
  }
  CheckReport r{"weight_parity", odd.empty() ? Verdict::pass : Verdict::fail, "", {{"counts", counts}}};
  if (odd.empty()) {
    r.witness = "every weight occurs an even number of times";
  } else {
    r.witness = "weights occurring an odd number of times:";
    nlohmann::json js = nlohmann::json::array();
    for (const auto& w : odd) {
      r.witness += " " + w.get_str();
      js.push_back(integer_to_json(w));
    }
    r.detail["odd_weights"] = js;
  }
  return r;
}

inline CheckReport check_parity_dimension(const FixedPointData& d) {
  const bool ok = d.size() % 2 == 0 || d.arity() % 2 == 0;
  CheckReport r{"parity_dimension", ok ? Verdict::pass : Verdict::fail, "",
                {{"points", d.size()}, {"dimension", d.dimension()}}};
  r.witness = std::to_string(d.size()) + " fixed points in dimension " + std::to_string(d.dimension()) +
              (ok ? "" : ": an odd number of fixed points needs dimension divisible by 4");
  return r;
}

/// The two smallest weights of W+ and W- agree, and a_i = a_2 iff b_i = a_2.
inline CheckReport check_smallest_weights(const FixedPointData& d) {
  const auto plus = weights_with_sign(d, Sign::plus());
  const auto minus = weights_with_sign(d, Sign::minus());
  CheckReport r{"smallest_weights", Verdict::pass, "", nlohmann::json::object()};
  if (plus.size() < 2 || minus.size() < 2) {
    r.verdict = Verdict::inapplicable;
    r.witness = "each sign class needs at least two weights";
    return r;
  }
  r.detail = {{"a1", integer_to_json(plus[0])},
              {"a2", integer_to_json(plus[1])},
              {"b1", integer_to_json(minus[0])},
              {"b2", integer_to_json(minus[1])}};
  if (plus[0] != minus[0]) {
    r.verdict = Verdict::fail;
    r.witness = "a1 = " + plus[0].get_str() + " differs from b1 = " + minus[0].get_str();
    return r;
  }
  if (plus[1] != minus[1]) {
    r.verdict = Verdict::fail;
    r.witness = "a2 = " + plus[1].get_str() + " differs from b2 = " + minus[1].get_str();
    return r;
  }
  const Integer& a2 = plus[1];
  for (std::size_t i = 0; i < std::max(plus.size(), minus.size()); ++i) {
    const bool in_plus = i < plus.size() && plus[i] == a2;
    const bool in_minus = i < minus.size() && minus[i] == a2;
    if (in_plus != in_minus) {
      r.verdict = Verdict::fail;
      r.witness = "value " + a2.get_str() + " occupies position " + std::to_string(i + 1) + " of " +
                  (in_plus ? "W+ but not W-" : "W- but not W+");
      r.detail["position"] = i + 1;
      return r;
    }
  }
  r.witness = "a1 = b1 = " + plus[0].get_str() + ", a2 = b2 = " + a2.get_str();
  return r;
}

inline CheckReport check_uniform_weight_balance(const FixedPointData& d) {
  CheckReport r{"uniform_weight_balance", Verdict::inapplicable, "weights are not all equal",
                nlohmann::json::object()};
  auto counts = weight_counts(d);
  if (counts.size() != 1) {
    if (counts.empty()) r.witness = "no weights";
    return r;
  }
  std::size_t plus = 0;
  for (const auto& p : d) plus += p.sign().is_plus() ? 1 : 0;
  const std::size_t minus = d.size() - plus;
  r.verdict = plus == minus ? Verdict::pass : Verdict::fail;
  r.witness = "all weights equal " + counts.begin()->first.get_str() + "; " + std::to_string(plus) +
              " positive and " + std::to_string(minus) + " negative points";
  r.detail = {{"weight", integer_to_json(counts.begin()->first)}, {"plus", plus}, {"minus", minus}};
  return r;
}

/// How the normal weights of p correspond to those of q modulo w:
/// w_p[i] == nu[i] * w_q[sigma[i]] (mod w).
struct PairAlignment {
  std::size_t p = 0;
  std::size_t q = 0;
  std::vector<std::size_t> sigma;
  std::vector<int> nu;
};

namespace detail {

inline Integer mod_nonneg(const Integer& x, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

/// Weights of a point other than one copy of w.
inline std::vector<Integer> normal_weights(const FixedPointDatum& p, const Integer& w) {
  std::vector<Integer> out;
  bool skipped = false;
  for (const auto& x : p.weights()) {
    if (!skipped && x == w) {
      skipped = true;
      continue;
    }
    out.push_back(x);
  }
  return out;
}

/// First (sigma, nu) in lexicographic order satisfying the congruences and
/// eps(p) = eps(q) * (-1)^(#{nu = -1} + 1).
inline std::optional<PairAlignment> align_pair(const FixedPointData& d, std::size_t p, std::size_t q,
                                               const Integer& w) {
  const auto wp = normal_weights(d[p], w);
  const auto wq = normal_weights(d[q], w);
  const std::size_t m = wp.size();
  // required parity of the number of negative entries in nu
  const bool need_odd_negatives = d[p].sign() == d[q].sign();

  std::vector<std::size_t> sigma(m);
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    std::vector<int> nu(m, 1);
    // per position, which of +1 / -1 satisfy the congruence
    bool feasible = true;
    std::vector<std::pair<bool, bool>> options(m);
    for (std::size_t i = 0; i < m && feasible; ++i) {
      Integer lhs = mod_nonneg(wp[i], w);
      options[i].first = lhs == mod_nonneg(wq[sigma[i]], w);
      options[i].second = lhs == mod_nonneg(Integer(-wq[sigma[i]]), w);
      feasible = options[i].first || options[i].second;
    }
    if (!feasible) continue;
    for (unsigned long mask = 0; mask < (1UL << m); ++mask) {
      bool ok = true;
      std::size_t negatives = 0;
      for (std::size_t i = 0; i < m && ok; ++i) {
        const bool negative = (mask >> i) & 1UL;
        ok = negative ? options[i].second : options[i].first;
        nu[i] = negative ? -1 : 1;
        negatives += negative ? 1 : 0;
      }
      if (ok && (negatives % 2 == 1) == need_odd_negatives) return PairAlignment{p, q, sigma, nu};
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return std::nullopt;
}

inline bool find_pairing(const FixedPointData& d, const Integer& w, std::vector<std::size_t>& unpaired,
                         std::vector<PairAlignment>& out) {
  if (unpaired.empty()) return true;
  const std::size_t first = unpaired.front();
  for (std::size_t k = 1; k < unpaired.size(); ++k) {
    const std::size_t other = unpaired[k];
    auto alignment = align_pair(d, first, other, w);
    if (!alignment) continue;
    std::vector<std::size_t> rest;
    for (std::size_t j = 1; j < unpaired.size(); ++j) {
      if (j != k) rest.push_back(unpaired[j]);
    }
    out.push_back(*alignment);
    if (find_pairing(d, w, rest, out)) return true;
    out.pop_back();
  }
  return false;
}

}  // namespace detail

/// Pairing condition for the points carrying weight w, checked by exhaustive search.
inline CheckReport check_congruence_pairing(const FixedPointData& d, const Integer& w) {
  CheckReport r{"congruence_pairing[" + w.get_str() + "]", Verdict::pass, "", {{"w", integer_to_json(w)}}};
  if (w < 1) throw InvalidWeightError("pairing weight must be positive");
  std::vector<std::size_t> carriers;
  for (std::size_t i = 0; i < d.size(); ++i) {
    std::size_t mult = 0;
    for (const auto& x : d[i].weights()) {
      if (x == w) {
        ++mult;
      } else if (x > w && mpz_divisible_p(x.get_mpz_t(), w.get_mpz_t()) != 0) {
        r.verdict = Verdict::inapplicable;
        r.witness = "weight " + x.get_str() + " is a proper multiple of " + w.get_str();
        return r;
      }
    }
    if (mult > 1) {
      r.verdict = Verdict::inapplicable;
      r.witness = "point " + std::to_string(i) + " carries weight " + w.get_str() + " more than once";
      return r;
    }
    if (mult == 1) carriers.push_back(i);
  }
  r.detail["points"] = carriers;
  if (carriers.size() % 2 != 0) {
    r.verdict = Verdict::fail;
    r.witness = std::to_string(carriers.size()) + " points carry weight " + w.get_str() + "; cannot pair";
    return r;
  }
  std::vector<PairAlignment> pairs;
  if (!detail::find_pairing(d, w, carriers, pairs)) {
    r.verdict = Verdict::fail;
    r.witness = "no pairing of the points carrying weight " + w.get_str() +
                " satisfies the congruence and sign relations";
    return r;
  }
  nlohmann::json js = nlohmann::json::array();
  r.witness = carriers.empty() ? "no point carries weight " + w.get_str() : "pairing";
  for (const auto& a : pairs) {
    js.push_back({{"p", a.p}, {"q", a.q}, {"sigma", a.sigma}, {"nu", a.nu}});
    r.witness += " (" + std::to_string(a.p) + "," + std::to_string(a.q) + ")";
  }
  r.detail["pairs"] = js;
  return r;
}

inline CheckReport check_signature_constant(const FixedPointData& d, const SignatureExact& exact) {
  CheckReport r{"signature_constant", Verdict::pass, "", nlohmann::json::object()};
  if (!exact.is_constant) {
    r.verdict = Verdict::fail;
    r.witness = "signature is not constant in t; first differing degree " + exact.witness_degree->get_str();
    r.detail["witness_degree"] = integer_to_json(*exact.witness_degree);
    return r;
  }
  const Rational at_zero = signature_value(d);
  r.detail["value"] = rational_to_json(exact.value);
  if (exact.value != at_zero) {
    r.verdict = Verdict::fail;
    r.witness = "constant " + exact.value.get_str() + " differs from sum of signs " + at_zero.get_str();
    return r;
  }
  r.witness = "signature is the constant " + exact.value.get_str();
  return r;
}

inline CheckReport check_signature_constant(const FixedPointData& d) {
  return check_signature_constant(d, signature_exact(d));
}

/// In dimension 6 (not divisible by 4) the signature vanishes.
inline CheckReport check_signature_zero_6d(const FixedPointData& d, const SignatureExact& exact) {
  CheckReport r{"signature_zero_6d", Verdict::inapplicable, "dimension is not 6", nlohmann::json::object()};
  if (d.arity() != 3) return r;
  if (!exact.is_constant) {
    r.verdict = Verdict::fail;
    r.witness = "signature is not constant";
    return r;
  }
  r.verdict = sgn(exact.value) == 0 ? Verdict::pass : Verdict::fail;
  r.witness = "signature = " + exact.value.get_str();
  r.detail["value"] = rational_to_json(exact.value);
  return r;
}

inline CheckReport check_signature_zero_6d(const FixedPointData& d) {
  return check_signature_zero_6d(d, signature_exact(d));
}

struct SuiteReport {
  std::vector<CheckReport> reports;

  /// Passes iff no applicable check fails.
  bool passed() const {
    return std::none_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.failed(); });
  }

  std::vector<CheckReport> failures() const {
    std::vector<CheckReport> out;
    std::copy_if(reports.begin(), reports.end(), std::back_inserter(out),
                 [](const CheckReport& r) { return r.failed(); });
    return out;
  }
};

inline nlohmann::json to_json(const SuiteReport& s) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& r : s.reports) checks.push_back(to_json(r));
  return {{"passed", s.passed()}, {"checks", checks}};
}

/// Every distinct weight value of the data; the default pairing set.
inline std::set<Integer> distinct_weights(const FixedPointData& d) {
  std::set<Integer> out;
  for (const auto& [w, n] : weight_counts(d)) out.insert(w);
  return out;
}

inline SuiteReport run_all(const FixedPointData& d, const std::set<Integer>& weights_to_pair) {
  SuiteReport s;
  s.reports.push_back(check_abbv(d));
  s.reports.push_back(check_weight_parity(d));
  s.reports.push_back(check_parity_dimension(d));
  s.reports.push_back(check_smallest_weights(d));
  s.reports.push_back(check_uniform_weight_balance(d));
  for (const auto& w : weights_to_pair) s.reports.push_back(check_congruence_pairing(d, w));
  const auto exact = signature_exact(d);
  s.reports.push_back(check_signature_constant(d, exact));
  s.reports.push_back(check_signature_zero_6d(d, exact));
  return s;
}

/// run_all with every weight value of the data as a pairing candidate.
inline SuiteReport run_all(const FixedPointData& d) { return run_all(d, distinct_weights(d)); }

}  // namespace circlefp
