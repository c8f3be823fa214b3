// Copyright 2026 The qcorr Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file resource_calc.hpp
 * A small formal algebra of resource inequalities.
 *
 * Terms are rated resources: qubit channels [q->q], cbit channels [c->c],
 * ebits [qq], and opaque tagged states <tag>. An inequality states that
 * the left side can simulate the right side, either asymptotically (>=)
 * or exactly (>=!). Composition adds two inequalities (the second
 * optionally scaled) and cancels resources appearing on both sides,
 * rate-wise; state resources match by tag only, their semantics are not
 * modeled.
 *
 * Text grammar, whitespace insensitive:
 *
 *   inequality := side ('>=' | '>=!') side
 *   side       := '0' | term ('+' term)*
 *   term       := rate unit | rate? '<' tag '>'
 *   unit       := '[q->q]' | '[c->c]' | '[qq]'
 *   rate       := nonnegative decimal number
 *   tag        := one or more characters other than '>'
 */

#ifndef QCORR_RESOURCE_CALC_HPP
#define QCORR_RESOURCE_CALC_HPP

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "qcorr/entropy.hpp"
#include "qcorr/states.hpp"

namespace qcorr {

enum class ResourceKind { QubitChannel, CbitChannel, Ebit, StateResource };

struct ResourceTerm {
  ResourceKind kind = ResourceKind::QubitChannel;
  double rate = 0.0;
  std::string state_tag;  ///< nonempty exactly when kind == StateResource

  friend bool operator==(const ResourceTerm& a, const ResourceTerm& b) {
    return a.kind == b.kind && a.rate == b.rate && a.state_tag == b.state_tag;
  }
};

enum class InequalityStrength { Asymptotic, Exact };

struct ResourceInequality {
  std::vector<ResourceTerm> lhs;
  std::vector<ResourceTerm> rhs;
  InequalityStrength strength = InequalityStrength::Asymptotic;

  friend bool operator==(const ResourceInequality& a, const ResourceInequality& b) {
    return a.strength == b.strength && a.lhs == b.lhs && a.rhs == b.rhs;
  }
};

namespace detail {

inline std::string kind_unit(ResourceKind k) {
  switch (k) {
    case ResourceKind::QubitChannel: return "[q->q]";
    case ResourceKind::CbitChannel: return "[c->c]";
    case ResourceKind::Ebit: return "[qq]";
    case ResourceKind::StateResource: return "<>";
  }
  return "?";
}

/// Canonical term order: channels before ebits before states, then by tag.
inline bool term_less(const ResourceTerm& a, const ResourceTerm& b) {
  if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
  return a.state_tag < b.state_tag;
}

/// Aggregate duplicate (kind, tag) keys and drop zero-rate terms.
inline std::vector<ResourceTerm> normalize_side(const std::vector<ResourceTerm>& terms) {
  std::map<std::pair<int, std::string>, double> acc;
  for (const ResourceTerm& t : terms) {
    if (t.rate < 0.0)
      throw ValidationError("resource term: negative rate " + std::to_string(t.rate));
    if ((t.kind == ResourceKind::StateResource) != !t.state_tag.empty())
      throw ValidationError("resource term: state tags belong to state resources only");
    acc[{static_cast<int>(t.kind), t.state_tag}] += t.rate;
  }
  std::vector<ResourceTerm> out;
  for (const auto& [key, rate] : acc) {
    if (rate == 0.0) continue;
    out.push_back({static_cast<ResourceKind>(key.first), rate, key.second});
  }
  std::sort(out.begin(), out.end(), term_less);
  return out;
}

}  // namespace detail

/// Sum of lhs rates minus sum of rhs rates for one resource kind;
/// the net consumption of that resource (negative: net yield).
inline double net_rate(const ResourceInequality& ineq, ResourceKind kind) {
  double net = 0.0;
  for (const ResourceTerm& t : ineq.lhs)
    if (t.kind == kind) net += t.rate;
  for (const ResourceTerm& t : ineq.rhs)
    if (t.kind == kind) net -= t.rate;
  return net;
}

/**
 * Add two inequalities, scaling the second by `scale_b` (nonnegative),
 * then cancel the common rate of every (kind, tag) key appearing on both
 * sides. Exact strength survives only when both inputs are exact.
 */
inline ResourceInequality compose(const ResourceInequality& a, const ResourceInequality& b,
                                  double scale_b = 1.0) {
  if (scale_b < 0.0)
    throw ValidationError("compose: scale factor " + std::to_string(scale_b) + " is negative");
  std::vector<ResourceTerm> lhs = a.lhs;
  std::vector<ResourceTerm> rhs = a.rhs;
  for (ResourceTerm t : b.lhs) {
    t.rate *= scale_b;
    lhs.push_back(std::move(t));
  }
  for (ResourceTerm t : b.rhs) {
    t.rate *= scale_b;
    rhs.push_back(std::move(t));
  }
  lhs = detail::normalize_side(lhs);
  rhs = detail::normalize_side(rhs);

  std::vector<ResourceTerm> lhs_out, rhs_out;
  for (ResourceTerm& l : lhs) {
    auto r = std::find_if(rhs.begin(), rhs.end(), [&l](const ResourceTerm& t) {
      return t.kind == l.kind && t.state_tag == l.state_tag;
    });
    if (r != rhs.end()) {
      const double common = std::min(l.rate, r->rate);
      l.rate -= common;
      r->rate -= common;
      if (l.rate < 0.0 || r->rate < 0.0)
        throw ValidationError("compose: cancellation produced a negative rate");
    }
    if (l.rate > 0.0) lhs_out.push_back(l);
  }
  for (const ResourceTerm& r : rhs)
    if (r.rate > 0.0) rhs_out.push_back(r);

  ResourceInequality out;
  out.lhs = std::move(lhs_out);
  out.rhs = std::move(rhs_out);
  out.strength = (a.strength == InequalityStrength::Exact &&
                  b.strength == InequalityStrength::Exact)
                     ? InequalityStrength::Exact
                     : InequalityStrength::Asymptotic;
  return out;
}

// ---------------------------------------------------------------------------
// Text format
// ---------------------------------------------------------------------------

inline std::string print_inequality(const ResourceInequality& ineq) {
  auto print_rate = [](double r) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", r);
    return std::string(buf);
  };
  auto print_side = [&](const std::vector<ResourceTerm>& side) {
    if (side.empty()) return std::string("0");
    std::string out;
    for (std::size_t i = 0; i < side.size(); ++i) {
      if (i) out += " + ";
      const ResourceTerm& t = side[i];
      if (t.kind == ResourceKind::StateResource) {
        if (t.rate != 1.0) out += print_rate(t.rate) + " ";
        out += "<" + t.state_tag + ">";
      } else {
        out += print_rate(t.rate) + " " + detail::kind_unit(t.kind);
      }
    }
    return out;
  };
  const char* rel = ineq.strength == InequalityStrength::Exact ? ">=!" : ">=";
  return print_side(detail::normalize_side(ineq.lhs)) + " " + rel + " " +
         print_side(detail::normalize_side(ineq.rhs));
}

namespace detail {

class InequalityParser {
 public:
  explicit InequalityParser(const std::string& text) : text_(text) {}

  ResourceInequality parse() {
    ResourceInequality out;
    out.lhs = parse_side();
    skip_ws();
    if (!match(">=")) fail("expected '>=' or '>=!'");
    out.strength = match("!") ? InequalityStrength::Exact : InequalityStrength::Asymptotic;
    out.rhs = parse_side();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input after inequality");
    out.lhs = normalize_side(out.lhs);
    out.rhs = normalize_side(out.rhs);
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ValidationError("inequality parse error at position " + std::to_string(pos_) + ": " +
                          msg);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool match(const std::string& lit) {
    if (text_.compare(pos_, lit.size(), lit) == 0) {
      pos_ += lit.size();
      return true;
    }
    return false;
  }

  bool peek_relation() {
    return text_.compare(pos_, 2, ">=") == 0;
  }

  double parse_rate() {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '-') fail("negative rate");
    const char* begin = text_.c_str() + pos_;
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin) fail("expected a number");
    pos_ += static_cast<std::size_t>(end - begin);
    return v;
  }

  ResourceTerm parse_state(double rate) {
    // opening '<' already consumed
    const std::size_t close = text_.find('>', pos_);
    if (close == std::string::npos) fail("unterminated state tag");
    if (close == pos_) fail("empty state tag");
    ResourceTerm t;
    t.kind = ResourceKind::StateResource;
    t.rate = rate;
    t.state_tag = text_.substr(pos_, close - pos_);
    pos_ = close + 1;
    return t;
  }

  std::vector<ResourceTerm> parse_side() {
    std::vector<ResourceTerm> terms;
    while (true) {
      skip_ws();
      if (pos_ >= text_.size()) fail("expected a term");
      if (match("<")) {
        terms.push_back(parse_state(1.0));
      } else {
        const std::size_t rate_pos = pos_;
        const double rate = parse_rate();
        skip_ws();
        if (match("<")) {
          terms.push_back(parse_state(rate));
        } else if (match("[q->q]")) {
          terms.push_back({ResourceKind::QubitChannel, rate, ""});
        } else if (match("[c->c]")) {
          terms.push_back({ResourceKind::CbitChannel, rate, ""});
        } else if (match("[qq]")) {
          terms.push_back({ResourceKind::Ebit, rate, ""});
        } else if (rate == 0.0 && (pos_ >= text_.size() || peek_relation())) {
          // bare '0': the empty side
        } else {
          pos_ = rate_pos;
          fail("expected '[q->q]', '[c->c]', '[qq]', or '<tag>' after the rate");
        }
      }
      skip_ws();
      if (!match("+")) break;
    }
    return terms;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parse the documented inequality grammar; round-trips through
/// print_inequality.
inline ResourceInequality parse_inequality(const std::string& text) {
  return detail::InequalityParser(text).parse();
}

// ---------------------------------------------------------------------------
// Concrete derivations
// ---------------------------------------------------------------------------

/// State-transfer tags used by the derivation printers. Opaque: they only
/// ever match against themselves.
inline constexpr const char* kFqswInputTag = "W:S_to_AB:Psi_S";
inline constexpr const char* kFqswOutputTag = "id:S_to_Bhat:Psi_S";

/// Mother/FQSW inequality instantiated with the entropies of a pure
/// tripartite state: transfer plus 1/2 I(A:R) qubit channels simulates
/// the transferred state plus 1/2 I(A:B) ebits.
inline ResourceInequality fqsw_inequality(const PureState& psi) {
  const DensityMatrix rho = from_pure(psi);
  if (psi.layout().factor_count() != 3 || !psi.layout().has_label("A") ||
      !psi.layout().has_label("B") || !psi.layout().has_label("R"))
    throw ValidationError("fqsw_inequality: expected a pure state on factors A, B, R");
  // Mutual informations are nonnegative; anything this small is eigensolver
  // noise and must not survive as a phantom resource term.
  const auto snap = [](double rate) { return std::abs(rate) < 1e-12 ? 0.0 : rate; };
  const double i_ar =
      snap(correlation_report(rho.reduced({"A", "R"}), {"A"}, {"R"}).mutual_info);
  const double i_ab =
      snap(correlation_report(rho.reduced({"A", "B"}), {"A"}, {"B"}).mutual_info);
  ResourceInequality out;
  out.lhs = detail::normalize_side({{ResourceKind::StateResource, 1.0, kFqswInputTag},
                                    {ResourceKind::QubitChannel, 0.5 * i_ar, ""}});
  out.rhs = detail::normalize_side({{ResourceKind::Ebit, 0.5 * i_ab, ""},
                                    {ResourceKind::StateResource, 1.0, kFqswOutputTag}});
  out.strength = InequalityStrength::Asymptotic;
  return out;
}

/// One ebit plus two cbit channels exactly simulate one qubit channel.
inline ResourceInequality teleportation_inequality() {
  ResourceInequality out;
  out.lhs = {{ResourceKind::CbitChannel, 2.0, ""}, {ResourceKind::Ebit, 1.0, ""}};
  out.rhs = {{ResourceKind::QubitChannel, 1.0, ""}};
  out.strength = InequalityStrength::Exact;
  out.lhs = detail::normalize_side(out.lhs);
  out.rhs = detail::normalize_side(out.rhs);
  return out;
}

/**
 * State merging derived by composition: instantiate the FQSW inequality
 * on psi, then spend all 1/2 I(A:B) produced ebits on teleportation. The
 * ebits cancel; the net qubit rate is 1/2 I(A:R) - 1/2 I(A:B) = S(A|B)
 * and the classical rate is I(A:B).
 */
inline ResourceInequality derive_qsm(const PureState& psi) {
  const ResourceInequality fqsw = fqsw_inequality(psi);
  double ebit_yield = 0.0;
  for (const ResourceTerm& t : fqsw.rhs)
    if (t.kind == ResourceKind::Ebit) ebit_yield += t.rate;
  return compose(fqsw, teleportation_inequality(), ebit_yield);
}

}  // namespace qcorr

#endif  // QCORR_RESOURCE_CALC_HPP
