#pragma once

// Hall's Möbius inversion over the Ree catalog.
//
// For a presentation Γ whose homomorphisms into H are tuples of elements with
// prescribed orders, σ_Γ(H) counts such tuples and
//   φ_Γ(G) = Σ_{H ≤ G} μ_G(H) σ_Γ(H) = Σ_classes class_size · μ_G · σ_Γ
// counts the ones that generate G. Dividing by |Aut(G)| gives d_Γ(G), the
// number of normal subgroups of Γ with quotient G.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "reemobius/arith.hpp"
#include "reemobius/numtheory.hpp"
#include "reemobius/ree_catalog.hpp"
#include "reemobius/target.hpp"

namespace reemobius::inversion {

using catalog::ClassInstance;

/// Number of elements of order exactly `order` in a member of the class;
/// order 0 stands for "any element" and returns |H|.
inline Natural order_count(const ClassInstance& inst, unsigned order) {
  return order == 0 ? catalog::subgroup_order(inst)
                    : catalog::element_count(inst, order);
}

inline Natural sigma(TargetGroup target, const ClassInstance& inst) {
  Natural s = 1;
  for (unsigned order : target_orders(target)) {
    s *= order_count(inst, order);
  }
  return s;
}

/// Σ class_size · μ_G · sigma(inst) over the classes with μ_G != 0.
template <class Sigma>
Integer hall_sum(unsigned n, Sigma&& sigma_of) {
  Integer total = 0;
  for (const ClassInstance& inst : catalog::class_instances(n)) {
    const int mu = catalog::mobius_value(inst, n);
    if (mu == 0) {
      continue;
    }
    const Natural term = catalog::class_size(inst, n) * sigma_of(inst);
    total += Integer(mu) * term.value();
  }
  return total;
}

inline Natural phi_class_sum(TargetGroup target, unsigned n) {
  const Integer total =
      hall_sum(n, [target](const ClassInstance& h) { return sigma(target, h); });
  if (total < 0) {
    throw InconsistencyError("phi_class_sum: negative count for " +
                             std::string(target_id(target)));
  }
  return Natural(total);
}

/// The summand f(l) of the closed form φ = |G| Σ_{l | n} μ(n/l) f(l), as
/// printed for each target.
inline Integer closed_form_summand(TargetGroup target, unsigned l) {
  const Integer q = numtheory::pow3(l).value();
  const Integer q2 = q * q;
  const Integer q3 = q2 * q;
  const Integer q4 = q3 * q;
  const Integer q5 = q4 * q;
  const Integer q6 = q5 * q;
  switch (target) {
    case TargetGroup::F2: return (q - 1) * (q6 - q2 - 16);
    case TargetGroup::FreeProd2Inf: return (q - 1) * (q3 - q - 2);
    case TargetGroup::FreeProd3Inf: return (q - 1) * (q4 - q3 - q - 4);
    case TargetGroup::FreeProd6Inf: return (q - 1) * (q5 - q - 6);
    case TargetGroup::FreeProd9Inf: return q5 * (q - 1);
    case TargetGroup::TripleInvolution: return (q - 1) * (q4 - q3 + 2 * q2 - 1);
    case TargetGroup::C3C3: return q * (q2 + q - 4);
    case TargetGroup::Hecke3: return (q - 1) * (q - 1);
    case TargetGroup::Hecke6: return q * (q2 - q - 2);
    case TargetGroup::Hecke9: return q2 * (q - 1);
  }
  throw std::invalid_argument("closed_form_summand: unknown target");
}

inline Integer divisor_sum(unsigned n, TargetGroup target) {
  Integer s = 0;
  for (std::uint64_t l : numtheory::divisors(n)) {
    s += numtheory::moebius(n / l) *
         closed_form_summand(target, static_cast<unsigned>(l));
  }
  return s;
}

/// Literal evaluation of the printed closed form; may disagree with the
/// class-sum when the printed formula is wrong.
inline Integer phi_closed_form(TargetGroup target, unsigned n) {
  return catalog::group_order(n).value() * divisor_sum(n, target);
}

/// Targets whose d count is part of the core results.
inline bool is_core_d_target(TargetGroup t) {
  return t == TargetGroup::F2 || t == TargetGroup::Hecke3;
}

inline Natural d_count(TargetGroup target, unsigned n,
                       bool allow_extended = false) {
  if (!is_core_d_target(target) && !allow_extended) {
    throw std::invalid_argument("d_count: target " +
                                std::string(target_id(target)) +
                                " needs allow_extended");
  }
  return Natural::exact_div(phi_class_sum(target, n), catalog::aut_order(n));
}

struct EpiCountReport {
  TargetGroup target = TargetGroup::F2;
  unsigned n = 3;
  Natural phi_class_sum;
  Integer phi_closed_form;
  std::optional<Natural> d;
  bool extended = false;  // d given for a target outside the core pair
  bool agree = false;
};

inline EpiCountReport epi_count_report(TargetGroup target, unsigned n,
                                       bool with_d) {
  EpiCountReport r;
  r.target = target;
  r.n = n;
  r.phi_class_sum = phi_class_sum(target, n);
  r.phi_closed_form = phi_closed_form(target, n);
  r.agree = r.phi_class_sum.value() == r.phi_closed_form;
  if (with_d) {
    r.d = Natural::exact_div(r.phi_class_sum, catalog::aut_order(n));
    r.extended = !is_core_d_target(target);
  }
  return r;
}

/// Which generation probability to compute. Orders use 0 for ∞.
struct ProbabilitySpec {
  std::vector<unsigned> orders;

  bool triple_involutions() const {
    return orders == std::vector<unsigned>{2, 2, 2};
  }

  /// Accepts "a,b" with a, b in {2, 3, 6, 9, inf} or "2,2,2".
  static ProbabilitySpec parse(std::string_view text) {
    ProbabilitySpec spec;
    std::size_t start = 0;
    while (start <= text.size()) {
      const std::size_t comma = std::min(text.find(',', start), text.size());
      const std::string_view item = text.substr(start, comma - start);
      if (item == "inf") {
        spec.orders.push_back(0);
      } else if (item == "2" || item == "3" || item == "6" || item == "9") {
        spec.orders.push_back(static_cast<unsigned>(item[0] - '0'));
      } else {
        throw std::invalid_argument("probability spec: bad entry '" +
                                    std::string(item) + "' in '" +
                                    std::string(text) + "'");
      }
      start = comma + 1;
    }
    if (spec.orders.size() != 2 && !spec.triple_involutions()) {
      throw std::invalid_argument("probability spec: expected a,b or 2,2,2");
    }
    return spec;
  }

  std::string str() const {
    std::string s;
    for (unsigned o : orders) {
      if (!s.empty()) s += ",";
      s += o == 0 ? "inf" : std::to_string(o);
    }
    return s;
  }
};

/// Probability that independent uniform elements of the given orders
/// generate G: φ / Π c_a(G), with c_∞(G) = |G|.
inline Rational generation_probability(const ProbabilitySpec& spec,
                                       unsigned n) {
  const ClassInstance whole{catalog::ClassTag::R, n};
  catalog::require_group_n(n);
  Natural denominator = 1;
  for (unsigned o : spec.orders) {
    denominator *= order_count(whole, o);
  }
  const Integer numerator = hall_sum(n, [&spec](const ClassInstance& h) {
    Natural s = 1;
    for (unsigned o : spec.orders) s *= order_count(h, o);
    return s;
  });
  return Rational(numerator, denominator.value());
}

/// P_{2,3} through the expression 3^n Σ μ(n/l)(3^l − 1)^2 / (3^{3n} + 1).
inline Rational p23_closed_form(unsigned n) {
  catalog::require_group_n(n);
  const Natural qn = numtheory::pow3(n);
  return Rational(qn.value() * divisor_sum(n, TargetGroup::Hecke3),
                  (Natural::pow(qn, 3) + 1).value());
}

/// μ_G(H) + Σ ν_K(H) μ_G(K) over proper overgroups; must be 0, or 1 for G.
inline Integer defining_relation_sum(const ClassInstance& inst, unsigned n) {
  Integer s = catalog::mobius_value(inst, n);
  for (const auto& row : catalog::overgroup_table(inst, n).rows) {
    s += Integer(catalog::mobius_value(row.overgroup, n)) * row.nu.value();
  }
  return s;
}

inline bool verify_defining_relation(const ClassInstance& inst, unsigned n) {
  const bool whole = inst == ClassInstance{catalog::ClassTag::R, n};
  return defining_relation_sum(inst, n) == (whole ? 1 : 0);
}

/// 1 + Σ class_size · μ_G over the proper classes with μ_G != 0.
inline Integer trivial_mobius_value(unsigned n) {
  const ClassInstance whole{catalog::ClassTag::R, n};
  Integer s = 1;
  for (const ClassInstance& inst : catalog::class_instances(n)) {
    if (inst == whole) continue;
    s += Integer(catalog::mobius_value(inst, n)) *
         catalog::class_size(inst, n).value();
  }
  return s;
}

inline bool verify_trivial_mobius(unsigned n) {
  return trivial_mobius_value(n) == 0;
}

struct CorollaryCheck {
  TargetGroup target = TargetGroup::F2;
  Natural class_sum;
  Integer closed_form;
  Integer discrepancy;  // class_sum − closed_form
  bool agree = false;
};

struct CorollaryReport {
  unsigned n = 3;
  std::vector<CorollaryCheck> checks;

  /// Only an f2 or hecke3 mismatch counts as a failure.
  bool core_agree() const {
    for (const auto& c : checks) {
      if (is_core_d_target(c.target) && !c.agree) return false;
    }
    return true;
  }
  bool all_agree() const {
    for (const auto& c : checks) {
      if (!c.agree) return false;
    }
    return true;
  }
};

inline CorollaryReport cross_check_corollaries(unsigned n) {
  CorollaryReport report{n, {}};
  for (TargetGroup t : kAllTargets) {
    CorollaryCheck c;
    c.target = t;
    c.class_sum = phi_class_sum(t, n);
    c.closed_form = phi_closed_form(t, n);
    c.discrepancy = c.class_sum.value() - c.closed_form;
    c.agree = c.discrepancy == 0;
    report.checks.push_back(std::move(c));
  }
  return report;
}

}  // namespace reemobius::inversion
