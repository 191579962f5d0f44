#pragma once

// Conjugacy classes of intersections of maximal subgroups of G = R(3^n), the
// small Ree group over the field of 3^n elements (n odd, n >= 3).
//
// Each class is a (tag, h) pair with h | n. For every class the catalog knows
// the subgroup order, the order of its normaliser in G (hence the class size),
// its Möbius value, how many elements of order 2, 3, 6 and 9 it contains, and
// the table of proper overgroups K with the multiplicities ν_K(H) (the number
// of G-conjugates of K containing a fixed H).

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "reemobius/arith.hpp"
#include "reemobius/numtheory.hpp"

namespace reemobius::catalog {

enum class ClassTag {
  R,        // subfield subgroup R(3^h)
  P,        // parabolic (3^h)^{1+1+1}:(3^h-1)
  Ct,       // involution centraliser 2 x L2(3^h)
  NV,       // four-group normaliser (2^2 x D_{(3^h+1)/2}):3
  N2,       // a2(h):6
  N3,       // a3(h):6
  CV,       // four-group centraliser 2^2 x D_{(3^h+1)/2}
  DH2,      // dihedral of order 2 a2(h)
  DH3,      // dihedral of order 2 a3(h)
  CtOmega,  // point stabiliser in an involution centraliser
  F,        // elementary abelian 3^h
  C0,       // cyclic of order 3^h - 1
  Ct1,      // 2 x L2(3)
  E,        // Sylow 2-subgroup 2^3
  V,        // four-group
  C6star,
  C3star,
  C2,
  I,
};

inline constexpr std::array<ClassTag, 19> kAllTags = {
    ClassTag::R,      ClassTag::P,      ClassTag::Ct,      ClassTag::NV,
    ClassTag::N2,     ClassTag::N3,     ClassTag::CV,      ClassTag::DH2,
    ClassTag::DH3,    ClassTag::CtOmega, ClassTag::F,      ClassTag::C0,
    ClassTag::Ct1,    ClassTag::E,      ClassTag::V,       ClassTag::C6star,
    ClassTag::C3star, ClassTag::C2,     ClassTag::I,
};

/// Families with a nonzero Möbius formula, in the order they are reported.
inline constexpr std::array<ClassTag, 10> kMobiusFamilies = {
    ClassTag::R,  ClassTag::N3,      ClassTag::N2, ClassTag::P,
    ClassTag::Ct, ClassTag::CtOmega, ClassTag::NV, ClassTag::CV,
    ClassTag::Ct1, ClassTag::E,
};

inline constexpr std::array<ClassTag, 9> kZeroFamilies = {
    ClassTag::DH2,    ClassTag::DH3,    ClassTag::F,  ClassTag::C0, ClassTag::V,
    ClassTag::C6star, ClassTag::C3star, ClassTag::C2, ClassTag::I,
};

inline constexpr std::string_view tag_name(ClassTag t) {
  switch (t) {
    case ClassTag::R: return "R";
    case ClassTag::P: return "P";
    case ClassTag::Ct: return "Ct";
    case ClassTag::NV: return "NV";
    case ClassTag::N2: return "N2";
    case ClassTag::N3: return "N3";
    case ClassTag::CV: return "CV";
    case ClassTag::DH2: return "DH2";
    case ClassTag::DH3: return "DH3";
    case ClassTag::CtOmega: return "CtOmega";
    case ClassTag::F: return "F";
    case ClassTag::C0: return "C0";
    case ClassTag::Ct1: return "Ct1";
    case ClassTag::E: return "E";
    case ClassTag::V: return "V";
    case ClassTag::C6star: return "C6star";
    case ClassTag::C3star: return "C3star";
    case ClassTag::C2: return "C2";
    case ClassTag::I: return "I";
  }
  return "?";
}

inline std::optional<ClassTag> parse_tag(std::string_view name) {
  for (ClassTag t : kAllTags) {
    if (tag_name(t) == name) {
      return t;
    }
  }
  return std::nullopt;
}

inline constexpr bool is_parameterless(ClassTag t) {
  switch (t) {
    case ClassTag::Ct1:
    case ClassTag::E:
    case ClassTag::V:
    case ClassTag::C6star:
    case ClassTag::C3star:
    case ClassTag::C2:
    case ClassTag::I:
      return true;
    default:
      return false;
  }
}

inline constexpr bool in_mobius_family(ClassTag t) {
  return std::find(kMobiusFamilies.begin(), kMobiusFamilies.end(), t) !=
         kMobiusFamilies.end();
}

/// n must be odd and at least 3; R(3) itself is not simple and is excluded.
inline void require_group_n(unsigned n) {
  if (n < 3 || n % 2 == 0) {
    throw std::invalid_argument(
        "expected an odd field exponent n >= 3, got " + std::to_string(n));
  }
}

struct GroupParams {
  unsigned n = 3;
  Natural q;
  Natural order;
};

/// |R(3^h)| = q^3 (q^3 + 1)(q - 1) with q = 3^h; valid for any odd h.
inline Natural ree_order(unsigned h) {
  const Natural q = numtheory::pow3(h);
  const Natural q3 = Natural::pow(q, 3);
  return q3 * (q3 + 1) * (q - 1);
}

inline GroupParams group_params(unsigned n) {
  require_group_n(n);
  return GroupParams{n, numtheory::pow3(n), ree_order(n)};
}

inline Natural group_order(unsigned n) { return group_params(n).order; }

/// |Aut(R(3^n))| = n |R(3^n)| (field automorphisms only).
inline Natural aut_order(unsigned n) { return Natural(n) * group_order(n); }

struct ClassInstance {
  ClassTag tag = ClassTag::I;
  unsigned h = 1;

  friend bool operator==(const ClassInstance&, const ClassInstance&) = default;
  friend auto operator<=>(const ClassInstance&, const ClassInstance&) = default;

  std::string str() const {
    std::string s(tag_name(tag));
    if (!is_parameterless(tag)) {
      s += "(" + std::to_string(h) + ")";
    }
    return s;
  }
};

inline bool is_applicable(const ClassInstance& inst, unsigned n) {
  require_group_n(n);
  if (is_parameterless(inst.tag)) {
    return inst.h == n;
  }
  if (inst.h == 0 || n % inst.h != 0) {
    return false;
  }
  switch (inst.tag) {
    case ClassTag::R:
    case ClassTag::P:
    case ClassTag::N3:
      return true;
    case ClassTag::N2:
    case ClassTag::Ct:
    case ClassTag::NV:
    case ClassTag::CV:
    case ClassTag::CtOmega:
    case ClassTag::F:
    case ClassTag::C0:
      return inst.h > 1;
    case ClassTag::DH2:
      // a2(1) = 1 would make this a duplicate of C2.
      return inst.h > 1 && n % (3 * inst.h) == 0;
    case ClassTag::DH3:
      return n % (3 * inst.h) == 0;
    default:
      return false;
  }
}

inline void require_applicable(const ClassInstance& inst, unsigned n) {
  if (!is_applicable(inst, n)) {
    throw std::invalid_argument("class " + inst.str() +
                                " is not applicable at n = " +
                                std::to_string(n));
  }
}

/// Nonzero-Möbius families over divisors first, then the zero-Möbius classes.
inline std::vector<ClassInstance> class_instances(unsigned n) {
  require_group_n(n);
  std::vector<ClassInstance> out;
  auto expand = [&](ClassTag tag) {
    if (is_parameterless(tag)) {
      out.push_back({tag, n});
      return;
    }
    for (std::uint64_t h : numtheory::divisors(n)) {
      const ClassInstance inst{tag, static_cast<unsigned>(h)};
      if (is_applicable(inst, n)) {
        out.push_back(inst);
      }
    }
  };
  for (ClassTag t : kMobiusFamilies) {
    expand(t);
  }
  for (ClassTag t : kZeroFamilies) {
    expand(t);
  }
  return out;
}

inline std::string isomorphism_type(const ClassInstance& inst) {
  const std::string h = std::to_string(inst.h);
  const std::string q = "3^" + h;
  const std::string root = "3^" + std::to_string((inst.h + 1) / 2);
  switch (inst.tag) {
    case ClassTag::R: return "R(" + q + ")";
    case ClassTag::P: return "(" + q + ")^(1+1+1):(" + q + "-1)";
    case ClassTag::Ct: return "2 x L2(" + q + ")";
    case ClassTag::NV: return "(2^2 x D((" + q + "+1)/2)):3";
    case ClassTag::N2: return "(" + q + "-" + root + "+1):6";
    case ClassTag::N3: return "(" + q + "+" + root + "+1):6";
    case ClassTag::CV: return "2^2 x D((" + q + "+1)/2)";
    case ClassTag::DH2: return "D(2(" + q + "-" + root + "+1))";
    case ClassTag::DH3: return "D(2(" + q + "+" + root + "+1))";
    case ClassTag::CtOmega: return "2 x (" + q + ":(" + q + "-1)/2)";
    case ClassTag::F: return q;
    case ClassTag::C0: return "C(" + q + "-1)";
    case ClassTag::Ct1: return "2 x L2(3)";
    case ClassTag::E: return "2^3";
    case ClassTag::V: return "2^2";
    case ClassTag::C6star: return "C6";
    case ClassTag::C3star: return "C3";
    case ClassTag::C2: return "C2";
    case ClassTag::I: return "1";
  }
  return "?";
}

inline Natural subgroup_order(const ClassInstance& inst) {
  if (!is_parameterless(inst.tag)) {
    numtheory::require_odd_positive(inst.h, "subgroup_order");
  }
  const Natural q = numtheory::pow3(inst.h);
  switch (inst.tag) {
    case ClassTag::R: return ree_order(inst.h);
    case ClassTag::P: return Natural::pow(q, 3) * (q - 1);
    case ClassTag::Ct: return q * (q * q - 1);
    case ClassTag::NV: return Natural(6) * (q + 1);
    case ClassTag::N2: return Natural(6) * numtheory::hall_orders(inst.h).a2;
    case ClassTag::N3: return Natural(6) * numtheory::hall_orders(inst.h).a3;
    case ClassTag::CV: return Natural(2) * (q + 1);
    case ClassTag::DH2: return Natural(2) * numtheory::hall_orders(inst.h).a2;
    case ClassTag::DH3: return Natural(2) * numtheory::hall_orders(inst.h).a3;
    case ClassTag::CtOmega: return q * (q - 1);
    case ClassTag::F: return q;
    case ClassTag::C0: return q - 1;
    case ClassTag::Ct1: return 24;
    case ClassTag::E: return 8;
    case ClassTag::V: return 4;
    case ClassTag::C6star: return 6;
    case ClassTag::C3star: return 3;
    case ClassTag::C2: return 2;
    case ClassTag::I: return 1;
  }
  throw std::invalid_argument("subgroup_order: unknown tag");
}

/// |N_G(H)| for H in the class, G = R(3^n).
inline Natural normaliser_order(const ClassInstance& inst, unsigned n) {
  require_applicable(inst, n);
  const Natural qh = numtheory::pow3(inst.h);
  const Natural qn = numtheory::pow3(n);
  switch (inst.tag) {
    case ClassTag::CV:
      return Natural(6) * (qh + 1);
    case ClassTag::DH2:
      return Natural(24) * numtheory::hall_orders(inst.h).a2;
    case ClassTag::DH3:
      return Natural(24) * numtheory::hall_orders(inst.h).a3;
    case ClassTag::F:
      return qn * qn * (qh - 1);
    case ClassTag::C0:
      return Natural(2) * (qn - 1);
    case ClassTag::E:
      return 168;
    case ClassTag::V:
      return Natural(6) * (qn + 1);
    case ClassTag::C6star:
      return Natural(2) * qn;
    case ClassTag::C3star:
      return Natural(2) * qn * qn;
    case ClassTag::C2:
      return qn * (qn * qn - 1);
    case ClassTag::I:
      return group_order(n);
    default:
      return subgroup_order(inst);  // self-normalising
  }
}

inline Natural class_size(const ClassInstance& inst, unsigned n) {
  return Natural::exact_div(group_order(n), normaliser_order(inst, n));
}

/// μ_G(H) for H in the class.
inline int mobius_value(const ClassInstance& inst, unsigned n) {
  require_applicable(inst, n);
  const int m = numtheory::moebius(n / inst.h);
  const int mn = numtheory::moebius(n);
  switch (inst.tag) {
    case ClassTag::R: return m;
    case ClassTag::N3:
    case ClassTag::N2:
    case ClassTag::P:
    case ClassTag::Ct:
    case ClassTag::NV:
      return -m;
    case ClassTag::CtOmega: return m;
    case ClassTag::CV: return 3 * m;
    case ClassTag::Ct1: return -2 * mn;
    case ClassTag::E: return 21 * mn;
    default:
      return 0;
  }
}

inline constexpr std::array<unsigned, 4> kElementOrders = {2, 3, 6, 9};

/// Number of elements of order exactly k in a member of the class.
inline Natural element_count(const ClassInstance& inst, unsigned k) {
  if (std::find(kElementOrders.begin(), kElementOrders.end(), k) ==
      kElementOrders.end()) {
    throw std::invalid_argument("element_count: unsupported element order " +
                                std::to_string(k));
  }
  if (!is_parameterless(inst.tag)) {
    numtheory::require_odd_positive(inst.h, "element_count");
  }
  const Natural q = numtheory::pow3(inst.h);
  const Natural q2 = q * q;
  auto pick = [k](Natural c2, Natural c3, Natural c6, Natural c9) {
    switch (k) {
      case 2: return c2;
      case 3: return c3;
      case 6: return c6;
      default: return c9;
    }
  };
  switch (inst.tag) {
    case ClassTag::R: {
      const Natural q3p1 = q * q2 + 1;
      return pick(q2 * (q2 - q + 1), q3p1 * (q2 - 1), q2 * q3p1 * (q - 1),
                  q2 * q3p1 * (q - 1));
    }
    case ClassTag::N2:
    case ClassTag::N3: {
      const Natural a = numtheory::hall_orders(inst.h)[inst.tag == ClassTag::N2 ? 2 : 3];
      return pick(a, Natural(2) * a, Natural(2) * a, 0);
    }
    case ClassTag::P:
      return pick(q2, q2 - 1, q2 * (q - 1), q2 * (q - 1));
    case ClassTag::Ct:
      return pick(q2 - q + 1, q2 - 1, q2 - 1, 0);
    case ClassTag::CtOmega:
      return pick(1, q - 1, q - 1, 0);
    case ClassTag::NV:
      return pick(q + 4, Natural(2) * (q + 1), Natural(2) * (q + 1), 0);
    case ClassTag::CV:
      return pick(q + 4, 0, 0, 0);
    case ClassTag::Ct1:
      return pick(7, 8, 8, 0);
    case ClassTag::E:
      return pick(7, 0, 0, 0);
    case ClassTag::DH2:
      return pick(numtheory::hall_orders(inst.h).a2, 0, 0, 0);
    case ClassTag::DH3:
      return pick(numtheory::hall_orders(inst.h).a3, 0, 0, 0);
    case ClassTag::F:
      return pick(0, q - 1, 0, 0);
    case ClassTag::C0:
      return pick(1, 0, 0, 0);
    case ClassTag::V:
      return pick(3, 0, 0, 0);
    case ClassTag::C6star:
      return pick(1, 2, 2, 0);
    case ClassTag::C3star:
      return pick(0, 2, 0, 0);
    case ClassTag::C2:
      return pick(1, 0, 0, 0);
    case ClassTag::I:
      return 0;
  }
  throw std::invalid_argument("element_count: unknown tag");
}

struct ClassRecord {
  ClassInstance instance;
  Natural subgroup_order;
  int mobius = 0;
  Natural normaliser_order;
  Natural class_size;
  std::map<unsigned, Natural> elem_counts;
};

inline ClassRecord class_record(const ClassInstance& inst, unsigned n) {
  require_applicable(inst, n);
  ClassRecord rec;
  rec.instance = inst;
  rec.subgroup_order = subgroup_order(inst);
  rec.mobius = mobius_value(inst, n);
  rec.normaliser_order = normaliser_order(inst, n);
  rec.class_size = Natural::exact_div(group_order(n), rec.normaliser_order);
  for (unsigned k : kElementOrders) {
    rec.elem_counts.emplace(k, element_count(inst, k));
  }
  return rec;
}

/// ν_K(H) = [G:N_G(K)] N(K,H) / [G:N_G(H)], where N(K,H) is the number of
/// G-conjugates of H lying in K. Exact; callers check integrality.
inline Rational nu_count(const ClassInstance& overgroup,
                         const ClassInstance& subject,
                         const Natural& conjugates_in_overgroup, unsigned n) {
  return Rational(class_size(overgroup, n) * conjugates_in_overgroup) /
         Rational(class_size(subject, n));
}

struct OvergroupRow {
  ClassInstance overgroup;
  std::string normaliser_label;  // N_K(H), with class multiplicities
  Natural conjugates_in_overgroup;
  Natural nu;
  Natural printed_nu;  // the closed form quoted for this row
};

struct OvergroupTable {
  ClassInstance subject;
  unsigned n = 3;
  std::vector<OvergroupRow> rows;
};

namespace detail {

/// One K-conjugacy class of G-conjugates of H inside K.
struct Containment {
  unsigned multiplicity;
  Natural normaliser_in_overgroup;
  std::string label;
};

class TableBuilder {
 public:
  TableBuilder(ClassInstance subject, unsigned n)
      : table_{subject, n, {}} {}

  void add(const ClassInstance& overgroup,
           const std::vector<Containment>& classes, const Natural& printed) {
    require_applicable(overgroup, table_.n);
    const Natural order = subgroup_order(overgroup);
    Natural count = 0;
    std::string label;
    const bool split = classes.size() > 1 || classes.front().multiplicity > 1;
    for (const Containment& c : classes) {
      count += Natural(c.multiplicity) *
               Natural::exact_div(order, c.normaliser_in_overgroup);
      if (!label.empty()) {
        label += ", ";
      }
      if (split) {
        label += "(" + std::to_string(c.multiplicity) + ") ";
      }
      label += c.label;
    }
    const Rational nu = nu_count(overgroup, table_.subject, count, table_.n);
    if (!nu.is_integer() || nu.num() <= 0) {
      throw InconsistencyError("overgroup row " + overgroup.str() + " over " +
                               table_.subject.str() + ": ν = " + nu.str());
    }
    table_.rows.push_back(
        OvergroupRow{overgroup, label, count, nu.to_natural(), printed});
  }

  /// Single K-class whose normaliser in K is H itself.
  void add_self(const ClassInstance& overgroup, const Natural& printed) {
    add(overgroup,
        {{1, subgroup_order(table_.subject), isomorphism_type(table_.subject)}},
        printed);
  }

  OvergroupTable take() { return std::move(table_); }

 private:
  OvergroupTable table_;
};

inline std::vector<unsigned> multiples_dividing(unsigned h, unsigned n) {
  std::vector<unsigned> ks;
  for (std::uint64_t k : numtheory::divisors(n)) {
    if (k % h == 0) {
      ks.push_back(static_cast<unsigned>(k));
    }
  }
  return ks;
}

inline ClassInstance hall_normaliser(int routed_index, unsigned k) {
  switch (routed_index) {
    case 1: return {ClassTag::NV, k};
    case 2: return {ClassTag::N2, k};
    default: return {ClassTag::N3, k};
  }
}

}  // namespace detail

/// Proper overgroups K of H (with μ_G(K) != 0) and their multiplicities.
/// The full group R(n) has an empty table.
inline OvergroupTable overgroup_table(const ClassInstance& subject,
                                      unsigned n) {
  using detail::Containment;
  require_applicable(subject, n);
  detail::TableBuilder b(subject, n);
  const unsigned h = subject.h;
  const Natural qn = numtheory::pow3(n);
  const Natural one = 1;
  const ClassInstance ct1{ClassTag::Ct1, n};
  const ClassInstance e{ClassTag::E, n};
  auto R = [](unsigned k) { return ClassInstance{ClassTag::R, k}; };
  auto P = [](unsigned k) { return ClassInstance{ClassTag::P, k}; };
  auto Ct = [](unsigned k) { return ClassInstance{ClassTag::Ct, k}; };
  auto NV = [](unsigned k) { return ClassInstance{ClassTag::NV, k}; };
  auto CV = [](unsigned k) { return ClassInstance{ClassTag::CV, k}; };
  auto CtO = [](unsigned k) { return ClassInstance{ClassTag::CtOmega, k}; };
  auto N2 = [](unsigned k) { return ClassInstance{ClassTag::N2, k}; };
  auto N3 = [](unsigned k) { return ClassInstance{ClassTag::N3, k}; };

  const std::vector<unsigned> all_k =
      detail::multiples_dividing(is_parameterless(subject.tag) ? 1 : h, n);

  switch (subject.tag) {
    case ClassTag::R:
      for (unsigned k : all_k) {
        if (k > h) b.add_self(R(k), one);
      }
      break;

    case ClassTag::P:
    case ClassTag::Ct:
    case ClassTag::NV: {
      auto same = subject.tag == ClassTag::P    ? P
                  : subject.tag == ClassTag::Ct ? Ct
                                                : NV;
      for (unsigned k : all_k) {
        b.add_self(R(k), one);
        if (k > h) b.add_self(same(k), one);
      }
      break;
    }

    case ClassTag::N2:
    case ClassTag::N3: {
      const int index = subject.tag == ClassTag::N2 ? 2 : 3;
      for (unsigned k : all_k) {
        b.add_self(R(k), one);
        if (k > h) {
          const int target = numtheory::route_hall_divisibility(h, k).target(index);
          b.add_self(detail::hall_normaliser(target, k), one);
        }
      }
      break;
    }

    case ClassTag::CV: {
      const Containment in_nv{1, subgroup_order(NV(h)), isomorphism_type(NV(h))};
      for (unsigned k : all_k) {
        b.add(R(k), {in_nv}, one);
        b.add(NV(k), {in_nv}, one);
        b.add_self(Ct(k), 3);
        if (k > h) b.add_self(CV(k), one);
      }
      break;
    }

    case ClassTag::DH2:
    case ClassTag::DH3: {
      const int index = subject.tag == ClassTag::DH2 ? 2 : 3;
      const Natural a = numtheory::hall_orders(h)[index];
      const Containment extended{1, Natural(24) * a, "(2^2 x H):3"};
      const Containment centralised{1, Natural(8) * a, "2^2 x H"};
      const Containment twisted{1, Natural(6) * a, "H:3"};
      for (unsigned k : all_k) {
        if ((k / h) % 3 == 0) {
          b.add(R(k), {extended}, one);
          b.add(NV(k), {extended}, one);
          b.add(Ct(k), {centralised}, 3);
          b.add(CV(k), {centralised}, one);
        } else {
          const int target = numtheory::route_hall_divisibility(h, k).target(index);
          b.add(R(k), {twisted}, 4);
          b.add(detail::hall_normaliser(target, k), {twisted}, 4);
        }
      }
      break;
    }

    case ClassTag::CtOmega:
      for (unsigned k : all_k) {
        b.add_self(R(k), one);
        b.add_self(P(k), one);
        b.add_self(Ct(k), one);
        if (k > h) b.add_self(CtO(k), one);
      }
      break;

    case ClassTag::F: {
      const Natural qh = numtheory::pow3(h);
      for (unsigned k : all_k) {
        const Natural qk = numtheory::pow3(k);
        const Containment borel{1, qk * qk * (qh - 1), "3^(2k):(3^h-1)"};
        const Containment in_ct{1, qk * (qh - 1), "2 x (3^k:(3^h-1)/2)"};
        const Natural same_field = numtheory::pow3(2 * (n - k));
        const Natural mixed = numtheory::pow3(2 * n - k);
        b.add(R(k), {borel}, same_field);
        b.add(P(k), {borel}, same_field);
        b.add(Ct(k), {in_ct}, mixed);
        b.add(CtO(k), {in_ct}, mixed);
      }
      break;
    }

    case ClassTag::C0:
      for (unsigned k : all_k) {
        const Natural qk1 = numtheory::pow3(k) - 1;
        const Containment dihedral{1, Natural(2) * qk1, "D(2(3^k-1))"};
        const Containment cyclic{1, qk1, "C(3^k-1)"};
        b.add(R(k), {dihedral}, one);
        b.add(Ct(k), {dihedral}, one);
        b.add(P(k), {cyclic}, 2);
        b.add(CtO(k), {cyclic}, 2);
      }
      break;

    case ClassTag::Ct1: {
      const Containment self{1, 24, "2 x L2(3)"};
      for (unsigned k : all_k) {
        b.add(R(k), {self}, one);
        if (k > 1) {
          b.add(Ct(k), {self}, one);
          b.add(NV(k), {self}, one);
        }
      }
      break;
    }

    case ClassTag::E: {
      const Containment sylow_normaliser{1, 168, "2^3:7:3"};
      const Containment in_ct1{1, 24, "2 x L2(3)"};
      const Containment self{1, 8, "2^3"};
      for (unsigned k : all_k) {
        b.add(R(k), {sylow_normaliser}, one);
        if (k > 1) {
          b.add(Ct(k), {in_ct1}, 7);
          b.add(NV(k), {in_ct1}, 7);
        }
      }
      b.add(ct1, {in_ct1}, 7);
      for (unsigned k : all_k) {
        if (k > 1) b.add(CV(k), {self}, 7);
      }
      break;
    }

    case ClassTag::V: {
      const Natural qn1 = qn + 1;
      const Containment e8{1, 8, "2^3"};
      const Containment l23{1, 24, "2 x L2(3)"};
      for (unsigned k : all_k) {
        const Natural qk1 = numtheory::pow3(k) + 1;
        const Natural ratio = Natural::exact_div(qn1, qk1);
        const Containment four_normaliser{1, Natural(6) * qk1,
                                          "(2^2 x D((3^k+1)/2)):3"};
        const Containment four_centraliser{1, Natural(2) * qk1,
                                           "2^2 x D((3^k+1)/2)"};
        b.add(R(k), {four_normaliser}, ratio);
        if (k > 1) {
          b.add(NV(k), {four_normaliser}, ratio);
          b.add(CV(k), {four_centraliser}, ratio);
          b.add(Ct(k), {four_centraliser}, Natural(3) * ratio);
        }
      }
      for (unsigned k : all_k) {
        if (k == 1) continue;
        const Natural three_halves = Natural::exact_div(Natural(3) * qn1, 2);
        b.add(NV(k), {{2, 8, "2^3"}}, three_halves);
        b.add(CV(k), {{6, 8, "2^3"}}, three_halves);
        b.add(Ct(k), {e8, l23}, qn1);
      }
      b.add(ct1, {{2, 8, "2^3"}, l23}, Natural::exact_div(Natural(7) * qn1, 4));
      b.add(e, {{7, 8, "2^3"}}, Natural::exact_div(qn1, 4));
      break;
    }

    case ClassTag::C6star:
    case ClassTag::C3star: {
      const bool six = subject.tag == ClassTag::C6star;
      const Containment c6{1, 6, "6"};
      for (unsigned k : all_k) {
        const Natural qk = numtheory::pow3(k);
        const Natural near = six ? numtheory::pow3(n - k)
                                 : numtheory::pow3(2 * (n - k));
        const Natural far = six ? numtheory::pow3(n - k)
                                : numtheory::pow3(2 * n - k);
        const Containment in_p =
            six ? Containment{1, Natural(2) * qk, "2 x 3^k"}
                : Containment{1, Natural(2) * qk * qk, "3^k x (3^k:2)"};
        const Containment in_ct{1, Natural(2) * qk, "2 x 3^k"};
        b.add(R(k), {in_p}, near);
        b.add(P(k), {in_p}, near);
        if (k > 1) {
          b.add(Ct(k), {in_ct}, far);
          b.add(CtO(k), {in_ct}, far);
        }
      }
      const Natural hall = six ? numtheory::pow3(n - 1)
                               : numtheory::pow3(2 * n - 1);
      for (unsigned k : all_k) {
        b.add(N3(k), {c6}, hall);
        if (k > 1) {
          b.add(N2(k), {c6}, hall);
          b.add(NV(k), {c6}, hall);
        }
      }
      b.add(ct1, {c6}, hall);
      break;
    }

    case ClassTag::C2: {
      const Natural base = qn * (qn * qn - 1);      // 3^n (3^(2n) - 1)
      const Natural third = Natural::exact_div(base, 3);
      const Containment c6{1, 6, "6"};
      for (unsigned k : all_k) {
        const Natural qk = numtheory::pow3(k);
        const Natural ct_order = qk * (qk * qk - 1);
        const Natural cto_order = qk * (qk - 1);
        const Containment in_ct{1, ct_order, "2 x L2(3^k)"};
        const Containment in_p{1, cto_order, "2 x (3^k:(3^k-1)/2)"};
        b.add(R(k), {in_ct}, Natural::exact_div(base, ct_order));
        if (k > 1) b.add(Ct(k), {in_ct}, Natural::exact_div(base, ct_order));
        b.add(P(k), {in_p}, Natural::exact_div(base, cto_order));
        if (k > 1) b.add(CtO(k), {in_p}, Natural::exact_div(base, cto_order));
      }
      for (unsigned k : all_k) {
        if (k == 1) continue;
        const Natural qk1 = numtheory::pow3(k) + 1;
        const std::string cv_label = "2^2 x D((3^k+1)/2)";
        const Natural half = Natural::exact_div(base, Natural(2) * qk1);
        b.add(NV(k), {{1, Natural(2) * qk1, cv_label}}, half);
        b.add(CV(k), {{3, Natural(2) * qk1, cv_label}}, half);
        b.add(Ct(k), {{2, Natural(2) * qk1, cv_label}},
              Natural::exact_div(base, qk1));
      }
      const Natural hall = Natural::exact_div(third, 2);
      for (unsigned k : all_k) {
        b.add(N3(k), {c6}, hall);
        if (k > 1) b.add(N2(k), {c6}, hall);
      }
      for (unsigned k : all_k) {
        if (k == 1) continue;
        b.add(NV(k), {{1, 8, "2^3"}, {1, 24, "2 x L2(3)"}}, hall);
        b.add(CV(k), {{4, 8, "2^3"}}, hall);
      }
      b.add(ct1, {{2, 8, "2^3"}, {1, 24, "2 x L2(3)"}},
            Natural::exact_div(Natural(7) * third, 8));
      b.add(e, {{7, 8, "2^3"}}, Natural::exact_div(third, 8));
      break;
    }

    case ClassTag::I:
      for (const ClassInstance& k : class_instances(n)) {
        if (!in_mobius_family(k.tag)) continue;
        b.add(k, {{1, subgroup_order(k), "1"}}, class_size(k, n));
      }
      break;
  }
  return b.take();
}

}  // namespace reemobius::catalog
