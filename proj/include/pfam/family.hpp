#ifndef PFAM_FAMILY_HPP
#define PFAM_FAMILY_HPP

#include "pfam/monomial_ideal.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace pfam {

/// Symbolic rule q = p^e -> ideal. Immutable; evaluation is a pure function
/// of (expr, e, p).
class FamilyExpr {
public:
  enum class Op {
    frobenius,       // I_q = I^[q]
    ordinary_power,  // I_q = I^q
    closed_power,    // I_q = closure(I^q)
    constant,        // I_q = I
    table,           // explicit entries, extended by Frobenius from the last
    truncation,      // p^a-th truncated family of the argument
    shifted_product  // prod_i F_i at q*p^{shift_i}, live or at a frozen base b
  };

  struct Factor {
    FamilyExpr family;
    int shift = 0;
  };

  static FamilyExpr frobenius(MonomialIdeal I);
  static FamilyExpr ordinary_power(MonomialIdeal I);
  static FamilyExpr closed_power(MonomialIdeal I);
  static FamilyExpr constant(MonomialIdeal I);
  static FamilyExpr table(std::vector<MonomialIdeal> entries);
  static FamilyExpr truncation(FamilyExpr F, int a);
  static FamilyExpr shifted_product(std::vector<Factor> factors, std::optional<int> base_b);

  Op op() const;
  int dim() const;
  /// Leaf payload (frobenius/ordinary_power/closed_power/constant).
  const MonomialIdeal& ideal() const;
  const std::vector<MonomialIdeal>& entries() const;  // table
  FamilyExpr arg() const;                             // truncation
  int truncation_level() const;                       // truncation
  const std::vector<Factor>& factors() const;         // shifted_product
  std::optional<int> base() const;                    // shifted_product; nullopt = live

  /// Upper bound a with I_{p^a}^[p^e] = I_{p^{a+e}} guaranteed by construction,
  /// when one is known.
  std::optional<int> finite_type_hint() const;

private:
  struct Node;
  explicit FamilyExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct AxiomWitness {
  int e = 0;          // failing step: containment from index p^e into p^{e+1}
  Exponent monomial;  // generator witnessing the failure
};

/// Horizon-bounded axiom report: the flags refer only to e <= checked_up_to.
struct FamilyReport {
  bool p_family_ok = true;
  bool condition_41_ok = true;
  std::optional<int> finite_type_threshold;
  int checked_up_to = 0;
  std::optional<AxiomWitness> p_family_witness;
  std::optional<AxiomWitness> condition_41_witness;
};

/// The ideal at index q = p^e.
MonomialIdeal evaluate(const FamilyExpr& F, int e, long p);

/// The p^a-th truncated family, evaluating through the closed form
/// J_1^[p^e] + J_p^[p^{e-1}] + ... + J_{p^a}^[p^{e-a}] for e > a.
FamilyExpr truncate(const FamilyExpr& F, int a);

FamilyReport verify_family_axioms(const FamilyExpr& F, int e_max, long p);

/// Smallest c in [1, c_max] with m^{cq} ∩ J_q = m^{cq} ∩ I_q for all
/// q = p^e, e <= e_max; nullopt if none. Errors if I is not contained in J
/// somewhere on the horizon.
std::optional<long> linear_growth_constant(const FamilyExpr& Jfam, const FamilyExpr& Ifam,
                                           long c_max, int e_max, long p);

}  // namespace pfam

#endif
