#include "pfam/family.hpp"

#include <algorithm>

namespace pfam {

struct FamilyExpr::Node {
  Op op;
  MonomialIdeal ideal = MonomialIdeal::zero(1);
  std::vector<MonomialIdeal> entries;
  std::shared_ptr<const Node> arg;
  int level = 0;
  std::vector<Factor> factors;
  std::optional<int> base_b;
  int dim = 1;
};

namespace {

void require_e(int e) {
  if (e < 0) throw error(errc::validation, "family index e must be nonnegative");
}

void require_p(long p) {
  if (!is_prime(p)) throw error(errc::validation, "p must be a prime >= 2");
}

}  // namespace

FamilyExpr FamilyExpr::frobenius(MonomialIdeal I) {
  auto n = std::make_shared<Node>();
  n->op = Op::frobenius;
  n->dim = I.dim();
  n->ideal = std::move(I);
  return FamilyExpr(n);
}

FamilyExpr FamilyExpr::ordinary_power(MonomialIdeal I) {
  auto n = std::make_shared<Node>();
  n->op = Op::ordinary_power;
  n->dim = I.dim();
  n->ideal = std::move(I);
  return FamilyExpr(n);
}

FamilyExpr FamilyExpr::closed_power(MonomialIdeal I) {
  if (I.is_zero())
    throw error(errc::validation, "closed-power family of the zero ideal");
  auto n = std::make_shared<Node>();
  n->op = Op::closed_power;
  n->dim = I.dim();
  n->ideal = std::move(I);
  return FamilyExpr(n);
}

FamilyExpr FamilyExpr::constant(MonomialIdeal I) {
  auto n = std::make_shared<Node>();
  n->op = Op::constant;
  n->dim = I.dim();
  n->ideal = std::move(I);
  return FamilyExpr(n);
}

FamilyExpr FamilyExpr::table(std::vector<MonomialIdeal> entries) {
  if (entries.empty()) throw error(errc::validation, "table family needs at least one entry");
  auto n = std::make_shared<Node>();
  n->op = Op::table;
  n->dim = entries.front().dim();
  for (const MonomialIdeal& I : entries)
    if (I.dim() != n->dim) throw error(errc::validation, "table entries of mixed dimension");
  n->entries = std::move(entries);
  return FamilyExpr(n);
}

FamilyExpr FamilyExpr::truncation(FamilyExpr F, int a) {
  if (a < 0) throw error(errc::validation, "truncation level must be nonnegative");
  auto n = std::make_shared<Node>();
  n->op = Op::truncation;
  n->dim = F.dim();
  n->arg = F.node_;
  n->level = a;
  return FamilyExpr(n);
}

FamilyExpr FamilyExpr::shifted_product(std::vector<Factor> factors, std::optional<int> base_b) {
  if (factors.empty())
    throw error(errc::validation, "shifted product needs at least one factor");
  auto n = std::make_shared<Node>();
  n->op = Op::shifted_product;
  n->dim = factors.front().family.dim();
  for (const Factor& f : factors) {
    if (f.family.dim() != n->dim)
      throw error(errc::validation, "shifted product factors of mixed dimension");
    if (f.shift < 0) throw error(errc::validation, "shifts must be nonnegative");
  }
  if (base_b && *base_b < 0) throw error(errc::validation, "frobenius base must be nonnegative");
  n->factors = std::move(factors);
  n->base_b = base_b;
  return FamilyExpr(n);
}

FamilyExpr::Op FamilyExpr::op() const { return node_->op; }
int FamilyExpr::dim() const { return node_->dim; }
const MonomialIdeal& FamilyExpr::ideal() const { return node_->ideal; }
const std::vector<MonomialIdeal>& FamilyExpr::entries() const { return node_->entries; }
FamilyExpr FamilyExpr::arg() const { return FamilyExpr(node_->arg); }
int FamilyExpr::truncation_level() const { return node_->level; }
const std::vector<FamilyExpr::Factor>& FamilyExpr::factors() const { return node_->factors; }
std::optional<int> FamilyExpr::base() const { return node_->base_b; }

std::optional<int> FamilyExpr::finite_type_hint() const {
  switch (node_->op) {
    case Op::frobenius:
    case Op::constant:
      return 0;
    case Op::table:
      return static_cast<int>(node_->entries.size()) - 1;
    case Op::truncation:
      return node_->level;
    case Op::shifted_product: {
      if (node_->base_b) return 0;  // frobenius powers of a fixed ideal
      int worst = 0;
      for (const Factor& f : node_->factors) {
        auto h = f.family.finite_type_hint();
        if (!h) return std::nullopt;
        worst = std::max(worst, *h - f.shift);
      }
      return worst;
    }
    default:
      return std::nullopt;
  }
}

MonomialIdeal evaluate(const FamilyExpr& F, int e, long p) {
  require_e(e);
  require_p(p);
  const Int q = pow_int(p, static_cast<unsigned long>(e));
  switch (F.op()) {
    case FamilyExpr::Op::frobenius:
      return frobenius_power(F.ideal(), q);
    case FamilyExpr::Op::ordinary_power:
      return ordinary_power(F.ideal(), q);
    case FamilyExpr::Op::closed_power:
      return integral_closure(ordinary_power(F.ideal(), q));
    case FamilyExpr::Op::constant:
      return F.ideal();
    case FamilyExpr::Op::table: {
      const auto& entries = F.entries();
      if (e < static_cast<int>(entries.size())) return entries[static_cast<std::size_t>(e)];
      int last = static_cast<int>(entries.size()) - 1;
      return frobenius_power(entries.back(), pow_int(p, static_cast<unsigned long>(e - last)));
    }
    case FamilyExpr::Op::truncation: {
      const FamilyExpr G = F.arg();
      const int a = F.truncation_level();
      if (e <= a) return evaluate(G, e, p);
      MonomialIdeal acc = MonomialIdeal::zero(F.dim());
      for (int t = 0; t <= a; ++t) {
        MonomialIdeal term =
            frobenius_power(evaluate(G, t, p), pow_int(p, static_cast<unsigned long>(e - t)));
        acc = sum(acc, term);
      }
      return acc;
    }
    case FamilyExpr::Op::shifted_product: {
      MonomialIdeal acc = MonomialIdeal::unit(F.dim());
      for (const FamilyExpr::Factor& f : F.factors()) {
        MonomialIdeal term =
            F.base() ? frobenius_power(evaluate(f.family, *F.base(), p),
                                       pow_int(p, static_cast<unsigned long>(e + f.shift)))
                     : evaluate(f.family, e + f.shift, p);
        acc = product(acc, term);
      }
      return acc;
    }
  }
  throw error(errc::validation, "unknown family operator");
}

FamilyExpr truncate(const FamilyExpr& F, int a) { return FamilyExpr::truncation(F, a); }

FamilyReport verify_family_axioms(const FamilyExpr& F, int e_max, long p) {
  if (e_max < 1) throw error(errc::validation, "e_max must be >= 1");
  require_p(p);
  FamilyReport report;
  report.checked_up_to = e_max;
  std::vector<MonomialIdeal> at;
  at.reserve(static_cast<std::size_t>(e_max) + 1);
  for (int e = 0; e <= e_max; ++e) at.push_back(evaluate(F, e, p));

  for (int e = 0; e < e_max; ++e) {
    const MonomialIdeal& next = at[static_cast<std::size_t>(e) + 1];
    if (report.p_family_ok) {
      MonomialIdeal frob = frobenius_power(at[static_cast<std::size_t>(e)], p);
      for (const Exponent& g : frob.gens())
        if (!next.contains(g)) {
          report.p_family_ok = false;
          report.p_family_witness = AxiomWitness{e, g};
          break;
        }
    }
    if (report.condition_41_ok) {
      MonomialIdeal pow = ordinary_power(at[static_cast<std::size_t>(e)], p);
      for (const Exponent& g : pow.gens())
        if (!next.contains(g)) {
          report.condition_41_ok = false;
          report.condition_41_witness = AxiomWitness{e, g};
          break;
        }
    }
  }

  for (int a = 0; a <= e_max; ++a) {
    bool stable = true;
    for (int e = 1; a + e <= e_max && stable; ++e) {
      MonomialIdeal frob = frobenius_power(at[static_cast<std::size_t>(a)],
                                           pow_int(p, static_cast<unsigned long>(e)));
      stable = frob == at[static_cast<std::size_t>(a + e)];
    }
    if (stable) {
      report.finite_type_threshold = a;
      break;
    }
  }
  return report;
}

std::optional<long> linear_growth_constant(const FamilyExpr& Jfam, const FamilyExpr& Ifam,
                                           long c_max, int e_max, long p) {
  require_p(p);
  if (Jfam.dim() != Ifam.dim()) throw error(errc::validation, "dimension mismatch");
  if (c_max < 1 || e_max < 0) throw error(errc::validation, "bad linear-growth search bounds");
  const int d = Jfam.dim();
  std::vector<MonomialIdeal> J, I;
  for (int e = 0; e <= e_max; ++e) {
    J.push_back(evaluate(Jfam, e, p));
    I.push_back(evaluate(Ifam, e, p));
    if (!J.back().contains(I.back()))
      throw error(errc::precondition,
                  "I_q is not contained in J_q at e=" + std::to_string(e));
  }
  const MonomialIdeal m = MonomialIdeal::maximal(d);
  for (long c = 1; c <= c_max; ++c) {
    bool ok = true;
    for (int e = 0; e <= e_max && ok; ++e) {
      Int cq = Int(c) * pow_int(p, static_cast<unsigned long>(e));
      MonomialIdeal mcq = ordinary_power(m, cq);
      ok = intersection(mcq, J[static_cast<std::size_t>(e)]) ==
           intersection(mcq, I[static_cast<std::size_t>(e)]);
    }
    if (ok) return c;
  }
  return std::nullopt;
}

}  // namespace pfam
