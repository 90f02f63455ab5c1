#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

namespace uniteq {

/// Index of a binary variable. Dense within one system: a system with V
/// variables uses ids 0..V-1.
using VarId = std::uint32_t;

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : Error {
  using Error::Error;
};

/// A CNF clause does not have exactly three literals.
struct ClauseArityError : ParseError {
  using ParseError::ParseError;
};

/// A CNF literal references a variable outside 1..num_vars.
struct LiteralRangeError : ParseError {
  using ParseError::ParseError;
};

struct MalformedInputError : Error {
  using Error::Error;
};

struct UnboundVariableError : Error {
  using Error::Error;
};

struct LiftRefusedError : Error {
  using Error::Error;
};

struct SizeGuardError : Error {
  using Error::Error;
};

/// Raised for instances that are answered directly instead of reduced
/// (a subset-sum instance with no values). Carries the direct verdict.
struct DegenerateInstanceError : Error {
  DegenerateInstanceError(const std::string& msg, bool feasible_)
      : Error(msg), feasible(feasible_) {}
  bool feasible;
};

// ---------------------------------------------------------------------------
// Variable provenance
// ---------------------------------------------------------------------------

enum class VarKind {
  SelectorA,        // a_i, picks the i-th same-sign-as-target value
  SelectorB,        // b_i, picks the i-th opposite-sign value
  TargetBit,        // t_k, bit k of the common column-sum value
  CarryLhs,         // d_{i,j}, carry from bit column i to column j (left block)
  CarryRhs,         // e_{i,j}, carry from bit column i to column j (right block)
  PinnedOne,        // c_m, forced to 1 by its own equation
  Copy,             // copy of a parent variable, tied by an equation
  ClauseSlackLow,   // weight-1 slack of a clause equation
  ClauseSlackHigh,  // weight-2 slack of a clause equation
  BoolVar,          // b_i, boolean variable of a 3-SAT instance
  IlpBit,           // c_{i,j}, bit j of integer unknown x_i
};

/// Where a variable came from, with the integer indices of its family.
/// Lifting a solution back to the source instance reads only this.
struct VarProvenance {
  VarKind kind;
  std::int64_t i = 0;  // primary index (i, k, m, clause, parent id, var index)
  std::int64_t j = 0;  // secondary index (j, copy index, bit index)

  static VarProvenance selector_a(std::int64_t i) { return {VarKind::SelectorA, i, 0}; }
  static VarProvenance selector_b(std::int64_t i) { return {VarKind::SelectorB, i, 0}; }
  static VarProvenance target_bit(std::int64_t k) { return {VarKind::TargetBit, k, 0}; }
  static VarProvenance carry_lhs(std::int64_t i, std::int64_t j);
  static VarProvenance carry_rhs(std::int64_t i, std::int64_t j);
  static VarProvenance pinned_one(std::int64_t m) { return {VarKind::PinnedOne, m, 0}; }
  static VarProvenance copy_of(VarId parent, std::int64_t copy_index) {
    return {VarKind::Copy, static_cast<std::int64_t>(parent), copy_index};
  }
  static VarProvenance clause_slack_low(std::int64_t clause) {
    return {VarKind::ClauseSlackLow, clause, 0};
  }
  static VarProvenance clause_slack_high(std::int64_t clause) {
    return {VarKind::ClauseSlackHigh, clause, 0};
  }
  static VarProvenance bool_var(std::int64_t i) { return {VarKind::BoolVar, i, 0}; }
  static VarProvenance ilp_bit(std::int64_t var_index, std::int64_t bit_index) {
    return {VarKind::IlpBit, var_index, bit_index};
  }

  bool operator==(const VarProvenance&) const = default;
};

struct RegistryEntry {
  VarId id;
  VarProvenance provenance;
  std::string name;

  bool operator==(const RegistryEntry&) const = default;
};

/// Registry of every variable of a system: dense ids, unique display names.
class VariableRegistry {
 public:
  /// Registers a fresh variable and returns its id (always size()-1 after).
  /// Rejects duplicate names, carries with i >= j, and copies of unknown
  /// parents.
  VarId add(const VarProvenance& provenance, std::string name);

  std::size_t size() const { return entries_.size(); }
  const RegistryEntry& entry(VarId id) const;
  const std::vector<RegistryEntry>& entries() const { return entries_; }

  bool operator==(const VariableRegistry& other) const {
    return entries_ == other.entries_;
  }

 private:
  std::vector<RegistryEntry> entries_;
  std::unordered_set<std::string> names_;
};

// ---------------------------------------------------------------------------
// Source instances
// ---------------------------------------------------------------------------

/// SUBSET-SUM: does some subset of `values` (non-zero integers) sum to
/// `target`? The empty subset counts, so target 0 is always a YES.
struct SubsetSumInstance {
  std::vector<std::int64_t> values;
  std::int64_t target = 0;

  void validate() const;  // throws MalformedInputError on a zero value
};

struct Literal {
  int var = 0;  // 1-based
  bool negated = false;

  bool operator==(const Literal&) const = default;
};

struct ThreeSatClause {
  std::array<Literal, 3> literals;
};

/// 3-SAT instance: clauses of exactly three literals over variables 1..num_vars.
struct ThreeSatInstance {
  int num_vars = 0;
  std::vector<ThreeSatClause> clauses;

  void validate() const;
};

struct IlpRow {
  std::vector<std::int64_t> coeffs;
  std::int64_t rhs = 0;
};

/// Equality-form ILP over non-negative integer unknowns x_1..x_N, each
/// represented by bits 0..bit_width, so x_i ranges over 0..2^(bit_width+1)-1.
struct IlpInstance {
  int num_vars = 0;
  std::vector<IlpRow> rows;
  int bit_width = 0;

  void validate() const;
};

// ---------------------------------------------------------------------------
// Equations
// ---------------------------------------------------------------------------

struct WeightedTerm {
  std::int64_t coeff = 0;
  VarId var = 0;

  bool operator==(const WeightedTerm&) const = default;
};

/// Linear equation with strictly positive coefficients, signs encoded by
/// side:  sum(lhs) = sum(rhs) + rhs_const,  rhs_const >= 0.
struct WeightedEquation {
  std::vector<WeightedTerm> lhs;
  std::vector<WeightedTerm> rhs;
  std::int64_t rhs_const = 0;

  /// Builds the canonical form from a general signed layout. Merges repeated
  /// variables per side, cancels variables appearing on both sides, folds the
  /// two constants into one, and swaps the sides when the folded constant
  /// would be negative. First-appearance order of variables is preserved.
  static WeightedEquation normalized(const std::vector<WeightedTerm>& lhs_terms,
                                     std::int64_t lhs_const,
                                     const std::vector<WeightedTerm>& rhs_terms,
                                     std::int64_t rhs_const);

  bool operator==(const WeightedEquation&) const = default;
};

struct UnitTerm {
  int sign = 1;  // -1 or +1
  VarId var = 0;

  bool operator==(const UnitTerm&) const = default;
};

/// Target-form equation: sum(sign * var) + constant = 0 with every sign in
/// {-1,+1} and constant in {-1,0,1}. The constraints are enforced at
/// construction; larger constants must be expanded first (see expand.hpp).
class UnitEquation {
 public:
  UnitEquation(std::vector<UnitTerm> terms, int constant);

  const std::vector<UnitTerm>& terms() const { return terms_; }
  int constant() const { return constant_; }

  bool operator==(const UnitEquation&) const = default;

 private:
  std::vector<UnitTerm> terms_;
  int constant_;
};

/// Total 0/1 assignment over a system's variables.
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(std::size_t num_vars) : bits_(num_vars, 0) {}

  std::size_t size() const { return bits_.size(); }
  int value(VarId v) const;          // throws UnboundVariableError
  void set(VarId v, bool value);     // throws UnboundVariableError

  bool operator==(const Assignment&) const = default;

 private:
  std::vector<std::uint8_t> bits_;
};

/// A system in target form: every coefficient is -1 or +1 and every constant
/// is -1, 0, or 1, over the registered variables.
class UnitSystem {
 public:
  UnitSystem(VariableRegistry registry, std::vector<UnitEquation> equations);

  const VariableRegistry& registry() const { return registry_; }
  const std::vector<UnitEquation>& equations() const { return equations_; }

  bool operator==(const UnitSystem&) const = default;

 private:
  VariableRegistry registry_;
  std::vector<UnitEquation> equations_;
};

/// Value of sum(sign * asg(var)) + constant. Zero means satisfied.
std::int64_t evaluate_equation(const UnitEquation& eq, const Assignment& asg);

/// True iff every equation of the system evaluates to exactly zero.
/// The assignment must be total over the system's registry.
bool check_system(const UnitSystem& sys, const Assignment& asg);

}  // namespace uniteq
