#pragma once

// Exhaustive strict / weak equivalence search, class partitioning and counting,
// the reduced-form bound B(p, l, m), the classical count formulas, and the
// power-conjugacy criterion.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nott/character.hpp"
#include "nott/reduction.hpp"

namespace nott {

struct SearchOptions {
  /// Largest admissible search space p^m.
  std::uint64_t budget = std::uint64_t{1} << 26;
  /// Worker threads for a single scan. The result does not depend on it.
  int jobs = 1;
};

enum class Equivalence { strict, weak };

/// Scans every u = t(1 + a_1 t + ... + a_m t^m), a in F_p^m, for one with
/// char_act(u, chi) == psi (and chi(u/t) == 0 mod p when strict). Returns the
/// lexicographically smallest such (a_1, ..., a_m).
///
/// The scan walks the a_k in order and rejects a prefix as soon as a condition
/// it fully determines fails: the value at E_{m-k} depends only on a_1..a_k, and
/// the kernel digit only on a_1..a_l. Every surviving candidate is confirmed by
/// check_witness.
///
/// Characters of different type give nullopt at once. Throws BudgetExceeded if
/// p^m > options.budget and DomainError for non-surjective input.
std::optional<NottinghamElt> equivalence_search(const Character& chi, const Character& psi,
                                                Equivalence kind,
                                                const SearchOptions& options = {});

std::optional<Witness> strict_equiv_search(const Character& chi, const Character& psi,
                                           const SearchOptions& options = {});

std::optional<NottinghamElt> weak_equiv_search(const Character& chi, const Character& psi,
                                               const SearchOptions& options = {});

/// p^m, saturating.
std::uint64_t search_space_size(Prime prime, int m) noexcept;

enum class CountMethod { canonical_reduce, oracle_partition };

std::string to_string(CountMethod method);
std::string to_string(Equivalence kind);

struct ClassMember {
  ReducedForm form;
  NottinghamElt witness;  // maps the class representative to this member
};

struct ClassEntry {
  Character representative;
  std::vector<ClassMember> members;  // the representative's own form first
};

struct ClassReport {
  int p = 0;
  int l = 0;
  int m = 0;
  std::uint64_t bound = 0;
  std::uint64_t class_count = 0;
  CountMethod method = CountMethod::oracle_partition;
  Equivalence kind = Equivalence::strict;
  std::uint64_t search_space_size = 0;
  std::uint64_t searches = 0;
  std::vector<ClassEntry> classes;
  double runtime_ms = 0;
};

/// Partitions the reduced forms of type <l, m> into classes. Every strict (and
/// hence weak) class contains a reduced form, so this counts all classes of the
/// type. Forms are visited in order; each joins the first earlier class whose
/// representative reaches it, otherwise it opens a new class. Representatives
/// are therefore the smallest member of their class.
ClassReport partition_reduced_forms(Prime prime, int l, int m, const SearchOptions& options = {},
                                    Equivalence kind = Equivalence::strict);

/// canonical_reduce (l < p only) reduces every character of the type and
/// counts distinct reduced forms; oracle_partition as above.
ClassReport classify(Prime prime, int l, int m, CountMethod method,
                     const SearchOptions& options = {});

std::uint64_t count_classes(Prime prime, int l, int m, CountMethod method,
                            const SearchOptions& options = {});

struct BoundB {
  std::uint64_t value = 0;
  int k = 0;        // integers in [m-l, m-1] prime to p
  int epsilon = 0;  // 1 if p | m, else 2
};

/// Throws DomainError for an invalid type.
BoundB bound_B(Prime prime, int l, int m);

enum class LegacyCount { d_m, d_1m, d_2m_weak };

/// Classical counts over F_p: d_m = p - 1; d_{1,m}; and d^weak_{2,m}.
std::uint64_t legacy_counts(Prime prime, int m, LegacyCount which);

/// Whether u and u^n (distinct) are conjugate: n == 1 mod p and (p, l, m) != (2, l, 2l).
/// Throws DomainError for an invalid type.
bool power_conjugacy_predicate(Prime prime, int l, int m, std::int64_t n);

struct PowerConjugacy {
  bool conjugate = false;
  std::optional<Witness> witness;
};

/// Searches for a strict equivalence chi ~ n chi. Requires p !| n and n chi != chi
/// (DomainError otherwise).
PowerConjugacy power_conjugacy_oracle(const Character& chi, std::int64_t n,
                                      const SearchOptions& options = {});

}  // namespace nott
