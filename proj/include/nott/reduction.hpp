#pragma once

// Constructive reduction of a type-<l,m> character to reduced form, with a
// group element certifying the strict equivalence.
//
// Witness convention: if u1 acts first and then u2, the combined witness is
// w(t) = u2(u1(t)), i.e. nott_compose(u2, u1). This is forced by
//   char_act(u2, char_act(u1, chi)) == char_act(nott_compose(u2, u1), chi).

#include <optional>
#include <string>

#include "nott/character.hpp"
#include "nott/series.hpp"

namespace nott {

/// u certifies chi ~ char_act(u, chi) strictly: chi(u/t) == 0 mod p.
struct Witness {
  NottinghamElt u;
  int kernel_value = 0;  // chi(u/t) mod p^2 for the source character
};

struct ReductionStep {
  Character character;
  Witness witness;
};

struct Reduction {
  ReducedForm form;
  Witness witness;
};

/// Stage 1: kills the unit digits below l. The result has unit part x_l Z_l only.
/// Throws DomainError for a non-surjective character.
ReductionStep reduce_mod_p(const Character& chi);

/// Stage 2: clears the p-part below m - l. Input must be in stage-1 form
/// (no unit digits below l); throws DomainError otherwise.
ReductionStep clear_low_p_part(const Character& chi);

/// Both stages. The result is reduced and the witness maps chi to it.
Reduction reduce(const Character& chi);

/// True if chi has no unit digit below its l.
bool is_stage_one(const Character& chi);

enum class WitnessCheck {
  ok,
  incompatible,      // primes differ or u is too short
  action_mismatch,   // char_act(u, chi) != psi
  kernel_violation,  // chi(u/t) != 0 mod p
};

WitnessCheck check_witness(const Character& chi, const Character& psi, const NottinghamElt& u);

inline bool verify_witness(const Character& chi, const Character& psi, const NottinghamElt& u) {
  return check_witness(chi, psi, u) == WitnessCheck::ok;
}

std::string to_string(WitnessCheck c);

/// Builds a Witness for chi, caching chi(u/t). Throws DomainError if the
/// kernel condition fails.
Witness make_witness(const Character& chi, NottinghamElt u);

}  // namespace nott
