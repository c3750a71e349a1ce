#include "nott/reduction.hpp"

#include <stdexcept>

#include "nott/errors.hpp"

namespace nott {

namespace {

int kernel_of(const Character& chi, const NottinghamElt& u) {
  return char_eval(chi, u.unit().truncated(chi.bound()));
}

// s(t) = t * f1^e1 * f2^e2 at precision m.
NottinghamElt step_element(const UnitSeries& f1, std::int64_t e1, const UnitSeries& f2,
                           std::int64_t e2) {
  return NottinghamElt(unit_pow(f1, e1) * unit_pow(f2, e2));
}

}  // namespace

Witness make_witness(const Character& chi, NottinghamElt u) {
  const int kernel = kernel_of(chi, u);
  if (!chi.prime().divides(kernel)) {
    throw DomainError("witness violates the kernel condition: chi(u/t) = " + std::to_string(kernel));
  }
  return Witness{std::move(u), kernel};
}

bool is_stage_one(const Character& chi) {
  const int l = break_sequence(chi).l;
  for (int i = 1; i < l; ++i) {
    if (!chi.prime().divides(chi.coeff(i))) return false;
  }
  return true;
}

ReductionStep reduce_mod_p(const Character& chi) {
  const auto [l, m] = break_sequence(chi);
  const Prime& prime = chi.prime();
  const int x_l = prime.reduce(chi.coeff(l));
  const int inv_x_l = prime.inverse(x_l);

  Character current = chi;
  NottinghamElt u = NottinghamElt::identity(prime, m);
  // Top-down: the step at i only moves unit digits at positions below i.
  for (int i = l - 1; i >= 1; --i) {
    if (prime.divides(i)) continue;
    const int x_i = prime.reduce(current.coeff(i));
    if (x_i == 0) continue;
    // Solve x_i + i c x_l == 0 (mod p).
    const int c = prime.reduce(-std::int64_t{x_i} * prime.inverse(std::int64_t{i} * x_l));
    std::vector<int> tail(static_cast<std::size_t>(m), 0);
    tail[static_cast<std::size_t>(l - i - 1)] = c;
    const UnitSeries g(prime, tail);
    // Compensate with E_l^f so that current(s/t) == 0 (mod p).
    const int f = prime.reduce(-std::int64_t{char_eval(current, g)} * inv_x_l);
    const NottinghamElt s = step_element(g, 1, UnitSeries::basis(prime, l, m), f);
    current = char_act(s, current);
    u = nott_compose(s, u);
  }
  return {std::move(current), make_witness(chi, std::move(u))};
}

ReductionStep clear_low_p_part(const Character& chi) {
  const auto [l, m] = break_sequence(chi);
  if (!is_stage_one(chi)) {
    throw DomainError("clear_low_p_part: " + chi.text() + " has unit digits below l = " +
                      std::to_string(l));
  }
  const Prime& prime = chi.prime();
  const int p = prime.value();
  const UnitSeries e_m = UnitSeries::basis(prime, m, m);

  Character current = chi;
  NottinghamElt u = NottinghamElt::identity(prime, m);
  for (int j = 1; j <= m - l - 1; ++j) {
    const int target = m - l - j;
    if (prime.divides(target)) continue;
    // p b_m = chi(E_m); nonzero both for p !| m and for m = l p.
    const int chi_m = char_eval(current, e_m);
    const int b_m = chi_m / p;
    const int b_target = current.coeff(target) / p;
    if (b_target == 0) continue;
    // b_target + d * target * b_m == 0 (mod p).
    const int d = prime.reduce(-std::int64_t{b_target} * prime.inverse(std::int64_t{target} * b_m));
    // d chi(E_{l+j}) + e chi(E_m) == 0 (mod p^2).
    const UnitSeries e_lj = UnitSeries::basis(prime, l + j, m);
    const int h = char_eval(current, e_lj) / p;
    const int e = prime.reduce(-std::int64_t{d} * h * prime.inverse(b_m));
    const NottinghamElt s = step_element(e_lj, d, e_m, e);
    current = char_act(s, current);
    u = nott_compose(s, u);
  }
  return {std::move(current), make_witness(chi, std::move(u))};
}

Reduction reduce(const Character& chi) {
  ReductionStep first = reduce_mod_p(chi);
  ReductionStep second = clear_low_p_part(first.character);
  NottinghamElt u = nott_compose(second.witness.u, first.witness.u);
  auto form = ReducedForm::from_character(second.character);
  if (!form) {
    throw std::logic_error("reduction of " + chi.text() + " ended at non-reduced " +
                           second.character.text());
  }
  return {std::move(*form), make_witness(chi, std::move(u))};
}

WitnessCheck check_witness(const Character& chi, const Character& psi, const NottinghamElt& u) {
  if (chi.prime() != psi.prime() || chi.prime() != u.prime()) return WitnessCheck::incompatible;
  if (u.precision() < chi.bound()) return WitnessCheck::incompatible;
  if (char_act(u, chi) != psi) return WitnessCheck::action_mismatch;
  if (!chi.prime().divides(kernel_of(chi, u))) return WitnessCheck::kernel_violation;
  return WitnessCheck::ok;
}

std::string to_string(WitnessCheck c) {
  switch (c) {
    case WitnessCheck::ok: return "ok";
    case WitnessCheck::incompatible: return "incompatible";
    case WitnessCheck::action_mismatch: return "action-mismatch";
    case WitnessCheck::kernel_violation: return "kernel-violation";
  }
  return "unknown";
}

}  // namespace nott
