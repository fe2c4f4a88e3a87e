// Infinite groups presented as normal forms with an indexed family of
// finite quotient stages.
//
// A scheduled group carries an element model (multiply / invert / equality
// on normal-form records) and, for each stage index, a finite image with
// computable operations plus a projection that is a homomorphism (spot
// checked on 1000 seeded random pairs when a stage is first built). Stages
// are indexed by a strictly increasing schedule parameter (the modulus m);
// the stage orders themselves need not be monotone in m.
//
// Normal forms are flat integer records interpreted per family:
//   integers          [v]
//   lattice Z^n x| Z  [v_1 .. v_n, k]
//   BS(1,2)           [p, q, k]    representing (p / 2^q, k), lowest terms
//   finite group      [index]
//   product A x B     concat of the two records
//
// Large stages of congruence type are presented arithmetically (vectors mod
// m with a matrix action) rather than as multiplication tables: products of
// schedules reach orders far past any sensible dense-table budget, and the
// certifier only ever needs mul/inv/identity plus element codes.

#ifndef NESTSEP_SCHEDULE_HPP_
#define NESTSEP_SCHEDULE_HPP_

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <string>
#include <vector>

#include "nestsep/group.hpp"

namespace nestsep {

using Word = std::vector<std::int64_t>;
using Code = std::uint64_t;  // element code within a stage, 0 .. order-1

class StageGroup {
 public:
  virtual ~StageGroup() = default;
  virtual std::uint64_t order() const = 0;
  virtual Code identity() const = 0;
  virtual Code mul(Code a, Code b) const = 0;
  virtual Code inv(Code a) const = 0;
  virtual std::string describe() const = 0;
};
using StageRef = std::shared_ptr<const StageGroup>;

class ScheduledGroup {
 public:
  virtual ~ScheduledGroup() = default;

  virtual std::string name() const = 0;
  virtual std::size_t word_size() const = 0;
  virtual Word identity() const = 0;
  virtual Word mul(const Word& a, const Word& b) const = 0;
  virtual Word inv(const Word& a) const = 0;
  bool eq(const Word& a, const Word& b) const { return a == b; }

  virtual std::vector<Word> generators() const = 0;
  virtual Word sample_word(std::mt19937_64& rng) const = 0;

  virtual std::size_t stage_count() const = 0;  // SIZE_MAX when unbounded
  virtual Code project(std::size_t index, const Word& w) const = 0;
  virtual std::string stage_params(std::size_t index) const = 0;

  // Builds (or returns the cached) stage and runs the homomorphy spot check
  // on first construction.
  StageRef stage(std::size_t index) const;

  virtual std::string format(const Word& w) const = 0;
  virtual Word parse(const std::string& text) const = 0;

  // Non-null exactly for finite one-stage schedules.
  virtual GroupRef finite_group() const { return nullptr; }

  std::vector<Code> stage_generator_codes(std::size_t index) const;

 protected:
  virtual StageRef build_stage(std::size_t index) const = 0;

 private:
  mutable std::mutex cache_mutex_;
  mutable std::map<std::size_t, StageRef> stage_cache_;
};
using SchedRef = std::shared_ptr<const ScheduledGroup>;

// The per-stage projection homomorphy check on `pairs` seeded random word
// pairs; throws on failure. stage() runs this automatically once per stage.
void check_stage_homomorphy(const ScheduledGroup& sg, std::size_t index, int pairs = 1000);

// Z with stages Z/m, m = 2, 3, 4, ...
SchedRef integer_schedule();

// Z^n x| Z for an integer matrix A with |det A| = 1 (NotUnimodular
// otherwise); (v1,k1)(v2,k2) = (v1 + A^{k1} v2, k1 + k2). Stage m >= 2 is
// (Z/m)^n x| C_e with e the multiplicative order of A mod m.
SchedRef lattice_semidirect_schedule(const std::vector<std::vector<std::int64_t>>& a);

// BS(1,2) as pairs (dyadic a, integer k) with
// (a1,k1)(a2,k2) = (a1 + 2^{k1} a2, k1+k2). Stages run over odd m >= 3
// only, so that 2 is invertible and the relation t a t^-1 = a^2 survives
// into C_m x| C_e with e the order of 2 mod m.
SchedRef bs12_schedule();

// A finite group as a one-stage schedule (projection is the identity).
SchedRef finite_schedule(const GroupRef& g);

// Componentwise product; stage i is the product of the factors' stage i,
// so the stage count is the minimum of the two.
SchedRef product_schedule(const SchedRef& a, const SchedRef& b);

// Multiplicative order of an integer matrix mod m (identity included as
// power 0); the returned list holds A^0 .. A^{e-1} reduced mod m.
struct ModularPowers {
  std::int64_t modulus;
  std::int64_t order;                              // e
  std::vector<std::vector<std::int64_t>> powers;   // flattened n x n matrices
};
ModularPowers matrix_powers_mod(const std::vector<std::vector<std::int64_t>>& a, std::int64_t m);

}  // namespace nestsep

#endif  // NESTSEP_SCHEDULE_HPP_
