// Copyright 2026 The dilator Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Composition T o S, the isomorphism zeta between D^T(D^S_X) and
// D^{T o S}_X, morphisms of prae-dilators with their extensions and lifts,
// and upper derivatives.
//
// (T o S)_n is D^T(S_n): its tokens are (ext (set s0 s1 ...) tau) with the
// s_i members of S_n, ascending under S_n.

#ifndef DILATOR_COMPOSE_HPP_
#define DILATOR_COMPOSE_HPP_

#include <cstddef>
#include <functional>
#include <string>

#include "dilator/extension.hpp"
#include "dilator/praedil.hpp"
#include "dilator/report.hpp"

namespace dilator {

Dilator Compose(const Dilator& outer, const Dilator& inner);

// s is a term of `outer` over D^{inner}_X: its support consists of
// (ext ...) tokens of `inner` over X. DomainError on invalid input.
ExtTerm Zeta(const PraeDilator& outer, const PraeDilator& inner, const LinearOrder& x,
             const ExtTerm& s);
// Skips validation.
ExtTerm ZetaUnchecked(const PraeDilator& outer, const PraeDilator& inner, const LinearOrder& x,
                      const ExtTerm& s);
ExtTerm ZetaInverse(const PraeDilator& outer, const PraeDilator& inner, const LinearOrder& x,
                    const ExtTerm& s);

// A natural family of embeddings source_n -> target_n.
struct Morphism {
  std::string name;
  Dilator source;
  Dilator target;
  std::function<Token(std::size_t n, const Token& sigma)> component;
};

Morphism IdentityMorphism(const Dilator& t);

// Order embedding, naturality over all f : n -> m (m <= max_n), the
// Cartesian support identity and, when both ends are normal,
// compatibility with mu.
SuiteReport CheckMorphism(const Morphism& nu, std::size_t max_n, std::size_t bound);
// supp(nu(sigma)) == supp(sigma) only.
SuiteReport CheckCartesian(const Morphism& nu, std::size_t max_n, std::size_t bound);

// A morphism that passed CheckMorphism up to (max_n, bound).
class CertifiedMorphism {
 public:
  const Morphism& morphism() const { return nu_; }
  std::size_t max_n() const { return max_n_; }
  std::size_t bound() const { return bound_; }

 private:
  friend CertifiedMorphism CertifyMorphism(Morphism nu, std::size_t max_n, std::size_t bound);
  CertifiedMorphism(Morphism nu, std::size_t max_n, std::size_t bound)
      : nu_(std::move(nu)), max_n_(max_n), bound_(bound) {}

  Morphism nu_;
  std::size_t max_n_;
  std::size_t bound_;
};

// Throws ContractError carrying the report summary when checks fail.
CertifiedMorphism CertifyMorphism(Morphism nu, std::size_t max_n, std::size_t bound);

// D^nu_X <a, sigma> = <a, nu_{|a|}(sigma)>.
ExtTerm ExtMorphism(const CertifiedMorphism& nu, const LinearOrder& x, const ExtTerm& s);
ExtTerm ExtMorphismUnchecked(const Morphism& nu, const ExtTerm& s);

// T(nu) : T o S1 => T o S2, componentwise D^T(nu_n).
Morphism Lift(const Dilator& outer, const CertifiedMorphism& nu);
Morphism LiftUnchecked(const Dilator& outer, const Morphism& nu);

// A normal S with xi : T o S => S.
struct UpperDerivative {
  Dilator base;       // T
  Dilator target;     // S
  Dilator composite;  // T o S
  Morphism xi;
};

UpperDerivative MakeUpperDerivative(const Dilator& base, const Dilator& target,
                                    std::function<Token(std::size_t, const Token&)> xi,
                                    std::string name);

// Both ends normal, xi a morphism of normal prae-dilators, and at every
// finite X = k <= max_n the identity
//   D^xi o zeta o D^{mu^T}_{D^S_X} o D^{mu^S}_X = D^{mu^S}_X.
SuiteReport CheckUpperDerivative(const UpperDerivative& u, std::size_t max_n, std::size_t bound);

class CertifiedUpperDerivative {
 public:
  const UpperDerivative& get() const { return u_; }
  const Dilator& base() const { return u_.base; }
  const Dilator& target() const { return u_.target; }
  std::size_t max_n() const { return max_n_; }
  std::size_t bound() const { return bound_; }

 private:
  friend CertifiedUpperDerivative CertifyUpperDerivative(UpperDerivative u, std::size_t max_n,
                                                         std::size_t bound);
  CertifiedUpperDerivative(UpperDerivative u, std::size_t max_n, std::size_t bound)
      : u_(std::move(u)), max_n_(max_n), bound_(bound) {}

  UpperDerivative u_;
  std::size_t max_n_;
  std::size_t bound_;
};

CertifiedUpperDerivative CertifyUpperDerivative(UpperDerivative u, std::size_t max_n,
                                                std::size_t bound);

// nu : S1 => S2 between upper derivatives of the same T is a morphism of
// normal prae-dilators with nu o xi1 == xi2 o T(nu).
SuiteReport CheckUpperDerivativeMorphism(const UpperDerivative& from, const UpperDerivative& to,
                                         const Morphism& nu, std::size_t max_n, std::size_t bound);

// The integers-below-n upper derivative of the segment dilator: xi sends
// <{m}, 0> to m and <{(z p)}, 0> to (z p+1).
UpperDerivative ZPlusUpperDerivative();

}  // namespace dilator

#endif  // DILATOR_COMPOSE_HPP_
