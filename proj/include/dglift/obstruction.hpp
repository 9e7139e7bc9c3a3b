#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dglift/semifree_module.hpp"

namespace dglift {

enum class DeltaMode { ViaSplitting, ViaFormula };

/// Δ_N(e_λ) for every basis label, in label order.
///   ViaSplitting: σ_N ∂ ρ_N (e_λ)
///   ViaFormula:   Σ_{μ<λ} e_μ ⊗ δ(b_μλ)
std::vector<TensorJElement> delta_N(const SemifreeModule& n, DeltaMode mode = DeltaMode::ViaFormula);

/// Δ_N(Σ e_λ b_λ) = Σ Δ_N(e_λ) b_λ
TensorJElement delta_N_apply(const SemifreeModule& n, const ModuleElement& v);

/// A connection D_Γ, given by its values γ_λ = D_Γ(e_λ) on the basis.
struct Connection {
  std::vector<TensorJElement> gamma;

  /// D^B: every γ_λ is zero.
  static Connection canonical(const SemifreeModule& n);
  friend bool operator==(const Connection&, const Connection&) = default;
};

/// True iff every γ_λ is zero or homogeneous of the bidegree of e_λ.
bool has_basis_bidegrees(const SemifreeModule& n, const Connection& d);

/// D_Γ(Σ e_λ b_λ) = Σ (γ_λ b_λ + e_λ ⊗ δ(b_λ))
TensorJElement connection_eval(const SemifreeModule& n, const Connection& d, const ModuleElement& v);

/// ψ_D = ∂^{N⊗J} D - D ∂^N applied to v.
TensorJElement psi_apply(const SemifreeModule& n, const Connection& d, const ModuleElement& v);
/// ψ_D(e_λ) for every basis label.
std::vector<TensorJElement> psi_eval(const SemifreeModule& n, const Connection& d);

/// True iff ∂γ_λ = Σ_{μ<λ} (γ_μ b_μλ + e_μ ⊗ δ(b_μλ)) for every λ, with γ_λ
/// of the right bidegree. Equivalent to ψ_{D_Γ} = 0 on the basis.
bool verify_witness(const SemifreeModule& n, const Connection& gamma);

enum class Decision { Liftable, NotLiftable };
enum class Method { Trivial, Rank2Corollary, GlobalSolve };

const char* to_string(Decision d);
const char* to_string(Method m);
std::optional<Method> parse_method(const std::string& s);

/// One coordinate of a linear functional on the equation space
/// ⊕_κ (N⊗J)_{(|e_κ|-1, w_κ)}: equation κ, basis vector key.
struct FunctionalEntry {
  std::size_t equation = 0;
  TensorKey key;
  Scalar value;
  friend bool operator==(const FunctionalEntry&, const FunctionalEntry&) = default;
};

/// Proof that the γ-system has no solution: a functional y on the equations
/// that kills ψ_{D_Γ} - ψ_{D^B} for every Γ but not Δ_N.
struct Certificate {
  Method method = Method::GlobalSolve;
  std::vector<Bidegree> source_blocks;  // bidegrees of the unknowns
  std::vector<Bidegree> target_blocks;  // bidegrees of the equations
  std::vector<std::string> columns;     // unknown labels
  std::vector<std::string> rows;        // equation labels
  std::size_t rank = 0;
  std::size_t augmented_rank = 0;
  std::vector<FunctionalEntry> functional;
  Scalar pairing;  // y(Δ_N)
};

struct ObstructionReport {
  Decision decision = Decision::Liftable;
  Method method = Method::Trivial;
  std::vector<TensorJElement> obstruction;  // Δ_N(e_λ)
  std::optional<Connection> witness;        // LIFTABLE
  std::optional<Certificate> certificate;   // NOT_LIFTABLE
};

/// Decides naive liftability. Without a forced method: trivial when ∂ = 0,
/// the rank-2 boundary test for rank-2 modules, the global γ-solve otherwise.
/// Throws Error(UsageError) if the forced method does not apply.
ObstructionReport check_naive_lift(const SemifreeModule& n, std::optional<Method> force = std::nullopt);

/// Checks a certificate against the module by evaluating ψ_{D_Γ} on every
/// unit Γ; does not reuse the solver's matrix.
bool verify_certificate(const SemifreeModule& n, const Certificate& cert);

}  // namespace dglift
