#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cs/serialize.hpp"

namespace cs {

/// Result of one verification check. `statement` says in words which fact
/// was verified; `params` records the inputs (orders, sample counts, seed,
/// tolerance) and `metrics` the measured quantities, so a report is
/// reproducible and self-describing.
struct CheckReport {
    std::string checkId;
    std::string statement;
    Json params;
    Json metrics;
    bool pass = false;
};

/// {"version": 1, "checkId": ..., "statement": ..., "params": {...},
///  "metrics": {...}, "pass": ...} with deterministic key order.
Json report_to_json(const CheckReport& r);

/// Options shared by all checks. Zero means "use the check's default";
/// `d` restricts a check to a single qudit order where the check supports
/// it. Randomized sweeps derive per-sample RNG streams from `seed` via
/// split_seed, so results are independent of evaluation order.
struct CheckOptions {
    std::uint64_t seed = 7;
    int samples = 0;
    double tol = 0;
    int d = 0;
};

/// Rewrite-engine soundness: normalize idempotence, random-order
/// confluence, and the closed-loop values.
std::vector<CheckReport> check_engine(const CheckOptions& opt);

/// String Fourier transform on diagonal 2-boxes: the transform of each
/// minimal projection, and the step-by-step rewrite replay of the
/// derivation.
std::vector<CheckReport> check_sft(const CheckOptions& opt);

/// Diagram-to-matrix dictionary: composition/adjoint homomorphism, Pauli
/// relations, and the exact resolution of the identity.
std::vector<CheckReport> check_gates(const CheckOptions& opt);

/// Fourier-analytic inequalities on the spin-model (diagonal) 2-boxes:
/// which selects "hy", "schur", "entropy", "uncertainty", or "all".
std::vector<CheckReport> check_qfa(const CheckOptions& opt,
                                   const std::string& which = "all");

/// Reflection positivity: certificate chains, the reflection-pairing
/// identity, and the decomposed-Hamiltonian variant.
std::vector<CheckReport> check_rp(const CheckOptions& opt);

/// Quon states: physical subspace, GHZ/Max contractions, reductions, and
/// the minimal/maximal Fourier-dual entropy pair.
std::vector<CheckReport> check_states(const CheckOptions& opt);

/// Parafermion braids: generator relations, charge transport, braid-group
/// relations, and product-state invariance.
std::vector<CheckReport> check_braids(const CheckOptions& opt);

/// 6j self-duality for the pointed cyclic categories (and Fibonacci when
/// built).
std::vector<CheckReport> check_sixj(const CheckOptions& opt);

/// Every check above, sorted by (checkId, params) for order-independent
/// emission.
std::vector<CheckReport> check_all(const CheckOptions& opt);

/// Serializes a report list one JSON object per line (the report-stream
/// format; byte-stable for fixed options).
std::string reports_to_lines(const std::vector<CheckReport>& reports);

}  // namespace cs
