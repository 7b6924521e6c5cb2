#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "xi/causality.hpp"
#include "xi/liealg.hpp"

namespace xi {

enum class Verification { computed, reference_only };

std::string to_string(Verification v);

/// Outcome of matching a stabilizer against named candidates.
struct Identification {
    std::string name = "unidentified";
    std::vector<std::string> matches;  // every candidate with the same invariants
    bool ambiguous = false;
    bool used_module = false;  // decided by the commutant of the defining module
};

struct BoundaryComponent {
    RationalVector representative;
    std::size_t orbit_size = 0;
    SpectrumReport spectrum;
    bool symmetric = false;
    bool totally_real = false;
    std::optional<Fingerprint> fingerprint;  // of h; absent for reference-only rows
    std::string h_name = "unidentified";
    Verification verification = Verification::computed;
    std::vector<CheckResult> checks;

    bool identified() const { return h_name != "unidentified"; }
    bool ok() const;
};

struct RestrictedSystem {
    std::string label;  // e.g. "B2", "BC1"
    std::string family;
    int rank = 0;
    std::vector<std::pair<Rational, std::size_t>> multiplicities;  // (|a|^2, m), ascending
};

struct Classification {
    std::string algebra;
    RestrictedSystem system;
    std::string polytope;  // constraint system of the polytope
    bool xi0 = false;
    std::vector<BoundaryComponent> components;
    std::vector<CheckResult> checks;  // realization-level checks
    std::string caveat;

    /// All checks pass and every component is identified.
    bool ok() const;
};

/// Identifies a subalgebra h of a realization. Candidates whose structure
/// invariants agree but which are not isomorphic as embedded algebras are
/// separated by the signature of the commutant of h on the defining module.
/// Among several matches the candidate at position prefer is shown.
Identification identify_real_form(const LieAlgebra& h, const std::vector<ComplexMatrix>& h_matrices,
                                  const std::vector<std::string>& candidates, std::size_t prefer = 0);

/// Boundary of the crown: every extreme orbit with its stabilizer algebra.
/// Accepts the classical names of build_classical, e6(6), e7(7), e6C, e7C,
/// and e6(-26), e7(-25) as reference-only.
Classification classify_boundary(std::string_view name);

/// The same pipeline on the polytope of doubly restricted roots.
Classification classify_xi0_boundary(std::string_view name);

/// The realization used by classify_boundary (not for reference-only names).
Realization realize(std::string_view name);

}  // namespace xi
