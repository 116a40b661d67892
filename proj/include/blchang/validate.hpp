#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "blchang/algebra.hpp"

namespace blchang {

struct ValidationConfig {
    /// Triples drawn when the carrier is infinite.
    std::size_t budget = 1000;
    std::uint64_t seed = 1;
};

struct AxiomCheck {
    std::string id;
    std::string statement;
    bool applicable = true;
    std::size_t cases = 0;
    std::size_t failures = 0;
    /// First failing triple (x, y, z), empty on success.
    std::vector<Elt> witness;

    bool passed() const { return failures == 0; }
};

struct ValidationReport {
    std::string algebra;
    bool exhaustive = false;
    std::uint64_t seed = 0;
    std::size_t triples = 0;
    std::vector<AxiomCheck> checks;

    bool ok() const;
    const AxiomCheck* first_failure() const;
    /// One line per axiom group; witnesses rendered through `a`.
    std::string render(const Algebra& a) const;
};

/// Checks the hoop laws, boundedness, prelinearity, residuation, the lattice
/// laws for the derived meet and join, and the standard BL identity groups
/// (1)-(12). Finite carriers are checked on every triple; infinite ones on
/// `config.budget` seeded random triples. Failures are report content, never
/// exceptions. Identities involving negation are skipped for unbounded hoops.
ValidationReport validate_bl_axioms(const Algebra& a, const ValidationConfig& config = {});

} // namespace blchang
