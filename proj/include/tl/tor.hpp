#pragma once

#include <string>
#include <vector>

#include "tl/davis.hpp"

namespace tl {

/// A left TL-module of finite free rank, given by one action matrix per
/// diagram basis element. action[identity] is the identity matrix.
struct LeftModuleData {
    std::size_t rank = 0;
    std::vector<SparseMatrix> action;
};

LeftModuleData trivial_module(const DiagramAlgebra& algebra, const RingSpec& ring);
LeftModuleData cup_module(const DiagramAlgebra& algebra, const InnermostSet& F,
                          const RingSpec& ring);

struct DegreeHomology {
    int degree = 0;
    ModulePresentation presentation;
    bool truncated = false;  // the degree lacks its incoming differential
};

struct TorResult {
    int strands = 0;
    std::string method;        // "bar" or "davis"
    int truncation_degree = 0;  // last reliable degree
    bool budget_limited = false;
    std::vector<DegreeHomology> homology;

    const ModulePresentation& at(int degree) const;
};

struct BarOptions {
    int max_degree = 3;
    std::size_t budget = 50000000;  // cap on nonzero entries per differential
};

/// The truncated reduced-bar Tor complex C_k = TLhat^{(x)k} (x) N in degrees
/// 0..top_degree, with the alternating-merge differential.
FreeChainComplex build_bar_complex(const DiagramAlgebra& algebra, const RingSpec& ring,
                                   const LeftModuleData& N, int top_degree);

/// H_*(TL, N) from the reduced bar resolution, truncated at
/// options.max_degree; degrees below the truncation are exact.
TorResult bar_tor(const DiagramAlgebra& algebra, const RingSpec& ring,
                  const LeftModuleData& N, const BarOptions& options);

/// H_*(TL, 1) for an odd strand count through the Davis resolution: every cup
/// module is verified to be a retract of TL (so the Davis complex is a finite
/// projective resolution of the trivial module) and the coinvariant complex
/// collapses. All degrees are exact. Hypothesis failures throw; even strand
/// counts are rejected.
TorResult davis_tor(const DiagramAlgebra& algebra, const RingSpec& ring);

/// Entries hE1[alpha][beta] = direct sum over innermost |F| = alpha of
/// H_beta(TL, <F>), computed by bar_tor.
struct He1Page {
    int max_alpha = 0;
    int max_beta = 0;
    std::vector<std::vector<ModulePresentation>> entries;  // [alpha][beta]
};

He1Page he1_page(const DiagramAlgebra& algebra, const RingSpec& ring, int max_beta,
                 std::size_t budget = BarOptions{}.budget);

struct CheckResult {
    std::string name;
    std::string status;  // "PASS", "FAIL" or "SKIP"
    std::string detail;
};

struct TheoremReport {
    std::vector<CheckResult> checks;
    bool all_pass() const;
};

/// Per-theorem verification: 'a' (odd-strand vanishing), 'b' (even-strand
/// vanishing line and degree shift), 'c' (invertible parameter), 'd' (Davis
/// contractibility). Parity or unit-hypothesis misuse throws.
TheoremReport verify_theorem(const DiagramAlgebra& algebra, const RingSpec& ring,
                             char which, const BarOptions& options);

/// All theorems applicable to the given strand parity and ring, plus a seeded
/// associativity spot check.
TheoremReport verify_all(const DiagramAlgebra& algebra, const RingSpec& ring,
                         const BarOptions& options, unsigned long seed);

}  // namespace tl
