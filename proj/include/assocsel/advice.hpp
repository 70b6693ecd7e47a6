#pragma once

#include <string>
#include <vector>

#include "assocsel/functions.hpp"
#include "assocsel/universe.hpp"

namespace assocsel {

enum class AdviceKind { P, NP, CoNP, Strong };

std::string to_string(AdviceKind k);
AdviceKind parse_advice_kind(const std::string& s);  // p|np|conp|strong

struct AdvicePackage {
    unsigned n = 0;
    AdviceKind kind = AdviceKind::P;
    Word advice;  // always n + 1 bits
    std::string selector;
};

// P: 1·s_n with s_n the source of the s-tournament on B^{=n}, else 0^{n+1}.
// Strong: names the source over B^{≤n} as the (n+1)-bit binary numeral of
// rank(s) + 1; 0^{n+1} when B^{≤n} = ∅.
AdvicePackage extract_source_advice(const MultiMap& f, const TargetSet& b, unsigned n,
                                    bool strong);

// NP: 1·u_n, u_n the least member of the source clique on B^{=n}.
// coNP: 0^{n+1} if B^{=n} = ∅, 01^n if B^{=n} = Σ^n (at n = 0 this case is
// written "1"), else 1·v_n with v_n the greatest member of the target clique
// on Σ^n − B^{=n}.
AdvicePackage extract_clique_advice(const MultiMap& f, const TargetSet& b, unsigned n,
                                    AdviceKind side);

AdvicePackage extract_advice(const MultiMap& f, const TargetSet& b, unsigned n, AdviceKind kind);

// Membership claim for x from the advice alone plus evaluations of f.
bool decode(const AdvicePackage& pkg, const Word& x, const MultiMap& f);

// Members ⟨x, advice⟩ of the decoder language at this length, as pair codes,
// at most cap of them.
std::vector<PairCode> decoder_members(const AdvicePackage& pkg, const MultiMap& f,
                                      std::size_t cap);

struct RoundtripResult {
    PropertyReport report;
    std::vector<AdvicePackage> packages;
    std::vector<bool> length_ok;
};

RoundtripResult verify_roundtrip(const MultiMap& f, const TargetSet& b, unsigned n,
                                 AdviceKind kind);

} // namespace assocsel
