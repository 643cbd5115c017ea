#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "revcmp/netlist.hpp"
#include "revcmp/verify.hpp"

namespace revcmp {

// Group-based n-bit magnitude comparator. The operands enter MSB-first: an
// input cell compares the top bit pair, n-1 chain cells fold in the remaining
// pairs while carrying (GT-so-far, EQ-so-far), and a final cell derives LT.
//
//   EQ' = EQ & XNOR(a_j, b_j)
//   GT' = EQ & a_j & ~b_j ^ GT
//   LT  = ~(GT ^ EQ)          (GT and EQ are never both set)

enum class CellKind { In, Chain, Final };

struct CellTargets {
    std::size_t gates;
    std::size_t constants;
    std::size_t garbage;
};

/// Published gate/constant/garbage budget of one cell.
CellTargets cell_targets(CellKind kind);

/// Lines (a, b, c=0, d=1). INVENTIVE then NOT on P and S.
/// Outputs LT=Q, EQ=~P, GT=~S; R is garbage.
Circuit build_in_cell();

/// Lines (a, b, k0=0, Q_in, P_in, k1=0).
/// TR(a, b, k0); TG(Q_in, k0, P_in); NOT(b); TG(Q_in, b, k1).
/// Outputs P_out on the P_in line, Q_out on k1; four garbage lines.
Circuit build_chain_cell();

/// Lines (P, Q, k=0). FG(Q, k); FG(P, k); NOT(k). Outputs LT=k, EQ=Q, GT=P.
Circuit build_final_cell();

struct ChainBoundary {
    /// Number of gates executed when the boundary is reached.
    std::size_t gate_end;
    std::size_t gt_line;
    std::size_t eq_line;
};

struct ComparatorLayout {
    Circuit circuit;
    /// (GT, EQ) carried after the input cell and after every chain cell.
    std::vector<ChainBoundary> boundaries;
};

/// Lines 0..n-1 hold a0..a(n-1), lines n..2n-1 hold b0..b(n-1); constants
/// follow. Outputs LT, EQ, GT; for n >= 2 the input cell's LT survives as
/// the auxiliary output "msb_lt". Throws Range for n == 0 or n > 64.
ComparatorLayout assemble_comparator(unsigned n);
Circuit build_comparator(unsigned n);

/// Reference for any circuit exposing inputs a0.., b0.. and outputs LT, EQ,
/// GT; throws Contract otherwise.
Reference compare_reference(const Circuit& circuit);

/// Width of the comparator interface a circuit exposes, 0 if none.
unsigned comparator_width(const Circuit& circuit);

/// 4n+2 vectors: equal extremes, and for every bit position a pair differing
/// only there, around both 0 and 2^n-1, in both operand orders.
std::vector<BitVector> comparator_edge_vectors(unsigned n);

/// Output invariant: exactly one of LT, EQ, GT is set.
std::function<bool(const BitVector&)> one_hot_invariant();

/// Random strategies always run the edge vectors first; every run checks
/// the one-hot invariant.
VerificationReport verify_comparator(const Circuit& circuit, const Strategy& strategy);
VerificationReport verify_comparator(unsigned n, const Strategy& strategy);

/// Exhaustive when 2n <= 24 inputs, otherwise 10^5 random trials with seed 1.
Strategy default_comparator_strategy(unsigned n);

/// Target-versus-measured metrics plus the structural deviations.
std::string comparator_conformance(const Circuit& circuit, unsigned n);

}  // namespace revcmp
