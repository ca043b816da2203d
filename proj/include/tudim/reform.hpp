#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "tudim/decomp.hpp"
#include "tudim/matrix.hpp"
#include "tudim/polytope.hpp"

namespace tudim {

// A polyhedron together with the rows whose products are constrained to be
// integral: conv(P ∩ Z^n) =? conv({x in P : Wx in Z^k}).
struct MixedIntegerModel {
  HPolyhedron p;
  IntMatrix w;
};

struct SliceBox {
  bool feasible = false;                   // false when P is empty
  std::vector<std::pair<Int, Int>> range;  // per-row [ceil(min), floor(max)]
};

// Integer range of W x over P, one closed interval per row, via two LPs each.
SliceBox slice_range(const HPolyhedron& p, const IntMatrix& w);

enum class WpropStatus { holds, fails, indeterminate };

struct WpropWitness {
  IntVector d;       // slice index
  RatVector vertex;  // fractional vertex of the slice, outside the integer hull
};

struct ReformVerdict {
  WpropStatus status = WpropStatus::indeterminate;
  std::optional<WpropWitness> witness;  // lexicographically first escaping vertex
  long long slices_checked = 0;
  std::string note;
};

// Decides the reformulation property by checking that every vertex of every
// slice P ∩ {Wx = d} lies in conv(P ∩ Z^n). Budget exhaustion degrades to an
// indeterminate verdict with a progress note.
ReformVerdict verify_wprop(const HPolyhedron& p, const IntMatrix& w, long long budget = kDefaultBudget);

enum class Side { P, Q };

struct SeparationResult {
  RatVector h;
  Rat alpha1, alpha2;            // alpha1 < alpha2
  std::vector<int> tight_p;      // indices into vp with h^T x = alpha1
  std::vector<int> tight_q;      // indices into vq with h^T y = alpha2
  Side majority = Side::P;       // side with >= ceil((n+1)/2) tight vertices
};

// Separating hyperplane between two disjoint vertex sets whose union spans
// R^n affinely, tight at >= ceil((n+1)/2) vertices on one side. When one set
// is empty, a facet of the other side's hull is returned with a unit slack.
SeparationResult separate_heavy_face(const VertexSet& vp, const VertexSet& vq);

struct KnapsackReform {
  IntMatrix w;                            // TU, n-2 rows (0 rows when degenerate)
  bool degenerate = false;                // S or S^c empty; k = 0 suffices
  std::optional<SeparationResult> separation;
  std::array<IntVector, 3> face_points{}; // chosen tight 0-1 vertices
  ReformVerdict verdict;                  // holds, asserted before returning
};

// Theorem-7 pipeline for P = {x in [0,1]^n : a^T x <= b}, n >= 4.
KnapsackReform knapsack_reform_nminus2(const IntVector& a, const Int& b, long long budget = kDefaultBudget);

struct ParityModel {
  MixedIntegerModel model;  // n+1 variables (x, z)
  AffineTuDecomposition cert;
};
ParityModel gen_parity(int n);

struct MasterFamily {
  IntVector a;  // (1, 2, ..., n)
  TuDecomposition tu_cert;        // 2*ceil(sqrt(n)) - 1 rows
  AffineTuDecomposition affine_cert;  // one row fewer
};
MasterFamily gen_master(int n);

IntVector gen_powers(int n);  // (2, 4, ..., 2^n)

// Knapsack in 2m variables with weights (2,...,2^m,2,...,2^m) and capacity
// 2^{m+1}-1; no single-row reformulation below m integrality rows exists.
HPolyhedron gen_lower_bound_instance(int m);

struct BigSmallInstance {
  RatVector small;  // ascending, s >= k of them, in (b/(k+1), b/k]
  RatVector big;    // in ((k-1)b/(k+1), b]
  int k = 0;        // >= 3
  Rat b;
};

struct BigSmallResult {
  HPolyhedron facet_poly;   // claimed facet description of the integer hull
  MixedIntegerModel model;  // suffix rows for all i plus one B-sum integrality
};
BigSmallResult gen_big_small(const BigSmallInstance& inst);

struct Block {
  IntMatrix a;      // m_i x n_i
  IntMatrix a_bar;  // k_i x n_i; [a; a_bar] must be TU
};

struct BlockComposeResult {
  IntMatrix a;  // block-diagonal plus coupling rows [U^1 Abar^1 ... U^r Abar^r]
  AffineTuDecomposition cert;
};
BlockComposeResult block_compose(const std::vector<Block>& blocks, const std::vector<IntMatrix>& u_blocks);

// 1-row decomposition of an almost totally unimodular matrix.
AffineTuDecomposition almost_tu_decomp(const IntMatrix& a);

// Equal-sum-subsets reduction: instances, certificates, and extraction.
IntVector ess_encode(const IntVector& b);
AffineTuDecomposition ess_solution_to_decomp(const IntVector& b, const IntVector& r);
IntVector ess_decomp_to_solution(const IntVector& b, const AffineTuDecomposition& d);

}  // namespace tudim
