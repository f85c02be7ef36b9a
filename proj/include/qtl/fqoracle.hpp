#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qtl/comp.hpp"
#include "qtl/laurent.hpp"
#include "qtl/strata.hpp"

namespace qtl {

/// The field with p^2 elements, p in {2, 3, 5}, realized as the quadratic
/// extension of the prime field by a fixed irreducible polynomial
/// (x^2+x+1, x^2+1, x^2+2 respectively).  Elements are indices a + p*b for
/// a + b x; full operation tables are built and checked at construction.
class Fq {
public:
    explicit Fq(int p);

    int p() const { return p_; }
    int size() const { return size_; }

    uint8_t add(uint8_t a, uint8_t b) const { return add_[a * size_ + b]; }
    uint8_t sub(uint8_t a, uint8_t b) const { return add_[a * size_ + neg_[b]]; }
    uint8_t mul(uint8_t a, uint8_t b) const { return mul_[a * size_ + b]; }
    uint8_t neg(uint8_t a) const { return neg_[a]; }
    uint8_t inv(uint8_t a) const;

private:
    int p_, size_;
    std::vector<uint8_t> add_, mul_, neg_, inv_;
};

/// Matrix over Fq, row-major.
struct FqMat {
    int rows = 0, cols = 0;
    std::vector<uint8_t> a;

    FqMat() = default;
    FqMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

    uint8_t& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    uint8_t at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    friend bool operator==(const FqMat& x, const FqMat& y) {
        return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
    }
    friend bool operator<(const FqMat& x, const FqMat& y) { return x.a < y.a; }
};

FqMat mat_mul(const Fq& F, const FqMat& x, const FqMat& y);
bool is_zero_mat(const FqMat& x);

/// Reduced row echelon form; returns the rank.  Zero rows are dropped when
/// `strip` is set, making the result the canonical subspace representative.
int rref(const Fq& F, FqMat& m, bool strip = true);

int rank_of(const Fq& F, FqMat m);

/// Subspace of F^d as its canonical RREF basis matrix (rows = dim).
using SubspaceRep = FqMat;

/// All w-dimensional subspaces of F^d, each exactly once, by pivot-pattern
/// enumeration.  Throws std::length_error when d exceeds the cap.
std::vector<SubspaceRep> enum_subspaces(const Fq& F, int d, int w, int cap = 8);

/// dim(W cap span(e_1..e_c)) for every c, returned as the profile against
/// the coordinate flag with box sizes `shape`.
Comp alpha_profile(const Fq& F, const SubspaceRep& W, const Comp& shape);

/// Membership of a row vector, and of a whole subspace, in span(rows of W).
bool in_span(const Fq& F, const SubspaceRep& W, const std::vector<uint8_t>& v);
bool subspace_leq(const Fq& F, const SubspaceRep& A, const SubspaceRep& B);

/// The canonical (W, t) witness of a label over F: t is the 0/1 arc-witness
/// matrix of (r, n), W spans the arc targets plus, per box, the first
/// w_i - r_i of the remaining kernel coordinates.
struct ConfigPoint {
    FqMat t;
    SubspaceRep W;
};
ConfigPoint standard_config(const Fq& F, const Comp& shape, const StratumLabel& label);

/// Counts of flag-stable square-zero endomorphisms of the standard coordinate
/// flag, bucketed by their (r, n) profile pair.
std::map<std::pair<Comp, Comp>, Int> t_profile_counts(const Fq& F, const Comp& shape, int cap = 5);

/// Number of flags of type `shape` (product of per-step pivot-pattern
/// Grassmannian counts).
Int count_flags(const Fq& F, const Comp& shape);

/// Exact stratum cardinality over the field: (number of flags) x (witness
/// endomorphisms with profile (r, n)) x (subspaces between image and kernel
/// with profile w).  Throws std::length_error past the cap.  The overload
/// taking precomputed t-buckets avoids re-enumerating per label.
Int count_stratum(const Fq& F, const Comp& shape, const StratumLabel& label, int cap = 5);
Int count_stratum(const Fq& F, const Comp& shape, const StratumLabel& label,
                  const std::map<std::pair<Comp, Comp>, Int>& buckets, int cap = 5);

/// Literal enumeration of every (flag, W, t) triple; cross-check for small
/// shapes only.
Int count_stratum_full(const Fq& F, const Comp& shape, const StratumLabel& label, int cap = 3);

/// All flags of type `shape` as nested chains (each flag is the list of
/// RREF representatives of D_1 .. D_{k-1}).
std::vector<std::vector<SubspaceRep>> enum_flags(const Fq& F, const Comp& shape, int cap = 5);

/// Counts of t-stable flags around the fixed (W, t) of the label, bucketed
/// by the (alpha(im t), alpha(W), alpha(ker t)) triple; the brute-force side
/// of flag_count.
std::map<StratumLabel, Int> flag_profile_counts(const Fq& F, const Comp& shape,
                                                const ConfigPoint& cfg, int cap = 5);

/// One verification case: a named identity with both sides evaluated.
struct OracleCase {
    std::string suite;
    std::string name;
    Comp shape;
    int field = 0;
    std::string expected;
    std::string actual;
    bool pass = false;
};

/// Machine-checkable identity suites, each comparing a symbolic value at
/// q = p against a brute count over GF(p^2).
std::vector<OracleCase> suite_chi_projective(const Fq& F, int nmax);
std::vector<OracleCase> suite_lemma_flags(const Fq& F, const Comp& shape);
std::vector<OracleCase> suite_qrep_fibers(const Fq& F, int d);
std::vector<OracleCase> suite_stratum_counts(const Fq& F, const Comp& shape, int cap = 5);
std::vector<OracleCase> suite_realizability(const Fq& F, const Comp& shape, int cap = 5);
std::vector<OracleCase> suite_flag_counts(const Fq& F, const Comp& shape, int cap = 5);
std::vector<OracleCase> suite_match_constants(const Fq& F, const Comp& shape, int cap = 5);
std::vector<OracleCase> suite_density_degrees(const Fq& F, const Comp& shape, int cap = 5);

}  // namespace qtl
